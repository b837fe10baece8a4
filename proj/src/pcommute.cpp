#include "gradedlie/pcommute.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace gradedlie {

// ---------------------------------------------------------------------------
// Validation and relabeling

Alphabet ValidatedTheta::alphabet() const {
    Alphabet a;
    for (int i = 1; i <= n; ++i) {
        a.names.push_back("y" + std::to_string(to_original.at(static_cast<size_t>(i))));
        a.weights.push_back(1);
    }
    return a;
}

ValidatedTheta validate(const PartialCommutation& theta) {
    if (theta.n < 1)
        throw std::invalid_argument("validate: need at least one vertex");
    std::set<std::pair<int, int>> sym;
    for (const auto& [a, b] : theta.pairs) {
        if (a < 1 || a > theta.n || b < 1 || b > theta.n)
            throw std::invalid_argument("validate: vertex out of range");
        if (a == b)
            throw std::invalid_argument("validate: self-loops are not allowed");
        sym.insert({a, b});
        sym.insert({b, a});
    }

    ValidatedTheta vt;
    vt.n = theta.n;
    vt.is_empty = sym.empty();
    vt.to_original.assign(static_cast<size_t>(theta.n) + 1, 0);

    // new label <- original label. With no selected pairs the labeling is the
    // identity; otherwise the lexicographically smallest selected pair (a, b),
    // written with a > b, is sent to (2, 1) and the remaining vertices keep
    // their ascending order.
    std::vector<int> order;
    if (vt.is_empty) {
        for (int i = 1; i <= theta.n; ++i) order.push_back(i);
    } else {
        std::pair<int, int> first{0, 0};
        for (const auto& [a, b] : sym) {
            if (a <= b) continue;
            if (first.first == 0 || std::make_pair(a, b) < first) first = {a, b};
        }
        order.push_back(first.second);
        order.push_back(first.first);
        for (int i = 1; i <= theta.n; ++i)
            if (i != first.first && i != first.second) order.push_back(i);
    }
    std::vector<int> to_new(static_cast<size_t>(theta.n) + 1, 0);
    for (int i = 1; i <= theta.n; ++i) {
        vt.to_original[static_cast<size_t>(i)] = order[static_cast<size_t>(i - 1)];
        to_new[static_cast<size_t>(order[static_cast<size_t>(i - 1)])] = i;
    }
    for (const auto& [a, b] : sym) {
        const int x = to_new[static_cast<size_t>(a)];
        const int y = to_new[static_cast<size_t>(b)];
        vt.closure.insert({x, y});
        if (x > y) vt.delta.insert({x, y});
    }
    return vt;
}

// ---------------------------------------------------------------------------
// Graded ideals

GradedIdeal ideal_generate(HallBasis& basis, const std::vector<LieElement>& gens,
                           int max_degree) {
    if (max_degree < 0 || max_degree > basis.max_degree())
        throw std::invalid_argument("ideal_generate: max_degree out of range");

    GradedIdeal out;
    out.max_degree = max_degree;
    out.per_degree.resize(static_cast<size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        out.per_degree[static_cast<size_t>(d)] = zero_lattice(basis.rank(d));

    std::vector<std::vector<const LieElement*>> by_degree(static_cast<size_t>(max_degree) + 1);
    for (const LieElement& g : gens) {
        if (g.is_zero()) continue;
        const int d = homogeneous_degree(g); // throws on mixed degrees
        if (d <= max_degree) by_degree[static_cast<size_t>(d)].push_back(&g);
    }

    for (int d = 1; d <= max_degree; ++d) {
        HnfBuilder hb(basis.rank(d));
        for (const LieElement* g : by_degree[static_cast<size_t>(d)])
            hb.insert(basis.sparse(*g, d));
        for (int g = 0; g < basis.alphabet().size(); ++g) {
            const int lower = d - basis.alphabet().weight(g);
            if (lower < 1) continue;
            const Lattice& prev = out.per_degree[static_cast<size_t>(lower)];
            if (prev.rank() == 0) continue;
            const LieElement yg = basis.gen(g);
            for (const SparseRow& row : prev.basis.entries) {
                LieElement b = basis.bracket(basis.from_sparse(row, lower), yg);
                if (!b.is_zero()) hb.insert(basis.sparse(b, d));
            }
        }
        out.per_degree[static_cast<size_t>(d)] = hb.to_lattice();
    }
    return out;
}

bool bracket_closed(const GradedIdeal& ideal, HallBasis& basis) {
    for (int d = 1; d <= ideal.max_degree; ++d) {
        for (int g = 0; g < basis.alphabet().size(); ++g) {
            const int up = d + basis.alphabet().weight(g);
            if (up > ideal.max_degree) continue;
            const LieElement yg = basis.gen(g);
            for (const SparseRow& row : ideal.at(d).basis.entries) {
                LieElement b = basis.bracket(basis.from_sparse(row, d), yg);
                if (b.is_zero()) continue;
                if (!member(basis.dense(b, up), ideal.at(up))) return false;
            }
        }
    }
    return true;
}

bool ideal_contains(const GradedIdeal& ideal, HallBasis& basis,
                    const LieElement& e) {
    if (e.is_zero()) return true;
    const int d = homogeneous_degree(e);
    if (d > ideal.max_degree)
        throw std::invalid_argument("ideal_contains: degree exceeds the computed range");
    return member(basis.dense(e, d), ideal.at(d));
}

std::vector<LieElement> raag_relators(HallBasis& basis, const ValidatedTheta& theta) {
    std::vector<LieElement> out;
    for (const auto& [a, b] : theta.delta)
        out.push_back(basis.bracket(basis.gen(a - 1), basis.gen(b - 1)));
    return out;
}

std::vector<Int> raag_ranks(const ValidatedTheta& theta, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("raag_ranks: max_degree must be >= 1");
    // Degree 2 minimum so the defining relators are representable.
    HallBasis basis = HallBasis::build(theta.alphabet(), std::max(max_degree, 2));
    GradedIdeal ideal = ideal_generate(basis, raag_relators(basis, theta), max_degree);
    const std::vector<Int> witt = free_lie_ranks(basis.alphabet().weights, max_degree);
    std::vector<Int> out(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 1; d <= max_degree; ++d) {
        if (!is_saturated(ideal.at(d)))
            throw std::logic_error("raag_ranks: quotient has torsion in degree " +
                                   std::to_string(d));
        out[static_cast<size_t>(d)] = witt[static_cast<size_t>(d)] - ideal.rank(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named elements and derived blocks

NamedElement named_generator(HallBasis& basis, int gen_id) {
    NamedElement e;
    e.tree = ex_gen(gen_id);
    e.value = basis.gen(gen_id);
    e.degree = basis.alphabet().weight(gen_id);
    return e;
}

NamedElement named_from_expr(HallBasis& basis, const ExprPtr& tree) {
    NamedElement e;
    e.tree = tree;
    e.value = basis.eval(*tree);
    e.degree = expr_degree(*tree, basis.alphabet());
    return e;
}

DerivedBlock::DerivedBlock(HallBasis* ambient, std::vector<NamedElement> gens,
                           int max_degree)
    : ambient_(ambient), max_degree_(max_degree), gens_(std::move(gens)) {
    if (!ambient_) throw std::invalid_argument("DerivedBlock: null ambient basis");
    if (max_degree_ < 1)
        throw std::invalid_argument("DerivedBlock: max_degree must be >= 1");
    values_.resize(static_cast<size_t>(max_degree_) + 1);
    trees_.resize(static_cast<size_t>(max_degree_) + 1);
    if (gens_.empty()) return;

    Alphabet abs;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1 || gens_[i].degree > max_degree_)
            throw std::invalid_argument("DerivedBlock: generator degree out of range");
        abs.names.push_back("g" + std::to_string(i));
        abs.weights.push_back(gens_[i].degree);
    }
    HallBasis abstract = HallBasis::build(abs, max_degree_);
    for (int d = 1; d <= max_degree_; ++d) {
        auto& vals = values_[static_cast<size_t>(d)];
        auto& trs = trees_[static_cast<size_t>(d)];
        for (const BasicMon& m : abstract.layer(d)) {
            if (m.is_leaf()) {
                vals.push_back(gens_[static_cast<size_t>(m.gen)].value);
                trs.push_back(gens_[static_cast<size_t>(m.gen)].tree);
            } else {
                const auto& lv = values_[static_cast<size_t>(m.left.deg)]
                                        [static_cast<size_t>(m.left.idx)];
                const auto& rv = values_[static_cast<size_t>(m.right.deg)]
                                        [static_cast<size_t>(m.right.idx)];
                vals.push_back(ambient_->bracket(lv, rv));
                trs.push_back(ex_bracket(trees_[static_cast<size_t>(m.left.deg)]
                                               [static_cast<size_t>(m.left.idx)],
                                         trees_[static_cast<size_t>(m.right.deg)]
                                               [static_cast<size_t>(m.right.idx)]));
            }
        }
    }
}

int DerivedBlock::count(int degree) const {
    if (degree < 1 || degree > max_degree_ || gens_.empty()) return 0;
    return static_cast<int>(values_[static_cast<size_t>(degree)].size());
}

const LieElement& DerivedBlock::basis_value(int degree, int i) const {
    return values_.at(static_cast<size_t>(degree)).at(static_cast<size_t>(i));
}

const ExprPtr& DerivedBlock::basis_tree(int degree, int i) const {
    return trees_.at(static_cast<size_t>(degree)).at(static_cast<size_t>(i));
}

Lattice DerivedBlock::lattice(int degree) const {
    if (!ambient_) throw std::logic_error("DerivedBlock: no ambient basis");
    IntMatrix m(0, ambient_->rank(degree));
    for (int i = 0; i < count(degree); ++i)
        m.append_row(ambient_->sparse(basis_value(degree, i), degree));
    return hnf(m);
}

// ---------------------------------------------------------------------------
// Block state

GradedIdeal BlockState::ideal_lattice() const {
    if (!ambient) throw std::logic_error("BlockState: no ambient basis");
    GradedIdeal out;
    out.max_degree = max_degree;
    out.per_degree.resize(static_cast<size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        IntMatrix m(0, ambient->rank(d));
        for (const DerivedBlock& blk : ideal_blocks)
            for (int i = 0; i < blk.count(d); ++i)
                m.append_row(ambient->sparse(blk.basis_value(d, i), d));
        out.per_degree[static_cast<size_t>(d)] = hnf(m);
    }
    return out;
}

bool BlockState::decomposition_is_basis() const {
    if (!ambient) throw std::logic_error("BlockState: no ambient basis");
    for (int d = 1; d <= max_degree; ++d) {
        const int amb = ambient->rank(d);
        IntMatrix m(0, amb);
        int total = 0;
        for (const NamedElement& g : generators)
            if (g.degree == d) {
                m.append_row(ambient->sparse(g.value, d));
                ++total;
            }
        auto add_block = [&](const DerivedBlock& blk) {
            for (int i = 0; i < blk.count(d); ++i) {
                m.append_row(ambient->sparse(blk.basis_value(d, i), d));
                ++total;
            }
        };
        for (const DerivedBlock& blk : b_blocks) add_block(blk);
        for (const DerivedBlock& blk : ideal_blocks) add_block(blk);
        if (total != amb) return false;
        if (!(hnf(m) == full_lattice(amb))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Elimination step

namespace {

struct Letter {
    const LieElement* value = nullptr;
    ExprPtr tree;
    int degree = 0;
    bool is_generator = false;
    bool is_ideal = false;
    int gen_pos = -1;
};

} // namespace

StepOutcome elim_step(const BlockState& state, const NamedElement& new_gen,
                      const std::set<int>& commuting_positions) {
    if (!state.ambient)
        throw std::invalid_argument("elim_step: state has no ambient basis");
    HallBasis& basis = *state.ambient;
    const int D = state.max_degree;
    const int budget = D - new_gen.degree;
    if (budget < 0)
        throw std::invalid_argument("elim_step: new generator degree exceeds max degree");

    // The totally ordered basis letters of the current algebra: generator
    // letters first, then each free block, then each ideal block, blocks in
    // creation order and block-internally by (degree, index). Letters heavier
    // than the word budget can never occur and are skipped.
    std::vector<Letter> letters;
    for (size_t i = 0; i < state.generators.size(); ++i) {
        const NamedElement& g = state.generators[i];
        if (g.degree > budget) continue;
        letters.push_back(Letter{&g.value, g.tree, g.degree, true, false,
                                 static_cast<int>(i)});
    }
    auto add_block_letters = [&](const DerivedBlock& blk, bool is_ideal) {
        for (int d = 1; d <= budget; ++d)
            for (int i = 0; i < blk.count(d); ++i)
                letters.push_back(Letter{&blk.basis_value(d, i), blk.basis_tree(d, i),
                                         d, false, is_ideal, -1});
    };
    for (const DerivedBlock& blk : state.b_blocks) add_block_letters(blk, false);
    for (const DerivedBlock& blk : state.ideal_blocks) add_block_letters(blk, true);

    StepOutcome out;
    out.counts.p1.assign(static_cast<size_t>(budget) + 1, 0);
    out.counts.p2.assign(static_cast<size_t>(budget) + 1, 0);
    out.counts.pss.assign(static_cast<size_t>(budget) + 1, 0);

    std::vector<NamedElement> p_prime;      // commuting front or ideal letter
    std::vector<NamedElement> pss_nonempty; // P'' minus the empty word

    // Weakly increasing words over the letters, total degree <= budget.
    std::vector<int> word;
    std::function<void(size_t, int)> rec = [&](size_t min_letter, int used) {
        bool has_comm = false, has_ideal = false;
        for (int li : word) {
            const Letter& l = letters[static_cast<size_t>(li)];
            if (l.is_generator && commuting_positions.count(l.gen_pos) > 0)
                has_comm = true;
            if (l.is_ideal) has_ideal = true;
        }
        // Generator letters commuting with the new generator move (stably) to
        // the front; everything else keeps its order.
        std::vector<int> rearranged;
        for (int li : word)
            if (letters[static_cast<size_t>(li)].is_generator &&
                commuting_positions.count(letters[static_cast<size_t>(li)].gen_pos) > 0)
                rearranged.push_back(li);
        for (int li : word)
            if (!(letters[static_cast<size_t>(li)].is_generator &&
                  commuting_positions.count(letters[static_cast<size_t>(li)].gen_pos) > 0))
                rearranged.push_back(li);
        NamedElement e = new_gen;
        for (int li : rearranged) {
            const Letter& l = letters[static_cast<size_t>(li)];
            e.tree = ex_bracket(e.tree, l.tree);
            e.value = basis.bracket(e.value, *l.value);
            e.degree += l.degree;
        }
        if (has_comm) {
            out.counts.p1[static_cast<size_t>(used)]++;
            p_prime.push_back(e);
        } else if (has_ideal) {
            out.counts.p2[static_cast<size_t>(used)]++;
            p_prime.push_back(e);
        } else {
            out.counts.pss[static_cast<size_t>(used)]++;
            out.pss_elements.push_back(e);
            if (!word.empty()) pss_nonempty.push_back(e);
        }
        for (size_t li = min_letter; li < letters.size(); ++li) {
            const int w = letters[li].degree;
            if (used + w > budget) continue;
            word.push_back(static_cast<int>(li));
            rec(li, used + w);
            word.pop_back();
        }
    };
    rec(0, 0);

    // New free block: the nonempty P'' elements wreathed over the new
    // generator, [e_p, k x new_gen] for all k >= 0 within the degree bound.
    for (const NamedElement& p : pss_nonempty) {
        NamedElement cur = p;
        while (true) {
            out.b_gens.push_back(cur);
            if (cur.degree + new_gen.degree > D) break;
            cur = NamedElement{ex_bracket(cur.tree, new_gen.tree),
                               basis.bracket(cur.value, new_gen.value),
                               cur.degree + new_gen.degree};
        }
    }

    // New ideal block: P' wreathed over all of P'' — [e_p, e_q1, ..., e_qm]
    // over all finite sequences (q_i) of P'' elements within the degree bound.
    std::function<void(const NamedElement&)> extend = [&](const NamedElement& cur) {
        out.d_gens.push_back(cur);
        for (const NamedElement& q : out.pss_elements) {
            if (cur.degree + q.degree > D) continue;
            extend(NamedElement{ex_bracket(cur.tree, q.tree),
                                basis.bracket(cur.value, q.value),
                                cur.degree + q.degree});
        }
    };
    for (const NamedElement& p : p_prime) extend(p);

    return out;
}

std::vector<int> rearrange(const std::vector<int>& sorted_word,
                           const ValidatedTheta& theta, int next) {
    if (next < 1 || next > theta.n)
        throw std::invalid_argument("rearrange: vertex out of range");
    if (!std::is_sorted(sorted_word.begin(), sorted_word.end()))
        throw std::invalid_argument("rearrange: word must be weakly increasing");
    for (int v : sorted_word)
        if (v < 1 || v >= next)
            throw std::invalid_argument("rearrange: letters must precede the new vertex");
    std::vector<int> out;
    for (int v : sorted_word)
        if (theta.commutes(next, v)) out.push_back(v);
    for (int v : sorted_word)
        if (!theta.commutes(next, v)) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Full elimination run

YInduction y_induction(HallBasis& basis, const ValidatedTheta& vt,
                       int max_degree) {
    if (vt.is_empty)
        throw std::invalid_argument(
            "y_induction: at least one commuting pair is required");
    if (max_degree < 2)
        throw std::invalid_argument("y_induction: max_degree must be >= 2");
    if (static_cast<int>(basis.alphabet().size()) < vt.n)
        throw std::invalid_argument("y_induction: basis has too few generators");

    YInduction run;
    run.state.ambient = &basis;
    run.state.max_degree = max_degree;
    run.state.generators.push_back(named_generator(basis, 0));

    for (int next = 2; next <= vt.n; ++next) {
        std::set<int> commuting;
        for (int j = 1; j < next; ++j)
            if (vt.delta.count({next, j}) > 0) commuting.insert(j - 1);
        NamedElement g = named_generator(basis, next - 1);
        StepOutcome outcome = elim_step(run.state, g, commuting);

        run.state.generators.push_back(g);
        run.state.b_blocks.emplace_back(&basis, outcome.b_gens, max_degree);
        run.state.ideal_blocks.emplace_back(&basis, outcome.d_gens, max_degree);
        run.outcomes.push_back(std::move(outcome));
    }
    return run;
}

EliminationReport eliminate(const PartialCommutation& theta, int max_degree) {
    ValidatedTheta vt = validate(theta);
    if (vt.is_empty)
        throw std::invalid_argument("eliminate: at least one commuting pair is required");
    if (max_degree < 2)
        throw std::invalid_argument("eliminate: max_degree must be >= 2");
    const int n = vt.n;

    HallBasis basis = HallBasis::build(vt.alphabet(), max_degree);

    EliminationReport rep;
    rep.n = n;
    rep.max_degree = max_degree;
    rep.vertex_order.assign(vt.to_original.begin() + 1, vt.to_original.end());

    YInduction run = y_induction(basis, vt, max_degree);
    BlockState& state = run.state;

    for (int next = 2; next <= n; ++next) {
        const StepOutcome& outcome = run.outcomes[static_cast<size_t>(next - 2)];
        ElimStepReport sr;
        sr.adjoined_original_label = vt.to_original[static_cast<size_t>(next)];
        sr.adjoined_name = basis.alphabet().name(next - 1);
        auto rendered = [&](const std::vector<NamedElement>& v) {
            std::vector<const NamedElement*> ptrs;
            for (const NamedElement& e : v) ptrs.push_back(&e);
            std::stable_sort(ptrs.begin(), ptrs.end(),
                             [](const NamedElement* a, const NamedElement* b) {
                                 return a->degree < b->degree;
                             });
            std::vector<std::string> lines;
            for (const NamedElement* e : ptrs)
                lines.push_back(render_expr(*e->tree, basis.alphabet()));
            return lines;
        };
        sr.b_generators = rendered(outcome.b_gens);
        sr.d_generators = rendered(outcome.d_gens);
        sr.counts = outcome.counts;
        rep.steps.push_back(std::move(sr));
    }

    rep.witt = free_lie_ranks(basis.alphabet().weights, max_degree);
    rep.generator_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    for (const NamedElement& g : state.generators)
        if (g.degree <= max_degree) rep.generator_rank[static_cast<size_t>(g.degree)]++;
    for (const DerivedBlock& blk : state.b_blocks) {
        std::vector<int> counts(static_cast<size_t>(max_degree) + 1, 0);
        for (int d = 1; d <= max_degree; ++d) counts[static_cast<size_t>(d)] = blk.count(d);
        rep.b_block_ranks.push_back(std::move(counts));
    }
    rep.ideal = state.ideal_lattice();
    rep.ideal_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.quotient_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 1; d <= max_degree; ++d) {
        rep.ideal_rank[static_cast<size_t>(d)] = rep.ideal.rank(d);
        rep.quotient_rank[static_cast<size_t>(d)] =
            rep.witt[static_cast<size_t>(d)] - rep.ideal_rank[static_cast<size_t>(d)];
    }

    rep.decomposition_is_basis = state.decomposition_is_basis();
    GradedIdeal generated = ideal_generate(basis, raag_relators(basis, vt), max_degree);
    rep.ideal_matches_generated = true;
    for (int d = 1; d <= max_degree; ++d)
        if (!(rep.ideal.at(d) == generated.at(d))) rep.ideal_matches_generated = false;
    return rep;
}

} // namespace gradedlie
