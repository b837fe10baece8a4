#include "gradedlie/fp_ideal.hpp"

#include <stdexcept>
#include <utility>

namespace gradedlie {

// ---------------------------------------------------------------------------
// Presentation and relators

Alphabet FPPresentation::alphabet() const {
    Alphabet a = theta.alphabet();
    a.names.push_back("s");
    a.weights.push_back(1);
    return a;
}

FPPresentation make_fp(const PartialCommutation& theta) {
    if (theta.n < 2)
        throw std::invalid_argument("make_fp: need at least two raag generators");
    FPPresentation p;
    p.theta = validate(theta);
    p.n = theta.n;
    return p;
}

std::vector<NamedElement> RelatorSets::all() const {
    std::vector<NamedElement> out = r2;
    out.insert(out.end(), r3.begin(), r3.end());
    out.insert(out.end(), r4.begin(), r4.end());
    return out;
}

RelatorSets fp_relators(const FPPresentation& p, HallBasis& basis) {
    const int s = p.s_id();
    RelatorSets rs;
    for (const auto& [a, b] : p.theta.delta) {
        rs.r2.push_back(named_from_expr(
            basis, ex_bracket(ex_gen(a - 1), ex_gen(b - 1))));
    }
    for (int k = 1; k <= p.n; ++k)
        for (int l = 1; l <= p.n; ++l) {
            rs.r3.push_back(named_from_expr(
                basis,
                ex_left_normed({ex_gen(s), ex_gen(k - 1), ex_gen(l - 1)})));
        }
    for (const auto& [a, b] : p.theta.delta) {
        rs.r4.push_back(named_from_expr(
            basis, ex_bracket(ex_bracket(ex_gen(s), ex_gen(a - 1)),
                              ex_bracket(ex_gen(s), ex_gen(b - 1)))));
    }
    return rs;
}

RelatorSets fp_relators_corrupted(const FPPresentation& p, HallBasis& basis) {
    RelatorSets rs = fp_relators(p, basis);
    if (rs.r3.empty()) throw std::logic_error("fp_relators_corrupted: no cubic relators");
    rs.r3[0] = named_from_expr(basis, ex_bracket(rs.r3[0].tree, ex_gen(0)));
    return rs;
}

// ---------------------------------------------------------------------------
// Weighted transport

Alphabet OmegaAlgebra::alphabet() const {
    Alphabet a;
    for (int i = 1; i <= n; ++i) {
        a.names.push_back("w" + std::to_string(i));
        a.weights.push_back(2);
    }
    a.names.push_back("s");
    a.weights.push_back(1);
    return a;
}

LieElement psi_map(HallBasis& src, const LieElement& u, HallBasis& omega) {
    LieElement out;
    for (const auto& [m, c] : u.terms)
        add_scaled(out, c, omega.eval(*src.to_expr(m)));
    return out;
}

ExprPtr psi_expr(const ExprPtr& tree, int s_id) {
    if (!tree) throw std::invalid_argument("psi_expr: null tree");
    if (tree->gen >= 0) {
        if (tree->gen == s_id) return ex_gen(s_id);
        return ex_bracket(ex_gen(s_id), ex_gen(tree->gen));
    }
    return ex_bracket(psi_expr(tree->left, s_id), psi_expr(tree->right, s_id));
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

// Transport a lattice layer computed in `small` coordinates into `big`
// coordinates through the bracket trees of the Hall monomials.
Lattice map_layer(HallBasis& small, const Lattice& layer, int d, HallBasis& big) {
    IntMatrix image(0, big.rank(d));
    for (const SparseRow& row : layer.basis.entries) {
        LieElement e = small.from_sparse(row, d);
        LieElement img;
        for (const auto& [m, c] : e.terms)
            add_scaled(img, c, big.eval(*small.to_expr(m)));
        image.append_row(big.sparse(img, d));
    }
    return hnf(image);
}

// The raag relator ideal computed inside the free Lie ring on the y's and
// transported into FP coordinates, degree by degree.
std::vector<Lattice> y_ideal_in_fp(const FPPresentation& p, HallBasis& basis,
                                   int max_degree) {
    // The small basis must hold the degree-2 relators even when only the
    // degree-1 layer is requested.
    HallBasis small = HallBasis::build(p.theta.alphabet(), std::max(max_degree, 2));
    GradedIdeal ideal =
        ideal_generate(small, raag_relators(small, p.theta), max_degree);
    std::vector<Lattice> out;
    out.push_back(zero_lattice(basis.rank(0) > 0 ? basis.rank(0) : 1));
    for (int d = 1; d <= max_degree; ++d)
        out.push_back(map_layer(small, ideal.at(d), d, basis));
    return out;
}

std::vector<NamedElement> psi_named(const std::vector<NamedElement>& gens,
                                    HallBasis& basis, int s_id, int max_degree) {
    std::vector<NamedElement> out;
    for (const NamedElement& g : gens) {
        if (2 * g.degree > max_degree) continue;
        out.push_back(named_from_expr(basis, psi_expr(g.tree, s_id)));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Graded ranks

bool FPReport::all_checks_pass() const {
    if (max_degree < 1 || j_rank.size() < 2) return false;
    if (j_rank[1] != 0 || gr_rank[1] != Int(n + 1)) return false;
    for (int d = 1; d <= max_degree; ++d) {
        if (!saturated[static_cast<size_t>(d)]) return false;
        if (!restriction_ok[static_cast<size_t>(d)]) return false;
    }
    return true;
}

FPReport fp_graded_ranks(const FPPresentation& p, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("fp_graded_ranks: max_degree must be >= 1");
    const int basis_degree = std::max(max_degree, p.theta.is_empty ? 3 : 4);
    HallBasis basis = HallBasis::build(p.alphabet(), basis_degree);
    RelatorSets rels = fp_relators(p, basis);

    std::vector<LieElement> gens;
    for (const NamedElement& r : rels.all()) gens.push_back(r.value);

    FPReport rep;
    rep.n = p.n;
    rep.max_degree = max_degree;
    rep.j = ideal_generate(basis, gens, max_degree);
    rep.witt = free_lie_ranks(basis.alphabet().weights, max_degree);

    std::vector<NamedElement> y_gens;
    for (int i = 0; i < p.n; ++i) y_gens.push_back(named_generator(basis, i));
    DerivedBlock y_sub(&basis, y_gens, max_degree);
    std::vector<Lattice> restricted = y_ideal_in_fp(p, basis, max_degree);

    rep.j_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.gr_rank.assign(static_cast<size_t>(max_degree) + 1, Int(0));
    rep.saturated.assign(static_cast<size_t>(max_degree) + 1, true);
    rep.restriction_ok.assign(static_cast<size_t>(max_degree) + 1, true);
    for (int d = 1; d <= max_degree; ++d) {
        const size_t ud = static_cast<size_t>(d);
        rep.j_rank[ud] = rep.j.rank(d);
        rep.gr_rank[ud] = rep.witt[ud] - Int(rep.j_rank[ud]);
        rep.saturated[ud] = is_saturated(rep.j.at(d));
        rep.restriction_ok[ud] =
            intersect(rep.j.at(d), y_sub.lattice(d)) == restricted[ud];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Decomposition

bool FPDecomposition::all_checks_pass() const {
    for (int d = 1; d <= max_degree; ++d) {
        if (!independent[static_cast<size_t>(d)]) return false;
        if (!spans_j[static_cast<size_t>(d)]) return false;
    }
    return true;
}

FPDecomposition decompose_J(const FPPresentation& p, int max_degree) {
    if (p.theta.is_empty)
        throw std::invalid_argument(
            "decompose_J: empty commutation relation; use theta_empty_case");
    if (max_degree < 2)
        throw std::invalid_argument("decompose_J: max_degree must be >= 2");

    const int basis_degree = std::max(max_degree, 4);
    HallBasis basis = HallBasis::build(p.alphabet(), basis_degree);
    const int s = p.s_id();
    RelatorSets rels = fp_relators(p, basis);

    FPDecomposition rep;
    rep.n = p.n;
    rep.max_degree = max_degree;

    // Raag-side induction, run inside the FP algebra so every block lattice
    // lives in the same coordinates as J.
    YInduction yi = y_induction(basis, p.theta, max_degree);

    std::vector<const DerivedBlock*> piece_blocks;
    auto add_block_piece = [&](std::string name, const DerivedBlock& blk) {
        FPPiece piece;
        piece.name = std::move(name);
        piece.rank.assign(static_cast<size_t>(max_degree) + 1, 0);
        for (int d = 1; d <= max_degree; ++d)
            piece.rank[static_cast<size_t>(d)] = blk.count(d);
        rep.pieces.push_back(std::move(piece));
        piece_blocks.push_back(&blk);
    };

    for (size_t k = 0; k < yi.state.ideal_blocks.size(); ++k) {
        std::string name =
            k == 0 ? "y_gamma2" : "y_D" + std::to_string(k + 2);
        add_block_piece(name, yi.state.ideal_blocks[k]);
    }

    // Transported copies under y_i -> [s, y_i]: the same blocks inside the
    // subring generated by the degree-2 brackets.
    std::vector<DerivedBlock> w_ideal_blocks, w_b_blocks;
    for (const StepOutcome& out : yi.outcomes) {
        w_ideal_blocks.emplace_back(
            &basis, psi_named(out.d_gens, basis, s, max_degree), max_degree);
        w_b_blocks.emplace_back(
            &basis, psi_named(out.b_gens, basis, s, max_degree), max_degree);
    }
    for (size_t k = 0; k < w_ideal_blocks.size(); ++k) {
        std::string name =
            k == 0 ? "w_gamma2" : "w_D" + std::to_string(k + 2);
        add_block_piece(name, w_ideal_blocks[k]);
    }

    // Eliminate s from the transported subring: the wreath words with an
    // ideal letter supply the s-dependent quadratic part of J.
    BlockState omega_state;
    omega_state.ambient = &basis;
    omega_state.max_degree = max_degree;
    for (int i = 0; i < p.n; ++i)
        omega_state.generators.push_back(named_from_expr(
            basis, ex_bracket(ex_gen(s), ex_gen(i))));
    omega_state.b_blocks = std::move(w_b_blocks);
    omega_state.ideal_blocks = w_ideal_blocks;
    StepOutcome s_step =
        elim_step(omega_state, named_generator(basis, s), {});
    DerivedBlock s_wreath(&basis, s_step.d_gens, max_degree);
    add_block_piece("s_wreath", s_wreath);

    // The ideal generated by the cubic relators [s, y_k, y_l].
    std::vector<LieElement> cubic;
    for (const NamedElement& r : rels.r3) cubic.push_back(r.value);
    GradedIdeal cubic_ideal = ideal_generate(basis, cubic, max_degree);
    {
        FPPiece piece;
        piece.name = "cubic";
        piece.rank.assign(static_cast<size_t>(max_degree) + 1, 0);
        for (int d = 1; d <= max_degree; ++d)
            piece.rank[static_cast<size_t>(d)] = cubic_ideal.rank(d);
        rep.pieces.push_back(std::move(piece));
    }

    std::vector<LieElement> gens;
    for (const NamedElement& r : rels.all()) gens.push_back(r.value);
    GradedIdeal j = ideal_generate(basis, gens, max_degree);

    rep.j_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.independent.assign(static_cast<size_t>(max_degree) + 1, true);
    rep.spans_j.assign(static_cast<size_t>(max_degree) + 1, true);
    for (int d = 1; d <= max_degree; ++d) {
        const size_t ud = static_cast<size_t>(d);
        rep.j_rank[ud] = j.rank(d);
        std::vector<Lattice> layers;
        for (const DerivedBlock* blk : piece_blocks)
            layers.push_back(blk->lattice(d));
        layers.push_back(cubic_ideal.at(d));
        auto [total, indep] = sum_rank(layers);
        rep.independent[ud] = indep && total == j.rank(d);
        Lattice stacked = zero_lattice(basis.rank(d));
        for (const Lattice& lay : layers) stacked = sum_lattice(stacked, lay);
        rep.spans_j[ud] = stacked == j.at(d);
    }

    // Diagnostic: do the raag-side blocks regenerate the raag relator ideal?
    std::vector<Lattice> expected = y_ideal_in_fp(p, basis, max_degree);
    rep.y_side_matches = true;
    for (int d = 1; d <= max_degree; ++d) {
        Lattice stacked = zero_lattice(basis.rank(d));
        for (const DerivedBlock& blk : yi.state.ideal_blocks)
            stacked = sum_lattice(stacked, blk.lattice(d));
        if (!(stacked == expected[static_cast<size_t>(d)]))
            rep.y_side_matches = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Splitting

bool SplitReport::all_checks_pass() const {
    for (int d = 1; d <= max_degree; ++d) {
        if (!split_ok[static_cast<size_t>(d)]) return false;
        if (!omega_saturated[static_cast<size_t>(d)]) return false;
    }
    return true;
}

SplitReport corollary_split(const FPPresentation& p, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("corollary_split: max_degree must be >= 1");
    FPReport fp = fp_graded_ranks(p, max_degree);

    OmegaAlgebra om{p.n};
    const int omega_degree = std::max(max_degree, 4);
    HallBasis obasis = HallBasis::build(om.alphabet(), omega_degree);
    std::vector<LieElement> wrel;
    for (const auto& [a, b] : p.theta.delta)
        wrel.push_back(obasis.bracket(obasis.gen(a - 1), obasis.gen(b - 1)));
    GradedIdeal omega_ideal = ideal_generate(obasis, wrel, max_degree);
    std::vector<Int> omega_free =
        free_lie_ranks(om.alphabet().weights, max_degree);

    SplitReport rep;
    rep.n = p.n;
    rep.max_degree = max_degree;
    rep.raag_part = raag_ranks(p.theta, max_degree);
    rep.gr_rank = fp.gr_rank;
    rep.omega_part.assign(static_cast<size_t>(max_degree) + 1, Int(0));
    rep.split_ok.assign(static_cast<size_t>(max_degree) + 1, true);
    rep.omega_saturated.assign(static_cast<size_t>(max_degree) + 1, true);
    for (int d = 1; d <= max_degree; ++d) {
        const size_t ud = static_cast<size_t>(d);
        rep.omega_part[ud] = omega_free[ud] - Int(omega_ideal.rank(d));
        rep.omega_saturated[ud] = is_saturated(omega_ideal.at(d));
        rep.split_ok[ud] = rep.gr_rank[ud] == rep.raag_part[ud] + rep.omega_part[ud];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Free base group

bool ThetaEmptyReport::all_checks_pass() const {
    for (int d = 1; d <= max_degree; ++d)
        if (!complete[static_cast<size_t>(d)]) return false;
    return true;
}

ThetaEmptyReport theta_empty_case(int n, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("theta_empty_case: max_degree must be >= 1");
    FPPresentation p = make_fp({n, {}});
    const int basis_degree = std::max(max_degree, 3);
    HallBasis basis = HallBasis::build(p.alphabet(), basis_degree);
    const int s = p.s_id();
    RelatorSets rels = fp_relators(p, basis);

    std::vector<NamedElement> y_gens, omega_gens;
    for (int i = 0; i < n; ++i) y_gens.push_back(named_generator(basis, i));
    omega_gens.push_back(named_generator(basis, s));
    for (int i = 0; i < n; ++i)
        omega_gens.push_back(
            named_from_expr(basis, ex_bracket(ex_gen(s), ex_gen(i))));
    DerivedBlock y_sub(&basis, y_gens, max_degree);
    DerivedBlock omega_sub(&basis, omega_gens, max_degree);

    std::vector<LieElement> cubic;
    for (const NamedElement& r : rels.r3) cubic.push_back(r.value);
    GradedIdeal j = ideal_generate(basis, cubic, max_degree);

    ThetaEmptyReport rep;
    rep.n = n;
    rep.max_degree = max_degree;
    rep.witt = free_lie_ranks(basis.alphabet().weights, max_degree);
    rep.y_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.omega_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.j_rank.assign(static_cast<size_t>(max_degree) + 1, 0);
    rep.complete.assign(static_cast<size_t>(max_degree) + 1, true);
    for (int d = 1; d <= max_degree; ++d) {
        const size_t ud = static_cast<size_t>(d);
        rep.y_rank[ud] = y_sub.count(d);
        rep.omega_rank[ud] = omega_sub.count(d);
        rep.j_rank[ud] = j.rank(d);
        std::vector<Lattice> layers{y_sub.lattice(d), omega_sub.lattice(d),
                                    j.at(d)};
        auto [total, indep] = sum_rank(layers);
        Lattice stacked = zero_lattice(basis.rank(d));
        for (const Lattice& lay : layers) stacked = sum_lattice(stacked, lay);
        rep.complete[ud] = indep && Int(total) == rep.witt[ud] &&
                           stacked == full_lattice(basis.rank(d));
    }
    return rep;
}

} // namespace gradedlie
