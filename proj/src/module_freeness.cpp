#include "gradedlie/module_freeness.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "gradedlie/series.hpp"
#include "gradedlie/zmodule.hpp"

namespace gradedlie {

GradedIdeal gamma2(HallBasis& basis, const GradedIdeal& ideal, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("gamma2: max_degree must be >= 1");
    if (ideal.max_degree < max_degree)
        throw std::invalid_argument("gamma2: ideal truncated below requested degree");

    GradedIdeal out;
    out.max_degree = max_degree;
    out.per_degree.reserve(static_cast<size_t>(max_degree) + 1);
    out.per_degree.push_back(zero_lattice(basis.rank(0)));
    for (int d = 1; d <= max_degree; ++d) {
        HnfBuilder acc(basis.rank(d));
        for (int p = 1; 2 * p <= d; ++p) {
            int q = d - p;
            const Lattice& lp = ideal.at(p);
            const Lattice& lq = ideal.at(q);
            for (int i = 0; i < lp.rank(); ++i) {
                LieElement u = basis.from_sparse(lp.basis.entries[static_cast<size_t>(i)], p);
                int j_start = (p == q) ? i + 1 : 0;
                for (int j = j_start; j < lq.rank(); ++j) {
                    LieElement v =
                        basis.from_sparse(lq.basis.entries[static_cast<size_t>(j)], q);
                    acc.insert(basis.sparse(basis.bracket(u, v), d));
                }
            }
        }
        out.per_degree.push_back(acc.to_lattice());
    }
    return out;
}

bool FreenessReport::all_checks_pass() const {
    if (!relators_generate)
        return false;
    for (int d = 1; d <= max_degree; ++d) {
        size_t i = static_cast<size_t>(d);
        if (!saturated[i] || !surjective[i] || actual[i] != predicted[i])
            return false;
    }
    return true;
}

FreenessReport check_freeness(HallBasis& basis, const GradedIdeal& ideal,
                              const std::vector<LieElement>& relators,
                              int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("check_freeness: max_degree must be >= 1");
    if (ideal.max_degree < max_degree)
        throw std::invalid_argument("check_freeness: ideal truncated below requested degree");

    std::vector<int> rel_deg;
    rel_deg.reserve(relators.size());
    for (const LieElement& r : relators) {
        if (r.terms.empty())
            throw std::invalid_argument("check_freeness: zero relator");
        rel_deg.push_back(homogeneous_degree(r));
    }

    FreenessReport rep;
    rep.max_degree = max_degree;
    size_t len = static_cast<size_t>(max_degree) + 1;
    rep.quotient.assign(len, Int(0));
    rep.ideal_rank.assign(len, 0);
    rep.gamma2_rank.assign(len, 0);
    rep.actual.assign(len, Int(0));
    rep.predicted.assign(len, Int(0));
    rep.saturated.assign(len, 1);
    rep.surjective.assign(len, 1);

    // Precondition: the relators must span the same graded ideal they claim
    // to present. A mismatch in either direction (missing span or a relator
    // outside the ideal) shows up as a lattice inequality in some degree.
    GradedIdeal regenerated = ideal_generate(basis, relators, max_degree);
    rep.relators_generate = true;
    for (int d = 1; d <= max_degree; ++d) {
        if (!(regenerated.at(d) == ideal.at(d))) {
            rep.relators_generate = false;
            break;
        }
    }

    GradedIdeal derived = gamma2(basis, ideal, max_degree);

    for (int d = 1; d <= max_degree; ++d) {
        size_t i = static_cast<size_t>(d);
        rep.ideal_rank[i] = ideal.rank(d);
        rep.gamma2_rank[i] = derived.rank(d);
        rep.quotient[i] = Int(basis.rank(d) - ideal.rank(d));
        rep.actual[i] = Int(rep.ideal_rank[i] - rep.gamma2_rank[i]);
        rep.saturated[i] = quotient_saturated(derived.at(d), ideal.at(d)) ? 1 : 0;
        Int pred = 0;
        for (int e : rel_deg)
            if (e <= d)
                pred += pbw_dim(rep.quotient, d - e);
        rep.predicted[i] = pred;
    }

    // Surjectivity of the relator classes onto I_d / [I,I]_d: seed one
    // accumulator per degree with the [I,I] layer, then walk every left-normed
    // bracket [r, g_1, ..., g_k] of the relators by generators, depth first.
    // Once a degree's accumulator reaches full ideal rank further inserts at
    // that degree are skipped (correct whenever the relators do lie in the
    // ideal; when they do not, relators_generate already fails the report).
    std::vector<HnfBuilder> span;
    span.reserve(len);
    for (int d = 0; d <= max_degree; ++d)
        span.emplace_back(basis.rank(d));
    for (int d = 1; d <= max_degree; ++d)
        for (const SparseRow& row : derived.at(d).basis.entries)
            span[static_cast<size_t>(d)].insert(row);

    const Alphabet& alph = basis.alphabet();
    std::function<void(const LieElement&, int)> walk = [&](const LieElement& x, int k) {
        size_t i = static_cast<size_t>(k);
        if (span[i].rank() < rep.ideal_rank[i])
            span[i].insert(basis.sparse(x, k));
        bool deeper_needed = false;
        for (int d2 = k + 1; d2 <= max_degree && !deeper_needed; ++d2)
            deeper_needed = span[static_cast<size_t>(d2)].rank() <
                            rep.ideal_rank[static_cast<size_t>(d2)];
        if (!deeper_needed)
            return;
        for (int g = 0; g < alph.size(); ++g) {
            int k2 = k + alph.weight(g);
            if (k2 <= max_degree)
                walk(basis.bracket(x, basis.gen(g)), k2);
        }
    };
    for (size_t r = 0; r < relators.size(); ++r)
        if (rel_deg[r] <= max_degree)
            walk(relators[r], rel_deg[r]);

    for (int d = 1; d <= max_degree; ++d) {
        size_t i = static_cast<size_t>(d);
        rep.surjective[i] = (span[i].rank() == rep.ideal_rank[i]) ? 1 : 0;
    }

    return rep;
}

} // namespace gradedlie
