// Tests for the Formanek-Procesi relator ideal, its graded quotient ranks,
// the block decomposition, and the two-factor splitting.
//
// Frozen integer expectations for the two-generator base case were derived
// by hand: with relators [y2,y1], the four [s,y_k,y_l] and [[s,y2],[s,y1]],
// the ideal J has ranks 0, 1, 6, 16, 43 in degrees 1..5 (e.g. in degree 3
// the seven spanning brackets satisfy the single relation
// [s,[y2,y1]] = [s,y2,y1] - [s,y1,y2]), and the quotient ranks 3, 2, 2, 2, 5
// split as raag + weighted part: 2+1, 0+2, 0+2, 0+2, 0+5.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedlie/fp_ideal.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace gradedlie;

namespace {

PartialCommutation pc(int n, std::set<std::pair<int, int>> pairs) {
    return PartialCommutation{n, std::move(pairs)};
}

std::vector<int> piece_named(const FPDecomposition& dec, const std::string& name) {
    for (const FPPiece& p : dec.pieces)
        if (p.name == name) return p.rank;
    return {};
}

} // namespace

TEST_CASE("fp_relators: families, sizes and renderings") {
    FPPresentation p = make_fp(pc(2, {{1, 2}}));
    HallBasis basis = HallBasis::build(p.alphabet(), 4);
    RelatorSets rs = fp_relators(p, basis);

    REQUIRE(rs.r2.size() == 1);
    REQUIRE(rs.r3.size() == 4);
    REQUIRE(rs.r4.size() == 1);
    CHECK(rs.all().size() == 6);

    const Alphabet& a = basis.alphabet();
    CHECK(render_expr(*rs.r2[0].tree, a) == "[y2,y1]");
    CHECK(render_expr(*rs.r3[0].tree, a) == "[s,y1,y1]");
    CHECK(render_expr(*rs.r3[1].tree, a) == "[s,y1,y2]");
    CHECK(render_expr(*rs.r3[2].tree, a) == "[s,y2,y1]");
    CHECK(render_expr(*rs.r3[3].tree, a) == "[s,y2,y2]");
    CHECK(render_expr(*rs.r4[0].tree, a) == "[s,y2,[s,y1]]");
    CHECK(rs.r2[0].degree == 2);
    CHECK(rs.r3[0].degree == 3);
    CHECK(rs.r4[0].degree == 4);

    SUBCASE("free base group drops the commutation families") {
        FPPresentation pf = make_fp(pc(2, {}));
        HallBasis bf = HallBasis::build(pf.alphabet(), 3);
        RelatorSets rf = fp_relators(pf, bf);
        CHECK(rf.r2.empty());
        CHECK(rf.r4.empty());
        CHECK(rf.r3.size() == 4);
    }
    SUBCASE("complete graph on three vertices") {
        FPPresentation pt = make_fp(pc(3, {{1, 2}, {1, 3}, {2, 3}}));
        HallBasis bt = HallBasis::build(pt.alphabet(), 4);
        RelatorSets rt = fp_relators(pt, bt);
        CHECK(rt.r2.size() == 3);
        CHECK(rt.r3.size() == 9);
        CHECK(rt.r4.size() == 3);
    }
    SUBCASE("corrupted first cubic relator") {
        RelatorSets rc = fp_relators_corrupted(p, basis);
        CHECK(rc.r3[0].degree == 4);
        CHECK(render_expr(*rc.r3[0].tree, a) == "[s,y1,y1,y1]");
        CHECK(rc.r2[0].value == rs.r2[0].value);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(make_fp(pc(1, {})), std::invalid_argument);
    }
}

TEST_CASE("fp_graded_ranks: two generators, one commuting pair (frozen)") {
    FPPresentation p = make_fp(pc(2, {{1, 2}}));
    FPReport rep = fp_graded_ranks(p, 5);

    CHECK(rep.witt == std::vector<Int>{0, 3, 3, 8, 18, 48});
    CHECK(rep.j_rank == std::vector<int>{0, 0, 1, 6, 16, 43});
    CHECK(rep.gr_rank == std::vector<Int>{0, 3, 2, 2, 2, 5});
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        CHECK(rep.saturated[static_cast<size_t>(d)]);
        CHECK(rep.restriction_ok[static_cast<size_t>(d)]);
    }
    CHECK(rep.all_checks_pass());
}

TEST_CASE("fp_graded_ranks: free base group on two generators (frozen)") {
    FPPresentation p = make_fp(pc(2, {}));
    FPReport rep = fp_graded_ranks(p, 4);
    // Only the four cubic relators: J has ranks 0, 0, 4, 12.
    CHECK(rep.j_rank == std::vector<int>{0, 0, 0, 4, 12});
    CHECK(rep.gr_rank == std::vector<Int>{0, 3, 3, 4, 6});
    CHECK(rep.all_checks_pass());
}

TEST_CASE("fp_graded_ranks: further configurations") {
    SUBCASE("three vertices, one edge") {
        FPReport rep = fp_graded_ranks(make_fp(pc(3, {{1, 2}})), 4);
        CHECK(rep.all_checks_pass());
        CHECK(rep.gr_rank[1] == 4);
        // gr_2 = Witt_2(4) - (1 commuting pair) = 6 - 1 = 5.
        CHECK(rep.gr_rank[2] == 5);
    }
    SUBCASE("three vertices, complete graph") {
        FPReport rep = fp_graded_ranks(make_fp(pc(3, {{1, 2}, {1, 3}, {2, 3}})), 4);
        CHECK(rep.all_checks_pass());
        CHECK(rep.gr_rank[2] == 3);
    }
    SUBCASE("corrupted relators change the ideal") {
        FPPresentation p = make_fp(pc(2, {{1, 2}}));
        HallBasis basis = HallBasis::build(p.alphabet(), 4);
        std::vector<LieElement> good, bad;
        for (const NamedElement& r : fp_relators(p, basis).all())
            good.push_back(r.value);
        for (const NamedElement& r : fp_relators_corrupted(p, basis).all())
            bad.push_back(r.value);
        GradedIdeal jg = ideal_generate(basis, good, 4);
        GradedIdeal jb = ideal_generate(basis, bad, 4);
        CHECK(jg.rank(3) == 6);
        CHECK(jb.rank(3) == 5);
        CHECK_FALSE(jb.at(3) == jg.at(3));
    }
    SUBCASE("degenerate degree one") {
        FPReport rep = fp_graded_ranks(make_fp(pc(2, {{1, 2}})), 1);
        CHECK(rep.j_rank == std::vector<int>{0, 0});
        CHECK(rep.gr_rank == std::vector<Int>{0, 3});
        CHECK(rep.all_checks_pass());
        CHECK_THROWS_AS(fp_graded_ranks(make_fp(pc(2, {{1, 2}})), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("decompose_J: two generators, one commuting pair (frozen)") {
    FPPresentation p = make_fp(pc(2, {{1, 2}}));
    FPDecomposition dec = decompose_J(p, 5);

    CHECK(dec.j_rank == std::vector<int>{0, 0, 1, 6, 16, 43});
    CHECK(piece_named(dec, "y_gamma2") == std::vector<int>{0, 0, 1, 2, 3, 6});
    CHECK(piece_named(dec, "w_gamma2") == std::vector<int>{0, 0, 0, 0, 1, 0});
    CHECK(piece_named(dec, "s_wreath") == std::vector<int>{0, 0, 0, 0, 0, 1});
    CHECK(piece_named(dec, "cubic") == std::vector<int>{0, 0, 0, 4, 12, 36});
    REQUIRE(dec.pieces.size() == 4);
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        CHECK(dec.independent[static_cast<size_t>(d)]);
        CHECK(dec.spans_j[static_cast<size_t>(d)]);
    }
    CHECK(dec.y_side_matches);
    CHECK(dec.all_checks_pass());

    // The transported blocks plus the s-wreath block mirror the ideal
    // generated by [w2,w1] in the abstract weighted algebra on
    // {w1, w2 (degree 2), s (degree 1)}: ranks 1 and 1 in degrees 4 and 5.
    OmegaAlgebra om{2};
    HallBasis obasis = HallBasis::build(om.alphabet(), 5);
    GradedIdeal oi = ideal_generate(
        obasis, {obasis.bracket(obasis.gen(1), obasis.gen(0))}, 5);
    std::vector<int> w_part(6, 0);
    for (int d = 1; d <= 5; ++d) {
        w_part[static_cast<size_t>(d)] =
            piece_named(dec, "w_gamma2")[static_cast<size_t>(d)] +
            piece_named(dec, "s_wreath")[static_cast<size_t>(d)];
        CHECK(w_part[static_cast<size_t>(d)] == oi.rank(d));
    }
}

TEST_CASE("decompose_J: three-vertex configurations") {
    SUBCASE("one edge") {
        FPDecomposition dec = decompose_J(make_fp(pc(3, {{1, 2}})), 4);
        CHECK(dec.all_checks_pass());
        CHECK(dec.y_side_matches);
        // Pieces: y_gamma2, y_D3, w_gamma2, w_D3, s_wreath, cubic.
        CHECK(dec.pieces.size() == 6);
        CHECK(piece_named(dec, "y_D3") == std::vector<int>{0, 0, 0, 1, 5});
    }
    SUBCASE("complete graph") {
        FPDecomposition dec =
            decompose_J(make_fp(pc(3, {{1, 2}, {1, 3}, {2, 3}})), 4);
        CHECK(dec.all_checks_pass());
        CHECK(dec.y_side_matches);
    }
    SUBCASE("empty relation is rejected") {
        CHECK_THROWS_AS(decompose_J(make_fp(pc(3, {})), 4),
                        std::invalid_argument);
    }
}

TEST_CASE("corollary_split: quotient ranks split as raag plus weighted part") {
    SUBCASE("two generators, one pair (frozen)") {
        SplitReport rep = corollary_split(make_fp(pc(2, {{1, 2}})), 5);
        CHECK(rep.raag_part == std::vector<Int>{0, 2, 0, 0, 0, 0});
        CHECK(rep.omega_part == std::vector<Int>{0, 1, 2, 2, 2, 5});
        CHECK(rep.gr_rank == std::vector<Int>{0, 3, 2, 2, 2, 5});
        CHECK(rep.all_checks_pass());
    }
    SUBCASE("three vertices, one edge") {
        CHECK(corollary_split(make_fp(pc(3, {{1, 2}})), 4).all_checks_pass());
    }
    SUBCASE("free base group") {
        SplitReport rep = corollary_split(make_fp(pc(2, {})), 4);
        CHECK(rep.raag_part == std::vector<Int>{0, 2, 1, 2, 3});
        CHECK(rep.all_checks_pass());
    }
}

TEST_CASE("theta_empty_case: free base group splits into three pieces") {
    ThetaEmptyReport rep = theta_empty_case(2, 4);
    CHECK(rep.witt == std::vector<Int>{0, 3, 3, 8, 18});
    CHECK(rep.y_rank == std::vector<int>{0, 2, 1, 2, 3});
    CHECK(rep.omega_rank == std::vector<int>{0, 1, 2, 2, 3});
    CHECK(rep.j_rank == std::vector<int>{0, 0, 0, 4, 12});
    CHECK(rep.all_checks_pass());

    SUBCASE("three generators, low degrees") {
        ThetaEmptyReport r3 = theta_empty_case(3, 4);
        CHECK(r3.j_rank[3] == 9); // one cubic relator per ordered pair
        CHECK(r3.all_checks_pass());
    }
}

TEST_CASE("psi transport: abstract and concrete views agree") {
    FPPresentation p = make_fp(pc(2, {{1, 2}}));
    HallBasis basis = HallBasis::build(p.alphabet(), 6);
    OmegaAlgebra om{2};
    HallBasis obasis = HallBasis::build(om.alphabet(), 6);

    SUBCASE("generator images") {
        LieElement u = basis.bracket(basis.gen(1), basis.gen(0));
        LieElement img = psi_map(basis, u, obasis);
        CHECK(img == obasis.bracket(obasis.gen(1), obasis.gen(0)));
    }
    SUBCASE("degree-wise injectivity on the y-subring") {
        std::vector<NamedElement> y_gens{named_generator(basis, 0),
                                         named_generator(basis, 1)};
        DerivedBlock y_sub(&basis, y_gens, 3);
        for (int d = 1; d <= 3; ++d) {
            IntMatrix rows(0, obasis.rank(2 * d));
            for (int i = 0; i < y_sub.count(d); ++i) {
                LieElement img = psi_map(basis, y_sub.basis_value(d, i), obasis);
                rows.append_row(obasis.sparse(img, 2 * d));
            }
            CAPTURE(d);
            CHECK(hnf(rows).rank() == y_sub.count(d));
        }
    }
    SUBCASE("concrete substitution tree") {
        ExprPtr t = psi_expr(ex_bracket(ex_gen(1), ex_gen(0)), p.s_id());
        CHECK(render_expr(*t, basis.alphabet()) == "[s,y2,[s,y1]]");
        // The concrete image equals the evaluation of the substituted tree.
        LieElement img = basis.eval(*t);
        CHECK(homogeneous_degree(img) == 4);
    }
}
