// Tests for the relation-module freeness certificates: the derived ideal
// gamma2(I) = [I,I], and check_freeness, which compares the graded ranks of
// I/[I,I] against the free-module prediction sum_r pbw_dim(L/I ranks,
// d - deg r) with saturation and surjectivity certificates.
//
// Frozen expectations were derived by hand before running the code:
//  * one commuting pair on two generators: quotient ranks (2,0,0,...), so the
//    prediction is the number of monomials of degree d-2 in two commuting
//    variables, i.e. d-1: the sequence 1,2,3,4 at degrees 2..5; [I,I] is 0
//    below degree 5 and has rank 2 there ([z,[z,y1]], [z,[z,y2]]);
//  * the triangle (all three pairs commuting) is generated but NOT free:
//    the Jacobi identity [[y2,y1],y3] + [[y1,y3],y2] + [[y3,y2],y1] = 0 is a
//    syzygy among the three relator classes, so the actual ranks fall short
//    of the prediction by the monomial counts in three commuting variables
//    (1, 3, 6 in degrees 3, 4, 5) — one free syzygy generated in degree 3;
//  * the four-cycle is triangle-free and free: quotient ranks are those of
//    L_2 x L_2, i.e. (4,2,4,6,12), and both sides equal 4, 16, 48, 128;
//  * the degree-3 relator family [s,y_k,y_l] (all ordered pairs) over the
//    split presentation with no commuting pairs: quotient (3,3,4,6,12),
//    prediction 4*pbw_dim(q, d-3) = 4, 12, 36 at degrees 3..5, and [I,I]
//    vanishes through degree 5, so actual matches;
//  * weighted alphabet {w1, w2 of weight 2, s of weight 1} with the single
//    relator [w2,w1]: ideal ranks 1, 1, 3 at degrees 4..6 and prediction
//    1, 1, 3 from quotient (1,2,2,2,5,...).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedlie/module_freeness.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradedlie/fp_ideal.hpp"
#include "gradedlie/series.hpp"

using namespace gradedlie;

namespace {

PartialCommutation pc(int n, std::set<std::pair<int, int>> pairs) {
    return PartialCommutation{n, std::move(pairs)};
}

struct RaagSetup {
    HallBasis basis;
    std::vector<LieElement> relators;
    GradedIdeal ideal;
};

RaagSetup raag_setup(int n, std::set<std::pair<int, int>> pairs, int max_degree) {
    ValidatedTheta vt = validate(pc(n, std::move(pairs)));
    HallBasis basis = HallBasis::build(vt.alphabet(), max_degree);
    std::vector<LieElement> rel = raag_relators(basis, vt);
    GradedIdeal ideal = ideal_generate(basis, rel, max_degree);
    return RaagSetup{std::move(basis), std::move(rel), std::move(ideal)};
}

} // namespace

TEST_CASE("gamma2: derived ideal of the one-pair ideal") {
    RaagSetup s = raag_setup(2, {{2, 1}}, 5);
    GradedIdeal g2 = gamma2(s.basis, s.ideal, 5);
    // Lowest possible bracket is [I^2, I^3]; [u,u] = 0 kills degree 4.
    CHECK(g2.rank(1) == 0);
    CHECK(g2.rank(2) == 0);
    CHECK(g2.rank(3) == 0);
    CHECK(g2.rank(4) == 0);
    CHECK(g2.rank(5) == 2);
    // Requesting more degrees than the ideal carries is refused.
    CHECK_THROWS_AS(gamma2(s.basis, s.ideal, 6), std::invalid_argument);
    CHECK_THROWS_AS(gamma2(s.basis, s.ideal, 0), std::invalid_argument);
}

TEST_CASE("check_freeness: one commuting pair on two generators") {
    RaagSetup s = raag_setup(2, {{2, 1}}, 5);
    FreenessReport rep = check_freeness(s.basis, s.ideal, s.relators, 5);
    CHECK(rep.relators_generate);
    CHECK(rep.all_checks_pass());
    CHECK(rep.quotient == std::vector<Int>{0, 2, 0, 0, 0, 0});
    CHECK(rep.ideal_rank == std::vector<int>{0, 0, 1, 2, 3, 6});
    CHECK(rep.gamma2_rank == std::vector<int>{0, 0, 0, 0, 0, 2});
    CHECK(rep.actual == std::vector<Int>{0, 0, 1, 2, 3, 4});
    CHECK(rep.predicted == std::vector<Int>{0, 0, 1, 2, 3, 4});
    for (int d = 1; d <= 5; ++d) {
        CHECK(rep.saturated[static_cast<size_t>(d)]);
        CHECK(rep.surjective[static_cast<size_t>(d)]);
    }
}

TEST_CASE("check_freeness: path on three generators is free") {
    RaagSetup s = raag_setup(3, {{2, 1}, {3, 2}}, 5);
    FreenessReport rep = check_freeness(s.basis, s.ideal, s.relators, 5);
    CHECK(rep.all_checks_pass());
    CHECK(rep.quotient == std::vector<Int>{0, 3, 1, 2, 3, 6});
    CHECK(rep.ideal_rank == std::vector<int>{0, 0, 2, 6, 15, 42});
    CHECK(rep.actual == std::vector<Int>{0, 0, 2, 6, 14, 30});
    CHECK(rep.predicted == rep.actual);
}

TEST_CASE("check_freeness: triangle is generated but not free") {
    RaagSetup s = raag_setup(3, {{2, 1}, {3, 1}, {3, 2}}, 5);
    FreenessReport rep = check_freeness(s.basis, s.ideal, s.relators, 5);
    // Every structural certificate holds...
    CHECK(rep.relators_generate);
    for (int d = 1; d <= 5; ++d) {
        CHECK(rep.saturated[static_cast<size_t>(d)]);
        CHECK(rep.surjective[static_cast<size_t>(d)]);
    }
    // ...but the ranks fall short of the free prediction from degree 3 on:
    // the Jacobi identity ties the three relator classes together.
    CHECK(rep.quotient == std::vector<Int>{0, 3, 0, 0, 0, 0});
    CHECK(rep.actual == std::vector<Int>{0, 0, 3, 8, 15, 24});
    CHECK(rep.predicted == std::vector<Int>{0, 0, 3, 9, 18, 30});
    CHECK_FALSE(rep.all_checks_pass());
    // The deficit grows like one free syzygy born in degree 3: its multiples
    // by monomials in the three commuting images.
    std::vector<Int> three{0, 3};
    for (int d = 3; d <= 5; ++d) {
        size_t i = static_cast<size_t>(d);
        CHECK(rep.predicted[i] - rep.actual[i] == pbw_dim(three, d - 3));
    }
}

TEST_CASE("check_freeness: four-cycle is free") {
    RaagSetup s = raag_setup(4, {{2, 1}, {3, 2}, {4, 1}, {4, 3}}, 5);
    FreenessReport rep = check_freeness(s.basis, s.ideal, s.relators, 5);
    CHECK(rep.all_checks_pass());
    // Quotient ranks are those of a product of two rank-2 free Lie rings.
    CHECK(rep.quotient == std::vector<Int>{0, 4, 2, 4, 6, 12});
    CHECK(rep.ideal_rank == std::vector<int>{0, 0, 4, 16, 54, 192});
    CHECK(rep.gamma2_rank == std::vector<int>{0, 0, 0, 0, 6, 64});
    CHECK(rep.actual == std::vector<Int>{0, 0, 4, 16, 48, 128});
    CHECK(rep.predicted == rep.actual);
}

TEST_CASE("check_freeness: cubic relator family on the split presentation") {
    FPPresentation p = make_fp(pc(2, {}));
    HallBasis basis = HallBasis::build(p.alphabet(), 5);
    RelatorSets rs = fp_relators(p, basis);
    std::vector<LieElement> rel;
    for (const NamedElement& e : rs.r3)
        rel.push_back(e.value);
    REQUIRE(rel.size() == 4);
    GradedIdeal ideal = ideal_generate(basis, rel, 5);

    FreenessReport rep = check_freeness(basis, ideal, rel, 5);
    CHECK(rep.all_checks_pass());
    CHECK(rep.quotient == std::vector<Int>{0, 3, 3, 4, 6, 12});
    CHECK(rep.ideal_rank == std::vector<int>{0, 0, 0, 4, 12, 36});
    CHECK(rep.gamma2_rank == std::vector<int>{0, 0, 0, 0, 0, 0});
    CHECK(rep.actual == std::vector<Int>{0, 0, 0, 4, 12, 36});
    CHECK(rep.predicted == rep.actual);
    // Degree 3 carries exactly one generator per ordered pair: n^2 of them.
    CHECK(rep.actual[3] == Int(4));
}

TEST_CASE("check_freeness: weighted alphabet with one degree-4 relator") {
    OmegaAlgebra om{2};
    HallBasis obasis = HallBasis::build(om.alphabet(), 6);
    std::vector<LieElement> rel{obasis.bracket(obasis.gen(1), obasis.gen(0))};
    GradedIdeal ideal = ideal_generate(obasis, rel, 6);

    FreenessReport rep = check_freeness(obasis, ideal, rel, 6);
    CHECK(rep.all_checks_pass());
    CHECK(rep.quotient == std::vector<Int>{0, 1, 2, 2, 2, 5, 6});
    CHECK(rep.ideal_rank == std::vector<int>{0, 0, 0, 0, 1, 1, 3});
    CHECK(rep.actual == std::vector<Int>{0, 0, 0, 0, 1, 1, 3});
    CHECK(rep.predicted == rep.actual);
}

TEST_CASE("check_freeness: relators that do not generate are reported") {
    SUBCASE("proper sub-ideal") {
        RaagSetup s = raag_setup(2, {{2, 1}}, 4);
        // [z, y1] generates only part of the ideal of z = [y2,y1].
        std::vector<LieElement> partial{
            s.basis.bracket(s.relators.at(0), s.basis.gen(0))};
        FreenessReport rep = check_freeness(s.basis, s.ideal, partial, 4);
        CHECK_FALSE(rep.relators_generate);
        CHECK_FALSE(rep.all_checks_pass());
        // The report still carries the true ideal ranks, and surjectivity
        // honestly fails where the images cannot reach.
        CHECK(rep.ideal_rank[2] == 1);
        CHECK_FALSE(rep.surjective[2]);
    }
    SUBCASE("corrupted relator family") {
        FPPresentation p = make_fp(pc(2, {{2, 1}}));
        HallBasis basis = HallBasis::build(p.alphabet(), 4);
        std::vector<LieElement> good, bad;
        for (const NamedElement& e : fp_relators(p, basis).all())
            good.push_back(e.value);
        for (const NamedElement& e : fp_relators_corrupted(p, basis).all())
            bad.push_back(e.value);
        GradedIdeal ideal = ideal_generate(basis, good, 4);
        FreenessReport rep = check_freeness(basis, ideal, bad, 4);
        CHECK_FALSE(rep.relators_generate);
        CHECK_FALSE(rep.all_checks_pass());
    }
}

TEST_CASE("check_freeness: degenerate inputs are refused") {
    RaagSetup s = raag_setup(2, {{2, 1}}, 4);
    CHECK_THROWS_AS(check_freeness(s.basis, s.ideal, s.relators, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_freeness(s.basis, s.ideal, s.relators, 5),
                    std::invalid_argument);
    std::vector<LieElement> with_zero = s.relators;
    with_zero.push_back(LieElement{});
    CHECK_THROWS_AS(check_freeness(s.basis, s.ideal, with_zero, 4),
                    std::invalid_argument);
}
