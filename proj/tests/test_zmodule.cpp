#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradedlie/zmodule.hpp"

using namespace gradedlie;

namespace {

IntMatrix from_dense(const std::vector<std::vector<long long>>& rows, int cols) {
    IntMatrix m(0, cols);
    for (const auto& r : rows) {
        SparseRow sr;
        for (size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) sr.emplace(static_cast<int>(c), Int(r[c]));
        m.append_row(std::move(sr));
    }
    return m;
}

Lattice lat(const std::vector<std::vector<long long>>& rows, int cols) {
    return hnf(from_dense(rows, cols));
}

std::vector<Int> vec(const std::vector<long long>& v) {
    std::vector<Int> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("hnf canonical forms") {
    // [[2,4],[1,2]] spans the same lattice as [[1,2]].
    Lattice a = lat({{2, 4}, {1, 2}}, 2);
    CHECK(a.rank() == 1);
    CHECK(a.basis.get(0, 0) == 1);
    CHECK(a.basis.get(0, 1) == 2);

    Lattice id = hnf(IntMatrix::identity(4));
    CHECK(id == full_lattice(4));

    Lattice z = lat({{0, 0, 0}}, 3);
    CHECK(z.rank() == 0);
    CHECK(z == zero_lattice(3));

    // Negative rows normalize to positive pivots.
    Lattice n = lat({{-3, 0}, {0, -5}}, 2);
    CHECK(n.basis.get(0, 0) == 3);
    CHECK(n.basis.get(1, 1) == 5);

    // Above-pivot reduction: entries land in [0, pivot).
    Lattice r = lat({{1, 7}, {0, 3}}, 2);
    CHECK(r.basis.get(0, 1) == 1);
    CHECK(r.basis.get(1, 1) == 3);
}

TEST_CASE("hnf equality detects equal spans") {
    Lattice a = lat({{1, 2, 3}, {0, 4, 5}}, 3);
    Lattice b = lat({{1, 6, 8}, {0, -4, -5}, {2, 8, 11}}, 3);
    CHECK(a == b);
    Lattice c = lat({{1, 2, 3}, {0, 4, 6}}, 3);
    CHECK(a != c);
}

TEST_CASE("snf elementary divisors") {
    CHECK(snf(from_dense({{2, 0}, {0, 3}}, 2)) == std::vector<Int>{1, 6});
    CHECK(snf(IntMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
    CHECK(snf(from_dense({{0, 0}}, 2)).empty());
    CHECK(snf(from_dense({{2, 4}, {4, 8}}, 2)) == std::vector<Int>{2});
    // Divisibility chain on a denser example.
    auto d = snf(from_dense({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}, 3));
    REQUIRE(d.size() == 3);
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
}

TEST_CASE("saturation") {
    CHECK(is_saturated(lat({{1, 2}}, 2)));
    CHECK_FALSE(is_saturated(lat({{2, 0}}, 2)));
    CHECK_FALSE(is_saturated(lat({{1, 0}, {0, 3}}, 2)));
    // Pivot 2 in HNF yet saturated: (2,1) extends to a basis of Z^2.
    CHECK(is_saturated(lat({{2, 1}}, 2)));
    CHECK(is_saturated(zero_lattice(5)));
    CHECK(is_saturated(full_lattice(3)));
}

TEST_CASE("membership and coordinates") {
    Lattice a = lat({{1, 2}}, 2);
    CHECK(member(vec({2, 4}), a));
    CHECK_FALSE(member(vec({1, 1}), a));
    CHECK(member(vec({0, 0}), a));
    auto c = coords_in(vec({-3, -6}), a);
    REQUIRE(c.has_value());
    CHECK((*c) == std::vector<Int>{-3});

    Lattice b = lat({{2, 1, 0}, {0, 3, 1}}, 3);
    auto cb = coords_in(vec({2, 4, 1}), b);
    REQUIRE(cb.has_value());
    CHECK((*cb) == std::vector<Int>{1, 1});
    CHECK_FALSE(coords_in(vec({1, 0, 0}), b).has_value());
}

TEST_CASE("sum_rank direct-sum detection") {
    Lattice e1 = lat({{1, 0}}, 2), e2 = lat({{0, 1}}, 2);
    CHECK(sum_rank({e1, e2}) == std::pair<int, bool>(2, true));
    CHECK(sum_rank({e1, e1}) == std::pair<int, bool>(1, false));
    Lattice d = lat({{1, 1}, {0, 2}}, 2);
    CHECK(sum_rank({lat({{1, 1}}, 2), lat({{0, 2}}, 2)}) ==
          std::pair<int, bool>(2, true));
    CHECK(sum_rank({d}) == std::pair<int, bool>(2, true));
    CHECK(sum_rank({}) == std::pair<int, bool>(0, true));
}

TEST_CASE("sum and intersection") {
    Lattice a = lat({{2, 0}}, 2), b = lat({{0, 3}}, 2);
    Lattice s = sum_lattice(a, b);
    CHECK(s == lat({{2, 0}, {0, 3}}, 2));

    // span{(2,0),(0,1)} ∩ span{(1,1)} = span{(2,2)}.
    Lattice u = lat({{2, 0}, {0, 1}}, 2);
    Lattice v = lat({{1, 1}}, 2);
    CHECK(intersect(u, v) == lat({{2, 2}}, 2));

    // Intersection with the full lattice is the identity map.
    Lattice w = lat({{1, 2, 3}, {0, 0, 7}}, 3);
    CHECK(intersect(w, full_lattice(3)) == w);
    CHECK(intersect(w, zero_lattice(3)) == zero_lattice(3));
}

TEST_CASE("left_kernel basics") {
    // Rows (1,1),(1,1) have kernel (1,-1).
    IntMatrix m = from_dense({{1, 1}, {1, 1}}, 2);
    IntMatrix k = left_kernel(m);
    REQUIRE(k.rows == 1);
    Lattice kl = hnf(k);
    CHECK(kl == lat({{1, -1}}, 2));

    // Full-rank square matrix has trivial left kernel.
    CHECK(left_kernel(from_dense({{2, 1}, {1, 1}}, 2)).rows == 0);
}

TEST_CASE("quotient_saturated") {
    Lattice sup = lat({{1, 0}, {0, 1}}, 2);
    CHECK(quotient_saturated(lat({{1, 0}}, 2), sup));
    CHECK_FALSE(quotient_saturated(lat({{2, 0}}, 2), sup));
    // Index-2 sublattice of a rank-1 lattice.
    Lattice sup1 = lat({{1, 2}}, 2);
    CHECK_FALSE(quotient_saturated(lat({{2, 4}}, 2), sup1));
    CHECK(quotient_saturated(sup1, sup1));
    CHECK_THROWS_AS(quotient_saturated(lat({{1, 1}}, 2), sup1),
                    std::invalid_argument);
}

TEST_CASE("HnfBuilder incremental ranks") {
    HnfBuilder b(3);
    CHECK(b.insert({{0, Int(1)}, {1, Int(2)}}));
    CHECK_FALSE(b.insert({{0, Int(2)}, {1, Int(4)}}));
    CHECK(b.insert({{1, Int(1)}, {2, Int(1)}}));
    CHECK(b.rank() == 2);
    CHECK(b.contains({{0, Int(1)}, {1, Int(3)}, {2, Int(1)}}));
    CHECK_FALSE(b.contains({{2, Int(1)}}));
    Lattice l = b.to_lattice();
    CHECK(l == lat({{1, 2, 0}, {0, 1, 1}}, 3));
}

TEST_CASE("randomized consistency") {
    std::mt19937_64 rng(20240817);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rnd(2, 5), m = rnd(1, 6);
        std::vector<std::vector<long long>> rows(static_cast<size_t>(m),
                                                 std::vector<long long>(static_cast<size_t>(n)));
        for (auto& r : rows)
            for (auto& x : r) x = rnd(-6, 6);
        IntMatrix mat = from_dense(rows, n);
        Lattice h = hnf(mat);

        // Idempotence and original-row membership.
        CHECK(hnf(h.basis) == h);
        for (const auto& r : rows) CHECK(member(vec(r), h));

        // Rank consistency between HNF and SNF.
        CHECK(static_cast<size_t>(h.rank()) == snf(mat).size());

        // SNF divisibility chain.
        auto d = snf(mat);
        for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);

        // Saturation agrees with "index-1 inside its saturation":
        // v in saturation iff k*v in lattice for some k != 0. Cross-check via
        // intersect with scaled full lattice is awkward; instead check that
        // saturated lattices satisfy quotient_saturated against the full
        // lattice's restriction, and that doubling a basis row breaks it
        // when rank >= 1.
        if (h.rank() >= 1) {
            IntMatrix doubled(0, n);
            for (int i = 0; i < h.basis.rows; ++i) {
                SparseRow r = h.basis.entries[static_cast<size_t>(i)];
                if (i == 0)
                    for (auto& [c, v] : r) v *= 2;
                doubled.append_row(std::move(r));
            }
            Lattice hd = hnf(doubled);
            if (hd.rank() == h.rank()) CHECK_FALSE(quotient_saturated(hd, h));
        }

        // Kernel rows annihilate the matrix.
        IntMatrix k = left_kernel(mat);
        for (const auto& krow : k.entries) {
            SparseRow combo;
            for (const auto& [idx, coef] : krow)
                row_axpy(combo, coef, mat.entries[static_cast<size_t>(idx)]);
            CHECK(combo.empty());
        }
        CHECK(k.rows == m - h.rank());

        // Intersection is contained in both and contains pairwise sums of
        // common elements (spot check: 2*lattice ∩ 3*lattice = 6*lattice).
        IntMatrix m2(0, n), m3(0, n);
        for (const auto& r : h.basis.entries) {
            SparseRow a2 = r, a3 = r;
            for (auto& [c, v] : a2) v *= 2;
            for (auto& [c, v] : a3) v *= 3;
            m2.append_row(std::move(a2));
            m3.append_row(std::move(a3));
        }
        IntMatrix m6(0, n);
        for (const auto& r : h.basis.entries) {
            SparseRow a6 = r;
            for (auto& [c, v] : a6) v *= 6;
            m6.append_row(std::move(a6));
        }
        CHECK(intersect(hnf(m2), hnf(m3)) == hnf(m6));
    }
}
