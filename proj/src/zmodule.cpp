#include "gradedlie/zmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradedlie {

void row_axpy(SparseRow& dst, const Int& coef, const SparseRow& src) {
    if (coef == 0) return;
    for (const auto& [c, v] : src) {
        auto it = dst.find(c);
        if (it == dst.end()) {
            dst.emplace(c, coef * v);
        } else {
            it->second += coef * v;
            if (it->second == 0) dst.erase(it);
        }
    }
}

Int IntMatrix::get(int r, int c) const {
    const auto& row = entries.at(static_cast<size_t>(r));
    auto it = row.find(c);
    return it == row.end() ? Int(0) : it->second;
}

void IntMatrix::set(int r, int c, Int v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::invalid_argument("IntMatrix::set: index out of range");
    auto& row = entries[static_cast<size_t>(r)];
    if (v == 0)
        row.erase(c);
    else
        row[c] = std::move(v);
}

void IntMatrix::append_row(SparseRow row) {
    if (!row.empty() && (row.begin()->first < 0 || row.rbegin()->first >= cols))
        throw std::invalid_argument("IntMatrix::append_row: column out of range");
    for (auto it = row.begin(); it != row.end();)
        it = (it->second == 0) ? row.erase(it) : std::next(it);
    entries.push_back(std::move(row));
    ++rows;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Lattice zero_lattice(int ambient_dim) {
    return Lattice{ambient_dim, IntMatrix(0, ambient_dim)};
}

Lattice full_lattice(int ambient_dim) {
    return Lattice{ambient_dim, IntMatrix::identity(ambient_dim)};
}

// ---------------------------------------------------------------------------
// HnfBuilder

bool HnfBuilder::insert(SparseRow row) {
    for (auto it = row.begin(); it != row.end();)
        it = (it->second == 0) ? row.erase(it) : std::next(it);
    while (!row.empty()) {
        const int lead = row.begin()->first;
        if (lead < 0 || lead >= cols_)
            throw std::invalid_argument("HnfBuilder::insert: column out of range");
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            if (row.begin()->second < 0)
                for (auto& [c, v] : row) v = -v;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        // Euclidean elimination in column `lead` between `row` and the pivot.
        SparseRow& piv = it->second;
        for (;;) {
            const Int q = row.begin()->second / piv.begin()->second;
            row_axpy(row, -q, piv);
            auto rl = row.find(lead);
            if (rl == row.end() || rl->second == 0) break;
            // Remainder nonzero (truncated division): swap so the smaller
            // leading entry becomes the pivot and continue.
            std::swap(row, piv);
        }
        // row's leading column is now strictly greater than `lead`.
    }
    return false;
}

bool HnfBuilder::contains(SparseRow row) const {
    for (auto it = row.begin(); it != row.end();)
        it = (it->second == 0) ? row.erase(it) : std::next(it);
    while (!row.empty()) {
        const int lead = row.begin()->first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) return false;
        const SparseRow& piv = it->second;
        const Int& p = piv.begin()->second;
        if (row.begin()->second % p != 0) return false;
        row_axpy(row, -(row.begin()->second / p), piv);
    }
    return true;
}

Lattice HnfBuilder::to_lattice() const {
    // Pivot rows, by increasing pivot column, with positive leading entries.
    std::vector<SparseRow> rows;
    rows.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) {
        (void)c;
        rows.push_back(r);
        if (rows.back().begin()->second < 0)
            for (auto& [cc, v] : rows.back()) v = -v;
    }
    // Reduce entries above each pivot into [0, pivot).
    for (size_t i = 0; i < rows.size(); ++i) {
        const int pc = rows[i].begin()->first;
        const Int& p = rows[i].begin()->second;
        for (size_t j = 0; j < i; ++j) {
            auto it = rows[j].find(pc);
            if (it == rows[j].end()) continue;
            const Int q = floor_div(it->second, p);
            if (q != 0) row_axpy(rows[j], -q, rows[i]);
        }
    }
    Lattice out{cols_, IntMatrix(0, cols_)};
    for (auto& r : rows) out.basis.append_row(std::move(r));
    return out;
}

Lattice hnf(const IntMatrix& m) {
    HnfBuilder b(m.cols);
    for (const auto& row : m.entries) b.insert(row);
    return b.to_lattice();
}

// ---------------------------------------------------------------------------
// Smith normal form (dense working copy; inputs here stay modest in size).

std::vector<Int> snf(const IntMatrix& m) {
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<Int>> a(static_cast<size_t>(R),
                                    std::vector<Int>(static_cast<size_t>(C), Int(0)));
    for (int i = 0; i < R; ++i)
        for (const auto& [c, v] : m.entries[static_cast<size_t>(i)])
            a[static_cast<size_t>(i)][static_cast<size_t>(c)] = v;

    auto row_sub = [&](int i, const Int& q, int t) {
        if (q == 0) return;
        for (int c = 0; c < C; ++c) a[i][c] -= q * a[t][c];
    };
    auto col_sub = [&](int j, const Int& q, int t) {
        if (q == 0) return;
        for (int r = 0; r < R; ++r) a[r][j] -= q * a[r][t];
    };

    std::vector<Int> divisors;
    int t = 0;
    while (t < R && t < C) {
        // Locate a nonzero entry of minimal absolute value in the trailing block.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || abs_int(a[i][j]) < best)) {
                    pi = i; pj = j; best = abs_int(a[i][j]);
                }
        if (pi < 0) break;
        std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(pi)]);
        if (pj != t)
            for (int r = 0; r < R; ++r)
                std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(t)],
                          a[static_cast<size_t>(r)][static_cast<size_t>(pj)]);

        for (;;) {
            // Clear column t below the pivot.
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                row_sub(i, a[i][t] / a[t][t], t);
                if (a[i][t] != 0) { // nonzero remainder: smaller pivot found
                    std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Clear row t to the right of the pivot.
            for (int j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                col_sub(j, a[t][j] / a[t][t], t);
                if (a[t][j] != 0) {
                    for (int r = 0; r < R; ++r)
                        std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(t)],
                                  a[static_cast<size_t>(r)][static_cast<size_t>(j)]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = true;
            for (int i = t + 1; i < R && fixed; ++i)
                for (int j = t + 1; j < C && fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int c = 0; c < C; ++c) a[t][c] += a[i][c];
                        fixed = false;
                    }
            if (fixed) break;
        }
        divisors.push_back(abs_int(a[static_cast<size_t>(t)][static_cast<size_t>(t)]));
        ++t;
    }
    return divisors;
}

bool is_saturated(const Lattice& sub) {
    for (const Int& d : snf(sub.basis))
        if (d != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Membership / coordinates against a canonical basis.

namespace {

// Reduces v by the basis rows (which are in echelon form); records the
// coefficient of each row if coords != nullptr. Returns true iff v reduces
// to zero over Z.
bool reduce_by_basis(std::vector<Int> v, const Lattice& sub,
                     std::vector<Int>* coords) {
    if (static_cast<int>(v.size()) != sub.ambient_dim)
        throw std::invalid_argument("member: dimension mismatch");
    if (coords) coords->assign(static_cast<size_t>(sub.rank()), Int(0));
    for (int i = 0; i < sub.basis.rows; ++i) {
        const SparseRow& row = sub.basis.entries[static_cast<size_t>(i)];
        const int pc = row.begin()->first;
        const Int& p = row.begin()->second;
        const Int& val = v[static_cast<size_t>(pc)];
        if (val == 0) continue;
        if (val % p != 0) return false;
        const Int q = val / p;
        for (const auto& [c, w] : row) v[static_cast<size_t>(c)] -= q * w;
        if (coords) (*coords)[static_cast<size_t>(i)] = q;
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

SparseRow to_sparse(const std::vector<Int>& v) {
    SparseRow r;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r.emplace(static_cast<int>(i), v[i]);
    return r;
}

} // namespace

bool member(const std::vector<Int>& v, const Lattice& sub) {
    return reduce_by_basis(v, sub, nullptr);
}

std::optional<std::vector<Int>> coords_in(const std::vector<Int>& v,
                                          const Lattice& sub) {
    std::vector<Int> coords;
    if (!reduce_by_basis(v, sub, &coords)) return std::nullopt;
    return coords;
}

// ---------------------------------------------------------------------------
// Sums, intersections, quotients.

std::pair<int, bool> sum_rank(const std::vector<Lattice>& subs) {
    if (subs.empty()) return {0, true};
    const int n = subs.front().ambient_dim;
    HnfBuilder b(n);
    int rank_total = 0;
    for (const auto& s : subs) {
        if (s.ambient_dim != n)
            throw std::invalid_argument("sum_rank: ambient dimension mismatch");
        rank_total += s.rank();
        for (const auto& row : s.basis.entries) b.insert(row);
    }
    return {b.rank(), b.rank() == rank_total};
}

Lattice sum_lattice(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("sum_lattice: ambient dimension mismatch");
    HnfBuilder builder(a.ambient_dim);
    for (const auto& row : a.basis.entries) builder.insert(row);
    for (const auto& row : b.basis.entries) builder.insert(row);
    return builder.to_lattice();
}

IntMatrix left_kernel(const IntMatrix& m) {
    // Augment each row with an identity tail (columns m.cols .. m.cols+m.rows)
    // and run the echelon reduction; rows whose matrix part vanishes carry the
    // kernel combination in their tail. All operations are row operations on
    // the augmented rows, so the tails of pivot rows plus collected kernel
    // rows form a unimodular transform and the kernel rows are a basis.
    const int n = m.cols, k = m.rows;
    std::map<int, SparseRow> pivots;
    IntMatrix kernel(0, k);
    for (int i = 0; i < k; ++i) {
        SparseRow row = m.entries[static_cast<size_t>(i)];
        row.emplace(n + i, Int(1));
        while (true) {
            // Leading column within the matrix part.
            auto lead_it = row.begin();
            if (lead_it == row.end() || lead_it->first >= n) break;
            const int lead = lead_it->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                row.clear();
                break;
            }
            SparseRow& piv = it->second;
            for (;;) {
                const Int q = row.begin()->second / piv.begin()->second;
                row_axpy(row, -q, piv);
                auto rl = row.find(lead);
                if (rl == row.end()) break;
                std::swap(row, piv);
            }
        }
        if (!row.empty() && row.begin()->first >= n) {
            SparseRow tail;
            for (const auto& [c, v] : row) tail.emplace(c - n, v);
            kernel.append_row(std::move(tail));
        }
    }
    return kernel;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    // Stack the bases; a left-kernel row (x | y) gives x*A = -y*B, an element
    // of the intersection, and all such elements arise this way.
    IntMatrix stacked(0, a.ambient_dim);
    for (const auto& row : a.basis.entries) stacked.append_row(row);
    for (const auto& row : b.basis.entries) stacked.append_row(row);
    IntMatrix ker = left_kernel(stacked);
    HnfBuilder builder(a.ambient_dim);
    for (const auto& krow : ker.entries) {
        SparseRow elem;
        for (const auto& [idx, coef] : krow) {
            if (idx < a.basis.rows)
                row_axpy(elem, coef, a.basis.entries[static_cast<size_t>(idx)]);
        }
        builder.insert(std::move(elem));
    }
    return builder.to_lattice();
}

bool quotient_saturated(const Lattice& sub, const Lattice& sup) {
    if (sub.ambient_dim != sup.ambient_dim)
        throw std::invalid_argument("quotient_saturated: ambient dimension mismatch");
    // Coordinates of sub's basis in sup's basis; the quotient sup/sub is
    // torsion-free iff the coordinate matrix has all elementary divisors 1.
    IntMatrix coords(0, sup.rank());
    for (const auto& row : sub.basis.entries) {
        std::vector<Int> dense(static_cast<size_t>(sub.ambient_dim), Int(0));
        for (const auto& [c, v] : row) dense[static_cast<size_t>(c)] = v;
        auto c = coords_in(dense, sup);
        if (!c)
            throw std::invalid_argument(
                "quotient_saturated: sub is not contained in sup");
        coords.append_row(to_sparse(*c));
    }
    for (const Int& d : snf(coords))
        if (d != 1) return false;
    return true;
}

} // namespace gradedlie
