#include "gradedlie/tensor_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradedlie {

int word_degree(const Word& w, const Alphabet& a) {
    int d = 0;
    for (int g : w) d += a.weight(g);
    return d;
}

AssocPoly poly_one() {
    AssocPoly p;
    p.terms.emplace(Word{}, 1);
    return p;
}

AssocPoly poly_word(Word w) {
    AssocPoly p;
    p.terms.emplace(std::move(w), 1);
    return p;
}

void add_scaled(AssocPoly& dst, const Int& c, const AssocPoly& src) {
    if (c == 0) return;
    for (const auto& [w, v] : src.terms) {
        auto it = dst.terms.find(w);
        if (it == dst.terms.end()) {
            dst.terms.emplace(w, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) dst.terms.erase(it);
        }
    }
}

AssocPoly operator+(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out = a;
    add_scaled(out, 1, b);
    return out;
}

AssocPoly operator-(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out = a;
    add_scaled(out, -1, b);
    return out;
}

AssocPoly operator*(const Int& c, const AssocPoly& a) {
    AssocPoly out;
    if (c != 0)
        for (const auto& [w, v] : a.terms) out.terms.emplace(w, c * v);
    return out;
}

AssocPoly mul(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto it = out.terms.find(w);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(w), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

AssocPoly mul_trunc(const AssocPoly& a, const AssocPoly& b, const Alphabet& al,
                    int cutoff) {
    AssocPoly out;
    for (const auto& [wa, ca] : a.terms) {
        const int da = word_degree(wa, al);
        for (const auto& [wb, cb] : b.terms) {
            if (da + word_degree(wb, al) > cutoff) continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto it = out.terms.find(w);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(w), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    return mul(a, b) - mul(b, a);
}

AssocPoly homogeneous_part(const AssocPoly& p, const Alphabet& a, int degree) {
    AssocPoly out;
    for (const auto& [w, c] : p.terms)
        if (word_degree(w, a) == degree) out.terms.emplace(w, c);
    return out;
}

std::optional<int> min_degree(const AssocPoly& p, const Alphabet& a) {
    std::optional<int> best;
    for (const auto& [w, c] : p.terms) {
        (void)c;
        const int d = word_degree(w, a);
        if (!best || d < *best) best = d;
    }
    return best;
}

AssocPoly TensorEmbed::mon(MonRef m) {
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    const BasicMon& b = basis_->at(m);
    AssocPoly out = b.is_leaf() ? poly_word({b.gen})
                                : commutator(mon(b.left), mon(b.right));
    cache_.emplace(m, out);
    return out;
}

AssocPoly TensorEmbed::operator()(const LieElement& e) {
    AssocPoly out;
    for (const auto& [m, c] : e.terms) add_scaled(out, c, mon(m));
    return out;
}

AssocPoly descent_expand(const std::vector<AssocPoly>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2)
        throw std::invalid_argument("descent_expand: need at least two factors");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    AssocPoly out;
    do {
        // Valley shape: strictly decreasing down to the minimum, then
        // strictly increasing. The sign is (-1)^(position of the minimum).
        const auto mn = std::min_element(perm.begin(), perm.end());
        const auto kappa = static_cast<int>(mn - perm.begin());
        bool shape = true;
        for (auto it = perm.begin(); it != mn && shape; ++it)
            shape = *it > *(it + 1);
        for (auto it = mn; it + 1 != perm.end() && shape; ++it)
            shape = *it < *(it + 1);
        if (!shape) continue;
        AssocPoly prod = a[static_cast<size_t>(perm[0])];
        for (int i = 1; i < n; ++i)
            prod = mul(prod, a[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
        add_scaled(out, (kappa % 2 == 0) ? Int(1) : Int(-1), prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LieElement xi_inverse(HallBasis& basis, int c_gen,
                      const std::vector<LieElement>& factors) {
    LieElement acc = basis.gen(c_gen);
    for (const auto& f : factors) acc = basis.bracket(acc, f);
    return acc;
}

bool split_bracket_identity_check(HallBasis& basis, const LieElement& a,
                                  const LieElement& b,
                                  const std::vector<LieElement>& c) {
    const int r = static_cast<int>(c.size());
    LieElement lhs = basis.bracket(a, b);
    for (const auto& ci : c) lhs = basis.bracket(lhs, ci);

    LieElement rhs;
    for (int mask = 0; mask < (1 << r); ++mask) {
        LieElement u = a, v = b;
        // Indices in the subset extend a's bracket; the rest extend b's.
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i)) u = basis.bracket(u, c[static_cast<size_t>(i)]);
        for (int i = 0; i < r; ++i)
            if (!(mask & (1 << i))) v = basis.bracket(v, c[static_cast<size_t>(i)]);
        add_scaled(rhs, 1, basis.bracket(u, v));
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Group words and Magnus expansion

GroupWord gw_gen(int g, int exponent) {
    if (exponent != 1 && exponent != -1)
        throw std::invalid_argument("gw_gen: exponent must be +1 or -1");
    return GroupWord{{{g, exponent}}};
}

GroupWord gw_mul(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.syllables.insert(out.syllables.end(), b.syllables.begin(),
                         b.syllables.end());
    return out;
}

GroupWord gw_inv(const GroupWord& a) {
    GroupWord out;
    for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
        out.syllables.emplace_back(it->first, -it->second);
    return out;
}

GroupWord gw_comm(const GroupWord& a, const GroupWord& b) {
    return gw_mul(gw_mul(gw_inv(a), gw_inv(b)), gw_mul(a, b));
}

GroupWord gw_left_normed(const std::vector<GroupWord>& args) {
    if (args.empty())
        throw std::invalid_argument("gw_left_normed: empty argument list");
    GroupWord acc = args.front();
    for (size_t i = 1; i < args.size(); ++i) acc = gw_comm(acc, args[i]);
    return acc;
}

MagnusSeries magnus(const GroupWord& w, const Alphabet& a, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("magnus: cutoff must be >= 1");
    AssocPoly acc = poly_one();
    for (const auto& [g, e] : w.syllables) {
        AssocPoly factor = poly_one();
        const int wg = a.weight(g);
        if (e == 1) {
            add_scaled(factor, 1, poly_word({g}));
        } else {
            // 1 - g + g^2 - ... : exact inverse modulo degree > cutoff.
            Word pow;
            Int sign = -1;
            for (int k = 1; k * wg <= cutoff; ++k) {
                pow.push_back(g);
                add_scaled(factor, sign, poly_word(pow));
                sign = -sign;
            }
        }
        acc = mul_trunc(acc, factor, a, cutoff);
    }
    return MagnusSeries{std::move(acc), cutoff};
}

std::optional<std::pair<int, AssocPoly>> lowest_term(const MagnusSeries& s,
                                                     const Alphabet& a) {
    std::optional<int> best;
    for (const auto& [w, c] : s.poly.terms) {
        (void)c;
        if (w.empty()) continue;
        const int d = word_degree(w, a);
        if (!best || d < *best) best = d;
    }
    if (!best) return std::nullopt;
    return std::make_pair(*best, homogeneous_part(s.poly, a, *best));
}

bool is_lie_element(const AssocPoly& p, TensorEmbed& embed) {
    if (p.is_zero()) return true;
    const Alphabet& a = embed.basis().alphabet();
    int degree = -1;
    for (const auto& [w, c] : p.terms) {
        (void)c;
        const int d = word_degree(w, a);
        if (degree == -1)
            degree = d;
        else if (degree != d)
            throw std::invalid_argument("is_lie_element: polynomial not homogeneous");
    }
    // Column space: all words seen in the embedded basis layer or in p.
    std::map<Word, int> columns;
    auto column = [&columns](const Word& w) {
        auto [it, inserted] = columns.emplace(w, static_cast<int>(columns.size()));
        (void)inserted;
        return it->second;
    };
    std::vector<AssocPoly> images;
    for (int i = 0; i < embed.basis().rank(degree); ++i)
        images.push_back(embed.mon(MonRef{degree, i}));
    for (const auto& img : images)
        for (const auto& [w, c] : img.terms) {
            (void)c;
            column(w);
        }
    for (const auto& [w, c] : p.terms) {
        (void)c;
        column(w);
    }
    HnfBuilder builder(static_cast<int>(columns.size()));
    for (const auto& img : images) {
        SparseRow row;
        for (const auto& [w, c] : img.terms) row.emplace(column(w), c);
        builder.insert(std::move(row));
    }
    SparseRow target;
    for (const auto& [w, c] : p.terms) target.emplace(column(w), c);
    return builder.contains(std::move(target));
}

} // namespace gradedlie
