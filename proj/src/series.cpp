#include "gradedlie/series.hpp"

#include <stdexcept>

namespace gradedlie {

std::vector<Int> word_counts(const std::vector<int>& weights, int max_degree) {
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("word_counts: weights must be >= 1");
    std::vector<Int> counts(static_cast<size_t>(max_degree) + 1, Int(0));
    counts[0] = 1;
    for (int d = 1; d <= max_degree; ++d)
        for (int w : weights)
            if (w <= d) counts[static_cast<size_t>(d)] += counts[static_cast<size_t>(d - w)];
    return counts;
}

std::vector<Int> free_lie_ranks(const std::vector<int>& weights, int max_degree) {
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("free_lie_ranks: weights must be >= 1");
    const size_t D = static_cast<size_t>(max_degree);
    // f(t) = 1 - sum_i t^{w_i};  g(t) = -t f'(t) = sum_i w_i t^{w_i}.
    std::vector<Int> f(D + 1, Int(0)), g(D + 1, Int(0));
    f[0] = 1;
    for (int w : weights)
        if (w <= max_degree) {
            f[static_cast<size_t>(w)] -= 1;
            g[static_cast<size_t>(w)] += w;
        }
    // c = g / f (valid over Z because f(0) = 1): c_k = g_k - sum_{j>=1} f_j c_{k-j}.
    std::vector<Int> c(D + 1, Int(0));
    for (size_t k = 1; k <= D; ++k) {
        Int v = g[k];
        for (size_t j = 1; j <= k; ++j) v -= f[j] * c[k - j];
        c[k] = v;
    }
    // c_k = sum_{d | k} d * r_d; peel off proper divisors degree by degree.
    std::vector<Int> r(D + 1, Int(0));
    for (int k = 1; k <= max_degree; ++k) {
        Int v = c[static_cast<size_t>(k)];
        for (int d = 1; d < k; ++d)
            if (k % d == 0) v -= Int(d) * r[static_cast<size_t>(d)];
        if (v % k != 0)
            throw std::logic_error("free_lie_ranks: non-integral rank");
        r[static_cast<size_t>(k)] = v / k;
    }
    return r;
}

Int witt_rank(int n_generators, int degree) {
    if (degree < 1) throw std::invalid_argument("witt_rank: degree must be >= 1");
    // Squarefree divisors e of `degree` with their Moebius signs.
    std::vector<int> primes;
    int d = degree;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) {
            primes.push_back(p);
            while (d % p == 0) d /= p;
        }
    if (d > 1) primes.push_back(d);

    Int total = 0;
    const int np = static_cast<int>(primes.size());
    for (int mask = 0; mask < (1 << np); ++mask) {
        int e = 1, bits = 0;
        for (int i = 0; i < np; ++i)
            if (mask & (1 << i)) {
                e *= primes[static_cast<size_t>(i)];
                ++bits;
            }
        Int term = 1;
        for (int i = 0; i < degree / e; ++i) term *= n_generators;
        total += (bits % 2 == 0) ? term : -term;
    }
    if (total % degree != 0)
        throw std::logic_error("witt_rank: non-integral value");
    return total / degree;
}

namespace {

// Rising-factorial binomial C(r + m - 1, m), exact for arbitrary r >= 0.
Int repeats_choose(const Int& r, int m) {
    Int num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= r + i;
        den *= i + 1;
    }
    if (den == 0 || num % den != 0)
        throw std::logic_error("repeats_choose: non-integral binomial");
    return num / den;
}

} // namespace

Int pbw_dim(const std::vector<Int>& ranks, int degree) {
    if (degree < 0) return 0;
    std::vector<Int> acc(static_cast<size_t>(degree) + 1, Int(0));
    acc[0] = 1;
    for (int k = 1; k <= degree && static_cast<size_t>(k) < ranks.size(); ++k) {
        const Int& r = ranks[static_cast<size_t>(k)];
        if (r == 0) continue;
        if (r < 0) throw std::invalid_argument("pbw_dim: negative rank");
        // Multiply by (1 - t^k)^{-r} = sum_m C(r + m - 1, m) t^{k m}.
        std::vector<Int> next(static_cast<size_t>(degree) + 1, Int(0));
        for (int d = 0; d <= degree; ++d) {
            if (acc[static_cast<size_t>(d)] == 0) continue;
            for (int m = 0; d + k * m <= degree; ++m)
                next[static_cast<size_t>(d + k * m)] +=
                    acc[static_cast<size_t>(d)] * repeats_choose(r, m);
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(degree)];
}

} // namespace gradedlie
