// Generating-function helpers for graded ranks, all over exact integers:
//  * word_counts: dimensions of the tensor algebra on a weighted alphabet,
//  * free_lie_ranks: ranks of the free Lie algebra on a weighted alphabet,
//    obtained from 1/(1 - sum_i t^{w_i}) = prod_k (1 - t^k)^{-r_k} by
//    logarithmic differentiation and Moebius-style peeling,
//  * witt_rank: the classical necklace formula (unweighted cross-check),
//  * pbw_dim: coefficient of t^degree in prod_k (1 - t^k)^{-r_k}, i.e. the
//    size of a weakly-increasing-monomial basis over a graded module with
//    r_k basis elements in degree k.

#ifndef GRADEDLIE_SERIES_HPP
#define GRADEDLIE_SERIES_HPP

#include <vector>

#include "gradedlie/bigint.hpp"

namespace gradedlie {

// counts[d] = number of words of total weight d, for d = 0..max_degree
// (counts[0] = 1). All weights must be >= 1.
std::vector<Int> word_counts(const std::vector<int>& weights, int max_degree);

// ranks[d] = rank of the degree-d layer of the free Lie ring on generators of
// the given weights, for d = 0..max_degree (ranks[0] = 0).
std::vector<Int> free_lie_ranks(const std::vector<int>& weights, int max_degree);

// Necklace formula for n generators of weight 1:
// r_d = (1/d) * sum_{e | d} mu(e) * n^{d/e}.
Int witt_rank(int n_generators, int degree);

// ranks[k] (k >= 1; ranks[0] ignored, missing entries are 0) gives the graded
// ranks of a free Z-module; returns the degree-`degree` coefficient of
// prod_k (1 - t^k)^{-ranks[k]}.
Int pbw_dim(const std::vector<Int>& ranks, int degree);

} // namespace gradedlie

#endif
