// The free associative ring over Z as an independent oracle for the Lie-side
// computations: canonical embedding via iterated commutators, the
// descent-class (valley permutation) expansion of left-normed brackets, a
// split-permutation bracket identity, and truncated Magnus expansions of
// free-group words with lowest-term extraction and an exact Lie-ness test.

#ifndef GRADEDLIE_TENSOR_ORACLE_HPP
#define GRADEDLIE_TENSOR_ORACLE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gradedlie/core_lie.hpp"

namespace gradedlie {

// A word in the free monoid on generator ids.
using Word = std::vector<int>;

int word_degree(const Word& w, const Alphabet& a);

// Sparse integer polynomial on words (element of the tensor algebra).
struct AssocPoly {
    std::map<Word, Int> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const AssocPoly&) const = default;
};

AssocPoly poly_one();             // the empty word with coefficient 1
AssocPoly poly_word(Word w);      // a single word
void add_scaled(AssocPoly& dst, const Int& c, const AssocPoly& src);
AssocPoly operator+(const AssocPoly& a, const AssocPoly& b);
AssocPoly operator-(const AssocPoly& a, const AssocPoly& b);
AssocPoly operator*(const Int& c, const AssocPoly& a);
AssocPoly mul(const AssocPoly& a, const AssocPoly& b); // concatenation product
// Concatenation product dropping words of degree > cutoff.
AssocPoly mul_trunc(const AssocPoly& a, const AssocPoly& b, const Alphabet& al,
                    int cutoff);
AssocPoly commutator(const AssocPoly& a, const AssocPoly& b); // ab - ba
AssocPoly homogeneous_part(const AssocPoly& p, const Alphabet& a, int degree);
std::optional<int> min_degree(const AssocPoly& p, const Alphabet& a);

// Canonical embedding of the free Lie ring into the tensor algebra, with a
// per-monomial cache (subtrees repeat heavily across a Hall layer).
class TensorEmbed {
public:
    explicit TensorEmbed(const HallBasis* basis) : basis_(basis) {}

    const HallBasis& basis() const { return *basis_; }
    AssocPoly mon(MonRef m);
    AssocPoly operator()(const LieElement& e);

private:
    const HallBasis* basis_;
    std::map<MonRef, AssocPoly> cache_;
};

// Sum over valley permutations (strictly decreasing prefix, then strictly
// increasing from the minimum) of signed products a_{s(1)} ... a_{s(n)},
// sign = (-1)^(descent prefix length). Equals the commutator expansion of the
// left-normed bracket [a_1, ..., a_n] when the inputs are Lie elements.
AssocPoly descent_expand(const std::vector<AssocPoly>& a);

// Left-normed bracket [c, f_1, ..., f_k] in Hall coordinates (the inverse of
// the tensor-splitting map on c (x) f_1 ... f_k).
LieElement xi_inverse(HallBasis& basis, int c_gen,
                      const std::vector<LieElement>& factors);

// Checks [a,b,c_1,...,c_r] = sum over i-subsets S of {1..r} (S and its
// complement taken in increasing order) of [[a, c_S], [b, c_{S^c}]], exactly
// in Hall coordinates.
bool split_bracket_identity_check(HallBasis& basis, const LieElement& a,
                                  const LieElement& b,
                                  const std::vector<LieElement>& c);

// Free-group words: (generator id, exponent) with exponents +1 or -1.
struct GroupWord {
    std::vector<std::pair<int, int>> syllables;
};

GroupWord gw_gen(int g, int exponent = 1);
GroupWord gw_mul(const GroupWord& a, const GroupWord& b);
GroupWord gw_inv(const GroupWord& a);
GroupWord gw_comm(const GroupWord& a, const GroupWord& b); // a^-1 b^-1 a b
// [a_1, a_2, ..., a_k] as iterated group commutators, associated to the left.
GroupWord gw_left_normed(const std::vector<GroupWord>& args);

struct MagnusSeries {
    AssocPoly poly;
    int cutoff = 0;
};

// g |-> 1 + g, g^-1 |-> 1 - g + g^2 - ..., truncated above `cutoff`.
MagnusSeries magnus(const GroupWord& w, const Alphabet& a, int cutoff);

// Smallest positive degree with a nonzero homogeneous part, and that part;
// nullopt when the series is 1 up to its cutoff.
std::optional<std::pair<int, AssocPoly>> lowest_term(const MagnusSeries& s,
                                                     const Alphabet& a);

// Membership of a homogeneous polynomial in the lattice spanned by the
// embedded Hall basis of its degree.
bool is_lie_element(const AssocPoly& p, TensorEmbed& embed);

} // namespace gradedlie

#endif
