// Freeness certificates for the relation module of a graded Lie ring.
//
// Fix a free graded Lie ring L on a weighted alphabet and a graded ideal
// I <= L given by finitely many homogeneous relators.  The abelianized ideal
// I/[I,I] is a graded module over the universal envelope of L/I, with the
// relator classes as distinguished generators.  When that module is free on
// those generators its graded ranks are forced:
//
//     rank (I/[I,I])_d  =  sum_r  pbw_dim(ranks of L/I, d - deg r),
//
// where pbw_dim counts weakly increasing monomials over a graded basis of
// L/I.  check_freeness computes both sides exactly over Z, degree by degree,
// together with two structural certificates that make the comparison honest:
//
//   * saturation: [I,I]_d is a direct summand of I_d, so the quotient
//     I_d/[I,I]_d is torsion-free and its rank is the full story;
//   * surjectivity: the left-normed brackets [r, g_1, ..., g_k] of the
//     relators by alphabet generators span I_d modulo [I,I]_d, i.e. the
//     relator classes really generate the module in degree d.
//
// A report whose ranks match and whose certificates all hold is the finite,
// machine-checkable rendering of "I/[I,I] is a free module on the relator
// images" through the chosen degree.

#ifndef GRADEDLIE_MODULE_FREENESS_HPP
#define GRADEDLIE_MODULE_FREENESS_HPP

#include <vector>

#include "gradedlie/bigint.hpp"
#include "gradedlie/core_lie.hpp"
#include "gradedlie/pcommute.hpp"

namespace gradedlie {

// Derived ideal [I,I], degree by degree: layer d is the Hermite normal form
// of the spans of [u, v] over basis rows u of I_p and v of I_q with p+q = d.
// Requires ideal.max_degree >= max_degree.
GradedIdeal gamma2(HallBasis& basis, const GradedIdeal& ideal, int max_degree);

struct FreenessReport {
    int max_degree = 0;

    // Index 0 is unused in every per-degree vector below.
    std::vector<Int> quotient;      // rank (L/I)_d = rank L_d - rank I_d
    std::vector<int> ideal_rank;    // rank I_d
    std::vector<int> gamma2_rank;   // rank [I,I]_d
    std::vector<Int> actual;        // ideal_rank - gamma2_rank
    std::vector<Int> predicted;     // sum_r pbw_dim(quotient, d - deg r)
    std::vector<char> saturated;    // [I,I]_d saturated in I_d
    std::vector<char> surjective;   // relator ad-images span I_d mod [I,I]_d

    // Precondition: the relators must regenerate the ideal they present.
    // When this is false the rank comparison is meaningless and the report
    // fails regardless of the other columns.
    bool relators_generate = false;

    // relators_generate, and for every degree 1..max_degree: saturated,
    // surjective, and actual == predicted.
    bool all_checks_pass() const;
};

// Compares the graded ranks of I/[I,I] against the free-module prediction.
// `relators` must be homogeneous elements of `ideal`; their generating the
// ideal is verified, not assumed.  Requires ideal.max_degree >= max_degree.
FreenessReport check_freeness(HallBasis& basis, const GradedIdeal& ideal,
                              const std::vector<LieElement>& relators,
                              int max_degree);

} // namespace gradedlie

#endif
