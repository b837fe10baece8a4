#ifndef GRADEDLIE_FP_IDEAL_HPP
#define GRADEDLIE_FP_IDEAL_HPP

// The Formanek-Procesi relator ideal over a right-angled Artin base group.
//
// The group FP(H) for a raag H on n vertices has the presentation
//   < s, y_1, ..., y_n | [s,y_k,y_l] = [y_r,y_s] = [[s,y_r],[s,y_s]] = 1 >
// with k, l ranging over all vertices and (r, s) over the commuting pairs.
// Its graded Lie ring is the free Lie ring on {y_1, ..., y_n, s} modulo the
// ideal J generated by the corresponding Lie relators.  This module builds
// J degree by degree, computes the graded ranks of the quotient, and splits
// J into the block summands produced by iterated Lazard elimination:
//
//   J = gamma_2-part of the raag ideal  (+)  its image under y_i -> [s,y_i]
//       (+)  the degree-2 wreath blocks from eliminating s
//       (+)  the ideal generated by the cubic relators [s,y_i,y_j].
//
// All lattices are exact (integer HNF); every claimed direct sum is checked
// by rank addition plus lattice equality against an independently generated
// ideal.

#include "gradedlie/pcommute.hpp"

#include <string>
#include <vector>

namespace gradedlie {

// ---------------------------------------------------------------------------
// Presentation and relators

struct FPPresentation {
    ValidatedTheta theta; // validated, possibly relabeled commutation relation
    int n = 0;            // number of raag generators; alphabet adds s

    // {y_1, ..., y_n, s}: raag letters first (ids 0..n-1, relabeled order),
    // then s with id n.  All of degree 1.
    Alphabet alphabet() const;
    int s_id() const { return n; }
};

// Validates theta (n >= 2); theta may be empty (free base group).
FPPresentation make_fp(const PartialCommutation& theta);

struct RelatorSets {
    std::vector<NamedElement> r2; // [y_a, y_b], one per commuting pair
    std::vector<NamedElement> r3; // [s, y_k, y_l], all n^2 ordered pairs
    std::vector<NamedElement> r4; // [[s, y_a], [s, y_b]], one per pair

    std::vector<NamedElement> all() const;
};

// The three relator families as elements of the given Hall basis, which must
// extend the presentation's alphabet to degree >= 4.
RelatorSets fp_relators(const FPPresentation& p, HallBasis& basis);

// Negative-control variant: the first cubic relator is replaced by its
// bracket with y_1, which breaks the freeness and provenance properties
// while keeping every element homogeneous.
RelatorSets fp_relators_corrupted(const FPPresentation& p, HallBasis& basis);

// ---------------------------------------------------------------------------
// The weighted algebra on {w_1, ..., w_n, s}, deg w_i = 2, deg s = 1.
//
// The substitution y_i -> [s, y_i], s -> s embeds the free Lie ring on the
// y's isomorphically onto the subring generated by the brackets [s, y_i];
// the abstract counterpart replaces each y_i by a fresh degree-2 letter w_i.

struct OmegaAlgebra {
    int n = 0;
    Alphabet alphabet() const; // w_i at ids 0..n-1 (degree 2), s at id n
};

// Abstract transport: reinterpret a tree over {y_1..y_n, s} as a tree over
// {w_1..w_n, s} and evaluate it in `omega`.  Degrees double on y-letters.
LieElement psi_map(HallBasis& src, const LieElement& u, HallBasis& omega);

// Concrete substitution y_i -> [s, y_i] on trees over the FP alphabet.
ExprPtr psi_expr(const ExprPtr& tree, int s_id);

// ---------------------------------------------------------------------------
// Graded ranks of the quotient

struct FPReport {
    int n = 0;
    int max_degree = 0;
    std::vector<Int> witt;        // ambient ranks of the free Lie ring, 0..D
    std::vector<int> j_rank;      // rank of J per degree
    std::vector<Int> gr_rank;     // witt - j_rank: graded ranks of FP(H)
    std::vector<bool> saturated;  // J is a direct summand per degree
    // J restricted to the subring on the y's equals the raag relator ideal.
    std::vector<bool> restriction_ok;
    GradedIdeal j;

    bool all_checks_pass() const;
};

FPReport fp_graded_ranks(const FPPresentation& p, int max_degree);

// ---------------------------------------------------------------------------
// Block decomposition of J

struct FPPiece {
    std::string name;
    std::vector<int> rank; // per degree 0..D
};

struct FPDecomposition {
    int n = 0;
    int max_degree = 0;
    std::vector<FPPiece> pieces;
    std::vector<int> j_rank;              // rank of J per degree
    std::vector<bool> independent;        // piece ranks add up per degree
    std::vector<bool> spans_j;            // stacked lattice equals J per degree
    // Inherited from the raag-side induction: whether its ideal blocks
    // regenerate the raag relator ideal (fails for four-cycle-type graphs).
    bool y_side_matches = false;

    bool all_checks_pass() const;
};

FPDecomposition decompose_J(const FPPresentation& p, int max_degree);

// ---------------------------------------------------------------------------
// The two-factor splitting of the quotient

struct SplitReport {
    int n = 0;
    int max_degree = 0;
    std::vector<Int> raag_part;     // graded ranks of the raag
    std::vector<Int> omega_part;    // graded ranks of L(Omega)/(w-relators)
    std::vector<Int> gr_rank;       // graded ranks of FP(H)
    std::vector<bool> split_ok;     // gr = raag + omega per degree
    std::vector<bool> omega_saturated;

    bool all_checks_pass() const;
};

SplitReport corollary_split(const FPPresentation& p, int max_degree);

// ---------------------------------------------------------------------------
// Free base group (empty commutation relation)

struct ThetaEmptyReport {
    int n = 0;
    int max_degree = 0;
    std::vector<Int> witt;       // ranks of the free Lie ring on n+1 letters
    std::vector<int> y_rank;     // free subring on the y's
    std::vector<int> omega_rank; // free subring on {s, [s,y_i]}
    std::vector<int> j_rank;     // ideal generated by the cubic relators
    // Per degree: the three pieces are independent and fill the ambient
    // layer completely.
    std::vector<bool> complete;

    bool all_checks_pass() const;
};

ThetaEmptyReport theta_empty_case(int n, int max_degree);

} // namespace gradedlie

#endif
