// Partial commutation relations and the Lazard-elimination machinery for
// right-angled Artin group Lie rings.
//
// Given a symmetric irreflexive relation theta on n vertices, the relator
// ideal I of the free Lie ring on y_1..y_n is generated by the brackets
// [y_a, y_b] over the selected pairs (a, b), a > b, of theta. This module
// computes I degree by degree (exact integer lattices in Hall coordinates),
// the quotient ranks, and an explicit elimination decomposition
//     L(Y) = <Y> (+) L(B_3) (+) ... (+) L(B_n) (+) I,
// where each B_j and each layer of I is the evaluated Hall basis of a free
// Lie ring on an explicitly constructed generating set, obtained one
// generator at a time:
//
//   * the current algebra's basis is organized into ordered blocks
//     (generators first, then earlier B-blocks, then ideal blocks);
//   * weakly increasing products of basis elements (PBW words) of bounded
//     degree index a free generating set {[y_new, word]} of the complement
//     of the current algebra (Lazard elimination refined by PBW);
//   * each word is rearranged so that generator letters commuting with the
//     new generator move (stably) to the front;
//   * words with a commuting front or an ideal letter contribute new ideal
//     generators D_{k+1} = {[p, q_1, ..., q_m]}; the remaining words P''
//     contribute the new free block B_{k+1} = {[p, y_new, ..., y_new]}.

#ifndef GRADEDLIE_PCOMMUTE_HPP
#define GRADEDLIE_PCOMMUTE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/core_lie.hpp"
#include "gradedlie/series.hpp"
#include "gradedlie/zmodule.hpp"

namespace gradedlie {

// Vertices are labeled 1..n. Pairs may be given in either orientation.
struct PartialCommutation {
    int n = 0;
    std::set<std::pair<int, int>> pairs;
};

// Symmetric-closed, validated and (if nonempty) relabeled so that (2,1) is a
// selected pair; all internal computations use relabeled vertices, while
// generator names carry the original labels so rendered output needs no
// translation.
struct ValidatedTheta {
    int n = 0;
    bool is_empty = true;
    std::set<std::pair<int, int>> closure; // relabeled, symmetric
    std::set<std::pair<int, int>> delta;   // relabeled, {(a,b): a > b}
    std::vector<int> to_original;          // index 1..n -> original label

    bool commutes(int a, int b) const { return closure.count({a, b}) > 0; }
    // Weight-1 alphabet y_<original label>, in relabeled order.
    Alphabet alphabet() const;
};

ValidatedTheta validate(const PartialCommutation& theta);

// Per-degree integer row spans in Hall coordinates.
struct GradedIdeal {
    int max_degree = 0;
    std::vector<Lattice> per_degree; // index 0..max_degree

    int rank(int d) const { return per_degree.at(static_cast<size_t>(d)).rank(); }
    const Lattice& at(int d) const { return per_degree.at(static_cast<size_t>(d)); }
};

// Smallest graded ideal containing the given homogeneous elements, computed
// by degree-ascending closure under bracketing with the alphabet generators.
GradedIdeal ideal_generate(HallBasis& basis, const std::vector<LieElement>& gens,
                           int max_degree);

// True iff every degree layer satisfies [I^d, y] <= I^{d + deg y}.
bool bracket_closed(const GradedIdeal& ideal, HallBasis& basis);

// Membership of a homogeneous element in the ideal's layer of its degree.
bool ideal_contains(const GradedIdeal& ideal, HallBasis& basis,
                    const LieElement& e);

// Defining relators [y_a, y_b] for the selected pairs of theta.
std::vector<LieElement> raag_relators(HallBasis& basis, const ValidatedTheta& theta);

// Quotient ranks rank_d L(Y)/I for d = 0..max_degree; checks that every
// layer of I is saturated (torsion-free quotient) and throws otherwise.
std::vector<Int> raag_ranks(const ValidatedTheta& theta, int max_degree);

// ---------------------------------------------------------------------------
// Elimination machinery

// An element of the ambient algebra together with its defining bracket tree.
struct NamedElement {
    ExprPtr tree;
    LieElement value;
    int degree = 0;
};

NamedElement named_generator(HallBasis& basis, int gen_id);
NamedElement named_from_expr(HallBasis& basis, const ExprPtr& tree);

// The free Lie ring on an abstract alphabet of ambient elements: a Hall basis
// over generators weighted by their ambient degrees, with every abstract
// basic monomial evaluated in the ambient algebra.
class DerivedBlock {
public:
    DerivedBlock() = default;
    DerivedBlock(HallBasis* ambient, std::vector<NamedElement> gens, int max_degree);

    const std::vector<NamedElement>& gens() const { return gens_; }
    int count(int degree) const;
    const LieElement& basis_value(int degree, int i) const;
    const ExprPtr& basis_tree(int degree, int i) const;
    // Row span of the evaluated basis in the given ambient degree.
    Lattice lattice(int degree) const;

private:
    HallBasis* ambient_ = nullptr;
    int max_degree_ = 0;
    std::vector<NamedElement> gens_;
    std::vector<std::vector<LieElement>> values_; // by ambient degree
    std::vector<std::vector<ExprPtr>> trees_;
};

// Ordered block structure of a partially eliminated algebra: generator
// letters first, then free blocks B_j, then ideal blocks D_j.
struct BlockState {
    HallBasis* ambient = nullptr;
    int max_degree = 0;
    std::vector<NamedElement> generators;
    std::vector<DerivedBlock> b_blocks;
    std::vector<DerivedBlock> ideal_blocks;

    // Stacked ideal-layer lattices over all ideal blocks.
    GradedIdeal ideal_lattice() const;
    // True iff generator letters, B-block bases and ideal bases together form
    // a Z-basis of every degree layer of the ambient algebra.
    bool decomposition_is_basis() const;
};

struct StepCounts {
    // Word counts by word degree (0..max): front-commuting words, ideal-letter
    // words (with commuting-free front), and the remaining words P''.
    std::vector<int> p1, p2, pss;
};

struct StepOutcome {
    std::vector<NamedElement> b_gens;       // wreath of P'' \ {empty} over the new generator
    std::vector<NamedElement> d_gens;       // [p, q_1..q_m], p with commuting front or ideal letter
    std::vector<NamedElement> pss_elements; // all P'' elements (the new generator first)
    StepCounts counts;
};

// One Lazard elimination step adjoining `new_gen` to the algebra described by
// `state`. `commuting_positions` lists 0-based positions into
// `state.generators` of the generator letters that commute with the new
// generator (and therefore move to the front on rearrangement). The state is
// not modified.
StepOutcome elim_step(const BlockState& state, const NamedElement& new_gen,
                      const std::set<int>& commuting_positions);

// Sorted power word over relabeled vertices 1..k, stably reordered so that
// letters commuting with vertex `next` come first.
std::vector<int> rearrange(const std::vector<int>& sorted_word,
                           const ValidatedTheta& theta, int next);

// The full induction over the relabeled vertices 2..n, run inside `basis`.
// The basis may have more generators than the commutation relation covers
// (extra letters are simply never touched); generator ids 0..n-1 must be the
// relabeled vertices in order. `outcomes[k]` is the step adjoining vertex
// k+2; the final state's ideal blocks are D_2, ..., D_n and its free blocks
// are B_2 (empty), B_3, ..., B_n.
struct YInduction {
    std::vector<StepOutcome> outcomes;
    BlockState state;
};

YInduction y_induction(HallBasis& basis, const ValidatedTheta& vt,
                       int max_degree);

// ---------------------------------------------------------------------------
// Full elimination run

struct ElimStepReport {
    int adjoined_original_label = 0;
    std::string adjoined_name;
    std::vector<std::string> b_generators; // rendered, degree <= cutoff
    std::vector<std::string> d_generators;
    StepCounts counts;
};

struct EliminationReport {
    int n = 0;
    int max_degree = 0;
    std::vector<int> vertex_order; // relabeled index 1..n -> original label
    std::vector<ElimStepReport> steps;

    std::vector<Int> witt;                      // ambient ranks, index 0..D
    std::vector<int> generator_rank;            // per degree
    std::vector<std::vector<int>> b_block_ranks; // per step block, per degree
    std::vector<int> ideal_rank;                // per degree
    std::vector<Int> quotient_rank;             // witt - ideal rank
    GradedIdeal ideal;

    bool decomposition_is_basis = false;
    bool ideal_matches_generated = false;

    bool all_checks_pass() const {
        return decomposition_is_basis && ideal_matches_generated;
    }
};

EliminationReport eliminate(const PartialCommutation& theta, int max_degree);

} // namespace gradedlie

#endif
