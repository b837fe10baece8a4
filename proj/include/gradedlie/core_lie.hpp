// Free Lie rings over Z on a weighted alphabet, with an explicit Hall basis
// (M. Hall basic commutators) per degree and exact rewriting of arbitrary
// brackets into that basis.
//
// Basis scheme. Generators are totally ordered by (weight, id). A bracket
// [u, v] of basic monomials is again basic iff u > v and, when u = [u1, u2],
// additionally u2 <= v. The global order on basic monomials is: total degree
// first; within a degree, leaves precede composite nodes, leaves sort by
// generator id, and nodes sort lexicographically by (left, right). Basic
// monomials are therefore addressed by MonRef = (degree, index-within-layer),
// and MonRef's lexicographic order *is* the Hall order.
//
// Rewriting. For u > v with [u, v] not basic, u must be a node [u1, u2] with
// u2 > v, and the Jacobi identity gives
//     [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]].
// Every monomial appearing on the right pairs two basics whose minimum is
// strictly larger (in the Hall order) than v, so recursion terminates within
// each total degree. Results are memoized per ordered pair.

#ifndef GRADEDLIE_CORE_LIE_HPP
#define GRADEDLIE_CORE_LIE_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/bigint.hpp"
#include "gradedlie/zmodule.hpp"

namespace gradedlie {

struct Alphabet {
    std::vector<std::string> names;
    std::vector<int> weights; // all >= 1, parallel to names

    int size() const { return static_cast<int>(names.size()); }
    int weight(int g) const { return weights.at(static_cast<size_t>(g)); }
    const std::string& name(int g) const { return names.at(static_cast<size_t>(g)); }
};

// Address of a basic monomial: (total degree, index within the degree layer).
struct MonRef {
    int deg = 0;
    int idx = -1;
    auto operator<=>(const MonRef&) const = default;
};

struct BasicMon {
    int gen = -1;       // generator id for leaves, -1 for nodes
    MonRef left, right; // children, valid for nodes only

    bool is_leaf() const { return gen >= 0; }
};

// Formal bracket expression over generator ids (immutable, shareable).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
struct Expr {
    int gen = -1; // leaf generator id, or -1 for a bracket node
    ExprPtr left, right;

    bool is_leaf() const { return gen >= 0; }
};

ExprPtr ex_gen(int g);
ExprPtr ex_bracket(ExprPtr l, ExprPtr r);
// [a1, a2, ..., ak] associated to the left: [[...[a1,a2],...],ak].
ExprPtr ex_left_normed(const std::vector<ExprPtr>& args);
int expr_degree(const Expr& e, const Alphabet& a);
std::string render_expr(const Expr& e, const Alphabet& a);

// A Z-linear combination of basic monomials (any degrees).
struct LieElement {
    std::map<MonRef, Int> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LieElement&) const = default;
};

void add_scaled(LieElement& dst, const Int& c, const LieElement& src);
LieElement operator+(const LieElement& a, const LieElement& b);
LieElement operator-(const LieElement& a, const LieElement& b);
LieElement operator*(const Int& c, const LieElement& a);
// Degree of a homogeneous element (0 for the zero element; throws if mixed).
int homogeneous_degree(const LieElement& e);

class HallBasis {
public:
    // Enumerates all basic monomials of total degree <= max_degree.
    static HallBasis build(Alphabet a, int max_degree);

    const Alphabet& alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    int rank(int degree) const;
    const BasicMon& at(MonRef m) const;
    MonRef leaf(int g) const;
    const std::vector<BasicMon>& layer(int degree) const;

    std::string render(MonRef m) const;
    ExprPtr to_expr(MonRef m) const;

    LieElement mon(MonRef m) const;
    LieElement gen(int g) const;
    // Rewrites the bracket into the basis; bilinear extension of bracket_mon.
    LieElement bracket(const LieElement& a, const LieElement& b);
    LieElement bracket_mon(MonRef u, MonRef v);
    // [g1, g2, ..., gk] associated to the left, over generator ids.
    LieElement left_normed(const std::vector<int>& gens);
    LieElement eval(const Expr& e);

    // Coordinates of a homogeneous element over the degree layer.
    std::vector<Int> dense(const LieElement& e, int degree) const;
    SparseRow sparse(const LieElement& e, int degree) const;
    LieElement from_sparse(const SparseRow& row, int degree) const;

private:
    Alphabet alphabet_;
    int max_degree_ = 0;
    std::vector<std::vector<BasicMon>> layers_; // layers_[d], d = 0..max_degree
    std::vector<std::map<std::pair<MonRef, MonRef>, int>> node_index_;
    std::vector<MonRef> leaf_ref_; // generator id -> leaf address
    std::map<std::pair<MonRef, MonRef>, LieElement> rewrite_cache_;

    std::optional<MonRef> find_node(MonRef l, MonRef r) const;
};

std::string render_element(const LieElement& e, const HallBasis& basis);

} // namespace gradedlie

#endif
