// Exact integer linear algebra on sparse matrices: Hermite and Smith normal
// forms, lattice membership, saturation (direct-summand) tests, sums,
// intersections and quotient checks. Everything is computed over Z with
// arbitrary-precision entries; no floating-point or modular shortcuts.
//
// Conventions:
//  * Matrices act as row collections; a Lattice is the row span of its basis.
//  * hnf() returns the canonical row Hermite normal form (positive pivots,
//    entries above a pivot reduced into [0, pivot)), so two lattices are equal
//    iff their canonical bases are identical.
//  * is_saturated(sub) asks whether Z^n / sub is torsion-free, i.e. whether
//    all elementary divisors of the basis are 1 (sub is a direct summand).

#ifndef GRADEDLIE_ZMODULE_HPP
#define GRADEDLIE_ZMODULE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gradedlie/bigint.hpp"

namespace gradedlie {

// A sparse row: column index -> nonzero entry.
using SparseRow = std::map<int, Int>;

// dst += coef * src  (zero results are erased, keeping rows sparse).
void row_axpy(SparseRow& dst, const Int& coef, const SparseRow& src);

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow> entries; // entries.size() == rows; no stored zeros

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r) {}

    Int get(int r, int c) const;
    void set(int r, int c, Int v); // erases the entry when v == 0
    void append_row(SparseRow row); // indices must lie in [0, cols)

    static IntMatrix identity(int n);
    bool operator==(const IntMatrix& other) const = default;
};

// A sublattice of Z^ambient_dim, stored by its canonical-HNF row basis.
struct Lattice {
    int ambient_dim = 0;
    IntMatrix basis; // canonical HNF; basis.rows == rank

    int rank() const { return basis.rows; }
    bool operator==(const Lattice& other) const = default;
};

Lattice zero_lattice(int ambient_dim);
Lattice full_lattice(int ambient_dim);

// Canonical row Hermite normal form of the row span of m.
Lattice hnf(const IntMatrix& m);

// Elementary divisors d1 | d2 | ... | dr (each positive, r = rank).
std::vector<Int> snf(const IntMatrix& m);

// True iff Z^n / sub is torsion-free (all elementary divisors equal 1).
bool is_saturated(const Lattice& sub);

// True iff v is an integer combination of the basis rows.
bool member(const std::vector<Int>& v, const Lattice& sub);

// Integer coordinates of v with respect to the basis rows, if v is a member.
std::optional<std::vector<Int>> coords_in(const std::vector<Int>& v,
                                          const Lattice& sub);

// Rank of the sum of the given lattices, and whether the sum is direct
// (rank of the stacked matrix equals the sum of the individual ranks).
std::pair<int, bool> sum_rank(const std::vector<Lattice>& subs);

// Row-span sum and intersection of two lattices in the same ambient space.
Lattice sum_lattice(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);

// Basis of {x : x * m = 0} (the left kernel), rows of length m.rows.
IntMatrix left_kernel(const IntMatrix& m);

// For sub contained in sup: is sup / sub torsion-free? (Throws if some basis
// row of sub is not a member of sup.)
bool quotient_saturated(const Lattice& sub, const Lattice& sup);

// Incremental HNF: rows may be fed one at a time; dependent rows are detected
// cheaply. Used for the large spanning-set computations.
class HnfBuilder {
public:
    explicit HnfBuilder(int cols) : cols_(cols) {}

    // Adds the row to the span; returns true iff the rank increased.
    bool insert(SparseRow row);
    // Membership against the current span, without modifying it.
    bool contains(SparseRow row) const;

    int rank() const { return static_cast<int>(pivots_.size()); }
    // Canonicalizes and returns the accumulated lattice.
    Lattice to_lattice() const;

private:
    int cols_;
    std::map<int, SparseRow> pivots_; // leading column -> echelon row
};

} // namespace gradedlie

#endif
