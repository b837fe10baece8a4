// Exact arbitrary-precision signed integers used throughout the library.
// Coefficients arising from Jacobi rewriting and Hermite/Smith reduction can
// grow past machine word size, and torsion detection must be exact, so every
// linear-algebra entry and Lie coefficient is an Int.

#ifndef GRADEDLIE_BIGINT_HPP
#define GRADEDLIE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace gradedlie {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Quotient of floored division: the unique q with a - q*b in [0, |b|).
// Used to put Hermite normal forms into the canonical nonnegative range.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace gradedlie

#endif
