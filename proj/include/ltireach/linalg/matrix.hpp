// Rational matrix operations: characteristic polynomials, stability,
// spectral power search and invariant subspaces.

#pragma once

#include "ltireach/exactnum/poly.hpp"
#include "ltireach/linalg/dense.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltireach {

/// det(xI - A), monic of degree d.
RatPoly charpoly(const RatMatrix& a);

/// Determinant by fraction-free Bareiss elimination on the row-scaled
/// integer matrix.
Rat determinant(const RatMatrix& a);

RatMatrix matrix_power(const RatMatrix& a, long e);

/// True iff every root of p lies strictly inside the unit disk
/// (Schur-Cohn test on the coefficients).
bool schur_stable(const RatPoly& p);
bool schur_stable(const RatMatrix& a);

/// True iff every root of p is real and nonnegative.
bool all_roots_real_nonnegative(const RatPoly& p);

/// lcm{ r : phi(r) <= d }
long root_of_unity_order_bound(int d);

/// Least M >= 1 such that A^M has only real nonnegative eigenvalues,
/// searched over the divisors of root_of_unity_order_bound(d).
std::optional<long> real_spectrum_power(const RatMatrix& a);

struct FittingSplit {
  RatMatrix v0;  // basis of ker A^d, as columns
  RatMatrix v1;  // basis of im A^d, as columns
};
FittingSplit fitting_split(const RatMatrix& a);

/// Basis (columns) of span{ A^i g : 0 <= i < d, g in generators }.
RatMatrix krylov_invariant_span(const RatMatrix& a, const std::vector<RatVector>& generators);

/// Matrix of the restriction of A to the A-invariant subspace with the given
/// column basis, in basis coordinates.
RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& basis);

/// Coordinates of v in the column basis; nullopt if v is outside the span.
std::optional<RatVector> coordinates(const RatMatrix& basis, const RatVector& v);

std::vector<std::vector<Rat>> to_rows(const RatMatrix& a);

/// Parses "a b; c d" (rows separated by ';').
RatMatrix parse_matrix(const std::string& text);
std::string format_matrix(const RatMatrix& a);

}  // namespace ltireach
