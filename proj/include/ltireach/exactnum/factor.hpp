// Factorization of polynomials over Q into irreducibles.

#pragma once

#include "ltireach/exactnum/poly.hpp"

#include <utility>
#include <vector>

namespace ltireach {

/// Irreducible factors of a squarefree primitive integer polynomial of
/// positive degree. Each factor is primitive with positive leading
/// coefficient; their product is the input.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

/// Distinct irreducible factors of p with multiplicities, each primitive with
/// positive leading coefficient, sorted by (degree, coefficients).
std::vector<std::pair<IntPoly, int>> factor(const RatPoly& p);

/// Distinct irreducible factors only.
std::vector<IntPoly> irreducible_factors(const RatPoly& p);

bool is_irreducible(const IntPoly& f);

}  // namespace ltireach
