// Spectral decomposition of a matrix with real positive spectrum and the
// bilinear forms L_ij(u, tau) = tau^T B_ij u with
//   <A^n u, tau> = sum_i sum_j binom(n, j) lambda_i^n L_ij(u, tau).

#pragma once

#include "ltireach/linalg/dense.hpp"

#include <vector>

namespace ltireach {

struct SpectralData {
  int dim = 0;
  /// Distinct eigenvalues, ascending, all strictly positive.
  std::vector<RealAlg> eigenvalues;
  /// Algebraic multiplicities.
  std::vector<int> multiplicities;
  /// Q(lambda_i) for each eigenvalue.
  std::vector<FieldPtr> fields;
  /// Spectral projectors Pi_i onto the generalized eigenspaces, over Q(lambda_i).
  std::vector<Mat<NFElem>> projectors;
  /// Jordan-Chevalley parts A = S + N; both are rational.
  RatMatrix semisimple;
  RatMatrix nilpotent;
  /// bilinear[i][j] = lambda_i^{-j} Pi_i N^j for 0 <= j < dim.
  std::vector<std::vector<Mat<NFElem>>> bilinear;

  std::size_t size() const { return eigenvalues.size(); }
  NFElem lambda(std::size_t i) const { return NFElem::generator(fields[i]); }
};

/// Throws std::domain_error if some eigenvalue is non-real or not strictly
/// positive.
SpectralData spectral_decompose(const RatMatrix& a);

/// c[i][j] = L_ij(u, tau) for rational tau; each c[i] lies in Q(lambda_i).
std::vector<std::vector<NFElem>> expand_inner_product(const SpectralData& s, const RatVector& u, const RatVector& tau);

/// Same for algebraic tau.
std::vector<std::vector<RealAlg>> expand_inner_product(const SpectralData& s, const RatVector& u,
                                                       const std::vector<RealAlg>& tau);

/// sum_i sum_j binom(n, j) lambda_i^n c[i][j]
RealAlg evaluate_expansion(const SpectralData& s, const std::vector<std::vector<NFElem>>& c, long n);
RealAlg evaluate_expansion(const SpectralData& s, const std::vector<std::vector<RealAlg>>& c, long n);

/// p(M) by Horner's rule.
RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& m);

}  // namespace ltireach
