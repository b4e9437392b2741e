// Instance generators from the hardness reductions, with small oracles that
// know the ground truth.

#pragma once

#include "ltireach/preprocess/system.hpp"

#include <optional>
#include <vector>

namespace ltireach {

/// M^n for any integer n; M must be invertible when n < 0.
RatMatrix signed_power(const RatMatrix& m, long n);

/// Does A_1^{n_1} ... A_k^{n_k} = C hold (product read left to right)?
struct PoweringInstance {
  std::vector<RatMatrix> factors;
  RatMatrix target;

  int dim() const { return static_cast<int>(target.rows()); }
  void validate() const;
  bool holds(const std::vector<long>& exponents) const;
};

/// z = k:  [[1,1],[0,1]]^z = [[1,k],[0,1]].
PoweringInstance gadget_constant(long k);
/// z = x + y, exponents (x, y, z).
PoweringInstance gadget_add();
/// z = x y, exponents (z, y', x, y, x'); the product is I iff z = xy, x' = x and y' = y.
PoweringInstance gadget_mul();

/// Appends identity factors up to k.
PoweringInstance pad_factors(const PoweringInstance& p, int k);
/// Block-diagonal stacking; every instance must have the same number of factors.
PoweringInstance conjoin(const std::vector<PoweringInstance>& parts);

/// Do exponents exist with A_k^{n_k} ... A_1^{n_1} x = y, i.e. A_1 applied first?
struct VectorReachInstance {
  std::vector<RatMatrix> factors;
  RatVector x, y;

  int dim() const { return static_cast<int>(x.size()); }
  void validate() const;
  bool holds(const std::vector<long>& exponents) const;
};

/// Lifts a powering instance to vector reachability in dimension d^2. The factor
/// order is reversed so that the left-to-right product acts on each basis
/// vector; a solution n maps to the reversed tuple.
VectorReachInstance powering_to_vector_reach(const PoweringInstance& p);

/// Step times t_1 <= ... of the simulating LTI system, with t_{i+1} - t_i = n_i.
struct AppendixSchedule {
  std::vector<long> times;  // t_1 .. t_{k+1}, nonnegative, min is 0
  /// All atomic controls happen no later than t_{k+1}, so the schedule can be played.
  bool realizable = false;
  long horizon() const { return times.back() + 1; }
};

/// Throws std::invalid_argument on a zero exponent.
AppendixSchedule appendix_schedule(const std::vector<long>& exponents);

struct VectorReachLti {
  LtiSystem system;
  int k = 0;
  int block = 0;  // d

  /// The controls realizing a solution, of length schedule.horizon(); nullopt if the
  /// schedule is not realizable or the exponents do not solve the instance.
  std::optional<std::vector<RatVector>> witness_controls(const VectorReachInstance& v,
                                                         const std::vector<long>& exponents) const;
};

/// A = diag(I_d, A_1, ..., A_k, I_k); controls are the union over subsets S of
/// sum_{i in S} V_i, each an affine subspace; s = (x, 0, ..., 0), t = (0, ..., 0, y, 1).
VectorReachLti vector_reach_to_lti(const VectorReachInstance& v);

/// A = diag(M, 2), controls {0} and (0, x_2, ..., x_d, 1), s = (e_2, 0), t = (0, ..., 0, 1).
LtiSystem skolem_to_lti(const RatMatrix& m);

/// (M^n)_{1,2} = 0.
bool skolem_zero_at(const RatMatrix& m, long n);

/// Both readings of the Skolem question up to a bound.
struct SkolemTruth {
  /// Least n in [1, bound] with (M^n)_{1,2} = 0; this is what the LTI instance decides.
  std::optional<long> least_positive;
  /// n = 0 always qualifies since M^0 = I; the LTI instance cannot use it (source != target).
  bool zero_qualifies = true;
};

SkolemTruth skolem_truth(const RatMatrix& m, long bound);

/// n - 1 zero controls followed by (0, -(M^n)_{2,2}, ..., -(M^n)_{d,2}, 1).
std::vector<RatVector> skolem_witness_controls(const RatMatrix& m, long n);

/// A = diag(M, 0, 0, 1), U = {(-x, y, z, z) : x >= 0, 0 <= y <= x_1, sum x = z <= 1},
/// s = (e_2, 0, 0, 0), t = (0, 1/2, 1, 1). Throws unless M is column-stochastic.
LtiSystem markov_to_lti(const RatMatrix& m);

/// Least n in [1, bound] with (M^n)_{1,2} >= 1/2.
std::optional<long> markov_truth(const RatMatrix& m, long bound);

/// n - 1 zero controls followed by (-M^n e_2, 1/2, 1, 1).
std::vector<RatVector> markov_witness_controls(const RatMatrix& m, long n);

}  // namespace ltireach
