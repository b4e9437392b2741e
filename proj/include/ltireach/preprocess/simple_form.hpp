// Simplicity checks and the reduction to a positive real spectrum,
// an invertible matrix and a full-dimensional reachable set.

#pragma once

#include "ltireach/preprocess/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ltireach {

struct SimplicityReport {
  bool is_polytope = false;  // a single bounded control polytope
  bool origin_in_rel_interior = false;
  bool schur = false;
  std::optional<long> real_power;
  bool source_zero = false;
  bool simple = false;

  /// Name of the first failing condition, empty when simple.
  std::string failure() const;
};

SimplicityReport check_simple(const LtiSystem& sys);

class NotSimpleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SimpleForm {
  // reduced system
  RatMatrix a;
  GenPolyhedron u;
  GenPolyhedron q;

  LtiSystem original;
  long power = 1;
  RatMatrix a_power;        // A^M
  GenPolyhedron u_power;    // sum_{i<M} A^i(U)
  int fitting_steps = 0;    // d when the Fitting step fired, else 0
  RatMatrix v1_basis;       // columns, in power-stage coordinates
  RatMatrix a_fit;          // A^M restricted to V1
  GenPolyhedron u_fit;      // A^{Md}(U_M) in V1 coordinates
  GenPolyhedron q_fit;      // (Q - sum_{i<d} A^{Mi}(U_M)) cap V1
  RatMatrix span_basis;     // columns, in V1 coordinates

  int dim() const { return static_cast<int>(a.rows()); }
  bool is_identity() const { return power == 1 && fitting_steps == 0 && span_basis.cols() == span_basis.rows(); }
  /// Original horizon realized by a reduced witness of the given length.
  long original_horizon(long reduced) const { return power * (reduced + fitting_steps); }
  /// Reduced horizon sufficient for everything reachable within the original horizon.
  long reduced_horizon(long original) const;
};

/// Applies the power, Fitting and span reductions in that order.
/// Throws NotSimpleError naming the failed condition.
SimpleForm to_simple_form(const LtiSystem& sys);

/// Turns reduced-system controls (reaching the reduced target) into original
/// controls reaching the original target. Throws std::logic_error if the
/// lifted sequence fails to replay into the target.
std::vector<RatVector> lift_witness(const SimpleForm& form, const std::vector<RatVector>& reduced_controls);

}  // namespace ltireach
