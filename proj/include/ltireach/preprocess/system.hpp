// Discrete-time LTI systems x_{t+1} = A x_t + u_t.

#pragma once

#include "ltireach/geometry/polyhedron.hpp"

#include <vector>

namespace ltireach {

struct LtiSystem {
  RatMatrix a;
  ControlSet controls;
  RatVector source;
  GenPolyhedron target;

  int dim() const { return static_cast<int>(a.rows()); }
  /// Throws std::invalid_argument naming the first inconsistent dimension.
  void validate() const;
};

/// Final state after applying the controls in order, starting from source.
RatVector replay(const RatMatrix& a, const RatVector& source, const std::vector<RatVector>& controls);

/// sum_{i<k} A^i(P), built by repeated Minkowski sums.
GenPolyhedron power_sum(const RatMatrix& a, const GenPolyhedron& p, int k);

/// The polytope with each vertex replaced by its coordinates in the column basis.
/// Every vertex must lie in the span.
GenPolyhedron to_coordinates(const GenPolyhedron& p, const RatMatrix& basis);

}  // namespace ltireach
