// Bounded-horizon reachability by exact linear programming.

#pragma once

#include "ltireach/preprocess/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltireach {

/// One applied control: a point of controls.components[component] given by
/// its generator coefficients.
struct WitnessStep {
  int component = 0;
  Decomposition coeffs;
};

struct ReachWitness {
  std::vector<WitnessStep> steps;
  int horizon() const { return static_cast<int>(steps.size()); }
};

/// Control points of a witness, in time order.
std::vector<RatVector> controls_of(const LtiSystem& sys, const ReachWitness& w);

/// Expresses each control point in the first component containing it.
/// Throws std::invalid_argument if some point is not a control.
ReachWitness witness_from_controls(const LtiSystem& sys, const std::vector<RatVector>& controls);

struct ForwardStats {
  long lps = 0;
  long pruned = 0;
};

/// A witness of horizon exactly n, if any.
std::optional<ReachWitness> reach_exactly(const LtiSystem& sys, int n, ForwardStats* stats = nullptr);

/// The least-horizon witness with horizon at most budget.
std::optional<ReachWitness> reach_within(const LtiSystem& sys, int budget, ForwardStats* stats = nullptr);

enum class WitnessStatus { Valid, BadComponent, MalformedCoefficients, ReplayFailure };

std::string to_string(WitnessStatus s);

WitnessStatus check_witness(const LtiSystem& sys, const ReachWitness& w);
inline bool verify_witness(const LtiSystem& sys, const ReachWitness& w) { return check_witness(sys, w) == WitnessStatus::Valid; }

/// max <dir, x> over x in sum_{i=0}^{n} A^i(U), for a polytope U.
Rat partial_sum_max(const RatMatrix& a, const GenPolyhedron& u, int n, const RatVector& dir);

}  // namespace ltireach
