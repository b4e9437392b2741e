// The decision driver: forward search and separator search interleaved under
// explicit budgets, plus verdict files, auditing and SVG rendering.

#pragma once

#include "ltireach/certify/certify.hpp"
#include "ltireach/forward/reach.hpp"
#include "ltireach/preprocess/simple_form.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace ltireach {

struct Budgets {
  int max_steps = 32;
  long max_candidates = 4096;
  int max_degree = 4;
  int max_height = 8;
  /// 1 runs everything on the calling thread in a fixed order.
  int workers = 2;
};

enum class VerdictKind { Reachable, Unreachable, Unknown };
std::string to_string(VerdictKind k);

/// What was searched before the verdict was reached.
struct SearchProgress {
  int horizon = -1;  // largest forward horizon fully searched
  long candidates = 0;
  int degree = 0;  // enumeration batch reached
  int height = 0;
  bool forward_exhausted = false;
  bool candidates_exhausted = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<ReachWitness> witness;
  /// Unreachable: either a separator over the reduced system or, when the
  /// reduced target is empty, no separator at all.
  std::optional<SeparatorCertificate> certificate;
  bool empty_target = false;
  std::optional<SimpleForm> form;
  SearchProgress progress;
  std::string warning;
};

/// Warning text used when certificate search is unavailable.
std::string forward_only_warning(const SimplicityReport& r);

Verdict decide(const LtiSystem& sys, const Budgets& b);
/// Forward search only.
Verdict decide_forward(const LtiSystem& sys, const Budgets& b);
/// Separator search only; Unknown with a warning for non-simple systems.
Verdict decide_certify(const LtiSystem& sys, const Budgets& b);

nlohmann::json to_json(const RealAlg& x);
RealAlg real_alg_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const LtiSystem& sys, const Verdict& v, const Budgets& b);

struct AuditResult {
  bool ok = false;
  std::string message;
};

/// Recomputes everything the verdict claims from the instance alone.
AuditResult audit_verdict(const LtiSystem& sys, const nlohmann::json& verdict);

/// Vertices of sum_{i<=n} A^i(U) in counterclockwise order (2-D, single polytope U).
std::vector<RatVector> partial_reach_polygon(const LtiSystem& sys, int n);

struct RenderLine {
  AlgVector tau;
  RealAlg level;
};

/// SVG 1.1 drawing of the partial reachable set, U, the target and an optional
/// line <x, tau> = level.
std::string render_partial_reach(const LtiSystem& sys, int n, const std::optional<RenderLine>& line = std::nullopt);

}  // namespace ltireach
