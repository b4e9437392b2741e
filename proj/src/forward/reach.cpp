#include "ltireach/forward/reach.hpp"

#include "ltireach/linalg/matrix.hpp"

#include <functional>

namespace ltireach {

std::vector<RatVector> controls_of(const LtiSystem& sys, const ReachWitness& w) {
  std::vector<RatVector> out;
  for (const auto& s : w.steps) out.push_back(recompose(sys.controls.components.at(static_cast<std::size_t>(s.component)), s.coeffs));
  return out;
}

ReachWitness witness_from_controls(const LtiSystem& sys, const std::vector<RatVector>& controls) {
  ReachWitness w;
  for (const auto& u : controls) {
    bool found = false;
    for (std::size_t c = 0; c < sys.controls.components.size() && !found; ++c) {
      if (auto d = decompose(sys.controls.components[c], u)) {
        w.steps.push_back({static_cast<int>(c), std::move(*d)});
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("control point outside every control component");
  }
  return w;
}

std::optional<ReachWitness> reach_exactly(const LtiSystem& sys, int n, ForwardStats* stats) {
  sys.validate();
  const int d = sys.dim();
  std::vector<RatMatrix> pows;  // pows[i] = A^i
  pows.push_back(RatMatrix::Identity(d, d));
  for (int i = 1; i <= n; ++i) pows.push_back(sys.a * pows.back());
  const RatVector rhs = -(pows[static_cast<std::size_t>(n)] * sys.source);
  const RatMatrix minus_id = -RatMatrix::Identity(d, d);
  const auto& comps = sys.controls.components;
  const GenPolyhedron hull = comps.size() > 1 ? convex_hull(sys.controls) : comps.front();

  std::vector<int> assign;
  auto attempt = [&]() -> std::optional<std::vector<Decomposition>> {
    std::vector<LinearTerm> terms;
    for (int t = 0; t < n; ++t) {
      const GenPolyhedron* set = t < static_cast<int>(assign.size()) ? &comps[static_cast<std::size_t>(assign[static_cast<std::size_t>(t)])] : &hull;
      terms.push_back({pows[static_cast<std::size_t>(n - 1 - t)], set});
    }
    terms.push_back({minus_id, &sys.target});
    if (stats) ++stats->lps;
    return solve_combination(terms, rhs);
  };

  std::function<std::optional<ReachWitness>()> dfs = [&]() -> std::optional<ReachWitness> {
    const bool leaf = static_cast<int>(assign.size()) == n || comps.size() == 1;
    if (leaf) {
      while (static_cast<int>(assign.size()) < n) assign.push_back(0);
      auto sol = attempt();
      if (!sol) return std::nullopt;
      ReachWitness w;
      for (int t = 0; t < n; ++t) w.steps.push_back({assign[static_cast<std::size_t>(t)], (*sol)[static_cast<std::size_t>(t)]});
      return w;
    }
    if (!attempt()) {
      if (stats) ++stats->pruned;
      return std::nullopt;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      assign.push_back(static_cast<int>(c));
      if (auto w = dfs()) return w;
      assign.pop_back();
    }
    return std::nullopt;
  };
  return dfs();
}

std::optional<ReachWitness> reach_within(const LtiSystem& sys, int budget, ForwardStats* stats) {
  for (int n = 0; n <= budget; ++n)
    if (auto w = reach_exactly(sys, n, stats)) return w;
  return std::nullopt;
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Valid: return "valid";
    case WitnessStatus::BadComponent: return "bad component index";
    case WitnessStatus::MalformedCoefficients: return "malformed coefficients";
    case WitnessStatus::ReplayFailure: return "replay does not end in the target";
  }
  return "unknown";
}

WitnessStatus check_witness(const LtiSystem& sys, const ReachWitness& w) {
  const auto& comps = sys.controls.components;
  for (const auto& s : w.steps) {
    if (s.component < 0 || s.component >= static_cast<int>(comps.size())) return WitnessStatus::BadComponent;
    const auto& c = comps[static_cast<std::size_t>(s.component)];
    if (s.coeffs.vertex.size() != c.vertices.size() || s.coeffs.ray.size() != c.rays.size() ||
        s.coeffs.line.size() != c.lines.size())
      return WitnessStatus::MalformedCoefficients;
    Rat total(0);
    for (const auto& x : s.coeffs.vertex) {
      if (x.sign() < 0) return WitnessStatus::MalformedCoefficients;
      total += x;
    }
    if (total != Rat(1)) return WitnessStatus::MalformedCoefficients;
    for (const auto& x : s.coeffs.ray)
      if (x.sign() < 0) return WitnessStatus::MalformedCoefficients;
  }
  const RatVector x = replay(sys.a, sys.source, controls_of(sys, w));
  return contains(sys.target, x) ? WitnessStatus::Valid : WitnessStatus::ReplayFailure;
}

Rat partial_sum_max(const RatMatrix& a, const GenPolyhedron& u, int n, const RatVector& dir) {
  std::vector<LinearTerm> terms;
  RatMatrix p = RatMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i <= n; ++i) {
    terms.push_back({p, &u});
    p = a * p;
  }
  auto r = maximize_combination(terms, dir);
  if (!r) throw std::invalid_argument("partial_sum_max needs a nonempty polytope");
  return r->value;
}

}  // namespace ltireach
