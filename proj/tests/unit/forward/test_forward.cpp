#include "doctest.h"

#include "ltireach/forward/reach.hpp"
#include "support/fixtures.hpp"
#include "support/random_systems.hpp"

using namespace ltireach;
using testing::vec;

namespace {

// Every assignment of components to steps, each tried as its own LP.
bool brute_force_union(const LtiSystem& sys, int n) {
  const int c = static_cast<int>(sys.controls.components.size());
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<LinearTerm> terms;
    RatMatrix p = RatMatrix::Identity(sys.dim(), sys.dim());
    std::vector<RatMatrix> pows = {p};
    for (int i = 1; i <= n; ++i) pows.push_back(sys.a * pows.back());
    for (int t = 0; t < n; ++t)
      terms.push_back({pows[static_cast<std::size_t>(n - 1 - t)], &sys.controls.components[static_cast<std::size_t>(assign[static_cast<std::size_t>(t)])]});
    terms.push_back({RatMatrix(-RatMatrix::Identity(sys.dim(), sys.dim())), &sys.target});
    if (solve_combination(terms, RatVector(-(pows.back() * sys.source)))) return true;
    int i = 0;
    while (i < n && ++assign[static_cast<std::size_t>(i)] == c) assign[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

LtiSystem random_union_system(std::mt19937& g) {
  LtiSystem s;
  const int d = 2;
  s.a = RatMatrix(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s.a(i, j) = testing::random_rat(g, -1, 1, 2);
  std::uniform_int_distribution<int> ncomp(2, 3), kind(0, 2);
  std::vector<GenPolyhedron> comps;
  const int c = ncomp(g);
  for (int k = 0; k < c; ++k) {
    const RatVector p = testing::random_vector(g, d, 2, 1);
    switch (kind(g)) {
      case 0: comps.push_back(GenPolyhedron::point(p)); break;
      case 1: comps.push_back(GenPolyhedron::affine(p, {testing::random_vector(g, d, 2, 1)})); break;
      default: comps.push_back(GenPolyhedron::polytope({p, RatVector(p + testing::random_vector(g, d, 1, 1))})); break;
    }
  }
  s.controls = ControlSet(comps);
  s.source = testing::random_vector(g, d, 2, 1);
  s.target = testing::box(testing::random_vector(g, d, 3, 1), Rat(1, 2));
  return s;
}

}  // namespace

TEST_CASE("horizon zero and single steps") {
  auto sys = testing::fig2_system(GenPolyhedron::point(vec({0, 0})));
  auto w = reach_within(sys, 5);
  REQUIRE(w);
  CHECK(w->horizon() == 0);
  CHECK(verify_witness(sys, *w));

  sys.target = GenPolyhedron::point(vec({2, 1}));
  CHECK_FALSE(reach_exactly(sys, 0));
  auto w1 = reach_exactly(sys, 1);
  REQUIRE(w1);
  CHECK(controls_of(sys, *w1).front() == vec({2, 1}));
  CHECK(replay(sys.a, sys.source, controls_of(sys, *w1)) == vec({2, 1}));
}

TEST_CASE("unreachable square beyond the supremum") {
  auto sys = testing::fig2_system(testing::box(vec({4, 0}), Rat(1, 2)));
  CHECK_FALSE(reach_within(sys, 10));
}

TEST_CASE("witness verification statuses") {
  auto sys = testing::fig2_system(GenPolyhedron::point(vec({1, 1})));
  auto w = reach_within(sys, 6);
  REQUIRE(w);
  CHECK(check_witness(sys, *w) == WitnessStatus::Valid);

  ReachWitness bumped = *w;
  bumped.steps.front().coeffs.vertex.front() += Rat(1, 1000);
  CHECK(check_witness(sys, bumped) == WitnessStatus::MalformedCoefficients);

  // move weight between two vertices: still well formed, lands elsewhere
  ReachWitness moved = *w;
  auto& cf = moved.steps.back().coeffs.vertex;
  std::size_t from = 0;
  while (cf[from].sign() == 0) ++from;
  const std::size_t to = (from + 1) % cf.size();
  const Rat eps = std::min(cf[from], Rat(1, 1000));
  cf[from] -= eps;
  cf[to] += eps;
  CHECK(check_witness(sys, moved) == WitnessStatus::ReplayFailure);

  ReachWitness bad = *w;
  bad.steps.front().component = 3;
  CHECK(check_witness(sys, bad) == WitnessStatus::BadComponent);

  CHECK(verify_witness(testing::fig2_system(GenPolyhedron::point(vec({0, 0}))), ReachWitness{}));
}

TEST_CASE("partial sum maxima of the two-dimensional example") {
  const auto u = testing::fig2_controls();
  const RatMatrix a = parse_matrix("1/3 0; 0 2/3");
  CHECK(partial_sum_max(a, u, 8, vec({1, 0})) == Rat(19682, 6561));
  Rat prev(-100);
  for (int n = 0; n <= 12; ++n) {
    const Rat m = partial_sum_max(a, u, n, vec({0, 1}));
    // 1 + 2/3 + ... + (2/3)^n
    CHECK(m == Rat(3) * (Rat(1) - pow(Rat(2, 3), static_cast<long>(n + 1))));
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("monotone in the horizon when the origin is a control") {
  std::mt19937 g(21);
  for (int t = 0; t < 12; ++t) {
    LtiSystem s;
    s.a = testing::random_positive_spectrum(g, 2, false);
    s.controls = ControlSet(testing::box(vec({0, 0}), Rat(1)));
    s.source = RatVector::Zero(2);
    s.target = testing::box(testing::random_vector(g, 2, 4, 1), Rat(1, 3));
    bool before = false;
    for (int n = 0; n <= 4; ++n) {
      const bool now = reach_exactly(s, n).has_value();
      if (before) CHECK(now);
      before = now;
    }
  }
}

TEST_CASE("union search agrees with exhaustive assignment") {
  std::mt19937 g(17);
  int hits = 0;
  for (int t = 0; t < 25; ++t) {
    const auto s = random_union_system(g);
    for (int n = 0; n <= 3; ++n) {
      const auto w = reach_exactly(s, n);
      CHECK(w.has_value() == brute_force_union(s, n));
      if (w) {
        CHECK(verify_witness(s, *w));
        ++hits;
      }
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("sequential lp agrees with materialized minkowski sums") {
  std::mt19937 g(23);
  const auto u = testing::fig2_controls();
  const RatMatrix a = parse_matrix("1/3 0; 0 2/3");
  for (int n = 1; n <= 3; ++n) {
    const GenPolyhedron sum = power_sum(a, u, n);
    for (int t = 0; t < 8; ++t) {
      const RatVector q = testing::random_vector(g, 2, 3, 2);
      auto s = testing::fig2_system(GenPolyhedron::point(q));
      CHECK(reach_exactly(s, n).has_value() == contains(sum, q));
    }
  }
}
