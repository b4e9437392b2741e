#include "doctest.h"

#include "ltireach/forward/reach.hpp"
#include "ltireach/gadgets/gadgets.hpp"
#include "ltireach/linalg/matrix.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace ltireach;
using testing::vec;

namespace {

// Every exponent tuple in [-r, r]^k.
template <class F>
void for_each_tuple(int k, long r, F f) {
  std::vector<long> n(static_cast<std::size_t>(k), -r);
  while (true) {
    f(n);
    int i = 0;
    while (i < k && n[static_cast<std::size_t>(i)] == r) n[static_cast<std::size_t>(i++)] = -r;
    if (i == k) return;
    ++n[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("constant gadget") {
  const auto g = gadget_constant(3);
  CHECK(matrix_power(g.factors[0], 3) == g.target);
  CHECK(g.target == parse_matrix("1 3; 0 1"));
  for (long z = -6; z <= 6; ++z) CHECK(g.holds({z}) == (z == 3));
  CHECK(gadget_constant(-2).holds({-2}));
}

TEST_CASE("addition gadget") {
  const auto g = gadget_add();
  CHECK(g.holds({2, 3, 5}));
  for_each_tuple(3, 3, [&](const std::vector<long>& n) { CHECK(g.holds(n) == (n[2] == n[0] + n[1])); });
}

TEST_CASE("multiplication gadget") {
  const auto g = gadget_mul();
  // exponents (z, y', x, y, x')
  CHECK(g.holds({6, 3, 2, 3, 2}));
  CHECK_FALSE(g.holds({5, 3, 2, 3, 2}));
  for_each_tuple(5, 2, [&](const std::vector<long>& n) {
    const long z = n[0], yp = n[1], x = n[2], y = n[3], xp = n[4];
    CHECK(g.holds(n) == (z == x * y && xp == x && yp == y));
  });
}

TEST_CASE("conjunction by blocks") {
  const auto single = gadget_add();
  const auto same = conjoin({single});
  for_each_tuple(3, 2, [&](const std::vector<long>& n) { CHECK(same.holds(n) == single.holds(n)); });

  // x + y = z and z = 2 (the constant padded to three factors, acting on z)
  PoweringInstance two = gadget_constant(2);
  two.factors = {RatMatrix::Identity(2, 2), RatMatrix::Identity(2, 2), two.factors[0]};
  const auto both = conjoin({gadget_add(), two});
  CHECK(both.dim() == 4);
  for_each_tuple(3, 3, [&](const std::vector<long>& n) {
    CHECK(both.holds(n) == (gadget_add().holds(n) && two.holds(n)));
  });

  // padding with a trivially true instance keeps the solution set
  const auto trivial = pad_factors(PoweringInstance{{RatMatrix::Identity(2, 2)}, RatMatrix::Identity(2, 2)}, 3);
  const auto padded = conjoin({gadget_add(), trivial});
  for_each_tuple(3, 2, [&](const std::vector<long>& n) { CHECK(padded.holds(n) == gadget_add().holds(n)); });
  CHECK_THROWS_AS(conjoin({gadget_add(), gadget_constant(1)}), std::invalid_argument);
}

TEST_CASE("powering lifts to vector reachability") {
  const RatMatrix a = parse_matrix("1 1; 0 1");
  const auto v = powering_to_vector_reach({{a}, matrix_power(a, 2)});
  CHECK(v.dim() == 4);
  CHECK(v.holds({2}));
  for (long n = -4; n <= 4; ++n) CHECK(v.holds({n}) == (n == 2));
  CHECK(powering_to_vector_reach({{a}, a}).holds({1}));

  // non-commuting factors: the lifted solution is the reversed tuple
  const RatMatrix b = parse_matrix("1 0; 1 1");
  const PoweringInstance p{{a, b}, RatMatrix(a * a * b)};
  const auto w = powering_to_vector_reach(p);
  for_each_tuple(2, 3, [&](const std::vector<long>& n) { CHECK(p.holds(n) == w.holds({n[1], n[0]})); });

  CHECK_THROWS_AS(powering_to_vector_reach({{parse_matrix("1 0 0; 0 1 0; 0 0 1")}, a}), std::invalid_argument);
  CHECK_THROWS_AS(powering_to_vector_reach({{parse_matrix("1 1; 1 1")}, a}), std::invalid_argument);
}

TEST_CASE("appendix schedule") {
  const auto s = appendix_schedule({2});
  CHECK(s.times == std::vector<long>{0, 2});
  CHECK(s.realizable);
  CHECK(s.horizon() == 3);
  CHECK_THROWS_AS(appendix_schedule({1, 0}), std::invalid_argument);
  CHECK_FALSE(appendix_schedule({-2}).realizable);

  std::mt19937 g(7);
  std::uniform_int_distribution<int> len(1, 5), val(-6, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> n(static_cast<std::size_t>(len(g)));
    for (auto& x : n)
      do x = val(g);
      while (x == 0);
    const auto sc = appendix_schedule(n);
    REQUIRE(sc.times.size() == n.size() + 1);
    CHECK(*std::min_element(sc.times.begin(), sc.times.end()) == 0);
    for (std::size_t i = 0; i < n.size(); ++i) CHECK(sc.times[i + 1] - sc.times[i] == n[i]);
  }
}

TEST_CASE("appendix gadget with one matrix") {
  const VectorReachInstance v{{parse_matrix("1 1; 0 1")}, vec({0, 1}), vec({2, 1})};
  CHECK(v.holds({2}));
  const auto lti = vector_reach_to_lti(v);
  CHECK(lti.system.dim() == 5);
  CHECK(lti.system.controls.components.size() == 2);
  lti.system.validate();

  const auto controls = lti.witness_controls(v, {2});
  REQUIRE(controls);
  CHECK(controls->size() == 3);
  CHECK(replay(lti.system.a, lti.system.source, *controls) == lti.system.target.vertices.front());
  const auto w = witness_from_controls(lti.system, *controls);
  CHECK(verify_witness(lti.system, w));

  const auto found = reach_within(lti.system, 4);
  REQUIRE(found);
  CHECK(found->horizon() == 3);
  CHECK(verify_witness(lti.system, *found));

  const VectorReachInstance bad{{parse_matrix("1 1; 0 1")}, vec({0, 1}), vec({0, 2})};
  for (long n = -6; n <= 6; ++n) CHECK_FALSE(bad.holds({n}));
  CHECK_FALSE(reach_within(vector_reach_to_lti(bad).system, 5));
}

TEST_CASE("appendix gadget with two matrices") {
  const RatMatrix a1 = parse_matrix("1 1; 0 1"), a2 = parse_matrix("2 0; 0 1");
  const RatVector x = vec({0, 1});
  const RatVector y = signed_power(a2, 1) * (signed_power(a1, 2) * x);
  const VectorReachInstance v{{a1, a2}, x, y};
  CHECK(v.holds({2, 1}));
  const auto lti = vector_reach_to_lti(v);
  CHECK(lti.system.dim() == 3 * 2 + 2);
  CHECK(lti.system.controls.components.size() == 4);
  const auto controls = lti.witness_controls(v, {2, 1});
  REQUIRE(controls);
  CHECK(static_cast<long>(controls->size()) == appendix_schedule({2, 1}).horizon());
  CHECK(verify_witness(lti.system, witness_from_controls(lti.system, *controls)));
  const auto found = reach_within(lti.system, 4);
  REQUIRE(found);
  CHECK(verify_witness(lti.system, *found));
}

TEST_CASE("skolem gadget") {
  const RatMatrix rot = parse_matrix("0 1; -1 0");
  CHECK(skolem_truth(rot, 10).least_positive == 2);
  const LtiSystem s = skolem_to_lti(rot);
  s.validate();
  CHECK(s.dim() == 3);
  const auto w = reach_within(s, 4);
  REQUIRE(w);
  CHECK(w->horizon() == 2);
  CHECK(verify_witness(s, *w));
  CHECK(verify_witness(s, witness_from_controls(s, skolem_witness_controls(rot, 2))));

  // (M^n)_{1,2} = n: only the n = 0 reading has a solution
  const RatMatrix shear = parse_matrix("1 1; 0 1");
  const SkolemTruth st = skolem_truth(shear, 20);
  CHECK_FALSE(st.least_positive);
  CHECK(st.zero_qualifies);
  CHECK(skolem_zero_at(shear, 0));
  CHECK_FALSE(reach_within(skolem_to_lti(shear), 8));

  // (M^n)_{1,2} = n 2^(n-1)
  const RatMatrix jordan = parse_matrix("2 1; 0 2");
  for (long n = 1; n <= 20; ++n) CHECK(matrix_power(jordan, n)(0, 1) == Rat(n) * pow(Rat(2), n - 1));
  CHECK_FALSE(skolem_truth(jordan, 20).least_positive);
  CHECK_FALSE(reach_within(skolem_to_lti(jordan), 8));
}

TEST_CASE("skolem gadget agrees with brute force on small matrices") {
  std::mt19937 g(17);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int t = 0; t < 12; ++t) {
    RatMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Rat(e(g));
    const auto truth = skolem_truth(m, 5);
    const auto w = reach_within(skolem_to_lti(m), 5);
    CHECK(w.has_value() == truth.least_positive.has_value());
    if (w) CHECK(w->horizon() == *truth.least_positive);
  }
}

TEST_CASE("markov gadget") {
  const LtiSystem swap = markov_to_lti(parse_matrix("0 1; 1 0"));
  swap.validate();
  CHECK(swap.dim() == 5);
  // origin, (-e_1, 0, 1, 1), (-e_1, 1, 1, 1), (-e_2, 0, 1, 1)
  CHECK(swap.controls.components.front().vertices.size() == 4);
  CHECK(markov_truth(parse_matrix("0 1; 1 0"), 5) == 1);
  const auto w = reach_within(swap, 3);
  REQUIRE(w);
  CHECK(w->horizon() == 1);
  CHECK(verify_witness(swap, *w));

  const RatMatrix half = parse_matrix("1/2 1/2; 1/2 1/2");
  CHECK(markov_truth(half, 5) == 1);
  const auto wh = reach_within(markov_to_lti(half), 3);
  REQUIRE(wh);
  CHECK(wh->horizon() == 1);
  CHECK(verify_witness(markov_to_lti(half), witness_from_controls(markov_to_lti(half), markov_witness_controls(half, 1))));

  const RatMatrix id = RatMatrix::Identity(2, 2);
  CHECK_FALSE(markov_truth(id, 20));
  CHECK_FALSE(reach_within(markov_to_lti(id), 6));

  CHECK_THROWS_AS(markov_to_lti(parse_matrix("1 1; 0 1")), std::invalid_argument);
  CHECK_THROWS_AS(markov_to_lti(parse_matrix("3/2 0; -1/2 1")), std::invalid_argument);
}

TEST_CASE("markov gadget agrees with brute force on three states") {
  const RatMatrix m = parse_matrix("1/2 1/4 0; 1/2 1/4 1/3; 0 1/2 2/3");
  const auto truth = markov_truth(m, 6);
  const auto w = reach_within(markov_to_lti(m), 6);
  CHECK(w.has_value() == truth.has_value());
  if (w) {
    CHECK(w->horizon() == *truth);
    CHECK(verify_witness(markov_to_lti(m), witness_from_controls(markov_to_lti(m), markov_witness_controls(m, *truth))));
  }
}
