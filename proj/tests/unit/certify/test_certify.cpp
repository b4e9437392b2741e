#include "doctest.h"

#include "ltireach/certify/certify.hpp"
#include "ltireach/forward/reach.hpp"
#include "ltireach/linalg/matrix.hpp"
#include "support/fixtures.hpp"
#include "support/random_systems.hpp"

using namespace ltireach;
using testing::vec;

namespace {

const RatMatrix& fig2_matrix() {
  static const RatMatrix a = parse_matrix("1/3 0; 0 2/3");
  return a;
}

const SpectralData& fig2_spectral() {
  static const SpectralData s = spectral_decompose(fig2_matrix());
  return s;
}

AlgVector alg(std::initializer_list<Rat> xs) { return to_alg(vec(xs)); }

RealAlg sqrt2() { return RealAlg::root_of(RatPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}), Rat(1), Rat(2)); }

// sign of <A^n x, tau> by exact evaluation
int direct_sign(const RatMatrix& a, const RatVector& x, const AlgVector& tau, long n) {
  return dot(RatVector(matrix_power(a, n) * x), tau).sign();
}

int kind_sign(SeqKind k) { return k == SeqKind::UltimatelyPositive ? 1 : (k == SeqKind::UltimatelyNegative ? -1 : 0); }

// |c0| C(n, j0) lambda_0^n > sum of the other terms in absolute value
bool dominates_at(const SpectralData& s, const RatVector& x, const AlgVector& tau, const SeqClass& c, long n) {
  const auto coeffs = expand_inner_product(s, x, tau);
  RealAlg lead(0), rest(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      if (coeffs[i][j].is_zero()) continue;
      const RealAlg term = abs(coeffs[i][j]) * RealAlg(Rat(binomial(n, static_cast<long>(j)))) *
                           pow(s.eigenvalues[i], static_cast<int>(n));
      if (static_cast<int>(i) == c.dominant_eigen && static_cast<int>(j) == c.dominant_power) lead = term;
      else rest += term;
    }
  return lead > rest;
}

bool same_direction(const AlgVector& a, const AlgVector& b) { return normalize_direction(a) == normalize_direction(b); }

bool stream_has(const std::vector<AlgVector>& xs, const AlgVector& v) {
  return std::any_of(xs.begin(), xs.end(), [&](const AlgVector& x) { return same_direction(x, v); });
}

}  // namespace

TEST_CASE("classification of the figure two sequences") {
  const auto& s = fig2_spectral();
  const RatVector v = vec({2, 1}), w = vec({0, 1});
  const SeqClass pos = classify_sequence(s, v, w, alg({1, 0}));
  CHECK(pos.kind == SeqKind::UltimatelyPositive);
  CHECK(pos.threshold == 0);
  const SeqClass neg = classify_sequence(s, v, w, alg({-1, 1}));
  CHECK(neg.kind == SeqKind::UltimatelyNegative);
  CHECK(neg.threshold == 0);
  for (long n = 0; n <= 20; ++n) {
    CHECK(direct_sign(fig2_matrix(), v - w, alg({1, 0}), n) == 1);
    CHECK(direct_sign(fig2_matrix(), v - w, alg({-1, 1}), n) == -1);
  }
  const SeqClass zero = classify_sequence(s, v, v, alg({1, 0}));
  CHECK(zero.kind == SeqKind::IdenticallyZero);
  CHECK(zero.threshold == 0);
}

TEST_CASE("a sign change is found by the threshold") {
  // s_n = 4 (1/3)^n - (2/3)^n: positive for n <= 1, zero at n = 2, negative afterwards
  const auto& s = fig2_spectral();
  const SeqClass c = classify_sequence(s, vec({4, -1}), vec({0, 0}), alg({1, 1}));
  CHECK(c.kind == SeqKind::UltimatelyNegative);
  CHECK(c.threshold == 3);
  CHECK(c.tail_threshold >= c.threshold);
  CHECK(c.dominant_eigen == 1);
  CHECK(c.dominant_power == 0);
}

TEST_CASE("classification agrees with direct evaluation on random systems") {
  std::mt19937 g(101);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int d = 1 + t % 4;
    const RatMatrix a = testing::random_positive_spectrum(g, d);
    const SpectralData s = spectral_decompose(a);
    const RatVector v = testing::random_vector(g, d), w = testing::random_vector(g, d);
    AlgVector tau = to_alg(testing::random_vector(g, d));
    if (t % 5 == 0) tau[0] = tau[0] + sqrt2();
    const SeqClass c = classify_sequence(s, v, w, tau);
    const RatVector x = v - w;
    const int want = kind_sign(c.kind);
    for (long n = 0; n <= c.threshold + 20; ++n) {
      const int got = direct_sign(a, x, tau, n);
      if (n >= c.threshold) CHECK(got == want);
    }
    if (c.threshold > 0) CHECK(direct_sign(a, x, tau, c.threshold - 1) != want);
    if (c.kind != SeqKind::IdenticallyZero) {
      for (long n : {c.tail_threshold, c.tail_threshold + 1, c.tail_threshold + 7}) CHECK(dominates_at(s, x, tau, c, n));
    } else {
      CHECK(x.isZero());
    }
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("identically zero exactly when every coefficient vanishes") {
  // tau orthogonal to the whole orbit of x
  const SpectralData s = spectral_decompose(parse_matrix("1/2 1 0; 0 1/2 0; 0 0 1/4"));
  CHECK(classify_sequence(s, vec({1, 2, 0}), vec({0, 0, 0}), alg({0, 0, 1})).kind == SeqKind::IdenticallyZero);
  // Jordan chain: s_n = n (1/2)^(n-1) + 2 (1/2)^n
  const SeqClass c = classify_sequence(s, vec({0, 1, 0}), vec({0, 0, 0}), alg({1, 1, 0}));
  CHECK(c.kind == SeqKind::UltimatelyPositive);
  CHECK(c.dominant_power == 1);
  CHECK(c.threshold == 0);
}

TEST_CASE("eventual maximizers") {
  const auto& s = fig2_spectral();
  const auto u = testing::fig2_controls();
  const EventualMax x = eventual_maximizer(s, u, alg({1, 0}));
  CHECK(x.vertex == vec({2, 1}));
  CHECK(x.threshold == 0);
  const EventualMax y = eventual_maximizer(s, u, alg({0, 1}));
  CHECK(y.vertex == vec({0, 1}));
  CHECK(y.threshold == 0);
  const EventualMax z = eventual_maximizer(s, u, alg({0, 0}));
  CHECK(z.threshold == 0);
  // oracle: the maximizer attains the largest value at every step
  for (const auto& tau : {alg({1, 0}), alg({0, 1}), alg({1, -1}), alg({-1, 3})}) {
    const EventualMax m = eventual_maximizer(s, u, tau);
    for (long n = m.threshold; n <= 20; ++n) {
      const RatMatrix p = matrix_power(fig2_matrix(), n);
      for (const auto& v : u.vertices) CHECK(sign_of_dot(RatVector(p * (m.vertex - v)), tau) >= 0);
    }
  }
}

TEST_CASE("eventual maximizer is invariant under positive scaling") {
  std::mt19937 g(103);
  for (int t = 0; t < 15; ++t) {
    const int d = 2 + t % 2;
    const RatMatrix a = testing::random_positive_spectrum(g, d, false);
    const SpectralData s = spectral_decompose(a);
    const auto u = testing::random_centered_polytope(g, d, d);
    const RatVector tau = testing::random_vector(g, d);
    const Rat c = testing::random_rat(g, 1, 5, 4);
    CHECK(eventual_maximizer(s, u, to_alg(tau)).vertex == eventual_maximizer(s, u, to_alg(RatVector(tau * c))).vertex);
  }
}

TEST_CASE("figure two suprema") {
  const auto& s = fig2_spectral();
  const auto u = testing::fig2_controls();
  CHECK(sup_in_direction(s, u, alg({1, 0})) == RealAlg(3));
  CHECK(sup_in_direction(s, u, alg({0, 1})) == RealAlg(3));
  CHECK(sup_in_direction(s, u, alg({0, 0})) == RealAlg(0));
  Rat prev(-1);
  for (int n = 0; n <= 12; ++n) {
    const Rat m = partial_sum_max(fig2_matrix(), u, n, vec({1, 0}));
    CHECK(m > prev);
    CHECK(m < Rat(3));
    prev = m;
  }
}

TEST_CASE("partial sums approach the supremum from below") {
  std::mt19937 g(107);
  for (int t = 0; t < 12; ++t) {
    const int d = 2 + t % 2;
    // 0: scalar, 1: diagonal, 2: general with Jordan blocks
    const int shape = t % 3;
    RatMatrix a;
    if (shape < 2) {
      a = RatMatrix::Zero(d, d);
      for (int i = 0; i < d; ++i) a(i, i) = Rat(BigInt(1 + static_cast<int>(g() % 9)), BigInt(10));
      if (shape == 0) a = RatMatrix(RatMatrix::Identity(d, d) * a(0, 0));
    } else {
      a = testing::random_positive_spectrum(g, d, false);
    }
    const SpectralData s = spectral_decompose(a);
    const auto u = testing::random_centered_polytope(g, d, d);
    const RatVector tau = testing::random_vector(g, d);
    const RealAlg sup = sup_in_direction(s, u, to_alg(tau));
    Rat rho(0);
    for (const auto& l : s.eigenvalues) rho = std::max(rho, l.to_rat());
    // per-vertex scale: |<v, tau>| for scalar matrices, sum_k |v_k tau_k| for diagonal ones
    Rat scale(0);
    for (const auto& v : u.vertices) {
      Rat w(0);
      for (int k = 0; k < d; ++k) w += abs(v(k) * tau(k));
      scale = std::max(scale, shape == 0 ? abs(v.dot(tau)) : w);
    }
    Rat prev;
    for (int n = 0; n <= 16; ++n) {
      const Rat m = partial_sum_max(a, u, n, tau);
      if (n > 0) CHECK(m >= prev);
      CHECK(RealAlg(m) <= sup);
      if (shape < 2) CHECK(sup - RealAlg(m) <= RealAlg(scale * pow(rho, static_cast<long>(n + 1)) / (Rat(1) - rho)));
      prev = m;
    }
    const RealAlg gap0 = sup - RealAlg(partial_sum_max(a, u, 0, tau));
    const RealAlg gap = sup - RealAlg(partial_sum_max(a, u, 120, tau));
    CHECK(gap * RealAlg(100) <= gap0);
  }
}

TEST_CASE("separators for the figure two system") {
  const auto& s = fig2_spectral();
  const auto u = testing::fig2_controls();
  const auto far = GenPolyhedron::polytope({vec({-1, 4}), vec({1, 4}), vec({1, 5}), vec({-1, 5})});
  const auto c = verify_separator(s, u, far, alg({0, 1}));
  REQUIRE(c);
  CHECK(c->sup_value == RealAlg(3));
  CHECK(c->min_over_q == RealAlg(4));
  CHECK(audit_certificate(s, u, far, *c));

  const auto edge = GenPolyhedron::point(vec({0, 3}));
  const auto b = verify_separator(s, u, edge, alg({0, 1}));
  REQUIRE(b);
  CHECK(b->sup_value == RealAlg(3));
  CHECK(b->min_over_q == RealAlg(3));
  CHECK(audit_certificate(s, u, edge, *b));

  CHECK_FALSE(verify_separator(s, u, GenPolyhedron::point(vec({0, 0})), alg({0, 1})));

  SeparatorCertificate tampered = *c;
  tampered.sup_value = RealAlg(Rat(5, 2));
  CHECK_FALSE(audit_certificate(s, u, far, tampered));
  tampered = *c;
  tampered.maximizer = vec({-2, -1});
  CHECK_FALSE(audit_certificate(s, u, far, tampered));
  tampered = *c;
  tampered.min_over_q = RealAlg(5);
  tampered.bound = RealAlg(5);
  CHECK_FALSE(audit_certificate(s, u, far, tampered));
}

TEST_CASE("certificates audit on random systems") {
  std::mt19937 g(109);
  int issued = 0;
  for (int t = 0; t < 20; ++t) {
    const int d = 2 + t % 2;
    const RatMatrix a = testing::random_positive_spectrum(g, d);
    const SpectralData s = spectral_decompose(a);
    const auto u = testing::random_centered_polytope(g, d, d);
    const RatVector tau = testing::random_vector(g, d);
    if (tau.isZero()) continue;
    const RealAlg sup = sup_in_direction(s, u, to_alg(tau));
    // a target just beyond the supremum along tau
    Rat level = sup.hi() + Rat(1, 4);
    const RatVector foot = tau * (level / tau.squaredNorm());
    const auto q = testing::box(foot, Rat(0));
    const auto c = verify_separator(s, u, q, to_alg(tau));
    REQUIRE(c);
    CHECK(c->sup_value == sup);
    CHECK(audit_certificate(s, u, q, *c));
    CHECK_FALSE(reach_within(LtiSystem{a, u, RatVector::Zero(d), q}, 4));
    ++issued;
  }
  CHECK(issued > 10);
}

TEST_CASE("dominance spaces") {
  const auto& s = fig2_spectral();
  const auto u = testing::fig2_controls();
  const DomSpace e1 = dom_space(s, u, alg({1, 0}));
  REQUIRE(e1.basis.size() == 1);
  CHECK(same_direction(e1.basis[0], alg({1, 0})));
  CHECK(dom_space(s, u, alg({1, 1})).basis.size() == 2);
  // tau = 0: all conditions fire and only 0 survives
  CHECK(dom_space(s, u, alg({0, 0})).basis.empty());
}

TEST_CASE("tau always lies in its dominance space") {
  std::mt19937 g(113);
  for (int t = 0; t < 15; ++t) {
    const int d = 2 + t % 2;
    const RatMatrix a = testing::random_positive_spectrum(g, d, false);
    const SpectralData s = spectral_decompose(a);
    const auto u = testing::random_centered_polytope(g, d, 1 + t % d);
    RatVector tau = testing::random_vector(g, d);
    if (t % 3 == 0) tau = RatVector::Unit(d, 0);
    const DomSpace dom = dom_space(s, u, to_alg(tau));
    Mat<RealAlg> m(d, static_cast<Eigen::Index>(dom.basis.size()));
    for (std::size_t k = 0; k < dom.basis.size(); ++k)
      for (int i = 0; i < d; ++i) m(i, static_cast<Eigen::Index>(k)) = dom.basis[k][static_cast<std::size_t>(i)];
    const AlgVector ta = to_alg(tau);
    Vec<RealAlg> tv(d);
    for (int i = 0; i < d; ++i) tv(i) = ta[static_cast<std::size_t>(i)];
    CHECK(solve(m, tv).has_value());
  }
}

TEST_CASE("extremal candidates") {
  const auto& s = fig2_spectral();
  const auto u = testing::fig2_controls();
  const auto q = testing::box(vec({4, 0}), Rat(1, 2));
  const auto only_q = extremal_candidates(s, u, q, 0);
  CHECK(only_q.size() == 4);
  CHECK(stream_has(only_q, alg({1, 0})));
  const auto all = extremal_candidates(s, u, q, 3);
  CHECK(stream_has(all, alg({1, 0})));
  CHECK(stream_has(all, alg({0, 1})));
  CHECK(stream_has(all, alg({0, -1})));
  CHECK(all.size() > only_q.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(same_direction(all[i], all[j]));
  bool separated = false;
  for (const auto& tau : all) separated = separated || verify_separator(s, u, q, tau).has_value();
  CHECK(separated);
}

TEST_CASE("algebraic vector enumeration") {
  const auto small = enumerate_algebraic_vectors(2, 1, 1);
  for (const auto& v : {alg({1, 0}), alg({0, 1}), alg({1, 1}), alg({1, -1}), alg({-1, 1}), alg({-1, -1})})
    CHECK(stream_has(small, v));
  CHECK(small.size() == 8);
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) CHECK_FALSE(same_direction(small[i], small[j]));

  const auto quad = enumerate_algebraic_vectors(2, 2, 2);
  CHECK(stream_has(quad, AlgVector{RealAlg(1), sqrt2()}));
  CHECK(stream_has(quad, AlgVector{RealAlg(1), -sqrt2()}));

  const auto roots = bounded_roots(2, 2);
  CHECK(std::find(roots.begin(), roots.end(), sqrt2()) != roots.end());
  CHECK(std::is_sorted(roots.begin(), roots.end()));

  // batches arrive in order of degree + height
  AlgebraicVectorStream st(2, 2, 3);
  int last = 0;
  while (st.next()) {
    CHECK(st.degree() + st.height() >= last);
    last = st.degree() + st.height();
  }
  CHECK(last == 5);
}
