#include "doctest.h"

#include "ltireach/exactnum/factor.hpp"
#include "ltireach/exactnum/number_field.hpp"
#include "ltireach/exactnum/real_alg.hpp"

#include <random>

using namespace ltireach;

namespace {

RatPoly poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(v);
}

RealAlg sqrt_of(long n) {
  for (const auto& r : real_roots(poly({-n, 0, 1})))
    if (r.sign() > 0) return r;
  throw std::logic_error("no root");
}

// Rational enclosure [lo, hi] of sqrt(n) of width <= 2^-bits, by bisection on squares.
std::pair<Rat, Rat> sqrt_enclosure(long n, int bits) {
  Rat lo(0), hi(n + 1);
  for (int i = 0; i < bits + 8; ++i) {
    Rat m = midpoint(lo, hi);
    if (m * m < Rat(n)) lo = m;
    else hi = m;
  }
  return {lo, hi};
}

Rat random_rat(std::mt19937& g, int range = 20) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rat(BigInt(num(g)), BigInt(den(g)));
}

}  // namespace

TEST_CASE("rat parsing and canonical form") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-6/4").den() == 2);
  CHECK(Rat::parse("-6/4").num() == -3);
  CHECK(Rat::parse("7").is_integer());
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(pow(Rat(2, 3), -2L) == Rat(9, 4));
}

TEST_CASE("rat field axioms on random triples") {
  std::mt19937 g(7);
  for (int i = 0; i < 500; ++i) {
    Rat a = random_rat(g), b = random_rat(g), c = random_rat(g);
    CHECK((a + b) - b == a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
    CHECK(a.den() > 0);
  }
}

TEST_CASE("polynomial basics") {
  RatPoly p = poly({-2, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(2)) == Rat(2));
  auto [q, r] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  auto sq = squarefree_decomposition(RatPoly::from_roots({Rat(1), Rat(1), Rat(2), Rat(3), Rat(3), Rat(3)}));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].first == poly({-2, 1}));
  CHECK(sq[1].first == poly({-1, 1}));
  CHECK(sq[2].first == poly({-3, 1}));
  CHECK(sq[2].second == 3);
  auto e = extended_gcd(poly({-1, 0, 1}), poly({-2, 1}));
  CHECK(e.g == RatPoly(Rat(1)));
  CHECK(e.s * poly({-1, 0, 1}) + e.t * poly({-2, 1}) == RatPoly(Rat(1)));
}

TEST_CASE("berkowitz characteristic polynomial") {
  std::vector<std::vector<Rat>> a{{Rat(1, 3), Rat(0)}, {Rat(0), Rat(2, 3)}};
  CHECK(charpoly_berkowitz(a) == RatPoly::from_roots({Rat(1, 3), Rat(2, 3)}));
  std::vector<std::vector<Rat>> rot{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  CHECK(charpoly_berkowitz(rot) == poly({1, 0, 1}));
  // companion matrix round trip
  RatPoly p = poly({5, -3, 0, 2});
  CHECK(charpoly_berkowitz(companion(p)) == p.monic());
}

TEST_CASE("factorization") {
  // x^4 - 10x^2 + 1 is irreducible over Q; brute force over monic integer quadratics.
  IntPoly sd({1, 0, -10, 0, 1});
  CHECK(is_irreducible(sd));
  for (long b = -20; b <= 20; ++b)
    for (long c : {-1L, 1L}) CHECK_FALSE((RatPoly(sd) % poly({c, b, 1})).is_zero());

  RatPoly prod = poly({-2, 0, 1}) * poly({1, 1, 1}) * poly({-3, 2}) * poly({0, 1}) * poly({-5, 0, 0, 1});
  auto fs = factor(prod);
  CHECK(fs.size() == 5);
  RatPoly back(Rat(1));
  for (auto& [f, m] : fs) {
    CHECK(m == 1);
    CHECK(is_irreducible(f));
    back = back * RatPoly(f);
  }
  CHECK(IntPoly::primitive_of(back) == IntPoly::primitive_of(prod));

  // (x^2-2)^2 (x-1)^3
  auto fm = factor(pow(poly({-2, 0, 1}), 2) * pow(poly({-1, 1}), 3));
  REQUIRE(fm.size() == 2);
  CHECK(fm[0].second == 3);
  CHECK(fm[1].second == 2);

  // many linear factors stress the recombination
  std::vector<Rat> roots;
  for (int i = -5; i <= 5; ++i) roots.emplace_back(i, 3);
  CHECK(irreducible_factors(RatPoly::from_roots(roots)).size() == 11);

  // product of two quartics that split into many factors mod small primes
  RatPoly a = poly({1, 0, -10, 0, 1}), b = poly({9, 0, -14, 0, 1});
  CHECK(irreducible_factors(a * b).size() == 2);
}

TEST_CASE("real root isolation") {
  auto r = sturm_isolate_real_roots(IntPoly({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -r[1]);
  CHECK(r[0].sign() < 0);
  CHECK(r[1].sign() > 0);
  // the interval of +sqrt2 brackets it: lo^2 < 2 < hi^2
  CHECK(r[1].lo() * r[1].lo() < Rat(2));
  CHECK(r[1].hi() * r[1].hi() > Rat(2));

  auto lin = sturm_isolate_real_roots(IntPoly({-3, 1}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].is_rational());
  CHECK(lin[0].to_rat() == Rat(3));
  CHECK(lin[0].lo() == lin[0].hi());

  auto fig2 = real_roots(RatPoly::from_roots({Rat(1, 3), Rat(2, 3)}));
  REQUIRE(fig2.size() == 2);
  CHECK(fig2[0] == RealAlg(Rat(1, 3)));
  CHECK(fig2[1] == RealAlg(Rat(2, 3)));
  CHECK(alg_compare(fig2[0], fig2[1]) == std::strong_ordering::less);
}

TEST_CASE("root count matches constructed roots") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> roots;
    std::uniform_int_distribution<int> k(1, 4);
    const int n = k(g);
    for (int i = 0; i < n; ++i) roots.push_back(random_rat(g, 9));
    // a real-root-free quadratic factor and a pair of irrational roots
    RatPoly p = RatPoly::from_roots(roots) * poly({trial % 5 + 1, 0, 1}) * poly({-(trial % 7 + 2), 0, 1});
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    int expected = static_cast<int>(roots.size());
    const long c = trial % 7 + 2;
    if (c != 4) expected += 2;
    else {
      // x^2 - 4 contributes rational roots +-2 that may coincide with random roots
      for (long s : {-2L, 2L})
        if (std::find(roots.begin(), roots.end(), Rat(s)) == roots.end()) ++expected;
    }
    auto iso = real_roots(p);
    CHECK(static_cast<int>(iso.size()) == expected);
    SturmSequence st(squarefree_part(p));
    CHECK(st.variations_at_neg_infinity() - st.variations_at_pos_infinity() == expected);
    for (std::size_t i = 1; i < iso.size(); ++i) CHECK(iso[i - 1] < iso[i]);
  }
}

TEST_CASE("algebraic arithmetic") {
  const RealAlg s2 = sqrt_of(2), s3 = sqrt_of(3), s6 = sqrt_of(6);
  CHECK(s2 * s2 == RealAlg(2));
  CHECK((s2 * s2).is_rational());
  CHECK(s2 + RealAlg(0) == s2);

  const RealAlg sum = s2 + s3;
  CHECK(sum.minpoly() == IntPoly({1, 0, -10, 0, 1}));
  CHECK(sum > RealAlg(3));
  CHECK(sum < RealAlg(Rat(7, 2)));
  // independent enclosure of sqrt2 + sqrt3 via bisection on squares
  auto [l2, h2] = sqrt_enclosure(2, 40);
  auto [l3, h3] = sqrt_enclosure(3, 40);
  RatPoly mp(sum.minpoly());
  CHECK(mp.sign_at(l2 + l3) * mp.sign_at(h2 + h3) < 0);

  const RealAlg z = (s2 + s3) * (s2 + s3) - RealAlg(5) - RealAlg(2) * s6;
  CHECK(alg_sign(z) == 0);
  CHECK(z.is_rational());

  CHECK(alg_sign(s2 - RealAlg(Rat(3, 2))) == -1);
  CHECK(alg_sign(RealAlg(0)) == 0);
  CHECK(alg_compare(s2, RealAlg(Rat::parse("141421356/100000000"))) == std::strong_ordering::greater);
  CHECK(alg_compare(s2, s2) == std::strong_ordering::equal);
  CHECK((s2 / s2) == RealAlg(1));
  CHECK(s2.inverse() * RealAlg(2) == s2);
  CHECK_THROWS_AS(alg_arith(s2, RealAlg(0), AlgOp::Div), std::domain_error);
  CHECK(pow(s2, 5) == RealAlg(4) * s2);
  CHECK(-(-s3) == s3);
  CHECK(evaluate(poly({-5, 0, 1}), s3) == RealAlg(-2));
}

TEST_CASE("sign of difference agrees with comparison") {
  std::mt19937 g(5);
  std::vector<RealAlg> pool;
  for (long n : {2L, 3L, 5L, 7L}) {
    pool.push_back(sqrt_of(n));
    pool.push_back(-sqrt_of(n));
  }
  for (int i = 0; i < 6; ++i) pool.emplace_back(random_rat(g, 5));
  pool.push_back(sqrt_of(2) * RealAlg(Rat(3, 2)) + RealAlg(Rat(1, 7)));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto o = alg_compare(a, b);
      const int s = alg_sign(a - b);
      CHECK(((o == std::strong_ordering::less && s < 0) || (o == std::strong_ordering::equal && s == 0) ||
             (o == std::strong_ordering::greater && s > 0)));
    }
}

TEST_CASE("rational round trip and degree ceiling") {
  std::mt19937 g(3);
  for (int i = 0; i < 50; ++i) {
    Rat r = random_rat(g);
    RealAlg a(r);
    CHECK(a.is_rational());
    CHECK(a.to_rat() == r);
    CHECK(RealAlg::from_parts(a.minpoly(), a.lo(), a.hi()).to_rat() == r);
  }
  const int old = RealAlg::degree_ceiling();
  RealAlg::set_degree_ceiling(3);
  CHECK_THROWS_AS(sqrt_of(2) + sqrt_of(3), DegreeLimitExceeded);
  RealAlg::set_degree_ceiling(old);
  CHECK_THROWS_AS(RealAlg::from_root(IntPoly({-2, 0, 1}), Rat(-2), Rat(2)), std::invalid_argument);
}

TEST_CASE("number field elements") {
  auto field = std::make_shared<NumberField>(sqrt_of(2));
  NFElem a = NFElem::generator(field);
  CHECK(a * a == NFElem(2));
  CHECK((a * a).is_rational());
  NFElem b = a + NFElem(1);
  NFElem inv = b.inverse();
  CHECK(b * inv == NFElem(1));
  CHECK((a - NFElem(Rat(3, 2))).sign() < 0);
  CHECK((a - NFElem(Rat(4, 3))).sign() > 0);
  CHECK(b.to_real_alg() == sqrt_of(2) + RealAlg(1));
}
