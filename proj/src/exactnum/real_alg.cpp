#include "ltireach/exactnum/real_alg.hpp"

#include "ltireach/exactnum/factor.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>

namespace ltireach {

namespace {

std::atomic<int> g_degree_ceiling{64};

IntPoly normalized(const RatPoly& p) { return IntPoly::primitive_of(p); }

Rat linear_root(const IntPoly& p) { return Rat(-p.coeff(0), p.coeff(1)); }

// Roots of sq in the closed interval.
int count_closed(const SturmSequence& s, const RatPoly& sq, const Interval& iv) {
  int c = s.count_roots(iv.lo, iv.hi);
  if (sq.sign_at(iv.lo) == 0) ++c;
  return c;
}

using Dense = std::vector<std::vector<Rat>>;

Dense kron_sum(const Dense& a, const Dense& b) {
  const std::size_t m = a.size(), n = b.size();
  Dense r(m * n, std::vector<Rat>(m * n, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!a[i][j].is_zero())
        for (std::size_t k = 0; k < n; ++k) r[i * n + k][j * n + k] += a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (!b[k][l].is_zero()) r[i * n + k][i * n + l] += b[k][l];
  return r;
}

Dense kron_product(const Dense& a, const Dense& b) {
  const std::size_t m = a.size(), n = b.size();
  Dense r(m * n, std::vector<Rat>(m * n, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) r[i * n + k][j * n + l] = a[i][j] * b[k][l];
    }
  return r;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense r(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

void check_degree(int d) {
  if (d > g_degree_ceiling.load())
    throw DegreeLimitExceeded("algebraic degree " + std::to_string(d) + " exceeds ceiling " +
                              std::to_string(g_degree_ceiling.load()));
}

// Refines an irrational value until r lies outside its interval.
std::strong_ordering compare_with_rat(RealAlg x, const Rat& r) {
  while (x.lo() <= r && r <= x.hi()) x = x.bisected();
  return r < x.lo() ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering flip(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater) return std::strong_ordering::less;
  return o;
}

void isolate(const SturmSequence& s, const IntPoly& f, const Rat& lo, const Rat& hi, int count,
             std::vector<RealAlg>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RealAlg::from_root(f, lo, hi));
    return;
  }
  const Rat mid = midpoint(lo, hi);
  const int left = s.count_roots(lo, mid);
  isolate(s, f, lo, mid, left, out);
  isolate(s, f, mid, hi, count - left, out);
}

}  // namespace

// ---------------------------------------------------------------- Interval

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rat& s, const Interval& a) {
  if (s.sign() >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

Interval eval_enclosure(const RatPoly& p, const Interval& x) {
  Interval acc{Rat(0), Rat(0)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

// ---------------------------------------------------------------- RealAlg

RealAlg::RealAlg(const Rat& r) : minpoly_(IntPoly({-r.num(), r.den()})), lo_(r), hi_(r) {}

int RealAlg::degree_ceiling() { return g_degree_ceiling.load(); }
void RealAlg::set_degree_ceiling(int d) { g_degree_ceiling.store(d); }

RealAlg RealAlg::from_root(const IntPoly& p_in, const Rat& lo, const Rat& hi) {
  const IntPoly p = normalized(RatPoly(p_in));
  if (p.degree() < 1) throw std::invalid_argument("root of a constant polynomial");
  if (p.degree() == 1) {
    const Rat r = linear_root(p);
    if (!(lo < r && r <= hi) && !(lo == hi && r == lo))
      throw std::invalid_argument("interval does not contain the rational root");
    return RealAlg(r);
  }
  if (!(lo < hi)) throw std::invalid_argument("degenerate isolating interval");
  const SturmSequence s{RatPoly(p)};
  if (s.count_roots(lo, hi) != 1) throw std::invalid_argument("interval does not isolate a single root");
  if (p.sign_at(hi) == 0 || p.sign_at(lo) == 0)
    throw std::invalid_argument("minimal polynomial of degree > 1 has a rational root");
  return RealAlg(p, lo, hi);
}

RealAlg RealAlg::root_of(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("root of the zero polynomial");
  const RatPoly sq = squarefree_part(p);
  const SturmSequence s(sq);
  const Interval iv{lo, hi};
  if ((lo < hi ? s.count_roots(lo, hi) : (sq.sign_at(lo) == 0 ? 1 : 0)) != 1)
    throw std::invalid_argument("interval does not isolate a single root");
  for (const auto& f : irreducible_factors(sq)) {
    const RatPoly fr(f);
    const int c = lo < hi ? SturmSequence(fr).count_roots(lo, hi) : (fr.sign_at(lo) == 0 ? 1 : 0);
    if (c == 1) return from_root(f, lo, hi);
  }
  (void)iv;
  throw std::logic_error("root not found among irreducible factors");
}

RealAlg RealAlg::from_parts(const IntPoly& minpoly, const Rat& lo, const Rat& hi) {
  if (!is_irreducible(minpoly)) throw std::invalid_argument("minimal polynomial is reducible");
  if (minpoly.degree() == 1 && lo == hi) {
    if (linear_root(minpoly) != lo) throw std::invalid_argument("interval does not contain the rational root");
    return RealAlg(lo);
  }
  return from_root(minpoly, lo, hi);
}

Rat RealAlg::to_rat() const {
  if (!is_rational()) throw std::domain_error("algebraic number is irrational");
  return lo_;
}

double RealAlg::to_double() const {
  if (is_rational()) return lo_.to_double();
  const RealAlg r = refined(Rat(BigInt(1), BigInt(1) << 64));
  return midpoint(r.lo_, r.hi_).to_double();
}

RealAlg RealAlg::bisected() const {
  if (is_rational()) return *this;
  const Rat mid = midpoint(lo_, hi_);
  const int sm = minpoly_.sign_at(mid);
  const int sl = minpoly_.sign_at(lo_);
  if (sm == sl) return RealAlg(minpoly_, mid, hi_);
  return RealAlg(minpoly_, lo_, mid);
}

RealAlg RealAlg::refined(const Rat& width) const {
  RealAlg r = *this;
  while (r.hi_ - r.lo_ > width) r = r.bisected();
  return r;
}

int RealAlg::sign() const {
  const auto o = *this <=> RealAlg(Rat(0));
  return o == std::strong_ordering::less ? -1 : (o == std::strong_ordering::greater ? 1 : 0);
}

RealAlg RealAlg::operator-() const {
  if (is_rational()) return RealAlg(-lo_);
  return RealAlg(normalized(RatPoly(minpoly_).negate_variable()), -hi_, -lo_);
}

RealAlg RealAlg::inverse() const {
  if (is_rational()) {
    if (lo_.is_zero()) throw std::domain_error("division by zero algebraic number");
    return RealAlg(lo_.inverse());
  }
  RealAlg r = *this;
  while (r.lo_.sign() <= 0 && r.hi_.sign() >= 0) r = r.bisected();
  return RealAlg(normalized(RatPoly(r.minpoly_).reversed()), r.hi_.inverse(), r.lo_.inverse());
}

RealAlg identify_root(const RatPoly& candidates, const std::function<Interval(int)>& enclose) {
  const RatPoly sq = squarefree_part(candidates);
  const SturmSequence s(sq);
  Interval iv;
  for (int k = 0;; ++k) {
    iv = enclose(k);
    if (iv.lo == iv.hi) {
      if (sq.sign_at(iv.lo) != 0) throw std::logic_error("point enclosure is not a root of the candidate polynomial");
      return RealAlg(iv.lo);
    }
    const int c = count_closed(s, sq, iv);
    if (c == 1) break;
    if (c == 0) throw std::logic_error("enclosure lost the root of the candidate polynomial");
  }
  for (const auto& f : irreducible_factors(sq)) {
    const RatPoly fr(f);
    if (count_closed(SturmSequence(fr), fr, iv) != 1) continue;
    if (f.degree() == 1) return RealAlg(linear_root(f));
    return RealAlg::from_root(f, iv.lo, iv.hi);
  }
  throw std::logic_error("root not found among irreducible factors");
}

namespace {

RealAlg shift(const RealAlg& b, const Rat& r) {
  RatPoly p(b.minpoly());
  p = p.compose(RatPoly(std::vector<Rat>{-r, Rat(1)}));
  return RealAlg::from_root(IntPoly::primitive_of(p), b.lo() + r, b.hi() + r);
}

RealAlg scale(const RealAlg& b, const Rat& r) {
  RatPoly p(b.minpoly());
  p = p.compose(RatPoly(std::vector<Rat>{Rat(0), r.inverse()}));
  Interval iv = r * b.interval();
  return RealAlg::from_root(IntPoly::primitive_of(p), iv.lo, iv.hi);
}

}  // namespace

RealAlg operator+(const RealAlg& a, const RealAlg& b) {
  if (a.is_rational() && b.is_rational()) return RealAlg(a.lo() + b.lo());
  if (a.is_rational()) return shift(b, a.lo());
  if (b.is_rational()) return shift(a, b.lo());
  check_degree(a.degree() * b.degree());
  const RatPoly cp = charpoly_berkowitz(kron_sum(companion(RatPoly(a.minpoly())), companion(RatPoly(b.minpoly()))));
  RealAlg x = a, y = b;
  return identify_root(cp, [&](int k) {
    if (k > 0) {
      x = x.bisected();
      y = y.bisected();
    }
    return x.interval() + y.interval();
  });
}

RealAlg operator-(const RealAlg& a, const RealAlg& b) { return a + (-b); }

RealAlg operator*(const RealAlg& a, const RealAlg& b) {
  if (a.is_zero() || b.is_zero()) return RealAlg(Rat(0));
  if (a.is_rational() && b.is_rational()) return RealAlg(a.lo() * b.lo());
  if (a.is_rational()) return scale(b, a.lo());
  if (b.is_rational()) return scale(a, b.lo());
  check_degree(a.degree() * b.degree());
  const RatPoly cp =
      charpoly_berkowitz(kron_product(companion(RatPoly(a.minpoly())), companion(RatPoly(b.minpoly()))));
  RealAlg x = a, y = b;
  return identify_root(cp, [&](int k) {
    if (k > 0) {
      x = x.bisected();
      y = y.bisected();
    }
    return x.interval() * y.interval();
  });
}

RealAlg operator/(const RealAlg& a, const RealAlg& b) {
  if (b.is_zero()) throw std::domain_error("division by zero algebraic number");
  return a * b.inverse();
}

std::strong_ordering operator<=>(const RealAlg& a, const RealAlg& b) {
  if (a.is_rational() && b.is_rational()) return a.lo() <=> b.lo();
  if (b.is_rational()) return compare_with_rat(a, b.lo());
  if (a.is_rational()) return flip(compare_with_rat(b, a.lo()));
  RealAlg x = a, y = b;
  if (x.minpoly() == y.minpoly()) {
    const Rat lo = std::max(x.lo(), y.lo());
    const Rat hi = std::min(x.hi(), y.hi());
    if (lo < hi && SturmSequence(RatPoly(x.minpoly())).count_roots(lo, hi) == 1) return std::strong_ordering::equal;
  }
  while (!(x.hi() < y.lo() || y.hi() < x.lo())) {
    x = x.bisected();
    y = y.bisected();
  }
  return x.hi() < y.lo() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool operator==(const RealAlg& a, const RealAlg& b) { return (a <=> b) == std::strong_ordering::equal; }

std::string RealAlg::str() const {
  if (is_rational()) return lo_.str();
  return "root(" + minpoly_.str() + ", [" + lo_.str() + ", " + hi_.str() + "])";
}

std::ostream& operator<<(std::ostream& os, const RealAlg& a) { return os << a.str(); }

std::vector<RealAlg> sturm_isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
  std::vector<RealAlg> out;
  if (p.degree() == 0) return out;
  for (const auto& f : irreducible_factors(RatPoly(p))) {
    if (f.degree() == 1) {
      out.emplace_back(linear_root(f));
      continue;
    }
    const RatPoly fr(f);
    const SturmSequence s(fr);
    const Rat b = root_bound(fr);
    isolate(s, f, -b, b, s.count_roots(-b, b), out);
  }
  std::sort(out.begin(), out.end(), [](const RealAlg& x, const RealAlg& y) { return x < y; });
  return out;
}

std::vector<RealAlg> real_roots(const RatPoly& p) { return sturm_isolate_real_roots(IntPoly::primitive_of(p)); }

RealAlg alg_arith(const RealAlg& a, const RealAlg& b, AlgOp op) {
  switch (op) {
    case AlgOp::Add: return a + b;
    case AlgOp::Sub: return a - b;
    case AlgOp::Mul: return a * b;
    case AlgOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown algebraic operation");
}

int alg_sign(const RealAlg& a) { return a.sign(); }
std::strong_ordering alg_compare(const RealAlg& a, const RealAlg& b) { return a <=> b; }

RealAlg evaluate(const RatPoly& g, const RealAlg& a) {
  if (a.is_rational()) return RealAlg(g.eval(a.lo()));
  const RatPoly m(a.minpoly());
  const RatPoly h = g % m;
  if (h.degree() <= 0) return RealAlg(h.coeff(0));
  if (h.degree() == 1) return scale(a, h.coeff(1)) + RealAlg(h.coeff(0));
  const Dense c = companion(m);
  const std::size_t n = c.size();
  // Horner: h(C)
  Dense acc(n, std::vector<Rat>(n, Rat(0)));
  for (int i = h.degree(); i >= 0; --i) {
    acc = dense_mul(acc, c);
    for (std::size_t k = 0; k < n; ++k) acc[k][k] += h.coeff(i);
  }
  RealAlg x = a;
  return identify_root(charpoly_berkowitz(acc), [&](int k) {
    if (k > 0) x = x.bisected();
    return eval_enclosure(h, x.interval());
  });
}

RealAlg pow(const RealAlg& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  if (a.is_rational()) return RealAlg(pow(a.lo(), e));
  return evaluate(RatPoly::monomial(e), a);
}

RealAlg abs(const RealAlg& a) { return a.sign() < 0 ? -a : a; }

}  // namespace ltireach
