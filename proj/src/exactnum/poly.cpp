#include "ltireach/exactnum/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ltireach {

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::monomial(int degree, const Rat& coeff) {
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
  c.back() = coeff;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::from_roots(const std::vector<Rat>& roots) {
  RatPoly p(Rat(1));
  for (const auto& r : roots) p = p * RatPoly(std::vector<Rat>{-r, Rat(1)});
  return p;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * lc().inverse();
}

RatPoly RatPoly::negate_variable() const {
  std::vector<Rat> c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::reversed() const {
  std::vector<Rat> c(c_.rbegin(), c_.rend());
  return RatPoly(std::move(c));
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + RatPoly(*it);
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

RatPoly operator-(const RatPoly& a) { return a * Rat(-1); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RatPoly(std::move(c));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    if (!first) os << (v.sign() > 0 ? " + " : " - ");
    else if (v.sign() < 0) os << "-";
    first = false;
    const Rat a = v.abs();
    if (i == 0 || a != Rat(1)) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat inv_lc = b.lc().inverse();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rat f = r[static_cast<std::size_t>(i)] * inv_lc;
    if (f.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0(Rat(1)), s1;
  RatPoly t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {RatPoly(), RatPoly(), RatPoly()};
  const Rat inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

RatPoly pow(const RatPoly& p, int e) {
  RatPoly result(Rat(1)), base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : RatPoly(Rat(1));
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() <= 0) return out;
  const RatPoly f = p.monic();
  RatPoly a = gcd(f, f.derivative());
  RatPoly b = f / a;
  RatPoly c = f.derivative() / a;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::primitive_of(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    BigInt t = v.num() * (l / v.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    c.push_back(std::move(t));
  }
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

BigInt IntPoly::height() const {
  BigInt h = 0;
  for (const auto& v : c_) {
    BigInt a = ::abs(v);
    if (a > h) h = a;
  }
  return h;
}

int IntPoly::sign_at(const Rat& x) const {
  if (c_.empty()) return 0;
  // sum c_i a^i b^(n-i) has the sign of p(a/b) since b > 0.
  const BigInt a = x.num(), b = x.den();
  BigInt acc = 0, bpow = 1;
  const int n = degree();
  std::vector<BigInt> apow(static_cast<std::size_t>(n) + 1);
  apow[0] = 1;
  for (int i = 1; i <= n; ++i) apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i) - 1] * a;
  for (int i = n; i >= 0; --i) {
    acc += c_[static_cast<std::size_t>(i)] * apow[static_cast<std::size_t>(i)] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.c_[static_cast<std::size_t>(i)];
    const auto& y = b.c_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

std::string IntPoly::str() const { return RatPoly(*this).str(); }

// ---------------------------------------------------------------- Sturm

namespace {

// Positive rescaling keeps signs while stopping coefficient growth.
RatPoly normalize_positive(const RatPoly& p) {
  if (p.is_zero()) return p;
  IntPoly ip = IntPoly::primitive_of(p);
  RatPoly r(ip);
  if (p.lc().sign() < 0) r = -r;
  return r;
}

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  seq_.push_back(normalize_positive(p));
  if (p.degree() == 0) return;
  seq_.push_back(normalize_positive(p.derivative()));
  while (true) {
    RatPoly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    seq_.push_back(normalize_positive(-r));
  }
}

int SturmSequence::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(q.sign_at(x));
  return count_sign_changes(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(q.lc().sign() * ((q.degree() % 2 == 0) ? 1 : -1));
  return count_sign_changes(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : seq_) signs.push_back(q.lc().sign());
  return count_sign_changes(signs);
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

Rat root_bound(const RatPoly& p) {
  // Cauchy: |root| < 1 + max |a_i / a_n|, rounded up to a power of two.
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = (p.coeff(i) / p.lc()).abs();
    if (r > m) m = r;
  }
  Rat bound = m + Rat(1);
  Rat two_pow(1);
  while (two_pow <= bound) two_pow *= Rat(2);
  return two_pow;
}

RatPoly charpoly_berkowitz(const std::vector<std::vector<Rat>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return RatPoly(Rat(1));
  // vect holds coefficients highest degree first.
  std::vector<Rat> vect{Rat(1), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // t = [1, -a_rr, -R C, -R M C, ..., -R M^(r-1) C]
    std::vector<Rat> t(r + 2);
    t[0] = Rat(1);
    t[1] = -a[r][r];
    std::vector<Rat> mc(r);
    for (std::size_t i = 0; i < r; ++i) mc[i] = a[i][r];
    for (std::size_t k = 2; k < r + 2; ++k) {
      Rat acc(0);
      for (std::size_t i = 0; i < r; ++i) acc += a[r][i] * mc[i];
      t[k] = -acc;
      if (k + 1 < r + 2) {
        std::vector<Rat> next(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * mc[j];
        mc = std::move(next);
      }
    }
    std::vector<Rat> nv(r + 2, Rat(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * vect[j];
    vect = std::move(nv);
  }
  std::reverse(vect.begin(), vect.end());
  return RatPoly(std::move(vect));
}

std::vector<std::vector<Rat>> companion(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("companion matrix of a constant");
  const RatPoly m = p.monic();
  std::vector<std::vector<Rat>> c(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 1; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = Rat(1);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] = -m.coeff(i);
  return c;
}

}  // namespace ltireach
