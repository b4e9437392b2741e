// Berlekamp factorization mod p, quadratic Hensel lifting along a factor
// tree, and recombination of lifted factors by trial division.

#include "ltireach/exactnum/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltireach {

namespace {

using ZP = std::vector<BigInt>;

void trim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("non-invertible leading coefficient during factorization");
  return r;
}

ZP reduce(ZP a, const BigInt& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZP add(const ZP& a, const ZP& b, const BigInt& m) {
  ZP r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}

ZP sub(const ZP& a, const ZP& b, const BigInt& m) {
  ZP r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

ZP mul(const ZP& a, const ZP& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

ZP scale(const ZP& a, const BigInt& s, const BigInt& m) {
  ZP r = a;
  for (auto& c : r) c *= s;
  return reduce(std::move(r), m);
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZP, ZP> divmod(const ZP& a, const ZP& b, const BigInt& m) {
  ZP r = reduce(a, m);
  if (deg(r) < deg(b)) return {ZP{}, r};
  const BigInt inv = inverse_mod(b.back(), m);
  ZP q(static_cast<std::size_t>(deg(r) - deg(b)) + 1, BigInt(0));
  for (int i = deg(r); i >= deg(b); --i) {
    const BigInt f = mod(r[static_cast<std::size_t>(i)] * inv, m);
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - deg(b))] = f;
    for (int j = 0; j <= deg(b); ++j) {
      auto& c = r[static_cast<std::size_t>(i - deg(b) + j)];
      c = mod(c - f * b[static_cast<std::size_t>(j)], m);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

ZP monic(const ZP& a, const BigInt& m) {
  if (a.empty()) return a;
  return scale(a, inverse_mod(a.back(), m), m);
}

ZP gcd_p(ZP a, ZP b, const BigInt& p) {
  while (!b.empty()) {
    ZP r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 mod p, assuming gcd(a, b) = 1.
std::pair<ZP, ZP> ext_gcd_p(const ZP& a, const ZP& b, const BigInt& p) {
  ZP r0 = reduce(a, p), r1 = reduce(b, p);
  ZP s0{BigInt(1)}, s1{}, t0{}, t1{BigInt(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZP s2 = sub(s0, mul(q, s1, p), p);
    ZP t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("factors not coprime mod p");
  const BigInt inv = inverse_mod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZP powmod(const ZP& base, BigInt e, const ZP& f, const BigInt& p) {
  ZP result{BigInt(1)};
  ZP b = divmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod(mul(result, b, p), f, p).second;
    e >>= 1;
    if (e > 0) b = divmod(mul(b, b, p), f, p).second;
  }
  return result;
}

ZP derivative(const ZP& a, const BigInt& m) {
  if (a.size() <= 1) return {};
  ZP d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * BigInt(static_cast<unsigned long>(i));
  return reduce(std::move(d), m);
}

// Basis of {v : v^p = v mod f} as coefficient vectors (f monic, squarefree mod p).
std::vector<ZP> berlekamp_basis(const ZP& f, const BigInt& p) {
  const int n = deg(f);
  const ZP xp = powmod(ZP{BigInt(0), BigInt(1)}, p, f, p);
  // Q[i] = x^(i p) mod f; the kernel of (Q - I)^T gives the basis.
  std::vector<ZP> rows;
  ZP cur{BigInt(1)};
  for (int i = 0; i < n; ++i) {
    rows.push_back(cur);
    cur = divmod(mul(cur, xp, p), f, p).second;
  }
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt q = j < static_cast<int>(rows[static_cast<std::size_t>(i)].size()) ? rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] : BigInt(0);
      if (i == j) q -= 1;
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mod(q, p);
    }
  }
  // Reduced row echelon form mod p.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (t[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(t[static_cast<std::size_t>(row)], t[static_cast<std::size_t>(piv)]);
    const BigInt inv = inverse_mod(t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
    for (auto& c : t[static_cast<std::size_t>(row)]) c = mod(c * inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      const BigInt f2 = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f2 == 0) continue;
      for (int c = 0; c < n; ++c) {
        auto& x = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        x = mod(x - f2 * t[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)], p);
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<ZP> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    ZP v(static_cast<std::size_t>(n), BigInt(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = mod(-t[r][static_cast<std::size_t>(free)], p);
    trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ZP> berlekamp_split(const ZP& f, const std::vector<ZP>& basis, const BigInt& p) {
  const std::size_t r = basis.size();
  std::vector<ZP> facs{f};
  for (const auto& v : basis) {
    if (facs.size() >= r) break;
    if (deg(v) <= 0) continue;
    for (std::size_t i = 0; i < facs.size() && facs.size() < r;) {
      const ZP u = facs[i];
      bool split = false;
      if (deg(u) > 1) {
        for (BigInt s = 0; s < p; ++s) {
          ZP g = gcd_p(u, sub(v, ZP{s}, p), p);
          if (deg(g) > 0 && deg(g) < deg(u)) {
            facs[i] = g;
            facs.push_back(divmod(u, g, p).first);
            split = true;
            break;
          }
        }
      }
      if (!split) ++i;
    }
  }
  for (auto& g : facs) g = monic(g, p);
  return facs;
}

ZP product(const std::vector<ZP>& facs, std::size_t from, std::size_t to, const BigInt& m) {
  ZP r{BigInt(1)};
  for (std::size_t i = from; i < to; ++i) r = mul(r, facs[i], m);
  return r;
}

// Lifts f = g h (mod p) with h monic to a factorization mod target.
void hensel_tree(const ZP& f, const std::vector<ZP>& facs, const BigInt& p, const BigInt& target,
                 std::vector<ZP>& out) {
  if (facs.size() == 1) {
    out.push_back(monic(reduce(f, target), target));
    return;
  }
  const std::size_t half = facs.size() / 2;
  const BigInt lcf = mod(f.back(), p);
  ZP g = scale(product(facs, 0, half, p), lcf, p);
  ZP h = product(facs, half, facs.size(), p);
  auto [s, t] = ext_gcd_p(g, h, p);
  BigInt m = p;
  while (m < target) {
    BigInt m2 = m * m;
    if (m2 > target) m2 = target;
    const ZP e = sub(f, mul(g, h, m2), m2);
    auto [q, r] = divmod(mul(s, e, m2), h, m2);
    ZP g2 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
    ZP h2 = add(h, r, m2);
    const ZP b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), ZP{BigInt(1)}, m2);
    auto [c, d] = divmod(mul(s, b, m2), h2, m2);
    ZP s2 = sub(s, d, m2);
    ZP t2 = sub(sub(t, mul(t, b, m2), m2), mul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
  std::vector<ZP> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ZP> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  hensel_tree(g, left, p, target, out);
  hensel_tree(h, right, p, target, out);
}

ZP symmetric(ZP a, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

bool divides(const IntPoly& g, const IntPoly& f) {
  if (g.degree() > f.degree()) return false;
  // Cheap necessary conditions before full division.
  if (f.lc() % g.lc() != 0) return false;
  if (g.coeff(0) != 0 && f.coeff(0) % g.coeff(0) != 0) return false;
  return (RatPoly(f) % RatPoly(g)).is_zero();
}

IntPoly exact_quotient(const IntPoly& f, const IntPoly& g) {
  return IntPoly::primitive_of(RatPoly(f) / RatPoly(g));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> ps;
    for (unsigned long n = 3; n < 4000; n += 2) {
      bool prime = true;
      for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in) {
  if (f_in.degree() <= 0) throw std::invalid_argument("factor_squarefree needs positive degree");
  IntPoly f = IntPoly::primitive_of(RatPoly(f_in));
  if (f.degree() == 1) return {f};

  const ZP fz = f.coeffs();
  const BigInt lc = f.lc();

  // Choose among a few good primes the one giving the fewest modular factors.
  BigInt best_p = 0;
  std::vector<ZP> best_basis;
  ZP best_fbar;
  int good = 0;
  for (unsigned long pp : small_primes()) {
    const BigInt p(pp);
    if (lc % p == 0) continue;
    const ZP fbar = monic(reduce(fz, p), p);
    if (deg(gcd_p(fbar, derivative(fbar, p), p)) != 0) continue;
    std::vector<ZP> basis = berlekamp_basis(fbar, p);
    if (best_p == 0 || basis.size() < best_basis.size()) {
      best_p = p;
      best_basis = std::move(basis);
      best_fbar = fbar;
    }
    if (best_basis.size() == 1 || ++good >= 5) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best_basis.size() == 1) return {f};

  const BigInt& p = best_p;
  std::vector<ZP> modular = berlekamp_split(best_fbar, best_basis, p);

  // Lift beyond twice the Mignotte bound 2^n |f|_2 |lc|.
  BigInt norm_sq = 0;
  for (const auto& c : fz) norm_sq += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  BigInt bound = norm * ::abs(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree() + 1));
  BigInt target = p;
  while (target <= bound) target *= p;

  std::vector<ZP> lifted;
  hensel_tree(fz, modular, p, target, lifted);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<ZP> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZP g{rest.lc()};
      for (std::size_t i : idx) g = mul(g, remaining[i], target);
      g = symmetric(std::move(g), target);
      IntPoly cand = IntPoly::primitive_of(RatPoly(IntPoly(g)));
      if (cand.degree() > 0 && divides(cand, rest)) {
        result.push_back(cand);
        rest = exact_quotient(rest, cand);
        std::vector<ZP> next;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
        remaining = std::move(next);
        found = true;
        break;
      }
    } while (next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

std::vector<std::pair<IntPoly, int>> factor(const RatPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [g, mult] : squarefree_decomposition(p))
    for (auto& h : factor_squarefree(IntPoly::primitive_of(g))) out.emplace_back(std::move(h), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<IntPoly> irreducible_factors(const RatPoly& p) {
  std::vector<IntPoly> out;
  for (auto& [g, mult] : factor(p)) out.push_back(std::move(g));
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() <= 0) return false;
  const auto fs = factor(RatPoly(f));
  return fs.size() == 1 && fs.front().second == 1;
}

}  // namespace ltireach
