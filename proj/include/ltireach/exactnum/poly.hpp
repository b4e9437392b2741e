// Univariate polynomials over Q and Z, plus Sturm sequences.

#pragma once

#include "ltireach/exactnum/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ltireach {

class IntPoly;

/// Dense polynomial with rational coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  explicit RatPoly(const IntPoly& p);

  static RatPoly x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static RatPoly monomial(int degree, const Rat& coeff = Rat(1));
  /// Monic polynomial with the given roots.
  static RatPoly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return eval(x).sign(); }

  RatPoly derivative() const;
  RatPoly monic() const;
  /// p(-x)
  RatPoly negate_variable() const;
  /// x^deg * p(1/x)
  RatPoly reversed() const;
  /// p(q(x))
  RatPoly compose(const RatPoly& q) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rat& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
  friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string str() const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder of polynomial division (b nonzero).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RatPoly g, s, t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);
RatPoly pow(const RatPoly& p, int e);
/// Product of the distinct monic irreducible factors (monic).
RatPoly squarefree_part(const RatPoly& p);
/// Yun decomposition: p = lc * prod_i f_i^i, entries (f_i, i) with f_i monic, nonconstant.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Integer polynomial, lowest degree first, no trailing zeros.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// Primitive integer polynomial with positive leading coefficient that is a
  /// positive rational multiple of p (or of -p).
  static IntPoly primitive_of(const RatPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0); }
  BigInt lc() const { return c_.empty() ? BigInt(0) : c_.back(); }
  BigInt content() const;
  /// Max absolute coefficient.
  BigInt height() const;

  /// Exact sign of p(x).
  int sign_at(const Rat& x) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string str() const;

private:
  void trim();
  std::vector<BigInt> c_;
};

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
public:
  explicit SturmSequence(const RatPoly& p);

  int variations_at(const Rat& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rat& a, const Rat& b) const;
  /// Number of distinct real roots overall.
  int count_real_roots() const;

  const RatPoly& base() const { return seq_.front(); }

private:
  std::vector<RatPoly> seq_;
};

/// A power of two strictly larger than the absolute value of every root.
Rat root_bound(const RatPoly& p);

/// det(xI - A) of a square row-major matrix, by Berkowitz's division-free
/// algorithm.
RatPoly charpoly_berkowitz(const std::vector<std::vector<Rat>>& a);

/// Companion matrix of a monic version of p (degree >= 1); its
/// characteristic polynomial is p / lc(p).
std::vector<std::vector<Rat>> companion(const RatPoly& p);

}  // namespace ltireach
