// Exact rational scalars backed by GMP.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ltireach {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(int v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;
  double to_double() const { return v_.get_d(); }

  /// Largest integer <= value.
  BigInt floor() const;
  /// Smallest integer >= value.
  BigInt ceil() const;

  std::string str() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  mpq_class v_;
};

Rat pow(const Rat& base, long exponent);
inline Rat abs(const Rat& r) { return r.abs(); }
inline bool is_zero(const Rat& r) { return r.is_zero(); }

/// Binomial coefficient as an exact integer (0 when k > n).
BigInt binomial(long n, long k);

/// Exact rational midpoint.
inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

std::size_t hash_value(const Rat& r);

}  // namespace ltireach

template <>
struct std::hash<ltireach::Rat> {
  std::size_t operator()(const ltireach::Rat& r) const { return ltireach::hash_value(r); }
};

namespace Eigen {

template <>
struct NumTraits<ltireach::Rat> : GenericNumTraits<ltireach::Rat> {
  using Real = ltireach::Rat;
  using NonInteger = ltireach::Rat;
  using Nested = ltireach::Rat;
  using Literal = ltireach::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
