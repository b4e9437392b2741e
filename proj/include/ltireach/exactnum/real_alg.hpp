// Real algebraic numbers as (minimal polynomial, isolating interval).

#pragma once

#include "ltireach/exactnum/poly.hpp"

#include <compare>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltireach {

/// Thrown when an algebraic operation would exceed the degree ceiling.
class DegreeLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Closed rational interval.
struct Interval {
  Rat lo, hi;

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rat& s, const Interval& a);
/// Enclosure of p over the interval (Horner with interval operations).
Interval eval_enclosure(const RatPoly& p, const Interval& x);

/// A real algebraic number. The minimal polynomial is irreducible, primitive
/// and has a positive leading coefficient. Degree one means an exact rational
/// with lo == hi == the value; otherwise lo < hi are rational and the minimal
/// polynomial has exactly one root in (lo, hi) and none at the endpoints.
class RealAlg {
public:
  RealAlg() : RealAlg(Rat(0)) {}
  RealAlg(const Rat& r);  // NOLINT(google-explicit-constructor)
  RealAlg(int r) : RealAlg(Rat(r)) {}  // NOLINT(google-explicit-constructor)

  /// Root of the irreducible polynomial p inside (lo, hi]; validated by a
  /// Sturm count. Throws std::invalid_argument if the interval does not
  /// isolate exactly one root.
  static RealAlg from_root(const IntPoly& p, const Rat& lo, const Rat& hi);
  /// Root of an arbitrary nonzero polynomial in (lo, hi]; p is factored and
  /// the factor owning the root is kept.
  static RealAlg root_of(const RatPoly& p, const Rat& lo, const Rat& hi);
  /// Deserialization helper; validates like from_root.
  static RealAlg from_parts(const IntPoly& minpoly, const Rat& lo, const Rat& hi);

  const IntPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }

  bool is_rational() const { return minpoly_.degree() == 1; }
  /// Exact value if rational; throws otherwise.
  Rat to_rat() const;
  double to_double() const;

  /// Copy whose isolating interval is at most `width` wide.
  RealAlg refined(const Rat& width) const;
  /// One bisection step (identity for rationals).
  RealAlg bisected() const;

  int sign() const;
  bool is_zero() const { return is_rational() && lo_.is_zero(); }

  RealAlg operator-() const;
  RealAlg inverse() const;

  friend RealAlg operator+(const RealAlg& a, const RealAlg& b);
  friend RealAlg operator-(const RealAlg& a, const RealAlg& b);
  friend RealAlg operator*(const RealAlg& a, const RealAlg& b);
  friend RealAlg operator/(const RealAlg& a, const RealAlg& b);
  RealAlg& operator+=(const RealAlg& o) { return *this = *this + o; }
  RealAlg& operator-=(const RealAlg& o) { return *this = *this - o; }
  RealAlg& operator*=(const RealAlg& o) { return *this = *this * o; }
  RealAlg& operator/=(const RealAlg& o) { return *this = *this / o; }

  friend bool operator==(const RealAlg& a, const RealAlg& b);
  friend std::strong_ordering operator<=>(const RealAlg& a, const RealAlg& b);

  /// "p/q" for rationals, otherwise "root(<minpoly>, [lo, hi])".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RealAlg& a);

  static int degree_ceiling();
  static void set_degree_ceiling(int d);

private:
  RealAlg(IntPoly p, Rat lo, Rat hi) : minpoly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  IntPoly minpoly_;
  Rat lo_, hi_;
};

/// Distinct real roots of p in ascending order.
std::vector<RealAlg> sturm_isolate_real_roots(const IntPoly& p);
std::vector<RealAlg> real_roots(const RatPoly& p);

enum class AlgOp { Add, Sub, Mul, Div };
RealAlg alg_arith(const RealAlg& a, const RealAlg& b, AlgOp op);
int alg_sign(const RealAlg& a);
std::strong_ordering alg_compare(const RealAlg& a, const RealAlg& b);

RealAlg pow(const RealAlg& a, int e);
RealAlg abs(const RealAlg& a);

/// Identifies the unique root of `candidates` in the enclosure produced by
/// `enclose(k)` for large enough refinement level k. The enclosures must
/// shrink to the wanted value. Used to pin down results of arithmetic.
RealAlg identify_root(const RatPoly& candidates, const std::function<Interval(int)>& enclose);

/// Value of the polynomial g at a.
RealAlg evaluate(const RatPoly& g, const RealAlg& a);

}  // namespace ltireach

namespace Eigen {

template <>
struct NumTraits<ltireach::RealAlg> : GenericNumTraits<ltireach::RealAlg> {
  using Real = ltireach::RealAlg;
  using NonInteger = ltireach::RealAlg;
  using Nested = ltireach::RealAlg;
  using Literal = ltireach::RealAlg;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 400,
    MulCost = 800
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
