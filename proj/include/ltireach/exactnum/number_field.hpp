// Simple algebraic extensions Q(alpha) with alpha a real algebraic number.

#pragma once

#include "ltireach/exactnum/real_alg.hpp"

#include <iosfwd>
#include <memory>
#include <string>

namespace ltireach {

class NumberField {
public:
  explicit NumberField(RealAlg generator);

  const RealAlg& generator() const { return gen_; }
  /// Monic minimal polynomial of the generator.
  const RatPoly& modulus() const { return mod_; }
  int degree() const { return mod_.degree(); }

  bool same_as(const NumberField& o) const;

private:
  RealAlg gen_;
  RatPoly mod_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, stored as a polynomial in the generator of
/// degree below the field degree. A null field means a rational constant.
class NFElem {
public:
  NFElem() = default;
  NFElem(const Rat& r) : poly_(r) {}  // NOLINT(google-explicit-constructor)
  NFElem(int r) : poly_(Rat(r)) {}    // NOLINT(google-explicit-constructor)
  NFElem(FieldPtr field, const RatPoly& p);

  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const RatPoly& poly() const { return poly_; }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_rational() const { return poly_.degree() <= 0; }
  Rat rational_value() const;

  int sign() const;
  RealAlg to_real_alg() const;
  NFElem inverse() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a);
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  NFElem& operator/=(const NFElem& o) { return *this = *this / o; }

  friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }

  std::string str() const;

private:
  FieldPtr field_;
  RatPoly poly_;
};

NFElem abs(const NFElem& a);
std::ostream& operator<<(std::ostream& os, const NFElem& a);

}  // namespace ltireach

namespace Eigen {

template <>
struct NumTraits<ltireach::NFElem> : GenericNumTraits<ltireach::NFElem> {
  using Real = ltireach::NFElem;
  using NonInteger = ltireach::NFElem;
  using Nested = ltireach::NFElem;
  using Literal = ltireach::NFElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
