#include "ltireach/exactnum/number_field.hpp"

#include <ostream>
#include <stdexcept>

namespace ltireach {

NumberField::NumberField(RealAlg generator) : gen_(std::move(generator)), mod_(RatPoly(gen_.minpoly()).monic()) {}

bool NumberField::same_as(const NumberField& o) const { return this == &o || (mod_ == o.mod_ && gen_ == o.gen_); }

namespace {

FieldPtr common_field(const NFElem& a, const NFElem& b) {
  const FieldPtr& fa = a.is_rational() ? nullptr : a.field();
  const FieldPtr& fb = b.is_rational() ? nullptr : b.field();
  if (!fa) return b.field() ? b.field() : a.field();
  if (!fb || fa == fb || fa->same_as(*fb)) return fa;
  throw std::invalid_argument("elements of different number fields");
}

}  // namespace

NFElem::NFElem(FieldPtr field, const RatPoly& p) : field_(std::move(field)) {
  poly_ = field_ ? p % field_->modulus() : p;
  if (!field_ && poly_.degree() > 0) throw std::invalid_argument("non-constant element without a field");
}

NFElem NFElem::generator(const FieldPtr& field) { return NFElem(field, RatPoly::x()); }

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("number field element is not rational");
  return poly_.coeff(0);
}

int NFElem::sign() const {
  if (is_rational()) return poly_.coeff(0).sign();
  RealAlg x = field_->generator();
  while (true) {
    const Interval iv = eval_enclosure(poly_, x.interval());
    if (iv.lo.sign() > 0) return 1;
    if (iv.hi.sign() < 0) return -1;
    x = x.bisected();
  }
}

RealAlg NFElem::to_real_alg() const {
  if (is_rational()) return RealAlg(poly_.coeff(0));
  return evaluate(poly_, field_->generator());
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return NFElem(poly_.coeff(0).inverse());
  const ExtendedGcd e = extended_gcd(poly_, field_->modulus());
  return NFElem(field_, e.s);
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a, b);
  return NFElem(f, a.poly_ + b.poly_);
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a, b);
  return NFElem(f, a.poly_ - b.poly_);
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a, b);
  if (a.is_rational()) return NFElem(f, b.poly_ * a.poly_.coeff(0));
  if (b.is_rational()) return NFElem(f, a.poly_ * b.poly_.coeff(0));
  return NFElem(f, a.poly_ * b.poly_);
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem operator-(const NFElem& a) { return NFElem(a.field_, -a.poly_); }

std::string NFElem::str() const {
  if (is_rational()) return poly_.coeff(0).str();
  std::string s = poly_.str();
  for (auto& c : s)
    if (c == 'x') c = 'a';
  return s + " (a = " + field_->generator().str() + ")";
}

NFElem abs(const NFElem& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const NFElem& a) { return os << a.str(); }

}  // namespace ltireach
