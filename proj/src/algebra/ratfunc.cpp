#include "kmk/ratfunc.hpp"

#include <stdexcept>

namespace kmk {

RationalFnC::RationalFnC(PolyC num) : num_(std::move(num)), den_(PolyC::constant(1)) {}

RationalFnC::RationalFnC(PolyC num, PolyC den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  canonicalize();
}

void RationalFnC::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyC::constant(1);
    return;
  }
  const PolyC g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const BigRational scale = BigRational(1) / den_.leading();
  num_ *= scale;
  den_ *= scale;
}

BigRational RationalFnC::eval(const BigRational& at) const {
  const BigRational d = den_.eval(at);
  if (d == 0) {
    throw std::domain_error("rational function evaluated at a pole");
  }
  return num_.eval(at) / d;
}

RationalFnC& RationalFnC::operator+=(const RationalFnC& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFnC& RationalFnC::operator-=(const RationalFnC& rhs) { return *this += -rhs; }

RationalFnC& RationalFnC::operator*=(const RationalFnC& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RationalFnC& RationalFnC::operator/=(const RationalFnC& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by the zero rational function");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

RationalFnC operator-(RationalFnC f) {
  f.num_ = -f.num_;
  return f;
}

std::string RationalFnC::to_string() const {
  if (den_ == PolyC::constant(1)) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace kmk
