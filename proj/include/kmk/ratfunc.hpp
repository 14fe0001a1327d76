#pragma once

#include <string>

#include "kmk/poly.hpp"

namespace kmk {

// num/den in lowest terms with a monic denominator. Zero is 0/1.
class RationalFnC {
 public:
  RationalFnC() : den_(PolyC::constant(1)) {}
  RationalFnC(PolyC num);  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error if den is zero.
  RationalFnC(PolyC num, PolyC den);

  const PolyC& num() const { return num_; }
  const PolyC& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws std::domain_error at a pole.
  BigRational eval(const BigRational& at) const;

  RationalFnC& operator+=(const RationalFnC& rhs);
  RationalFnC& operator-=(const RationalFnC& rhs);
  RationalFnC& operator*=(const RationalFnC& rhs);
  RationalFnC& operator/=(const RationalFnC& rhs);

  friend RationalFnC operator+(RationalFnC l, const RationalFnC& r) { return l += r; }
  friend RationalFnC operator-(RationalFnC l, const RationalFnC& r) { return l -= r; }
  friend RationalFnC operator*(RationalFnC l, const RationalFnC& r) { return l *= r; }
  friend RationalFnC operator/(RationalFnC l, const RationalFnC& r) { return l /= r; }
  friend RationalFnC operator-(RationalFnC f);
  friend bool operator==(const RationalFnC&, const RationalFnC&) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  PolyC num_;
  PolyC den_;
};

}  // namespace kmk
