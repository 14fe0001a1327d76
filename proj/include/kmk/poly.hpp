#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmk/rational.hpp"

namespace kmk {

// Dense univariate polynomial over Q, coefficients stored low-to-high.
// The variable is the Catalan variable c throughout the pipeline; the
// fine-structure extraction reuses the type for polynomials in t.
//
// Canonical: the top stored coefficient is nonzero, the zero polynomial
// stores nothing.
class PolyC {
 public:
  PolyC() = default;
  explicit PolyC(std::vector<BigRational> coeffs);
  PolyC(std::initializer_list<long> coeffs);

  static PolyC constant(const BigRational& value);
  static PolyC monomial(const BigRational& coeff, std::size_t degree);
  // The polynomial "c".
  static PolyC variable();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(std::size_t i) const;
  const BigRational& leading() const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  BigRational eval(const BigRational& at) const;
  PolyC derivative() const;
  PolyC pow(unsigned exponent) const;
  PolyC monic() const;

  PolyC& operator+=(const PolyC& rhs);
  PolyC& operator-=(const PolyC& rhs);
  PolyC& operator*=(const PolyC& rhs);
  PolyC& operator*=(const BigRational& rhs);

  friend PolyC operator+(PolyC lhs, const PolyC& rhs) { return lhs += rhs; }
  friend PolyC operator-(PolyC lhs, const PolyC& rhs) { return lhs -= rhs; }
  friend PolyC operator*(const PolyC& lhs, const PolyC& rhs);
  friend PolyC operator*(PolyC lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend PolyC operator*(const BigRational& lhs, PolyC rhs) { return rhs *= lhs; }
  friend PolyC operator-(PolyC p);
  friend bool operator==(const PolyC& lhs, const PolyC& rhs) = default;

  // Human-readable, e.g. "c^3 - 2*c^2 + c".
  std::string to_string(char var = 'c') const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<PolyC, PolyC> divmod(const PolyC& dividend, const PolyC& divisor);

// Monic gcd; gcd(0, 0) = 0.
PolyC gcd(const PolyC& a, const PolyC& b);

// Largest e with (c - root)^e dividing p (p nonzero), together with the quotient.
std::pair<unsigned, PolyC> strip_root(const PolyC& p, const BigRational& root);

// Σ p_i num^i den^(d-i) with d = max(deg p, min_degree): the numerator of
// p(num/den) over the common denominator den^d.
PolyC homogenized_substitute(const PolyC& p, const PolyC& num, const PolyC& den,
                             unsigned min_degree = 0);

}  // namespace kmk
