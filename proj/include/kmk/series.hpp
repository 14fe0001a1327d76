#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kmk/poly.hpp"
#include "kmk/ratfunc.hpp"
#include "kmk/rational.hpp"

namespace kmk {

// Power series in x truncated after x^order. Always stores order+1
// coefficients; binary operations truncate to the smaller order.
class SeriesX {
 public:
  explicit SeriesX(std::size_t order) : coeffs_(order + 1) {}
  SeriesX(std::size_t order, std::vector<BigRational> coeffs);

  static SeriesX constant(std::size_t order, const BigRational& value);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigRational& operator[](std::size_t i) { return coeffs_.at(i); }
  std::span<const BigRational> coefficients() const { return coeffs_; }

  SeriesX truncated(std::size_t order) const;
  // Multiplicative inverse; throws std::domain_error if the constant term is 0.
  SeriesX inverse() const;

  SeriesX& operator+=(const SeriesX& rhs);
  SeriesX& operator-=(const SeriesX& rhs);
  SeriesX& operator*=(const BigRational& rhs);

  friend SeriesX operator+(SeriesX l, const SeriesX& r) { return l += r; }
  friend SeriesX operator-(SeriesX l, const SeriesX& r) { return l -= r; }
  friend SeriesX operator*(const SeriesX& l, const SeriesX& r);
  friend SeriesX operator*(SeriesX l, const BigRational& r) { return l *= r; }
  friend bool operator==(const SeriesX&, const SeriesX&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

// Bivariate series in (x, y) truncated to x^i y^j with i <= x_order, j <= y_order.
class BiSeries {
 public:
  BiSeries(std::size_t x_order, std::size_t y_order)
      : x_order_(x_order), y_order_(y_order), coeffs_((x_order + 1) * (y_order + 1)) {}

  std::size_t x_order() const { return x_order_; }
  std::size_t y_order() const { return y_order_; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return coeffs_.at(index(i, j)); }
  BigRational& operator()(std::size_t i, std::size_t j) { return coeffs_.at(index(i, j)); }

  BiSeries& operator+=(const BiSeries& rhs);
  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > x_order_ || j > y_order_) {
      throw std::out_of_range("BiSeries index beyond truncation order");
    }
    return i * (y_order_ + 1) + j;
  }

  std::size_t x_order_;
  std::size_t y_order_;
  std::vector<BigRational> coeffs_;
};

// Trivariate series in (x, y, z), truncated per variable.
class TriSeries {
 public:
  TriSeries(std::size_t x_order, std::size_t y_order, std::size_t z_order)
      : x_order_(x_order),
        y_order_(y_order),
        z_order_(z_order),
        coeffs_((x_order + 1) * (y_order + 1) * (z_order + 1)) {}

  std::size_t x_order() const { return x_order_; }
  std::size_t y_order() const { return y_order_; }
  std::size_t z_order() const { return z_order_; }
  const BigRational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_.at(index(i, j, k));
  }
  BigRational& operator()(std::size_t i, std::size_t j, std::size_t k) { return coeffs_.at(index(i, j, k)); }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i > x_order_ || j > y_order_ || k > z_order_) {
      throw std::out_of_range("TriSeries index beyond truncation order");
    }
    return (i * (y_order_ + 1) + j) * (z_order_ + 1) + k;
  }

  std::size_t x_order_;
  std::size_t y_order_;
  std::size_t z_order_;
  std::vector<BigRational> coeffs_;
};

class DenominatorVanishesAtOrigin : public std::domain_error {
 public:
  DenominatorVanishesAtOrigin()
      : std::domain_error("denominator vanishes at c = 1 (x = 0); expression has no expansion in x") {}
};

// c(x^2) = Σ C_k x^(2k) to the given order.
SeriesX catalan_series(std::size_t order);

// p(S) truncated to S's order.
SeriesX substitute(const PolyC& p, const SeriesX& s);

// f(c(x^2)) expanded to the given order.
SeriesX expand_in_x(const RationalFnC& f, std::size_t order);

}  // namespace kmk
