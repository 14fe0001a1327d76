#include "kmk/series.hpp"

#include <algorithm>

namespace kmk {

SeriesX::SeriesX(std::size_t order, std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

SeriesX SeriesX::constant(std::size_t order, const BigRational& value) {
  SeriesX s(order);
  s.coeffs_[0] = value;
  return s;
}

SeriesX SeriesX::truncated(std::size_t order) const {
  return SeriesX(order, std::vector<BigRational>(coeffs_.begin(),
                                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                       std::min(order + 1, coeffs_.size()))));
}

SeriesX SeriesX::inverse() const {
  if (coeffs_[0] == 0) {
    throw std::domain_error("series with zero constant term is not invertible");
  }
  const std::size_t n = order();
  SeriesX inv(n);
  const BigRational c0inv = BigRational(1) / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k <= n; ++k) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j] != 0) {
        acc += coeffs_[j] * inv.coeffs_[k - j];
      }
    }
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

SeriesX& SeriesX::operator+=(const SeriesX& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

SeriesX& SeriesX::operator-=(const SeriesX& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

SeriesX& SeriesX::operator*=(const BigRational& rhs) {
  for (auto& v : coeffs_) {
    v *= rhs;
  }
  return *this;
}

SeriesX operator*(const SeriesX& l, const SeriesX& r) {
  const std::size_t n = std::min(l.order(), r.order());
  SeriesX out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (l.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (r.coeffs_[j] != 0) {
        out.coeffs_[i + j] += l.coeffs_[i] * r.coeffs_[j];
      }
    }
  }
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  if (rhs.x_order_ != x_order_ || rhs.y_order_ != y_order_) {
    throw std::invalid_argument("BiSeries truncation orders differ");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

SeriesX catalan_series(std::size_t order) {
  SeriesX s(order);
  // C_{k+1} = C_k * 2(2k+1)/(k+2)
  BigInt catalan = 1;
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    s[2 * k] = catalan;
    catalan = catalan * (2 * (2 * k + 1)) / (k + 2);
  }
  return s;
}

SeriesX substitute(const PolyC& p, const SeriesX& s) {
  SeriesX acc(s.order());
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * s;
    acc[0] += *it;
  }
  return acc;
}

SeriesX expand_in_x(const RationalFnC& f, std::size_t order) {
  if (f.den().eval(1) == 0) {
    throw DenominatorVanishesAtOrigin();
  }
  const SeriesX c = catalan_series(order);
  return substitute(f.num(), c) * substitute(f.den(), c).inverse();
}

}  // namespace kmk
