#include "kmk/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kmk {

PolyC::PolyC(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyC::PolyC(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long v : coeffs) {
    coeffs_.emplace_back(v);
  }
  trim();
}

PolyC PolyC::constant(const BigRational& value) { return PolyC(std::vector<BigRational>{value}); }

PolyC PolyC::monomial(const BigRational& coeff, std::size_t degree) {
  std::vector<BigRational> c(degree + 1);
  c[degree] = coeff;
  return PolyC(std::move(c));
}

PolyC PolyC::variable() { return monomial(1, 1); }

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

BigRational PolyC::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

const BigRational& PolyC::leading() const {
  if (coeffs_.empty()) {
    throw std::domain_error("leading coefficient of the zero polynomial");
  }
  return coeffs_.back();
}

BigRational PolyC::eval(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

PolyC PolyC::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return PolyC(std::move(d));
}

PolyC PolyC::pow(unsigned exponent) const {
  PolyC result = constant(1);
  PolyC base = *this;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

PolyC PolyC::monic() const {
  if (is_zero()) {
    return {};
  }
  PolyC out = *this;
  out *= BigRational(1) / leading();
  return out;
}

PolyC& PolyC::operator+=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

PolyC operator*(const PolyC& lhs, const PolyC& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return PolyC(std::move(out));
}

PolyC& PolyC::operator*=(const PolyC& rhs) { return *this = *this * rhs; }

PolyC& PolyC::operator*=(const BigRational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) {
    v *= rhs;
  }
  return *this;
}

PolyC operator-(PolyC p) {
  for (auto& v : p.coeffs_) {
    v = -v;
  }
  return p;
}

std::string PolyC::to_string(char var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigRational v = coeffs_[static_cast<std::size_t>(i)];
    if (v == 0) {
      continue;
    }
    const bool negative = v < 0;
    if (negative) {
      v = -v;
    }
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << kmk::to_string(v);
      continue;
    }
    if (v != 1) {
      os << kmk::to_string(v) << '*';
    }
    os << var;
    if (i > 1) {
      os << '^' << i;
    }
  }
  return os.str();
}

std::pair<PolyC, PolyC> divmod(const PolyC& dividend, const PolyC& divisor) {
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  if (dividend.degree() < divisor.degree()) {
    return {PolyC{}, dividend};
  }
  std::vector<BigRational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const auto dd = static_cast<std::size_t>(divisor.degree());
  std::vector<BigRational> quot(rem.size() - dd);
  const BigRational inv_lead = BigRational(1) / divisor.leading();
  const auto dcoeffs = divisor.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRational q = rem[k + dd] * inv_lead;
    quot[k] = q;
    if (q == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k + j] -= q * dcoeffs[j];
    }
  }
  rem.resize(dd);
  return {PolyC(std::move(quot)), PolyC(std::move(rem))};
}

PolyC gcd(const PolyC& a, const PolyC& b) {
  PolyC x = a;
  PolyC y = b;
  while (!y.is_zero()) {
    PolyC r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::pair<unsigned, PolyC> strip_root(const PolyC& p, const BigRational& root) {
  if (p.is_zero()) {
    throw std::domain_error("strip_root of the zero polynomial");
  }
  const PolyC linear(std::vector<BigRational>{-root, BigRational(1)});
  unsigned multiplicity = 0;
  PolyC current = p;
  while (current.eval(root) == 0) {
    current = divmod(current, linear).first;
    ++multiplicity;
  }
  return {multiplicity, current};
}

PolyC homogenized_substitute(const PolyC& p, const PolyC& num, const PolyC& den, unsigned min_degree) {
  const unsigned d = std::max<unsigned>(static_cast<unsigned>(std::max(p.degree(), 0)), min_degree);
  PolyC out;
  PolyC num_pow = PolyC::constant(1);
  for (unsigned i = 0; i <= d; ++i) {
    const BigRational ci = p.coeff(i);
    if (ci != 0) {
      out += ci * (num_pow * den.pow(d - i));
    }
    num_pow *= num;
  }
  return out;
}

}  // namespace kmk
