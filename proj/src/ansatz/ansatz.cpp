#include "kmk/ansatz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kmk {
namespace {

const PolyC kTwoMinusC{2, -1};
const PolyC kCMinusOne{-1, 1};
const PolyC kC{0, 1};

}  // namespace

void AnsatzSum::add(const PolyC& num, int a, int b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("ansatz exponents must be nonnegative");
  }
  if (num.is_zero()) {
    return;
  }
  PolyC combined = num;
  int exponent = a;
  if (auto it = by_b_.find(b); it != by_b_.end()) {
    const auto& [old_num, old_a] = it->second;
    exponent = std::max(a, old_a);
    combined = num * kTwoMinusC.pow(static_cast<unsigned>(exponent - a)) +
               old_num * kTwoMinusC.pow(static_cast<unsigned>(exponent - old_a));
  }
  while (exponent > 0 && !combined.is_zero() && combined.eval(2) == 0) {
    combined = divmod(combined, kTwoMinusC).first;
    --exponent;
  }
  if (combined.is_zero()) {
    by_b_.erase(b);
  } else {
    by_b_.insert_or_assign(b, std::make_pair(std::move(combined), exponent));
  }
}

std::vector<AnsatzTerm> AnsatzSum::terms() const {
  std::vector<AnsatzTerm> out;
  out.reserve(by_b_.size());
  for (const auto& [b, entry] : by_b_) {
    out.push_back({entry.first, entry.second, b});
  }
  return out;
}

AnsatzSum& AnsatzSum::operator+=(const AnsatzSum& rhs) {
  for (const auto& [b, entry] : rhs.by_b_) {
    add(entry.first, entry.second, b);
  }
  return *this;
}

AnsatzSum& AnsatzSum::operator-=(const AnsatzSum& rhs) {
  for (const auto& [b, entry] : rhs.by_b_) {
    add(-entry.first, entry.second, b);
  }
  return *this;
}

AnsatzSum& AnsatzSum::operator*=(const BigRational& scale) {
  if (scale == 0) {
    by_b_.clear();
    return *this;
  }
  for (auto& [b, entry] : by_b_) {
    entry.first *= scale;
  }
  return *this;
}

AnsatzSum f_initial() {
  AnsatzSum f;
  f.add(kC, 0, 1);
  return f;
}

AnsatzSum euler_apply(int r, const AnsatzSum& s) {
  AnsatzSum out;
  for (const auto& [p, a, b] : s.terms()) {
    // c(c-1)/(2-c) ∂c [p (2-c)^-a] = c(c-1)(p'(2-c) + a p) / (2-c)^(a+2)
    out.add(kC * kCMinusOne * (p.derivative() * kTwoMinusC + BigRational(a) * p), a + 2, b);
    // (c-1)/(2-c) u∂u (1-u)^-b, with u(1-u)^-(b+1) = (1-u)^-(b+1) - (1-u)^-b
    if (b > 0) {
      const PolyC q = BigRational(b) * (kCMinusOne * p);
      out.add(q, a + 1, b + 1);
      out.add(-q, a + 1, b);
    }
    if (r != 0) {
      out.add(BigRational(-r) * p, a, b);
    }
  }
  return out;
}

AnsatzSum g_apply(int k, const AnsatzSum& s) {
  // [z^(j+1)] xG(x,y,z) = 1/(1-u) Σ_{l=0}^{j+1} y^l (xc)^(j+2-l), and a term
  // P/((2-c)^A (1-xcz)^m) has [z^j] = P/(2-c)^A binom(j+m-1, m-1) (xc)^j.
  // With (xc)^2 = c-1 =: w the product becomes
  //   P/(2-c)^A · 1/(1-u) · Σ_l u^l S_m(l),
  //   S_m(l) = Σ_{j >= max(0, l-1)} binom(j+m-1, m-1) w^(j+1-l).
  // Writing α = 1/(1-u), β = 1/(2-c) = 1/(1-w):
  //   m = 0:  Σ_l u^l S_0(l) = w + u
  //   m >= 1: Σ_l u^l S_m(l) = w β^m + u (D_m - D_(m-1)),
  //           D_n = (α^n - β^n)/(u - w) = Σ_{p=1}^n α^p β^(n+1-p),
  // and α u = α - 1.
  AnsatzSum out;
  for (const auto& [p, a, m] : euler_apply(k, s).terms()) {
    if (m == 0) {
      out.add(kC * p, a, 1);
      out.add(-p, a, 0);
      continue;
    }
    out.add(kCMinusOne * p, a + m, 1);
    for (int q = 1; q <= m; ++q) {
      out.add(p, a + m + 1 - q, q + 1);
      out.add(-p, a + m + 1 - q, q);
    }
    for (int q = 1; q < m; ++q) {
      out.add(-p, a + m - q, q + 1);
      out.add(p, a + m - q, q);
    }
  }
  return out;
}

RationalFnC y0_coefficient(const AnsatzSum& s) {
  RationalFnC out;
  for (const auto& [p, a, b] : s.terms()) {
    out += RationalFnC(p, kTwoMinusC.pow(static_cast<unsigned>(a)));
  }
  return out;
}

std::vector<AnsatzSum> operator_chain_iterates(int r_max) {
  if (r_max < 0) {
    throw std::invalid_argument("operator chain length must be nonnegative");
  }
  std::vector<AnsatzSum> iterates;
  iterates.reserve(static_cast<std::size_t>(r_max) + 1);
  iterates.push_back(f_initial());
  for (int r = 0; r < r_max; ++r) {
    iterates.push_back(g_apply(r, iterates.back()));
  }
  return iterates;
}

AnsatzSum operator_chain(int r) { return operator_chain_iterates(r).back(); }

RationalFnC phi(int g) {
  if (g < 0) {
    throw std::invalid_argument("phi requires g >= 0");
  }
  if (g == 0) {
    return RationalFnC(kC);
  }
  return y0_coefficient(operator_chain(g));
}

BiSeries ansatz_to_series(const AnsatzSum& s, std::size_t x_order, std::size_t y_order) {
  BiSeries out(x_order, y_order);
  const SeriesX c = catalan_series(x_order);
  const SeriesX inv_two_minus_c = substitute(kTwoMinusC, c).inverse();
  for (const auto& [p, a, b] : s.terms()) {
    SeriesX base = substitute(p, c);
    for (int i = 0; i < a; ++i) {
      base = base * inv_two_minus_c;
    }
    // (1-u)^-b = Σ_m binom(m+b-1, b-1) x^m c^m y^m
    const std::size_t m_max = b == 0 ? 0 : std::min(x_order, y_order);
    SeriesX power = base;
    for (std::size_t m = 0; m <= m_max; ++m) {
      const BigInt weight = b == 0 ? BigInt(1) : binomial(static_cast<long>(m) + b - 1, b - 1);
      for (std::size_t i = 0; i + m <= x_order; ++i) {
        if (power[i] != 0) {
          out(i + m, m) += weight * power[i];
        }
      }
      power = power * c;
    }
  }
  return out;
}

TriSeries kernel_series(std::size_t x_order, std::size_t y_order, std::size_t z_order) {
  TriSeries out(x_order, y_order, z_order);
  const SeriesX c = catalan_series(x_order);
  // [x^i y^(m1+s) z^(m2+s)] = [x^(i-m1-m2)] c^(1+m1+m2)
  std::vector<SeriesX> c_powers{c};
  for (std::size_t m = 1; m <= x_order; ++m) {
    c_powers.push_back(c_powers.back() * c);
  }
  for (std::size_t m1 = 0; m1 <= std::min(x_order, y_order); ++m1) {
    for (std::size_t m2 = 0; m1 + m2 <= x_order && m2 <= z_order; ++m2) {
      const SeriesX& power = c_powers[m1 + m2];
      for (std::size_t s = 0; m1 + s <= y_order && m2 + s <= z_order; ++s) {
        for (std::size_t i = m1 + m2; i <= x_order; ++i) {
          out(i, m1 + s, m2 + s) += power[i - m1 - m2];
        }
      }
    }
  }
  return out;
}

std::string iterate_shape_violation(const AnsatzSum& iterate, int r) {
  if (r < 1) {
    return "shape is defined for r >= 1";
  }
  const PolyC prefactor = kC * kCMinusOne.pow(static_cast<unsigned>(r));
  std::ostringstream why;
  for (const auto& [p, a, b] : iterate.terms()) {
    const int i = b - 2;
    if (i < 0 || i > 2 * r - 1) {
      why << "term with b=" << b << " outside 2.." << 2 * r + 1;
      return why.str();
    }
    const int target_a = 4 * r - 1 - i;
    if (a > target_a) {
      why << "term b=" << b << " needs (2-c)^" << a << ", allowed " << target_a;
      return why.str();
    }
    const PolyC padded = p * kTwoMinusC.pow(static_cast<unsigned>(target_a - a));
    auto [quot, rem] = divmod(padded, prefactor);
    if (!rem.is_zero()) {
      why << "term b=" << b << " numerator not divisible by c(c-1)^" << r;
      return why.str();
    }
    if (quot.degree() > 2 * r - 1 - i) {
      why << "term b=" << b << " has deg P = " << quot.degree() << " > " << 2 * r - 1 - i;
      return why.str();
    }
  }
  return {};
}

}  // namespace kmk
