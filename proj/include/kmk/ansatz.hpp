#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmk/poly.hpp"
#include "kmk/ratfunc.hpp"
#include "kmk/series.hpp"

namespace kmk {

// num(c) / ((2-c)^a (1-u)^b) with u = x*c*y and c = c(x^2).
struct AnsatzTerm {
  PolyC num;
  int a = 0;
  int b = 0;

  friend bool operator==(const AnsatzTerm&, const AnsatzTerm&) = default;
};

// Finite sum of ansatz terms kept in collapsed canonical form: one term
// per b-exponent, with the smallest a-exponent that clears (2-c) from the
// denominator, and no zero numerators. Since the powers 1/(1-u)^b are
// independent over Q(c), two sums are equal iff their canonical forms are.
class AnsatzSum {
 public:
  AnsatzSum() = default;

  void add(const PolyC& num, int a, int b);
  void add(const AnsatzTerm& term) { add(term.num, term.a, term.b); }

  // Ordered by b.
  std::vector<AnsatzTerm> terms() const;
  std::size_t size() const { return by_b_.size(); }
  bool empty() const { return by_b_.empty(); }

  AnsatzSum& operator+=(const AnsatzSum& rhs);
  AnsatzSum& operator-=(const AnsatzSum& rhs);
  AnsatzSum& operator*=(const BigRational& scale);
  friend AnsatzSum operator+(AnsatzSum l, const AnsatzSum& r) { return l += r; }
  friend AnsatzSum operator-(AnsatzSum l, const AnsatzSum& r) { return l -= r; }
  friend AnsatzSum operator*(AnsatzSum l, const BigRational& r) { return l *= r; }
  friend bool operator==(const AnsatzSum&, const AnsatzSum&) = default;

 private:
  // b -> (num, a)
  std::map<int, std::pair<PolyC, int>> by_b_;
};

// F(x,y) = c/(1-u), the generating function of nonnegative paths by end height.
AnsatzSum f_initial();

// E_r = ½(x∂x - y∂y) - r by the chain rule in (c, u):
//   x∂x c = 2c(c-1)/(2-c),  x∂x u = u c/(2-c),  y∂y u = u.
AnsatzSum euler_apply(int r, const AnsatzSum& s);

// (G_k H)(x,y) = Σ_{j>=0} [z^(j+1)] xG(x,y,z) · [z^j] E_k H(x,z),
// summed in closed form on the ansatz.
AnsatzSum g_apply(int k, const AnsatzSum& s);

// [y^0] s = Σ num/(2-c)^a.
RationalFnC y0_coefficient(const AnsatzSum& s);

// G_{r-1} ... G_0 F; r = 0 gives F.
AnsatzSum operator_chain(int r);
// All iterates G_{r-1}...G_0 F for r = 0..r_max.
std::vector<AnsatzSum> operator_chain_iterates(int r_max);

// Phi_0 = c; Phi_g = [y^0] G_{g-1}...G_0 F.
RationalFnC phi(int g);

// G(x,y,z) = F(x,y)F(x,z)/(c(1-yz)) = c/((1-xcy)(1-xcz)(1-yz)), expanded
// from the closed form.
TriSeries kernel_series(std::size_t x_order, std::size_t y_order, std::size_t z_order);

// Coefficients of x^i y^j, i <= x_order, j <= y_order.
BiSeries ansatz_to_series(const AnsatzSum& s, std::size_t x_order, std::size_t y_order);

// Shape of the r-th iterate: terms b = 2+i, i = 0..2r-1, each expressible as
// c(c-1)^r P(c) / (2-c)^(4r-1-i) with deg P <= 2r-1-i. Empty string when
// the shape holds, otherwise a description of the first violation.
std::string iterate_shape_violation(const AnsatzSum& iterate, int r);

}  // namespace kmk
