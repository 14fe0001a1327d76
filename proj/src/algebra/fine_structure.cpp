#include "kmk/fine_structure.hpp"

#include <string>

namespace kmk {
namespace {

const PolyC kTwoMinusC{2, -1};
const PolyC kCMinusOne{-1, 1};

}  // namespace

FineStructureForm fine_structure_form(const RationalFnC& f, int g) {
  if (g < 1) {
    throw std::invalid_argument("fine_structure_form requires g >= 1, got " + std::to_string(g));
  }
  FineStructureForm form;
  form.g = g;
  if (f.is_zero()) {
    return form;
  }

  // R(c) = f (2-c)^g / c
  const RationalFnC r = f * RationalFnC(kTwoMinusC.pow(static_cast<unsigned>(g)), PolyC::variable());

  // c = (1+2t)/(1+t): N(c) -> N~(t)/(1+t)^dN, D(c) -> D~(t)/(1+t)^dD
  const PolyC one_plus_2t{1, 2};
  const PolyC one_plus_t{1, 1};
  PolyC num_t = homogenized_substitute(r.num(), one_plus_2t, one_plus_t);
  PolyC den_t = homogenized_substitute(r.den(), one_plus_2t, one_plus_t);
  const int dn = r.num().degree();
  const int dd = r.den().degree();
  if (dd > dn) {
    num_t *= one_plus_t.pow(static_cast<unsigned>(dd - dn));
  } else if (dn > dd) {
    den_t *= one_plus_t.pow(static_cast<unsigned>(dn - dd));
  }

  auto [quot, rem] = divmod(num_t, den_t);
  if (!rem.is_zero()) {
    throw NotFineStructure("expression is not c/(2-c)^" + std::to_string(g) +
                           " times a polynomial in (c-1)/(2-c)");
  }
  const auto coeffs = quot.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) {
      form.theta.emplace(static_cast<int>(k), coeffs[k]);
    }
  }
  return form;
}

RationalFnC from_fine_structure(const FineStructureForm& form) {
  if (form.theta.empty()) {
    return {};
  }
  // Common denominator (2-c)^(g + kmax).
  const int kmax = form.theta.rbegin()->first;
  PolyC num;
  for (const auto& [k, theta] : form.theta) {
    num += theta * (kCMinusOne.pow(static_cast<unsigned>(k)) * kTwoMinusC.pow(static_cast<unsigned>(kmax - k)));
  }
  num *= PolyC::variable();
  return RationalFnC(num, kTwoMinusC.pow(static_cast<unsigned>(form.g + kmax)));
}

bool within_theorem_support(const FineStructureForm& form) {
  for (const auto& [k, theta] : form.theta) {
    if (k < form.g + 1 || k > 3 * form.g - 1) {
      return false;
    }
  }
  return true;
}

}  // namespace kmk
