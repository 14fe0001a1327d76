#pragma once

#include <string>
#include <vector>

#include "kmk/paths.hpp"
#include "kmk/rooks.hpp"

namespace kmk {

// Word in the raising operator V₁ ('U') and lowering operator V₋₁ ('D').
// Returns the coefficients (in powers of h = n⁻¹) of the evaluation of the
// word after normal ordering with V₋₁V₁ = V₁V₋₁ + h, where every
// normal-ordered monomial evaluates to 1.
std::vector<Count> normal_ordered_value(const std::string& word);

// (L^(2k))₀₀ as the sum over balanced nonnegative words of length 2k,
// each normal ordered.
MomentPolynomial word_moment(int k);

}  // namespace kmk
