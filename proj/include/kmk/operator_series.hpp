#pragma once

#include <cstddef>

#include "kmk/series.hpp"

namespace kmk {

// Direct truncated-series evaluation of the Euler and G_k operators from
// their defining sums, independent of the closed-form ansatz kernels.

// ((i - j)/2 - r) · [x^i y^j] h, coefficientwise.
BiSeries euler_series(int r, const BiSeries& h);

// Σ_j [z^(j+1)] xG(x,y,z) · [z^j] E_k H(x,z), where the kernel coefficients
// [x^i y^a z^b] G are brute-force path counts #P(i, a, b). `h` is H in
// (x, z) and must reach z-order x_order + y_order.
BiSeries g_series(int k, const BiSeries& h, std::size_t x_order, std::size_t y_order);

}  // namespace kmk
