#include "kmk/operator_series.hpp"

#include <stdexcept>

#include "kmk/paths.hpp"

namespace kmk {

BiSeries euler_series(int r, const BiSeries& h) {
  BiSeries out(h.x_order(), h.y_order());
  for (std::size_t i = 0; i <= h.x_order(); ++i) {
    for (std::size_t j = 0; j <= h.y_order(); ++j) {
      const BigRational factor =
          make_rational(static_cast<long>(i) - static_cast<long>(j), 2) - BigRational(r);
      out(i, j) = factor * h(i, j);
    }
  }
  return out;
}

BiSeries g_series(int k, const BiSeries& h, std::size_t x_order, std::size_t y_order) {
  const std::size_t z_order = x_order + y_order;
  if (h.x_order() < x_order || h.y_order() < z_order) {
    throw std::invalid_argument("g_series needs H to x-order X and z-order X + Y");
  }
  const BiSeries eh = euler_series(k, h);
  // paths[a][len][b] = #P(len, a, b); [x^i y^a z^b] xG = #P(i - 1, a, b)
  const auto paths = path_count_table(static_cast<int>(x_order), static_cast<int>(y_order),
                                      static_cast<int>(z_order) + 1);
  BiSeries out(x_order, y_order);
  for (std::size_t ell = 0; ell <= y_order; ++ell) {
    for (std::size_t i1 = 1; i1 <= x_order; ++i1) {
      const auto& kernel_row = paths[ell][i1 - 1];
      for (std::size_t j = 0; j < z_order; ++j) {
        const Count& kernel = kernel_row[j + 1];
        if (kernel == 0) {
          continue;
        }
        for (std::size_t i2 = 0; i1 + i2 <= x_order; ++i2) {
          const BigRational& value = eh(i2, j);
          if (value != 0) {
            out(i1 + i2, ell) += kernel * value;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace kmk
