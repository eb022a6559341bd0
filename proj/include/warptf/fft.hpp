#pragma once

#include <vector>

#include "warptf/common.hpp"

namespace warptf {

// Uniform centered grid along one axis: x_m = -extent/2 + m*step, step = extent/n.
struct AxisGrid {
  int n = 0;
  double extent = 0;
  double step() const { return extent / n; }
  double origin() const { return -0.5 * extent; }
  double point(long m) const { return origin() + m * step(); }
};

// Dual grid: n points, spacing 1/(n*step) = 1/extent, centered at zero.
inline AxisGrid dual_grid(const AxisGrid& g) { return AxisGrid{g.n, double(g.n) / g.extent}; }

inline std::vector<int> grid_shape(const std::vector<AxisGrid>& grids) {
  std::vector<int> s;
  for (const auto& g : grids) s.push_back(g.n);
  return s;
}

inline size_t grid_size(const std::vector<AxisGrid>& grids) {
  size_t n = 1;
  for (const auto& g : grids) n *= size_t(g.n);
  return n;
}

inline double grid_cell(const std::vector<AxisGrid>& grids) {
  double c = 1;
  for (const auto& g : grids) c *= g.step();
  return c;
}

// row-major flat index -> grid point
inline Vec grid_point(const std::vector<AxisGrid>& grids, size_t flat) {
  const int d = int(grids.size());
  Vec x(d);
  for (int i = d - 1; i >= 0; --i) {
    x[i] = grids[i].point(long(flat % size_t(grids[i].n)));
    flat /= size_t(grids[i].n);
  }
  return x;
}

// Unnormalized in-place DFT over a row-major d-dimensional array.
// sign = -1: forward (e^{-2 pi i <x,y>} convention), +1: backward.
void dft(std::vector<cd>& a, const std::vector<int>& shape, int sign);

// G[n] = prod(step_xi) * sum_m F[m] exp(+- 2 pi i <xi_m, y_n>) over the centered
// grids xi (per-axis `freq`) and their duals y. Used to move between samples of
// f-hat and samples of f without tracking phase conventions at call sites.
// sign = +1 maps frequency samples to time samples (inverse transform).
std::vector<cd> centered_ft(const std::vector<cd>& values, const std::vector<AxisGrid>& freq,
                            int sign);

}  // namespace warptf
