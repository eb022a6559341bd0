#include "warptf/common.hpp"

#include <cmath>

namespace warptf {

double op_norm(const Mat& m) {
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

double smallest_singular_value(const Mat& m) {
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw invalid_parameter("GaussLegendre: order must be >= 1");
  x.resize(order);
  w.resize(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

static double radical_inverse(uint64_t a, uint64_t base) {
  double inv = 1.0 / double(base), f = inv, r = 0;
  while (a > 0) {
    r += f * double(a % base);
    a /= base;
    f *= inv;
  }
  return r;
}

std::vector<double> Halton::next() {
  static const uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  if (dim > 8) throw invalid_parameter("Halton: dim > 8 not supported");
  ++n;  // skip the all-zero point
  std::vector<double> p(dim);
  for (int i = 0; i < dim; ++i) p[i] = radical_inverse(n, primes[i]);
  return p;
}

}  // namespace warptf
