#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace warptf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using cd = std::complex<double>;

// Lattice index. Length d for lattice-indexed coverings, 1 for dyadic ones.
using Index = std::vector<long>;

struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct singular_jacobian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_converged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Vec vec1(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline std::string index_str(const Index& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// Spectral norm; matrices here are d x d with d <= 3.
double op_norm(const Mat& m);
double smallest_singular_value(const Mat& m);

// Gauss-Legendre nodes/weights on [-1,1], tabulated on demand.
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int order);
  // integral of f over [a,b]
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
  }
};

// Halton sequence in [0,1)^dim; deterministic low-discrepancy point set.
struct Halton {
  int dim;
  uint64_t n = 0;
  explicit Halton(int d) : dim(d) {}
  std::vector<double> next();
};

// All-combinations iteration over a d-dimensional integer box [lo, hi]^d.
template <class F>
void for_each_lattice(const std::vector<long>& lo, const std::vector<long>& hi, F&& f) {
  const size_t d = lo.size();
  Index k(lo.begin(), lo.end());
  while (true) {
    f(const_cast<const Index&>(k));
    size_t axis = 0;
    while (axis < d) {
      if (++k[axis] <= hi[axis]) break;
      k[axis] = lo[axis];
      ++axis;
    }
    if (axis == d) return;
  }
}

inline double sq(double x) { return x * x; }

}  // namespace warptf
