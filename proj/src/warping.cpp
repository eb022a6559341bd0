#include "warptf/warping.hpp"

#include <cmath>
#include <random>

namespace warptf {

Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x, double h_rel) {
  const int d = int(x.size());
  const double h = h_rel * (1.0 + x.norm());
  Mat jac(d, d);
  for (int j = 0; j < d; ++j) {
    Vec e = Vec::Zero(d);
    e[j] = h;
    const Vec fp1 = f(x + e), fm1 = f(x - e), fp2 = f(x + 2 * e), fm2 = f(x - 2 * e);
    jac.col(j) = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  }
  return jac;
}

void synthesize_jacobian(WarpingMap& map, double h_rel) {
  auto inv = map.inverse;
  map.jac_inverse = [inv, h_rel](const Vec& tau) { return fd_jacobian(inv, tau, h_rel); };
  map.jac_synthesized = true;
}

double eval_weight(const WarpingMap& map, const Vec& tau) {
  const Mat a = map.jac_inverse(tau);
  const double det = a.determinant();
  if (!(det > 1e-300)) {
    throw singular_jacobian("weight not strictly positive at tau=" +
                            std::to_string(tau.norm()));
  }
  return det;
}

Mat phi_tau(const WarpingMap& map, const Vec& tau, const Vec& ups) {
  const Mat at = map.jac_inverse(tau);
  const Mat au = map.jac_inverse(tau + ups);
  return at.partialPivLu().solve(au).transpose();
}

GridSpec GridSpec::standard(int d) {
  GridSpec g;
  g.n = d <= 1 ? 25 : (d == 2 ? 7 : 5);
  return g;
}

std::vector<Vec> GridSpec::points(int d) const {
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) axis[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  std::vector<Vec> pts;
  pts.reserve(size_t(std::pow(n, d)));
  std::vector<int> idx(d, 0);
  while (true) {
    Vec p(d);
    for (int j = 0; j < d; ++j) p[j] = axis[idx[j]];
    pts.push_back(p);
    int ax = 0;
    while (ax < d && ++idx[ax] == n) idx[ax++] = 0;
    if (ax == d) break;
  }
  return pts;
}

namespace {

struct Stencil {
  std::vector<int> offsets;
  std::vector<double> coeffs;  // to be divided by h^order
};

// 4th-order central difference stencils.
const Stencil& stencil_for(int order) {
  static const Stencil table[5] = {
      {{0}, {1.0}},
      {{-2, -1, 1, 2}, {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12}},
      {{-2, -1, 0, 1, 2}, {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12}},
      {{-3, -2, -1, 1, 2, 3}, {1.0 / 8, -8.0 / 8, 13.0 / 8, -13.0 / 8, 8.0 / 8, -1.0 / 8}},
      {{-3, -2, -1, 0, 1, 2, 3},
       {-1.0 / 6, 12.0 / 6, -39.0 / 6, 56.0 / 6, -39.0 / 6, 12.0 / 6, -1.0 / 6}},
  };
  if (order < 0 || order > 4) throw invalid_parameter("derivative order beyond 4 unsupported");
  return table[order];
}

// D^alpha of ups -> phi_tau(ups) by tensor-product stencils.
Mat phi_derivative(const WarpingMap& map, const Vec& tau, const Vec& ups,
                   const std::vector<int>& alpha, double h) {
  const int d = map.d;
  std::vector<const Stencil*> st(d);
  double denom = 1;
  for (int j = 0; j < d; ++j) {
    st[j] = &stencil_for(alpha[j]);
    for (int m = 0; m < alpha[j]; ++m) denom *= h;
  }
  Mat acc = Mat::Zero(d, d);
  std::vector<size_t> idx(d, 0);
  while (true) {
    double c = 1;
    Vec shift = ups;
    for (int j = 0; j < d; ++j) {
      c *= st[j]->coeffs[idx[j]];
      shift[j] += h * st[j]->offsets[idx[j]];
    }
    acc += c * phi_tau(map, tau, shift);
    int ax = 0;
    while (ax < d && ++idx[ax] == st[ax]->offsets.size()) idx[ax++] = 0;
    if (ax == d) break;
  }
  return acc / denom;
}

void enumerate_multi_indices(int d, int max_order, std::vector<std::vector<int>>& out) {
  std::vector<int> alpha(d, 0);
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == d) {
      out.push_back(alpha);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      alpha[axis] = a;
      rec(axis + 1, remaining - a);
    }
    alpha[axis] = 0;
  };
  rec(0, max_order);
}

}  // namespace

AdmissibilityReport verify_admissibility(const WarpingMap& map, const ControlWeight& v0,
                                         int order, const GridSpec& grid, double tol) {
  if (!v0.valid()) throw invalid_parameter("verify_admissibility: control weight required");
  AdmissibilityReport rep;
  rep.order = order;
  rep.tolerance = tol;
  std::vector<std::vector<int>> alphas;
  enumerate_multi_indices(map.d, order, alphas);
  const auto pts = grid.points(map.d);
  for (const Vec& tau : pts) {
    for (const Vec& ups : pts) {
      const double h = 1e-3 * (1.0 + ups.norm());
      const double bound = v0(ups);
      for (const auto& alpha : alphas) {
        const double nrm = op_norm(phi_derivative(map, tau, ups, alpha, h));
        const double ratio = nrm / bound;
        if (ratio > rep.max_ratio) {
          rep.max_ratio = ratio;
          rep.witness_tau = tau;
          rep.witness_ups = ups;
          rep.witness_alpha = alpha;
        }
      }
    }
  }
  rep.pass = rep.max_ratio <= 1.0 + tol;
  return rep;
}

ConsistencyReport jacobian_consistency(const WarpingMap& map, int probes, double box,
                                       uint64_t seed, double tol) {
  ConsistencyReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-box, box);
  for (int i = 0; i < probes; ++i) {
    Vec tau(map.d), xi(map.d);
    for (int j = 0; j < map.d; ++j) {
      tau[j] = unif(rng);
      xi[j] = unif(rng);
    }
    const double w = eval_weight(map, tau);
    const double w_fd = fd_jacobian(map.inverse, tau).determinant();
    rep.max_weight_residual = std::max(rep.max_weight_residual, std::abs(w - w_fd) / w);

    rep.max_roundtrip_error =
        std::max(rep.max_roundtrip_error, (map.inverse(map.forward(xi)) - xi).norm());

    const double wfwd = eval_weight(map, map.forward(xi));
    const double det_fwd = fd_jacobian(map.forward, xi).determinant();
    rep.max_identity_residual =
        std::max(rep.max_identity_residual, std::abs(wfwd * det_fwd - 1.0));
  }
  rep.pass = rep.max_weight_residual <= tol && rep.max_roundtrip_error <= 1e-8 &&
             rep.max_identity_residual <= 100 * tol;
  return rep;
}

ModerateReport check_moderate(const std::function<double(const Vec&)>& f,
                              const ControlWeight& v, int d, const GridSpec& grid,
                              double tol) {
  if (!v.valid()) throw invalid_parameter("check_moderate: control weight required");
  ModerateReport rep;
  const auto pts = grid.points(d);
  for (const Vec& tau : pts) {
    const double ftau = f(tau);
    for (const Vec& ups : pts) {
      const double ratio = f(tau + ups) / (ftau * v(ups));
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.witness_tau = tau;
        rep.witness_ups = ups;
      }
    }
  }
  rep.pass = rep.max_ratio <= 1.0 + tol;
  return rep;
}

}  // namespace warptf
