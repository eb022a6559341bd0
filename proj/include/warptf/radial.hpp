#pragma once

#include <memory>

#include "warptf/warping.hpp"

namespace warptf {

// Strictly increasing odd profile rho with a linear zone rho(t) = c*t for
// |t| <= eps. The starred fields are the inverse profile and its derivative.
struct RadialComponent {
  std::string id;
  double eps = 0, c = 1;
  std::function<double(double)> rho, drho;          // profile and derivative (odd/even)
  std::function<double(double)> rho_inv, drho_inv;  // inverse profile and derivative
  std::function<double(double)> growth;             // control-weight growth shape u(s) >= 1

  double tilde(double t) const {  // rho(t)/t with the linear-zone limit c
    t = std::abs(t);
    return t <= eps ? c : rho(t) / t;
  }
  double tilde_inv(double s) const {  // rho_inv(s)/s with limit 1/c
    s = std::abs(s);
    return s <= c * eps ? 1.0 / c : rho_inv(s) / s;
  }
};

// Unbounded profile before the slow start is glued in: value/deriv/inv/dinv
// on [0, inf), plus the growth shape of its control weight.
struct WeaklyAdmissibleComponent {
  std::string id;
  std::function<double(double)> value, deriv, inv, dinv;
  std::function<double(double)> growth;
};

// Catalog component families: "ln" or "alpha:<a>" with a < 1.
WeaklyAdmissibleComponent family_component(const std::string& kind);

struct SlowStartParams {
  double eps = 1.0;
  double c = 0;  // 0 selects 0.9 * value(eps) / (2 eps)
};

// Replaces the profile on [0, 2 eps] by a smooth blend into c*t near zero.
// Requires 0 < c < value(eps) / (2 eps). The inverse is exact outside the
// blend zone and solved by bisection to 1e-12 inside it.
std::shared_ptr<const RadialComponent> slow_start(const WeaklyAdmissibleComponent& base,
                                                  const SlowStartParams& params = {});

// Warping map xi -> (rho(|xi|)/|xi|) * xi on R^d. v0_constant scales the
// control weight (1+s)*growth(s); it is an empirically calibrated headroom
// factor, not a derived quantity.
WarpingMap radial_map(std::shared_ptr<const RadialComponent> comp, int d,
                      double v0_constant = 1.0);

// Coordinatewise product of one-dimensional radial profiles. The jacobian is
// diagonal and the weight factorizes.
WarpingMap tensor_map(const std::vector<std::shared_ptr<const RadialComponent>>& parts,
                      double v0_constant = 1.0);

// |rho_inv(g) * rho_inv''(g)| / rho_inv'(g)^2, with rho_inv'' by central
// differences (step 1e-4 * (1+g)). Bounded ratios on [R, inf) are the
// precondition for dyadic-covering moderateness.
double besov_curvature_ratio(const RadialComponent& comp, double gamma);

}  // namespace warptf
