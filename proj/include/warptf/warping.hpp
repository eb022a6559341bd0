#pragma once

#include <memory>
#include <optional>

#include "warptf/common.hpp"

namespace warptf {

struct RadialComponent;

// Radial control weight: continuous, submultiplicative, radially increasing,
// >= 1. Bounds the transition matrices and their derivatives.
struct ControlWeight {
  std::function<double(double)> radial;  // argument |tau| >= 0
  double operator()(double s) const { return radial(std::abs(s)); }
  double operator()(const Vec& tau) const { return radial(tau.norm()); }
  bool valid() const { return bool(radial); }
};

// A C^1 diffeomorphism of the frequency domain onto R^d together with the
// inverse jacobian field A = D(inverse). The induced weight is det A > 0.
struct WarpingMap {
  int d = 1;
  int smoothness = 0;  // admissibility order the map is built/calibrated for
  std::string id;      // catalog id, empty for ad hoc maps
  std::function<Vec(const Vec&)> forward;
  std::function<Vec(const Vec&)> inverse;
  std::function<Mat(const Vec&)> jac_inverse;
  bool jac_synthesized = false;  // true when jac_inverse is a finite-difference stand-in
  ControlWeight v0;              // optional; required by tightness/structured checks
  // Set for maps built from a single radial profile; enables exact
  // norm-interval geometry in the covering module.
  std::shared_ptr<const RadialComponent> radial;
  // Per-axis radial profiles for tensor-product maps (empty otherwise).
  std::vector<std::shared_ptr<const RadialComponent>> tensor_parts;

  Vec fwd(const Vec& xi) const { return forward(xi); }
  Vec inv(const Vec& tau) const { return inverse(tau); }
  Mat jac_inv(const Vec& tau) const { return jac_inverse(tau); }
};

// 4th-order central difference jacobian of f at x, step h_i = h_rel*(1+|x|).
Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x, double h_rel = 1e-4);

// Fills in jac_inverse by finite differences when a closed form is absent.
void synthesize_jacobian(WarpingMap& map, double h_rel = 1e-4);

// Weight w(tau) = det(A(tau)). Throws singular_jacobian if the determinant is
// not strictly positive.
double eval_weight(const WarpingMap& map, const Vec& tau);

// Transition matrix phi_tau(ups) = (A(tau)^{-1} A(ups+tau))^T. Its operator
// norm and derivative norms in ups are what the control weight must dominate;
// phi_tau(0) = identity.
Mat phi_tau(const WarpingMap& map, const Vec& tau, const Vec& ups);

// Uniform tensor grid over [lo, hi]^d, n points per axis.
struct GridSpec {
  double lo = -8, hi = 8;
  int n = 9;
  static GridSpec standard(int d);
  std::vector<Vec> points(int d) const;
};

struct AdmissibilityReport {
  int order = 0;
  double max_ratio = 0;  // max over grid of ||D^a phi_tau(ups)|| / v0(ups)
  Vec witness_tau, witness_ups;
  std::vector<int> witness_alpha;
  double tolerance = 1e-2;
  bool pass = false;
};

// Sweeps all derivative multi-indices |alpha| <= order of ups -> phi_tau(ups)
// over the pair grid and compares operator norms against v0(ups).
// Derivatives are 4th-order central differences with step 1e-3*(1+|ups|).
AdmissibilityReport verify_admissibility(const WarpingMap& map, const ControlWeight& v0,
                                         int order, const GridSpec& grid = GridSpec{},
                                         double tol = 1e-2);

struct ConsistencyReport {
  double max_weight_residual = 0;   // |w - det(fd jac)| / w
  double max_roundtrip_error = 0;   // |inverse(forward(xi)) - xi|
  double max_identity_residual = 0; // |w(forward(xi)) * det(D forward(xi)) - 1|
  bool pass = false;
};

// Cross-checks the closed-form jacobian/weight against finite differences and
// the round-trip identity on random probes. seed-deterministic.
ConsistencyReport jacobian_consistency(const WarpingMap& map, int probes = 100,
                                       double box = 6.0, uint64_t seed = 0,
                                       double tol = 1e-6);

struct ModerateReport {
  double max_ratio = 0;  // max f(tau+ups) / (f(tau) * v(ups))
  Vec witness_tau, witness_ups;
  bool pass = false;
};

// Checks f(tau+ups) <= f(tau)*v(ups) on the pair grid (ratio <= 1+tol).
ModerateReport check_moderate(const std::function<double(const Vec&)>& f,
                              const ControlWeight& v, int d,
                              const GridSpec& grid = GridSpec{}, double tol = 1e-2);

}  // namespace warptf
