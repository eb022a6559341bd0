#include "warptf/radial.hpp"

#include <cmath>

namespace warptf {

namespace {

double glue(double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; }

// Smooth step: 0 for u <= 0, 1 for u >= 1, strictly increasing between.
double smooth_step(double u) {
  const double a = glue(u), b = glue(1.0 - u);
  return a / (a + b);
}

double smooth_step_deriv(double u) {
  if (u <= 0 || u >= 1) return 0;
  const double a = glue(u), b = glue(1.0 - u);
  const double da = a / (u * u), db = b / sq(1.0 - u);
  // quotient rule for a/(a+b); note d(b)/du = -db
  return (da * b + a * db) / sq(a + b);
}

}  // namespace

WeaklyAdmissibleComponent family_component(const std::string& kind) {
  WeaklyAdmissibleComponent f;
  f.id = kind;
  if (kind == "ln") {
    f.value = [](double t) { return std::log1p(t); };
    f.deriv = [](double t) { return 1.0 / (1.0 + t); };
    f.inv = [](double y) { return std::expm1(y); };
    f.dinv = [](double y) { return std::exp(y); };
    f.growth = [](double s) { return std::exp(s); };
    return f;
  }
  if (kind.rfind("alpha:", 0) == 0) {
    double a;
    try {
      a = std::stod(kind.substr(6));
    } catch (const std::exception&) {
      throw invalid_parameter("family_component: bad alpha value in '" + kind + "'");
    }
    if (a >= 1) throw invalid_parameter("family_component: alpha must be < 1");
    const double beta = 1.0 / (1.0 - a);
    f.value = [a](double t) { return std::pow(1.0 + t, 1.0 - a) - 1.0; };
    f.deriv = [a](double t) { return (1.0 - a) * std::pow(1.0 + t, -a); };
    f.inv = [beta](double y) { return std::pow(1.0 + y, beta) - 1.0; };
    f.dinv = [beta](double y) { return beta * std::pow(1.0 + y, beta - 1.0); };
    const double ge = std::abs(beta - 1.0);
    f.growth = [ge](double s) { return std::pow(1.0 + s, ge); };
    return f;
  }
  throw invalid_parameter("family_component: unknown kind '" + kind + "'");
}

std::shared_ptr<const RadialComponent> slow_start(const WeaklyAdmissibleComponent& base,
                                                  const SlowStartParams& params) {
  const double eps = params.eps;
  if (!(eps > 0)) throw invalid_parameter("slow_start: eps must be positive");
  const double bound = base.value(eps) / (2 * eps);
  const double c = params.c == 0 ? 0.9 * bound : params.c;
  if (!(c > 0 && c < bound)) {
    throw invalid_parameter("slow_start: c must lie in (0, value(eps)/(2 eps))");
  }

  auto comp = std::make_shared<RadialComponent>();
  comp->id = base.id;
  comp->eps = eps;
  comp->c = c;
  comp->growth = base.growth;

  auto val = base.value;
  auto der = base.deriv;
  auto inv = base.inv;
  auto dinv = base.dinv;

  // Omega = 1 on [0, eps], 0 on [2 eps, inf), monotone blend between.
  auto omega = [eps](double t) { return 1.0 - smooth_step((t - eps) / eps); };
  auto domega = [eps](double t) { return -smooth_step_deriv((t - eps) / eps) / eps; };

  comp->rho = [=](double t) {
    const double s = std::abs(t), sg = t < 0 ? -1.0 : 1.0;
    if (s <= eps) return c * t;
    if (s >= 2 * eps) return sg * val(s);
    const double om = omega(s);
    return sg * (c * s * om + (1.0 - om) * val(s));
  };
  comp->drho = [=](double t) {
    const double s = std::abs(t);
    if (s <= eps) return c;
    if (s >= 2 * eps) return der(s);
    const double om = omega(s), dom = domega(s);
    return c * om + (1.0 - om) * der(s) + dom * (c * s - val(s));
  };

  const double blend_top = val(2 * eps);
  auto rho_fn = comp->rho;
  comp->rho_inv = [=](double y) {
    const double s = std::abs(y), sg = y < 0 ? -1.0 : 1.0;
    if (s <= c * eps) return y / c;
    if (s >= blend_top) return sg * inv(s);
    double lo = eps, hi = 2 * eps;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (rho_fn(mid) < s ? lo : hi) = mid;
    }
    return sg * 0.5 * (lo + hi);
  };
  auto rho_inv_fn = comp->rho_inv;
  auto drho_fn = comp->drho;
  comp->drho_inv = [=](double y) {
    const double s = std::abs(y);
    if (s <= c * eps) return 1.0 / c;
    if (s >= blend_top) return dinv(s);
    return 1.0 / drho_fn(rho_inv_fn(s));
  };

  // The admissible range of c keeps rho increasing; guard the blend anyway.
  for (int i = 0; i <= 64; ++i) {
    const double t = eps + (i / 64.0) * eps;
    if (!(comp->drho(t) > 0)) {
      throw invalid_parameter("slow_start: profile not increasing on the blend zone");
    }
  }
  return comp;
}

WarpingMap radial_map(std::shared_ptr<const RadialComponent> comp, int d,
                      double v0_constant) {
  if (d < 1) throw invalid_parameter("radial_map: d must be >= 1");
  WarpingMap map;
  map.d = d;
  map.smoothness = d + 1;
  map.id = "radial:" + comp->id;
  map.radial = comp;
  map.forward = [comp](const Vec& xi) -> Vec { return comp->tilde(xi.norm()) * xi; };
  map.inverse = [comp](const Vec& tau) -> Vec { return comp->tilde_inv(tau.norm()) * tau; };
  map.jac_inverse = [comp, d](const Vec& tau) -> Mat {
    const double s = tau.norm();
    if (s < 1e-14) return Mat::Identity(d, d) / comp->c;
    const Mat proj = tau * tau.transpose() / (s * s);
    return comp->tilde_inv(s) * (Mat::Identity(d, d) - proj) + comp->drho_inv(s) * proj;
  };
  auto growth = comp->growth;
  map.v0.radial = [growth, v0_constant](double s) {
    return v0_constant * (1.0 + s) * growth(s);
  };
  return map;
}

WarpingMap tensor_map(const std::vector<std::shared_ptr<const RadialComponent>>& parts,
                      double v0_constant) {
  const int d = int(parts.size());
  if (d < 1) throw invalid_parameter("tensor_map: needs at least one part");
  WarpingMap map;
  map.d = d;
  map.smoothness = d + 1;
  map.id = "tensor";
  for (const auto& p : parts) map.id += ":" + p->id;
  map.tensor_parts = parts;
  map.forward = [parts, d](const Vec& xi) -> Vec {
    Vec out(d);
    for (int j = 0; j < d; ++j) out[j] = parts[j]->rho(xi[j]);
    return out;
  };
  map.inverse = [parts, d](const Vec& tau) -> Vec {
    Vec out(d);
    for (int j = 0; j < d; ++j) out[j] = parts[j]->rho_inv(tau[j]);
    return out;
  };
  map.jac_inverse = [parts, d](const Vec& tau) -> Mat {
    Mat a = Mat::Zero(d, d);
    for (int j = 0; j < d; ++j) a(j, j) = parts[j]->drho_inv(tau[j]);
    return a;
  };
  map.v0.radial = [parts, v0_constant](double s) {
    double m = 0;
    for (const auto& p : parts) m = std::max(m, (1.0 + s) * p->growth(s));
    return v0_constant * m;
  };
  return map;
}

double besov_curvature_ratio(const RadialComponent& comp, double gamma) {
  const double h = 1e-4 * (1.0 + gamma);
  const auto& d1 = comp.drho_inv;
  const double dd = (d1(gamma - 2 * h) - 8 * d1(gamma - h) + 8 * d1(gamma + h) -
                     d1(gamma + 2 * h)) /
                    (12 * h);
  const double di = d1(gamma);
  return std::abs(comp.rho_inv(gamma) * dd) / (di * di);
}

}  // namespace warptf
