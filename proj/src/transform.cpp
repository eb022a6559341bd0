#include "warptf/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace warptf {

namespace {

Vec index_to_vec(const Index& k) {
  Vec v(int(k.size()));
  for (size_t i = 0; i < k.size(); ++i) v[int(i)] = double(k[i]);
  return v;
}

// componentwise range of the warped coordinates over the grid
void warped_box(const WarpingMap& map, const std::vector<AxisGrid>& freq, Vec& lo,
                Vec& hi) {
  const int d = int(freq.size());
  lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  hi = -lo;
  for (size_t flat = 0; flat < grid_size(freq); ++flat) {
    const Vec tau = map.forward(grid_point(freq, flat));
    lo = lo.cwiseMin(tau);
    hi = hi.cwiseMax(tau);
  }
}

double lp_norm(const std::vector<cd>& v, double p, double cell) {
  if (std::isinf(p)) {
    double m = 0;
    for (const cd& x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0;
  for (const cd& x : v) s += std::pow(std::abs(x), p);
  return std::pow(s * cell, 1.0 / p);
}

}  // namespace

double Prototype::value(const Vec& u) const {
  double p = 1;
  for (int i = 0; i < d; ++i) {
    p *= moll.density(u[i]);
    if (p == 0) return 0;
  }
  return p;
}

Prototype make_prototype(const Mollifier& moll, int d) {
  Prototype p;
  p.d = d;
  p.moll = moll;
  const GaussLegendre gl(16);
  double one_dim = 0;
  const int panels = 64;
  for (int j = 0; j < panels; ++j) {
    const double a0 = -moll.a + 2 * moll.a * j / panels;
    const double a1 = -moll.a + 2 * moll.a * (j + 1) / panels;
    one_dim += gl.integrate([&](double t) { return sq(moll.density(t)); }, a0, a1);
  }
  p.l2sq = std::pow(one_dim, d);
  return p;
}

std::vector<int> SampledSignal::shape() const { return grid_shape(freq); }

size_t SampledSignal::size() const { return grid_size(freq); }

double SampledSignal::l2_norm_sq() const {
  double s = 0;
  for (const cd& x : fhat) s += std::norm(x);
  return s * grid_cell(freq);
}

SampledSignal random_bandlimited(const std::vector<AxisGrid>& freq, double band,
                                 uint64_t seed) {
  SampledSignal f;
  f.freq = freq;
  f.fhat.resize(grid_size(freq));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 1);
  for (size_t flat = 0; flat < f.fhat.size(); ++flat) {
    const double s = grid_point(freq, flat).norm() / band;
    const double env = s < 1 ? std::exp(-s * s / (1 - s * s)) : 0.0;
    const double re = gauss(rng), im = gauss(rng);
    f.fhat[flat] = env * cd(re, im);
  }
  return f;
}

std::vector<double> atom_freq(const WarpingMap& map, const Prototype& proto,
                              const Vec& omega, const std::vector<AxisGrid>& freq) {
  const Vec tau0 = map.forward(omega);
  const double scale = 1.0 / std::sqrt(eval_weight(map, tau0));
  std::vector<double> g(grid_size(freq));
  for (size_t flat = 0; flat < g.size(); ++flat) {
    g[flat] = scale * proto.value(map.forward(grid_point(freq, flat)) - tau0);
  }
  return g;
}

VoiceTransform analyze(const SampledSignal& f, const WarpingMap& map,
                       const Prototype& proto, double delta, long pad) {
  if (map.d != f.d() || proto.d != f.d()) {
    throw invalid_parameter("analyze: dimension mismatch");
  }
  VoiceTransform vt;
  vt.freq = f.freq;
  vt.delta = delta;
  vt.map = map;
  vt.proto = proto;
  for (const auto& g : f.freq) vt.time.push_back(dual_grid(g));

  Vec lo, hi;
  warped_box(map, f.freq, lo, hi);
  std::vector<long> klo(map.d), khi(map.d);
  for (int i = 0; i < map.d; ++i) {
    klo[i] = long(std::floor((lo[i] - proto.moll.a) / delta)) - pad;
    khi[i] = long(std::ceil((hi[i] + proto.moll.a) / delta)) + pad;
  }
  for_each_lattice(klo, khi, [&](const Index& k) {
    const Vec tau0 = delta * index_to_vec(k);
    VoiceSlice slice;
    slice.k = k;
    slice.omega = map.inverse(tau0);
    slice.weight = eval_weight(map, tau0);
    const auto g = atom_freq(map, proto, slice.omega, f.freq);
    std::vector<cd> vals(f.fhat.size());
    bool any = false;
    for (size_t m = 0; m < vals.size(); ++m) {
      vals[m] = g[m] * f.fhat[m];
      any = any || vals[m] != cd(0, 0);
    }
    if (!any) return;  // window misses the band entirely
    slice.values = centered_ft(vals, f.freq, +1);
    vt.slices.push_back(std::move(slice));
  });
  return vt;
}

ParsevalReport parseval_defect(const SampledSignal& f, const WarpingMap& map,
                               const Prototype& proto, double delta) {
  const VoiceTransform vt = analyze(f, map, proto, delta);
  const double cell_y = grid_cell(vt.time);
  ParsevalReport rep;
  for (const auto& slice : vt.slices) {
    double e = 0;
    for (const cd& v : slice.values) e += std::norm(v);
    rep.lhs += std::pow(delta, map.d) * slice.weight * e * cell_y;
  }
  rep.rhs = proto.l2sq * f.l2_norm_sq();
  rep.defect = rep.rhs > 0 ? std::abs(rep.lhs - rep.rhs) / rep.rhs : std::abs(rep.lhs);
  return rep;
}

RoundTrip synthesize(const VoiceTransform& vt, const SampledSignal& f) {
  RoundTrip rt;
  rt.rec.freq = vt.freq;
  rt.rec.fhat.assign(grid_size(vt.freq), cd(0, 0));
  const double dd = std::pow(vt.delta, vt.map.d);
  for (const auto& slice : vt.slices) {
    const auto spec = centered_ft(slice.values, vt.freq, -1);
    const auto g = atom_freq(vt.map, vt.proto, slice.omega, vt.freq);
    for (size_t m = 0; m < spec.size(); ++m) {
      rt.rec.fhat[m] += dd * slice.weight * g[m] * spec[m];
    }
  }
  for (auto& x : rt.rec.fhat) x /= vt.proto.l2sq;
  double num = 0, den = 0;
  for (size_t m = 0; m < rt.rec.fhat.size(); ++m) {
    num += std::norm(rt.rec.fhat[m] - f.fhat[m]);
    den += std::norm(f.fhat[m]);
  }
  rt.rel_error = den > 0 ? std::sqrt(num / den) : 0;
  return rt;
}

double coorbit_norm(const VoiceTransform& vt, const CoorbitParams& params) {
  const double cell_y = grid_cell(vt.time);
  const double dd = std::pow(vt.delta, vt.map.d);
  double acc = 0, sup = 0;
  for (const auto& slice : vt.slices) {
    const double kap = params.kappa ? params.kappa(slice.omega) : 1.0;
    const double a = kap * lp_norm(slice.values, params.p, cell_y);
    if (std::isinf(params.q)) {
      sup = std::max(sup, a);
    } else {
      acc += dd * slice.weight * std::pow(a, params.q);
    }
  }
  return std::isinf(params.q) ? sup : std::pow(acc, 1.0 / params.q);
}

IdentityReport bapu_voice_identity(const SampledSignal& f, const Bapu& bapu,
                                   const Index& k, int quad_points, double tol) {
  const int d = f.d();
  if (bapu.cov.d != d) throw invalid_parameter("bapu_voice_identity: dimension mismatch");
  const WarpingMap& map = bapu.cov.map;
  const Prototype proto = make_prototype(bapu.moll, d);
  const double delta = bapu.cov.delta;

  // left side: the partition window applied to the spectrum
  std::vector<cd> vals(f.fhat.size());
  for (size_t m = 0; m < vals.size(); ++m) {
    vals[m] = bapu.phi(k, grid_point(f.freq, m)) * f.fhat[m];
  }
  const auto lhs = centered_ft(vals, f.freq, +1);

  // right side: Gauss-Legendre integral of sqrt(w) V over the warped cell
  const GaussLegendre gl(quad_points);
  std::vector<cd> rhs(lhs.size(), cd(0, 0));
  std::vector<int> qidx(d, 0);
  const size_t qtotal = size_t(std::pow(double(quad_points), d));
  for (size_t q = 0; q < qtotal; ++q) {
    size_t rem = q;
    Vec tau(d);
    double wq = 1;
    for (int i = d - 1; i >= 0; --i) {
      const int j = int(rem % size_t(quad_points));
      rem /= size_t(quad_points);
      tau[i] = delta * (double(k[i]) + 0.5 * gl.x[j]);
      wq *= 0.5 * delta * gl.w[j];
    }
    const double w_tau = eval_weight(map, tau);
    const double scale = 1.0 / std::sqrt(w_tau);
    std::vector<cd> windowed(f.fhat.size());
    for (size_t m = 0; m < windowed.size(); ++m) {
      windowed[m] =
          scale * proto.value(map.forward(grid_point(f.freq, m)) - tau) * f.fhat[m];
    }
    const auto v = centered_ft(windowed, f.freq, +1);
    const double factor = wq * std::sqrt(w_tau);
    for (size_t n = 0; n < rhs.size(); ++n) rhs[n] += factor * v[n];
  }

  IdentityReport rep;
  for (size_t n = 0; n < lhs.size(); ++n) {
    rep.max_abs_error = std::max(rep.max_abs_error, std::abs(lhs[n] - rhs[n]));
    rep.scale = std::max({rep.scale, std::abs(lhs[n]), std::abs(rhs[n])});
  }
  rep.rel_error = rep.scale > 0 ? rep.max_abs_error / rep.scale : 0;
  rep.pass = rep.rel_error <= tol;
  return rep;
}

}  // namespace warptf
