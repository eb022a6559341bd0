#include "warptf/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace warptf {

namespace {

Vec index_to_vec(const Index& k) {
  Vec v(int(k.size()));
  for (size_t i = 0; i < k.size(); ++i) v[int(i)] = double(k[i]);
  return v;
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

double weight_u(const WarpingMap& map, const std::function<double(const Vec&)>& kappa,
                double q, double delta, const Index& k) {
  const Vec tau = delta * index_to_vec(k);
  const double base = kappa ? kappa(map.inverse(tau)) : 1.0;
  const double expo = (std::isinf(q) ? 0.0 : 1.0 / q) - 0.5;
  return base * std::pow(eval_weight(map, tau), expo);
}

std::function<double(const Vec&)> warped_power_weight(const WarpingMap& map, double s) {
  auto fwd = map.forward;
  return [fwd, s](const Vec& omega) {
    return std::pow(1.0 + fwd(omega).norm(), s);
  };
}

double decomposition_norm(const SampledSignal& f, const Bapu& bapu,
                          const DecompParams& params) {
  const WarpingMap& map = bapu.cov.map;
  const double delta = bapu.cov.delta;
  const int d = f.d();
  if (map.d != d) throw invalid_parameter("decomposition_norm: dimension mismatch");

  Vec lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  for (size_t flat = 0; flat < f.size(); ++flat) {
    if (f.fhat[flat] == cd(0, 0)) continue;
    const Vec tau = map.forward(grid_point(f.freq, flat));
    lo = lo.cwiseMin(tau);
    hi = hi.cwiseMax(tau);
  }
  if (!(lo[0] <= hi[0])) return 0.0;  // empty spectrum

  const double reach = 0.5 + bapu.moll.a / delta;
  std::vector<long> klo(d), khi(d);
  for (int i = 0; i < d; ++i) {
    klo[i] = long(std::floor(lo[i] / delta - reach));
    khi[i] = long(std::ceil(hi[i] / delta + reach));
  }
  std::vector<AxisGrid> time;
  for (const auto& g : f.freq) time.push_back(dual_grid(g));
  const double cell_y = grid_cell(time);

  double acc = 0, sup = 0;
  for_each_lattice(klo, khi, [&](const Index& k) {
    std::vector<cd> vals(f.fhat.size());
    bool any = false;
    for (size_t m = 0; m < vals.size(); ++m) {
      vals[m] = bapu.phi(k, grid_point(f.freq, m)) * f.fhat[m];
      any = any || vals[m] != cd(0, 0);
    }
    if (!any) return;
    const auto piece = centered_ft(vals, f.freq, +1);
    const double a =
        weight_u(map, params.kappa, params.q, delta, k) * lp_norm(piece, params.p, cell_y);
    if (std::isinf(params.q)) {
      sup = std::max(sup, a);
    } else {
      acc += std::pow(a, params.q);
    }
  });
  return std::isinf(params.q) ? sup : std::pow(acc, 1.0 / params.q);
}

ModeratenessReport moderateness_constant(const FrequencyCovering& cov,
                                         const std::function<double(const Index&)>& weight,
                                         long k_radius) {
  ModeratenessReport rep;
  for (const Index& k : covering_window(cov, k_radius)) {
    const double wk = weight(k);
    for (const Index& l : neighbors(cov, k, 1)) {
      const double ratio = wk / weight(l);
      if (ratio > rep.constant) {
        rep.constant = ratio;
        rep.witness_k = k;
        rep.witness_l = l;
      }
    }
  }
  return rep;
}

EquivalenceProbe norm_equivalence_probe(const WarpingMap& map, double delta, double r,
                                        const DecompParams& params, int n_signals,
                                        uint64_t seed0, double band_tol, int grid_n,
                                        double extent, double band) {
  EquivalenceProbe probe;
  const auto cov = induced_covering(map, delta, r);
  const Bapu bapu = make_bapu(cov);
  const Prototype proto = make_prototype(bapu.moll, map.d);
  std::vector<AxisGrid> freq(map.d, AxisGrid{grid_n, extent});

  CoorbitParams cb;
  cb.p = params.p;
  cb.q = params.q;
  cb.kappa = params.kappa;

  for (int s = 0; s < n_signals; ++s) {
    const SampledSignal f = random_bandlimited(freq, band, seed0 + uint64_t(s));
    const VoiceTransform vt = analyze(f, map, proto, delta);
    const double n_transform = coorbit_norm(vt, cb);
    const double n_windows = decomposition_norm(f, bapu, params);
    probe.coorbit.push_back(n_transform);
    probe.decomposition.push_back(n_windows);
    probe.ratios.push_back(n_transform / n_windows);
  }
  const auto [mn, mx] = std::minmax_element(probe.ratios.begin(), probe.ratios.end());
  probe.band = *mx / *mn;
  probe.pass = probe.band <= band_tol && *mn > 0;
  return probe;
}

}  // namespace warptf
