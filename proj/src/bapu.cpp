#include "warptf/bapu.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "warptf/fft.hpp"

namespace warptf {

namespace {

double raw_bump(double u) {  // unnormalized bump on (-1, 1)
  const double s = 1.0 - u * u;
  return s > 0 ? std::exp(-1.0 / s) : 0.0;
}

Vec index_to_vec(const Index& k) {
  Vec v(int(k.size()));
  for (size_t i = 0; i < k.size(); ++i) v[int(i)] = double(k[i]);
  return v;
}

}  // namespace

Mollifier make_mollifier(double a, int table_size) {
  if (!(a > 0)) throw invalid_parameter("make_mollifier: a must be positive");
  if (table_size < 16) throw invalid_parameter("make_mollifier: table too small");
  Mollifier m;
  m.a = a;
  const GaussLegendre gl(16);
  const int n = table_size;
  m.nodes.resize(n + 1);
  m.z.resize(n + 1);
  m.zd.resize(n + 1);
  const double h = 2 * a / n;
  m.nodes[0] = -a;
  m.z[0] = 0;
  for (int j = 1; j <= n; ++j) {
    m.nodes[j] = -a + j * h;
    m.z[j] = m.z[j - 1] + gl.integrate([&](double t) { return raw_bump(t / a); },
                                       m.nodes[j - 1], m.nodes[j]);
  }
  const double total = m.z[n];
  m.norm = 1.0 / total;
  for (int j = 0; j <= n; ++j) {
    m.z[j] /= total;
    m.zd[j] = raw_bump(m.nodes[j] / a) / total;
  }
  m.z[n] = 1.0;
  return m;
}

double Mollifier::density(double t) const { return raw_bump(t / a) * norm; }

double Mollifier::antiderivative(double t) const {
  if (t <= -a) return 0.0;
  if (t >= a) return 1.0;
  const int n = int(nodes.size()) - 1;
  const double h = 2 * a / n;
  int j = int((t + a) / h);
  j = std::clamp(j, 0, n - 1);
  const double u = (t - nodes[j]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  return h00 * z[j] + h * h10 * zd[j] + h01 * z[j + 1] + h * h11 * zd[j + 1];
}

Bapu make_bapu(const FrequencyCovering& cov, double vartheta, int table_size) {
  if (cov.kind != CoveringKind::induced) {
    throw invalid_parameter("make_bapu: induced covering required");
  }
  const double slack = cov.r - 0.5 * std::sqrt(double(cov.d));
  if (vartheta == 0) vartheta = 0.9 * slack;
  if (!(vartheta > 0 && vartheta < slack)) {
    throw invalid_parameter("make_bapu: vartheta must lie in (0, r - sqrt(d)/2)");
  }
  Bapu b;
  b.cov = cov;
  b.vartheta = vartheta;
  b.moll = make_mollifier(cov.delta * vartheta / std::sqrt(double(cov.d)), table_size);
  return b;
}

double Bapu::cube_mass(const Index& k, const Vec& tau) const {
  const double d2 = cov.delta / 2;
  double p = 1;
  for (int i = 0; i < cov.d; ++i) {
    const double t = tau[i] - cov.delta * double(k[i]);
    p *= moll.antiderivative(t + d2) - moll.antiderivative(t - d2);
    if (p == 0) return 0;
  }
  return p;
}

double Bapu::phi(const Index& k, const Vec& xi) const {
  return cube_mass(k, cov.map.forward(xi));
}

std::vector<Index> Bapu::active(const Vec& xi) const {
  const Vec tau = cov.map.forward(xi);
  const double reach = 0.5 + moll.a / cov.delta;
  std::vector<long> lo(cov.d), hi(cov.d);
  for (int i = 0; i < cov.d; ++i) {
    lo[i] = long(std::floor(tau[i] / cov.delta - reach));
    hi[i] = long(std::ceil(tau[i] / cov.delta + reach));
  }
  std::vector<Index> out;
  for_each_lattice(lo, hi, [&](const Index& k) {
    if (cube_mass(k, tau) > 0) out.push_back(k);
  });
  return out;
}

PartitionReport partition_defect(const Bapu& b, const GridSpec& grid, double tol) {
  PartitionReport rep;
  rep.tolerance = tol;
  const GridSpec g = grid.n > 0 ? grid : GridSpec::standard(b.cov.d);
  for (const Vec& eta : g.points(b.cov.d)) {
    const Vec tau = b.cov.map.forward(eta);
    const double reach = 0.5 + b.moll.a / b.cov.delta + 1.0;
    std::vector<long> lo(b.cov.d), hi(b.cov.d);
    for (int i = 0; i < b.cov.d; ++i) {
      lo[i] = long(std::floor(tau[i] / b.cov.delta - reach));
      hi[i] = long(std::ceil(tau[i] / b.cov.delta + reach));
    }
    double s = 0;
    for_each_lattice(lo, hi, [&](const Index& k) { s += b.cube_mass(k, tau); });
    rep.max_defect = std::max(rep.max_defect, std::abs(s - 1.0));
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

SupportReport support_check(const Bapu& b, long k_radius, int samples, uint64_t seed) {
  SupportReport rep;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> unif(0, 1);
  const auto ks = covering_window(b.cov, k_radius);
  for (const Index& k : ks) {
    const Vec ck = index_to_vec(k);
    for (int s = 0; s < samples / int(ks.size()) + 1; ++s) {
      Vec u(b.cov.d);
      for (int i = 0; i < b.cov.d; ++i) u[i] = gauss(rng);
      u.normalize();
      // just outside the element in warped coordinates: phi_k must vanish
      const Vec tau_out = b.cov.delta * (ck + (b.cov.r * (1.0 + unif(rng))) * u);
      rep.max_outside = std::max(rep.max_outside, std::abs(b.cube_mass(k, tau_out)));
      const Vec tau_in = b.cov.delta * (ck + (b.cov.r * unif(rng)) * u);
      rep.max_inside = std::max(rep.max_inside, b.cube_mass(k, tau_in));
    }
  }
  rep.pass = rep.max_outside == 0 && rep.max_inside > 0;
  return rep;
}

FourierL1Report fourier_l1_estimate(const Bapu& b, const Index& k, int grid_n,
                                    double pad) {
  FourierL1Report rep;
  rep.grid_n = grid_n;
  const int d = b.cov.d;
  // bounding box of the element in frequency coordinates, from boundary samples
  Vec lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  Halton h(std::min(8, d));
  const int nb = 256;
  for (int s = 0; s < nb; ++s) {
    Vec u(d);
    if (d == 1) {
      u[0] = (s % 2 == 0) ? 1 : -1;
    } else {
      const auto q = h.next();
      for (int i = 0; i < d; ++i) u[i] = 2 * q[i] - 1;
      if (u.norm() < 1e-6) continue;
      u.normalize();
    }
    const Vec xi = b.cov.map.inverse(b.cov.delta * (index_to_vec(k) + b.cov.r * u));
    lo = lo.cwiseMin(xi);
    hi = hi.cwiseMax(xi);
  }
  const Vec center = 0.5 * (lo + hi);
  std::vector<AxisGrid> freq(d);
  std::vector<int> shape(d);
  for (int i = 0; i < d; ++i) {
    const double half = std::max(1e-6, 0.5 * (hi[i] - lo[i]));
    freq[i] = AxisGrid{grid_n, 2 * pad * half};
    shape[i] = grid_n;
  }
  std::vector<cd> vals(size_t(std::pow(double(grid_n), d)));
  std::vector<int> idx(d, 0);
  for (size_t flat = 0; flat < vals.size(); ++flat) {
    Vec xi(d);
    size_t rem = flat;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = int(rem % size_t(grid_n));
      rem /= size_t(grid_n);
    }
    for (int i = 0; i < d; ++i) xi[i] = center[i] + freq[i].point(idx[i]);
    vals[flat] = b.phi(k, xi);
  }
  const auto f = centered_ft(vals, freq, +1);
  std::vector<AxisGrid> time(d);
  for (int i = 0; i < d; ++i) time[i] = dual_grid(freq[i]);
  double cell = 1;
  for (int i = 0; i < d; ++i) cell *= time[i].step();
  double total = 0, tail = 0;
  for (size_t flat = 0; flat < f.size(); ++flat) {
    size_t rem = flat;
    bool outer = false;
    for (int i = d - 1; i >= 0; --i) {
      const int m = int(rem % size_t(grid_n));
      rem /= size_t(grid_n);
      if (std::abs(time[i].point(m)) > 0.25 * time[i].extent) outer = true;
    }
    const double mass = std::abs(f[flat]) * cell;
    total += mass;
    if (outer) tail += mass;
  }
  rep.value = total;
  rep.tail_ratio = total > 0 ? tail / total : 0;
  return rep;
}

}  // namespace warptf
