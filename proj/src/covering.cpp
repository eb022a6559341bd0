#include "warptf/covering.hpp"

#include <cmath>
#include <random>
#include <set>

namespace warptf {

namespace {

const GaussLegendre& gl24() {
  static GaussLegendre g(24);
  return g;
}

double unit_ball_volume(int d) {
  // V_d = pi^{d/2} / Gamma(d/2 + 1)
  return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

Vec index_to_vec(const Index& k) {
  Vec v(int(k.size()));
  for (size_t i = 0; i < k.size(); ++i) v[int(i)] = double(k[i]);
  return v;
}

double index_norm(const Index& k) {
  double s = 0;
  for (long c : k) s += double(c) * double(c);
  return std::sqrt(s);
}

Index slice(const Index& k, int off, int len) {
  return Index(k.begin() + off, k.begin() + off + len);
}

Vec slice(const Vec& x, int off, int len) { return x.segment(off, len); }

// Norm range of an element, when the element contains every direction at an
// admissible norm (dyadic annuli) or is a warped ball of a radial map (norms
// of its points fill the interval). Half-open [lo, hi).
struct NormRange {
  double lo = 0, hi = 0;
};

bool is_radial_induced(const FrequencyCovering& c) {
  return c.kind == CoveringKind::induced && c.map.radial != nullptr;
}

NormRange norm_range(const FrequencyCovering& cov, const Index& k) {
  if (cov.kind == CoveringKind::besov) {
    const long j = k[0];
    if (j == 0) return {0.0, 2.0};
    return {std::pow(2.0, double(j - 1)), std::pow(2.0, double(j + 1))};
  }
  const auto& comp = *cov.map.radial;
  const double dk = cov.delta * index_norm(k), dr = cov.delta * cov.r;
  return {comp.rho_inv(std::max(0.0, dk - dr)), comp.rho_inv(dk + dr)};
}

bool ranges_overlap(const NormRange& a, const NormRange& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

bool same_induced_map(const FrequencyCovering& a, const FrequencyCovering& b) {
  if (a.kind != CoveringKind::induced || b.kind != CoveringKind::induced) return false;
  if (&a == &b) return true;
  return !a.map.id.empty() && a.map.id == b.map.id && a.d == b.d;
}

// Halton point in the open unit ball, away from the center for directions.
Vec ball_point(Halton& h, int d, bool away_from_zero = false) {
  for (int tries = 0; tries < 4096; ++tries) {
    const auto u = h.next();
    Vec x(d);
    for (int i = 0; i < d; ++i) x[i] = 2 * u[i] - 1;
    const double n = x.norm();
    if (n < 1 && (!away_from_zero || n > 1e-2)) return x;
  }
  throw not_converged("ball_point: rejection sampling failed");
}

Vec sample_element(const FrequencyCovering& cov, const Index& k, Halton& h);

Vec sample_element_impl(const FrequencyCovering& cov, const Index& k, Halton& h) {
  switch (cov.kind) {
    case CoveringKind::induced: {
      const Vec u = ball_point(h, cov.d);
      const Vec tau = cov.delta * (index_to_vec(k) + cov.r * u);
      return cov.map.inverse(tau);
    }
    case CoveringKind::structured: {
      const Vec u = ball_point(h, cov.d);
      return element_center(cov, k) + element_matrix(cov, k) * (cov.r * u);
    }
    case CoveringKind::besov: {
      const Vec dir = ball_point(h, cov.d, true).normalized();
      const double t = h.next()[0];
      const NormRange rg = norm_range(cov, k);
      return (rg.lo + t * (rg.hi - rg.lo) * 0.999) * dir;
    }
    case CoveringKind::product: {
      Vec x(cov.d);
      int ioff = 0, xoff = 0;
      for (const auto& part : cov.parts) {
        x.segment(xoff, part.d) = sample_element(part, slice(k, ioff, part.index_len()), h);
        ioff += part.index_len();
        xoff += part.d;
      }
      return x;
    }
  }
  throw invalid_parameter("sample_element: bad kind");
}

Vec sample_element(const FrequencyCovering& cov, const Index& k, Halton& h) {
  return sample_element_impl(cov, k, h);
}

}  // namespace

int FrequencyCovering::index_len() const {
  switch (kind) {
    case CoveringKind::induced:
    case CoveringKind::structured:
      return d;
    case CoveringKind::besov:
      return 1;
    case CoveringKind::product: {
      int n = 0;
      for (const auto& p : parts) n += p.index_len();
      return n;
    }
  }
  return d;
}

FrequencyCovering induced_covering(const WarpingMap& map, double delta, double r) {
  if (!(delta > 0)) throw invalid_parameter("induced_covering: delta must be positive");
  const double rmin = 0.5 * std::sqrt(double(map.d));
  if (!(r > rmin)) {
    throw invalid_parameter("induced_covering: warped balls leave gaps unless r > sqrt(d)/2");
  }
  FrequencyCovering cov;
  cov.kind = CoveringKind::induced;
  cov.d = map.d;
  cov.delta = delta;
  cov.r = r;
  cov.map = map;
  return cov;
}

FrequencyCovering structured_covering(const WarpingMap& map, double delta, double r) {
  if (!map.v0.valid()) {
    throw invalid_parameter("structured_covering: map needs a control weight");
  }
  const double theta0 = 1.0 / (2.0 * map.d * map.v0(1.0));
  if (!(r > 0 && r < theta0 / 4)) {
    throw invalid_parameter("structured_covering: requires r in (0, theta0/4)");
  }
  const double dmax = std::min(1.0, 4 * r) / (2 * std::sqrt(double(map.d)) * map.v0(0.5));
  if (!(delta > 0 && delta < dmax)) {
    throw invalid_parameter("structured_covering: delta out of the admissible range");
  }
  FrequencyCovering cov;
  cov.kind = CoveringKind::structured;
  cov.d = map.d;
  cov.delta = delta;
  cov.r = r;
  cov.map = map;
  return cov;
}

FrequencyCovering besov_covering(int d) {
  if (d < 1) throw invalid_parameter("besov_covering: d must be >= 1");
  FrequencyCovering cov;
  cov.kind = CoveringKind::besov;
  cov.d = d;
  return cov;
}

FrequencyCovering product_covering(const std::vector<FrequencyCovering>& parts) {
  if (parts.empty()) throw invalid_parameter("product_covering: needs parts");
  FrequencyCovering cov;
  cov.kind = CoveringKind::product;
  cov.parts = parts;
  cov.d = 0;
  for (const auto& p : parts) cov.d += p.d;
  return cov;
}

bool warped_point_covered(double delta, double r, const Vec& tau) {
  const int d = int(tau.size());
  const Vec t = tau / delta;
  std::vector<long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = long(std::floor(t[i] - r));
    hi[i] = long(std::ceil(t[i] + r));
  }
  bool hit = false;
  for_each_lattice(lo, hi, [&](const Index& k) {
    if (hit) return;
    if ((t - index_to_vec(k)).norm() < r) hit = true;
  });
  return hit;
}

bool element_contains(const FrequencyCovering& cov, const Index& k, const Vec& xi) {
  switch (cov.kind) {
    case CoveringKind::induced: {
      const Vec t = cov.map.forward(xi) / cov.delta;
      return (t - index_to_vec(k)).norm() < cov.r;
    }
    case CoveringKind::structured: {
      const Vec u = element_matrix(cov, k).partialPivLu().solve(xi - element_center(cov, k));
      return u.norm() < cov.r;
    }
    case CoveringKind::besov: {
      const NormRange rg = norm_range(cov, k);
      const double n = xi.norm();
      return (k[0] == 0 ? n >= 0 : n > rg.lo) && n < rg.hi;
    }
    case CoveringKind::product: {
      int ioff = 0, xoff = 0;
      for (const auto& part : cov.parts) {
        if (!element_contains(part, slice(k, ioff, part.index_len()),
                              slice(xi, xoff, part.d)))
          return false;
        ioff += part.index_len();
        xoff += part.d;
      }
      return true;
    }
  }
  return false;
}

bool point_covered(const FrequencyCovering& cov, const Vec& xi) {
  switch (cov.kind) {
    case CoveringKind::induced:
      return warped_point_covered(cov.delta, cov.r, cov.map.forward(xi));
    case CoveringKind::structured: {
      const Vec t = cov.map.forward(xi) / cov.delta;
      const long reach = long(std::ceil(4 * cov.r / cov.delta)) + 1;
      std::vector<long> lo(cov.d), hi(cov.d);
      for (int i = 0; i < cov.d; ++i) {
        lo[i] = long(std::llround(t[i])) - reach;
        hi[i] = long(std::llround(t[i])) + reach;
      }
      bool hit = false;
      for_each_lattice(lo, hi, [&](const Index& k) {
        if (!hit && element_contains(cov, k, xi)) hit = true;
      });
      return hit;
    }
    case CoveringKind::besov:
      return true;
    case CoveringKind::product: {
      int xoff = 0;
      for (const auto& part : cov.parts) {
        if (!point_covered(part, slice(xi, xoff, part.d))) return false;
        xoff += part.d;
      }
      return true;
    }
  }
  return false;
}

Vec element_center(const FrequencyCovering& cov, const Index& k) {
  switch (cov.kind) {
    case CoveringKind::induced:
    case CoveringKind::structured:
      return cov.map.inverse(cov.delta * index_to_vec(k));
    case CoveringKind::besov: {
      Vec c = Vec::Zero(cov.d);
      if (k[0] > 0) c[0] = 3.0 * std::pow(2.0, double(k[0] - 1));  // mid-annulus point
      return c;
    }
    case CoveringKind::product: {
      Vec c(cov.d);
      int ioff = 0, xoff = 0;
      for (const auto& part : cov.parts) {
        c.segment(xoff, part.d) = element_center(part, slice(k, ioff, part.index_len()));
        ioff += part.index_len();
        xoff += part.d;
      }
      return c;
    }
  }
  throw invalid_parameter("element_center: bad kind");
}

Mat element_matrix(const FrequencyCovering& cov, const Index& k) {
  switch (cov.kind) {
    case CoveringKind::induced:
    case CoveringKind::structured:
      return cov.map.jac_inverse(cov.delta * index_to_vec(k));
    case CoveringKind::besov:
      return std::pow(2.0, double(k[0])) * Mat::Identity(cov.d, cov.d);
    case CoveringKind::product: {
      Mat m = Mat::Zero(cov.d, cov.d);
      int ioff = 0, xoff = 0;
      for (const auto& part : cov.parts) {
        m.block(xoff, xoff, part.d, part.d) =
            element_matrix(part, slice(k, ioff, part.index_len()));
        ioff += part.index_len();
        xoff += part.d;
      }
      return m;
    }
  }
  throw invalid_parameter("element_matrix: bad kind");
}

double element_measure(const FrequencyCovering& cov, const Index& k) {
  switch (cov.kind) {
    case CoveringKind::induced: {
      const auto& g = gl24();
      const Vec c = cov.delta * index_to_vec(k);
      const double rr = cov.delta * cov.r;
      auto w = [&](const Vec& tau) { return eval_weight(cov.map, tau); };
      if (cov.d == 1) {
        return g.integrate([&](double t) { return w(vec1(t)); }, c[0] - rr, c[0] + rr);
      }
      if (cov.d == 2) {
        return g.integrate(
            [&](double s) {
              return s * g.integrate(
                             [&](double phi) {
                               return w(c + s * vec2(std::cos(phi), std::sin(phi)));
                             },
                             0, 2 * M_PI);
            },
            0, rr);
      }
      if (cov.d == 3) {
        return g.integrate(
            [&](double s) {
              return s * s *
                     g.integrate(
                         [&](double th) {
                           return std::sin(th) *
                                  g.integrate(
                                      [&](double phi) {
                                        return w(c + s * vec3(std::sin(th) * std::cos(phi),
                                                              std::sin(th) * std::sin(phi),
                                                              std::cos(th)));
                                      },
                                      0, 2 * M_PI);
                         },
                         0, M_PI);
            },
            0, rr);
      }
      throw invalid_parameter("element_measure: induced quadrature supports d <= 3");
    }
    case CoveringKind::structured:
      return eval_weight(cov.map, cov.delta * index_to_vec(k)) *
             unit_ball_volume(cov.d) * std::pow(cov.r, cov.d);
    case CoveringKind::besov: {
      const NormRange rg = norm_range(cov, k);
      const double v = unit_ball_volume(cov.d);
      return v * (std::pow(rg.hi, cov.d) - std::pow(rg.lo, cov.d));
    }
    case CoveringKind::product: {
      double m = 1;
      int ioff = 0;
      for (const auto& part : cov.parts) {
        m *= element_measure(part, slice(k, ioff, part.index_len()));
        ioff += part.index_len();
      }
      return m;
    }
  }
  throw invalid_parameter("element_measure: bad kind");
}

namespace {

std::vector<Index> neighbors_step(const FrequencyCovering& cov, const Index& k) {
  std::vector<Index> out;
  switch (cov.kind) {
    case CoveringKind::induced: {
      const long reach = long(std::ceil(2 * cov.r));
      std::vector<long> lo(cov.d), hi(cov.d);
      for (int i = 0; i < cov.d; ++i) {
        lo[i] = k[i] - reach;
        hi[i] = k[i] + reach;
      }
      for_each_lattice(lo, hi, [&](const Index& l) {
        double s = 0;
        for (int i = 0; i < cov.d; ++i) s += sq(double(l[i] - k[i]));
        if (std::sqrt(s) < 2 * cov.r) out.push_back(l);
      });
      return out;
    }
    case CoveringKind::besov: {
      for (long j = std::max(0L, k[0] - 1); j <= k[0] + 1; ++j) out.push_back({j});
      return out;
    }
    case CoveringKind::structured: {
      const long reach = long(std::ceil(8 * cov.r / cov.delta));
      std::vector<long> lo(cov.d), hi(cov.d);
      for (int i = 0; i < cov.d; ++i) {
        lo[i] = k[i] - reach;
        hi[i] = k[i] + reach;
      }
      for_each_lattice(lo, hi, [&](const Index& l) {
        if (elements_intersect(cov, k, cov, l).intersects) out.push_back(l);
      });
      return out;
    }
    case CoveringKind::product: {
      std::vector<std::vector<Index>> per;
      int ioff = 0;
      for (const auto& part : cov.parts) {
        per.push_back(neighbors_step(part, slice(k, ioff, part.index_len())));
        ioff += part.index_len();
      }
      std::vector<Index> acc = {{}};
      for (const auto& opts : per) {
        std::vector<Index> nxt;
        for (const auto& head : acc) {
          for (const auto& tail : opts) {
            Index combined = head;
            combined.insert(combined.end(), tail.begin(), tail.end());
            nxt.push_back(std::move(combined));
          }
        }
        acc = std::move(nxt);
      }
      return acc;
    }
  }
  return out;
}

}  // namespace

std::vector<Index> neighbors(const FrequencyCovering& cov, const Index& k, int n) {
  std::set<Index> closure = {k};
  std::vector<Index> frontier = {k};
  for (int round = 0; round < n; ++round) {
    std::vector<Index> next;
    for (const Index& cur : frontier) {
      for (Index& cand : neighbors_step(cov, cur)) {
        if (closure.insert(cand).second) next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Index>(closure.begin(), closure.end());
}

PairCheck elements_intersect(const FrequencyCovering& a, const Index& ka,
                             const FrequencyCovering& b, const Index& kb,
                             int qmc_points) {
  if (same_induced_map(a, b)) {
    const Vec ca = a.delta * index_to_vec(ka), cb = b.delta * index_to_vec(kb);
    return {(ca - cb).norm() < a.delta * a.r + b.delta * b.r, true};
  }
  if (a.kind == CoveringKind::besov && b.kind == CoveringKind::besov) {
    return {std::abs(ka[0] - kb[0]) <= 1, true};
  }
  const bool a_interval = is_radial_induced(a) || a.kind == CoveringKind::besov;
  const bool b_interval = is_radial_induced(b) || b.kind == CoveringKind::besov;
  if (a_interval && b_interval &&
      (a.kind == CoveringKind::besov || b.kind == CoveringKind::besov)) {
    return {ranges_overlap(norm_range(a, ka), norm_range(b, kb)), true};
  }
  if (a.kind == CoveringKind::product && b.kind == CoveringKind::product &&
      a.parts.size() == b.parts.size()) {
    bool compatible = true;
    for (size_t i = 0; i < a.parts.size(); ++i) {
      if (a.parts[i].index_len() != b.parts[i].index_len() ||
          a.parts[i].d != b.parts[i].d)
        compatible = false;
    }
    if (compatible) {
      PairCheck agg{true, true};
      int ioff = 0;
      for (size_t i = 0; i < a.parts.size(); ++i) {
        const int len = a.parts[i].index_len();
        const PairCheck pc = elements_intersect(a.parts[i], slice(ka, ioff, len),
                                                b.parts[i], slice(kb, ioff, len),
                                                qmc_points);
        agg.intersects = agg.intersects && pc.intersects;
        agg.exact = agg.exact && pc.exact;
        if (!agg.intersects) return {false, agg.exact};
        ioff += len;
      }
      return agg;
    }
  }
  // quasi-Monte-Carlo fallback: sample each element, test membership in the other
  Halton ha(std::min(8, a.d + 1)), hb(std::min(8, b.d + 1));
  for (int i = 0; i < qmc_points; ++i) {
    if (element_contains(b, kb, sample_element(a, ka, ha))) return {true, false};
    if (element_contains(a, ka, sample_element(b, kb, hb))) return {true, false};
  }
  return {false, false};
}

std::vector<Index> covering_window(const FrequencyCovering& cov, long radius) {
  std::vector<Index> out;
  switch (cov.kind) {
    case CoveringKind::induced:
    case CoveringKind::structured: {
      std::vector<long> lo(cov.d, -radius), hi(cov.d, radius);
      for_each_lattice(lo, hi, [&](const Index& k) {
        if (index_norm(k) <= double(radius)) out.push_back(k);
      });
      return out;
    }
    case CoveringKind::besov: {
      for (long j = 0; j <= radius; ++j) out.push_back({j});
      return out;
    }
    case CoveringKind::product: {
      std::vector<Index> acc = {{}};
      for (const auto& part : cov.parts) {
        const auto opts = covering_window(part, radius);
        std::vector<Index> nxt;
        for (const auto& head : acc) {
          for (const auto& tail : opts) {
            Index combined = head;
            combined.insert(combined.end(), tail.begin(), tail.end());
            nxt.push_back(std::move(combined));
          }
        }
        acc = std::move(nxt);
      }
      return acc;
    }
  }
  return out;
}

CrossReport cross_intersections(const FrequencyCovering& a, const FrequencyCovering& b,
                                const std::vector<Index>& window_b,
                                const std::vector<Index>& window_a) {
  CrossReport rep;
  for (const Index& j : window_b) {
    CrossRow row;
    row.k = j;
    // geometric candidate enumeration when the pair test is exact
    if (same_induced_map(a, b)) {
      const Vec cb = (b.delta / a.delta) * index_to_vec(j);
      const double reach = (a.delta * a.r + b.delta * b.r) / a.delta;
      std::vector<long> lo(a.d), hi(a.d);
      for (int i = 0; i < a.d; ++i) {
        lo[i] = long(std::floor(cb[i] - reach));
        hi[i] = long(std::ceil(cb[i] + reach));
      }
      for_each_lattice(lo, hi, [&](const Index& k) {
        if (elements_intersect(a, k, b, j).intersects) ++row.count;
      });
    } else if (is_radial_induced(a) &&
               (b.kind == CoveringKind::besov || is_radial_induced(b))) {
      const NormRange rb = norm_range(b, j);
      const auto& comp = *a.map.radial;
      const double lo_latt =
          rb.lo > 0 ? (comp.rho(rb.lo) - a.delta * a.r) / a.delta : -1.0;
      const double hi_latt = (comp.rho(rb.hi) + a.delta * a.r) / a.delta;
      const long box = long(std::ceil(hi_latt));
      std::vector<long> lo(a.d, -box), hi(a.d, box);
      for_each_lattice(lo, hi, [&](const Index& k) {
        const double n = index_norm(k);
        if (n <= hi_latt + 1 && n >= lo_latt - 1 &&
            elements_intersect(a, k, b, j).intersects)
          ++row.count;
      });
    } else if (a.kind == CoveringKind::besov &&
               (is_radial_induced(b) || b.kind == CoveringKind::besov)) {
      const NormRange rb = norm_range(b, j);
      const long jmax = long(std::ceil(std::log2(std::max(2.0, rb.hi)))) + 1;
      for (long jj = 0; jj <= jmax; ++jj) {
        if (elements_intersect(a, {jj}, b, j).intersects) ++row.count;
      }
    } else {
      if (window_a.empty()) {
        throw invalid_parameter(
            "cross_intersections: window for the first covering required when no exact "
            "reduction applies");
      }
      for (const Index& k : window_a) {
        const PairCheck pc = elements_intersect(a, k, b, j);
        row.exact = row.exact && pc.exact;
        if (pc.intersects) ++row.count;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

TightnessReport tightness_radius(const FrequencyCovering& cov, long k_radius,
                                 int boundary_samples, uint64_t seed) {
  if (cov.kind != CoveringKind::induced) {
    throw invalid_parameter("tightness_radius: induced covering required");
  }
  if (!cov.map.v0.valid()) {
    throw invalid_parameter("tightness_radius: map needs a control weight");
  }
  TightnessReport rep;
  rep.theta0 = 1.0 / (2.0 * cov.d * cov.map.v0(1.0));
  rep.theta = std::min(cov.delta * cov.r, rep.theta0);
  rep.inner_radius = rep.theta / 4;

  rep.max_violation = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> unif(0, 1);
  auto ks = covering_window(cov, k_radius);
  // a few distant elements probe the moderate regime as well
  for (int extra = 0; extra < 8; ++extra) {
    Index k(cov.d);
    for (int i = 0; i < cov.d; ++i) k[i] = long(std::llround(20 * gauss(rng)));
    ks.push_back(k);
  }
  for (const Index& k : ks) {
    const Vec bk = element_center(cov, k);
    const Mat tk = element_matrix(cov, k);
    for (int s = 0; s < boundary_samples; ++s) {
      Vec u(cov.d);
      for (int i = 0; i < cov.d; ++i) u[i] = gauss(rng);
      u.normalize();
      const double scale = (s % 2 == 0) ? 1.0 - 1e-9 : unif(rng);
      u *= rep.inner_radius * scale;
      const Vec t = cov.map.forward(bk + tk * u) / cov.delta;
      const double viol = (t - index_to_vec(k)).norm() - cov.r;
      rep.max_violation = std::max(rep.max_violation, viol);
    }
  }
  rep.pass = rep.max_violation < 0;
  return rep;
}

AlphaReport alpha_verify(const FrequencyCovering& cov, double alpha, long kmax,
                         double band_threshold) {
  AlphaReport rep;
  rep.alpha = alpha;
  if (alpha > 1) {
    rep.rejected = true;
    rep.rule = "alpha-covering-needs-alpha-leq-1";
    rep.pass = false;
    return rep;
  }
  if (cov.kind != CoveringKind::induced) {
    throw invalid_parameter("alpha_verify: induced covering required");
  }
  rep.rule = "alpha-covering-measure-scaling";
  rep.ratio_min = std::numeric_limits<double>::infinity();
  const double theta = cov.map.v0.valid()
                           ? std::min(cov.delta * cov.r,
                                      1.0 / (2.0 * cov.d * cov.map.v0(1.0)))
                           : cov.delta * cov.r;
  for (const Index& k : covering_window(cov, kmax)) {
    const double mu = element_measure(cov, k);
    const double target = std::pow(1.0 + element_center(cov, k).norm(), alpha * cov.d);
    const double ratio = mu / target;
    rep.ratio_min = std::min(rep.ratio_min, ratio);
    rep.ratio_max = std::max(rep.ratio_max, ratio);
    if (cov.map.v0.valid()) {
      const Mat tk = element_matrix(cov, k);
      const double outer =
          op_norm(tk) * cov.delta * cov.r * cov.map.v0(cov.delta * cov.r);
      const double inner = smallest_singular_value(tk) * theta / 4;
      rep.shape_max = std::max(rep.shape_max, outer / inner);
    }
  }
  rep.pass = rep.band() <= band_threshold && rep.ratio_min > 0;
  return rep;
}

NeighborGrowth neighbor_growth_diagnostic(const FrequencyCovering& cov, const Index& k,
                                          int nmax) {
  NeighborGrowth g;
  for (int n = 0; n <= nmax; ++n) g.counts.push_back(neighbors(cov, k, n).size());
  return g;
}

}  // namespace warptf
