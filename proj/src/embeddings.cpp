#include "warptf/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace warptf {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string fmt_vec(const std::vector<double>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += fmt(v[i]);
  }
  return s + ")";
}

double closed_form_at(const AsymptoticSequence& seq, long j) {
  return std::exp2(seq.a.value() * double(j)) * std::pow(1.0 + double(j), seq.b.value());
}

Relation relation_of(Membership m) {
  switch (m) {
    case Membership::finite: return Relation::embeds;
    case Membership::infinite: return Relation::fails;
    default: return Relation::undetermined;
  }
}

// Geometric probe grid 10^{k/2} plus the origin; radial profiles are cheap to
// evaluate far out, which is what boundedness-vs-growth discrimination needs.
std::vector<double> probe_radii() {
  std::vector<double> t{0.0};
  for (int k = -6; k <= 16; ++k) t.push_back(std::pow(10.0, 0.5 * k));
  return t;
}

struct TrendProbe {
  double sup_inner = 0, sup_full = 0;
  bool bounded() const { return sup_full <= 1.05 * sup_inner + 1e-12; }
};

TrendProbe probe_ratio(const std::function<double(double)>& f, double inner_cut = 1e4) {
  TrendProbe p;
  for (double t : probe_radii()) {
    const double v = f(t);
    p.sup_full = std::max(p.sup_full, v);
    if (t <= inner_cut) p.sup_inner = std::max(p.sup_inner, v);
  }
  return p;
}

// max{rho_b'(t)/rho_a'(t), rho_b(t)/rho_a(t)}: the composition norm of the
// b-warping applied after the inverse a-warping at |tau| = rho_a(t).
double radial_composition_norm(const RadialComponent& a, const RadialComponent& b, double t) {
  return std::max(b.drho(t) / a.drho(t), b.tilde(t) / a.tilde(t));
}

}  // namespace

// ------------------------------------------------------------ descriptors

std::string SpaceDescriptor::str() const {
  switch (kind) {
    case SpaceKind::warped:
      return "Co[" + map_id + "; " + kappa_label + "; p=" + p.str() + ",q=" + q.str() +
             ",d=" + std::to_string(d) + "]";
    case SpaceKind::besov:
      return "Besov[s=" + fmt(s) + ",p=" + p.str() + ",q=" + q.str() +
             ",d=" + std::to_string(d) + "]";
    case SpaceKind::alpha_mod:
      return "AlphaMod[alpha=" + fmt(alpha) + ",s=" + fmt(s) + ",p=" + p.str() +
             ",q=" + q.str() + ",d=" + std::to_string(d) + "]";
    default:
      return "MixedSmoothness[s=" + fmt_vec(s_vec) + ",p=" + p.str() + ",q=" + q.str() +
             ",d=" + std::to_string(d) + "]";
  }
}

SpaceDescriptor besov_space(double s, XR p, XR q, int d) {
  SpaceDescriptor sp;
  sp.kind = SpaceKind::besov;
  sp.d = d;
  sp.p = p;
  sp.q = q;
  sp.s = s;
  return sp;
}

SpaceDescriptor alpha_modulation_space(double alpha, double s, XR p, XR q, int d) {
  if (alpha > 1) throw invalid_parameter("alpha_modulation_space: alpha must be <= 1");
  if (alpha == 1) return besov_space(s, p, q, d);
  SpaceDescriptor sp;
  sp.kind = SpaceKind::alpha_mod;
  sp.d = d;
  sp.p = p;
  sp.q = q;
  sp.s = s;
  sp.alpha = alpha;
  return sp;
}

SpaceDescriptor mixed_smoothness_space(const std::vector<double>& s, XR p, XR q) {
  if (s.empty()) throw invalid_parameter("mixed_smoothness_space: empty smoothness vector");
  SpaceDescriptor sp;
  sp.kind = SpaceKind::mixed;
  sp.d = int(s.size());
  sp.p = p;
  sp.q = q;
  sp.s_vec = s;
  return sp;
}

SpaceDescriptor warped_space(const std::string& map_id, std::function<double(const Vec&)> kappa,
                             const std::string& kappa_label, XR p, XR q, int d) {
  SpaceDescriptor sp;
  sp.kind = SpaceKind::warped;
  sp.d = d;
  sp.p = p;
  sp.q = q;
  sp.map_id = map_id;
  sp.kappa = std::move(kappa);
  sp.kappa_label = kappa_label;
  return sp;
}

// ------------------------------------------------------ sequence algebra

AsymptoticSequence power_log_sequence(Rat a, Rat b) {
  AsymptoticSequence s;
  s.closed_form = true;
  s.a = a;
  s.b = b;
  return s;
}

AsymptoticSequence sampled_sequence(std::vector<double> values, long j0) {
  if (j0 < 0) throw invalid_parameter("sampled_sequence: window must start at j >= 0");
  AsymptoticSequence s;
  s.closed_form = false;
  s.samples = std::move(values);
  s.j0 = j0;
  return s;
}

std::string membership_str(Membership m) {
  switch (m) {
    case Membership::finite: return "finite";
    case Membership::infinite: return "infinite";
    default: return "undetermined";
  }
}

std::string relation_str(Relation r) {
  switch (r) {
    case Relation::embeds: return "embeds";
    case Relation::fails: return "fails";
    case Relation::equal: return "equal";
    default: return "undetermined";
  }
}

SequenceFit fit_power_log(const std::vector<double>& samples, long j0) {
  const int n = int(samples.size());
  Mat A(n, 3);
  Vec y(n);
  for (int i = 0; i < n; ++i) {
    const double j = double(j0 + i);
    A(i, 0) = j * M_LN2;
    A(i, 1) = std::log1p(j);
    A(i, 2) = 1.0;
    y[i] = std::log(samples[i]);
  }
  const Vec x = A.colPivHouseholderQr().solve(y);
  return SequenceFit{x[0], x[1], x[2]};
}

Membership ellq_membership(const AsymptoticSequence& seq, const XR& s) {
  if (s.finite() && s.r < Rat(1)) throw invalid_parameter("ellq_membership: exponent must be >= 1");
  if (seq.closed_form) {
    if (seq.a < Rat(0)) return Membership::finite;
    if (seq.a > Rat(0)) return Membership::infinite;
    if (!s.finite()) return seq.b <= Rat(0) ? Membership::finite : Membership::infinite;
    return seq.b * s.r < Rat(-1) ? Membership::finite : Membership::infinite;
  }
  double top = 0;
  for (double v : seq.samples) {
    if (v < 0 || !std::isfinite(v))
      throw invalid_parameter("ellq_membership: samples must be finite and nonnegative");
    top = std::max(top, v);
  }
  if (top == 0) return Membership::finite;
  for (double v : seq.samples)
    if (v == 0) throw invalid_parameter("ellq_membership: zero inside a positive sample window");
  if (seq.samples.size() < 6) return Membership::undetermined;
  const SequenceFit fit = fit_power_log(seq.samples, seq.j0);
  if (fit.a < -1e-3) return Membership::finite;
  if (fit.a > 1e-3) return Membership::infinite;
  if (!s.finite()) {
    if (fit.b > 0.05) return Membership::infinite;
    if (fit.b > 0.005) return Membership::undetermined;
    return Membership::finite;
  }
  const double g = fit.b * s.value() + 1.0;
  if (g < -0.05) return Membership::finite;
  if (g > 0.05) return Membership::infinite;
  return Membership::undetermined;
}

std::optional<Rat> try_rationalize(double x, long max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  const long long sign = x < 0 ? -1 : 1;
  const double x0 = std::abs(x);
  long long h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  double val = x0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(val);
    if (fl > 9e17) break;
    const long long ai = (long long)(fl);
    const long long h = ai * h1 + h2, k = ai * k1 + k2;
    if (k > max_den || k <= 0 || h < 0) break;
    if (std::abs(x0 - double(h) / double(k)) <= 1e-9 * std::max(1.0, x0))
      return Rat(sign * h, k);
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = val - fl;
    if (frac < 1e-15) break;
    val = 1.0 / frac;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- exponents

TExponents t_exponents(const XR& p1, const XR& p2, const XR& q1, const XR& q2) {
  const Rat rp1 = reciprocal(p1), rp2 = reciprocal(p2);
  const Rat rq1 = reciprocal(q1), rq2 = reciprocal(q2);
  TExponents e;
  e.t = rat_max(Rat(0), rq2 - rat_min(rp1, Rat(1) - rp1));
  e.t_tilde = rat_max(Rat(0), rat_max(rp2, Rat(1) - rp2) - rq1);
  return e;
}

EmbeddingVerdict embed_same_covering(const AsymptoticSequence& u, const AsymptoticSequence& v,
                                     const AsymptoticSequence& detT, const XR& p1, const XR& p2,
                                     const XR& q1, const XR& q2) {
  EmbeddingVerdict out;
  out.direction = "A->B";
  const TExponents te = t_exponents(p1, p2, q1, q2);
  out.t = te.t;
  out.t_tilde = te.t_tilde;
  if (!(p1 <= p2)) {
    out.relation = Relation::fails;
    out.membership = Membership::infinite;
    out.citation = "same-covering-needs-p1-leq-p2";
    out.note = "integrability exponent must not decrease";
    return out;
  }
  const Rat pdelta = reciprocal(p1) - reciprocal(p2);
  const XR E = sequence_exponent(q1, q2);
  out.citation = "same-covering-weight-sequence";
  if (u.closed_form && v.closed_form && detT.closed_form) {
    out.sequence = power_log_sequence(v.a - u.a + pdelta * detT.a, v.b - u.b + pdelta * detT.b);
  } else {
    long j0 = 0;
    size_t n = 0;
    bool have_window = false;
    for (const auto* s : {&u, &v, &detT}) {
      if (s->closed_form) continue;
      if (!have_window) {
        j0 = s->j0;
        n = s->samples.size();
        have_window = true;
      } else if (s->j0 != j0 || s->samples.size() != n) {
        throw invalid_parameter("embed_same_covering: sample windows must align");
      }
    }
    std::vector<double> k(n);
    for (size_t i = 0; i < n; ++i) {
      const long j = j0 + long(i);
      const double ui = u.closed_form ? closed_form_at(u, j) : u.samples[i];
      const double vi = v.closed_form ? closed_form_at(v, j) : v.samples[i];
      const double di = detT.closed_form ? closed_form_at(detT, j) : detT.samples[i];
      k[i] = vi / ui * std::pow(di, pdelta.value());
    }
    out.sequence = sampled_sequence(std::move(k), j0);
  }
  out.membership = ellq_membership(out.sequence, E);
  out.relation = relation_of(out.membership);
  return out;
}

// ------------------------------------------------- map comparison / equality

EqualityReport equality_check(const WarpingMap& m1, const WarpingMap& m2, const GridSpec& grid) {
  if (m1.d != m2.d) throw invalid_parameter("equality_check: dimension mismatch");
  EqualityReport rep;
  if (m1.radial && m2.radial) {
    const RadialComponent& c1 = *m1.radial;
    const RadialComponent& c2 = *m2.radial;
    const TrendProbe p12 =
        probe_ratio([&](double t) { return radial_composition_norm(c1, c2, t); });
    const TrendProbe p21 =
        probe_ratio([&](double t) { return radial_composition_norm(c2, c1, t); });
    rep.sup_12 = p12.sup_full;
    rep.sup_21 = p21.sup_full;
    rep.bounded_12 = p12.bounded();
    rep.bounded_21 = p21.bounded();
    rep.radial_shortcut = true;
    rep.citation = "radial-derivative-ratio";
  } else {
    const auto composition_sup = [&](const WarpingMap& a, const WarpingMap& b) {
      TrendProbe p;
      const double cut = 0.5 * std::max(std::abs(grid.lo), std::abs(grid.hi));
      for (const Vec& tau : grid.points(m1.d)) {
        const Vec xi = a.inv(tau);
        const Mat db = b.jac_inv(b.fwd(xi)).inverse();
        const double v = op_norm(db * a.jac_inv(tau));
        p.sup_full = std::max(p.sup_full, v);
        if (tau.lpNorm<Eigen::Infinity>() <= cut) p.sup_inner = std::max(p.sup_inner, v);
      }
      return p;
    };
    const TrendProbe p12 = composition_sup(m1, m2);
    const TrendProbe p21 = composition_sup(m2, m1);
    rep.sup_12 = p12.sup_full;
    rep.sup_21 = p21.sup_full;
    rep.bounded_12 = p12.sup_full <= 1.2 * p12.sup_inner + 1e-12;
    rep.bounded_21 = p21.sup_full <= 1.2 * p21.sup_inner + 1e-12;
    rep.citation = "jacobian-composition-window";
  }
  rep.relation = (rep.bounded_12 && rep.bounded_21) ? Relation::equal : Relation::fails;
  return rep;
}

// ------------------------------------------------------- radial sandwiches

SandwichSpace radial_embedding(std::shared_ptr<const RadialComponent> rho1,
                               std::shared_ptr<const RadialComponent> rho2,
                               std::function<double(const Vec&)> kappa,
                               const std::string& kappa_label, const XR& p, const XR& q, int d) {
  if (!rho1 || !rho2) throw invalid_parameter("radial_embedding: missing component");
  SandwichSpace sw;
  const TExponents te = t_exponents(p, p, q, q);
  sw.t = te.t;
  sw.t_tilde = te.t_tilde;
  sw.citation = "radial-sandwich-weights";

  const TrendProbe dom =
      probe_ratio([&](double t) { return rho2->drho(t) / rho1->drho(t); });
  sw.deriv_ratio_sup = dom.sup_full;
  if (!dom.bounded())
    throw not_converged("radial_embedding: derivative domination probe failed (rho2' grows "
                        "against rho1')");
  for (double f : {0.25, 0.5, 2.0, 4.0}) {
    const TrendProbe sc = probe_ratio([&](double t) {
      const double a = rho1->drho(f * t), b = rho1->drho(t);
      return std::max(a / b, b / a);
    });
    sw.scaling_sup = std::max(sw.scaling_sup, sc.sup_full);
    if (!sc.bounded())
      throw not_converged("radial_embedding: two-point scaling probe failed for rho1'");
  }
  sw.hypotheses_ok = true;

  // [w2 o map2 / w1 o map1](xi) with w_i = det D(map_i^{-1}); closed radial
  // form 1 / (rho'(t) * (rho(t)/t)^{d-1}) at t = |xi|.
  const auto wfac = [rho1, rho2, d](const Vec& xi) {
    const double t = xi.norm();
    const double w1 = 1.0 / (rho1->drho(t) * std::pow(rho1->tilde(t), d - 1));
    const double w2 = 1.0 / (rho2->drho(t) * std::pow(rho2->tilde(t), d - 1));
    return w2 / w1;
  };
  const Rat e_low = reciprocal(q) - Rat(1, 2) + te.t_tilde;
  const Rat e_up = reciprocal(q) - Rat(1, 2) - te.t;
  const auto shifted = [kappa, wfac](Rat e) {
    const double ev = e.value();
    return std::function<double(const Vec&)>(
        [kappa, wfac, ev](const Vec& xi) { return kappa(xi) * std::pow(wfac(xi), ev); });
  };
  const std::string id1 = "radial:" + rho1->id, id2 = "radial:" + rho2->id;
  sw.lower = warped_space(id1, shifted(e_low),
                          kappa_label + "*[w2/w1]^(" + e_low.str() + ")", p, q, d);
  sw.middle = warped_space(id2, std::move(kappa), kappa_label, p, q, d);
  sw.upper = warped_space(id1, shifted(e_up),
                          kappa_label + "*[w2/w1]^(" + e_up.str() + ")", p, q, d);
  return sw;
}

// --------------------------------------------------- dyadic-scale comparisons

AsymptoticSequence gamma_sequence(const RadialComponent& comp, int d, int jmax) {
  if (comp.id == "ln") return power_log_sequence(Rat(d), Rat(1 - d));
  if (comp.id.rfind("alpha:", 0) == 0) {
    const double alpha = std::stod(comp.id.substr(6));
    if (auto ar = try_rationalize(alpha, 1000))
      return power_log_sequence(*ar * Rat(d), Rat(0));
  }
  std::vector<double> g(size_t(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    const double x = std::exp2(double(j));
    g[j] = 1.0 / (comp.drho(x) * std::pow(comp.tilde(x), d - 1));
  }
  return sampled_sequence(std::move(g), 0);
}

double besov_identification_exponent(double s, const XR& q, int d) {
  return s + d * (0.5 - reciprocal(q).value());
}

BesovComparison besov_vs_warped(std::shared_ptr<const RadialComponent> rho, double s1, double s2,
                                const XR& p1, const XR& p2, const XR& q1, const XR& q2, int d) {
  if (!rho) throw invalid_parameter("besov_vs_warped: missing component");
  BesovComparison cmp;
  {
    TrendProbe curv;
    for (int j = 0; j <= 20; ++j) {
      const double v = besov_curvature_ratio(*rho, std::exp2(double(j)));
      curv.sup_full = std::max(curv.sup_full, v);
      if (j <= 10) curv.sup_inner = std::max(curv.sup_inner, v);
    }
    cmp.curvature_sup = curv.sup_full;
  }
  cmp.gamma = gamma_sequence(*rho, d);

  const auto s1r = try_rationalize(s1), s2r = try_rationalize(s2);
  const bool exact = cmp.gamma.closed_form && s1r && s2r;

  // A_j = 2^{j u} gamma_j^e decided in l^E; shared by both directions.
  const auto decide = [&](double u_dbl, Rat u_rat, Rat e, const XR& E, EmbeddingVerdict& out) {
    if (exact) {
      out.sequence =
          power_log_sequence(u_rat + e * cmp.gamma.a, e * cmp.gamma.b);
    } else {
      const int jmax = cmp.gamma.closed_form ? 28 : int(cmp.gamma.samples.size()) - 1;
      std::vector<double> a(size_t(jmax) + 1);
      for (int j = 0; j <= jmax; ++j) {
        const double g =
            cmp.gamma.closed_form ? closed_form_at(cmp.gamma, j) : cmp.gamma.samples[j];
        a[j] = std::exp2(double(j) * u_dbl) * std::pow(g, e.value());
      }
      out.sequence = sampled_sequence(std::move(a), 0);
    }
    out.membership = ellq_membership(out.sequence, E);
    out.relation = relation_of(out.membership);
  };

  {
    EmbeddingVerdict& v = cmp.into_besov;
    v.direction = "coorbit->besov";
    v.citation = "dyadic-vs-warped-sequence";
    const TExponents te = t_exponents(p1, p2, q1, q2);
    v.t = te.t;
    v.t_tilde = te.t_tilde;
    if (!(p1 <= p2)) {
      v.relation = Relation::fails;
      v.membership = Membership::infinite;
      v.note = "needs p1 <= p2";
    } else {
      const Rat e = reciprocal(p1) - reciprocal(p2) - te.t_tilde + Rat(1, 2) - reciprocal(q1);
      const double u_dbl = s2 - s1 + d * te.t_tilde.value();
      const Rat u_rat = exact ? (*s2r - *s1r + Rat(d) * te.t_tilde) : Rat(0);
      decide(u_dbl, u_rat, e, sequence_exponent(q1, q2), v);
    }
  }
  {
    EmbeddingVerdict& v = cmp.from_besov;
    v.direction = "besov->coorbit";
    v.citation = "dyadic-vs-warped-sequence";
    const TExponents te = t_exponents(p2, p1, q2, q1);
    v.t = te.t;
    v.t_tilde = te.t_tilde;
    if (!(p2 <= p1)) {
      v.relation = Relation::fails;
      v.membership = Membership::infinite;
      v.note = "needs p2 <= p1";
    } else {
      const Rat e = reciprocal(p2) - reciprocal(p1) - te.t + reciprocal(q1) - Rat(1, 2);
      const double u_dbl = s1 - s2 + d * te.t.value();
      const Rat u_rat = exact ? (*s1r - *s2r + Rat(d) * te.t) : Rat(0);
      decide(u_dbl, u_rat, e, sequence_exponent(q2, q1), v);
    }
  }
  return cmp;
}

// --------------------------------------------------------- identifications

SpaceDescriptor identify_alpha_modulation(double alpha, double s, const XR& p, const XR& q,
                                          int d) {
  if (!(alpha < 1))
    throw invalid_parameter("identify_alpha_modulation: needs alpha < 1 (the power-law "
                            "covering construction breaks down at alpha = 1)");
  const double gamma = s - d * alpha * (reciprocal(q).value() - 0.5);
  const std::string map_id = "alpha:" + fmt(alpha);
  auto kappa = [gamma](const Vec& xi) { return std::pow(1.0 + xi.norm(), gamma); };
  return warped_space(map_id, kappa, "(1+|xi|)^" + fmt(gamma), p, q, d);
}

SpaceDescriptor identify_mixed_smoothness(const std::vector<double>& s, const XR& p,
                                          const XR& q) {
  if (s.empty()) throw invalid_parameter("identify_mixed_smoothness: empty smoothness vector");
  const int d = int(s.size());
  std::vector<double> exps(s.size());
  const double rq = reciprocal(q).value();
  std::string label = "prod";
  std::string map_id = "tensor:";
  for (size_t i = 0; i < s.size(); ++i) {
    exps[i] = s[i] + 0.5 - rq;
    label += "(1+|xi_" + std::to_string(i + 1) + "|)^" + fmt(exps[i]);
    map_id += i ? ",ln" : "ln";
  }
  auto kappa = [exps](const Vec& xi) {
    double v = 1;
    for (size_t i = 0; i < exps.size(); ++i) v *= std::pow(1.0 + std::abs(xi[long(i)]), exps[i]);
    return v;
  };
  return warped_space(map_id, kappa, label, p, q, d);
}

// -------------------------------------------------------------- summability

SummabilityReport mixed_weight_summability(int N, const XR& p, int d, long window) {
  if (d < 1 || window < 4) throw invalid_parameter("mixed_weight_summability: bad window");
  if (d * std::log2(double(window + 1)) > 21)
    throw invalid_parameter("mixed_weight_summability: window too large for this dimension");
  SummabilityReport rep;
  rep.condition_ok = Rat(N) > Rat(d) * reciprocal(p);
  const double rp = reciprocal(p).value();

  std::vector<double> shell(size_t(window) + 1, 0.0);
  const std::vector<long> lo(size_t(d), 0), hi(size_t(d), window);
  for_each_lattice(lo, hi, [&](const Index& l) {
    long linf = 0, l1 = 0;
    double q2sum = 0;
    for (long c : l) {
      linf = std::max(linf, c);
      l1 += c;
      if (c > 1) q2sum += std::exp2(2.0 * double(c - 2));
    }
    shell[size_t(linf)] +=
        std::exp2(double(l1) * rp) * std::pow(1.0 + std::sqrt(q2sum), -double(N));
  });
  for (double s : shell) rep.partial_sum += s;
  const double last = shell[size_t(window)], prev = shell[size_t(window) - 1];
  rep.shell_ratio = prev > 0 ? last / prev : 0;
  if (rep.condition_ok && rep.shell_ratio < 0.999 && rep.shell_ratio > 0) {
    rep.tail_bound = last * rep.shell_ratio / (1.0 - rep.shell_ratio);
    rep.tail_ratio = rep.tail_bound / rep.partial_sum;
    rep.verdict = Membership::finite;
  } else if (!rep.condition_ok) {
    // along the diagonal l = (m,...,m) the terms scale like 2^{m(d/p - N)}
    // with polynomial shell counts, which cannot be summable
    rep.tail_bound = std::numeric_limits<double>::infinity();
    rep.tail_ratio = std::numeric_limits<double>::infinity();
    rep.verdict = Membership::infinite;
  } else {
    rep.verdict = Membership::undetermined;
  }
  return rep;
}

// ----------------------------------------------------------------- chains

SandwichChain besov_alpha_sandwich(double alpha, double s, const XR& p, const XR& q, int d,
                                   double eps) {
  if (!(eps > 0)) throw invalid_parameter("besov_alpha_sandwich: eps must be positive");
  if (!(alpha < 1)) throw invalid_parameter("besov_alpha_sandwich: needs alpha < 1");
  SandwichChain ch;
  const TExponents te = t_exponents(p, p, q, q);
  ch.t = te.t;
  ch.t_tilde = te.t_tilde;
  ch.T = te.t.value() * d * (1.0 - alpha);
  ch.T_tilde = te.t_tilde.value() * d * (1.0 - alpha);
  ch.besov_chain_equal = (d == 1);
  ch.citation = "two-sided-shift-sandwich";

  const auto ident_kappa = [&](double sv) {
    const double g = besov_identification_exponent(sv, q, d);
    return warped_space("ln", [g](const Vec& xi) { return std::pow(1.0 + xi.norm(), g); },
                        "(1+|xi|)^" + fmt(g), p, q, d);
  };
  ch.besov_lower = ident_kappa(s + eps);
  ch.besov_mid = besov_space(s, p, q, d);
  ch.besov_upper = ident_kappa(s - eps);

  const double ge = besov_identification_exponent(s, q, d);
  const double le = (1 - d) * (0.5 - reciprocal(q).value());
  auto kappa_log = [ge, le](const Vec& xi) {
    const double r = xi.norm();
    return std::pow(1.0 + r, ge) * std::pow(1.0 + std::log1p(r), le);
  };
  ch.alpha_lower = alpha_modulation_space(alpha, s + ch.T_tilde, p, q, d);
  ch.alpha_mid = warped_space(
      "ln", kappa_log, "(1+|xi|)^" + fmt(ge) + "*(1+log(1+|xi|))^" + fmt(le), p, q, d);
  ch.alpha_upper = alpha_modulation_space(alpha, s - ch.T, p, q, d);
  return ch;
}

}  // namespace warptf
