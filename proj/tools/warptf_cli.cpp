// Command-line front end: builds configurations from JSON files, runs the
// analysis/verification pipelines, and writes machine-readable reports.
//
// Exit codes: 0 pass, 2 config error, 3 verification failure, 4 numerical
// non-convergence. Every report embeds the resolved configuration, so a run
// is reproducible from its own output.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "warptf/bapu.hpp"
#include "warptf/catalog.hpp"
#include "warptf/covering.hpp"
#include "warptf/decomp.hpp"
#include "warptf/embeddings.hpp"
#include "warptf/signal_io.hpp"
#include "warptf/transform.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace warptf;

namespace {

struct Cli {
  std::string config_path;
  std::string out_dir = ".";
  uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open config file: " + path);
  return json::parse(in);
}

XR xr_from_json(const json& v) {
  if (v.is_string()) return parse_exponent(v.get<std::string>());
  if (v.is_number_integer()) return XR(Rat(v.get<long long>()));
  if (v.is_number_float()) {
    if (auto r = try_rationalize(v.get<double>(), 1000000)) return XR(*r);
    throw invalid_parameter("exponent is not a small rational: " + v.dump());
  }
  throw invalid_parameter("cannot parse exponent: " + v.dump());
}

XR xr_field(const json& cfg, const std::string& key, const XR& fallback) {
  return cfg.contains(key) ? xr_from_json(cfg.at(key)) : fallback;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

void emit_report(const Cli& cli, const std::string& command, const json& resolved,
                 json report) {
  fs::create_directories(cli.out_dir);
  report["command"] = command;
  report["config"] = resolved;
  write_text(fs::path(cli.out_dir) / (command + ".json"), report.dump(2) + "\n");
}

json verdict_json(const EmbeddingVerdict& v) {
  json seq;
  if (v.sequence.closed_form) {
    seq = {{"a", v.sequence.a.value()}, {"b", v.sequence.b.value()}, {"exact", true}};
  } else if (v.sequence.samples.size() >= 6) {
    const SequenceFit fit = fit_power_log(v.sequence.samples, v.sequence.j0);
    seq = {{"a", fit.a}, {"b", fit.b}, {"exact", false}};
  } else {
    seq = {{"a", nullptr}, {"b", nullptr}, {"exact", false}};
  }
  return json{{"verdict", relation_str(v.relation)}, {"direction", v.direction},
              {"t", v.t.value()},                    {"t_tilde", v.t_tilde.value()},
              {"sequence", seq},                     {"membership", membership_str(v.membership)},
              {"citation", v.citation},              {"note", v.note}};
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ",";
    row += cells[i];
  }
  return row + "\n";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string index_cell(const Index& k) {  // space-separated, CSV-safe
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? " " : "") + std::to_string(k[i]);
  return s;
}

// ------------------------------------------------------------ covering-report

int run_covering_report(const Cli& cli, const json& cfg) {
  const std::string id = cfg.at("map").get<std::string>();
  const int d = cfg.value("d", 1);
  const double delta = cfg.value("delta", 1.0);
  const double r = cfg.value("r", std::sqrt(double(d)) / 2 + 0.1);
  const long window_radius = cfg.value("window_radius", 3L);
  const int nmax = cfg.value("growth_nmax", 3);
  const long besov_jmax = cfg.value("besov_jmax", 12L);

  const WarpingMap map = catalog_map(id, d);
  const FrequencyCovering cov = induced_covering(map, delta, r);
  const std::vector<Index> window = covering_window(cov, window_radius);

  std::string csv = "k,center,measure,neighbors\n";
  size_t nb_min = SIZE_MAX, nb_max = 0;
  for (const Index& k : window) {
    const size_t nb = neighbors(cov, k).size();
    nb_min = std::min(nb_min, nb);
    nb_max = std::max(nb_max, nb);
    const Vec c = element_center(cov, k);
    std::string cs;
    for (int i = 0; i < c.size(); ++i) cs += (i ? " " : "") + num(c[i]);
    csv += csv_row({index_cell(k), cs, num(element_measure(cov, k)), std::to_string(nb)});
  }
  fs::create_directories(cli.out_dir);
  write_text(fs::path(cli.out_dir) / "covering_elements.csv", csv);

  const TightnessReport tight = tightness_radius(cov, std::min(window_radius, 3L), 64, cli.seed);
  const NeighborGrowth growth = neighbor_growth_diagnostic(cov, Index(size_t(d), 0), nmax);

  json report{{"elements", window.size()},
              {"neighbor_count", {{"min", nb_min}, {"max", nb_max}}},
              {"tightness",
               {{"theta0", tight.theta0},
                {"theta", tight.theta},
                {"inner_radius", tight.inner_radius},
                {"max_violation", tight.max_violation},
                {"pass", tight.pass}}},
              {"neighbor_growth", growth.counts}};

  bool pass = tight.pass;
  if (cfg.contains("alpha_verify")) {
    const double alpha = cfg.at("alpha_verify").get<double>();
    const AlphaReport ar = alpha_verify(cov, alpha, cfg.value("alpha_kmax", 50L));
    report["alpha"] = {{"alpha", alpha},       {"rejected", ar.rejected},
                       {"rule", ar.rule},      {"ratio_min", ar.ratio_min},
                       {"ratio_max", ar.ratio_max}, {"band", ar.band()},
                       {"pass", ar.pass}};
    pass = pass && ar.pass;
  }
  if (map.radial) {
    const FrequencyCovering dyadic = besov_covering(d);
    std::vector<Index> jwin;
    for (long j = 0; j <= besov_jmax; ++j) jwin.push_back({j});
    const CrossReport cross = cross_intersections(cov, dyadic, jwin);
    json counts = json::array();
    size_t cmax = 0;
    for (const auto& row : cross.rows) {
      counts.push_back(row.count);
      cmax = std::max(cmax, row.count);
    }
    report["dyadic_cross"] = {{"counts", counts}, {"max", cmax}};
  }
  report["pass"] = pass;
  json resolved{{"map", id},       {"d", d},
                {"delta", delta},  {"r", r},
                {"window_radius", window_radius}, {"growth_nmax", nmax},
                {"besov_jmax", besov_jmax},       {"seed", cli.seed}};
  if (cfg.contains("alpha_verify")) resolved["alpha_verify"] = cfg.at("alpha_verify");
  emit_report(cli, "covering-report", resolved, report);
  return pass ? 0 : 3;
}

// --------------------------------------------------------------- embed-check

struct ParsedSpace {
  SpaceDescriptor desc;
  double power_exponent = 0;  // radial power of the warped weight
  bool has_power = false;
};

ParsedSpace parse_space(const json& v) {
  ParsedSpace ps;
  const std::string kind = v.at("kind").get<std::string>();
  const XR p = xr_field(v, "p", XR(Rat(2)));
  const XR q = xr_field(v, "q", XR(Rat(2)));
  const int d = v.value("d", 1);
  if (kind == "besov") {
    ps.desc = besov_space(v.at("s").get<double>(), p, q, d);
  } else if (kind == "alpha_mod") {
    ps.desc = alpha_modulation_space(v.at("alpha").get<double>(), v.at("s").get<double>(), p, q,
                                     d);
  } else if (kind == "mixed") {
    ps.desc = mixed_smoothness_space(v.at("s").get<std::vector<double>>(), p, q);
  } else if (kind == "warped") {
    const std::string map_id = v.at("map").get<std::string>();
    const json& kp = v.at("kappa");
    const std::string kt = kp.at("type").get<std::string>();
    double g = 0;
    if (kt == "power") {
      g = kp.at("exponent").get<double>();
    } else if (kt == "besov-ident") {
      g = besov_identification_exponent(kp.at("s").get<double>(), q, d);
    } else {
      throw invalid_parameter("unknown kappa type: " + kt);
    }
    ps.desc = warped_space(
        map_id, [g](const Vec& xi) { return std::pow(1.0 + xi.norm(), g); },
        "(1+|xi|)^" + num(g), p, q, d);
    ps.power_exponent = g;
    ps.has_power = true;
  } else {
    throw invalid_parameter("unknown space kind: " + kind);
  }
  return ps;
}

// ln-warped coorbit space with radial power weight vs dyadic-decomposition
// space: decided through the dyadic-scale sequences.
int run_embed_check(const Cli& cli, const json& cfg) {
  const json& ja = cfg.at("space_A");
  const json& jb = cfg.at("space_B");
  const ParsedSpace A = parse_space(ja);
  const ParsedSpace B = parse_space(jb);
  if (A.desc.d != B.desc.d) throw invalid_parameter("embed-check: dimension mismatch");
  const int d = A.desc.d;

  EmbeddingVerdict ab, ba;
  if ((A.desc.kind == SpaceKind::warped && B.desc.kind == SpaceKind::besov) ||
      (A.desc.kind == SpaceKind::besov && B.desc.kind == SpaceKind::warped)) {
    const ParsedSpace& w = A.desc.kind == SpaceKind::warped ? A : B;
    const ParsedSpace& b = A.desc.kind == SpaceKind::warped ? B : A;
    if (!w.has_power) throw invalid_parameter("embed-check: warped weight must be a power");
    if (w.desc.map_id != "ln")
      throw invalid_parameter("embed-check: dyadic comparison supports the ln map");
    const auto comp = catalog_component("ln");
    const BesovComparison cmp =
        besov_vs_warped(comp, w.power_exponent, b.desc.s, w.desc.p, b.desc.p, w.desc.q,
                        b.desc.q, d);
    if (A.desc.kind == SpaceKind::warped) {
      ab = cmp.into_besov;
      ba = cmp.from_besov;
    } else {
      ab = cmp.from_besov;
      ba = cmp.into_besov;
    }
  } else if (A.desc.kind == SpaceKind::warped && B.desc.kind == SpaceKind::warped &&
             A.desc.map_id == B.desc.map_id && A.has_power && B.has_power) {
    // Same covering, power weights: fold the index lattice into radial shells
    // m = |k| with multiplicity ~ m^{d-1}; the multiplicity enters the l^E
    // aggregation as a factor m^{(d-1)/E} on the shell representative.
    const auto comp = catalog_component(A.desc.map_id);
    const double delta = cfg.value("delta", 1.0);
    const int mmax = cfg.value("shells", 40);
    const auto shell_sequences = [&](const ParsedSpace& from, const ParsedSpace& to,
                                     std::vector<double>& u, std::vector<double>& v,
                                     std::vector<double>& det) {
      const XR E = sequence_exponent(from.desc.q, to.desc.q);
      const double rE = E.finite() ? 1.0 / E.value() : 0.0;
      u.resize(size_t(mmax));
      v.resize(size_t(mmax));
      det.resize(size_t(mmax));
      for (int m = 1; m <= mmax; ++m) {
        const double t = delta * m;
        const double rad = comp->rho_inv(t);
        const double w = comp->drho_inv(t) * std::pow(comp->tilde_inv(t), d - 1);
        u[size_t(m - 1)] = std::pow(1.0 + rad, from.power_exponent);
        v[size_t(m - 1)] = std::pow(1.0 + rad, to.power_exponent) *
                           std::pow(double(m), double(d - 1) * rE);
        det[size_t(m - 1)] = w;
      }
    };
    std::vector<double> u, v, det;
    shell_sequences(A, B, u, v, det);
    ab = embed_same_covering(sampled_sequence(u, 1), sampled_sequence(v, 1),
                             sampled_sequence(det, 1), A.desc.p, B.desc.p, A.desc.q, B.desc.q);
    shell_sequences(B, A, u, v, det);
    ba = embed_same_covering(sampled_sequence(u, 1), sampled_sequence(v, 1),
                             sampled_sequence(det, 1), B.desc.p, A.desc.p, B.desc.q, A.desc.q);
  } else {
    throw invalid_parameter("embed-check: unsupported space pair");
  }

  std::string verdict = "none";
  const bool fwd = ab.relation == Relation::embeds;
  const bool rev = ba.relation == Relation::embeds;
  if (fwd && rev) verdict = "equal";
  else if (fwd) verdict = "A->B";
  else if (rev) verdict = "B->A";
  if (ab.relation == Relation::undetermined || ba.relation == Relation::undetermined)
    verdict = "undetermined";

  json report = verdict_json(ab);
  report["space_A"] = A.desc.str();
  report["space_B"] = B.desc.str();
  report["verdict"] = verdict;
  report["reverse"] = verdict_json(ba);
  json resolved{{"space_A", ja}, {"space_B", jb}, {"seed", cli.seed}};
  emit_report(cli, "embed-check", resolved, report);
  return verdict == "undetermined" ? 4 : 0;
}

// ----------------------------------------------------------------- transform

SampledSignal signal_from_config(const json& scfg, uint64_t seed) {
  if (scfg.contains("file")) return read_signal(scfg.at("file").get<std::string>());
  const std::string kind = scfg.value("kind", "random-bandlimited");
  const int d = scfg.value("d", 1);
  const int n = scfg.value("n", 64);
  const double extent = scfg.value("extent", 16.0);
  std::vector<AxisGrid> freq(size_t(d), AxisGrid{n, extent});
  if (kind == "zero") {
    SampledSignal f;
    f.freq = freq;
    f.fhat.assign(grid_size(freq), cd(0, 0));
    return f;
  }
  if (kind == "random-bandlimited")
    return random_bandlimited(freq, scfg.value("band", extent / 4), seed);
  if (kind == "gaussian") {
    const double sigma = scfg.value("sigma", 1.0);
    SampledSignal f;
    f.freq = freq;
    f.fhat.resize(grid_size(freq));
    for (size_t flat = 0; flat < f.fhat.size(); ++flat) {
      const double s = grid_point(freq, flat).squaredNorm() / (2 * sigma * sigma);
      f.fhat[flat] = cd(std::exp(-s), 0);
    }
    return f;
  }
  throw invalid_parameter("unknown signal kind: " + kind);
}

int run_transform(const Cli& cli, const json& cfg) {
  const std::string id = cfg.value("map", "identity");
  const int d = cfg.value("d", 1);
  const double delta = cfg.value("delta", 0.25);
  const double tol = cfg.value("tol", 1e-3);
  const double rt_tol = cfg.value("roundtrip_tol", 1e-2);
  const bool do_rt = cfg.value("synthesize", false);
  // absolute width: the lattice quadrature error decays as delta shrinks
  // under a fixed window, not when the window shrinks with delta
  const double proto_a = cfg.value("prototype_a", 1.0);

  const WarpingMap map = catalog_map(id, d);
  const SampledSignal f = signal_from_config(cfg.value("signal", json::object()), cli.seed);
  if (f.d() != d) throw invalid_parameter("transform: signal dimension mismatch");
  if (cfg.contains("save_signal")) write_signal(cfg.at("save_signal").get<std::string>(), f);
  const Prototype proto = make_prototype(make_mollifier(proto_a), d);
  const VoiceTransform vt = analyze(f, map, proto, delta, cfg.value("pad", 1L));

  std::string csv = "k,omega,weight,l2,max\n";
  const double cell_y = grid_cell(vt.time);
  for (const auto& slice : vt.slices) {
    double e = 0, mx = 0;
    for (const cd& x : slice.values) {
      e += std::norm(x);
      mx = std::max(mx, std::abs(x));
    }
    std::string om;
    for (int i = 0; i < slice.omega.size(); ++i) om += (i ? " " : "") + num(slice.omega[i]);
    csv += csv_row({index_cell(slice.k), om, num(slice.weight), num(std::sqrt(e * cell_y)),
                    num(mx)});
  }
  fs::create_directories(cli.out_dir);
  write_text(fs::path(cli.out_dir) / "coefficients.csv", csv);

  const ParsevalReport pr = parseval_defect(f, map, proto, delta);
  bool pass = pr.defect <= tol;
  json report{{"slices", vt.slices.size()},
              {"parseval", {{"lhs", pr.lhs}, {"rhs", pr.rhs}, {"defect", pr.defect}}}};
  if (do_rt) {
    const RoundTrip rt = synthesize(vt, f);
    report["roundtrip"] = {{"rel_error", rt.rel_error}};
    pass = pass && rt.rel_error <= rt_tol;
  }
  report["pass"] = pass;
  json resolved = cfg;
  resolved["map"] = id;
  resolved["d"] = d;
  resolved["delta"] = delta;
  resolved["tol"] = tol;
  resolved["prototype_a"] = proto_a;
  resolved["seed"] = cli.seed;
  emit_report(cli, "transform", resolved, report);
  return pass ? 0 : 3;
}

// ------------------------------------------------------------------ parseval

int run_parseval(const Cli& cli, const json& cfg) {
  const std::string id = cfg.value("map", "identity");
  const int d = cfg.value("d", 1);
  const std::vector<double> deltas = cfg.value("deltas", std::vector<double>{0.5, 0.25, 0.125});
  const double tol = cfg.value("tol", 1e-3);
  const double proto_a = cfg.value("prototype_a", 1.0);

  const WarpingMap map = catalog_map(id, d);
  const SampledSignal f = signal_from_config(cfg.value("signal", json::object()), cli.seed);
  const Prototype proto = make_prototype(make_mollifier(proto_a), d);

  json rows = json::array();
  std::vector<double> defects;
  for (double delta : deltas) {
    const ParsevalReport pr = parseval_defect(f, map, proto, delta);
    defects.push_back(pr.defect);
    rows.push_back({{"delta", delta}, {"lhs", pr.lhs}, {"rhs", pr.rhs}, {"defect", pr.defect}});
  }
  bool monotone = true;
  for (size_t i = 1; i < defects.size(); ++i) monotone = monotone && defects[i] < defects[i - 1];
  const bool pass = !defects.empty() && defects.back() <= tol &&
                    (!cfg.value("require_monotone", true) || monotone);
  json report{{"sweep", rows}, {"monotone", monotone}, {"pass", pass}};
  json resolved = cfg;
  resolved["map"] = id;
  resolved["d"] = d;
  resolved["deltas"] = deltas;
  resolved["tol"] = tol;
  resolved["prototype_a"] = proto_a;
  resolved["seed"] = cli.seed;
  emit_report(cli, "parseval", resolved, report);
  return pass ? 0 : 3;
}

// -------------------------------------------------------------- alpha-verify

int run_alpha_verify(const Cli& cli, const json& cfg) {
  const std::string id = cfg.at("map").get<std::string>();
  const int d = cfg.value("d", 2);
  const double delta = cfg.value("delta", 1.0);
  const double r = cfg.value("r", std::sqrt(double(d)) / 2 + 0.25);
  const double alpha = cfg.at("alpha").get<double>();
  const long kmax = cfg.value("kmax", 50L);
  const double threshold = cfg.value("band_threshold", 10.0);

  const WarpingMap map = catalog_map(id, d);
  const FrequencyCovering cov = induced_covering(map, delta, r);
  const AlphaReport rep = alpha_verify(cov, alpha, kmax, threshold);
  json report{{"alpha", alpha},           {"rejected", rep.rejected},
              {"rule", rep.rule},         {"ratio_min", rep.ratio_min},
              {"ratio_max", rep.ratio_max}, {"band", rep.band()},
              {"shape_max", rep.shape_max}, {"pass", rep.pass}};
  json resolved{{"map", id},   {"d", d},       {"delta", delta},          {"r", r},
                {"alpha", alpha}, {"kmax", kmax}, {"band_threshold", threshold},
                {"seed", cli.seed}};
  emit_report(cli, "alpha-verify", resolved, report);
  return rep.pass ? 0 : 3;
}

// ------------------------------------------------------------- besov-compare

int run_besov_compare(const Cli& cli, const json& cfg) {
  const std::string family = cfg.value("family", "ln");
  const int d = cfg.value("d", 1);
  const XR p1 = xr_field(cfg, "p1", xr_field(cfg, "p", XR(Rat(2))));
  const XR p2 = xr_field(cfg, "p2", xr_field(cfg, "p", XR(Rat(2))));
  const XR q1 = xr_field(cfg, "q1", xr_field(cfg, "q", XR(Rat(2))));
  const XR q2 = xr_field(cfg, "q2", xr_field(cfg, "q", XR(Rat(2))));
  const double s2 = cfg.value("s2", cfg.value("s", 0.0));
  double s1;
  if (cfg.contains("s1")) {
    s1 = cfg.at("s1").get<double>();
  } else {
    // default: the weight exponent that matches the dyadic space of
    // smoothness s2 when the scales are compatible
    s1 = besov_identification_exponent(s2, q1, d);
  }

  const auto comp = catalog_component(family);
  const BesovComparison cmp = besov_vs_warped(comp, s1, s2, p1, p2, q1, q2, d);
  const std::string space_a =
      warped_space("radial:" + family,
                   [](const Vec&) { return 1.0; },
                   "(1+|xi|)^" + num(s1), p1, q1, d)
          .str();
  const std::string space_b = besov_space(s2, p2, q2, d).str();
  std::string verdict = "none";
  const bool fwd = cmp.into_besov.relation == Relation::embeds;
  const bool rev = cmp.from_besov.relation == Relation::embeds;
  if (fwd && rev) verdict = "equal";
  else if (fwd) verdict = "A->B";
  else if (rev) verdict = "B->A";
  const bool undet = cmp.into_besov.relation == Relation::undetermined ||
                     cmp.from_besov.relation == Relation::undetermined;
  if (undet) verdict = "undetermined";

  json report = verdict_json(cmp.into_besov);
  report["space_A"] = space_a;
  report["space_B"] = space_b;
  report["verdict"] = verdict;
  report["reverse"] = verdict_json(cmp.from_besov);
  report["curvature_sup"] = cmp.curvature_sup;
  json resolved{{"family", family}, {"d", d},
                {"p1", p1.str()},   {"p2", p2.str()},
                {"q1", q1.str()},   {"q2", q2.str()},
                {"s1", s1},         {"s2", s2},
                {"seed", cli.seed}};
  emit_report(cli, "besov-compare", resolved, report);
  return undet ? 4 : 0;
}

// ---------------------------------------------------------------- norm-probe

int run_norm_probe(const Cli& cli, const json& cfg) {
  const std::string id = cfg.value("map", "identity");
  const int d = cfg.value("d", 1);
  const double delta = cfg.value("delta", 0.5);
  const double r = cfg.value("r", std::sqrt(double(d)) / 2 + 0.1);
  const double band_tol = cfg.value("band_tol", 16.0);

  const WarpingMap map = catalog_map(id, d);
  DecompParams params;
  params.p = cfg.contains("p") ? xr_from_json(cfg.at("p")).value() : 2.0;
  params.q = cfg.contains("q") ? xr_from_json(cfg.at("q")).value() : 2.0;
  if (cfg.contains("kappa_s")) params.kappa = warped_power_weight(map, cfg.at("kappa_s").get<double>());

  const EquivalenceProbe probe = norm_equivalence_probe(
      map, delta, r, params, cfg.value("signals", 10), cli.seed, band_tol,
      cfg.value("grid_n", 512), cfg.value("extent", 24.0), cfg.value("band", 8.0));
  json signals = json::array();
  for (size_t i = 0; i < probe.ratios.size(); ++i) {
    signals.push_back({{"signal_id", i},
                       {"coorbit", probe.coorbit[i]},
                       {"decomposition", probe.decomposition[i]},
                       {"ratio", probe.ratios[i]}});
  }
  json report{{"signals", signals}, {"band", probe.band}, {"pass", probe.pass}};
  json resolved = cfg;
  resolved["map"] = id;
  resolved["d"] = d;
  resolved["delta"] = delta;
  resolved["r"] = r;
  resolved["band_tol"] = band_tol;
  resolved["seed"] = cli.seed;
  emit_report(cli, "norm-probe", resolved, report);
  return probe.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"warped time-frequency analysis toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", cli.config_path, "JSON configuration file")->required();
  app.add_option("--out", cli.out_dir, "output directory (default .)");
  auto* seed_opt = app.add_option("--seed", cli.seed, "seed override");
  app.add_option("--threads", cli.threads, "worker threads (modules run single-threaded)");

  const std::vector<std::pair<std::string, int (*)(const Cli&, const json&)>> commands = {
      {"covering-report", run_covering_report},
      {"embed-check", run_embed_check},
      {"transform", run_transform},
      {"parseval", run_parseval},
      {"alpha-verify", run_alpha_verify},
      {"besov-compare", run_besov_compare},
      {"norm-probe", run_norm_probe},
  };
  for (const auto& c : commands) app.add_subcommand(c.first, "");

  CLI11_PARSE(app, argc, argv);
  cli.seed_given = seed_opt->count() > 0;

  try {
    json cfg = load_config(cli.config_path);
    if (!cli.seed_given && cfg.contains("seed")) cli.seed = cfg.at("seed").get<uint64_t>();
    for (const auto& c : commands) {
      if (app.got_subcommand(c.first)) return c.second(cli, cfg);
    }
    std::cerr << "no command selected\n";
    return 2;
  } catch (const invalid_parameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const not_converged& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}
