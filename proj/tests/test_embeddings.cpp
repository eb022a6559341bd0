#include <doctest.h>

#include <cmath>
#include <vector>

#include "warptf/catalog.hpp"
#include "warptf/embeddings.hpp"

using namespace warptf;

namespace {

const XR x1{1}, x2{2}, x3{3};
const XR xinf = XR::infinity();

AsymptoticSequence closed(long long an, long long ad, long long bn, long long bd) {
  return power_log_sequence(Rat(an, ad), Rat(bn, bd));
}

}  // namespace

TEST_CASE("t exponents: hand-evaluated grid") {
  auto te = t_exponents(x2, x2, x2, x2);
  CHECK(te.t == Rat(0));
  CHECK(te.t_tilde == Rat(0));

  te = t_exponents(x2, x2, x1, x2);  // p2=2, q1=1
  CHECK(te.t_tilde == Rat(0));

  te = t_exponents(x1, x2, x2, x1);  // p1=1, q2=1
  CHECK(te.t == Rat(1));

  te = t_exponents(x1, x1, xinf, xinf);
  CHECK(te.t == Rat(0));
  CHECK(te.t_tilde == Rat(1));

  te = t_exponents(xinf, xinf, x1, x1);
  CHECK(te.t == Rat(1));
  CHECK(te.t_tilde == Rat(0));

  te = t_exponents(x3, x3, x2, x2);
  CHECK(te.t == Rat(1, 6));
  CHECK(te.t_tilde == Rat(1, 6));
}

TEST_CASE("sequence exponent q2*(q1/q2)'") {
  CHECK(sequence_exponent(x2, x2) == xinf);
  CHECK(sequence_exponent(x1, x2) == xinf);      // q1 <= q2
  CHECK(sequence_exponent(x2, x1) == XR(Rat(2)));
  CHECK(sequence_exponent(x3, x2) == XR(Rat(6)));
  CHECK(sequence_exponent(xinf, x2) == XR(Rat(2)));
}

TEST_CASE("membership of power-log sequences: exact rules") {
  CHECK(ellq_membership(closed(-1, 1, 0, 1), x1) == Membership::finite);
  CHECK(ellq_membership(closed(0, 1, 0, 1), xinf) == Membership::finite);
  CHECK(ellq_membership(closed(0, 1, 1, 2), xinf) == Membership::infinite);
  CHECK(ellq_membership(closed(0, 1, -3, 4), x2) == Membership::finite);    // b*s = -3/2
  CHECK(ellq_membership(closed(0, 1, -1, 2), x2) == Membership::infinite);  // b*s = -1 boundary
  CHECK(ellq_membership(closed(0, 1, -1, 1), x1) == Membership::infinite);
  CHECK(ellq_membership(closed(1, 4, -5, 1), x2) == Membership::infinite);
  CHECK_THROWS_AS(ellq_membership(closed(0, 1, 0, 1), XR(Rat(1, 2))), invalid_parameter);
}

TEST_CASE("membership: numeric mode agrees with the exact rule off the boundary") {
  // 50 power-log sequences sampled from their own closed forms; the regression
  // must reproduce the exact verdict whenever |a| >= 0.05 or |b*s + 1| >= 0.2.
  int compared = 0;
  for (long long an : {-2LL, -1LL, 0LL, 1LL, 2LL}) {
    for (long long bn : {-4LL, -3LL, -1LL, 0LL, 2LL}) {
      const AsymptoticSequence exact = closed(an, 2, bn, 2);
      std::vector<double> vals(41);
      for (int j = 0; j <= 40; ++j)
        vals[size_t(j)] = std::exp2(exact.a.value() * j) * std::pow(1.0 + j, exact.b.value());
      const AsymptoticSequence sampled = sampled_sequence(vals, 0);
      for (const XR& s : {x2, xinf}) {
        if (an == 0) {
          if (s.finite() && std::abs(exact.b.value() * s.value() + 1.0) < 0.2) continue;
          if (!s.finite() && bn == 0) continue;  // sup boundary: exact-only call
        }
        CHECK(ellq_membership(sampled, s) == ellq_membership(exact, s));
        ++compared;
      }
    }
  }
  CHECK(compared >= 40);
}

TEST_CASE("same-covering embedding: identity weights embed with unit sequence") {
  const AsymptoticSequence u = closed(1, 1, 0, 1);
  const EmbeddingVerdict v = embed_same_covering(u, u, closed(0, 1, 0, 1), x2, x2, x2, x2);
  CHECK(v.relation == Relation::embeds);
  CHECK(v.sequence.closed_form);
  CHECK(v.sequence.a == Rat(0));
  CHECK(v.sequence.b == Rat(0));
}

TEST_CASE("same-covering embedding: polynomial shell boundary") {
  // Folded shells in d=2 with q1=2 > q2=1 give E = 2. The weight surplus
  // (1+j)^{(d+eps)/E} against shell counts (1+j)^{(d-1)/E} embeds exactly
  // when eps > 0 and fails at eps = 0.
  const AsymptoticSequence shells = closed(0, 1, 1, 2);
  const AsymptoticSequence detT = closed(0, 1, 0, 1);
  const EmbeddingVerdict good =
      embed_same_covering(closed(0, 1, 5, 4), shells, detT, x2, x2, x2, x1);
  CHECK(good.relation == Relation::embeds);
  CHECK(good.sequence.b == Rat(-3, 4));
  const EmbeddingVerdict edge =
      embed_same_covering(closed(0, 1, 1, 1), shells, detT, x2, x2, x2, x1);
  CHECK(edge.relation == Relation::fails);
  CHECK(edge.sequence.b == Rat(-1, 2));
}

TEST_CASE("same-covering embedding: p must not decrease; detT enters at 1/p1-1/p2") {
  const AsymptoticSequence one = closed(0, 1, 0, 1);
  CHECK(embed_same_covering(one, one, one, x2, x1, x2, x2).relation == Relation::fails);

  const EmbeddingVerdict shrink =
      embed_same_covering(one, one, closed(0, 1, -1, 1), x1, x2, x2, x2);
  CHECK(shrink.sequence.b == Rat(-1, 2));
  CHECK(shrink.relation == Relation::embeds);

  const EmbeddingVerdict grow =
      embed_same_covering(one, one, closed(0, 1, 1, 1), x1, x2, x2, x2);
  CHECK(grow.sequence.b == Rat(1, 2));
  CHECK(grow.relation == Relation::fails);
}

TEST_CASE("equality check: identical and slow-start variants are equal") {
  const WarpingMap m = catalog_map("ln", 1);
  const EqualityReport same = equality_check(m, m);
  CHECK(same.relation == Relation::equal);
  CHECK(same.sup_12 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(same.sup_21 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(same.radial_shortcut);

  const auto base = family_component("ln");
  const WarpingMap a = radial_map(slow_start(base, SlowStartParams{1.0, 0}), 1, 10.0);
  const WarpingMap b = radial_map(slow_start(base, SlowStartParams{0.5, 0}), 1, 10.0);
  const EqualityReport rep = equality_check(a, b);
  CHECK(rep.relation == Relation::equal);
  CHECK(rep.radial_shortcut);
  CHECK(rep.sup_12 >= 1.0);
  CHECK(rep.sup_21 >= 1.0);
  CHECK(rep.sup_12 < 10.0);
  CHECK(rep.sup_21 < 10.0);
}

TEST_CASE("equality check: log vs square-root scale is one-sidedly subordinate") {
  const WarpingMap lnm = catalog_map("ln", 1);
  const WarpingMap alm = catalog_map("alpha:0.5", 1);
  const EqualityReport rep = equality_check(lnm, alm);
  CHECK(rep.relation == Relation::fails);
  CHECK(rep.radial_shortcut);
  CHECK_FALSE(rep.bounded_12);  // sqrt-scale derivative grows against the log scale
  CHECK(rep.bounded_21);
}

TEST_CASE("equality check: non-radial grid path reaches the same verdict on itself") {
  const WarpingMap t = catalog_map("tensor:ln,ln", 2);
  const EqualityReport rep = equality_check(t, t, GridSpec{-6, 6, 7});
  CHECK(rep.relation == Relation::equal);
  CHECK_FALSE(rep.radial_shortcut);
  CHECK(rep.sup_12 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("radial sandwich: equal profiles and p=q=2 collapse the weights") {
  const auto rho_ln = catalog_component("ln");
  const auto rho_al = catalog_component("alpha:0.5");
  auto kappa = [](const Vec& xi) { return 1.0 + xi.norm(); };

  SandwichSpace sw = radial_embedding(rho_ln, rho_ln, kappa, "1+|xi|", x2, x2, 1);
  CHECK(sw.hypotheses_ok);
  CHECK(sw.t == Rat(0));
  CHECK(sw.t_tilde == Rat(0));
  for (double x : {0.3, 2.0, 7.5})
    CHECK(sw.lower.kappa(vec1(x)) == doctest::Approx(sw.upper.kappa(vec1(x))).epsilon(1e-12));

  // different profiles, exponent 1/q - 1/2 -+ t still zero at p = q = 2
  sw = radial_embedding(rho_al, rho_ln, kappa, "1+|xi|", x2, x2, 1);
  CHECK(sw.hypotheses_ok);
  CHECK(sw.deriv_ratio_sup < 10.0);
  for (double x : {0.3, 2.0, 7.5}) {
    CHECK(sw.lower.kappa(vec1(x)) == doctest::Approx(kappa(vec1(x))).epsilon(1e-12));
    CHECK(sw.upper.kappa(vec1(x)) == doctest::Approx(kappa(vec1(x))).epsilon(1e-12));
  }
}

TEST_CASE("radial sandwich: p=1, q=inf shifts by the weight-ratio square root") {
  const auto rho_ln = catalog_component("ln");
  const auto rho_al = catalog_component("alpha:0.5");
  const SandwichSpace sw = radial_embedding(
      rho_al, rho_ln, [](const Vec&) { return 1.0; }, "1", x1, xinf, 1);
  CHECK(sw.t == Rat(0));
  CHECK(sw.t_tilde == Rat(1));
  // w2/w1 at |xi| = 8: rho_al'(8) / rho_ln'(8) = (1/6) / (1/9) = 3/2
  CHECK(sw.lower.kappa(vec1(8.0)) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
  CHECK(sw.upper.kappa(vec1(8.0)) == doctest::Approx(1.0 / std::sqrt(1.5)).epsilon(1e-9));
}

TEST_CASE("radial sandwich: reversed domination throws") {
  CHECK_THROWS_AS(radial_embedding(catalog_component("ln"), catalog_component("alpha:0.5"),
                                   [](const Vec&) { return 1.0; }, "1", x2, x2, 1),
                  not_converged);
}

TEST_CASE("gamma sequence closed forms") {
  const auto rho_ln = catalog_component("ln");
  const auto rho_al = catalog_component("alpha:0.5");
  AsymptoticSequence g = gamma_sequence(*rho_ln, 2);
  CHECK(g.closed_form);
  CHECK(g.a == Rat(2));
  CHECK(g.b == Rat(-1));
  g = gamma_sequence(*rho_ln, 1);
  CHECK(g.a == Rat(1));
  CHECK(g.b == Rat(0));
  g = gamma_sequence(*rho_al, 3);
  CHECK(g.closed_form);
  CHECK(g.a == Rat(3, 2));
  CHECK(g.b == Rat(0));
}

TEST_CASE("identification exponent for dyadic comparisons") {
  CHECK(besov_identification_exponent(0.7, x1, 2) == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(besov_identification_exponent(0.7, x2, 5) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(besov_identification_exponent(0.0, xinf, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dyadic comparison: one dimension is an equality at the identification weight") {
  const auto rho = catalog_component("ln");
  const double s = 0.7;
  for (const XR& q : {x1, x2, xinf}) {
    const double s1 = besov_identification_exponent(s, q, 1);
    const BesovComparison cmp = besov_vs_warped(rho, s1, s, x2, x2, q, q, 1);
    CHECK(cmp.into_besov.relation == Relation::embeds);
    CHECK(cmp.from_besov.relation == Relation::embeds);
    // tail ratio is 1 - e^{-gamma} < 1; the slow-start seam at gamma = 1 dominates
    CHECK(cmp.curvature_sup > 1.0);
    CHECK(cmp.curvature_sup <= 12.0);
  }
}

TEST_CASE("dyadic comparison: d=2 splits by q at p=2 and fails for p=3") {
  const auto rho = catalog_component("ln");
  const double s = 0.4;

  const double s1q1 = besov_identification_exponent(s, x1, 2);
  const BesovComparison q1 = besov_vs_warped(rho, s1q1, s, x2, x2, x1, x1, 2);
  CHECK(q1.from_besov.relation == Relation::embeds);
  CHECK(q1.into_besov.relation == Relation::fails);

  const double s1q2 = besov_identification_exponent(s, x2, 2);
  const BesovComparison q2 = besov_vs_warped(rho, s1q2, s, x2, x2, x2, x2, 2);
  CHECK(q2.from_besov.relation == Relation::embeds);
  CHECK(q2.into_besov.relation == Relation::embeds);

  const double s1qi = besov_identification_exponent(s, xinf, 2);
  const BesovComparison qi = besov_vs_warped(rho, s1qi, s, x2, x2, xinf, xinf, 2);
  CHECK(qi.from_besov.relation == Relation::fails);
  CHECK(qi.into_besov.relation == Relation::embeds);

  const double s1p3 = besov_identification_exponent(s, x2, 2);
  const BesovComparison p3 = besov_vs_warped(rho, s1p3, s, x3, x3, x2, x2, 2);
  CHECK(p3.from_besov.relation == Relation::fails);
  CHECK(p3.into_besov.relation == Relation::fails);
}

TEST_CASE("alpha-modulation identification") {
  SpaceDescriptor sp = identify_alpha_modulation(0.0, 1.2, x2, x2, 1);
  CHECK(sp.kind == SpaceKind::warped);
  CHECK(sp.kappa(vec1(5.0)) == doctest::Approx(std::pow(6.0, 1.2)).epsilon(1e-10));

  // gamma = s - d alpha (1/q - 1/2) = 1 - 2*(1/2)*(1 - 1/2) = 1/2
  sp = identify_alpha_modulation(0.5, 1.0, x2, x1, 2);
  CHECK(sp.map_id == "alpha:0.5");
  Vec xi(2);
  xi << 3.0, 4.0;
  CHECK(sp.kappa(xi) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));

  CHECK_THROWS_AS(identify_alpha_modulation(1.2, 1.0, x2, x2, 1), invalid_parameter);
  CHECK_THROWS_AS(identify_alpha_modulation(1.0, 1.0, x2, x2, 1), invalid_parameter);
  // the descriptor constructor routes the dyadic boundary case instead
  CHECK(alpha_modulation_space(1.0, 0.3, x2, x2, 2).kind == SpaceKind::besov);
  CHECK_THROWS_AS(alpha_modulation_space(2.0, 0.3, x2, x2, 2), invalid_parameter);
}

TEST_CASE("mixed-smoothness identification weight") {
  // d = 1 reduces to the dyadic identification weight
  SpaceDescriptor sp = identify_mixed_smoothness({1.0}, x2, x1);
  CHECK(sp.map_id == "tensor:ln");
  CHECK(sp.kappa(vec1(3.0)) == doctest::Approx(std::pow(4.0, 0.5)).epsilon(1e-10));

  Vec xi(2);
  xi << 1.0, 3.0;
  // q = 2: plain product of (1+|xi_i|)^{s_i}
  sp = identify_mixed_smoothness({1.0, 2.0}, x2, x2);
  CHECK(sp.d == 2);
  CHECK(sp.map_id == "tensor:ln,ln");
  CHECK(sp.kappa(xi) == doctest::Approx(32.0).epsilon(1e-10));
  // q = 1: exponents s_i - 1/2
  sp = identify_mixed_smoothness({1.0, 2.0}, x2, x1);
  CHECK(sp.kappa(xi) == doctest::Approx(std::sqrt(2.0) * 8.0).epsilon(1e-10));
  // q = inf: exponents s_i + 1/2
  sp = identify_mixed_smoothness({1.0, 2.0}, x2, xinf);
  CHECK(sp.kappa(xi) == doctest::Approx(std::pow(2.0, 1.5) * 32.0).epsilon(1e-10));
}

TEST_CASE("mixed weight summability") {
  const SummabilityReport ok = mixed_weight_summability(2, x2, 2);
  CHECK(ok.condition_ok);
  CHECK(ok.verdict == Membership::finite);
  CHECK(ok.tail_ratio < 0.01);
  CHECK(ok.partial_sum > 0);

  const SummabilityReport bad = mixed_weight_summability(0, x1, 1);
  CHECK_FALSE(bad.condition_ok);
  CHECK(bad.verdict == Membership::infinite);

  const SummabilityReport pinf = mixed_weight_summability(1, xinf, 2);
  CHECK(pinf.condition_ok);
  CHECK(pinf.verdict == Membership::finite);
}

TEST_CASE("two-sided sandwich chains") {
  const SandwichChain d1 = besov_alpha_sandwich(0.5, 1.0, x2, x2, 1, 0.25);
  CHECK(d1.besov_chain_equal);
  CHECK(d1.T == doctest::Approx(0.0));
  CHECK(d1.T_tilde == doctest::Approx(0.0));  // p = q = 2
  CHECK(d1.besov_lower.kind == SpaceKind::warped);
  CHECK(d1.besov_mid.kind == SpaceKind::besov);

  // p=2, q=1, d=2: t = 1/2, t~ = 0, T = t d (1-alpha) = 1/2
  const SandwichChain ch = besov_alpha_sandwich(0.5, 1.0, x2, x1, 2, 0.25);
  CHECK_FALSE(ch.besov_chain_equal);
  CHECK(ch.t == Rat(1, 2));
  CHECK(ch.T == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ch.alpha_lower.s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ch.alpha_upper.s == doctest::Approx(0.5).epsilon(1e-12));

  // p=1, q=inf, alpha=1/2, d=2: t~ = 1, T~ = 1
  const SandwichChain w = besov_alpha_sandwich(0.5, 1.0, x1, xinf, 2, 0.25);
  CHECK(w.t_tilde == Rat(1));
  CHECK(w.T_tilde == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.alpha_lower.s == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(besov_alpha_sandwich(0.5, 1.0, x2, x2, 1, 0.0), invalid_parameter);
}
