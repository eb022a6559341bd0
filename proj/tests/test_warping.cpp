#include <doctest.h>

#include <cmath>

#include "warptf/catalog.hpp"
#include "warptf/warping.hpp"

using namespace warptf;

namespace {

// Monotone cubic stretch tau = xi^3 + xi, used as a map that no constant
// control weight can dominate.
WarpingMap cubic_stretch() {
  WarpingMap map;
  map.d = 1;
  map.id = "cubic";
  map.forward = [](const Vec& xi) {
    const double y = xi[0];
    const double s = std::sqrt(y * y / 4 + 1.0 / 27.0);
    return vec1(std::cbrt(y / 2 + s) + std::cbrt(y / 2 - s));
  };
  map.inverse = [](const Vec& tau) { return vec1(tau[0] * tau[0] * tau[0] + tau[0]); };
  map.jac_inverse = [](const Vec& tau) {
    Mat j(1, 1);
    j(0, 0) = 3 * tau[0] * tau[0] + 1;
    return j;
  };
  return map;
}

}  // namespace

TEST_CASE("weight: identity map is 1 everywhere") {
  for (int d : {1, 2, 3}) {
    const WarpingMap map = catalog_map("identity", d);
    for (double t : {-5.0, 0.0, 0.7, 3.25}) {
      Vec tau = Vec::Constant(d, t);
      CHECK(eval_weight(map, tau) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("weight: one-dimensional log warping is exponential beyond the blend") {
  const WarpingMap map = catalog_map("ln", 1);
  // inverse profile is exp(|tau|) - 1 once |tau| >= rho(2 eps) = ln 3
  for (double t : {1.2, 2.0, 3.0, 5.0}) {
    CHECK(eval_weight(map, vec1(t)) == doctest::Approx(std::exp(t)).epsilon(1e-10));
    CHECK(eval_weight(map, vec1(-t)) == doctest::Approx(std::exp(t)).epsilon(1e-10));
  }
}

TEST_CASE("weight: two-dimensional log warping matches the radial closed form") {
  const WarpingMap map = catalog_map("ln", 2);
  // w(tau) = exp(s) * (exp(s) - 1) / s at s = |tau|, rotation invariant
  auto closed = [](double s) { return std::exp(s) * (std::exp(s) - 1.0) / s; };
  CHECK(eval_weight(map, vec2(3.0, 0.0)) == doctest::Approx(closed(3.0)).epsilon(1e-10));
  CHECK(eval_weight(map, vec2(3.0 * std::cos(1.0), 3.0 * std::sin(1.0))) ==
        doctest::Approx(closed(3.0)).epsilon(1e-10));
  // large radius: approaches the pure-growth form exp(d s) s^{1-d}
  auto asym = [](double s) { return std::exp(2 * s) / s; };
  CHECK(eval_weight(map, vec2(3.0, 0.0)) / asym(3.0) == doctest::Approx(1.0).epsilon(0.06));
  CHECK(eval_weight(map, vec2(8.0, 0.0)) / asym(8.0) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("phi_tau: zero offset gives the identity matrix") {
  for (const char* id : {"identity", "ln", "alpha:0.5"}) {
    const WarpingMap map = catalog_map(id, 2);
    for (double t : {0.0, 1.5, -4.0}) {
      const Mat m = phi_tau(map, vec2(t, 0.5), vec2(0.0, 0.0));
      CHECK((m - Mat::Identity(2, 2)).norm() <= 1e-10);
    }
  }
}

TEST_CASE("phi_tau: identity map gives the identity at every offset") {
  const WarpingMap map = catalog_map("identity", 2);
  const Mat m = phi_tau(map, vec2(1.0, -2.0), vec2(3.0, 0.25));
  CHECK((m - Mat::Identity(2, 2)).norm() <= 1e-12);
}

TEST_CASE("phi_tau: log warping transition ratio is exponential in the offset") {
  const WarpingMap map = catalog_map("ln", 1);
  // A(tau) = e^tau beyond the blend, so phi_2(1) = e^3 / e^2 = e
  const Mat m = phi_tau(map, vec1(2.0), vec1(1.0));
  CHECK(m(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("admissibility: identity with unit control weight has ratio one") {
  const WarpingMap map = catalog_map("identity", 1);
  const AdmissibilityReport rep = verify_admissibility(map, map.v0, 2);
  CHECK(rep.pass);
  CHECK(rep.max_ratio == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("admissibility: catalog maps pass with their control weights on the standard grid") {
  struct Case {
    const char* id;
    int d;
  };
  const Case cases[] = {{"ln", 1},        {"alpha:0.5", 1},    {"alpha:0", 1},
                        {"alpha:-1", 1},  {"ln", 2},           {"alpha:0.5", 2},
                        {"alpha:-1", 2},  {"tensor:ln,ln", 2}, {"ln", 3}};
  for (const Case& c : cases) {
    CAPTURE(c.id);
    CAPTURE(c.d);
    const WarpingMap map = catalog_map(c.id, c.d);
    const AdmissibilityReport rep =
        verify_admissibility(map, map.v0, c.d + 1, GridSpec::standard(c.d));
    CHECK(rep.pass);
    CHECK(rep.max_ratio <= 1.0 + 1e-2);
  }
}

TEST_CASE("admissibility: power warping passes on a wide grid") {
  const WarpingMap map = catalog_map("alpha:0.5", 1);
  const AdmissibilityReport rep =
      verify_admissibility(map, map.v0, 2, GridSpec{-10, 10, 21});
  CHECK(rep.pass);
}

TEST_CASE("admissibility: cubic stretch has no constant control weight") {
  const WarpingMap map = cubic_stretch();
  const ControlWeight one{[](double) { return 1.0; }};
  const AdmissibilityReport rep = verify_admissibility(map, one, 0);
  CHECK(!rep.pass);
  CHECK(rep.max_ratio > 10.0);    // e.g. tau=0, ups=8: (3*64+1)/1
  CHECK(rep.witness_ups.size() == 1);
}

TEST_CASE("jacobian consistency: identity is exact, catalog maps within tolerance") {
  const ConsistencyReport id_rep = jacobian_consistency(catalog_map("identity", 2));
  CHECK(id_rep.pass);
  CHECK(id_rep.max_weight_residual <= 1e-10);  // finite-difference determinant noise
  CHECK(id_rep.max_roundtrip_error <= 1e-12);

  const ConsistencyReport a_rep = jacobian_consistency(catalog_map("alpha:0.5", 2), 100, 5.0);
  CHECK(a_rep.pass);
  CHECK(a_rep.max_weight_residual <= 1e-6);
  CHECK(a_rep.max_identity_residual <= 1e-6);

  const ConsistencyReport t_rep = jacobian_consistency(catalog_map("tensor:ln,ln", 2));
  CHECK(t_rep.pass);
  CHECK(t_rep.max_weight_residual <= 1e-6);
}

TEST_CASE("synthesized jacobian agrees with the closed form") {
  WarpingMap map = catalog_map("ln", 2);
  const WarpingMap ref = map;
  map.jac_inverse = nullptr;
  synthesize_jacobian(map);
  CHECK(map.jac_synthesized);
  for (double t : {0.3, 1.7, 4.0}) {
    const Vec tau = vec2(t, -0.5 * t);
    CHECK((map.jac_inv(tau) - ref.jac_inv(tau)).norm() <= 1e-6 * ref.jac_inv(tau).norm());
  }
}

TEST_CASE("moderateness: polynomial weights pass, gaussian envelopes fail") {
  const ControlWeight one{[](double) { return 1.0; }};
  const ModerateReport flat =
      check_moderate([](const Vec&) { return 1.0; }, one, 1);
  CHECK(flat.pass);
  CHECK(flat.max_ratio == doctest::Approx(1.0).epsilon(1e-12));

  const ControlWeight poly{[](double s) { return (1 + s) * (1 + s); }};
  const ModerateReport quad = check_moderate(
      [](const Vec& tau) { return std::pow(1 + tau.norm(), 2.0); }, poly, 1);
  CHECK(quad.pass);

  const ControlWeight expw{[](double s) { return std::exp(s); }};
  const ModerateReport gauss = check_moderate(
      [](const Vec& tau) { return std::exp(tau.squaredNorm()); }, expw, 1);
  CHECK(!gauss.pass);
  CHECK(gauss.max_ratio > 1.0);
  CHECK(gauss.witness_tau.size() == 1);
}

TEST_CASE("catalog maps: round trip and weight positivity on a dense grid") {
  struct Case {
    const char* id;
    int d;
    int n;
  };
  const Case cases[] = {{"identity", 1, 1000}, {"ln", 1, 1000},   {"alpha:0.5", 1, 1000},
                        {"alpha:-1", 1, 1000}, {"ln", 2, 31},     {"alpha:0.5", 2, 31},
                        {"tensor:ln,ln", 2, 31}, {"ln", 3, 10}};
  for (const Case& c : cases) {
    CAPTURE(c.id);
    CAPTURE(c.d);
    const WarpingMap map = catalog_map(c.id, c.d);
    double max_rt = 0;
    for (const Vec& tau : GridSpec{-8, 8, c.n}.points(c.d)) {
      max_rt = std::max(max_rt, (map.fwd(map.inv(tau)) - tau).norm());
      CHECK(eval_weight(map, tau) > 0);
    }
    CHECK(max_rt <= 1e-8);
  }
}

TEST_CASE("control weights are radially increasing and submultiplicative") {
  for (const char* id : {"ln", "alpha:0.5", "alpha:-1"}) {
    CAPTURE(id);
    const WarpingMap map = catalog_map(id, 1);
    double prev = map.v0(0.0);
    CHECK(prev >= 1.0);
    for (int i = 1; i <= 40; ++i) {
      const double s = 0.25 * i;
      const double cur = map.v0(s);
      CHECK(cur >= prev);
      prev = cur;
    }
    for (double s : {0.3, 1.0, 2.5})
      for (double t : {0.4, 1.7, 3.0})
        CHECK(map.v0(s + t) <= map.v0(s) * map.v0(t) * (1 + 1e-12));
  }
}
