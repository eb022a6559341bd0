#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "warptf/catalog.hpp"
#include "warptf/covering.hpp"

using namespace warptf;

TEST_CASE("induced covering: interval elements for the identity map") {
  const FrequencyCovering cov = induced_covering(catalog_map("identity", 1), 1.0, 1.0);
  for (long k : {-3L, 0L, 7L}) {
    const Index idx{k};
    CHECK(element_contains(cov, idx, vec1(double(k))));
    CHECK(element_contains(cov, idx, vec1(k + 0.99)));
    CHECK(!element_contains(cov, idx, vec1(k + 1.01)));
    CHECK(!element_contains(cov, idx, vec1(k - 1.0)));  // open interval (k-1, k+1)
    CHECK(element_measure(cov, idx) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK((element_center(cov, idx) - vec1(double(k))).norm() <= 1e-12);
  }
}

TEST_CASE("induced covering: warped intervals for the log map") {
  const FrequencyCovering cov = induced_covering(catalog_map("ln", 1), 1.0, 0.6);
  // Q_5 = (exp(4.4) - 1, exp(5.6) - 1)
  const double lo = std::exp(4.4) - 1, hi = std::exp(5.6) - 1;
  const Index k5{5};
  CHECK(element_contains(cov, k5, vec1(std::exp(5.0) - 1)));
  CHECK(element_contains(cov, k5, vec1(lo * 1.001)));
  CHECK(!element_contains(cov, k5, vec1(lo * 0.999)));
  CHECK(!element_contains(cov, k5, vec1(hi * 1.001)));
  CHECK(element_measure(cov, k5) ==
        doctest::Approx(std::exp(5.6) - std::exp(4.4)).epsilon(1e-9));
  // mirrored element on the negative axis
  CHECK(element_contains(cov, Index{-5}, vec1(-(std::exp(5.0) - 1))));
}

TEST_CASE("induced covering: radius threshold is sharp") {
  CHECK_THROWS_AS(induced_covering(catalog_map("identity", 1), 1.0, 0.5),
                  invalid_parameter);
  CHECK_THROWS_AS(induced_covering(catalog_map("identity", 2), 1.0, std::sqrt(2.0) / 2),
                  invalid_parameter);
  // the half-integer corner is the witness: dist to the lattice is sqrt(d)/2
  CHECK(!warped_point_covered(1.0, 0.5, vec1(0.5)));
  CHECK(warped_point_covered(1.0, 0.51, vec1(0.5)));
  CHECK(!warped_point_covered(1.0, 0.7071, vec2(0.5, 0.5)));
  CHECK(warped_point_covered(1.0, 0.72, vec2(0.5, 0.5)));
  const FrequencyCovering cov =
      induced_covering(catalog_map("identity", 2), 1.0, 0.72);
  CHECK(element_contains(cov, Index{0, 0}, vec2(0.5, 0.5)));
}

TEST_CASE("neighbors: lattice counts for induced and dyadic coverings") {
  const FrequencyCovering c2 = induced_covering(catalog_map("identity", 2), 1.0, 0.8);
  CHECK(neighbors(c2, Index{0, 0}, 1).size() == 9);  // |k-l| < 1.6 includes diagonals

  const FrequencyCovering c1 = induced_covering(catalog_map("identity", 1), 1.0, 0.6);
  for (int n = 0; n <= 4; ++n)
    CHECK(neighbors(c1, Index{3}, n).size() == size_t(1 + 2 * n));

  const FrequencyCovering bes = besov_covering(1);
  for (int n = 0; n <= 4; ++n) {
    CHECK(neighbors(bes, Index{5}, n).size() <= size_t(1 + 2 * n));
    CHECK(neighbors(bes, Index{0}, n).size() <= size_t(1 + n));
  }
  // self membership and nestedness of the closures
  const auto n1 = neighbors(c2, Index{2, -1}, 1);
  const auto n2 = neighbors(c2, Index{2, -1}, 2);
  CHECK(std::find(n1.begin(), n1.end(), Index{2, -1}) != n1.end());
  for (const Index& k : n1)
    CHECK(std::find(n2.begin(), n2.end(), k) != n2.end());
}

TEST_CASE("neighbor growth: quadratic for induced d=2, linear for dyadic") {
  const FrequencyCovering c2 = induced_covering(catalog_map("identity", 2), 1.0, 0.75);
  const NeighborGrowth g = neighbor_growth_diagnostic(c2, Index{0, 0}, 5);
  REQUIRE(g.counts.size() == 6);
  for (int n = 0; n <= 5; ++n)
    CHECK(g.counts[n] == size_t((1 + 2 * n) * (1 + 2 * n)));

  const NeighborGrowth gb = neighbor_growth_diagnostic(besov_covering(1), Index{9}, 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(gb.counts[n] <= size_t(1 + 2 * n));
}

TEST_CASE("cross intersections: same covering reproduces neighbor counts") {
  const FrequencyCovering cov = induced_covering(catalog_map("identity", 2), 1.0, 0.8);
  const auto window = covering_window(cov, 3);
  const CrossReport rep = cross_intersections(cov, cov, window);
  for (const CrossRow& row : rep.rows) {
    CHECK(row.exact);
    CHECK(row.count == neighbors(cov, row.k, 1).size());
  }
}

TEST_CASE("cross intersections: delta-r refinements of one map are equivalent") {
  const WarpingMap map = catalog_map("ln", 1);
  const FrequencyCovering a = induced_covering(map, 1.0, 0.6);
  const FrequencyCovering b = induced_covering(map, 0.5, 0.8);
  const CrossReport ab = cross_intersections(a, b, covering_window(b, 20));
  size_t mx = 0;
  for (const CrossRow& row : ab.rows) {
    CHECK(row.exact);
    CHECK(row.count >= 1);
    mx = std::max(mx, row.count);
  }
  CHECK(mx <= 2);  // |k - 0.5 j| < 1 admits at most two integers
  const CrossReport ba = cross_intersections(b, a, covering_window(a, 10));
  for (const CrossRow& row : ba.rows) CHECK(row.count == 3);
}

TEST_CASE("cross intersections: log covering vs dyadic annuli by dimension") {
  // d = 1: the log covering is weakly equivalent to the dyadic one
  const FrequencyCovering ln1 = induced_covering(catalog_map("ln", 1), 1.0, 0.6);
  const FrequencyCovering bes1 = besov_covering(1);
  std::vector<Index> win1;
  for (long j = 0; j <= 20; ++j) win1.push_back(Index{j});
  const CrossReport r1 = cross_intersections(ln1, bes1, win1);
  size_t lo = 1000, hi = 0;
  for (const CrossRow& row : r1.rows) {
    CHECK(row.exact);
    lo = std::min(lo, row.count);
    hi = std::max(hi, row.count);
  }
  CHECK(lo >= 1);
  CHECK(hi <= 8);  // constant band: no growth across two decades of scale

  // d = 2: the per-annulus count grows without bound
  const FrequencyCovering ln2 = induced_covering(catalog_map("ln", 2), 1.0, 0.75);
  const FrequencyCovering bes2 = besov_covering(2);
  auto count_at = [&](long j) {
    const CrossReport r = cross_intersections(ln2, bes2, {Index{j}});
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].exact);
    return r.rows[0].count;
  };
  const size_t c4 = count_at(4), c8 = count_at(8), c16 = count_at(16);
  CHECK(c8 > c4);
  CHECK(c16 >= 2 * c8);
}

TEST_CASE("tightness radius: identity closed form and the small-delta branch") {
  const FrequencyCovering cov = induced_covering(catalog_map("identity", 1), 1.0, 1.0);
  const TightnessReport rep = tightness_radius(cov);
  CHECK(rep.theta0 == doctest::Approx(0.5).epsilon(1e-12));  // 1/(2 d v0(1)), v0 = 1
  CHECK(rep.theta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.inner_radius == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(rep.pass);
  CHECK(rep.max_violation < 0);

  const FrequencyCovering fine = induced_covering(catalog_map("identity", 1), 0.15, 1.0);
  const TightnessReport rf = tightness_radius(fine);
  CHECK(rf.theta == doctest::Approx(0.15).epsilon(1e-12));  // min(delta r, theta0)
  CHECK(rf.inner_radius == doctest::Approx(0.0375).epsilon(1e-12));
  CHECK(rf.pass);
}

TEST_CASE("tightness radius: log and power maps verify membership") {
  for (const char* id : {"ln", "alpha:0.5"}) {
    CAPTURE(id);
    const FrequencyCovering cov = induced_covering(catalog_map(id, 1), 1.0, 0.6);
    const TightnessReport rep = tightness_radius(cov);
    CHECK(rep.pass);
    CHECK(rep.inner_radius > 0);
    CHECK(rep.max_violation < 0);
  }
}

TEST_CASE("alpha verification: identity band is degenerate, alpha > 1 rejected") {
  const FrequencyCovering cov = induced_covering(catalog_map("identity", 1), 1.0, 1.0);
  const AlphaReport rep = alpha_verify(cov, 0.0, 20);
  CHECK(!rep.rejected);
  CHECK(rep.pass);
  CHECK(rep.ratio_min == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.ratio_max == doctest::Approx(2.0).epsilon(1e-9));

  const AlphaReport bad = alpha_verify(cov, 1.5, 20);
  CHECK(bad.rejected);
  CHECK(!bad.pass);
  CHECK(!bad.rule.empty());
}

TEST_CASE("alpha verification: power warping measures scale correctly") {
  const FrequencyCovering cov =
      induced_covering(catalog_map("alpha:0.5", 2), 1.0, 0.75);
  const AlphaReport rep = alpha_verify(cov, 0.5, 30);
  CHECK(!rep.rejected);
  CHECK(rep.pass);
  CHECK(rep.band() <= 10.0);
}

TEST_CASE("structured covering: ellipsoid elements, coverage, parameter range") {
  const WarpingMap map = catalog_map("identity", 1);  // v0 = 1, theta0 = 1/2
  const FrequencyCovering cov = structured_covering(map, 0.15, 0.1);
  for (long k : {-4L, 0L, 9L}) {
    const Index idx{k};
    CHECK(element_contains(cov, idx, vec1(0.15 * k)));          // center
    CHECK(element_contains(cov, idx, vec1(0.15 * k + 0.099)));
    CHECK(!element_contains(cov, idx, vec1(0.15 * k + 0.101)));
  }
  // delta < 2r, so the line is covered
  for (int i = 0; i <= 80; ++i) CHECK(point_covered(cov, vec1(-2.0 + 0.05 * i)));
  CHECK_THROWS_AS(structured_covering(map, 0.15, 0.2), invalid_parameter);   // r >= theta0/4
  CHECK_THROWS_AS(structured_covering(map, 0.25, 0.1), invalid_parameter);   // delta too big
}

TEST_CASE("structured covering: bounded overlap with the induced covering") {
  const WarpingMap map = catalog_map("ln", 1);
  const double theta0 = 1.0 / (2.0 * map.v0(1.0));
  const double r = 0.85 * theta0 / 4;
  const double dmax = std::min(1.0, 4 * r) / (2.0 * map.v0(0.5));
  const FrequencyCovering s = structured_covering(map, 0.9 * dmax, r);
  const FrequencyCovering q = induced_covering(map, 1e-3, 0.6);

  std::vector<Index> wq;
  for (long j = -3; j <= 3; ++j) wq.push_back(Index{j});
  const CrossReport per_q = cross_intersections(s, q, wq, covering_window(s, 60));
  for (const CrossRow& row : per_q.rows) {
    CHECK(row.count >= 5);
    CHECK(row.count <= 60);
  }
  std::vector<Index> ws;
  for (long k = -10; k <= 10; ++k) ws.push_back(Index{k});
  const CrossReport per_s = cross_intersections(q, s, ws, covering_window(q, 10));
  for (const CrossRow& row : per_s.rows) {
    CHECK(row.count >= 1);
    CHECK(row.count <= 12);
  }
}

TEST_CASE("product covering: factorized neighbors match brute force") {
  const FrequencyCovering bes = besov_covering(1);
  const FrequencyCovering prod = product_covering({bes, bes});
  CHECK(prod.index_len() == 2);
  CHECK(neighbors(prod, Index{5, 3}, 1).size() == 9);  // 3 x 3 componentwise
  CHECK(neighbors(prod, Index{0, 4}, 1).size() == 6);  // edge factor has two neighbors

  // brute-force comparison on a window
  const Index k{2, 2};
  std::set<Index> brute;
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      if (elements_intersect(prod, Index{a, b}, prod, k).intersects)
        brute.insert(Index{a, b});
  const auto fact = neighbors(prod, k, 1);
  CHECK(brute.size() == fact.size());
  for (const Index& l : fact) CHECK(brute.count(l) == 1);

  const FrequencyCovering single = product_covering({bes});
  CHECK(single.index_len() == 1);
  CHECK(neighbors(single, Index{5}, 1).size() == neighbors(bes, Index{5}, 1).size());

  CHECK_THROWS_AS(product_covering({}), invalid_parameter);
}
