#pragma once

#include <optional>

#include "warptf/radial.hpp"
#include "warptf/warping.hpp"

namespace warptf {

enum class CoveringKind { induced, structured, besov, product };

// Structured frequency covering. Kinds:
//  induced:    Q_k = inverse(delta * B_r(k)), k in Z^d (needs r > sqrt(d)/2)
//  structured: S_k = b_k + T_k<B_r(0)>, b_k = inverse(delta k), T_k = A(delta k)
//  besov:      dyadic annuli B_0 = {|xi|<2}, B_j = {2^{j-1}<|xi|<2^{j+1}}, j in N_0
//  product:    cartesian product of parts (index = concatenation)
struct FrequencyCovering {
  CoveringKind kind = CoveringKind::induced;
  int d = 1;
  double delta = 1, r = 1;
  WarpingMap map;
  std::vector<FrequencyCovering> parts;

  int index_len() const;
};

FrequencyCovering induced_covering(const WarpingMap& map, double delta, double r);
FrequencyCovering structured_covering(const WarpingMap& map, double delta, double r);
FrequencyCovering besov_covering(int d);
FrequencyCovering product_covering(const std::vector<FrequencyCovering>& parts);

// Raw membership test in warped coordinates, usable outside the validated
// parameter range (diagnostics for the rejected regime).
bool warped_point_covered(double delta, double r, const Vec& tau);

bool element_contains(const FrequencyCovering& cov, const Index& k, const Vec& xi);
bool point_covered(const FrequencyCovering& cov, const Vec& xi);
Vec element_center(const FrequencyCovering& cov, const Index& k);
// Normalization T_k of the element (identity-scaled 2^j for dyadic annuli).
Mat element_matrix(const FrequencyCovering& cov, const Index& k);

// Lebesgue measure of one element. Induced elements integrate the weight over
// the warped ball with tensor Gauss-Legendre quadrature (order 24, polar /
// spherical substitution for d = 2, 3); the other kinds are closed forms.
double element_measure(const FrequencyCovering& cov, const Index& k);

// Direct neighbors k* = {l : Q_l meets Q_k} and their n-fold closure k^{n*}.
std::vector<Index> neighbors(const FrequencyCovering& cov, const Index& k, int n = 1);

struct PairCheck {
  bool intersects = false;
  bool exact = true;  // false when decided by quasi-Monte-Carlo sampling
};

// Intersection test across coverings. Exact for: same-map induced pairs,
// dyadic-dyadic, radial-induced vs dyadic (norm-interval reduction), and
// componentwise products of exact cases. Everything else falls back to
// Halton sampling of both elements (flagged approximate).
PairCheck elements_intersect(const FrequencyCovering& a, const Index& ka,
                             const FrequencyCovering& b, const Index& kb,
                             int qmc_points = 4096);

// Default enumeration window: |k|_2 <= radius for lattice indices,
// j <= radius for dyadic ones, componentwise for products.
std::vector<Index> covering_window(const FrequencyCovering& cov, long radius);

struct CrossRow {
  Index k;           // element of b
  size_t count = 0;  // elements of a meeting it
  bool exact = true;
};
struct CrossReport {
  std::vector<CrossRow> rows;
};

// For every element of b in window_b, count intersecting elements of a. The
// candidate set in a is derived from geometry when exact tests apply;
// otherwise window_a must be supplied.
CrossReport cross_intersections(const FrequencyCovering& a, const FrequencyCovering& b,
                                const std::vector<Index>& window_b,
                                const std::vector<Index>& window_a = {});

struct TightnessReport {
  double theta0 = 0;        // 1 / (2 d v0(1))
  double theta = 0;         // min(delta r, theta0)
  double inner_radius = 0;  // theta / 4
  double max_violation = 0; // worst |Phi(b_k + T_k u)/delta - k| - r over samples
  bool pass = false;
};

// Verifies that b_k + T_k<B_{theta/4}(0)> stays inside Q_k on sampled k.
TightnessReport tightness_radius(const FrequencyCovering& cov, long k_radius = 3,
                                 int boundary_samples = 64, uint64_t seed = 0);

struct AlphaReport {
  bool rejected = false;  // alpha out of the admissible range (> 1)
  std::string rule;
  double alpha = 0;
  double ratio_min = 0, ratio_max = 0;  // mu(Q_k) / (1+|center|)^{alpha d}
  double shape_max = 0;                 // bound on outer/inner radius ratio
  bool pass = false;
  double band() const { return ratio_min > 0 ? ratio_max / ratio_min : 0; }
};

// Measures mu(Q_k) ~ (1+|xi|)^{alpha d} across the window and bounds the
// eccentricity. alpha > 1 is rejected outright: no covering of R^d can
// satisfy the alpha-covering measure scaling for alpha > 1.
AlphaReport alpha_verify(const FrequencyCovering& cov, double alpha, long kmax,
                         double band_threshold = 10.0);

struct NeighborGrowth {
  std::vector<size_t> counts;  // |k^{0*}|, |k^{1*}|, ..., |k^{nmax*}|
};

NeighborGrowth neighbor_growth_diagnostic(const FrequencyCovering& cov, const Index& k,
                                          int nmax);

}  // namespace warptf
