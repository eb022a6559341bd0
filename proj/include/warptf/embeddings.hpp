#pragma once

#include <optional>

#include "warptf/radial.hpp"
#include "warptf/rational.hpp"
#include "warptf/warping.hpp"

namespace warptf {

// ------------------------------------------------------------ descriptors

enum class SpaceKind { warped, besov, alpha_mod, mixed };

// One decomposition-type function space. Which fields are meaningful depends
// on kind; str() renders a stable label for reports.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::warped;
  int d = 1;
  XR p{2}, q{2};
  double s = 0;                           // smoothness (besov / alpha_mod)
  double alpha = 0;                       // alpha_mod only
  std::vector<double> s_vec;              // mixed only
  std::string map_id;                     // warped only: catalog id of the map
  std::string kappa_label;                // warped only: rendered weight
  std::function<double(const Vec&)> kappa;  // warped only: weight evaluator

  std::string str() const;
};

SpaceDescriptor besov_space(double s, XR p, XR q, int d);
// alpha = 1 is the dyadic scaling class and is routed to besov_space.
SpaceDescriptor alpha_modulation_space(double alpha, double s, XR p, XR q, int d);
SpaceDescriptor mixed_smoothness_space(const std::vector<double>& s, XR p, XR q);
SpaceDescriptor warped_space(const std::string& map_id, std::function<double(const Vec&)> kappa,
                             const std::string& kappa_label, XR p, XR q, int d);

// ------------------------------------------------------ sequence algebra

// Carrier for the decision sequences. Closed form means v_j = C 2^{a j} (1+j)^b
// with exact rational exponents; otherwise a positive sample window starting
// at index j0.
struct AsymptoticSequence {
  bool closed_form = true;
  Rat a{0}, b{0};
  std::vector<double> samples;
  long j0 = 0;
};

AsymptoticSequence power_log_sequence(Rat a, Rat b);
AsymptoticSequence sampled_sequence(std::vector<double> values, long j0 = 0);

enum class Membership { finite, infinite, undetermined };
std::string membership_str(Membership m);

// Least-squares fit of log v_j = a j log2 + b log(1+j) + c over the window.
struct SequenceFit {
  double a = 0, b = 0, c = 0;
};
SequenceFit fit_power_log(const std::vector<double>& samples, long j0);

// Decides whether (v_j)_j lies in l^s. Closed form is exact: finite iff
// a < 0, or a = 0 with (s = inf and b <= 0) or (s < inf and b*s < -1).
// Sampled sequences are decided from the regression estimates with honest
// undetermined bands near the boundary (|a| <= 1e-3 is treated as rate zero:
// slower geometric trends are below the window's resolution).
Membership ellq_membership(const AsymptoticSequence& seq, const XR& s);

// Nearest rational with small denominator; nullopt when no denominator
// <= max_den matches x to ~1e-9 relative accuracy.
std::optional<Rat> try_rationalize(double x, long max_den = 1000000);

// ------------------------------------------------------------- verdicts

enum class Relation { embeds, fails, equal, undetermined };
std::string relation_str(Relation r);

struct EmbeddingVerdict {
  Relation relation = Relation::undetermined;
  std::string direction;  // e.g. "A->B"
  Rat t{0}, t_tilde{0};
  AsymptoticSequence sequence;  // the decisive weight-ratio sequence
  Membership membership = Membership::undetermined;
  std::string citation;  // id of the decision rule applied
  std::string note;
};

// t = max(0, 1/q2 - min(1/p1, 1 - 1/p1)),
// t~ = max(0, max(1/p2, 1 - 1/p2) - 1/q1); both lie in [0, 1].
struct TExponents {
  Rat t{0}, t_tilde{0};
};
TExponents t_exponents(const XR& p1, const XR& p2, const XR& q1, const XR& q2);

// Embedding test for two weighted spaces over one covering: requires p1 <= p2
// and membership of K_i = (v_i / u_i) |det T_i|^{1/p1 - 1/p2} in l^E with
// E = q2 (q1/q2)' (E = inf when q1 <= q2). Closed-form inputs compose exactly;
// otherwise aligned sample windows are combined pointwise. Sampled inputs over
// a d-dimensional index family must be pre-aggregated into 1-d shell values.
EmbeddingVerdict embed_same_covering(const AsymptoticSequence& u, const AsymptoticSequence& v,
                                     const AsymptoticSequence& detT, const XR& p1, const XR& p2,
                                     const XR& q1, const XR& q2);

// ------------------------------------------------- map comparison / equality

struct EqualityReport {
  Relation relation = Relation::undetermined;
  // sup over the grid of ||D map2(map1^{-1}(tau)) * D map1^{-1}(tau)|| and the
  // transposed composition. Boundedness of sup_12 makes every element of the
  // first covering sit inside boundedly many elements of the second.
  double sup_12 = 0, sup_21 = 0;
  bool bounded_12 = false, bounded_21 = false;
  bool radial_shortcut = false;  // decided from the profile-derivative ratio
  std::string citation;
};

// Compares the coverings induced by two maps of equal dimension. Radial pairs
// use the exact composition norm max{rho2'(t)/rho1'(t), rho2(t)/rho1(t)} on a
// geometric t-grid; generic pairs probe the grid. "Bounded" uses a growth
// heuristic (no trend between the inner and outer half of the grid), so the
// verdict certifies the window only.
EqualityReport equality_check(const WarpingMap& m1, const WarpingMap& m2,
                              const GridSpec& grid = GridSpec{});

// ------------------------------------------------------- radial sandwiches

struct SandwichSpace {
  SpaceDescriptor lower, middle, upper;  // lower -> middle -> upper
  Rat t{0}, t_tilde{0};
  double deriv_ratio_sup = 0;  // probed sup of rho2'/rho1'
  double scaling_sup = 0;      // probed two-point scaling constant of rho1'
  bool hypotheses_ok = false;
  std::string citation;
};

// Sandwiches a warped space over rho2 between two spaces over rho1 with the
// shifted weights kappa * [w2 o map2 / w1 o map1]^{1/q - 1/2 - t} at t = -t~
// (lower) and t = +t (upper). Requires rho2' <= C rho1' and two-point scaling
// of rho1' on the probe range; throws not_converged when a probe fails.
SandwichSpace radial_embedding(std::shared_ptr<const RadialComponent> rho1,
                               std::shared_ptr<const RadialComponent> rho2,
                               std::function<double(const Vec&)> kappa,
                               const std::string& kappa_label, const XR& p, const XR& q, int d);

// --------------------------------------------------- dyadic-scale comparisons

// gamma_j = rho_inv'(rho(2^j)) * (2^j / rho(2^j))^{d-1}: the volume scale of
// the warped covering element sitting at dyadic height 2^j. Closed form for
// the catalog families (ln: a = d, b = 1-d; alpha:<a>: a = alpha d, b = 0),
// sampled otherwise.
AsymptoticSequence gamma_sequence(const RadialComponent& comp, int d, int jmax = 28);

struct BesovComparison {
  EmbeddingVerdict into_besov;  // warped coorbit (s1, p1, q1) -> dyadic (s2, p2, q2)
  EmbeddingVerdict from_besov;  // dyadic -> warped coorbit
  AsymptoticSequence gamma;
  double curvature_sup = 0;  // probed curvature ratio of rho_inv
};

// Embedding tests between the coorbit space of the radial map with weight
// (1+|.|)^{s1} and the dyadic-decomposition space of smoothness s2, decided
// through the gamma_j sequences.
BesovComparison besov_vs_warped(std::shared_ptr<const RadialComponent> rho, double s1, double s2,
                                const XR& p1, const XR& p2, const XR& q1, const XR& q2, int d);

// The frequency weight exponent that makes the log-warped coorbit space
// comparable to the dyadic space of smoothness s: s + d (1/2 - 1/q).
double besov_identification_exponent(double s, const XR& q, int d);

// --------------------------------------------------------- identifications

// Warped form of the alpha-modulation space: map "alpha:<alpha>" with weight
// (1+|xi|)^gamma, gamma = s - d alpha (1/q - 1/2). Throws for alpha >= 1.
SpaceDescriptor identify_alpha_modulation(double alpha, double s, const XR& p, const XR& q,
                                          int d);

// Warped form of the dominating-mixed-smoothness space: tensor product of
// d one-dimensional log warpings with kappa(xi) = prod (1+|xi_i|)^{s_i+1/2-1/q}.
SpaceDescriptor identify_mixed_smoothness(const std::vector<double>& s, const XR& p, const XR& q);

// -------------------------------------------------------------- summability

struct SummabilityReport {
  bool condition_ok = false;  // N > d/p
  double partial_sum = 0;
  double tail_bound = 0;  // geometric extrapolation of the remaining shells
  double tail_ratio = 0;  // tail_bound / partial_sum
  double shell_ratio = 0; // last observed shell-to-shell decay factor
  Membership verdict = Membership::undetermined;
};

// Partial sums of the product-dyadic localization weight
// w_l = 2^{|l|_1/p} (1 + inf_{xi in neighborhood l} |xi|)^{-N} over the window
// {0..window}^d, with a geometric tail bound from the shell decay. The sum is
// finite exactly when N > d/p (along the diagonal the terms grow otherwise).
SummabilityReport mixed_weight_summability(int N, const XR& p, int d, long window = 16);

// ----------------------------------------------------------------- chains

struct SandwichChain {
  // dyadic closeness: warped (s + eps) -> dyadic s -> warped (s - eps)
  SpaceDescriptor besov_lower, besov_mid, besov_upper;
  // power-scale chain: alpha-mod (s + T~) -> log-warped -> alpha-mod (s - T)
  SpaceDescriptor alpha_lower, alpha_mid, alpha_upper;
  Rat t{0}, t_tilde{0};
  double T = 0, T_tilde = 0;  // t d (1-alpha), t~ d (1-alpha)
  bool besov_chain_equal = false;  // d = 1 collapses the dyadic chain
  std::string citation;
};

// Two-sided approximation chains around the log-warped coorbit space: the
// dyadic chain with weight exponents s +- eps and the alpha-modulation chain
// with smoothness shifts T, T~ against the log-corrected weight
// (1+|xi|)^{s + d(1/2-1/q)} (1 + log(1+|xi|))^{(1-d)(1/2-1/q)}.
SandwichChain besov_alpha_sandwich(double alpha, double s, const XR& p, const XR& q, int d,
                                   double eps);

}  // namespace warptf
