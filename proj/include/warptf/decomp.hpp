#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "warptf/bapu.hpp"
#include "warptf/transform.hpp"

namespace warptf {

// Weight attached to the k-th covering element when a weighted transform-side
// norm is rewritten as a window-sum norm: the base weight at the element
// center times the Jacobian factor w^{1/q - 1/2}.
double weight_u(const WarpingMap& map, const std::function<double(const Vec&)>& kappa,
                double q, double delta, const Index& k);

// kappa(omega) = (1 + |Phi(omega)|)^s, the standard radius power in warped coordinates
std::function<double(const Vec&)> warped_power_weight(const WarpingMap& map, double s);

struct DecompParams {
  double p = 2;
  double q = 2;
  std::function<double(const Vec&)> kappa;  // optional; 1 when absent
};

// || ( u_k || F^{-1}[phi_k f^] ||_{L^p} )_k ||_{l^q} over the windows meeting the band
double decomposition_norm(const SampledSignal& f, const Bapu& bapu,
                          const DecompParams& params);

struct ModeratenessReport {
  double constant = 0;  // max ratio of the weight across intersecting elements
  Index witness_k, witness_l;
};

ModeratenessReport moderateness_constant(const FrequencyCovering& cov,
                                         const std::function<double(const Index&)>& weight,
                                         long k_radius);

// Ratio of the transform-side norm to the window-side norm over seeded random
// band-limited signals; both sides share one window profile, so the ratios
// should stay inside a fixed band.
struct EquivalenceProbe {
  std::vector<double> coorbit, decomposition;  // per-signal norms
  std::vector<double> ratios;
  double band = 0;  // max ratio / min ratio
  bool pass = false;
};

EquivalenceProbe norm_equivalence_probe(const WarpingMap& map, double delta, double r,
                                        const DecompParams& params, int n_signals = 10,
                                        uint64_t seed0 = 0, double band_tol = 16.0,
                                        int grid_n = 512, double extent = 24.0,
                                        double band = 8.0);

}  // namespace warptf
