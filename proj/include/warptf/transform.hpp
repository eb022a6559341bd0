#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "warptf/bapu.hpp"
#include "warptf/covering.hpp"
#include "warptf/fft.hpp"
#include "warptf/warping.hpp"

namespace warptf {

// Frequency-side window profile in warped coordinates: a tensor power of the
// mollifier bump. Atoms are translates of this profile along the warped axis.
struct Prototype {
  int d = 0;
  Mollifier moll;
  double l2sq = 0;  // squared L2 norm of the d-dimensional profile

  double value(const Vec& u) const;
};

Prototype make_prototype(const Mollifier& moll, int d);

// Band-limited signal sampled on a centered frequency grid (row-major layout).
struct SampledSignal {
  std::vector<AxisGrid> freq;
  std::vector<cd> fhat;

  int d() const { return int(freq.size()); }
  std::vector<int> shape() const;
  size_t size() const;
  double l2_norm_sq() const;  // rectangle rule on the frequency side
};

SampledSignal random_bandlimited(const std::vector<AxisGrid>& freq, double band,
                                 uint64_t seed);

// g_omega on the grid: w(Phi(omega))^{-1/2} theta(Phi(xi) - Phi(omega)); real valued
std::vector<double> atom_freq(const WarpingMap& map, const Prototype& proto,
                              const Vec& omega, const std::vector<AxisGrid>& freq);

struct VoiceSlice {
  Index k;           // lattice index of the warped center
  Vec omega;         // center in frequency coordinates
  double weight;     // w at the warped center
  std::vector<cd> values;  // V f(y_n, omega) on the dual time grid
};

struct VoiceTransform {
  std::vector<AxisGrid> freq;
  std::vector<AxisGrid> time;
  double delta = 0;
  WarpingMap map;
  Prototype proto;
  std::vector<VoiceSlice> slices;
};

// Voice transform along the warped lattice delta * Z^d, restricted to indices
// whose windows meet the signal band (pad extends the window in lattice steps).
VoiceTransform analyze(const SampledSignal& f, const WarpingMap& map,
                       const Prototype& proto, double delta, long pad = 1);

struct ParsevalReport {
  double lhs = 0;     // discretized double integral of |V f|^2
  double rhs = 0;     // ||theta||^2 ||f||^2
  double defect = 0;  // relative gap
};

ParsevalReport parseval_defect(const SampledSignal& f, const WarpingMap& map,
                               const Prototype& proto, double delta);

// Reconstruction from the slices; returns the frequency samples and the
// relative L2 error against the input.
struct RoundTrip {
  SampledSignal rec;
  double rel_error = 0;
};

RoundTrip synthesize(const VoiceTransform& vt, const SampledSignal& f);

struct CoorbitParams {
  double p = 2;
  double q = 2;
  std::function<double(const Vec&)> kappa;  // weight, evaluated at the slice center
};

double coorbit_norm(const VoiceTransform& vt, const CoorbitParams& params);

// Window mass of the transform versus the corresponding partition window:
// applying the k-th window to the spectrum equals integrating sqrt(w) times
// the transform over the k-th warped cell. Checked on the time grid.
struct IdentityReport {
  double max_abs_error = 0;
  double scale = 0;  // max magnitude of the reference side
  double rel_error = 0;
  bool pass = false;
};

IdentityReport bapu_voice_identity(const SampledSignal& f, const Bapu& bapu,
                                   const Index& k, int quad_points = 16,
                                   double tol = 1e-3);

}  // namespace warptf
