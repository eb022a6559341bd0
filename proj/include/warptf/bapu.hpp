#pragma once

#include <cstdint>
#include <vector>

#include "warptf/covering.hpp"
#include "warptf/warping.hpp"

namespace warptf {

// Compactly supported smooth bump on (-a, a) with tabulated antiderivative.
// The antiderivative is evaluated by cubic Hermite interpolation between table
// nodes (values plus exact density slopes), clamped to 0 / 1 outside (-a, a),
// so sums of consecutive differences telescope exactly.
struct Mollifier {
  double a = 0;
  double norm = 0;  // reciprocal of the raw bump mass on (-a, a)
  std::vector<double> nodes;
  std::vector<double> z;   // antiderivative values, z.front() == 0, z.back() == 1
  std::vector<double> zd;  // normalized density at the nodes

  double density(double t) const;
  double antiderivative(double t) const;
};

Mollifier make_mollifier(double a, int table_size = 2048);

// Partition of unity subordinate to an induced covering: each window is the
// mollified mass of one warped cube,
//   phi_k(xi) = prod_i [ Z(tau_i - delta k_i + delta/2) - Z(tau_i - delta k_i - delta/2) ],
// tau = Phi(xi). The windows sum to one identically and vanish outside the
// covering element as long as the bump width obeys a sqrt(d) <= delta vartheta.
struct Bapu {
  FrequencyCovering cov;
  Mollifier moll;
  double vartheta = 0;

  double cube_mass(const Index& k, const Vec& tau) const;
  double phi(const Index& k, const Vec& xi) const;
  std::vector<Index> active(const Vec& xi) const;
};

Bapu make_bapu(const FrequencyCovering& cov, double vartheta = 0, int table_size = 2048);

struct PartitionReport {
  double max_defect = 0;
  double tolerance = 0;
  bool pass = false;
};

// max_eta | sum_k phi_k(eta) - 1 | over a deterministic grid
PartitionReport partition_defect(const Bapu& b, const GridSpec& grid = {},
                                 double tol = 1e-8);

struct SupportReport {
  double max_outside = 0;  // largest |phi_k| sampled outside its covering element
  double max_inside = 0;   // largest phi_k seen at all (sanity: windows are not trivial)
  bool pass = false;
};

SupportReport support_check(const Bapu& b, long k_radius = 2, int samples = 2048,
                            uint64_t seed = 0);

struct FourierL1Report {
  double value = 0;       // rectangle-rule estimate of ||inverse transform of phi_k||_L1
  double tail_ratio = 0;  // fraction of that mass in the outer half of the time window
  int grid_n = 0;
};

FourierL1Report fourier_l1_estimate(const Bapu& b, const Index& k, int grid_n = 256,
                                    double pad = 4.0);

}  // namespace warptf
