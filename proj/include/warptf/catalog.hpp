#pragma once

#include <memory>
#include <string>

#include "warptf/radial.hpp"
#include "warptf/warping.hpp"

namespace warptf {

// Named construction of the maps the library ships with.
//
//   "identity"            the trivial warping (w == 1)
//   "ln"                  radial logarithmic warping with the default slow start
//   "alpha:<a>"           radial power-law warping, a < 1 (a = 0 reproduces "ln"
//                         scaling class boundaries; a >= 1 is rejected)
//   "tensor:<f1>,...,<fd>" componentwise one-dimensional warpings, each factor a
//                         catalog id of a radial family ("ln" or "alpha:<a>")
//
// Control-weight constants were measured by maximising the admissibility ratio
// over a dense grid and frozen with headroom; anything not in the table falls
// back to a conservative default (a larger constant only loosens the derived
// radii, it never invalidates the weight).

std::shared_ptr<const RadialComponent> catalog_component(const std::string& family,
                                                         const SlowStartParams& params = {});

double catalog_v0_constant(const std::string& id, int d);

WarpingMap catalog_map(const std::string& id, int d);

}  // namespace warptf
