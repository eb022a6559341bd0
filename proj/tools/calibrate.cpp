// Control-weight calibration sweep. Rebuilds each catalog map with the raw
// (unscaled) control weight, measures the worst admissibility ratio over the
// standard pair grid at the order the map is built for, and prints the
// measured maximum together with a suggested constant (25% headroom). The
// frozen table in the catalog was produced by this sweep.

#include <CLI11.hpp>

#include <cstdio>
#include <vector>

#include "warptf/catalog.hpp"
#include "warptf/radial.hpp"
#include "warptf/warping.hpp"

using namespace warptf;

int main(int argc, char** argv) {
  CLI::App app{"admissibility-constant calibration sweep"};
  std::vector<std::string> families = {"ln", "alpha:0.5", "alpha:0", "alpha:-1"};
  std::vector<int> dims = {1, 2, 3};
  int grid_n = 0;  // 0: standard grid for the dimension
  double headroom = 1.25;
  bool tensor = true;
  app.add_option("--family", families, "families to sweep");
  app.add_option("--d", dims, "dimensions to sweep");
  app.add_option("--grid-n", grid_n, "grid points per axis (0 = standard)");
  app.add_option("--headroom", headroom, "factor applied to the measured maximum");
  app.add_flag("--tensor,!--no-tensor", tensor, "include the tensor map per dimension");
  CLI11_PARSE(app, argc, argv);

  std::printf("%-14s %2s %5s %10s %10s\n", "map", "d", "order", "measured", "suggested");
  const auto report = [&](const std::string& id, int d, WarpingMap map) {
    GridSpec grid = GridSpec::standard(d);
    if (grid_n > 0) grid.n = grid_n;
    const int order = map.smoothness >= 0 ? map.smoothness : d + 1;
    const AdmissibilityReport rep =
        verify_admissibility(map, map.v0, order, grid, /*tol=*/1e9);
    std::printf("%-14s %2d %5d %10.4f %10.4f\n", id.c_str(), d, order, rep.max_ratio,
                headroom * rep.max_ratio);
    std::fflush(stdout);
  };

  for (int d : dims) {
    for (const auto& fam : families) {
      WarpingMap map = radial_map(catalog_component(fam), d, 1.0);
      map.id = fam;
      report(fam, d, std::move(map));
    }
    if (tensor) {
      std::vector<std::shared_ptr<const RadialComponent>> parts;
      std::string id = "tensor:";
      for (int i = 0; i < d; ++i) {
        parts.push_back(catalog_component("ln"));
        id += i ? ",ln" : "ln";
      }
      WarpingMap map = tensor_map(parts, 1.0);
      map.id = id;
      report(id, d, std::move(map));
    }
  }
  return 0;
}
