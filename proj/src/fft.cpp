#include "warptf/fft.hpp"

#include <fftw3.h>

#include <map>
#include <string>

namespace warptf {

static fftw_plan plan_for(const std::vector<int>& shape, int sign, fftw_complex* io) {
  static std::map<std::string, fftw_plan> cache;
  std::string key = sign < 0 ? "f" : "b";
  for (int n : shape) key += ":" + std::to_string(n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    // FFTW_UNALIGNED: plans are reused on whatever buffer the caller owns.
    fftw_plan p = fftw_plan_dft(int(shape.size()), shape.data(), io, io,
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    it = cache.emplace(key, p).first;
  }
  return it->second;
}

void dft(std::vector<cd>& a, const std::vector<int>& shape, int sign) {
  size_t total = 1;
  for (int n : shape) {
    if (n <= 0) throw invalid_parameter("dft: empty axis");
    total *= size_t(n);
  }
  if (total != a.size()) throw invalid_parameter("dft: shape does not match array size");
  auto* io = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan_for(shape, sign, io), io, io);
}

// With centered grids the shift twiddles collapse to parity flips plus a
// constant phase i^{sign*n} per axis: xi_0 * dy = dxi * y_0 = -1/2 and
// xi_0 * y_0 = n/4 along every axis.
std::vector<cd> centered_ft(const std::vector<cd>& values, const std::vector<AxisGrid>& freq,
                            int sign) {
  const int d = int(freq.size());
  std::vector<int> shape(d);
  size_t total = 1;
  double scale = 1;
  cd phase(1, 0);
  for (int ax = 0; ax < d; ++ax) {
    shape[ax] = freq[ax].n;
    total *= size_t(freq[ax].n);
    scale *= sign > 0 ? freq[ax].step() : dual_grid(freq[ax]).step();
    const int quarter = ((freq[ax].n % 4) + 4) % 4;
    static const cd ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cd ph = ipow[quarter];
    phase *= sign > 0 ? ph : std::conj(ph);
  }
  if (values.size() != total) throw invalid_parameter("centered_ft: size mismatch");

  std::vector<cd> out(values);
  // input parity twiddle: product over axes of (-1)^{m_ax}
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rest = flat;
    int par = 0;
    for (int ax = d - 1; ax >= 0; --ax) {
      par += int(rest % size_t(shape[ax]));
      rest /= size_t(shape[ax]);
    }
    if (par & 1) out[flat] = -out[flat];
  }
  dft(out, shape, sign);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rest = flat;
    int par = 0;
    for (int ax = d - 1; ax >= 0; --ax) {
      par += int(rest % size_t(shape[ax]));
      rest /= size_t(shape[ax]);
    }
    cd f = phase * scale;
    if (par & 1) f = -f;
    out[flat] *= f;
  }
  return out;
}

}  // namespace warptf
