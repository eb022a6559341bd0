#include "warptf/signal_io.hpp"

#include <bit>
#include <fstream>

#include <json.hpp>

namespace warptf {

static_assert(std::endian::native == std::endian::little,
              "raw payload is little-endian; byte swapping is not implemented");

using nlohmann::json;

void write_signal(const std::string& path, const SampledSignal& sig) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_parameter("write_signal: cannot open " + path);
  json axes = json::array();
  for (const AxisGrid& g : sig.freq) axes.push_back({{"n", g.n}, {"extent", g.extent}});
  const json header = {{"format", "warptf-signal"},
                       {"version", 1},
                       {"d", sig.d()},
                       {"axes", axes},
                       {"dtype", "complex128-le"},
                       {"count", sig.fhat.size()}};
  out << header.dump() << "\n";
  out.write(reinterpret_cast<const char*>(sig.fhat.data()),
            std::streamsize(sig.fhat.size() * sizeof(cd)));
  if (!out) throw std::runtime_error("write_signal: short write to " + path);
}

SampledSignal read_signal(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_parameter("read_signal: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw invalid_parameter("read_signal: missing header line");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw invalid_parameter("read_signal: bad header: " + std::string(e.what()));
  }
  if (header.value("format", "") != "warptf-signal")
    throw invalid_parameter("read_signal: not a warptf-signal file");
  if (header.value("dtype", "") != "complex128-le")
    throw invalid_parameter("read_signal: unsupported dtype");
  SampledSignal sig;
  size_t expected = 1;
  for (const json& ax : header.at("axes")) {
    AxisGrid g;
    g.n = ax.at("n").get<int>();
    g.extent = ax.at("extent").get<double>();
    if (g.n <= 0 || !(g.extent > 0)) throw invalid_parameter("read_signal: bad axis");
    expected *= size_t(g.n);
    sig.freq.push_back(g);
  }
  const size_t count = header.at("count").get<size_t>();
  if (sig.freq.empty() || count != expected)
    throw invalid_parameter("read_signal: header count does not match axes");
  sig.fhat.resize(count);
  in.read(reinterpret_cast<char*>(sig.fhat.data()), std::streamsize(count * sizeof(cd)));
  if (size_t(in.gcount()) != count * sizeof(cd))
    throw invalid_parameter("read_signal: truncated payload");
  return sig;
}

}  // namespace warptf
