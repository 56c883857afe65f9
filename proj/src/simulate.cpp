#include "phasest/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace phasest {

std::vector<double> tabulate_cdf(const PhaseState& state) {
  const std::size_t n = kCdfGrid;
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<double> dens(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    dens[i] = std::norm(fourier_eval(state, h * static_cast<double>(i))) / kTwoPi;
  }
  std::vector<double> cdf(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) cdf[i] = cdf[i - 1] + 0.5 * h * (dens[i - 1] + dens[i]);
  return cdf;
}

SampleRun sample_estimates(const PhaseState& state, double theta_true, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_estimates: n must be >= 1");
  const auto cdf = tabulate_cdf(state);
  const double total = cdf.back();
  const double h = kTwoPi / static_cast<double>(kCdfGrid);

  std::mt19937_64 gen(seed);
  SampleRun run{seed, theta_true, n, {}};
  run.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
    // first cell [k, k+1] with cdf[k+1] > u
    auto it = std::upper_bound(cdf.begin() + 1, cdf.end(), u);
    if (it == cdf.end()) --it;
    const auto k = static_cast<std::size_t>(std::distance(cdf.begin(), it)) - 1;
    const double width = cdf[k + 1] - cdf[k];
    const double frac = width > 0.0 ? (u - cdf[k]) / width : 0.0;
    const double delta = h * (static_cast<double>(k) + std::clamp(frac, 0.0, 1.0));
    run.samples.push_back(wrap_positive(theta_true + delta));
  }
  return run;
}

EmpiricalRisk empirical_risk(const SampleRun& run, const ErrorFunction& err) {
  if (run.samples.empty()) throw std::invalid_argument("empirical_risk: empty run");
  const auto n = static_cast<double>(run.samples.size());
  double mean = 0.0, m2 = 0.0;
  std::size_t count = 0;
  for (double x : run.samples) {
    const double v = err.value(x - run.theta_true);
    ++count;
    const double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  const double var = count > 1 ? m2 / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

void write_samples(const std::filesystem::path& path, const std::vector<double>& samples, SampleFormat fmt) {
  if (fmt == SampleFormat::Binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_samples: cannot open " + path.string());
    for (double x : samples) {
      auto bits = std::bit_cast<std::uint64_t>(x);
      unsigned char bytes[8];
      for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xFF);
      out.write(reinterpret_cast<const char*>(bytes), 8);
    }
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_samples: cannot open " + path.string());
  out << std::setprecision(17);
  for (double x : samples) out << x << '\n';
}

std::vector<double> read_samples(const std::filesystem::path& path, SampleFormat fmt) {
  std::vector<double> out;
  if (fmt == SampleFormat::Binary) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_samples: cannot open " + path.string());
    unsigned char bytes[8];
    while (in.read(reinterpret_cast<char*>(bytes), 8)) {
      std::uint64_t bits = 0;
      for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
      out.push_back(std::bit_cast<double>(bits));
    }
    return out;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_samples: cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(std::stod(line));
  }
  return out;
}

}  // namespace phasest
