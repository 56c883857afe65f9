#pragma once

// Monte Carlo draws from the covariant-measurement outcome density.
//
// Generator contract: std::mt19937_64 seeded with the 64-bit seed; each
// uniform is (x >> 11) * 2^-53 for one 64-bit output x. The sample is
// theta_true + CDF^{-1}(u) wrapped to [0, 2pi), where the CDF of
// |F[phi](delta)|^2 / 2pi on [0, 2pi) is tabulated by the trapezoid rule on
// kCdfGrid cells and inverted by linear interpolation.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "phasest/core.hpp"

namespace phasest {

inline constexpr std::size_t kCdfGrid = std::size_t{1} << 14;

struct SampleRun {
  std::uint64_t seed;
  double theta_true;
  std::size_t n_samples;
  std::vector<double> samples;  // in [0, 2pi)
};

struct EmpiricalRisk {
  double mean;
  double std_error;
};

/// CDF at delta_i = 2pi i / kCdfGrid, i = 0..kCdfGrid (kCdfGrid + 1 values).
std::vector<double> tabulate_cdf(const PhaseState& state);

/// Throws std::invalid_argument on n < 1.
SampleRun sample_estimates(const PhaseState& state, double theta_true, std::size_t n, std::uint64_t seed);

/// Mean and standard error of R(theta_true, theta_hat_i).
EmpiricalRisk empirical_risk(const SampleRun& run, const ErrorFunction& err);

enum class SampleFormat { Binary, Csv };

/// Little-endian float64 (Binary) or one value per line with 17 significant
/// digits (Csv).
void write_samples(const std::filesystem::path& path, const std::vector<double>& samples, SampleFormat fmt);
std::vector<double> read_samples(const std::filesystem::path& path, SampleFormat fmt);

}  // namespace phasest
