#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fishfinder/types.hpp"

namespace fishfinder {

// Oscillation-feature thresholds. Negative values mean "adaptive": the
// per-channel standard deviation of the preprocessed segment times the
// stated multiple. Absolute device values can be pinned instead by
// setting the fields.
struct ProposedFeatureConfig {
  double active_threshold = -1.0;  // adaptive default: 1.0 * channel sd
  double big_amplitude = -1.0;     // adaptive default: 2.0 * channel sd

  double resolve_active(double channel_sd) const {
    return active_threshold >= 0.0 ? active_threshold : channel_sd;
  }
  double resolve_big(double channel_sd) const {
    return big_amplitude >= 0.0 ? big_amplitude : 2.0 * channel_sd;
  }
};

// Canonical manifest: 41 time-domain + 36 frequency-domain + 14 proposed.
inline constexpr int kMovementFeatureCount = 91;
inline constexpr const char* kManifestVersion = "ff-movement-1";

struct ManifestEntry {
  int index;
  std::string name;
  std::string group;  // time / frequency / proposed
};

const std::vector<ManifestEntry>& movement_manifest();
int movement_feature_index(const std::string& name);  // -1 when unknown

struct MovementFeatureVector {
  std::array<double, kMovementFeatureCount> values{};
};

// Drops the first 15 s and last 60 s (375 + 1500 samples at 25 Hz), then
// keeps the second half of what remains (indices >= floor(n/2)).
// Timestamps are preserved. Throws TooShortError when the stream does not
// outlast the trimmed 75 s.
ImuStream preprocess(const ImuStream& imu);

// The three groups, each in manifest order. These operate on an already
// preprocessed stream.
std::vector<double> time_domain_features(const ImuStream& stream);
std::vector<double> freq_domain_features(const ImuStream& stream);
std::vector<double> proposed_features(const ImuStream& stream,
                                      const ProposedFeatureConfig& config = {});

// preprocess + all three groups concatenated
MovementFeatureVector extract_movement_features(const ImuStream& imu,
                                                const ProposedFeatureConfig& config = {});

// Spectral summary used by the frequency group: the five largest-magnitude
// positive-frequency bins (descending, ties to the lower bin), amplitudes
// |X_k|/N, and energy = sum((x-mean)^2)/N.
struct SpectralSummary {
  std::array<double, 5> dominant_freq_hz{};
  std::array<double, 5> dominant_amp{};
  double energy = 0.0;
};
SpectralSummary spectral_summary(std::span<const double> signal, double rate_hz);

// Count of full oscillation cycles (pairs of consecutive mean-crossing
// humps, signal boundaries included) whose max-min span exceeds
// big_amplitude.
int big_oscillation_count(std::span<const double> signal, double big_amplitude);

}  // namespace fishfinder
