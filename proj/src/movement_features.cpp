#include "fishfinder/movement_features.hpp"

#include <algorithm>
#include <cmath>

#include "fishfinder/errors.hpp"
#include "fishfinder/fft.hpp"
#include "fishfinder/stats.hpp"

namespace fishfinder {

namespace {

constexpr int kTrimFrontSamples = 375;   // 15 s at 25 Hz
constexpr int kTrimBackSamples = 1500;   // 60 s at 25 Hz

constexpr const char* kAxisNames[3] = {"x", "y", "z"};

std::vector<double> abs_values(std::span<const double> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
  return out;
}

}  // namespace

const std::vector<ManifestEntry>& movement_manifest() {
  static const std::vector<ManifestEntry> entries = [] {
    std::vector<ManifestEntry> v;
    int idx = 0;
    const auto add = [&](const std::string& name, const char* group) {
      v.push_back({idx++, name, group});
    };

    for (const char* axis : kAxisNames) {
      for (const char* stat :
           {"variance", "mean", "max", "min", "range", "median", "sum", "skewness"}) {
        add(std::string("accel_") + axis + "_" + stat, "time");
      }
    }
    for (const char* axis : kAxisNames) {
      for (const char* stat : {"amplitude", "mean_abs", "sd_abs"}) {
        add(std::string("gyro_") + axis + "_" + stat, "time");
      }
    }
    for (const char* sensor : {"accel", "gyro"}) {
      for (const char* axis : {"x", "y", "z", "amp"}) {
        add(std::string(sensor) + "_" + axis + "_sd", "time");
      }
    }

    for (const char* axis : kAxisNames) {
      for (int k = 1; k <= 5; ++k)
        add(std::string("accel_") + axis + "_freq" + std::to_string(k), "frequency");
      for (int k = 1; k <= 5; ++k)
        add(std::string("accel_") + axis + "_fftamp" + std::to_string(k), "frequency");
      add(std::string("accel_") + axis + "_energy", "frequency");
    }
    add("accel_corr_xy", "frequency");
    add("accel_corr_xz", "frequency");
    add("accel_corr_yz", "frequency");

    for (const char* axis : kAxisNames) add(std::string("gyro_") + axis + "_active", "proposed");
    for (const char* axis : kAxisNames) add(std::string("gyro_") + axis + "_inactive", "proposed");
    for (const char* axis : {"x", "y", "z", "amp"})
      add(std::string("gyro_") + axis + "_big", "proposed");
    add("active_max", "proposed");
    add("active_mean", "proposed");
    add("big_max", "proposed");
    add("big_mean", "proposed");
    return v;
  }();
  return entries;
}

int movement_feature_index(const std::string& name) {
  for (const ManifestEntry& e : movement_manifest()) {
    if (e.name == name) return e.index;
  }
  return -1;
}

ImuStream preprocess(const ImuStream& imu) {
  const std::size_t n = imu.samples.size();
  if (n <= static_cast<std::size_t>(kTrimFrontSamples + kTrimBackSamples)) {
    throw TooShortError("IMU stream of " + std::to_string(n) +
                        " samples does not outlast the 75 s trim");
  }
  const std::size_t trimmed = n - kTrimFrontSamples - kTrimBackSamples;
  const std::size_t half_start = trimmed / 2;

  ImuStream out;
  out.rate_hz = imu.rate_hz;
  out.samples.assign(imu.samples.begin() + kTrimFrontSamples + half_start,
                     imu.samples.begin() + kTrimFrontSamples + trimmed);
  return out;
}

std::vector<double> time_domain_features(const ImuStream& stream) {
  std::vector<double> out;
  out.reserve(41);

  const std::vector<double> accel[3] = {stream.channel(ImuChannel::Ax),
                                        stream.channel(ImuChannel::Ay),
                                        stream.channel(ImuChannel::Az)};
  const std::vector<double> gyro[3] = {stream.channel(ImuChannel::Gx),
                                       stream.channel(ImuChannel::Gy),
                                       stream.channel(ImuChannel::Gz)};

  for (const std::vector<double>& ch : accel) {
    const double mx = stats::max_value(ch);
    const double mn = stats::min_value(ch);
    out.push_back(stats::variance(ch));
    out.push_back(stats::mean(ch));
    out.push_back(mx);
    out.push_back(mn);
    out.push_back(mx - mn);
    out.push_back(stats::median(ch));
    out.push_back(stats::sum(ch));
    out.push_back(stats::skewness(ch));
  }

  for (const std::vector<double>& ch : gyro) {
    const std::vector<double> a = abs_values(ch);
    out.push_back(stats::max_value(ch) - stats::min_value(ch));  // amplitude summary
    out.push_back(stats::mean(a));
    out.push_back(stats::sd(a));
  }

  for (ImuChannel c : {ImuChannel::Ax, ImuChannel::Ay, ImuChannel::Az, ImuChannel::AccelAmp,
                       ImuChannel::Gx, ImuChannel::Gy, ImuChannel::Gz, ImuChannel::GyroAmp}) {
    out.push_back(stats::sd(stream.channel(c)));
  }
  return out;
}

SpectralSummary spectral_summary(std::span<const double> signal, double rate_hz) {
  SpectralSummary s;
  const std::size_t n = signal.size();
  if (n == 0) return s;

  const double m = stats::mean(signal);
  std::vector<double> centered(n);
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    centered[i] = signal[i] - m;
    energy += centered[i] * centered[i];
  }
  s.energy = energy / static_cast<double>(n);

  const std::vector<double> mag = dft_magnitudes(centered);
  const std::size_t top_bin = n / 2;  // Nyquist included for even n
  std::vector<std::size_t> bins;
  bins.reserve(top_bin);
  for (std::size_t k = 1; k <= top_bin && k < n; ++k) bins.push_back(k);
  std::stable_sort(bins.begin(), bins.end(),
                   [&](std::size_t a, std::size_t b) { return mag[a] > mag[b]; });

  for (std::size_t r = 0; r < 5 && r < bins.size(); ++r) {
    const std::size_t k = bins[r];
    s.dominant_freq_hz[r] = static_cast<double>(k) * rate_hz / static_cast<double>(n);
    s.dominant_amp[r] = mag[k] / static_cast<double>(n);
  }
  return s;
}

std::vector<double> freq_domain_features(const ImuStream& stream) {
  std::vector<double> out;
  out.reserve(36);

  const std::vector<double> accel[3] = {stream.channel(ImuChannel::Ax),
                                        stream.channel(ImuChannel::Ay),
                                        stream.channel(ImuChannel::Az)};
  for (const std::vector<double>& ch : accel) {
    const SpectralSummary s = spectral_summary(ch, static_cast<double>(stream.rate_hz));
    for (double f : s.dominant_freq_hz) out.push_back(f);
    for (double a : s.dominant_amp) out.push_back(a);
    out.push_back(s.energy);
  }

  out.push_back(stats::pearson(accel[0], accel[1]));
  out.push_back(stats::pearson(accel[0], accel[2]));
  out.push_back(stats::pearson(accel[1], accel[2]));
  return out;
}

int big_oscillation_count(std::span<const double> signal, double big_amplitude) {
  const std::size_t n = signal.size();
  if (n < 2) return 0;
  const double m = stats::mean(signal);

  // hump boundaries: signal start, every mean crossing, signal end
  std::vector<std::size_t> bounds;
  bounds.push_back(0);
  for (std::size_t i = 1; i < n; ++i) {
    const bool prev_side = signal[i - 1] >= m;
    const bool side = signal[i] >= m;
    if (side != prev_side) bounds.push_back(i);
  }
  bounds.push_back(n);
  const std::size_t humps = bounds.size() - 1;

  // A cycle pairs two adjacent humps. Count qualifying adjacent pairs and
  // halve (rounding up): k full cycles give 2k humps and 2k-1 qualifying
  // pairs, and the count is symmetric under time reversal.
  std::size_t qualifying = 0;
  for (std::size_t h = 0; h + 1 < humps; ++h) {
    const std::size_t lo = bounds[h];
    const std::size_t hi = bounds[h + 2];
    double mx = signal[lo], mn = signal[lo];
    for (std::size_t i = lo; i < hi; ++i) {
      mx = std::max(mx, signal[i]);
      mn = std::min(mn, signal[i]);
    }
    if (mx - mn > big_amplitude) ++qualifying;
  }
  return static_cast<int>((qualifying + 1) / 2);
}

std::vector<double> proposed_features(const ImuStream& stream,
                                      const ProposedFeatureConfig& config) {
  std::vector<double> out;
  out.reserve(14);

  const std::vector<double> gyro[3] = {stream.channel(ImuChannel::Gx),
                                       stream.channel(ImuChannel::Gy),
                                       stream.channel(ImuChannel::Gz)};
  const std::vector<double> gyro_amp = stream.channel(ImuChannel::GyroAmp);

  double active[3] = {0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    const double threshold = config.resolve_active(stats::sd(gyro[a]));
    std::size_t above = 0;
    for (double v : gyro[a]) {
      if (std::abs(v) > threshold) ++above;
    }
    active[a] = gyro[a].empty()
                    ? 0.0
                    : 100.0 * static_cast<double>(above) / static_cast<double>(gyro[a].size());
    out.push_back(active[a]);
  }
  // exact complement, so Active + Inactive == 100 by construction
  for (int a = 0; a < 3; ++a) out.push_back(100.0 - active[a]);

  double big[4] = {0.0, 0.0, 0.0, 0.0};
  const std::vector<double>* big_channels[4] = {&gyro[0], &gyro[1], &gyro[2], &gyro_amp};
  for (int c = 0; c < 4; ++c) {
    const double amp = config.resolve_big(stats::sd(*big_channels[c]));
    big[c] = big_oscillation_count(*big_channels[c], amp);
    out.push_back(big[c]);
  }

  out.push_back(*std::max_element(active, active + 3));
  out.push_back((active[0] + active[1] + active[2]) / 3.0);
  out.push_back(*std::max_element(big, big + 4));
  out.push_back((big[0] + big[1] + big[2] + big[3]) / 4.0);
  return out;
}

MovementFeatureVector extract_movement_features(const ImuStream& imu,
                                                const ProposedFeatureConfig& config) {
  const ImuStream stream = preprocess(imu);
  MovementFeatureVector out;
  std::size_t i = 0;
  for (double v : time_domain_features(stream)) out.values[i++] = v;
  for (double v : freq_domain_features(stream)) out.values[i++] = v;
  for (double v : proposed_features(stream, config)) out.values[i++] = v;
  return out;
}

}  // namespace fishfinder
