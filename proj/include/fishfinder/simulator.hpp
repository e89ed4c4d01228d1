#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>

#include "fishfinder/types.hpp"

namespace fishfinder {

// Behavioral profile for the session generator. Probabilities are per
// trial; RTs come from a lognormal with the given mean/sd (ms) plus a
// linear fatigue drift; movement is baseline Gaussian sensor noise with
// superposed damped-sinusoid bursts arriving as a Poisson process whose
// rate is multiplied by second_half_burst_gain past the session midpoint.
struct SubjectProfile {
  double omission_p = 0.05;        // P(miss a target)
  double commission_p = 0.05;      // P(release a non-target)
  double rt_mean_ms = 550.0;
  double rt_sd_ms = 120.0;
  double fatigue_slope = 10.0;     // ms added per 100 trials
  double anticipatory_p = 0.02;    // P(a given response lands < 100 ms)
  double imu_noise_sd = 0.02;      // device units
  double burst_rate_hz = 0.3;
  double burst_amp = 5.0;          // burst amplitude in units of imu_noise_sd
  double second_half_burst_gain = 1.2;

  bool operator==(const SubjectProfile&) const = default;
};

// Shipped profiles, calibrated so the default 26/26 cohort reproduces the
// documented pipeline targets. Treat as starting points, not norms.
SubjectProfile default_adhd_profile();
SubjectProfile default_control_profile();

// Plain key/value file, '#' comments, keys like "adhd.omission_p" and
// "control.burst_rate_hz". Unlisted keys keep the shipped defaults.
std::pair<SubjectProfile, SubjectProfile> load_profiles(const std::filesystem::path& path);

Session simulate_session(const SubjectProfile& profile, const StimulusSchedule& schedule,
                         std::uint64_t seed);

// n_adhd + n_control labeled sessions with unique subject ids. Each subject
// gets its own schedule and profile jittered by +-10% uniform; per-subject
// seeds come from derive_seed(seed, subject_index).
Dataset make_cohort(int n_adhd, int n_control, const SubjectProfile& adhd_profile,
                    const SubjectProfile& control_profile, std::uint64_t seed,
                    const ProtocolConfig& protocol = {});

}  // namespace fishfinder
