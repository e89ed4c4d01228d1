#include "fishfinder/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fishfinder/errors.hpp"
#include "fishfinder/protocol.hpp"
#include "fishfinder/rng.hpp"

namespace fishfinder {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Burst {
  double t0;
  double freq_hz;
  double tau_s;
  double amp;
  double channel_coef[6];
  double channel_phase[6];
};

void draw_bursts(Rng& rng, double t_lo, double t_hi, double rate_hz, double amp_units,
                 std::vector<Burst>& out) {
  const double span = t_hi - t_lo;
  if (span <= 0.0 || rate_hz <= 0.0) return;
  const std::uint64_t count = rng.poisson(rate_hz * span);
  for (std::uint64_t k = 0; k < count; ++k) {
    Burst b;
    b.t0 = rng.uniform(t_lo, t_hi);
    b.freq_hz = rng.uniform(1.5, 6.0);
    b.tau_s = rng.uniform(0.15, 0.5);
    b.amp = amp_units * rng.uniform(0.6, 1.4);
    for (int c = 0; c < 6; ++c) {
      b.channel_coef[c] = rng.uniform(0.3, 1.0) * (rng.coin() ? 1.0 : -1.0);
      b.channel_phase[c] = rng.uniform(0.0, kTwoPi);
    }
    out.push_back(b);
  }
}

ImuStream generate_imu(Rng& rng, const SubjectProfile& p, double duration_s) {
  ImuStream imu;
  const std::size_t n = static_cast<std::size_t>(
      std::ceil(duration_s * static_cast<double>(kImuRateHz)));
  imu.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ImuSample& s = imu.samples[i];
    s.t_s = static_cast<double>(i) * kImuDt;
    s.ax = rng.normal(0.0, p.imu_noise_sd);
    s.ay = rng.normal(0.0, p.imu_noise_sd);
    s.az = rng.normal(0.0, p.imu_noise_sd);
    s.gx = rng.normal(0.0, p.imu_noise_sd);
    s.gy = rng.normal(0.0, p.imu_noise_sd);
    s.gz = rng.normal(0.0, p.imu_noise_sd);
  }

  const double half = duration_s / 2.0;
  const double amp_units = p.burst_amp * p.imu_noise_sd;
  std::vector<Burst> bursts;
  draw_bursts(rng, 0.0, half, p.burst_rate_hz, amp_units, bursts);
  draw_bursts(rng, half, duration_s, p.burst_rate_hz * p.second_half_burst_gain, amp_units,
              bursts);

  for (const Burst& b : bursts) {
    const double t_end = b.t0 + 5.0 * b.tau_s;
    const std::size_t i_lo = static_cast<std::size_t>(
        std::max(0.0, std::ceil(b.t0 / kImuDt)));
    const std::size_t i_hi = std::min(n, static_cast<std::size_t>(
                                             std::max(0.0, std::ceil(t_end / kImuDt))));
    for (std::size_t i = i_lo; i < i_hi; ++i) {
      const double dt = static_cast<double>(i) * kImuDt - b.t0;
      const double envelope = b.amp * std::exp(-dt / b.tau_s);
      ImuSample& s = imu.samples[i];
      double* ch[6] = {&s.ax, &s.ay, &s.az, &s.gx, &s.gy, &s.gz};
      for (int c = 0; c < 6; ++c) {
        *ch[c] += b.channel_coef[c] * envelope *
                  std::sin(kTwoPi * b.freq_hz * dt + b.channel_phase[c]);
      }
    }
  }
  return imu;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

SubjectProfile jitter_profile(const SubjectProfile& base, Rng& rng) {
  const auto j = [&](double v) { return v * (1.0 + rng.uniform(-0.1, 0.1)); };
  SubjectProfile p;
  p.omission_p = clamp01(j(base.omission_p));
  p.commission_p = clamp01(j(base.commission_p));
  p.rt_mean_ms = j(base.rt_mean_ms);
  p.rt_sd_ms = j(base.rt_sd_ms);
  p.fatigue_slope = j(base.fatigue_slope);
  p.anticipatory_p = clamp01(j(base.anticipatory_p));
  p.imu_noise_sd = j(base.imu_noise_sd);
  p.burst_rate_hz = j(base.burst_rate_hz);
  p.burst_amp = j(base.burst_amp);
  p.second_half_burst_gain = j(base.second_half_burst_gain);
  return p;
}

}  // namespace

SubjectProfile default_adhd_profile() {
  SubjectProfile p;
  p.omission_p = 0.24;
  p.commission_p = 0.26;
  p.rt_mean_ms = 680.0;
  p.rt_sd_ms = 270.0;
  p.fatigue_slope = 36.0;
  p.anticipatory_p = 0.06;
  p.imu_noise_sd = 0.02;
  p.burst_rate_hz = 0.55;
  p.burst_amp = 6.0;
  p.second_half_burst_gain = 2.0;
  return p;
}

SubjectProfile default_control_profile() {
  SubjectProfile p;
  p.omission_p = 0.06;
  p.commission_p = 0.07;
  p.rt_mean_ms = 520.0;
  p.rt_sd_ms = 115.0;
  p.fatigue_slope = 8.0;
  p.anticipatory_p = 0.01;
  p.imu_noise_sd = 0.02;
  p.burst_rate_hz = 0.32;
  p.burst_amp = 5.0;
  p.second_half_burst_gain = 1.25;
  return p;
}

std::pair<SubjectProfile, SubjectProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open profile file: " + path.string());
  SubjectProfile adhd = default_adhd_profile();
  SubjectProfile control = default_control_profile();

  const auto apply = [](SubjectProfile& p, const std::string& key, double v,
                        const std::string& where) {
    if (key == "omission_p") p.omission_p = v;
    else if (key == "commission_p") p.commission_p = v;
    else if (key == "rt_mean_ms") p.rt_mean_ms = v;
    else if (key == "rt_sd_ms") p.rt_sd_ms = v;
    else if (key == "fatigue_slope") p.fatigue_slope = v;
    else if (key == "anticipatory_p") p.anticipatory_p = v;
    else if (key == "imu_noise_sd") p.imu_noise_sd = v;
    else if (key == "burst_rate_hz") p.burst_rate_hz = v;
    else if (key == "burst_amp") p.burst_amp = v;
    else if (key == "second_half_burst_gain") p.second_half_burst_gain = v;
    else throw ParseError(where + ": unknown profile key '" + key + "'");
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;  // blank
    if (!(ls >> eq >> value) || eq != "=") {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'group.key = value'");
    }
    const std::size_t dot = key.find('.');
    if (dot == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": key must be adhd.<field> or control.<field>");
    }
    const std::string group = key.substr(0, dot);
    const std::string field = key.substr(dot + 1);
    double v = 0.0;
    try {
      v = std::stod(value);
    } catch (const std::exception&) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad value '" +
                       value + "'");
    }
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (group == "adhd") apply(adhd, field, v, where);
    else if (group == "control") apply(control, field, v, where);
    else throw ParseError(where + ": unknown group '" + group + "'");
  }
  return {adhd, control};
}

Session simulate_session(const SubjectProfile& profile, const StimulusSchedule& schedule,
                         std::uint64_t seed) {
  Rng rng(seed);
  Session s;
  s.schedule = schedule;
  s.trials.reserve(schedule.events.size());

  int global = 0;
  for (const StimulusEvent& e : schedule.events) {
    TrialRecord t;
    t.stimulus = e;
    const bool respond = (e.kind == StimulusKind::Target) ? !rng.coin(profile.omission_p)
                                                          : rng.coin(profile.commission_p);
    t.responded = respond;
    if (respond) {
      if (rng.coin(profile.anticipatory_p)) {
        t.rt_ms = rng.uniform(40.0, 100.0);
      } else {
        const double fatigued_mean =
            profile.rt_mean_ms + profile.fatigue_slope * (static_cast<double>(global) / 100.0);
        t.rt_ms = rng.lognormal_mean_sd(std::max(fatigued_mean, 1.0),
                                        std::max(profile.rt_sd_ms, 1e-6));
      }
    }
    s.trials.push_back(std::move(t));
    ++global;
  }

  s.imu = generate_imu(rng, profile, schedule.duration_s());
  return s;
}

Dataset make_cohort(int n_adhd, int n_control, const SubjectProfile& adhd_profile,
                    const SubjectProfile& control_profile, std::uint64_t seed,
                    const ProtocolConfig& protocol) {
  Dataset d;
  d.sessions.reserve(static_cast<std::size_t>(n_adhd + n_control));
  const int total = n_adhd + n_control;
  for (int i = 0; i < total; ++i) {
    const bool adhd = i < n_adhd;
    const std::uint64_t subject_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    Rng meta_rng(derive_seed(subject_seed, 0x6d657461));

    ProtocolConfig cfg = protocol;
    cfg.seed = derive_seed(subject_seed, 0x5c4ed);
    const StimulusSchedule schedule = build_schedule(cfg);

    const SubjectProfile base = adhd ? adhd_profile : control_profile;
    const SubjectProfile jittered = jitter_profile(base, meta_rng);

    Session s = simulate_session(jittered, schedule, derive_seed(subject_seed, 0x5e55));

    char id[32];
    std::snprintf(id, sizeof(id), "%s_%03d", adhd ? "adhd" : "ctrl",
                  adhd ? i + 1 : i - n_adhd + 1);
    s.subject_id = id;
    s.label = adhd ? Label::ADHD : Label::Control;
    s.meta["age"] = std::to_string(5 + static_cast<int>(meta_rng.uniform_below(8)));
    s.meta["gender"] = meta_rng.coin() ? "M" : "F";
    s.meta["sim_seed"] = std::to_string(subject_seed);
    d.sessions.push_back(std::move(s));
  }
  return d;
}

}  // namespace fishfinder
