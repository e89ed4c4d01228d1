#include "fishfinder/validate.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace fishfinder {

namespace {

void add(std::vector<Violation>& out, std::string invariant, std::string detail,
         std::optional<std::size_t> index = std::nullopt) {
  out.push_back({std::move(invariant), std::move(detail), index});
}

}  // namespace

std::vector<Violation> validate_schedule(const StimulusSchedule& schedule) {
  std::vector<Violation> out;
  double prev_onset = -1.0;
  for (std::size_t i = 0; i < schedule.events.size(); ++i) {
    const StimulusEvent& e = schedule.events[i];
    if (e.onset_s <= prev_onset) {
      add(out, "onset_strictly_increasing",
          "onset_s " + std::to_string(e.onset_s) + " does not increase", i);
    }
    prev_onset = e.onset_s;
    const bool in_main = e.section == Section::Main;
    const bool part_ok = in_main ? (e.part >= 1 && e.part <= 8) : (e.part == 0);
    if (!part_ok) {
      add(out, "part_range",
          std::string("part ") + std::to_string(e.part) + " invalid for section " +
              to_string(e.section),
          i);
    }
  }
  if (schedule.config.isi_ms <= 0.0 || schedule.config.stimulus_duration_ms <= 0.0) {
    add(out, "config_intervals_positive", "isi_ms and stimulus_duration_ms must be > 0");
  }
  if (schedule.config.practice_target_count < 0 || schedule.config.practice_target_count > 32) {
    add(out, "practice_target_count_range",
        std::to_string(schedule.config.practice_target_count) + " outside [0,32]");
  }
  return out;
}

std::vector<Violation> validate_session(const Session& s) {
  std::vector<Violation> out = validate_schedule(s.schedule);

  if (s.trials.size() != s.schedule.events.size()) {
    add(out, "trial_schedule_alignment",
        std::to_string(s.trials.size()) + " trials vs " +
            std::to_string(s.schedule.events.size()) + " scheduled events");
  }

  const std::size_t n = std::min(s.trials.size(), s.schedule.events.size());
  for (std::size_t i = 0; i < n; ++i) {
    const TrialRecord& t = s.trials[i];
    if (!(t.stimulus == s.schedule.events[i])) {
      add(out, "trial_references_schedule_event", "trial stimulus differs from schedule", i);
    }
    if (t.responded != t.rt_ms.has_value()) {
      add(out, "rt_present_iff_responded",
          t.responded ? "responded without rt_ms" : "rt_ms without response", i);
    }
    if (t.rt_ms && *t.rt_ms <= 0.0) {
      add(out, "rt_positive", "rt_ms = " + std::to_string(*t.rt_ms), i);
    }
  }

  if (s.imu.rate_hz != kImuRateHz) {
    add(out, "imu_rate_25hz", "rate_hz = " + std::to_string(s.imu.rate_hz));
  }
  constexpr double kSpacingTol = 1e-6;
  for (std::size_t i = 0; i < s.imu.samples.size(); ++i) {
    const double t = s.imu.samples[i].t_s;
    if (i == 0) {
      if (t < 0.0) add(out, "imu_t_nonnegative", "t_s = " + std::to_string(t), i);
    } else {
      const double dt = t - s.imu.samples[i - 1].t_s;
      if (std::abs(dt - kImuDt) > kSpacingTol) {
        add(out, "imu_nominal_spacing",
            "dt = " + std::to_string(dt) + " at sample " + std::to_string(i), i);
        break;  // one report per stream is enough
      }
    }
  }

  return out;
}

std::vector<Violation> validate_dataset(const Dataset& d) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < d.sessions.size(); ++i) {
    const Session& s = d.sessions[i];
    if (!s.label) {
      add(out, "dataset_all_labeled", "session " + s.subject_id + " unlabeled", i);
    }
    if (!ids.insert(s.subject_id).second) {
      add(out, "subject_ids_unique", "duplicate subject_id " + s.subject_id, i);
    }
    for (Violation& v : validate_session(s)) {
      v.detail = s.subject_id + ": " + v.detail;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string format_violations(const std::vector<Violation>& v) {
  std::ostringstream os;
  for (const Violation& x : v) {
    os << x.invariant;
    if (x.index) os << " @" << *x.index;
    os << ": " << x.detail << "\n";
  }
  return os.str();
}

}  // namespace fishfinder
