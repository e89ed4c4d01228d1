#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fishfinder {

enum class Section {
  InitialVisual,
  InitialAuditory,
  Practice,
  Main,
  FinalVisual,
  FinalAuditory,
};

enum class Modality { Visual, Auditory };

enum class StimulusKind { Target, NonTarget };  // Target = fish, NonTarget = shark

enum class Label { ADHD, Control };

const char* to_string(Section s);
const char* to_string(Modality m);
const char* to_string(StimulusKind k);
const char* to_string(Label l);

std::optional<Section> section_from_string(const std::string& s);
std::optional<Modality> modality_from_string(const std::string& s);
std::optional<StimulusKind> kind_from_string(const std::string& s);
std::optional<Label> label_from_string(const std::string& s);

struct StimulusEvent {
  Section section = Section::Main;
  int part = 0;  // 1..8 for Main, 0 elsewhere
  int index = 0; // 0-based position within the section
  Modality modality = Modality::Visual;
  StimulusKind kind = StimulusKind::Target;
  double onset_s = 0.0;

  bool operator==(const StimulusEvent&) const = default;
};

struct TrialRecord {
  StimulusEvent stimulus;
  bool responded = false;
  std::optional<double> rt_ms;  // present iff responded

  bool operator==(const TrialRecord&) const = default;
};

// correct = released a fish, or withheld on a shark
inline bool is_correct(const TrialRecord& t) {
  return (t.stimulus.kind == StimulusKind::Target) == t.responded;
}

inline bool is_omission(const TrialRecord& t) {
  return t.stimulus.kind == StimulusKind::Target && !t.responded;
}

inline bool is_commission(const TrialRecord& t) {
  return t.stimulus.kind == StimulusKind::NonTarget && t.responded;
}

struct ImuSample {
  double t_s = 0.0;
  double ax = 0.0, ay = 0.0, az = 0.0;
  double gx = 0.0, gy = 0.0, gz = 0.0;

  bool operator==(const ImuSample&) const = default;
};

inline constexpr int kImuRateHz = 25;
inline constexpr double kImuDt = 1.0 / 25.0;

enum class ImuChannel { Ax, Ay, Az, Gx, Gy, Gz, AccelAmp, GyroAmp };

struct ImuStream {
  int rate_hz = kImuRateHz;
  std::vector<ImuSample> samples;

  bool operator==(const ImuStream&) const = default;

  double duration_s() const {
    return static_cast<double>(samples.size()) / static_cast<double>(rate_hz);
  }

  // raw axis, or the per-sample vector magnitude for the Amp channels
  std::vector<double> channel(ImuChannel c) const;
};

struct ProtocolConfig {
  std::uint64_t seed = 0;
  double isi_ms = 1500.0;
  double stimulus_duration_ms = 1500.0;
  int practice_target_count = 24;  // of 32 practice trials

  bool operator==(const ProtocolConfig&) const = default;

  double trial_slot_s() const { return (isi_ms + stimulus_duration_ms) / 1000.0; }
};

struct StimulusSchedule {
  std::vector<StimulusEvent> events;
  ProtocolConfig config;

  bool operator==(const StimulusSchedule&) const = default;

  // end of the last trial's slot; the simulator spans the IMU to here
  double duration_s() const {
    if (events.empty()) return 0.0;
    return events.back().onset_s + config.trial_slot_s();
  }
};

struct Session {
  std::string subject_id;
  std::optional<Label> label;
  StimulusSchedule schedule;
  std::vector<TrialRecord> trials;  // aligned 1:1 with schedule.events
  ImuStream imu;
  std::map<std::string, std::string> meta;

  bool operator==(const Session&) const = default;
};

struct Dataset {
  std::vector<Session> sessions;
};

// Confusion counts plus the five derived metrics. A metric with a zero
// denominator is left unset rather than propagated as NaN.
struct EvalReport {
  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::optional<double> accuracy, sensitivity, specificity, precision, f1;

  static EvalReport from_counts(std::int64_t tp, std::int64_t fp,
                                std::int64_t tn, std::int64_t fn) {
    EvalReport r;
    r.tp = tp;
    r.fp = fp;
    r.tn = tn;
    r.fn = fn;
    const auto ratio = [](std::int64_t num, std::int64_t den) -> std::optional<double> {
      if (den == 0) return std::nullopt;
      return static_cast<double>(num) / static_cast<double>(den);
    };
    r.accuracy = ratio(tp + tn, tp + tn + fp + fn);
    r.sensitivity = ratio(tp, tp + fn);
    r.specificity = ratio(tn, tn + fp);
    r.precision = ratio(tp, tp + fp);
    r.f1 = ratio(2 * tp, 2 * tp + fp + fn);
    return r;
  }
};

}  // namespace fishfinder
