#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fishfinder/ingame_features.hpp"
#include "fishfinder/protocol.hpp"
#include "fishfinder/rng.hpp"
#include "fishfinder/simulator.hpp"
#include "fishfinder/stats.hpp"

using namespace fishfinder;

namespace {

TrialRecord main_trial(StimulusKind kind, bool responded, double rt = 500.0, int part = 1,
                       Modality m = Modality::Visual) {
  TrialRecord t;
  t.stimulus.section = Section::Main;
  t.stimulus.part = part;
  t.stimulus.kind = kind;
  t.stimulus.modality = m;
  t.responded = responded;
  if (responded) t.rt_ms = rt;
  return t;
}

Session flawless_session(std::uint64_t seed) {
  ProtocolConfig cfg;
  cfg.seed = seed;
  Session s;
  s.schedule = build_schedule(cfg);
  for (const StimulusEvent& e : s.schedule.events) {
    TrialRecord t;
    t.stimulus = e;
    if (e.kind == StimulusKind::Target) {
      t.responded = true;
      t.rt_ms = 500.0;
    }
    s.trials.push_back(t);
  }
  return s;
}

}  // namespace

TEST_CASE("consistency: identical RTs have zero variation") {
  std::vector<TrialRecord> trials(5, main_trial(StimulusKind::Target, true, 500.0));
  CHECK(consistency(trials) == 0.0);
}

TEST_CASE("consistency: two RTs follow the hand-computed coefficient") {
  std::vector<TrialRecord> trials = {main_trial(StimulusKind::Target, true, 400.0),
                                     main_trial(StimulusKind::Target, true, 600.0)};
  // sd of {400,600} = sqrt(20000) = 141.42..., mean = 500
  CHECK(consistency(trials) == doctest::Approx(0.2828).epsilon(1e-3));
}

TEST_CASE("consistency: no correct responses degenerates to 0 with a flag") {
  std::vector<TrialRecord> trials = {main_trial(StimulusKind::Target, false)};
  bool degenerate = false;
  CHECK(consistency(trials, &degenerate) == 0.0);
  CHECK(degenerate);
}

TEST_CASE("stamina: identical halves cancel") {
  std::vector<TrialRecord> trials(400, main_trial(StimulusKind::Target, true, 500.0));
  CHECK(stamina(trials, Modality::Visual) == 0.0);
}

TEST_CASE("stamina: slowing by 120 ms across windows") {
  std::vector<TrialRecord> trials;
  for (int i = 0; i < 200; ++i) trials.push_back(main_trial(StimulusKind::Target, true, 500.0));
  for (int i = 0; i < 200; ++i) trials.push_back(main_trial(StimulusKind::Target, true, 620.0));
  CHECK(stamina(trials, Modality::Visual) == doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("stamina: empty last window raises the degeneracy flag") {
  std::vector<TrialRecord> trials;
  for (int i = 0; i < 200; ++i) trials.push_back(main_trial(StimulusKind::Target, true, 500.0));
  for (int i = 0; i < 200; ++i) trials.push_back(main_trial(StimulusKind::Target, false));
  bool degenerate = false;
  CHECK(stamina(trials, Modality::Visual, &degenerate) == 0.0);
  CHECK(degenerate);
}

TEST_CASE("vigilance: no omissions") {
  std::vector<TrialRecord> trials;
  for (int part = 1; part <= 8; ++part)
    trials.push_back(main_trial(StimulusKind::Target, true, 500.0, part));
  CHECK(vigilance(trials) == 0.0);
}

TEST_CASE("vigilance: 21 of 168 frequent-part targets missed") {
  std::vector<TrialRecord> trials;
  int missed = 0;
  for (int part : {1, 3, 5, 7}) {
    for (int i = 0; i < 42; ++i) {
      const bool miss = missed < 21 && (i % 8 == 0);
      if (miss) ++missed;
      trials.push_back(main_trial(StimulusKind::Target, !miss, 500.0, part));
    }
  }
  REQUIRE(missed == 21);
  for (int part : {2, 4, 6, 8}) {
    for (int i = 0; i < 8; ++i)
      trials.push_back(main_trial(StimulusKind::Target, true, 500.0, part));
  }
  const VigilanceComponents c = vigilance_components(trials);
  CHECK(c.frequent_omission_rate == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(c.rare_omission_rate == 0.0);
  CHECK(vigilance(trials) == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("vigilance: everything missed") {
  std::vector<TrialRecord> trials;
  for (int part = 1; part <= 8; ++part)
    trials.push_back(main_trial(StimulusKind::Target, false, 0.0, part));
  CHECK(vigilance(trials) == 1.0);
}

TEST_CASE("comprehension: error-free, isolated, and adjacent errors") {
  std::vector<TrialRecord> clean(200, main_trial(StimulusKind::Target, true, 500.0));
  CHECK(comprehension(clean) == 0.0);

  std::vector<TrialRecord> one = clean;
  one[100] = main_trial(StimulusKind::Target, false);
  CHECK(comprehension(one) == doctest::Approx(1.0 / 200.0).epsilon(1e-12));

  std::vector<TrialRecord> adjacent = clean;
  adjacent[100] = main_trial(StimulusKind::Target, false);
  adjacent[101] = main_trial(StimulusKind::Target, false);
  CHECK(comprehension(adjacent) == 0.0);
}

TEST_CASE("flawless session collapses the scales to their floors") {
  const InGameFeatureVector v = extract_ingame_features(flawless_session(21));
  for (Modality m : {Modality::Visual, Modality::Auditory}) {
    const auto at = [&](InGameScale s) {
      return v.values[static_cast<std::size_t>(ingame_feature_index(m, s))];
    };
    CHECK(at(InGameScale::Prudence) == 1.0);
    CHECK(at(InGameScale::Vigilance) == 0.0);
    CHECK(at(InGameScale::Comprehension) == 0.0);
    CHECK(at(InGameScale::Consistency) == 0.0);
    CHECK(at(InGameScale::Stamina) == 0.0);
    CHECK(at(InGameScale::Speed) == 500.0);
    CHECK(at(InGameScale::Focus) == 0.0);
    CHECK(at(InGameScale::Persistence) == 0.0);
    CHECK(at(InGameScale::Sensory) == 0.0);
  }
}

TEST_CASE("manifest holds 18 names in block order") {
  const auto& names = ingame_manifest();
  REQUIRE(names.size() == kInGameFeatureCount);
  CHECK(names[0] == "visual_prudence");
  CHECK(names[8] == "visual_sensory");
  CHECK(names[9] == "auditory_prudence");
  CHECK(names[17] == "auditory_sensory");
  CHECK(ingame_feature_index("auditory_vigilance") == 12);
  CHECK(ingame_feature_index("nope") == -1);
}

TEST_CASE("rates stay in [0,1] and speed is positive with responses") {
  ProtocolConfig cfg;
  cfg.seed = 77;
  const StimulusSchedule schedule = build_schedule(cfg);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Session s = simulate_session(default_adhd_profile(), schedule, 900 + seed);
    const InGameFeatureVector v = extract_ingame_features(s);
    for (Modality m : {Modality::Visual, Modality::Auditory}) {
      for (InGameScale scale : {InGameScale::Prudence, InGameScale::Vigilance,
                                InGameScale::Comprehension, InGameScale::Sensory}) {
        const double value = v.values[static_cast<std::size_t>(ingame_feature_index(m, scale))];
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);
      }
      const std::size_t spd =
          static_cast<std::size_t>(ingame_feature_index(m, InGameScale::Speed));
      if (!v.degenerate[spd]) CHECK(v.values[spd] > 0.0);
    }
  }
}

TEST_CASE("scales of one modality ignore the other modality's data") {
  ProtocolConfig cfg;
  cfg.seed = 31;
  const Session base = simulate_session(default_adhd_profile(), build_schedule(cfg), 500);
  const InGameFeatureVector before = extract_ingame_features(base);

  // permute the auditory responses among the auditory main trials
  Session shuffled = base;
  std::vector<std::size_t> auditory_positions;
  for (std::size_t i = 0; i < shuffled.trials.size(); ++i) {
    const StimulusEvent& e = shuffled.trials[i].stimulus;
    if (e.section == Section::Main && e.modality == Modality::Auditory)
      auditory_positions.push_back(i);
  }
  Rng rng(8);
  std::vector<std::size_t> order = auditory_positions;
  rng.shuffle(order);
  for (std::size_t k = 0; k < order.size(); ++k) {
    shuffled.trials[auditory_positions[k]].responded = base.trials[order[k]].responded;
    shuffled.trials[auditory_positions[k]].rt_ms = base.trials[order[k]].rt_ms;
  }

  const InGameFeatureVector after = extract_ingame_features(shuffled);
  for (int i = 0; i < 9; ++i) {  // the visual block is untouched
    CHECK(after.values[static_cast<std::size_t>(i)] ==
          before.values[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("visual prudence tracks the commission probability") {
  ProtocolConfig cfg;
  cfg.seed = 63;
  const StimulusSchedule schedule = build_schedule(cfg);
  SubjectProfile p = default_control_profile();
  p.commission_p = 0.2;

  std::vector<double> prudences;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Session s = simulate_session(p, schedule, 3000 + seed);
    const InGameFeatureVector v = extract_ingame_features(s);
    prudences.push_back(
        v.values[static_cast<std::size_t>(ingame_feature_index(Modality::Visual,
                                                               InGameScale::Prudence))]);
  }
  CHECK(std::abs(stats::mean(prudences) - 0.8) < 0.05);
}

TEST_CASE("higher commission probability lowers median prudence") {
  ProtocolConfig cfg;
  cfg.seed = 64;
  const StimulusSchedule schedule = build_schedule(cfg);
  std::vector<double> medians;
  for (double cp : {0.05, 0.2, 0.5}) {
    SubjectProfile p = default_control_profile();
    p.commission_p = cp;
    std::vector<double> prudences;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Session s = simulate_session(p, schedule, 5000 + seed);
      const InGameFeatureVector v = extract_ingame_features(s);
      prudences.push_back(
          v.values[static_cast<std::size_t>(ingame_feature_index(Modality::Visual,
                                                                 InGameScale::Prudence))]);
    }
    medians.push_back(stats::median(prudences));
  }
  CHECK(medians[0] > medians[1]);
  CHECK(medians[1] > medians[2]);
}
