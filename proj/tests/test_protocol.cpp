#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "fishfinder/errors.hpp"
#include "fishfinder/protocol.hpp"
#include "fishfinder/rng.hpp"
#include "fishfinder/validate.hpp"
#include "oracles.hpp"

using namespace fishfinder;

namespace {

std::map<Section, int> section_counts(const StimulusSchedule& s) {
  std::map<Section, int> counts;
  for (const StimulusEvent& e : s.events) ++counts[e.section];
  return counts;
}

TrialRecord trial(StimulusKind kind, bool responded, double rt = 500.0) {
  TrialRecord t;
  t.stimulus.kind = kind;
  t.responded = responded;
  if (responded) t.rt_ms = rt;
  return t;
}

}  // namespace

TEST_CASE("section counts match the protocol layout") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 999ULL}) {
    ProtocolConfig cfg;
    cfg.seed = seed;
    const StimulusSchedule s = build_schedule(cfg);
    REQUIRE(s.events.size() == kTotalEvents);
    const auto counts = section_counts(s);
    CHECK(counts.at(Section::InitialVisual) == 10);
    CHECK(counts.at(Section::InitialAuditory) == 10);
    CHECK(counts.at(Section::Practice) == 32);
    CHECK(counts.at(Section::Main) == 400);
    CHECK(counts.at(Section::FinalVisual) == 10);
    CHECK(counts.at(Section::FinalAuditory) == 10);
    CHECK(validate_schedule(s).empty());
  }
}

TEST_CASE("main part 3 runs 42 targets to 8 non-targets") {
  ProtocolConfig cfg;
  cfg.seed = 1234;
  const StimulusSchedule s = build_schedule(cfg);
  int targets = 0, nontargets = 0;
  for (const StimulusEvent& e : s.events) {
    if (e.section == Section::Main && e.part == 3) {
      (e.kind == StimulusKind::Target ? targets : nontargets)++;
    }
  }
  CHECK(targets == 42);
  CHECK(nontargets == 8);
}

TEST_CASE("target ratio flips at every one of the eight main parts") {
  for (std::uint64_t seed : {3ULL, 77ULL, 2024ULL}) {
    ProtocolConfig cfg;
    cfg.seed = seed;
    const StimulusSchedule s = build_schedule(cfg);
    int targets[9] = {0};
    int totals[9] = {0};
    for (const StimulusEvent& e : s.events) {
      if (e.section != Section::Main) continue;
      ++totals[e.part];
      if (e.kind == StimulusKind::Target) ++targets[e.part];
    }
    int flips = 0;
    bool prev_frequent = false;  // entering main from a non-frequent regime
    for (int part = 1; part <= 8; ++part) {
      CHECK(totals[part] == 50);
      const bool frequent = targets[part] > totals[part] - targets[part];
      if (frequent != prev_frequent) ++flips;
      prev_frequent = frequent;
      CHECK(targets[part] == (part % 2 == 1 ? 42 : 8));
    }
    CHECK(flips == 8);
  }
}

TEST_CASE("same seed reproduces the schedule exactly") {
  ProtocolConfig cfg;
  cfg.seed = 42;
  CHECK(build_schedule(cfg) == build_schedule(cfg));
}

TEST_CASE("minority kind never runs longer than 3 in a row") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    ProtocolConfig cfg;
    cfg.seed = seed;
    const StimulusSchedule s = build_schedule(cfg);
    for (int part = 1; part <= 8; ++part) {
      const StimulusKind minority =
          is_target_frequent_part(part) ? StimulusKind::NonTarget : StimulusKind::Target;
      int run = 0;
      for (const StimulusEvent& e : s.events) {
        if (e.section != Section::Main || e.part != part) continue;
        run = (e.kind == minority) ? run + 1 : 0;
        CHECK(run <= 3);
      }
    }
  }
}

TEST_CASE("practice and main alternate modality per trial") {
  ProtocolConfig cfg;
  cfg.seed = 5;
  const StimulusSchedule s = build_schedule(cfg);

  Modality prev = Modality::Visual;
  bool have_prev = false;
  for (const StimulusEvent& e : s.events) {
    if (e.section != Section::Practice) continue;
    if (have_prev) CHECK(e.modality != prev);
    prev = e.modality;
    have_prev = true;
  }

  for (int part = 1; part <= 8; ++part) {
    have_prev = false;
    for (const StimulusEvent& e : s.events) {
      if (e.section != Section::Main || e.part != part) continue;
      if (have_prev) CHECK(e.modality != prev);
      prev = e.modality;
      have_prev = true;
    }
  }
}

TEST_CASE("scoring: combo caps at five") {
  ScoreState st;
  st.combo = 5;
  const auto [next, awarded] = score_event(st, trial(StimulusKind::Target, true, 800.0));
  CHECK(next.combo == 5);
  CHECK(awarded == 50);
}

TEST_CASE("scoring: a released shark rewinds the combo") {
  ScoreState st;
  st.combo = 5;
  st.points = 300;
  const auto [next, awarded] = score_event(st, trial(StimulusKind::NonTarget, true));
  CHECK(next.combo == 1);
  CHECK(awarded == 0);
  CHECK(next.points == 300);
  CHECK(next.sharks_released == 1);
}

TEST_CASE("scoring: fast release earns a diamond") {
  ScoreState st;
  const auto [next, awarded] = score_event(st, trial(StimulusKind::Target, true, 350.0));
  CHECK(next.diamonds == 1);
  CHECK(awarded == 10);
}

TEST_CASE("scoring: multiplier applies before the combo bump, no diamond at 500 ms") {
  ScoreState st;
  st.combo = 3;
  const auto [next, awarded] = score_event(st, trial(StimulusKind::Target, true, 500.0));
  CHECK(awarded == 30);
  CHECK(next.combo == 4);
  CHECK(next.diamonds == 0);
}

TEST_CASE("replay: all-correct slow session ends at combo 5 with no diamonds") {
  ProtocolConfig cfg;
  cfg.seed = 9;
  Session s;
  s.schedule = build_schedule(cfg);
  for (const StimulusEvent& e : s.schedule.events) {
    TrialRecord t;
    t.stimulus = e;
    if (e.kind == StimulusKind::Target) {
      t.responded = true;
      t.rt_ms = 700.0;
    }
    s.trials.push_back(t);
  }
  const ScoreState final = replay_score(s);
  CHECK(final.combo == 5);
  CHECK(final.diamonds == 0);
  CHECK(final.sharks_released == 0);
  CHECK(final.fish > 0);
}

TEST_CASE("replay: all-omitted session never scores") {
  ProtocolConfig cfg;
  cfg.seed = 10;
  Session s;
  s.schedule = build_schedule(cfg);
  for (const StimulusEvent& e : s.schedule.events) {
    TrialRecord t;
    t.stimulus = e;
    s.trials.push_back(t);
  }
  const ScoreState final = replay_score(s);
  CHECK(final.points == 0);
  CHECK(final.combo == 1);
  CHECK(final.fish == 0);
}

TEST_CASE("replay: one mistake matches a hand-rolled fold") {
  // ten fish, a shark released at position 4, ten more fish
  std::vector<TrialRecord> trials;
  for (int i = 0; i < 4; ++i) trials.push_back(trial(StimulusKind::Target, true, 600.0));
  trials.push_back(trial(StimulusKind::NonTarget, true));
  for (int i = 0; i < 10; ++i) trials.push_back(trial(StimulusKind::Target, true, 600.0));

  // independent fold: award 10 * min(5, 1 + streak) per release
  std::int64_t expected = 0;
  int streak = 0;
  for (const TrialRecord& t : trials) {
    if (t.stimulus.kind == StimulusKind::Target && t.responded) {
      expected += 10 * std::min(5, 1 + streak);
      ++streak;
    } else {
      streak = 0;
    }
  }

  ScoreState st;
  for (const TrialRecord& t : trials) st = score_event(st, t).first;
  CHECK(st.points == expected);
  CHECK(st.sharks_released == 1);
}

TEST_CASE("combo equals the streak oracle over random event sequences") {
  Rng rng(20240);
  for (int round = 0; round < 200; ++round) {
    std::vector<TrialRecord> trials;
    ScoreState st;
    std::int64_t prev_points = 0;
    const int len = 1 + static_cast<int>(rng.uniform_below(60));
    for (int i = 0; i < len; ++i) {
      const StimulusKind kind = rng.coin() ? StimulusKind::Target : StimulusKind::NonTarget;
      const bool responded = rng.coin(0.6);
      const double rt = rng.uniform(100.0, 1200.0);
      trials.push_back(trial(kind, responded, rt));
      const auto [next, awarded] = score_event(st, trials.back());
      CHECK(next.points >= prev_points);  // points never decrease
      if (awarded > 0 && trials.back().rt_ms && *trials.back().rt_ms >= 400.0) {
        CHECK(next.diamonds == st.diamonds);  // no diamond at or above 400 ms
      }
      st = next;
      prev_points = next.points;
      CHECK(st.combo >= 1);
      CHECK(st.combo <= 5);
      CHECK(st.combo == oracles::combo_oracle(trials));
    }
  }
}

TEST_CASE("replay rejects misaligned sessions") {
  ProtocolConfig cfg;
  cfg.seed = 2;
  Session s;
  s.schedule = build_schedule(cfg);
  s.trials.resize(s.schedule.events.size() - 1);
  CHECK_THROWS_AS(replay_score(s), AlignmentError);
}
