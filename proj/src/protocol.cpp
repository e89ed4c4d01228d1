#include "fishfinder/protocol.hpp"

#include <algorithm>

#include "fishfinder/errors.hpp"
#include "fishfinder/rng.hpp"

namespace fishfinder {

namespace {

constexpr int kMaxMinorityRun = 3;

bool run_constraint_ok(const std::vector<StimulusKind>& kinds, StimulusKind minority) {
  int run = 0;
  for (StimulusKind k : kinds) {
    run = (k == minority) ? run + 1 : 0;
    if (run > kMaxMinorityRun) return false;
  }
  return true;
}

// Seeded shuffle of n_target/n_nontarget kinds, rejected until the less
// frequent kind has no run longer than 3. Runs longer than that for the
// majority kind are unavoidable (e.g. 42 non-targets vs 8 targets), so the
// constraint binds on the minority only.
std::vector<StimulusKind> shuffled_kinds(Rng& rng, int n_target, int n_nontarget) {
  std::vector<StimulusKind> kinds;
  kinds.reserve(static_cast<std::size_t>(n_target + n_nontarget));
  kinds.insert(kinds.end(), static_cast<std::size_t>(n_target), StimulusKind::Target);
  kinds.insert(kinds.end(), static_cast<std::size_t>(n_nontarget), StimulusKind::NonTarget);
  const StimulusKind minority =
      n_target <= n_nontarget ? StimulusKind::Target : StimulusKind::NonTarget;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    rng.shuffle(kinds);
    if (run_constraint_ok(kinds, minority)) return kinds;
  }
  // Practically unreachable for the section compositions used here; fall
  // back to a legal deterministic interleave.
  std::vector<StimulusKind> fallback;
  int t = n_target, n = n_nontarget;
  while (t > 0 || n > 0) {
    for (int k = 0; k < kMaxMinorityRun && n > 0; ++k, --n)
      fallback.push_back(StimulusKind::NonTarget);
    if (t > 0) {
      fallback.push_back(StimulusKind::Target);
      --t;
    }
  }
  return fallback;
}

}  // namespace

StimulusSchedule build_schedule(const ProtocolConfig& config) {
  StimulusSchedule schedule;
  schedule.config = config;
  schedule.events.reserve(kTotalEvents);

  Rng rng(derive_seed(config.seed, 0xf15f17));
  const double slot = config.trial_slot_s();
  int global = 0;

  const auto push = [&](Section section, int part, int index, Modality modality,
                        StimulusKind kind) {
    schedule.events.push_back(
        {section, part, index, modality, kind, static_cast<double>(global) * slot});
    ++global;
  };

  for (int i = 0; i < kInitialCount; ++i)
    push(Section::InitialVisual, 0, i, Modality::Visual, StimulusKind::Target);
  for (int i = 0; i < kInitialCount; ++i)
    push(Section::InitialAuditory, 0, i, Modality::Auditory, StimulusKind::Target);

  {
    const auto kinds = shuffled_kinds(rng, config.practice_target_count,
                                      kPracticeCount - config.practice_target_count);
    const bool start_visual = rng.coin();
    for (int i = 0; i < kPracticeCount; ++i) {
      const Modality m = ((i % 2 == 0) == start_visual) ? Modality::Visual : Modality::Auditory;
      push(Section::Practice, 0, i, m, kinds[static_cast<std::size_t>(i)]);
    }
  }

  for (int part = 1; part <= kMainParts; ++part) {
    const int targets = is_target_frequent_part(part) ? kFrequentTargets : kRareTargets;
    const auto kinds = shuffled_kinds(rng, targets, kMainPartTrials - targets);
    const bool start_visual = rng.coin();
    for (int i = 0; i < kMainPartTrials; ++i) {
      const Modality m = ((i % 2 == 0) == start_visual) ? Modality::Visual : Modality::Auditory;
      push(Section::Main, part, i, m, kinds[static_cast<std::size_t>(i)]);
    }
  }

  for (int i = 0; i < kFinalCount; ++i)
    push(Section::FinalVisual, 0, i, Modality::Visual, StimulusKind::Target);
  for (int i = 0; i < kFinalCount; ++i)
    push(Section::FinalAuditory, 0, i, Modality::Auditory, StimulusKind::Target);

  return schedule;
}

std::pair<ScoreState, std::int64_t> score_event(const ScoreState& state,
                                                const TrialRecord& trial) {
  ScoreState next = state;
  std::int64_t awarded = 0;
  if (trial.stimulus.kind == StimulusKind::Target) {
    if (trial.responded) {
      awarded = static_cast<std::int64_t>(next.base_point) * next.combo;
      next.points += awarded;
      next.fish += 1;
      if (trial.rt_ms && *trial.rt_ms < kDiamondRtMs) next.diamonds += 1;
      next.combo = std::min(next.combo + 1, 5);
    } else {
      next.combo = 1;  // missed fish
    }
  } else {
    if (trial.responded) {
      next.sharks_released += 1;
      next.combo = 1;
    }
    // correct withhold: no change
  }
  return {next, awarded};
}

ScoreState replay_score(const Session& session) {
  if (session.trials.size() != session.schedule.events.size()) {
    throw AlignmentError("replay_score: " + std::to_string(session.trials.size()) +
                         " trials vs " + std::to_string(session.schedule.events.size()) +
                         " scheduled events");
  }
  ScoreState state;
  for (const TrialRecord& t : session.trials) state = score_event(state, t).first;
  return state;
}

}  // namespace fishfinder
