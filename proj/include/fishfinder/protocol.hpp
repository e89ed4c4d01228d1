#pragma once

#include <cstdint>
#include <utility>

#include "fishfinder/types.hpp"

namespace fishfinder {

// Section layout: InitialVisual 10, InitialAuditory 10, Practice 32,
// Main 8 parts x 50, FinalVisual 10, FinalAuditory 10; 472 events total.
// Odd Main parts run 42 targets : 8 non-targets, even parts the reverse,
// so the ratio flips at every one of the eight part boundaries.
inline constexpr int kInitialCount = 10;
inline constexpr int kPracticeCount = 32;
inline constexpr int kMainParts = 8;
inline constexpr int kMainPartTrials = 50;
inline constexpr int kFinalCount = 10;
inline constexpr int kTotalEvents = 472;
inline constexpr int kFrequentTargets = 42;
inline constexpr int kRareTargets = 8;

inline bool is_target_frequent_part(int part) { return part % 2 == 1; }

// Trials in the practice section carry corrective feedback; later sections
// do not.
inline bool has_feedback(const StimulusEvent& e) { return e.section == Section::Practice; }

// Deterministic for a given config.seed. Kind order within practice and
// each main part is a seeded shuffle constrained so the minority kind
// never appears more than 3 times in a row; modality alternates per trial
// with a seeded starting side.
StimulusSchedule build_schedule(const ProtocolConfig& config);

struct ScoreState {
  int combo = 1;  // multiplier, stays in [1,5]
  std::int64_t fish = 0;
  std::int64_t sharks_released = 0;
  std::int64_t diamonds = 0;
  std::int64_t points = 0;
  int base_point = 10;

  bool operator==(const ScoreState&) const = default;
};

inline constexpr double kDiamondRtMs = 400.0;

// Applies one finalized trial. A correct release awards base_point * combo
// and then bumps the combo (capped at 5); any mistake resets the combo to 1
// and awards nothing; a correct withhold changes nothing. Releases faster
// than 400 ms also earn a diamond.
std::pair<ScoreState, std::int64_t> score_event(const ScoreState& state,
                                                const TrialRecord& trial);

// Final state after folding score_event over the session's trials.
// Throws AlignmentError when |trials| != |schedule|.
ScoreState replay_score(const Session& session);

}  // namespace fishfinder
