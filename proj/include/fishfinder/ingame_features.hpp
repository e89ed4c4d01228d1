#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "fishfinder/types.hpp"

namespace fishfinder {

// 9 scales x 2 modalities, computed over the 400 main-section trials only.
// Manifest order: the visual block then the auditory block, scales in the
// order below. A scale that cannot be computed (e.g. no correct responses)
// yields 0 with its degeneracy flag set, never an error, so downstream
// vectors stay complete.
inline constexpr int kInGameFeatureCount = 18;

enum class InGameScale {
  Prudence,       // 1 - commission rate
  Consistency,    // cv of correct RTs (sample sd / mean)
  Stamina,        // mean correct RT, last 200 main trials minus first 200
  Vigilance,      // mean of omission rates in target-frequent vs target-rare parts
  Focus,          // variance of all recorded RTs (ms^2)
  Speed,          // mean correct RT (ms)
  Comprehension,  // rate of isolated errors (both neighbors correct)
  Persistence,    // omission rate, last part minus first part of same parity
  Sensory,        // share of responses faster than 100 ms
};

const std::vector<std::string>& ingame_manifest();
const char* ingame_group(int index);  // response_control / attention / symptomatic
int ingame_feature_index(Modality m, InGameScale scale);
int ingame_feature_index(const std::string& name);  // -1 when unknown

struct InGameFeatureVector {
  std::array<double, kInGameFeatureCount> values{};
  std::array<bool, kInGameFeatureCount> degenerate{};
};

// The scale primitives operate on main-section trials. Trials passed to the
// per-modality scales must already be filtered to one modality; stamina and
// persistence additionally need the pooled main sequence for their windows.
double consistency(std::span<const TrialRecord> modality_trials, bool* degenerate = nullptr);
double stamina(std::span<const TrialRecord> main_trials, Modality m, bool* degenerate = nullptr);

struct VigilanceComponents {
  double frequent_omission_rate = 0.0;  // parts 1,3,5,7
  double rare_omission_rate = 0.0;      // parts 2,4,6,8
  bool degenerate = false;
  double combined() const { return 0.5 * (frequent_omission_rate + rare_omission_rate); }
};
VigilanceComponents vigilance_components(std::span<const TrialRecord> modality_trials);
double vigilance(std::span<const TrialRecord> modality_trials, bool* degenerate = nullptr);

double comprehension(std::span<const TrialRecord> modality_trials);

InGameFeatureVector extract_ingame_features(const Session& session);

}  // namespace fishfinder
