#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fishfinder/feature_table.hpp"
#include "fishfinder/selection.hpp"
#include "fishfinder/simulator.hpp"
#include "fishfinder/svm.hpp"
#include "fishfinder/types.hpp"

namespace fishfinder {

// preset "paper" uses the fixed published-style feature lists (6 in-game,
// 5 movement, 11 combined); "auto" runs the three selection methods with
// consensus voting on the training half.
enum class Preset { Paper, Auto };

const std::vector<std::string>& paper_preset_ingame();    // 6 names
const std::vector<std::string>& paper_preset_movement();  // 5 names

struct PipelineConfig {
  std::uint64_t seed = 0;
  int n_adhd = 26;
  int n_control = 26;
  SubjectProfile adhd_profile = default_adhd_profile();
  SubjectProfile control_profile = default_control_profile();
  ProtocolConfig protocol;
  ProposedFeatureConfig proposed;
  double split_ratio = 0.5;
  double correlation_threshold = 0.9;
  int min_votes = 2;
  double C = 1.0;
  int forward_max_k = -1;  // unbounded
  Preset preset = Preset::Paper;
  bool scale_on_all = false;  // leakage-prone variant, off by default
};

struct ModeReport {
  int mode = 0;  // 1 in-game, 2 movement, 3 combined
  EvalReport eval;
  std::vector<int> selected_indices;
  std::vector<std::string> selected_names;
  bool consensus_fallback = false;  // empty consensus, fell back to forward
  SvmModel model;
};

struct PipelineResult {
  ModeReport modes[3];
  SplitIndices split;
  std::vector<std::string> train_ids, test_ids;
};

// Derived seed streams from the master seed; fixed constants so reruns are
// byte-identical end to end.
inline constexpr std::uint64_t kSeedStreamCohort = 1;
inline constexpr std::uint64_t kSeedStreamSplit = 2;
inline constexpr std::uint64_t kSeedStreamSelection = 3;

// Splits once (shared by all modes), scales on the training half, selects,
// trains, evaluates on the held-out half.
PipelineResult run_three_modes(const Dataset& dataset, const PipelineConfig& config);

// simulate -> run_three_modes with the cohort seed derived from config.seed
PipelineResult run_pipeline(const PipelineConfig& config, Dataset* out_dataset = nullptr);

// Single-mode helpers shared by the CLI subcommands.
FeatureTable mode_table(const FeatureTable& ingame, const FeatureTable& movement, int mode);

struct SelectionReport {
  int mode = 0;
  SelectionResult correlation, forward, backward;
  std::vector<int> consensus;
  bool consensus_fallback = false;
  std::vector<int> final_indices;
};
SelectionReport select_features(const Matrix& scaled_train, const std::vector<int>& y,
                                const PipelineConfig& config, int mode);

std::string config_to_json(const PipelineConfig& config);
std::string report_to_json(const PipelineResult& result, const PipelineConfig& config);
std::string report_to_markdown(const PipelineResult& result, const PipelineConfig& config);

std::string model_to_json(const SvmModel& model, const std::vector<std::string>& feature_names,
                          const std::string& manifest_version, std::uint64_t seed,
                          double split_ratio);
SvmModel model_from_json(const std::string& text, std::vector<std::string>* feature_names,
                         std::uint64_t* seed, double* split_ratio);

}  // namespace fishfinder
