#include "fishfinder/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "fishfinder/errors.hpp"
#include "fishfinder/rng.hpp"
#include "json.hpp"

namespace fishfinder {

namespace {

using nlohmann::json;

std::vector<int> labels_to_pm1(const Dataset& d) {
  std::vector<int> y;
  y.reserve(d.sessions.size());
  for (const Session& s : d.sessions) {
    if (!s.label) throw DataError("run_three_modes: session " + s.subject_id + " is unlabeled");
    y.push_back(*s.label == Label::ADHD ? +1 : -1);
  }
  return y;
}

Matrix take_rows(const Matrix& X, const std::vector<std::size_t>& rows) {
  Matrix out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(X[r]);
  return out;
}

Matrix take_columns(const Matrix& X, const std::vector<int>& cols) {
  Matrix out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    out[i].reserve(cols.size());
    for (int c : cols) out[i].push_back(X[i][static_cast<std::size_t>(c)]);
  }
  return out;
}

std::vector<int> resolve_names(const FeatureTable& table, const std::vector<std::string>& names) {
  std::vector<int> indices;
  for (const std::string& n : names) {
    const int c = table.column(n);
    if (c < 0) throw DataError("feature '" + n + "' not present in table");
    indices.push_back(c);
  }
  std::sort(indices.begin(), indices.end());
  return indices;
}

json eval_to_json(const EvalReport& e) {
  const auto metric = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return json{{"confusion", {{"tp", e.tp}, {"fp", e.fp}, {"tn", e.tn}, {"fn", e.fn}}},
              {"metrics",
               {{"accuracy", metric(e.accuracy)},
                {"sensitivity", metric(e.sensitivity)},
                {"specificity", metric(e.specificity)},
                {"precision", metric(e.precision)},
                {"f1", metric(e.f1)}}}};
}

json profile_to_json(const SubjectProfile& p) {
  return json{{"omission_p", p.omission_p},
              {"commission_p", p.commission_p},
              {"rt_mean_ms", p.rt_mean_ms},
              {"rt_sd_ms", p.rt_sd_ms},
              {"fatigue_slope", p.fatigue_slope},
              {"anticipatory_p", p.anticipatory_p},
              {"imu_noise_sd", p.imu_noise_sd},
              {"burst_rate_hz", p.burst_rate_hz},
              {"burst_amp", p.burst_amp},
              {"second_half_burst_gain", p.second_half_burst_gain}};
}

}  // namespace

const std::vector<std::string>& paper_preset_ingame() {
  static const std::vector<std::string> names = {
      "visual_consistency", "auditory_consistency", "visual_stamina",
      "auditory_stamina",   "auditory_vigilance",   "visual_comprehension",
  };
  return names;
}

const std::vector<std::string>& paper_preset_movement() {
  static const std::vector<std::string> names = {
      "gyro_x_sd", "gyro_x_active", "accel_x_range", "accel_x_fftamp1", "accel_x_variance",
  };
  return names;
}

FeatureTable mode_table(const FeatureTable& ingame, const FeatureTable& movement, int mode) {
  switch (mode) {
    case 1: return ingame;
    case 2: return movement;
    case 3: return concat_tables(ingame, movement);
    default: throw DataError("mode must be 1, 2 or 3");
  }
}

SelectionReport select_features(const Matrix& scaled_train, const std::vector<int>& y,
                                const PipelineConfig& config, int mode) {
  SelectionReport report;
  report.mode = mode;
  const std::uint64_t sel_seed = derive_seed(config.seed, kSeedStreamSelection);

  report.correlation = correlation_filter(scaled_train, config.correlation_threshold);
  report.forward = forward_select(scaled_train, y, config.forward_max_k, sel_seed, config.C);
  report.backward = backward_eliminate(scaled_train, y, sel_seed, config.C);

  const ConsensusResult consensus = consensus_select(
      {report.correlation, report.forward, report.backward}, config.min_votes);
  report.consensus = consensus.indices;
  report.consensus_fallback = consensus.empty_consensus;
  // an empty consensus falls back to the forward-selected set
  report.final_indices = consensus.empty_consensus ? report.forward.indices : consensus.indices;
  return report;
}

PipelineResult run_three_modes(const Dataset& dataset, const PipelineConfig& config) {
  const std::vector<int> y = labels_to_pm1(dataset);
  const FeatureTable ingame = extract_ingame_table(dataset);
  const FeatureTable movement = extract_movement_table(dataset, config.proposed);

  PipelineResult result;
  result.split =
      stratified_split(y, config.split_ratio, derive_seed(config.seed, kSeedStreamSplit));
  for (std::size_t i : result.split.train) result.train_ids.push_back(ingame.ids[i]);
  for (std::size_t i : result.split.test) result.test_ids.push_back(ingame.ids[i]);

  std::vector<int> y_train, y_test;
  for (std::size_t i : result.split.train) y_train.push_back(y[i]);
  for (std::size_t i : result.split.test) y_test.push_back(y[i]);
  std::vector<Label> test_labels;
  for (int v : y_test) test_labels.push_back(v > 0 ? Label::ADHD : Label::Control);

  for (int mode = 1; mode <= 3; ++mode) {
    const FeatureTable table = mode_table(ingame, movement, mode);
    const Matrix train_raw = take_rows(table.rows, result.split.train);
    const Matrix test_raw = take_rows(table.rows, result.split.test);

    const ScalerParams scaler = fit_minmax(config.scale_on_all ? table.rows : train_raw);
    const Matrix train_scaled = apply_minmax(scaler, train_raw);
    const Matrix test_scaled = apply_minmax(scaler, test_raw);

    ModeReport report;
    report.mode = mode;
    if (config.preset == Preset::Paper) {
      std::vector<std::string> names;
      if (mode == 1) names = paper_preset_ingame();
      else if (mode == 2) names = paper_preset_movement();
      else {
        names = paper_preset_ingame();
        const auto& mv = paper_preset_movement();
        names.insert(names.end(), mv.begin(), mv.end());
      }
      report.selected_indices = resolve_names(table, names);
    } else {
      const SelectionReport sel = select_features(train_scaled, y_train, config, mode);
      report.selected_indices = sel.final_indices;
      report.consensus_fallback = sel.consensus_fallback;
    }
    for (int c : report.selected_indices)
      report.selected_names.push_back(table.names[static_cast<std::size_t>(c)]);

    const Matrix train_sel = take_columns(train_scaled, report.selected_indices);
    const Matrix test_sel = take_columns(test_scaled, report.selected_indices);
    report.model = train_svm(train_sel, y_train, config.C);
    report.model.selected_indices = report.selected_indices;
    report.model.scaler = scaler;
    report.eval = evaluate(report.model, test_sel, test_labels);
    result.modes[mode - 1] = std::move(report);
  }
  return result;
}

PipelineResult run_pipeline(const PipelineConfig& config, Dataset* out_dataset) {
  Dataset d = make_cohort(config.n_adhd, config.n_control, config.adhd_profile,
                          config.control_profile, derive_seed(config.seed, kSeedStreamCohort),
                          config.protocol);
  PipelineResult result = run_three_modes(d, config);
  if (out_dataset) *out_dataset = std::move(d);
  return result;
}

std::string config_to_json(const PipelineConfig& config) {
  json j{{"seed", config.seed},
         {"n_adhd", config.n_adhd},
         {"n_control", config.n_control},
         {"adhd_profile", profile_to_json(config.adhd_profile)},
         {"control_profile", profile_to_json(config.control_profile)},
         {"protocol",
          {{"isi_ms", config.protocol.isi_ms},
           {"stimulus_duration_ms", config.protocol.stimulus_duration_ms},
           {"practice_target_count", config.protocol.practice_target_count}}},
         {"split_ratio", config.split_ratio},
         {"correlation_threshold", config.correlation_threshold},
         {"min_votes", config.min_votes},
         {"C", config.C},
         {"forward_max_k", config.forward_max_k},
         {"preset", config.preset == Preset::Paper ? "paper" : "auto"},
         {"scale_on_all", config.scale_on_all}};
  return j.dump();
}

std::string report_to_json(const PipelineResult& result, const PipelineConfig& config) {
  json modes = json::array();
  for (const ModeReport& m : result.modes) {
    json jm = eval_to_json(m.eval);
    jm["mode"] = m.mode;
    jm["feature_count"] = m.selected_names.size();
    jm["features"] = m.selected_names;
    jm["consensus_fallback"] = m.consensus_fallback;
    modes.push_back(std::move(jm));
  }
  json j{{"tool", "fishfinder"},
         {"config", json::parse(config_to_json(config))},
         {"train_ids", result.train_ids},
         {"test_ids", result.test_ids},
         {"modes", std::move(modes)}};
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const PipelineResult& result, const PipelineConfig& config) {
  std::ostringstream os;
  os << "# FishFinder screening report\n\n";
  os << "- master seed: " << config.seed << "\n";
  os << "- cohort: " << config.n_adhd << " ADHD / " << config.n_control << " control\n";
  os << "- preset: " << (config.preset == Preset::Paper ? "paper" : "auto")
     << ", C = " << config.C << ", split = " << config.split_ratio << "\n\n";

  const auto metric = [](const std::optional<double>& v) {
    if (!v) return std::string("undefined");
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.4f", *v);
    return std::string(buf);
  };

  os << "| Metric | Mode 1 (in-game) | Mode 2 (movement) | Mode 3 (all) |\n";
  os << "|---|---|---|---|\n";
  const auto row = [&](const char* name, auto getter) {
    os << "| " << name;
    for (const ModeReport& m : result.modes) os << " | " << metric(getter(m.eval));
    os << " |\n";
  };
  row("Test Accuracy", [](const EvalReport& e) { return e.accuracy; });
  row("Sensitivity", [](const EvalReport& e) { return e.sensitivity; });
  row("Specificity", [](const EvalReport& e) { return e.specificity; });
  row("Precision", [](const EvalReport& e) { return e.precision; });
  row("F1 Score", [](const EvalReport& e) { return e.f1; });
  os << "| Number of Features";
  for (const ModeReport& m : result.modes) os << " | " << m.selected_names.size();
  os << " |\n\n";

  for (const ModeReport& m : result.modes) {
    os << "## Mode " << m.mode << "\n\n";
    os << "Confusion matrix (positive = ADHD):\n\n";
    os << "|  | predicted ADHD | predicted Control |\n|---|---|---|\n";
    os << "| actual ADHD | " << m.eval.tp << " | " << m.eval.fn << " |\n";
    os << "| actual Control | " << m.eval.fp << " | " << m.eval.tn << " |\n\n";
    os << "Features (" << m.selected_names.size() << "):";
    for (const std::string& n : m.selected_names) os << " `" << n << "`";
    if (m.consensus_fallback) os << "\n\n(consensus was empty; forward-selection set used)";
    os << "\n\n";
  }
  return os.str();
}

std::string model_to_json(const SvmModel& model, const std::vector<std::string>& feature_names,
                          const std::string& manifest_version, std::uint64_t seed,
                          double split_ratio) {
  json j{{"tool", "fishfinder"},
         {"manifest_version", manifest_version},
         {"seed", seed},
         {"split_ratio", split_ratio},
         {"C", model.C},
         {"bias", model.bias},
         {"weights", model.weights},
         {"selected_indices", model.selected_indices},
         {"feature_names", feature_names},
         {"scaler", {{"min", model.scaler.min}, {"max", model.scaler.max}}}};
  return j.dump(2) + "\n";
}

SvmModel model_from_json(const std::string& text, std::vector<std::string>* feature_names,
                         std::uint64_t* seed, double* split_ratio) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad model JSON: ") + e.what());
  }
  try {
    SvmModel m;
    m.C = j.at("C").get<double>();
    m.bias = j.at("bias").get<double>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.selected_indices = j.at("selected_indices").get<std::vector<int>>();
    m.scaler.min = j.at("scaler").at("min").get<std::vector<double>>();
    m.scaler.max = j.at("scaler").at("max").get<std::vector<double>>();
    if (feature_names) *feature_names = j.at("feature_names").get<std::vector<std::string>>();
    if (seed) *seed = j.at("seed").get<std::uint64_t>();
    if (split_ratio) *split_ratio = j.at("split_ratio").get<double>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad model JSON: ") + e.what());
  }
}

}  // namespace fishfinder
