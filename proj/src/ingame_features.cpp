#include "fishfinder/ingame_features.hpp"

#include <algorithm>

#include "fishfinder/stats.hpp"

namespace fishfinder {

namespace {

constexpr double kAnticipatoryRtMs = 100.0;

const char* scale_name(InGameScale s) {
  switch (s) {
    case InGameScale::Prudence: return "prudence";
    case InGameScale::Consistency: return "consistency";
    case InGameScale::Stamina: return "stamina";
    case InGameScale::Vigilance: return "vigilance";
    case InGameScale::Focus: return "focus";
    case InGameScale::Speed: return "speed";
    case InGameScale::Comprehension: return "comprehension";
    case InGameScale::Persistence: return "persistence";
    case InGameScale::Sensory: return "sensory";
  }
  return "?";
}

constexpr InGameScale kScaleOrder[9] = {
    InGameScale::Prudence,      InGameScale::Consistency, InGameScale::Stamina,
    InGameScale::Vigilance,     InGameScale::Focus,       InGameScale::Speed,
    InGameScale::Comprehension, InGameScale::Persistence, InGameScale::Sensory,
};

std::vector<double> correct_rts(std::span<const TrialRecord> trials) {
  std::vector<double> rts;
  for (const TrialRecord& t : trials) {
    if (t.stimulus.kind == StimulusKind::Target && t.responded && t.rt_ms)
      rts.push_back(*t.rt_ms);
  }
  return rts;
}

// rate over a possibly empty set: 0 with the degeneracy flag raised
double safe_rate(std::size_t num, std::size_t den, bool* degenerate) {
  if (den == 0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

double omission_rate(std::span<const TrialRecord> trials, bool* degenerate) {
  std::size_t targets = 0, omitted = 0;
  for (const TrialRecord& t : trials) {
    if (t.stimulus.kind != StimulusKind::Target) continue;
    ++targets;
    if (!t.responded) ++omitted;
  }
  return safe_rate(omitted, targets, degenerate);
}

}  // namespace

const std::vector<std::string>& ingame_manifest() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (Modality m : {Modality::Visual, Modality::Auditory}) {
      const std::string prefix = (m == Modality::Visual) ? "visual_" : "auditory_";
      for (InGameScale s : kScaleOrder) v.push_back(prefix + scale_name(s));
    }
    return v;
  }();
  return names;
}

const char* ingame_group(int index) {
  switch (index % 9) {
    case 0: case 1: case 2: return "response_control";
    case 3: case 4: case 5: return "attention";
    default: return "symptomatic";
  }
}

int ingame_feature_index(Modality m, InGameScale scale) {
  const int block = (m == Modality::Visual) ? 0 : 9;
  for (int i = 0; i < 9; ++i) {
    if (kScaleOrder[i] == scale) return block + i;
  }
  return -1;
}

int ingame_feature_index(const std::string& name) {
  const auto& names = ingame_manifest();
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

double consistency(std::span<const TrialRecord> modality_trials, bool* degenerate) {
  const std::vector<double> rts = correct_rts(modality_trials);
  if (rts.size() < 2) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  const double m = stats::mean(rts);
  if (m == 0.0) return 0.0;
  return stats::sample_sd(rts) / m;
}

double stamina(std::span<const TrialRecord> main_trials, Modality m, bool* degenerate) {
  // Windows are positions in the pooled main sequence; RTs are then
  // filtered to the requested modality.
  const std::size_t n = main_trials.size();
  const std::size_t first_end = std::min<std::size_t>(200, n);
  const std::size_t last_begin = n > 200 ? n - 200 : 0;

  std::vector<double> first_rts, last_rts;
  for (std::size_t i = 0; i < n; ++i) {
    const TrialRecord& t = main_trials[i];
    if (t.stimulus.modality != m) continue;
    if (!(t.stimulus.kind == StimulusKind::Target && t.responded && t.rt_ms)) continue;
    if (i < first_end) first_rts.push_back(*t.rt_ms);
    if (i >= last_begin) last_rts.push_back(*t.rt_ms);
  }
  if (first_rts.empty() || last_rts.empty()) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  return stats::mean(last_rts) - stats::mean(first_rts);
}

VigilanceComponents vigilance_components(std::span<const TrialRecord> modality_trials) {
  VigilanceComponents out;
  std::vector<TrialRecord> frequent, rare;
  for (const TrialRecord& t : modality_trials) {
    if (t.stimulus.part % 2 == 1) frequent.push_back(t);
    else if (t.stimulus.part != 0) rare.push_back(t);
  }
  bool deg_f = false, deg_r = false;
  out.frequent_omission_rate = omission_rate(frequent, &deg_f);
  out.rare_omission_rate = omission_rate(rare, &deg_r);
  out.degenerate = deg_f || deg_r;
  return out;
}

double vigilance(std::span<const TrialRecord> modality_trials, bool* degenerate) {
  const VigilanceComponents c = vigilance_components(modality_trials);
  if (degenerate && c.degenerate) *degenerate = true;
  return c.combined();
}

double comprehension(std::span<const TrialRecord> modality_trials) {
  const std::size_t n = modality_trials.size();
  if (n == 0) return 0.0;
  std::size_t isolated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_correct(modality_trials[i])) continue;
    const bool prev_ok = i == 0 || is_correct(modality_trials[i - 1]);
    const bool next_ok = i + 1 == n || is_correct(modality_trials[i + 1]);
    if (prev_ok && next_ok) ++isolated;
  }
  return static_cast<double>(isolated) / static_cast<double>(n);
}

InGameFeatureVector extract_ingame_features(const Session& session) {
  std::vector<TrialRecord> main_trials;
  for (const TrialRecord& t : session.trials) {
    if (t.stimulus.section == Section::Main) main_trials.push_back(t);
  }

  InGameFeatureVector out;
  for (Modality m : {Modality::Visual, Modality::Auditory}) {
    std::vector<TrialRecord> mod_trials;
    for (const TrialRecord& t : main_trials) {
      if (t.stimulus.modality == m) mod_trials.push_back(t);
    }

    std::vector<double> all_rts;
    std::size_t responses = 0, anticipatory = 0;
    std::size_t nontargets = 0, commissions = 0;
    for (const TrialRecord& t : mod_trials) {
      if (t.responded && t.rt_ms) {
        all_rts.push_back(*t.rt_ms);
        ++responses;
        if (*t.rt_ms < kAnticipatoryRtMs) ++anticipatory;
      }
      if (t.stimulus.kind == StimulusKind::NonTarget) {
        ++nontargets;
        if (t.responded) ++commissions;
      }
    }
    const std::vector<double> rts = correct_rts(mod_trials);

    const auto set = [&](InGameScale scale, double value, bool degenerate) {
      const int idx = ingame_feature_index(m, scale);
      out.values[static_cast<std::size_t>(idx)] = value;
      out.degenerate[static_cast<std::size_t>(idx)] = degenerate;
    };

    {
      bool deg = false;
      const double commission_rate = safe_rate(commissions, nontargets, &deg);
      set(InGameScale::Prudence, 1.0 - commission_rate, deg);
    }
    {
      bool deg = false;
      const double v = consistency(mod_trials, &deg);
      set(InGameScale::Consistency, v, deg);
    }
    {
      bool deg = false;
      const double v = stamina(main_trials, m, &deg);
      set(InGameScale::Stamina, v, deg);
    }
    {
      bool deg = false;
      const double v = vigilance(mod_trials, &deg);
      set(InGameScale::Vigilance, v, deg);
    }
    {
      const bool deg = all_rts.empty();
      set(InGameScale::Focus, stats::variance(all_rts), deg);
    }
    {
      const bool deg = rts.empty();
      set(InGameScale::Speed, deg ? 0.0 : stats::mean(rts), deg);
    }
    set(InGameScale::Comprehension, comprehension(mod_trials), mod_trials.empty());
    {
      // last part vs the first part of the same parity (8 vs 2 on the
      // standard eight-part layout)
      int last_part = 0;
      for (const TrialRecord& t : mod_trials) last_part = std::max(last_part, t.stimulus.part);
      bool deg = last_part == 0;
      double v = 0.0;
      if (!deg) {
        const int first_same_parity = (last_part % 2 == 0) ? 2 : 1;
        std::vector<TrialRecord> last_trials, first_trials;
        for (const TrialRecord& t : mod_trials) {
          if (t.stimulus.part == last_part) last_trials.push_back(t);
          if (t.stimulus.part == first_same_parity) first_trials.push_back(t);
        }
        bool deg_a = false, deg_b = false;
        v = omission_rate(last_trials, &deg_a) - omission_rate(first_trials, &deg_b);
        deg = deg_a || deg_b;
      }
      set(InGameScale::Persistence, v, deg);
    }
    {
      bool deg = false;
      const double v = safe_rate(anticipatory, responses, &deg);
      set(InGameScale::Sensory, v, deg);
    }
  }
  return out;
}

}  // namespace fishfinder
