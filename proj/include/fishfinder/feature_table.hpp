#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fishfinder/movement_features.hpp"
#include "fishfinder/scaling.hpp"
#include "fishfinder/types.hpp"

namespace fishfinder {

// One row per session, columns in manifest order. CSV form:
//   subject_id,label,<feature names...>
// with an optional leading '#' comment carrying provenance.
struct FeatureTable {
  std::vector<std::string> ids;
  std::vector<std::optional<Label>> labels;
  std::vector<std::string> names;
  Matrix rows;

  int column(const std::string& name) const;  // -1 when unknown
};

FeatureTable extract_ingame_table(const Dataset& d);
FeatureTable extract_movement_table(const Dataset& d, const ProposedFeatureConfig& config = {});
FeatureTable concat_tables(const FeatureTable& a, const FeatureTable& b);

void write_feature_csv(const std::filesystem::path& path, const FeatureTable& t,
                       const std::string& comment = "");
FeatureTable read_feature_csv(const std::filesystem::path& path);

void write_movement_manifest_csv(const std::filesystem::path& path);
void write_ingame_manifest_csv(const std::filesystem::path& path);

}  // namespace fishfinder
