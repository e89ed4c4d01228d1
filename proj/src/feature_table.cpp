#include "fishfinder/feature_table.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fishfinder/errors.hpp"
#include "fishfinder/ingame_features.hpp"

namespace fishfinder {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(',', pos);
    if (next == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int FeatureTable::column(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

FeatureTable extract_ingame_table(const Dataset& d) {
  FeatureTable t;
  t.names = ingame_manifest();
  for (const Session& s : d.sessions) {
    const InGameFeatureVector v = extract_ingame_features(s);
    t.ids.push_back(s.subject_id);
    t.labels.push_back(s.label);
    t.rows.emplace_back(v.values.begin(), v.values.end());
  }
  return t;
}

FeatureTable extract_movement_table(const Dataset& d, const ProposedFeatureConfig& config) {
  FeatureTable t;
  for (const ManifestEntry& e : movement_manifest()) t.names.push_back(e.name);
  for (const Session& s : d.sessions) {
    const MovementFeatureVector v = extract_movement_features(s.imu, config);
    t.ids.push_back(s.subject_id);
    t.labels.push_back(s.label);
    t.rows.emplace_back(v.values.begin(), v.values.end());
  }
  return t;
}

FeatureTable concat_tables(const FeatureTable& a, const FeatureTable& b) {
  if (a.ids != b.ids) throw DataError("concat_tables: subject id order differs");
  FeatureTable t;
  t.ids = a.ids;
  t.labels = a.labels;
  t.names = a.names;
  t.names.insert(t.names.end(), b.names.begin(), b.names.end());
  t.rows.resize(a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    t.rows[i] = a.rows[i];
    t.rows[i].insert(t.rows[i].end(), b.rows[i].begin(), b.rows[i].end());
  }
  return t;
}

void write_feature_csv(const std::filesystem::path& path, const FeatureTable& t,
                       const std::string& comment) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path.string());
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "subject_id,label";
  for (const std::string& n : t.names) os << ',' << n;
  os << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << t.ids[i] << ',' << (t.labels[i] ? to_string(*t.labels[i]) : "");
    for (double v : t.rows[i]) os << ',' << fmt_double(v);
    os << '\n';
  }
}

FeatureTable read_feature_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open: " + path.string());
  FeatureTable t;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (!header_seen) {
      if (cells.size() < 3 || cells[0] != "subject_id" || cells[1] != "label") {
        throw ParseError(path.string() + ": expected 'subject_id,label,...' header");
      }
      t.names.assign(cells.begin() + 2, cells.end());
      header_seen = true;
      continue;
    }
    if (cells.size() != t.names.size() + 2) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected " + std::to_string(t.names.size() + 2) + " columns");
    }
    t.ids.push_back(cells[0]);
    if (cells[1].empty()) {
      t.labels.push_back(std::nullopt);
    } else {
      const auto l = label_from_string(cells[1]);
      if (!l) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": unknown label '" +
                         cells[1] + "'");
      }
      t.labels.push_back(*l);
    }
    std::vector<double> row(t.names.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string& cell = cells[j + 2];
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), row[j]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad number '" +
                         cell + "'");
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError(path.string() + ": missing header");
  return t;
}

void write_movement_manifest_csv(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path.string());
  os << "# version=" << kManifestVersion << "\n";
  os << "index,name,group\n";
  for (const ManifestEntry& e : movement_manifest()) {
    os << e.index << ',' << e.name << ',' << e.group << '\n';
  }
}

void write_ingame_manifest_csv(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path.string());
  os << "# version=ff-ingame-1\n";
  os << "index,name,group\n";
  const auto& names = ingame_manifest();
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << i << ',' << names[i] << ',' << ingame_group(static_cast<int>(i)) << '\n';
  }
}

}  // namespace fishfinder
