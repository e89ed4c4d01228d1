#include "fishfinder/session_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fishfinder/errors.hpp"
#include "json.hpp"

namespace fishfinder {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(std::string_view token, const std::string& where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(where + ": bad number '" + std::string(token) + "'");
  }
  return v;
}

json event_to_json(const StimulusEvent& e) {
  return json{{"section", to_string(e.section)}, {"part", e.part},
              {"index", e.index},               {"modality", to_string(e.modality)},
              {"kind", to_string(e.kind)},      {"onset_s", e.onset_s}};
}

StimulusEvent event_from_json(const json& j) {
  StimulusEvent e;
  const auto sec = section_from_string(j.at("section").get<std::string>());
  const auto mod = modality_from_string(j.at("modality").get<std::string>());
  const auto kind = kind_from_string(j.at("kind").get<std::string>());
  if (!sec || !mod || !kind) throw ParseError("unknown enum value in stimulus event");
  e.section = *sec;
  e.modality = *mod;
  e.kind = *kind;
  e.part = j.at("part").get<int>();
  e.index = j.at("index").get<int>();
  e.onset_s = j.at("onset_s").get<double>();
  return e;
}

}  // namespace

void write_imu_csv(const std::filesystem::path& path, const ImuStream& imu,
                   const std::string& comment) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path.string());
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "t_s,ax,ay,az,gx,gy,gz\n";
  for (const ImuSample& s : imu.samples) {
    os << fmt_double(s.t_s) << ',' << fmt_double(s.ax) << ',' << fmt_double(s.ay) << ','
       << fmt_double(s.az) << ',' << fmt_double(s.gx) << ',' << fmt_double(s.gy) << ','
       << fmt_double(s.gz) << '\n';
  }
}

ImuStream read_imu_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open: " + path.string());
  ImuStream imu;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "t_s,ax,ay,az,gx,gy,gz") {
        throw ParseError(path.string() + ": expected IMU header, got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    double vals[7];
    std::size_t pos = 0;
    for (int k = 0; k < 7; ++k) {
      const std::size_t next = line.find(',', pos);
      const bool last = (k == 6);
      if (last != (next == std::string::npos)) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected 7 columns");
      }
      const std::string_view tok(line.data() + pos,
                                 (last ? line.size() : next) - pos);
      vals[k] = parse_double(tok, path.string() + ":" + std::to_string(line_no));
      pos = last ? line.size() : next + 1;
    }
    imu.samples.push_back({vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]});
  }
  if (!header_seen) throw ParseError(path.string() + ": missing IMU header row");
  return imu;
}

std::string session_to_jsonl_line(const Session& s,
                                  const std::optional<std::string>& imu_file) {
  json j;
  j["subject_id"] = s.subject_id;
  if (s.label) j["label"] = to_string(*s.label);
  if (!s.meta.empty()) j["meta"] = s.meta;

  json cfg{{"seed", s.schedule.config.seed},
           {"isi_ms", s.schedule.config.isi_ms},
           {"stimulus_duration_ms", s.schedule.config.stimulus_duration_ms},
           {"practice_target_count", s.schedule.config.practice_target_count}};
  json events = json::array();
  for (const StimulusEvent& e : s.schedule.events) events.push_back(event_to_json(e));
  j["schedule"] = json{{"config", std::move(cfg)}, {"events", std::move(events)}};

  json trials = json::array();
  for (const TrialRecord& t : s.trials) {
    json jt{{"responded", t.responded}};
    if (t.rt_ms) jt["rt_ms"] = *t.rt_ms;
    trials.push_back(std::move(jt));
  }
  j["trials"] = std::move(trials);

  if (imu_file) {
    j["imu_file"] = *imu_file;
    j["imu_rate_hz"] = s.imu.rate_hz;
  } else {
    json samples = json::array();
    for (const ImuSample& m : s.imu.samples) {
      samples.push_back(json::array({m.t_s, m.ax, m.ay, m.az, m.gx, m.gy, m.gz}));
    }
    j["imu"] = json{{"rate_hz", s.imu.rate_hz}, {"samples", std::move(samples)}};
  }
  return j.dump();
}

Session session_from_jsonl_line(const std::string& line,
                                const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad session JSON: ") + e.what());
  }
  try {
    Session s;
    s.subject_id = j.at("subject_id").get<std::string>();
    if (j.contains("label")) {
      const auto l = label_from_string(j["label"].get<std::string>());
      if (!l) throw ParseError("unknown label " + j["label"].get<std::string>());
      s.label = *l;
    }
    if (j.contains("meta")) {
      for (const auto& [k, v] : j["meta"].items()) s.meta[k] = v.get<std::string>();
    }

    const json& sched = j.at("schedule");
    const json& cfg = sched.at("config");
    s.schedule.config.seed = cfg.at("seed").get<std::uint64_t>();
    s.schedule.config.isi_ms = cfg.at("isi_ms").get<double>();
    s.schedule.config.stimulus_duration_ms = cfg.at("stimulus_duration_ms").get<double>();
    s.schedule.config.practice_target_count = cfg.at("practice_target_count").get<int>();
    for (const json& je : sched.at("events")) s.schedule.events.push_back(event_from_json(je));

    for (const json& jt : j.at("trials")) {
      TrialRecord t;
      t.responded = jt.at("responded").get<bool>();
      if (jt.contains("rt_ms")) t.rt_ms = jt["rt_ms"].get<double>();
      const std::size_t i = s.trials.size();
      if (i < s.schedule.events.size()) t.stimulus = s.schedule.events[i];
      s.trials.push_back(std::move(t));
    }

    if (j.contains("imu_file")) {
      s.imu = read_imu_csv(base_dir / j["imu_file"].get<std::string>());
      if (j.contains("imu_rate_hz")) s.imu.rate_hz = j["imu_rate_hz"].get<int>();
    } else if (j.contains("imu")) {
      const json& ji = j["imu"];
      s.imu.rate_hz = ji.at("rate_hz").get<int>();
      for (const json& row : ji.at("samples")) {
        if (row.size() != 7) throw ParseError("imu sample row must have 7 values");
        s.imu.samples.push_back({row[0].get<double>(), row[1].get<double>(),
                                 row[2].get<double>(), row[3].get<double>(),
                                 row[4].get<double>(), row[5].get<double>(),
                                 row[6].get<double>()});
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad session JSON: ") + e.what());
  }
}

void write_dataset(const std::filesystem::path& dir, const Dataset& d,
                   bool externalize_imu, const std::string& comment) {
  std::filesystem::create_directories(dir);
  if (externalize_imu) std::filesystem::create_directories(dir / "imu");
  std::ofstream os(dir / "sessions.jsonl");
  if (!os) throw ParseError("cannot open for writing: " + (dir / "sessions.jsonl").string());
  for (const Session& s : d.sessions) {
    std::optional<std::string> ref;
    if (externalize_imu) {
      const std::string rel = "imu/" + s.subject_id + ".csv";
      write_imu_csv(dir / rel, s.imu, comment.empty() ? s.subject_id : comment);
      ref = rel;
    }
    os << session_to_jsonl_line(s, ref) << '\n';
  }
}

Dataset read_dataset(const std::filesystem::path& jsonl_path) {
  std::ifstream is(jsonl_path);
  if (!is) throw ParseError("cannot open: " + jsonl_path.string());
  Dataset d;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    d.sessions.push_back(session_from_jsonl_line(line, jsonl_path.parent_path()));
  }
  return d;
}

void write_schedule_csv(std::ostream& os, const StimulusSchedule& schedule,
                        const std::string& comment) {
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "section,part,index,modality,kind,onset_s\n";
  for (const StimulusEvent& e : schedule.events) {
    os << to_string(e.section) << ',' << e.part << ',' << e.index << ','
       << to_string(e.modality) << ',' << to_string(e.kind) << ',' << fmt_double(e.onset_s)
       << '\n';
  }
}

void write_schedule_csv(const std::filesystem::path& path, const StimulusSchedule& schedule,
                        const std::string& comment) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open for writing: " + path.string());
  write_schedule_csv(os, schedule, comment);
}

}  // namespace fishfinder
