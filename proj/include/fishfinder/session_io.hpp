#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fishfinder/types.hpp"

namespace fishfinder {

// Session files are JSON Lines, one session per line. The IMU stream is
// either embedded ("imu") or externalized to a sibling CSV referenced by
// relative path ("imu_file"). The CSV has the header
// t_s,ax,ay,az,gx,gy,gz and '.' as decimal separator; leading '#' lines
// are comments. Doubles are written with enough digits to round-trip
// exactly in both formats.

void write_imu_csv(const std::filesystem::path& path, const ImuStream& imu,
                   const std::string& comment = "");
ImuStream read_imu_csv(const std::filesystem::path& path);

// imu_file, when set, is stored instead of the embedded stream
std::string session_to_jsonl_line(const Session& s,
                                  const std::optional<std::string>& imu_file = std::nullopt);
// base_dir resolves a relative imu_file reference
Session session_from_jsonl_line(const std::string& line,
                                const std::filesystem::path& base_dir);

// dir/sessions.jsonl plus dir/imu/<subject_id>.csv when externalizing
void write_dataset(const std::filesystem::path& dir, const Dataset& d,
                   bool externalize_imu = true, const std::string& comment = "");
Dataset read_dataset(const std::filesystem::path& jsonl_path);

void write_schedule_csv(std::ostream& os, const StimulusSchedule& schedule,
                        const std::string& comment = "");
void write_schedule_csv(const std::filesystem::path& path, const StimulusSchedule& schedule,
                        const std::string& comment = "");

}  // namespace fishfinder
