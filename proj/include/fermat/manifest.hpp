#ifndef FERMAT_MANIFEST_HPP
#define FERMAT_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fermat {

inline constexpr const char* kToolVersion = "0.1.0";

// Record of one CLI run: the exact argv, the resolved parameter tree (as a
// JSON string), the seed, and the files written. Re-running the recorded
// argv reproduces all numeric outputs exactly on the same platform.
struct RunManifest {
  std::vector<std::string> command;
  std::string config_json;  // resolved parameters, JSON object
  std::uint64_t seed = 0;
  std::vector<std::string> artifacts;
  std::string tool_version = kToolVersion;
  double wall_time_seconds = 0.0;
};

void save_manifest(const RunManifest& manifest, const std::string& path);
RunManifest load_manifest(const std::string& path);

}  // namespace fermat

#endif  // FERMAT_MANIFEST_HPP
