#include "fermat/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fermat {

void save_manifest(const RunManifest& manifest, const std::string& path) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["config"] = manifest.config_json.empty()
                    ? nlohmann::json::object()
                    : nlohmann::json::parse(manifest.config_json);
  j["seed"] = manifest.seed;
  j["artifacts"] = manifest.artifacts;
  j["tool_version"] = manifest.tool_version;
  j["wall_time_seconds"] = manifest.wall_time_seconds;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;

  RunManifest m;
  m.command = j.at("command").get<std::vector<std::string>>();
  m.config_json = j.at("config").dump();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.artifacts = j.at("artifacts").get<std::vector<std::string>>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.wall_time_seconds = j.value("wall_time_seconds", 0.0);
  return m;
}

}  // namespace fermat
