#pragma once

#include "spaceform/dual.hpp"
#include "spaceform/groups.hpp"
#include "spaceform/hull.hpp"
#include "spaceform/jsonio.hpp"
#include "spaceform/metric.hpp"
#include "spaceform/rigidity.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spaceform {

struct SceneConfig {
  std::string scene;
  int depth = 3;
  std::vector<double> base_point;  // chart coordinates; empty = scene default
  uint64_t seed = 0;
  bool export_obj = true;
  bool export_json = true;
  std::string out_dir = "out";
  std::string preset;  // generalized scene preset
};

// Parse a scene configuration from a JSON file with keys scene, depth,
// base_point, seed, export, out, preset.
SceneConfig config_from_json_file(const std::string& path);

std::vector<std::string> scene_names();
std::vector<std::string> generalized_presets();

struct SceneResult {
  Json report;
  std::vector<std::string> written_files;
  double elapsed_ms = 0;
};

// Build the scene's surfaces and report; write report.json and the OBJ
// exports under the configured output directory.
SceneResult run_scene(const SceneConfig& cfg);

void write_obj(const std::string& path, const std::vector<Vec3>& vertices,
               const std::vector<std::vector<int>>& faces,
               const std::vector<std::string>& comments);

struct CriterionResult {
  int id = 0;
  std::string name;
  double measured = 0;
  double bound = 0;
  bool pass = false;
};

// Run every acceptance check, print one line per criterion to `out`, write
// verify_report.json under out_dir, and return 0 when everything passes.
int verify_all(uint64_t seed, double tolerance_scale, const std::string& out_dir,
               std::ostream& out);

}  // namespace spaceform
