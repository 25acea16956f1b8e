#include "spaceform/scene.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

void parse_exports(const std::string& text, spaceform::SceneConfig& cfg) {
  cfg.export_obj = false;
  cfg.export_json = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "obj") cfg.export_obj = true;
    else if (item == "json")
      cfg.export_json = true;
    else
      throw CLI::ValidationError("--export", "unknown export kind '" + item + "'");
  }
}

int run_one_scene(const spaceform::SceneConfig& cfg) {
  try {
    const spaceform::SceneResult result = spaceform::run_scene(cfg);
    std::cout << "scene " << cfg.scene << " done\n";
    for (const auto& f : result.written_files) std::cout << "wrote " << f << "\n";
    std::printf("elapsed_ms %.3f\n", result.elapsed_ms);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral invariant surfaces in constant-curvature space forms"};
  app.require_subcommand(1);

  struct SceneArgs {
    std::string config_path;
    int depth = -1;
    std::string base_point;
    std::string exports;
    std::string out_dir;
    long long seed = -1;
    std::string preset;
  };
  std::vector<std::pair<CLI::App*, std::shared_ptr<SceneArgs>>> scene_subs;

  for (const std::string& name : spaceform::scene_names()) {
    auto args = std::make_shared<SceneArgs>();
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " scene");
    sub->add_option("--config", args->config_path, "JSON config file");
    sub->add_option("--depth", args->depth, "orbit depth (0..8)")->check(CLI::Range(0, 8));
    sub->add_option("--base-point", args->base_point, "base point as x,y,z");
    sub->add_option("--seed", args->seed, "random seed");
    sub->add_option("--export", args->exports, "comma list of obj,json");
    sub->add_option("--out", args->out_dir, "output directory");
    if (name == "generalized")
      sub->add_option("--preset", args->preset, "ideal-tetrahedron | hyperideal-cube | rejected-cube");
    scene_subs.emplace_back(sub, args);
  }

  uint64_t verify_seed = 0;
  double tolerance_scale = 1.0;
  std::string verify_out = "out";
  CLI::App* verify = app.add_subcommand("verify", "run every acceptance check");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--tolerance-scale", tolerance_scale, "scale all bounds");
  verify->add_option("--out", verify_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed())
    return spaceform::verify_all(verify_seed, tolerance_scale, verify_out, std::cout);

  for (const auto& [sub, args] : scene_subs) {
    if (!sub->parsed()) continue;
    spaceform::SceneConfig cfg;
    try {
      if (!args->config_path.empty()) cfg = spaceform::config_from_json_file(args->config_path);
      cfg.scene = sub->get_name();
      if (args->depth >= 0) cfg.depth = args->depth;
      if (!args->base_point.empty()) cfg.base_point = parse_point(args->base_point);
      if (args->seed >= 0) cfg.seed = static_cast<uint64_t>(args->seed);
      if (!args->exports.empty()) parse_exports(args->exports, cfg);
      if (!args->out_dir.empty()) cfg.out_dir = args->out_dir;
      if (!args->preset.empty()) cfg.preset = args->preset;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    return run_one_scene(cfg);
  }
  return 2;
}
