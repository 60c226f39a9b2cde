//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "fuelgen/pipeline/commands.h"
#include "fuelgen/pipeline/config.h"
#include "fuelgen/util/error.h"

namespace {

void print_error(std::string_view command, std::string_view kind,
                 std::string_view message) {
  nlohmann::json j = { { "command", command },
                       { "error", kind },
                       { "message", message } };
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char **argv) {
  using namespace fuelgen;

  CLI::App app { "Generative fuel design pipeline" };
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir, config_path, log_level = "info";
  std::optional<std::uint64_t> seed;
  bool desk = false, paper = false;
  app.add_option("--out-dir", out_dir,
                 std::string("output directory (default: $")
                     + kOutputRootEnv + ")");
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--seed", seed, "global seed");
  auto *desk_flag = app.add_flag("--desk-scale", desk,
                                 "small single-core presets (default)");
  app.add_flag("--paper-scale", paper, "full-size presets")
      ->excludes(desk_flag);
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error")
      ->check(CLI::IsMember({ "trace", "debug", "info", "warn", "error",
                              "off" }));

  std::map<std::string, std::string> overrides;
  for (const ConfigField &f: config_fields()) {
    if (f.key == "seed")
      continue;  // has its own option above
    app.add_option_function<std::string>(
           "--" + f.key,
           [&overrides, key = f.key](const std::string &v) {
             overrides[key] = v;
           },
           f.help)
        ->group("Configuration");
  }

  std::string command;
  for (const CommandInfo &c: commands()) {
    app.add_subcommand(c.name, c.help)->callback([&command, name = c.name] {
      command = name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  auto logger = spdlog::stderr_color_mt("fuelgen");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    PipelineConfig cfg = paper ? PipelineConfig::paper_scale()
                               : PipelineConfig::desk_scale();
    if (!config_path.empty())
      cfg.apply(KeyValueConfig::load(config_path));
    KeyValueConfig flags;
    for (const auto &[k, v]: overrides)
      flags.set(k, v);
    cfg.apply(flags);
    if (seed)
      cfg.seed = *seed;
    if (!out_dir.empty())
      cfg.out_dir = out_dir;
    if (cfg.out_dir.empty()) {
      if (const char *env = std::getenv(kOutputRootEnv))
        cfg.out_dir = env;
    }
    // Sub-configurations inherit the global seed.
    cfg.covae.seed = cfg.seed;

    run_command(command, cfg);
  } catch (const Error &e) {
    print_error(command, e.kind(), e.what());
    return 2;
  } catch (const std::exception &e) {
    print_error(command, "InternalError", e.what());
    return 3;
  }
  return 0;
}
