//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/checkpoint.h"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

#include "fuelgen/util/error.h"

namespace fuelgen {

using nlohmann::json;

int major_version(std::string_view version) {
  int major = -1;
  auto dot = version.find('.');
  std::string_view head = version.substr(0, dot);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(),
                                   major);
  if (ec != std::errc() || ptr != head.data() + head.size() || major < 0)
    return -1;
  return major;
}

namespace {
  json config_to_json(const CoVaeConfig &cfg) {
    return {
      { "num_layers", cfg.num_layers },
      { "hidden_size", cfg.hidden_size },
      { "fc1_size", cfg.fc1_size },
      { "fc2_size", cfg.fc2_size },
      { "cond1_size", cfg.cond1_size },
      { "cond2_size", cfg.cond2_size },
      { "latent_dim", cfg.latent_dim },
      { "batch_size", cfg.batch_size },
      { "learning_rate", cfg.learning_rate },
      { "epochs", cfg.epochs },
      { "beta_ramp_epochs", cfg.beta_ramp_epochs },
      { "beta_cap", cfg.beta_cap },
      { "seed", cfg.seed },
      { "output", std::string(decoder_output_name(cfg.output)) },
      { "allow_out_of_range", cfg.allow_out_of_range },
    };
  }

  CoVaeConfig config_from_json(const json &j) {
    CoVaeConfig cfg;
    cfg.num_layers = j.at("num_layers").get<int>();
    cfg.hidden_size = j.at("hidden_size").get<int>();
    cfg.fc1_size = j.at("fc1_size").get<int>();
    cfg.fc2_size = j.at("fc2_size").get<int>();
    cfg.cond1_size = j.at("cond1_size").get<int>();
    cfg.cond2_size = j.at("cond2_size").get<int>();
    cfg.latent_dim = j.at("latent_dim").get<int>();
    cfg.batch_size = j.at("batch_size").get<int>();
    cfg.learning_rate = j.at("learning_rate").get<double>();
    cfg.epochs = j.at("epochs").get<int>();
    cfg.beta_ramp_epochs = j.at("beta_ramp_epochs").get<int>();
    cfg.beta_cap = j.at("beta_cap").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.output = parse_decoder_output(j.at("output").get<std::string>());
    cfg.allow_out_of_range = j.at("allow_out_of_range").get<bool>();
    return cfg;
  }

  void append_le(std::string &out, double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof bits);
    for (int i = 0; i < 8; ++i)
      out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
  }

  double read_le(const char *p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i]))
              << (8 * i);
    double value;
    std::memcpy(&value, &bits, sizeof value);
    return value;
  }
}  // namespace

std::string serialize_checkpoint(const CoVaeModel &model,
                                 const CheckpointInfo &info) {
  json layout = json::array();
  for (const ParamBlock &b: model.layout().blocks())
    layout.push_back({ { "name", b.name }, { "rows", b.rows },
                       { "cols", b.cols }, { "offset", b.offset } });

  json vocab = json::array();
  for (char c: model.vocab().symbols())
    vocab.push_back(std::string(1, c));

  json header = {
    { "format", kCheckpointFormat },
    { "format_version", kCheckpointVersion },
    { "config", config_to_json(model.config()) },
    { "vocab", vocab },
    { "epoch", info.epoch },
    { "rng_state", info.rng_state },
    { "ron_offset", model.ron_offset },
    { "ron_scale", model.ron_scale },
    { "storage", "column-major" },
    { "byte_order", "little" },
    { "param_count", model.params().size() },
    { "layout", layout },
  };

  std::string out = header.dump();
  out.push_back('\n');
  out.reserve(out.size() + 8 * model.params().size());
  for (double v: model.params())
    append_le(out, v);
  return out;
}

CoVaeModel deserialize_checkpoint(std::string_view bytes,
                                  CheckpointInfo *info) {
  auto newline = bytes.find('\n');
  if (newline == std::string_view::npos)
    throw ValidationError("checkpoint header is not terminated");

  json header = json::parse(bytes.substr(0, newline), nullptr, false);
  if (header.is_discarded() || !header.is_object())
    throw ValidationError("checkpoint header is not valid JSON");
  if (header.value("format", "") != kCheckpointFormat)
    throw VersionError("not a Co-VAE checkpoint");
  std::string version = header.value("format_version", "");
  if (major_version(version) != major_version(kCheckpointVersion))
    throw VersionError("checkpoint format version " + version
                       + " is incompatible with "
                       + std::string(kCheckpointVersion));

  try {
    std::string symbols;
    for (const auto &s: header.at("vocab")) {
      std::string sym = s.get<std::string>();
      if (sym.size() != 1)
        throw ValidationError("vocab symbols must be single characters");
      symbols += sym;
    }
    CoVaeModel model(config_from_json(header.at("config")), Vocab(symbols));
    model.ron_offset = header.at("ron_offset").get<double>();
    model.ron_scale = header.at("ron_scale").get<double>();

    const auto count = header.at("param_count").get<std::size_t>();
    if (count != model.layout().total_size())
      throw ValidationError("checkpoint parameter count does not match its "
                            "configuration");
    std::string_view payload = bytes.substr(newline + 1);
    if (payload.size() != 8 * count)
      throw ValidationError("checkpoint payload has "
                            + std::to_string(payload.size())
                            + " bytes, expected "
                            + std::to_string(8 * count));
    for (std::size_t i = 0; i < count; ++i)
      model.params()[static_cast<Eigen::Index>(i)] =
          read_le(payload.data() + 8 * i);
    if (!model.params().allFinite())
      throw ValidationError("checkpoint contains non-finite parameters");

    if (info != nullptr) {
      info->epoch = header.at("epoch").get<int>();
      info->rng_state = header.at("rng_state").get<std::string>();
    }
    return model;
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed checkpoint header: ")
                          + e.what());
  }
}

void save_checkpoint(const std::filesystem::path &path,
                     const CoVaeModel &model, const CheckpointInfo &info) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + path.string());
  const std::string bytes = serialize_checkpoint(model, info);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out)
    throw IoError("failed writing " + path.string());
}

CoVaeModel load_checkpoint(const std::filesystem::path &path,
                           CheckpointInfo *info) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MissingArtifactError("missing checkpoint " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return deserialize_checkpoint(bytes, info);
}

}  // namespace fuelgen
