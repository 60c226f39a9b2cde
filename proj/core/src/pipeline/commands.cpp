//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/pipeline/commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "fuelgen/chem/curate.h"
#include "fuelgen/chem/enumerate.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/covae/checkpoint.h"
#include "fuelgen/covae/evaluate.h"
#include "fuelgen/covae/loss.h"
#include "fuelgen/covae/train.h"
#include "fuelgen/hpo/bayes_opt.h"
#include "fuelgen/moo/nsga2.h"
#include "fuelgen/pipeline/io.h"
#include "fuelgen/pipeline/split.h"
#include "fuelgen/pipeline/synthetic_ron.h"
#include "fuelgen/regress/cv.h"
#include "fuelgen/regress/features.h"
#include "fuelgen/search/screen.h"
#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {
  fs::path require(const fs::path &p) {
    if (!fs::exists(p))
      throw MissingArtifactError("missing input " + p.string());
    return p;
  }

  void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw IoError("cannot write " + path.string());
    out << text;
  }

  json read_json(const fs::path &path) {
    std::ifstream in(require(path));
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
      throw ValidationError(path.string() + " is not valid JSON");
    return j;
  }

  struct Encoded {
    std::vector<TokenSeq> tokens;
    std::vector<std::string> smiles;
  };

  Encoded encode_all(const std::vector<std::string> &smiles,
                     const Vocab &vocab) {
    Encoded out;
    for (const std::string &s: smiles) {
      try {
        out.tokens.push_back(encode_tokens(s, vocab));
        out.smiles.push_back(s);
      } catch (const Error &e) {
        spdlog::warn("skipping {}: {}", s, e.what());
      }
    }
    return out;
  }

  class Context {
  public:
    explicit Context(const PipelineConfig &cfg): cfg(cfg) { }

    fs::path out(const char *name) const { return cfg.out_dir / name; }
    fs::path in(const char *name) const { return require(out(name)); }

    fs::path ron_table() const {
      return cfg.ron_table.empty() ? in(artifacts::kRonTable)
                                   : require(cfg.ron_table);
    }

    const PipelineConfig &cfg;
  };

  TrainingSet training_set(const Context &ctx, const Vocab &vocab) {
    std::unordered_map<std::string, double> labels;
    for (const RonRecord &r: read_ron_csv(ctx.in(artifacts::kRonTrain)))
      labels.emplace(r.smiles, r.ron);

    TrainingSet set;
    Encoded train = encode_all(read_smi(ctx.in(artifacts::kCorpusTrain)),
                               vocab);
    set.corpus = std::move(train.tokens);
    for (const std::string &s: train.smiles) {
      auto it = labels.find(s);
      set.ron.push_back(it == labels.end() ? std::nullopt
                                           : std::optional(it->second));
    }
    set.val_corpus = encode_all(read_smi(ctx.in(artifacts::kCorpusVal)), vocab)
                         .tokens;
    for (const RonRecord &r: read_ron_csv(ctx.in(artifacts::kRonVal))) {
      try {
        set.val_ron_tokens.push_back(encode_tokens(r.smiles, vocab));
        set.val_ron_labels.push_back(r.ron);
      } catch (const Error &e) {
        spdlog::warn("skipping {}: {}", r.smiles, e.what());
      }
    }
    return set;
  }

  struct CovaeScores {
    double recon = NAN;
    double char_acc = NAN;
    double validity = NAN;
    double ron_mae = NAN;
    double composite = NAN;
  };

  CovaeScores score_covae(const CoVaeModel &model,
                          const std::vector<TokenSeq> &corpus,
                          const std::vector<RonRecord> &ron, int samples,
                          std::uint64_t seed) {
    CovaeScores s;
    if (!corpus.empty()) {
      ReconstructionResult r = reconstruction_accuracy(model, corpus);
      s.recon = r.exact;
      s.char_acc = r.per_char;
    }
    s.validity = prior_validity(model, samples, seed);
    std::vector<TokenSeq> tokens;
    std::vector<double> labels;
    for (const RonRecord &r: ron) {
      try {
        tokens.push_back(encode_tokens(r.smiles, model.vocab()));
        labels.push_back(r.ron);
      } catch (const Error &) { }
    }
    if (!tokens.empty())
      s.ron_mae = head_mae(model, tokens, labels);
    if (std::isfinite(s.recon) && std::isfinite(s.ron_mae) && s.ron_mae > 0)
      s.composite = composite_score(s.recon, s.validity, s.ron_mae);
    return s;
  }

  // --- subcommands ---------------------------------------------------------

  void cmd_enumerate(const Context &ctx) {
    std::vector<std::string> mols =
        enumerate_molecules(ctx.cfg.enumerate_max_heavy, ctx.cfg.rules);
    write_smi(ctx.out(artifacts::kEnumerated), mols);
    spdlog::info("enumerated {} molecules", mols.size());
  }

  void cmd_curate(const Context &ctx) {
    const fs::path input = ctx.cfg.corpus.empty()
                               ? ctx.in(artifacts::kEnumerated)
                               : require(ctx.cfg.corpus);
    CurationResult r = curate(read_smi(input), ctx.cfg.rules);
    write_smi(ctx.out(artifacts::kCurated), r.kept);
    CsvTable rejects;
    rejects.header = { "smiles", "reason" };
    for (const CurationReject &x: r.rejects)
      rejects.rows.push_back({ x.smiles,
                               std::string(reject_reason_name(x.reason)) });
    write_csv(ctx.out(artifacts::kRejects), rejects);
    spdlog::info("kept {} molecules, rejected {}", r.kept.size(),
                 r.rejects.size());
  }

  void cmd_label(const Context &ctx) {
    std::vector<std::string> corpus = read_smi(ctx.in(artifacts::kCurated));
    std::mt19937_64 rng = make_rng(ctx.cfg.seed, { 0x1abe1 });
    std::shuffle(corpus.begin(), corpus.end(), rng);
    corpus.resize(std::min<std::size_t>(corpus.size(),
                                        static_cast<std::size_t>(
                                            ctx.cfg.label_count)));
    std::vector<RonRecord> table;
    for (const std::string &s: corpus)
      table.push_back({ s, synthetic_ron(parse_smiles(s)) });
    std::sort(table.begin(), table.end(),
              [](const RonRecord &a, const RonRecord &b) {
                return a.smiles < b.smiles;
              });
    write_ron_csv(ctx.out(artifacts::kRonTable), table);
    spdlog::info("labeled {} molecules", table.size());
  }

  void cmd_split(const Context &ctx) {
    const std::vector<std::string> corpus = read_smi(ctx.in(artifacts::kCurated));
    const std::vector<RonRecord> ron = read_ron_csv(ctx.ron_table());
    SplitResult s = split_dataset(corpus, ron, ctx.cfg.split, ctx.cfg.seed);
    write_smi(ctx.out(artifacts::kCorpusTrain), s.corpus_train);
    write_smi(ctx.out(artifacts::kCorpusVal), s.corpus_val);
    write_smi(ctx.out(artifacts::kCorpusTest), s.corpus_test);
    write_ron_csv(ctx.out(artifacts::kRonTrain), s.ron_train);
    write_ron_csv(ctx.out(artifacts::kRonVal), s.ron_val);
    write_ron_csv(ctx.out(artifacts::kRonTest), s.ron_test);
    spdlog::info("corpus {}/{}/{} (injected {}), RON {}/{}/{}",
                 s.corpus_train.size(), s.corpus_val.size(),
                 s.corpus_test.size(), s.injected, s.ron_train.size(),
                 s.ron_val.size(), s.ron_test.size());
  }

  void cmd_train_covae(const Context &ctx) {
    CoVaeModel model = make_model(ctx.cfg.covae);
    TrainingSet set = training_set(ctx, model.vocab());
    std::vector<MetricsRow> rows = train(model, set, [](const MetricsRow &r) {
      spdlog::info("epoch {} beta {:.3f} total {:.4f} val_recon {:.3f} "
                   "val_mae {:.3f}",
                   r.epoch, r.beta, r.total, r.val_recon_accuracy,
                   r.val_ron_mae);
    });
    write_metrics_csv(ctx.out(artifacts::kCovaeMetrics), rows);
    save_checkpoint(ctx.out(artifacts::kCheckpoint), model,
                    { ctx.cfg.covae.epochs, "" });

    const auto test = encode_all(read_smi(ctx.in(artifacts::kCorpusTest)),
                                 model.vocab());
    CovaeScores s = score_covae(model, test.tokens,
                                read_ron_csv(ctx.in(artifacts::kRonTest)),
                                ctx.cfg.prior_samples, ctx.cfg.seed);
    json j = { { "test_recon_accuracy", s.recon },
               { "test_char_accuracy", s.char_acc },
               { "prior_validity", s.validity },
               { "test_ron_mae", s.ron_mae },
               { "composite", s.composite } };
    write_text(ctx.out(artifacts::kCovaeEval), j.dump(2) + "\n");
  }

  void cmd_hpo_covae(const Context &ctx) {
    const HpoSpace space = HpoSpace::covae();
    const std::vector<std::string> metric_names { "recon_acc", "validity",
                                                  "ron_mae" };
    const std::vector<RonRecord> val_ron =
        read_ron_csv(ctx.in(artifacts::kRonVal));
    TrainingSet set = training_set(ctx, Vocab());

    HpoOptions opts = ctx.cfg.hpo;
    opts.seed = ctx.cfg.seed;
    const fs::path trace_path = ctx.out(artifacts::kHpoTrace);
    std::vector<Observation> resume;
    if (fs::exists(trace_path)) {
      resume = read_trace(trace_path, space, metric_names, "composite");
      spdlog::info("resuming HPO after {} evaluations", resume.size());
    }
    std::vector<Observation> trace = resume;

    auto evaluator = [&](const Eigen::VectorXd &native) {
      CoVaeConfig c = apply_covae_point(ctx.cfg.covae, native);
      c.epochs = ctx.cfg.hpo_epochs;
      c.beta_ramp_epochs = std::min(c.beta_ramp_epochs, c.epochs);
      CoVaeModel model = make_model(c);
      train(model, set);
      CovaeScores s = score_covae(model, set.val_corpus, val_ron,
                                  ctx.cfg.prior_samples, ctx.cfg.seed);
      if (!std::isfinite(s.composite))
        throw DomainError("composite score undefined");
      return Evaluation { s.composite, { s.recon, s.validity, s.ron_mae } };
    };
    HpoResult r = run_hpo(space, opts, evaluator, resume,
                          [&](const Observation &o) {
                            trace.push_back(o);
                            write_trace(trace_path, space, metric_names,
                                        "composite", trace);
                            spdlog::info("hpo evaluation {} composite {}",
                                         trace.size(), o.score);
                          });
    write_trace(trace_path, space, metric_names, "composite", r.trace);

    KeyValueConfig best;
    for (int i = 0; i < space.dim(); ++i)
      best.set("covae." + space.axes()[i].name,
               std::to_string(std::lround(r.best.native[i])));
    write_text(ctx.out(artifacts::kHpoBest), best.dump());
  }

  Dataset features_of(const CoVaeModel &model,
                      const std::vector<RonRecord> &records) {
    return extract_features(model, records).data;
  }

  void cmd_fit_regressor(const Context &ctx) {
    const CoVaeModel model = load_checkpoint(ctx.in(artifacts::kCheckpoint));
    const Dataset train = features_of(model,
                                      read_ron_csv(ctx.in(artifacts::kRonTrain)));
    const Dataset test = features_of(model,
                                     read_ron_csv(ctx.in(artifacts::kRonTest)));
    if (train.size() < 2)
      throw ValidationError("regression needs at least two training samples");

    RegressorParams base = ctx.cfg.regressor;
    base.knn.k = std::min(base.knn.k, train.size());
    const int folds = std::min(ctx.cfg.cv_folds, train.size());

    CsvTable metrics, cv;
    metrics.header = { "model", "mae", "rmse", "r2" };
    cv.header = { "model", "r2_mean", "r2_std", "mae_mean", "mae_std",
                  "rmse_mean", "rmse_std", "summary" };
    Regressor chosen;
    for (RegressorFamily f: { RegressorFamily::kGbt, RegressorFamily::kRidge,
                              RegressorFamily::kKnn }) {
      RegressorParams p = base;
      p.family = f;
      Regressor r = fit_regressor(train, p);
      const std::string name(family_name(f));
      if (test.size() > 0) {
        Eigen::VectorXd pred = r.predict_rows(test.x);
        RegMetrics m = compute_metrics(
            std::span<const double>(test.y.data(), test.y.size()),
            std::span<const double>(pred.data(), pred.size()));
        metrics.rows.push_back({ name, format_double(m.mae),
                                 format_double(m.rmse), format_double(m.r2) });
      }
      if (folds >= 2) {
        CvSummary s = kfold_cv(train, folds, p, ctx.cfg.seed);
        cv.rows.push_back({ name, format_double(s.mean.r2),
                            format_double(s.std.r2), format_double(s.mean.mae),
                            format_double(s.std.mae),
                            format_double(s.mean.rmse),
                            format_double(s.std.rmse), s.format() });
        spdlog::info("{} {}-fold CV: {}", name, folds, s.format());
      }
      if (f == base.family)
        chosen = std::move(r);
    }
    write_csv(ctx.out(artifacts::kRegressorMetrics), metrics);
    write_csv(ctx.out(artifacts::kRegressorCv), cv);
    save_regressor(ctx.out(artifacts::kRegressor), chosen);
  }

  struct GenomeCodec {
    std::vector<Gene> genes;
    std::function<RegressorParams(const Genome &)> decode;
    std::function<KeyValueConfig(const Genome &)> to_config;
  };

  GenomeCodec regressor_codec(const RegressorParams &base, int n_train) {
    GenomeCodec c;
    switch (base.family) {
    case RegressorFamily::kGbt:
      c.genes = { { "n_estimators", GeneKind::kInteger, 10, 300 },
                  { "max_depth", GeneKind::kInteger, 1, 8 },
                  { "learning_rate", GeneKind::kContinuous, 0.01, 1.0 },
                  { "min_samples_leaf", GeneKind::kInteger, 1, 10 } };
      c.decode = [base](const Genome &g) {
        RegressorParams p = base;
        p.gbt.n_estimators = static_cast<int>(g[0]);
        p.gbt.max_depth = static_cast<int>(g[1]);
        p.gbt.learning_rate = g[2];
        p.gbt.min_samples_leaf = static_cast<int>(g[3]);
        return p;
      };
      break;
    case RegressorFamily::kRidge:
      c.genes = { { "alpha", GeneKind::kContinuous, 0.1, 100.0 } };
      c.decode = [base](const Genome &g) {
        RegressorParams p = base;
        p.ridge_alpha = g[0];
        return p;
      };
      break;
    case RegressorFamily::kKnn:
      c.genes = { { "k", GeneKind::kInteger, 1,
                    static_cast<double>(std::clamp(n_train, 1, 50)) },
                  { "weights", GeneKind::kCategorical, 0, 1 },
                  { "p", GeneKind::kCategorical, 0, 1 } };
      c.decode = [base](const Genome &g) {
        RegressorParams p = base;
        p.knn.k = static_cast<int>(g[0]);
        p.knn.weights = g[1] == 0 ? KnnWeights::kUniform
                                  : KnnWeights::kDistance;
        p.knn.p = static_cast<int>(g[2]) + 1;
        return p;
      };
      break;
    }
    c.to_config = [decode = c.decode](const Genome &g) {
      PipelineConfig pc;
      pc.regressor = decode(g);
      KeyValueConfig all = pc.to_key_values(), out;
      for (const auto &[k, v]: all.values()) {
        if (k.rfind("regressor.", 0) == 0 && k != "regressor.cv_folds")
          out.set(k, v);
      }
      return out;
    };
    return c;
  }

  void cmd_hpo_regressor(const Context &ctx) {
    const CoVaeModel model = load_checkpoint(ctx.in(artifacts::kCheckpoint));
    const Dataset train = features_of(model,
                                      read_ron_csv(ctx.in(artifacts::kRonTrain)));
    const int folds = std::min(ctx.cfg.cv_folds, train.size());
    if (folds < 2)
      throw ValidationError("too few RON training samples for CV");
    // Smallest CV training fold bounds the neighbor count.
    const int min_fit = train.size() - (train.size() + folds - 1) / folds;
    const GenomeCodec codec = regressor_codec(ctx.cfg.regressor, min_fit);

    NsgaOptions opts = ctx.cfg.nsga;
    opts.seed = ctx.cfg.seed;
    auto evaluator = [&](const Genome &g, std::uint64_t) {
      CvSummary s = kfold_cv(train, folds, codec.decode(g), ctx.cfg.seed);
      return Objectives { s.mean.mae, s.mean.rmse,
                          s.mean.r2_defined ? -s.mean.r2 : INFINITY };
    };
    MooResult r = evolve(codec.genes, evaluator, opts);
    write_history(ctx.out(artifacts::kMooHistory), r.history);

    CsvTable front;
    for (const Gene &g: codec.genes)
      front.header.push_back(g.name);
    front.header.insert(front.header.end(), { "mae", "rmse", "neg_r2" });
    for (const MooIndividual &m: r.front) {
      std::vector<std::string> row;
      for (double v: m.genome)
        row.push_back(format_double(v));
      for (double v: m.objectives)
        row.push_back(format_double(v));
      front.rows.push_back(std::move(row));
    }
    write_csv(ctx.out(artifacts::kMooFront), front);

    const MooIndividual best = select_best(r.front);
    write_text(ctx.out(artifacts::kMooBest), codec.to_config(best.genome).dump());
    spdlog::info("selected MAE {} from a front of {}", best.objectives[0],
                 r.front.size());
  }

  void cmd_screen(const Context &ctx) {
    const Regressor reg = load_regressor(ctx.in(artifacts::kRegressor));
    const CoVaeModel model = load_checkpoint(ctx.in(artifacts::kCheckpoint));
    if (reg.n_features() != model.latent_dim())
      throw ValidationError("regressor expects "
                            + std::to_string(reg.n_features())
                            + " features but the latent space has "
                            + std::to_string(model.latent_dim()));

    const std::vector<RonRecord> ron = read_ron_csv(ctx.ron_table());
    ScreenConfig sc = ctx.cfg.screen;
    sc.seed = ctx.cfg.seed;
    if (ctx.cfg.threshold_quantile) {
      std::vector<double> labels;
      for (const RonRecord &r: ron)
        labels.push_back(r.ron);
      sc.threshold = quantile(labels, *ctx.cfg.threshold_quantile);
    }

    std::vector<std::string> ron_smiles;
    for (const RonRecord &r: ron)
      ron_smiles.push_back(r.smiles);
    const std::vector<std::string> corpus =
        read_smi(ctx.in(artifacts::kCurated));
    const std::vector<std::string> train =
        read_smi(ctx.in(artifacts::kCorpusTrain));

    // Bounds come from the training corpus; novelty is judged against the
    // whole curated corpus.
    ScreenResult r = screen(model, reg, ron_smiles, train, sc);
    std::unordered_set<std::string> curated(corpus.begin(), corpus.end());
    for (CandidateRecord &c: r.accepted) {
      if (c.novelty == Novelty::kNovel && curated.contains(c.canonical))
        c.novelty = Novelty::kInCorpus;
    }

    write_candidates_csv(ctx.out(artifacts::kCandidates), r.accepted);
    write_candidate_latents(ctx.out(artifacts::kCandidateLatents), r.accepted);
    write_element_distribution(ctx.out(artifacts::kElements), r.accepted);

    std::map<std::string, int> novelty;
    for (Novelty n: { Novelty::kInRonTable, Novelty::kInCorpus,
                      Novelty::kNovel })
      novelty[std::string(novelty_name(n))] = 0;
    for (const CandidateRecord &c: r.accepted)
      ++novelty[std::string(novelty_name(c.novelty))];
    json j = { { "threshold", sc.threshold },
               { "runs", sc.runs },
               { "harvested", r.harvested },
               { "invalid", r.invalid },
               { "below_threshold", r.below_threshold },
               { "duplicates", r.duplicates },
               { "accepted", r.accepted.size() },
               { "novelty", novelty },
               { "run_best", r.run_best },
               { "degenerate_dimensions", r.bounds.degenerate } };
    write_text(ctx.out(artifacts::kScreenSummary), j.dump(2) + "\n");
    spdlog::info("accepted {} candidates above {}", r.accepted.size(),
                 sc.threshold);
  }

  void cmd_report(const Context &ctx) {
    const CsvTable cand = read_csv(ctx.in(artifacts::kCandidates));
    const CsvTable elem = read_csv(ctx.in(artifacts::kElements));

    std::map<std::string, long long> novelty;
    const int nc = cand.column("novelty");
    for (const auto &row: cand.rows)
      ++novelty[row.at(nc)];
    long long elem_total = 0;
    const int cc = elem.column("count");
    for (const auto &row: elem.rows)
      elem_total += parse_int(row.at(cc));
    long long novelty_total = 0;
    for (const auto &[k, v]: novelty)
      novelty_total += v;

    const long long total = static_cast<long long>(cand.rows.size());
    if (elem_total != total || novelty_total != total)
      throw ValidationError("report totals disagree: candidates "
                            + std::to_string(total) + ", elements "
                            + std::to_string(elem_total) + ", novelty "
                            + std::to_string(novelty_total));

    json summary;
    summary["candidates"] = { { "total", total }, { "novelty", novelty } };
    summary["element_distribution_total"] = elem_total;

    if (fs::exists(ctx.out(artifacts::kCovaeMetrics))) {
      const CsvTable m = read_csv(ctx.out(artifacts::kCovaeMetrics));
      json last = json::object();
      if (!m.rows.empty()) {
        for (std::size_t i = 0; i < m.header.size(); ++i)
          last[m.header[i]] = parse_double(m.rows.back().at(i));
      }
      summary["covae"] = { { "epochs", m.rows.size() }, { "final", last } };
    }
    if (fs::exists(ctx.out(artifacts::kCovaeEval)))
      summary["covae_test"] = read_json(ctx.out(artifacts::kCovaeEval));
    if (fs::exists(ctx.out(artifacts::kRegressorMetrics))) {
      const CsvTable m = read_csv(ctx.out(artifacts::kRegressorMetrics));
      json rows = json::array();
      for (const auto &row: m.rows)
        rows.push_back({ { "model", row.at(0) },
                         { "mae", parse_double(row.at(1)) },
                         { "rmse", parse_double(row.at(2)) },
                         { "r2", parse_double(row.at(3)) } });
      summary["regressors"] = rows;
    }
    if (fs::exists(ctx.out(artifacts::kScreenSummary)))
      summary["screen"] = read_json(ctx.out(artifacts::kScreenSummary));

    json config = json::object();
    const KeyValueConfig kv = ctx.cfg.to_key_values();
    for (const auto &[k, v]: kv.values()) {
      if (k.rfind("paths.", 0) != 0)
        config[k] = v;
    }
    summary["config"] = config;
    write_text(ctx.out(artifacts::kRunSummary), summary.dump(2) + "\n");
    spdlog::info("report: {} candidates", total);
  }

  using Handler = void (*)(const Context &);

  const std::vector<std::pair<CommandInfo, Handler>> &table() {
    static const std::vector<std::pair<CommandInfo, Handler>> t {
      { { "enumerate", "enumerate C/O molecules up to a heavy-atom count" },
        cmd_enumerate },
      { { "curate", "canonicalize, filter and deduplicate a corpus" },
        cmd_curate },
      { { "label", "attach synthetic RON labels to a corpus sample" },
        cmd_label },
      { { "split", "stratified train/validation/test split" }, cmd_split },
      { { "train-covae", "train the Co-VAE and evaluate it" },
        cmd_train_covae },
      { { "hpo-covae", "Bayesian optimization of Co-VAE sizes" },
        cmd_hpo_covae },
      { { "fit-regressor", "fit RON regressors on latent means" },
        cmd_fit_regressor },
      { { "hpo-regressor", "NSGA-II tuning of the regressor" },
        cmd_hpo_regressor },
      { { "screen", "latent-space search with two-step validation" },
        cmd_screen },
      { { "report", "aggregate artifacts into a run summary" }, cmd_report },
    };
    return t;
  }
}  // namespace

const std::vector<CommandInfo> &commands() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> v;
    for (const auto &[info, h]: table())
      v.push_back(info);
    return v;
  }();
  return infos;
}

void run_command(std::string_view name, const PipelineConfig &cfg) {
  auto it = std::find_if(table().begin(), table().end(),
                         [&](const auto &e) { return e.first.name == name; });
  if (it == table().end())
    throw ValidationError("unknown command '" + std::string(name) + "'");
  cfg.validate();
  if (cfg.out_dir.empty())
    throw ValidationError("no output directory; pass --out-dir or set "
                          + std::string(kOutputRootEnv));
  OutputLock lock(cfg.out_dir);
  it->second(Context(cfg));
}

}  // namespace fuelgen
