//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/hpo/bayes_opt.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <spdlog/spdlog.h>

#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

namespace {
  constexpr int kRefinedStarts = 5;
  constexpr double kCompassStart = 0.25;
  constexpr double kCompassStop = 1e-4;

  Eigen::VectorXd uniform_point(int dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::VectorXd p(dim);
    for (int i = 0; i < dim; ++i)
      p[i] = u(rng);
    return p;
  }

  struct Scored {
    Eigen::VectorXd point;
    double value;
  };

  Scored compass_search(const GaussianProcess &gp, Scored start,
                        double kappa) {
    double step = kCompassStart;
    while (step > kCompassStop) {
      bool moved = false;
      for (Eigen::Index i = 0; i < start.point.size() && !moved; ++i) {
        for (double sign: { 1.0, -1.0 }) {
          Eigen::VectorXd trial = start.point;
          trial[i] = std::clamp(trial[i] + sign * step, 0.0, 1.0);
          double v = acquisition(gp, trial, kappa);
          if (v > start.value) {
            start = { std::move(trial), v };
            moved = true;
            break;
          }
        }
      }
      if (!moved)
        step *= 0.5;
    }
    return start;
  }

  bool contains(const std::vector<Eigen::VectorXd> &set,
                const Eigen::VectorXd &p) {
    return std::any_of(set.begin(), set.end(), [&](const Eigen::VectorXd &q) {
      return (q - p).lpNorm<Eigen::Infinity>() < 1e-12;
    });
  }

  Observation evaluate(const HpoSpace &space, const Evaluator &evaluator,
                       const Eigen::VectorXd &unit) {
    Observation obs;
    obs.native = space.to_native(unit);
    obs.unit = space.to_unit(obs.native);
    try {
      Evaluation e = evaluator(obs.native);
      obs.score = e.score;
      obs.metrics = std::move(e.metrics);
      if (!std::isfinite(obs.score)) {
        obs.note = "non-finite score";
        obs.score = -std::numeric_limits<double>::infinity();
      }
    } catch (const std::exception &e) {
      obs.score = -std::numeric_limits<double>::infinity();
      obs.note = e.what();
    }
    if (!obs.note.empty())
      spdlog::warn("hpo evaluation failed: {}", obs.note);
    return obs;
  }

  Observation best_of(const std::vector<Observation> &trace) {
    auto it = std::max_element(trace.begin(), trace.end(),
                               [](const Observation &a, const Observation &b) {
                                 return a.score < b.score;
                               });
    return *it;
  }
}  // namespace

std::vector<Eigen::VectorXd>
suggest_batch(const std::vector<Observation> &observed, const HpoSpace &space,
              int q, const HpoOptions &opts, std::uint64_t stream) {
  if (q < 1)
    throw ValidationError("batch size must be at least 1");
  std::mt19937_64 rng = make_rng(opts.seed, { stream, 1 });
  const int dim = space.dim();

  std::vector<Eigen::VectorXd> xs;
  std::vector<double> ys;
  for (const Observation &o: observed) {
    if (std::isfinite(o.score)) {
      xs.push_back(o.unit);
      ys.push_back(o.score);
    }
  }

  std::vector<Eigen::VectorXd> picks;
  if (xs.empty()) {
    while (static_cast<int>(picks.size()) < q)
      picks.push_back(space.snap(uniform_point(dim, rng)));
    return picks;
  }
  const double lie = *std::min_element(ys.begin(), ys.end());

  for (int k = 0; k < q; ++k) {
    Eigen::MatrixXd x(xs.size(), dim);
    for (std::size_t i = 0; i < xs.size(); ++i)
      x.row(static_cast<Eigen::Index>(i)) = xs[i];
    GaussianProcess gp(x, Eigen::Map<const Eigen::VectorXd>(
                              ys.data(), static_cast<Eigen::Index>(ys.size())),
                       opts.gp);

    std::vector<Scored> cands;
    for (int s = 0; s < opts.random_starts; ++s) {
      Eigen::VectorXd p = uniform_point(dim, rng);
      double v = acquisition(gp, p, opts.kappa);
      cands.push_back({ std::move(p), v });
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Scored &a, const Scored &b) {
                       return a.value > b.value;
                     });
    const int refine = std::min<int>(kRefinedStarts,
                                      static_cast<int>(cands.size()));
    for (int s = 0; s < refine; ++s)
      cands.push_back(compass_search(gp, cands[s], opts.kappa));
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Scored &a, const Scored &b) {
                       return a.value > b.value;
                     });

    Eigen::VectorXd pick;
    for (const Scored &c: cands) {
      Eigen::VectorXd snapped = space.snap(c.point);
      if (!contains(picks, snapped)) {
        pick = std::move(snapped);
        break;
      }
    }
    // Every scored candidate collided with an earlier pick.
    while (pick.size() == 0) {
      Eigen::VectorXd snapped = space.snap(uniform_point(dim, rng));
      if (!contains(picks, snapped))
        pick = std::move(snapped);
    }

    picks.push_back(pick);
    xs.push_back(pick);
    ys.push_back(lie);
  }
  return picks;
}

HpoResult run_hpo(const HpoSpace &space, const HpoOptions &opts,
                  const Evaluator &evaluator, std::vector<Observation> resume,
                  const ObservationCallback &on_observation) {
  const HpoBudget &b = opts.budget;
  if (b.init < 1 || b.batches < 0 || b.batch_size < 1)
    throw ValidationError("invalid HPO budget");
  if (static_cast<int>(resume.size()) > b.total())
    throw ValidationError("resumed trace is longer than the budget");
  for (const Observation &o: resume) {
    if (o.unit.size() != space.dim())
      throw ValidationError("resumed trace does not match the space");
  }

  std::vector<Observation> trace = std::move(resume);
  auto record = [&](Observation obs) {
    if (on_observation)
      on_observation(obs);
    trace.push_back(std::move(obs));
  };

  std::mt19937_64 init_rng = make_rng(opts.seed, { 0 });
  for (int i = 0; i < b.init; ++i) {
    Eigen::VectorXd p = uniform_point(space.dim(), init_rng);
    if (i >= static_cast<int>(trace.size()))
      record(evaluate(space, evaluator, p));
  }

  for (int batch = 0; batch < b.batches; ++batch) {
    const int start = b.init + batch * b.batch_size;
    const int done = static_cast<int>(trace.size()) - start;
    if (done >= b.batch_size)
      continue;
    std::vector<Observation> prefix(trace.begin(), trace.begin() + start);
    std::vector<Eigen::VectorXd> picks =
        suggest_batch(prefix, space, b.batch_size, opts,
                      static_cast<std::uint64_t>(batch) + 1);
    for (int k = done; k < b.batch_size; ++k)
      record(evaluate(space, evaluator, picks[k]));
  }

  return { best_of(trace), std::move(trace) };
}

HpoResult run_random_search(const HpoSpace &space, const HpoOptions &opts,
                            const Evaluator &evaluator) {
  std::mt19937_64 rng = make_rng(opts.seed, { 0 });
  std::vector<Observation> trace;
  for (int i = 0; i < opts.budget.total(); ++i)
    trace.push_back(evaluate(space, evaluator,
                             uniform_point(space.dim(), rng)));
  return { best_of(trace), std::move(trace) };
}

void write_trace(const std::filesystem::path &path, const HpoSpace &space,
                 const std::vector<std::string> &metric_names,
                 const std::string &score_name,
                 const std::vector<Observation> &trace) {
  CsvTable table;
  table.header.push_back("iteration");
  for (const HpoAxis &a: space.axes())
    table.header.push_back(a.name);
  table.header.insert(table.header.end(), metric_names.begin(),
                      metric_names.end());
  table.header.push_back(score_name);

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Observation &o = trace[i];
    std::vector<std::string> row { std::to_string(i) };
    for (Eigen::Index j = 0; j < o.native.size(); ++j)
      row.push_back(format_double(o.native[j]));
    for (std::size_t j = 0; j < metric_names.size(); ++j)
      row.push_back(j < o.metrics.size()
                        ? format_double(o.metrics[j])
                        : "nan");
    row.push_back(format_double(o.score));
    table.rows.push_back(std::move(row));
  }
  write_csv(path, table);
}

std::vector<Observation> read_trace(const std::filesystem::path &path,
                                    const HpoSpace &space,
                                    const std::vector<std::string>
                                        &metric_names,
                                    const std::string &score_name) {
  CsvTable table = read_csv(path);
  std::vector<int> axis_cols, metric_cols;
  for (const HpoAxis &a: space.axes())
    axis_cols.push_back(table.column(a.name));
  for (const std::string &m: metric_names)
    metric_cols.push_back(table.column(m));
  const int score_col = table.column(score_name);
  const bool complete =
      score_col >= 0
      && std::none_of(axis_cols.begin(), axis_cols.end(),
                      [](int c) { return c < 0; })
      && std::none_of(metric_cols.begin(), metric_cols.end(),
                      [](int c) { return c < 0; });
  if (!complete)
    throw ValidationError("trace " + path.string()
                          + " does not match the search space");

  std::vector<Observation> trace;
  for (const auto &row: table.rows) {
    Observation o;
    o.native.resize(space.dim());
    for (int j = 0; j < space.dim(); ++j)
      o.native[j] = parse_double(row.at(axis_cols[j]));
    o.unit = space.to_unit(o.native);
    for (int c: metric_cols)
      o.metrics.push_back(parse_double(row.at(c)));
    o.score = parse_double(row.at(score_col));
    trace.push_back(std::move(o));
  }
  return trace;
}

}  // namespace fuelgen
