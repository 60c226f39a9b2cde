//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/gbt.h"

#include <algorithm>
#include <numeric>

#include <spdlog/spdlog.h>

#include "fuelgen/util/error.h"

namespace fuelgen {

void GbtParams::validate() const {
  if (n_estimators < 1 || max_depth < 1 || min_samples_leaf < 1
      || !(learning_rate > 0))
    throw ValidationError("boosting parameters must be positive");
}

double RegressionTree::predict(
    const Eigen::Ref<const Eigen::VectorXd> &x) const {
  int i = 0;
  while (nodes[i].feature >= 0)
    i = x[nodes[i].feature] <= nodes[i].threshold ? nodes[i].left
                                                  : nodes[i].right;
  return nodes[i].value;
}

int RegressionTree::depth() const {
  std::vector<int> d(nodes.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].feature < 0)
      continue;
    d[nodes[i].left] = d[nodes[i].right] = d[i] + 1;
    best = std::max(best, d[i] + 1);
  }
  return best;
}

double GbtModel::predict(const Eigen::Ref<const Eigen::VectorXd> &x) const {
  double out = init;
  for (const RegressionTree &t: trees)
    out += learning_rate * t.predict(x);
  return out;
}

namespace {
  struct Split {
    int feature = -1;
    double threshold = 0;
    double gain = 0;
  };

  class TreeBuilder {
  public:
    TreeBuilder(const Eigen::MatrixXd &x, const Eigen::VectorXd &r,
                const GbtParams &p)
        : x_(x), r_(r), p_(p) { }

    RegressionTree build() {
      std::vector<int> rows(x_.rows());
      std::iota(rows.begin(), rows.end(), 0);
      grow(rows, 0);
      return std::move(tree_);
    }

  private:
    int grow(std::vector<int> &rows, int depth) {
      const int id = static_cast<int>(tree_.nodes.size());
      tree_.nodes.emplace_back();
      double sum = 0;
      for (int i: rows)
        sum += r_[i];
      tree_.nodes[id].value = sum / static_cast<double>(rows.size());

      if (depth >= p_.max_depth)
        return id;
      Split s = best_split(rows, sum);
      if (s.feature < 0)
        return id;

      std::vector<int> left, right;
      for (int i: rows)
        (x_(i, s.feature) <= s.threshold ? left : right).push_back(i);
      rows.clear();
      rows.shrink_to_fit();

      tree_.nodes[id].feature = s.feature;
      tree_.nodes[id].threshold = s.threshold;
      const int l = grow(left, depth + 1);
      const int r = grow(right, depth + 1);
      tree_.nodes[id].left = l;
      tree_.nodes[id].right = r;
      return id;
    }

    // Maximizes the reduction in squared error; ties keep the first split in
    // (feature, threshold) order.
    Split best_split(const std::vector<int> &rows, double total) const {
      const int n = static_cast<int>(rows.size());
      const double base = total * total / n;
      Split best;
      std::vector<int> order(rows);
      for (int f = 0; f < x_.cols(); ++f) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          return x_(a, f) < x_(b, f) || (x_(a, f) == x_(b, f) && a < b);
        });
        double left = 0;
        for (int i = 0; i + 1 < n; ++i) {
          left += r_[order[i]];
          const int nl = i + 1, nr = n - nl;
          const double lo = x_(order[i], f), hi = x_(order[i + 1], f);
          if (lo == hi || nl < p_.min_samples_leaf
              || nr < p_.min_samples_leaf)
            continue;
          const double right = total - left;
          const double gain = left * left / nl + right * right / nr - base;
          if (gain > best.gain + 1e-12 * std::max(1.0, base)) {
            double mid = lo + (hi - lo) / 2;
            // Guard against rounding up to hi for adjacent doubles.
            if (!(mid < hi))
              mid = lo;
            best = { f, mid, gain };
          }
        }
      }
      return best;
    }

    const Eigen::MatrixXd &x_;
    const Eigen::VectorXd &r_;
    const GbtParams &p_;
    RegressionTree tree_;
  };

  double mse(const Eigen::VectorXd &r) { return r.squaredNorm() / r.size(); }
}  // namespace

GbtModel fit_gbt(const Dataset &data, const GbtParams &params) {
  params.validate();
  if (data.size() < 2 || data.x.rows() != data.y.size())
    throw ValidationError("boosting needs at least two aligned samples");

  GbtModel model;
  model.learning_rate = params.learning_rate;
  model.n_features = data.features();
  model.init = data.y.mean();

  Eigen::VectorXd residual = data.y.array() - model.init;
  model.train_loss.push_back(mse(residual));
  if (residual.cwiseAbs().maxCoeff() == 0) {
    spdlog::warn("all labels equal {}; fitted a constant model", model.init);
    model.degenerate = true;
    return model;
  }

  for (int t = 0; t < params.n_estimators; ++t) {
    RegressionTree tree = TreeBuilder(data.x, residual, params).build();
    for (Eigen::Index i = 0; i < data.x.rows(); ++i)
      residual[i] -= params.learning_rate * tree.predict(data.x.row(i));
    model.trees.push_back(std::move(tree));
    model.train_loss.push_back(mse(residual));
  }
  return model;
}

}  // namespace fuelgen
