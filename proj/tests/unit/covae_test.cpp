//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/chem/enumerate.h"
#include "fuelgen/covae/checkpoint.h"
#include "fuelgen/covae/evaluate.h"
#include "fuelgen/covae/loss.h"
#include "fuelgen/covae/network.h"
#include "fuelgen/covae/train.h"
#include "fuelgen/encoding/onehot.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

CoVaeConfig tiny_config() {
  CoVaeConfig cfg = CoVaeConfig::desk_scale();
  cfg.hidden_size = 8;
  cfg.latent_dim = 4;
  cfg.num_layers = 2;
  cfg.fc1_size = 6;
  cfg.fc2_size = 5;
  cfg.cond1_size = 4;
  cfg.cond2_size = 3;
  return cfg;
}

Batch small_batch(bool labeled) {
  Vocab v;
  Batch b;
  for (const char *s: { "CCO", "C1CC1", "CC(=O)C", "C#CO" }) {
    b.tokens.push_back(encode_tokens(s, v));
    b.ron.push_back(labeled ? std::optional<double>(90.0 + b.size())
                            : std::nullopt);
  }
  return b;
}

Eigen::MatrixXd normal_matrix(int rows, int cols, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i)
    m(i) = nd(rng);
  return m;
}

}  // namespace

TEST(Beta, FullScaleAnchors) {
  const CoVaeConfig cfg = CoVaeConfig::paper_scale();
  EXPECT_DOUBLE_EQ(beta_schedule(0, cfg), 0.0);
  EXPECT_NEAR(beta_schedule(30, cfg), 0.10, 1e-15);
  EXPECT_DOUBLE_EQ(beta_schedule(75, cfg), 0.25);
  EXPECT_DOUBLE_EQ(beta_schedule(300, cfg), 0.25);
}

TEST(Reparameterize, ClosedForm) {
  LatentStats s { Eigen::VectorXd::Constant(1, 0.5), Eigen::VectorXd::Zero(1) };
  EXPECT_DOUBLE_EQ(reparameterize(s, Eigen::VectorXd::Ones(1))(0), 1.5);
  EXPECT_DOUBLE_EQ(reparameterize(s, Eigen::VectorXd::Zero(1))(0), 0.5);
  LatentStats wide { Eigen::VectorXd::Zero(1),
                     Eigen::VectorXd::Constant(1, std::log(4.0)) };
  EXPECT_NEAR(reparameterize(wide, Eigen::VectorXd::Ones(1))(0), 2.0, 1e-15);
  EXPECT_THROW(reparameterize(s, Eigen::VectorXd::Ones(2)), ShapeError);
}

TEST(Loss, ClosedForms) {
  EXPECT_DOUBLE_EQ(kl_divergence(Eigen::VectorXd::Zero(3),
                                 Eigen::VectorXd::Zero(3)),
                   0.0);
  EXPECT_DOUBLE_EQ(kl_divergence(Eigen::VectorXd::Ones(1),
                                 Eigen::VectorXd::Zero(1)),
                   0.5);

  std::vector<Eigen::MatrixXd> p { Eigen::MatrixXd::Constant(1, 1, 0.5) };
  std::vector<Eigen::MatrixXd> y { Eigen::MatrixXd::Ones(1, 1) };
  std::vector<LatentStats> st { { Eigen::VectorXd::Zero(1),
                                  Eigen::VectorXd::Zero(1) } };
  std::vector<double> pr { 0.0 };
  std::vector<std::optional<double>> lab { std::nullopt };
  LossBreakdown l = compute_loss(p, y, st, pr, lab, 0.25);
  EXPECT_NEAR(l.bce, 0.6931, 1e-4);
  EXPECT_EQ(l.kld, 0.0);
  EXPECT_EQ(l.l_ron, 0.0);
  EXPECT_EQ(l.labeled, 0);

  p[0](0, 0) = 1.0;
  EXPECT_THROW(compute_loss(p, y, st, pr, lab, 0.25), DomainError);
}

TEST(Loss, KldNonNegative) {
  auto rng = make_rng(17);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    Eigen::VectorXd mu(4), lv(4);
    for (int j = 0; j < 4; ++j) {
      mu(j) = u(rng);
      lv(j) = u(rng);
    }
    EXPECT_GE(kl_divergence(mu, lv), 0.0);
  }
}

TEST(Loss, CompositeScore) {
  EXPECT_NEAR(composite_score(0.7756, 0.5519, 9.26), 1.8675, 1e-4);
  EXPECT_DOUBLE_EQ(composite_score(1, 1, 5), 3.0);
  EXPECT_GT(composite_score(0.5, 0.5, 4), composite_score(0.5, 0.5, 6));
  EXPECT_THROW(composite_score(1, 1, 0), DomainError);
}

TEST(Network, ShapesAndDeterminism) {
  CoVaeModel m = make_model(CoVaeConfig::paper_scale());
  Vocab v;
  std::vector<OneHotMatrix> in { to_onehot(encode_tokens("CCO", v), 9),
                                 to_onehot(encode_tokens("CCO", v), 9) };
  std::vector<LatentStats> s = encode(m, in);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].mu.size(), 73);
  EXPECT_EQ(s[0].mu, s[1].mu);
  EXPECT_EQ(s[0].log_var, s[1].log_var);

  std::vector<OneHotMatrix> bad { Eigen::MatrixXd::Zero(kSequenceLength, 7) };
  EXPECT_THROW(encode(m, bad), ShapeError);

  Eigen::MatrixXd p = decode(m, s[0].mu);
  EXPECT_EQ(p.rows(), kSequenceLength);
  EXPECT_EQ(p.cols(), 9);
  EXPECT_TRUE((p.array() > 0).all() && (p.array() < 1).all());
  EXPECT_EQ(decode(m, s[0].mu), p);
  EXPECT_THROW(decode(m, Eigen::VectorXd::Zero(5)), ShapeError);

  const double r = predict_ron_head(m, s[0].mu);
  EXPECT_TRUE(std::isfinite(r));
  EXPECT_EQ(predict_ron_head(m, s[0].mu), r);
}

TEST(Network, ZeroModel) {
  CoVaeModel m(CoVaeConfig::desk_scale());
  m.set_zero();
  Vocab v;
  std::vector<OneHotMatrix> in { to_onehot(encode_tokens("CCO", v), 9),
                                 to_onehot(encode_tokens("C1CC1O", v), 9) };
  std::vector<LatentStats> s = encode(m, in);
  EXPECT_EQ(s[0].mu, s[1].mu);
  EXPECT_DOUBLE_EQ(predict_ron_head(m, s[0].mu), 0.0);
}

TEST(Network, GradientMatchesFiniteDifferences) {
  CoVaeModel m = make_model(tiny_config());
  m.ron_offset = 80;
  m.ron_scale = 10;
  Batch b = small_batch(true);
  b.ron[1] = std::nullopt;
  Eigen::MatrixXd noise = normal_matrix(4, b.size(), 3);
  const double beta = 0.2;
  Eigen::VectorXd an = batch_gradient(m, b, noise, beta).gradient;

  for (const ParamBlock &blk: m.layout().blocks()) {
    Eigen::VectorXd fd(static_cast<Eigen::Index>(blk.size()));
    for (std::size_t k = 0; k < blk.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(blk.offset + k);
      const double orig = m.params()(i), h = 1e-5;
      m.params()(i) = orig + h;
      const double fp = batch_loss(m, b, noise, beta).total;
      m.params()(i) = orig - h;
      const double fm = batch_loss(m, b, noise, beta).total;
      m.params()(i) = orig;
      fd(static_cast<Eigen::Index>(k)) = (fp - fm) / (2 * h);
    }
    Eigen::VectorXd a = an.segment(static_cast<Eigen::Index>(blk.offset),
                                   static_cast<Eigen::Index>(blk.size()));
    const double scale = std::max(fd.norm(), a.norm());
    ASSERT_GT(scale, 0.0) << blk.name;
    EXPECT_LT((fd - a).norm() / scale, 1e-4) << blk.name;
  }
}

TEST(Network, UnusedHeadGetsZeroGradient) {
  CoVaeModel m = make_model(tiny_config());
  Batch b = small_batch(false);
  Eigen::VectorXd g =
      batch_gradient(m, b, normal_matrix(4, b.size(), 1), 0.1).gradient;
  const ParamLayout &lay = m.layout();
  for (int id: { lay.head_fc1.weight, lay.head_fc1.bias, lay.head_fc2.weight,
                 lay.head_fc2.bias, lay.head_out.weight, lay.head_out.bias }) {
    const ParamBlock &blk = lay.blocks()[id];
    EXPECT_EQ(g.segment(static_cast<Eigen::Index>(blk.offset),
                        static_cast<Eigen::Index>(blk.size()))
                  .norm(),
              0.0)
        << blk.name;
  }
}

TEST(Network, KlGradientLinearInBeta) {
  CoVaeModel m = make_model(tiny_config());
  Batch b = small_batch(true);
  Eigen::MatrixXd noise = normal_matrix(4, b.size(), 2);
  Eigen::VectorXd g0 = batch_gradient(m, b, noise, 0.0).gradient;
  Eigen::VectorXd g1 = batch_gradient(m, b, noise, 0.2).gradient;
  Eigen::VectorXd g2 = batch_gradient(m, b, noise, 0.4).gradient;
  EXPECT_LT(((g2 - g0) - 2 * (g1 - g0)).norm(), 1e-10 * (1 + g2.norm()));
}

TEST(Network, LossIsAdditive) {
  CoVaeModel m = make_model(tiny_config());
  Batch b = small_batch(true);
  LossBreakdown l = batch_loss(m, b, normal_matrix(4, b.size(), 4), 0.3);
  EXPECT_NEAR(l.total, l.bce + 0.3 * l.kld + l.l_ron, 1e-12);
}

TEST(Evaluate, PriorValidity) {
  CoVaeModel m = make_model(tiny_config());
  EXPECT_THROW(prior_validity(m, 0, 1), ValidationError);
  const double a = prior_validity(m, 50, 9);
  EXPECT_GE(a, 0.0);
  EXPECT_LE(a, 1.0);
  EXPECT_EQ(prior_validity(m, 50, 9), a);
}

TEST(Evaluate, ValidMolecule) {
  EXPECT_TRUE(is_valid_molecule("CCO"));
  EXPECT_FALSE(is_valid_molecule("C(C)(C)(C)(C)C"));
  EXPECT_FALSE(is_valid_molecule("C1CC"));
  EXPECT_FALSE(is_valid_molecule(""));
}

TEST(Checkpoint, RoundTrip) {
  CoVaeModel m = make_model(tiny_config());
  m.ron_offset = 85.5;
  m.ron_scale = 12.25;
  std::string bytes = serialize_checkpoint(m, { 7, "state" });
  CheckpointInfo info;
  CoVaeModel back = deserialize_checkpoint(bytes, &info);
  EXPECT_EQ(back.config(), m.config());
  EXPECT_EQ(back.params(), m.params());
  EXPECT_EQ(back.ron_offset, 85.5);
  EXPECT_EQ(back.ron_scale, 12.25);
  EXPECT_EQ(info.epoch, 7);
  EXPECT_EQ(info.rng_state, "state");
  EXPECT_EQ(serialize_checkpoint(back, info), bytes);
}

TEST(Checkpoint, RejectsOtherMajorVersion) {
  CoVaeModel m = make_model(tiny_config());
  std::string bytes = serialize_checkpoint(m);
  const std::string from = "\"format_version\":\"1.0.0\"";
  const auto pos = bytes.find(from);
  ASSERT_NE(pos, std::string::npos);
  bytes.replace(pos, from.size(), "\"format_version\":\"2.0.0\"");
  EXPECT_THROW(deserialize_checkpoint(bytes), VersionError);
  EXPECT_THROW(deserialize_checkpoint("no header"), ValidationError);
}

TEST(Train, DeterministicAndLearns) {
  CoVaeConfig cfg = tiny_config();
  cfg.hidden_size = 16;
  cfg.epochs = 21;
  cfg.seed = 5;
  Vocab v;
  TrainingSet data;
  for (const std::string &s: enumerate_molecules(3)) {
    data.corpus.push_back(encode_tokens(s, v));
    data.ron.push_back(std::nullopt);
  }
  data.val_corpus = data.corpus;

  CoVaeModel a = make_model(cfg);
  std::vector<MetricsRow> ra = train(a, data);
  CoVaeModel b = make_model(cfg);
  std::vector<MetricsRow> rb = train(b, data);
  ASSERT_EQ(ra.size(), 21u);
  EXPECT_EQ(a.params(), b.params());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].total, rb[i].total);
    EXPECT_EQ(ra[i].beta, beta_schedule(ra[i].epoch, cfg));
  }
  EXPECT_LT(ra[20].total, ra[0].total);
}
