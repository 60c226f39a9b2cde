//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/network.h"

#include <cmath>

#include "fuelgen/util/error.h"

namespace fuelgen {
namespace {
  using Eigen::ArrayXXd;
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  constexpr int kSteps = kSequenceLength;

  // Scalar transcendentals. Eigen's packet versions round differently from
  // the scalar tail, which would tie a column's result to its position in
  // the batch.
  MatrixXd tanh_of(const MatrixXd &x) {
    return x.unaryExpr([](double v) { return std::tanh(v); });
  }

  MatrixXd exp_of(const MatrixXd &x) {
    return x.unaryExpr([](double v) { return std::exp(v); });
  }

  MatrixXd sigmoid(const MatrixXd &x) {
    return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
  }

  // Column-wise softmax.
  MatrixXd softmax(const MatrixXd &x) {
    MatrixXd shifted = x.rowwise() - x.colwise().maxCoeff();
    MatrixXd e = exp_of(shifted);
    return e.array().rowwise() / e.colwise().sum().array();
  }

  MatrixXd output_probs(const MatrixXd &logits, DecoderOutput output) {
    return output == DecoderOutput::kSigmoid ? sigmoid(logits)
                                             : softmax(logits);
  }

  // Sum over a V x B block of the reconstruction loss, computed from logits
  // for numerical stability.
  double reconstruction_loss(const MatrixXd &logits, const MatrixXd &target,
                             DecoderOutput output) {
    if (output == DecoderOutput::kSigmoid) {
      ArrayXXd s = logits.array();
      ArrayXXd softplus = s.max(0.0) + (-s.abs()).exp().log1p();
      return (softplus - target.array() * s).sum();
    }
    VectorXd mx = logits.colwise().maxCoeff();
    ArrayXXd shifted = (logits.rowwise() - mx.transpose()).array();
    Eigen::ArrayXd lse = shifted.exp().colwise().sum().log().transpose()
                         + mx.array();
    return lse.sum() - (target.array() * logits.array()).sum();
  }

  // Forward products use the coefficient-based kernel so that every batch
  // column is computed in the same order whatever the batch size; a molecule's
  // encoding then does not depend on its batch mates, down to the last bit.
  MatrixXd dense(const CoVaeModel &m, const DenseIds &ids, const MatrixXd &x) {
    MatrixXd y = m.block(ids.weight).lazyProduct(x);
    y.colwise() += m.block(ids.bias).col(0);
    return y;
  }

  // dy is the gradient with respect to the pre-activation output y = W x + b.
  // Accumulates dW, db and returns dx.
  MatrixXd dense_backward(const CoVaeModel &m, const DenseIds &ids,
                          const MatrixXd &x, const MatrixXd &dy,
                          VectorXd &grad) {
    const auto &blocks = m.layout().blocks();
    block_of(grad, blocks[ids.weight]).noalias() += dy * x.transpose();
    block_of(grad, blocks[ids.bias]).col(0) += dy.rowwise().sum();
    return m.block(ids.weight).transpose() * dy;
  }

  MatrixXd tanh_grad(const MatrixXd &activated, const MatrixXd &d) {
    return (d.array() * (1.0 - activated.array().square())).matrix();
  }

  struct LstmTrace {
    const std::vector<MatrixXd> *inputs = nullptr;
    MatrixXd h0;
    MatrixXd c0;
    // Post-activation gates (i, f, g, o stacked), cell, tanh(cell), hidden.
    std::vector<MatrixXd> gates, c, tanh_c, h;
  };

  void lstm_step(const CoVaeModel &m, const LstmIds &ids, const MatrixXd &x,
                 const MatrixXd &h_prev, const MatrixXd &c_prev,
                 MatrixXd &gates, MatrixXd &c, MatrixXd &tanh_c,
                 MatrixXd &h) {
    const Eigen::Index hs = h_prev.rows();
    gates.noalias() = m.block(ids.w_input).lazyProduct(x);
    gates.noalias() += m.block(ids.w_hidden).lazyProduct(h_prev);
    gates.colwise() += m.block(ids.bias).col(0);

    gates.topRows(hs) = sigmoid(gates.topRows(hs));
    gates.middleRows(hs, hs) = sigmoid(gates.middleRows(hs, hs));
    gates.middleRows(2 * hs, hs) = tanh_of(gates.middleRows(2 * hs, hs));
    gates.bottomRows(hs) = sigmoid(gates.bottomRows(hs));

    c = (gates.middleRows(hs, hs).array() * c_prev.array()
         + gates.topRows(hs).array() * gates.middleRows(2 * hs, hs).array())
            .matrix();
    tanh_c = tanh_of(c);
    h = (gates.bottomRows(hs).array() * tanh_c.array()).matrix();
  }

  void lstm_forward(const CoVaeModel &m, const LstmIds &ids,
                    const std::vector<MatrixXd> &inputs, const MatrixXd &h0,
                    const MatrixXd &c0, LstmTrace &tr) {
    const int steps = static_cast<int>(inputs.size());
    tr.inputs = &inputs;
    tr.h0 = h0;
    tr.c0 = c0;
    tr.gates.resize(steps);
    tr.c.resize(steps);
    tr.tanh_c.resize(steps);
    tr.h.resize(steps);
    for (int t = 0; t < steps; ++t) {
      const MatrixXd &h_prev = t == 0 ? tr.h0 : tr.h[t - 1];
      const MatrixXd &c_prev = t == 0 ? tr.c0 : tr.c[t - 1];
      lstm_step(m, ids, inputs[t], h_prev, c_prev, tr.gates[t], tr.c[t],
                tr.tanh_c[t], tr.h[t]);
    }
  }

  // dh_out[t] is the gradient flowing into h_t from outside the recurrence
  // (an empty matrix means zero). Writes dx[t] when dx is non-null and the
  // gradient with respect to the initial hidden state into dh0.
  void lstm_backward(const CoVaeModel &m, const LstmIds &ids,
                     const LstmTrace &tr, const std::vector<MatrixXd> &dh_out,
                     VectorXd &grad, std::vector<MatrixXd> *dx,
                     MatrixXd &dh0) {
    const auto &blocks = m.layout().blocks();
    auto dw_in = block_of(grad, blocks[ids.w_input]);
    auto dw_hid = block_of(grad, blocks[ids.w_hidden]);
    auto db = block_of(grad, blocks[ids.bias]);
    const auto w_in = m.block(ids.w_input);
    const auto w_hid = m.block(ids.w_hidden);

    const int steps = static_cast<int>(tr.h.size());
    const Eigen::Index hs = tr.h0.rows();
    const Eigen::Index bs = tr.h0.cols();
    MatrixXd dh_next = MatrixXd::Zero(hs, bs);
    MatrixXd dc_next = MatrixXd::Zero(hs, bs);
    MatrixXd da(4 * hs, bs);
    if (dx != nullptr)
      dx->assign(steps, MatrixXd());

    for (int t = steps - 1; t >= 0; --t) {
      const MatrixXd &g = tr.gates[t];
      const MatrixXd &c_prev = t == 0 ? tr.c0 : tr.c[t - 1];
      const MatrixXd &h_prev = t == 0 ? tr.h0 : tr.h[t - 1];

      MatrixXd dh = dh_next;
      if (dh_out[t].size() > 0)
        dh += dh_out[t];

      auto i = g.topRows(hs).array();
      auto f = g.middleRows(hs, hs).array();
      auto gg = g.middleRows(2 * hs, hs).array();
      auto o = g.bottomRows(hs).array();
      auto tc = tr.tanh_c[t].array();

      ArrayXXd dc = dc_next.array() + dh.array() * o * (1.0 - tc.square());
      da.topRows(hs) = (dc * gg * i * (1.0 - i)).matrix();
      da.middleRows(hs, hs) = (dc * c_prev.array() * f * (1.0 - f)).matrix();
      da.middleRows(2 * hs, hs) = (dc * i * (1.0 - gg.square())).matrix();
      da.bottomRows(hs) = (dh.array() * tc * o * (1.0 - o)).matrix();

      dw_in.noalias() += da * (*tr.inputs)[t].transpose();
      dw_hid.noalias() += da * h_prev.transpose();
      db.col(0) += da.rowwise().sum();
      if (dx != nullptr)
        (*dx)[t].noalias() = w_in.transpose() * da;
      dh_next.noalias() = w_hid.transpose() * da;
      dc_next = (dc * f).matrix();
    }
    dh0 = dh_next;
  }

  std::vector<MatrixXd> onehot_steps(std::span<const TokenSeq> tokens,
                                     int vocab_size) {
    const Eigen::Index bs = static_cast<Eigen::Index>(tokens.size());
    std::vector<MatrixXd> x(kSteps, MatrixXd::Zero(vocab_size, bs));
    for (Eigen::Index b = 0; b < bs; ++b) {
      for (int t = 0; t < kSteps; ++t)
        x[t](tokens[b][t], b) = 1.0;
    }
    return x;
  }

  struct EncoderTrace {
    std::vector<LstmTrace> lstm;
    // Step of the last non-padding symbol per column, and the top-layer
    // hidden state read there.
    std::vector<int> last;
    MatrixXd summary;
    MatrixXd fc1, fc2, mu, log_var;
  };

  void encoder_forward(const CoVaeModel &m, const std::vector<MatrixXd> &x,
                       EncoderTrace &tr) {
    const ParamLayout &lay = m.layout();
    const int layers = m.config().num_layers;
    const Eigen::Index hs = m.config().hidden_size;
    const Eigen::Index bs = x[0].cols();
    const MatrixXd zero = MatrixXd::Zero(hs, bs);

    tr.lstm.resize(layers);
    for (int l = 0; l < layers; ++l) {
      const std::vector<MatrixXd> &in = l == 0 ? x : tr.lstm[l - 1].h;
      lstm_forward(m, lay.encoder_lstm[l], in, zero, zero, tr.lstm[l]);
    }
    // Padding is masked: the summary is taken at the last real symbol.
    tr.last.assign(bs, 0);
    tr.summary.resize(hs, bs);
    for (Eigen::Index b = 0; b < bs; ++b) {
      for (int t = 0; t < kSteps; ++t) {
        if (x[t](kPadIndex, b) < 0.5)
          tr.last[b] = t;
      }
      tr.summary.col(b) = tr.lstm.back().h[tr.last[b]].col(b);
    }
    tr.fc1 = tanh_of(dense(m, lay.encoder_fc1, tr.summary));
    tr.fc2 = tanh_of(dense(m, lay.encoder_fc2, tr.fc1));
    tr.mu = dense(m, lay.encoder_mu, tr.fc2);
    tr.log_var = dense(m, lay.encoder_logvar, tr.fc2);
  }

  struct HeadTrace {
    MatrixXd fc1, fc2, out;
  };

  void head_forward(const CoVaeModel &m, const MatrixXd &mu, HeadTrace &tr) {
    const ParamLayout &lay = m.layout();
    tr.fc1 = tanh_of(dense(m, lay.head_fc1, mu));
    tr.fc2 = tanh_of(dense(m, lay.head_fc2, tr.fc1));
    tr.out = dense(m, lay.head_out, tr.fc2);
  }

  struct DecoderInitTrace {
    MatrixXd fc2, fc1, init;
  };

  void decoder_init_forward(const CoVaeModel &m, const MatrixXd &z,
                            DecoderInitTrace &tr) {
    const ParamLayout &lay = m.layout();
    tr.fc2 = tanh_of(dense(m, lay.decoder_fc2, z));
    tr.fc1 = tanh_of(dense(m, lay.decoder_fc1, tr.fc2));
    tr.init = tanh_of(dense(m, lay.decoder_init, tr.fc1));
  }

  struct Trace {
    std::vector<MatrixXd> x;
    EncoderTrace enc;
    MatrixXd z;
    DecoderInitTrace dinit;
    std::vector<MatrixXd> dec_in;
    std::vector<LstmTrace> dec;
    std::vector<MatrixXd> logits;
    HeadTrace head;
    Eigen::RowVectorXd pred_ron;
  };

  LossBreakdown forward(const CoVaeModel &m, const Batch &batch,
                        const MatrixXd &noise, double beta, Trace &tr) {
    const CoVaeConfig &cfg = m.config();
    const int bs = batch.size();
    if (bs == 0)
      throw ShapeError("empty batch");
    if (static_cast<int>(batch.ron.size()) != bs)
      throw ShapeError("batch labels and tokens differ in length");
    if (noise.rows() != cfg.latent_dim || noise.cols() != bs)
      throw ShapeError("noise must be latent_dim x batch");

    const ParamLayout &lay = m.layout();
    const int vs = m.vocab_size();
    const Eigen::Index hs = cfg.hidden_size;
    tr.x = onehot_steps(batch.tokens, vs);

    encoder_forward(m, tr.x, tr.enc);
    tr.z = tr.enc.mu
           + (exp_of(0.5 * tr.enc.log_var).array() * noise.array()).matrix();

    decoder_init_forward(m, tr.z, tr.dinit);
    // The first decoder layer sees the previous symbol and the expanded
    // latent at every step.
    const Eigen::Index f1 = cfg.fc1_size;
    tr.dec_in.assign(kSteps, MatrixXd(vs + f1, bs));
    for (int t = 0; t < kSteps; ++t) {
      if (t == 0)
        tr.dec_in[t].topRows(vs).setZero();
      else
        tr.dec_in[t].topRows(vs) = tr.x[t - 1];
      tr.dec_in[t].bottomRows(f1) = tr.dinit.fc1;
    }

    tr.dec.resize(cfg.num_layers);
    const MatrixXd zero = MatrixXd::Zero(hs, bs);
    for (int l = 0; l < cfg.num_layers; ++l) {
      const std::vector<MatrixXd> &in = l == 0 ? tr.dec_in : tr.dec[l - 1].h;
      lstm_forward(m, lay.decoder_lstm[l], in, tr.dinit.init.middleRows(l * hs, hs),
                   zero, tr.dec[l]);
    }

    LossBreakdown loss;
    loss.beta = beta;
    tr.logits.resize(kSteps);
    for (int t = 0; t < kSteps; ++t) {
      tr.logits[t] = dense(m, lay.decoder_out, tr.dec.back().h[t]);
      loss.bce += reconstruction_loss(tr.logits[t], tr.x[t], cfg.output);
    }
    loss.bce /= bs;

    for (int b = 0; b < bs; ++b)
      loss.kld += kl_divergence(tr.enc.mu.col(b), tr.enc.log_var.col(b));
    loss.kld /= bs;

    head_forward(m, tr.enc.mu, tr.head);
    tr.pred_ron = (m.ron_offset + m.ron_scale * tr.head.out.array()).matrix();
    double abs_err = 0;
    for (int b = 0; b < bs; ++b) {
      if (batch.ron[b]) {
        abs_err += std::abs(tr.pred_ron(b) - *batch.ron[b]);
        ++loss.labeled;
      }
    }
    loss.l_ron = loss.labeled > 0 ? abs_err / loss.labeled : 0.0;
    loss.total = loss.bce + beta * loss.kld + loss.l_ron;
    return loss;
  }

  void backward(const CoVaeModel &m, const Batch &batch, const MatrixXd &noise,
                double beta, const Trace &tr, const LossBreakdown &loss,
                VectorXd &grad) {
    const CoVaeConfig &cfg = m.config();
    const ParamLayout &lay = m.layout();
    const int bs = batch.size();
    const Eigen::Index hs = cfg.hidden_size;
    const double inv_b = 1.0 / bs;

    // Reconstruction: d loss / d logits = (p - y) / B for both output modes.
    std::vector<MatrixXd> dtop(kSteps);
    for (int t = 0; t < kSteps; ++t) {
      MatrixXd dlogits = (output_probs(tr.logits[t], cfg.output) - tr.x[t])
                         * inv_b;
      dtop[t] = dense_backward(m, lay.decoder_out, tr.dec.back().h[t], dlogits,
                               grad);
    }

    const Eigen::Index f1 = cfg.fc1_size;
    MatrixXd dinit(cfg.num_layers * hs, bs);
    MatrixXd dfc1 = MatrixXd::Zero(f1, bs);
    std::vector<MatrixXd> dh_out = std::move(dtop);
    for (int l = cfg.num_layers - 1; l >= 0; --l) {
      std::vector<MatrixXd> dx;
      MatrixXd dh0;
      lstm_backward(m, lay.decoder_lstm[l], tr.dec[l], dh_out, grad, &dx, dh0);
      dinit.middleRows(l * hs, hs) = dh0;
      if (l == 0) {
        for (const MatrixXd &dxt: dx)
          dfc1 += dxt.bottomRows(f1);
      }
      dh_out = std::move(dx);
    }

    MatrixXd d = tanh_grad(tr.dinit.init, dinit);
    d = dense_backward(m, lay.decoder_init, tr.dinit.fc1, d, grad) + dfc1;
    d = tanh_grad(tr.dinit.fc1, d);
    d = dense_backward(m, lay.decoder_fc1, tr.dinit.fc2, d, grad);
    d = tanh_grad(tr.dinit.fc2, d);
    MatrixXd dz = dense_backward(m, lay.decoder_fc2, tr.z, d, grad);

    const ArrayXXd sigma = (0.5 * tr.enc.log_var.array()).exp();
    MatrixXd dmu = dz + beta * inv_b * tr.enc.mu;
    MatrixXd dlog_var = (dz.array() * noise.array() * sigma * 0.5
                         - 0.5 * beta * inv_b
                               * (1.0 - tr.enc.log_var.array().exp()))
                            .matrix();

    if (loss.labeled > 0) {
      Eigen::RowVectorXd dpred = Eigen::RowVectorXd::Zero(bs);
      for (int b = 0; b < bs; ++b) {
        if (!batch.ron[b])
          continue;
        double err = tr.pred_ron(b) - *batch.ron[b];
        dpred(b) = (err > 0 ? 1.0 : (err < 0 ? -1.0 : 0.0)) / loss.labeled;
      }
      MatrixXd dh = m.ron_scale * dpred;
      dh = dense_backward(m, lay.head_out, tr.head.fc2, dh, grad);
      dh = tanh_grad(tr.head.fc2, dh);
      dh = dense_backward(m, lay.head_fc2, tr.head.fc1, dh, grad);
      dh = tanh_grad(tr.head.fc1, dh);
      dmu += dense_backward(m, lay.head_fc1, tr.enc.mu, dh, grad);
    }

    MatrixXd dfc2 = dense_backward(m, lay.encoder_mu, tr.enc.fc2, dmu, grad);
    dfc2 += dense_backward(m, lay.encoder_logvar, tr.enc.fc2, dlog_var, grad);
    d = tanh_grad(tr.enc.fc2, dfc2);
    d = dense_backward(m, lay.encoder_fc2, tr.enc.fc1, d, grad);
    d = tanh_grad(tr.enc.fc1, d);
    MatrixXd dsummary = dense_backward(m, lay.encoder_fc1, tr.enc.summary, d,
                                       grad);

    dh_out.assign(kSteps, MatrixXd());
    for (int b = 0; b < bs; ++b) {
      MatrixXd &slot = dh_out[tr.enc.last[b]];
      if (slot.size() == 0)
        slot = MatrixXd::Zero(hs, bs);
      slot.col(b) = dsummary.col(b);
    }
    for (int l = cfg.num_layers - 1; l >= 0; --l) {
      std::vector<MatrixXd> dx;
      MatrixXd dh0;
      lstm_backward(m, lay.encoder_lstm[l], tr.enc.lstm[l], dh_out, grad,
                    l > 0 ? &dx : nullptr, dh0);
      dh_out = std::move(dx);
    }
  }

  void check_latent(const CoVaeModel &m, Eigen::Index rows) {
    if (rows != m.latent_dim())
      throw ShapeError("latent vector has " + std::to_string(rows)
                       + " entries, model expects "
                       + std::to_string(m.latent_dim()));
  }
}  // namespace

LossBreakdown batch_loss(const CoVaeModel &model, const Batch &batch,
                         const Eigen::MatrixXd &noise, double beta) {
  Trace tr;
  return forward(model, batch, noise, beta, tr);
}

LossAndGradient batch_gradient(const CoVaeModel &model, const Batch &batch,
                               const Eigen::MatrixXd &noise, double beta) {
  Trace tr;
  LossAndGradient out;
  out.loss = forward(model, batch, noise, beta, tr);
  out.gradient = VectorXd::Zero(model.params().size());
  backward(model, batch, noise, beta, tr, out.loss, out.gradient);
  return out;
}

std::vector<LatentStats> encode(const CoVaeModel &model,
                                std::span<const OneHotMatrix> inputs) {
  if (inputs.empty())
    return {};
  const int vs = model.vocab_size();
  const Eigen::Index bs = static_cast<Eigen::Index>(inputs.size());
  std::vector<MatrixXd> x(kSteps, MatrixXd::Zero(vs, bs));
  for (Eigen::Index b = 0; b < bs; ++b) {
    const OneHotMatrix &m = inputs[b];
    if (m.rows() != kSteps || m.cols() != vs)
      throw ShapeError("input matrix must be " + std::to_string(kSteps) + " x "
                       + std::to_string(vs));
    for (int t = 0; t < kSteps; ++t)
      x[t].col(b) = m.row(t).transpose();
  }

  EncoderTrace tr;
  encoder_forward(model, x, tr);
  std::vector<LatentStats> out(bs);
  for (Eigen::Index b = 0; b < bs; ++b)
    out[b] = { tr.mu.col(b), tr.log_var.col(b) };
  return out;
}

Eigen::MatrixXd encode_means(const CoVaeModel &model,
                             std::span<const TokenSeq> inputs) {
  if (inputs.empty())
    return MatrixXd(model.latent_dim(), 0);
  EncoderTrace tr;
  encoder_forward(model, onehot_steps(inputs, model.vocab_size()), tr);
  return tr.mu;
}

namespace {
  // Greedy decoding of every column of z; fills per-step probabilities when
  // `probs` is non-null.
  std::vector<TokenSeq> run_greedy(const CoVaeModel &m, const MatrixXd &z,
                                   std::vector<MatrixXd> *probs) {
    const CoVaeConfig &cfg = m.config();
    const ParamLayout &lay = m.layout();
    const Eigen::Index bs = z.cols();
    const Eigen::Index hs = cfg.hidden_size;
    const int vs = m.vocab_size();

    DecoderInitTrace init;
    decoder_init_forward(m, z, init);
    std::vector<MatrixXd> h(cfg.num_layers), c(cfg.num_layers);
    for (int l = 0; l < cfg.num_layers; ++l) {
      h[l] = init.init.middleRows(l * hs, hs);
      c[l] = MatrixXd::Zero(hs, bs);
    }

    std::vector<TokenSeq> tokens(bs, TokenSeq {});
    MatrixXd x(vs + cfg.fc1_size, bs);
    x.topRows(vs).setZero();
    x.bottomRows(cfg.fc1_size) = init.fc1;
    MatrixXd gates, tanh_c, next_h, next_c;
    if (probs != nullptr)
      probs->assign(kSteps, MatrixXd());
    for (int t = 0; t < kSteps; ++t) {
      const MatrixXd *in = &x;
      for (int l = 0; l < cfg.num_layers; ++l) {
        lstm_step(m, lay.decoder_lstm[l], *in, h[l], c[l], gates, next_c,
                  tanh_c, next_h);
        h[l].swap(next_h);
        c[l].swap(next_c);
        in = &h[l];
      }
      MatrixXd p = output_probs(dense(m, lay.decoder_out, h.back()),
                                cfg.output);
      x.topRows(vs).setZero();
      for (Eigen::Index b = 0; b < bs; ++b) {
        Eigen::Index best = 0;
        for (Eigen::Index v = 1; v < vs; ++v) {
          if (p(v, b) > p(best, b))
            best = v;
        }
        tokens[b][t] = static_cast<std::uint8_t>(best);
        x(best, b) = 1.0;
      }
      if (probs != nullptr)
        (*probs)[t] = std::move(p);
    }

    for (TokenSeq &seq: tokens) {
      bool padded = false;
      for (auto &tok: seq) {
        padded = padded || tok == kPadIndex;
        if (padded)
          tok = kPadIndex;
      }
    }
    return tokens;
  }
}  // namespace

Eigen::MatrixXd decode(const CoVaeModel &model, const Eigen::VectorXd &z) {
  check_latent(model, z.size());
  std::vector<MatrixXd> probs;
  run_greedy(model, z, &probs);
  MatrixXd out(kSteps, model.vocab_size());
  for (int t = 0; t < kSteps; ++t)
    out.row(t) = probs[t].col(0).transpose();
  return out;
}

std::vector<TokenSeq> greedy_decode(const CoVaeModel &model,
                                    const Eigen::MatrixXd &z) {
  check_latent(model, z.rows());
  if (z.cols() == 0)
    return {};
  return run_greedy(model, z, nullptr);
}

double predict_ron_head(const CoVaeModel &model, const Eigen::VectorXd &mu) {
  check_latent(model, mu.size());
  HeadTrace tr;
  head_forward(model, mu, tr);
  return model.ron_offset + model.ron_scale * tr.out(0, 0);
}

Eigen::VectorXd predict_ron_head(const CoVaeModel &model,
                                 const Eigen::MatrixXd &mu) {
  check_latent(model, mu.rows());
  HeadTrace tr;
  head_forward(model, mu, tr);
  return (model.ron_offset + model.ron_scale * tr.out.row(0).array())
      .matrix()
      .transpose();
}

}  // namespace fuelgen
