//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/encoding/onehot.h"

#include "fuelgen/util/error.h"

namespace fuelgen {

OneHotMatrix to_onehot(const TokenSeq &tokens, int vocab_size) {
  OneHotMatrix m = OneHotMatrix::Zero(kSequenceLength, vocab_size);
  for (int t = 0; t < kSequenceLength; ++t)
    m(t, tokens[t]) = 1.0;
  return m;
}

TokenSeq from_onehot(const Eigen::Ref<const Eigen::MatrixXd> &matrix) {
  if (matrix.rows() != kSequenceLength || matrix.cols() < 1
      || matrix.cols() > 256)
    throw ShapeError("one-hot matrix must be " + std::to_string(kSequenceLength)
                     + " x vocabulary size");

  TokenSeq tokens {};
  bool padded = false;
  for (int t = 0; t < kSequenceLength; ++t) {
    int best = 0;
    for (int v = 1; v < matrix.cols(); ++v) {
      if (matrix(t, v) > matrix(t, best))
        best = v;
    }
    if (best == kPadIndex)
      padded = true;
    tokens[t] = padded ? kPadIndex : static_cast<std::uint8_t>(best);
  }
  return tokens;
}

}  // namespace fuelgen
