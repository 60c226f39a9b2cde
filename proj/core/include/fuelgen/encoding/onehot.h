//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_ENCODING_ONEHOT_H_
#define FUELGEN_ENCODING_ONEHOT_H_

#include <Eigen/Dense>

#include "fuelgen/encoding/vocab.h"

namespace fuelgen {

/// kSequenceLength x vocabulary-size matrix, one row per position.
using OneHotMatrix = Eigen::MatrixXd;

OneHotMatrix to_onehot(const TokenSeq &tokens, int vocab_size);

/// Row-wise argmax (ties to the lowest index). Positions after the first
/// PAD are forced to PAD so the result is always a valid TokenSeq.
/// Throws ShapeError unless the matrix has kSequenceLength rows and at most
/// 256 columns.
TokenSeq from_onehot(const Eigen::Ref<const Eigen::MatrixXd> &matrix);

}  // namespace fuelgen

#endif  // FUELGEN_ENCODING_ONEHOT_H_
