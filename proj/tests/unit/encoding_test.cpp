//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <string>

#include <gtest/gtest.h>

#include "fuelgen/chem/enumerate.h"
#include "fuelgen/encoding/onehot.h"
#include "fuelgen/encoding/vocab.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

TEST(Vocab, DefaultOrder) {
  Vocab v;
  EXPECT_EQ(v.size(), 9);
  EXPECT_EQ(v.symbols(), "CO()=#12");
  EXPECT_EQ(v.index_of('C'), 1);
  EXPECT_EQ(v.index_of('2'), 8);
  EXPECT_EQ(v.index_of('N'), -1);
  EXPECT_THROW(Vocab("CC"), ValidationError);
}

TEST(Tokens, EncodeExamples) {
  Vocab v;
  TokenSeq t = encode_tokens("CCO", v);
  TokenSeq expected {};
  expected[0] = 1;
  expected[1] = 1;
  expected[2] = 2;
  EXPECT_EQ(t, expected);
  EXPECT_EQ(encode_tokens("", v), TokenSeq {});
  EXPECT_THROW(encode_tokens(std::string(24, 'C'), v), LengthError);
  EXPECT_NO_THROW(encode_tokens(std::string(23, 'C'), v));
  EXPECT_THROW(encode_tokens("CCN", v), AlphabetError);
}

TEST(Tokens, DecodeExamples) {
  Vocab v;
  TokenSeq t {};
  t[0] = 1;
  t[1] = 1;
  t[2] = 2;
  EXPECT_EQ(decode_tokens(t, v), "CCO");
  EXPECT_EQ(decode_tokens(TokenSeq {}, v), "");
}

TEST(Tokens, RoundTripOnEnumeratedCorpus) {
  Vocab v;
  for (const std::string &s: enumerate_molecules(kMaxEnumeratedHeavyAtoms)) {
    if (s.size() > static_cast<std::size_t>(kSequenceLength))
      continue;
    TokenSeq t = encode_tokens(s, v);
    ASSERT_TRUE(is_valid_token_seq(t, v)) << s;
    ASSERT_EQ(decode_tokens(t, v), s);
  }
}

TEST(OneHot, RowsArePositions) {
  TokenSeq t {};
  t[0] = 1;
  OneHotMatrix m = to_onehot(t, 9);
  ASSERT_EQ(m.rows(), kSequenceLength);
  ASSERT_EQ(m.cols(), 9);
  Eigen::RowVectorXd row0 = Eigen::RowVectorXd::Zero(9);
  row0(1) = 1;
  EXPECT_EQ(m.row(0), row0);
  EXPECT_EQ(m(1, kPadIndex), 1.0);
}

TEST(OneHot, ArgmaxTieGoesToPad) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(kSequenceLength, 9, 1.0 / 9);
  EXPECT_EQ(from_onehot(m), TokenSeq {});
}

TEST(OneHot, PerturbationPreservesArgmax) {
  Vocab v;
  auto rng = make_rng(5);
  std::uniform_real_distribution<double> noise(-0.4, 0.4);
  TokenSeq t = encode_tokens("CC(=O)C1CC1", v);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd m = to_onehot(t, v.size());
    for (Eigen::Index i = 0; i < m.size(); ++i)
      m(i) += noise(rng);
    EXPECT_EQ(from_onehot(m), t);
  }
}

TEST(OneHot, WrongShape) {
  EXPECT_THROW(from_onehot(Eigen::MatrixXd::Zero(5, 9)), ShapeError);
}
