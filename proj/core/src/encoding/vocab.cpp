//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/encoding/vocab.h"

#include "fuelgen/util/error.h"

namespace fuelgen {

Vocab::Vocab(): Vocab("CO()=#12") { }

Vocab::Vocab(std::string_view symbols): symbols_(symbols) {
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (c == 0)
      throw ValidationError("vocabulary symbol must not be NUL");
    if (lookup_[c] >= 0)
      throw ValidationError(std::string("duplicate vocabulary symbol '")
                            + symbols_[i] + "'");
    lookup_[c] = static_cast<int>(i) + 1;
  }
}

bool is_valid_token_seq(const TokenSeq &tokens, const Vocab &vocab) {
  bool padded = false;
  for (std::uint8_t t: tokens) {
    if (t >= vocab.size())
      return false;
    if (t == kPadIndex)
      padded = true;
    else if (padded)
      return false;
  }
  return true;
}

TokenSeq encode_tokens(std::string_view smiles, const Vocab &vocab) {
  if (smiles.size() > static_cast<std::size_t>(kSequenceLength))
    throw LengthError("SMILES '" + std::string(smiles) + "' exceeds "
                      + std::to_string(kSequenceLength) + " characters");

  TokenSeq tokens {};
  for (std::size_t i = 0; i < smiles.size(); ++i) {
    int index = vocab.index_of(smiles[i]);
    if (index < 0)
      throw AlphabetError(std::string("character '") + smiles[i]
                          + "' not in vocabulary");
    tokens[i] = static_cast<std::uint8_t>(index);
  }
  return tokens;
}

std::string decode_tokens(const TokenSeq &tokens, const Vocab &vocab) {
  std::string out;
  for (std::uint8_t t: tokens) {
    if (t == kPadIndex)
      break;
    out += vocab.symbol_at(t);
  }
  return out;
}

}  // namespace fuelgen
