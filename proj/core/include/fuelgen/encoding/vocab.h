//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_ENCODING_VOCAB_H_
#define FUELGEN_ENCODING_VOCAB_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fuelgen {

inline constexpr int kSequenceLength = 23;
inline constexpr int kPadIndex = 0;

/// Ordered single-character symbol table. Index 0 is the PAD symbol, which
/// has no character of its own.
class Vocab {
public:
  /// PAD + C O ( ) = # 1 2.
  Vocab();
  /// Throws ValidationError on duplicate or NUL symbols.
  explicit Vocab(std::string_view symbols);

  int size() const { return static_cast<int>(symbols_.size()) + 1; }
  // Chemical symbols in index order (index i + 1).
  const std::string &symbols() const { return symbols_; }

  // -1 when c is not in the vocabulary.
  int index_of(char c) const { return lookup_[static_cast<unsigned char>(c)]; }
  char symbol_at(int index) const { return symbols_[index - 1]; }

  bool operator==(const Vocab &other) const {
    return symbols_ == other.symbols_;
  }

private:
  std::string symbols_;
  std::array<int, 256> lookup_;
};

using TokenSeq = std::array<std::uint8_t, kSequenceLength>;

/// True when every index is in range and nothing but PAD follows a PAD.
bool is_valid_token_seq(const TokenSeq &tokens, const Vocab &vocab);

/// Throws LengthError when |smiles| > 23 and AlphabetError on a character
/// outside the vocabulary.
TokenSeq encode_tokens(std::string_view smiles, const Vocab &vocab);

/// Characters up to the first PAD.
std::string decode_tokens(const TokenSeq &tokens, const Vocab &vocab);

}  // namespace fuelgen

#endif  // FUELGEN_ENCODING_VOCAB_H_
