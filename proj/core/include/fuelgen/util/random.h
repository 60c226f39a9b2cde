//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_UTIL_RANDOM_H_
#define FUELGEN_UTIL_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace fuelgen {

/// Engine seeded from a base seed and a tuple of stream indices, so that
/// independent consumers get decorrelated, schedule-independent streams.
inline std::mt19937_64 make_rng(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> streams
                                = {}) {
  std::vector<std::uint32_t> words {
    static_cast<std::uint32_t>(seed),
    static_cast<std::uint32_t>(seed >> 32),
  };
  for (std::uint64_t s: streams) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace fuelgen

#endif  // FUELGEN_UTIL_RANDOM_H_
