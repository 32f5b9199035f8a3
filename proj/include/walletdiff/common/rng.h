// Copyright 2026 The walletdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALLETDIFF_COMMON_RNG_H_
#define WALLETDIFF_COMMON_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace walletdiff {

// Deterministic generator. mt19937_64 output is fixed by the standard, and
// bounded draws use plain modulo so results do not depend on the library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one named unit of work (a seed id, a profile).
  static Rng derive(std::uint64_t campaign_seed, std::string_view label);

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n == 0 returns 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  // Inclusive range.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace walletdiff

#endif  // WALLETDIFF_COMMON_RNG_H_
