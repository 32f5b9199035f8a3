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

#ifndef WALLETDIFF_MUTATOR_MUTATOR_H_
#define WALLETDIFF_MUTATOR_MUTATOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/rng.h"
#include "walletdiff/common/types.h"

namespace walletdiff::mutate {

enum class FieldSemantic { kAmount, kAddress, kBytes, kText, kUnknown };
std::string to_string(FieldSemantic s);

// Classifies a field from its name and textual value. Address detection wins:
// a 0x-address or a 64-digit hex word with 24 leading zero digits is an
// address. Hex text is bytes, digit strings and amount-named fields are
// amounts, other non-empty text is text.
FieldSemantic infer_field_semantics(std::string_view field_name, std::string_view value);

enum class Strategy {
  kValueZero,
  kValueHuge,
  kAddressReplace,
  kCharEdit,
  kIllegalEncoding,
  kBitFlip,
  kArithmetic,
  kHexToDecimal,
  kParamSwap,
  kPrefixStrip,
  kPathReorder,
};
std::string to_string(Strategy s);
// Throws Error("unknown-strategy").
Strategy parse_strategy(std::string_view text);
bool is_format_strategy(Strategy s);

// 2^255, the replacement for "very large" amounts.
U256 huge_amount();

struct MutatorOptions {
  std::size_t budget = 16;           // mutants per parent, content and format combined
  std::vector<Address> attackers;    // replacement addresses, usually from the scam catalog
};

class Mutator {
 public:
  Mutator(const codec::SignatureCatalog& catalog, MutatorOptions options);

  // One mutant per applicable (strategy, locus), all non-preserving. Mutant
  // ids are empty; callers number them.
  std::vector<Seed> mutate_content(const Seed& parent, Rng& rng) const;

  // Prefix stripping and radix changes are flagged preserving and are only
  // emitted when canonical_payload agrees with the parent. Parameter swaps
  // and path reorders are non-preserving.
  std::vector<Seed> mutate_format(const Seed& parent, Rng& rng) const;

  // Content and format mutants of one parent, at most `budget` of them. The
  // selection takes one mutant per strategy in turn so every applicable
  // strategy is represented before any repeats.
  std::vector<Seed> mutate(const Seed& parent, Rng& rng) const;

  const MutatorOptions& options() const { return options_; }

 private:
  const codec::SignatureCatalog& catalog_;
  MutatorOptions options_;
};

}  // namespace walletdiff::mutate

#endif  // WALLETDIFF_MUTATOR_MUTATOR_H_
