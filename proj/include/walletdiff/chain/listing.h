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

#ifndef WALLETDIFF_CHAIN_LISTING_H_
#define WALLETDIFF_CHAIN_LISTING_H_

#include <cstdint>
#include <optional>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/messages.h"

namespace walletdiff::chain {

// Listing revenue below this many micro-dollars is treated as a giveaway.
inline constexpr std::int64_t kMinListingRevenueMicroUsd = 100000;  // $0.10

struct ListingAnalysis {
  Address offerer;
  std::size_t items = 0;         // NFTs offered
  U256 revenue_wei = 0;          // native consideration paid to the offerer
  std::int64_t revenue_micro_usd = 0;
  std::int64_t floor_micro_usd = 0;  // sum of collection floors of offered items
  bool below_minimum = false;
  bool below_floor = false;

  bool underpriced() const { return below_minimum || below_floor; }
};

// Recognises marketplace order messages (primary type OrderComponents or
// Order) whose message carries offerer, offer[] and consideration[]. Returns
// nullopt for any other typed data. Offer items of itemType 2 or 3 count as
// NFTs; consideration items with itemType 0 paid to the offerer count as
// revenue.
std::optional<ListingAnalysis> analyze_listing(const codec::Eip712Payload& payload,
                                               const ChainWorld& world, NetworkId network);

bool is_listing_primary_type(std::string_view primary_type);

}  // namespace walletdiff::chain

#endif  // WALLETDIFF_CHAIN_LISTING_H_
