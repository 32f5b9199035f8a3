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

#include "walletdiff/chain/listing.h"

namespace walletdiff::chain {

namespace {

std::optional<Address> json_address(const Json& v) {
  if (!v.is_string()) return std::nullopt;
  return Address::parse(v.get<std::string>());
}

U256 json_amount(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) return 0;
  return codec::json_to_u256(obj[key]).value_or(0);
}

}  // namespace

bool is_listing_primary_type(std::string_view primary_type) {
  return primary_type == "OrderComponents" || primary_type == "Order";
}

std::optional<ListingAnalysis> analyze_listing(const codec::Eip712Payload& payload,
                                               const ChainWorld& world, NetworkId network) {
  if (!is_listing_primary_type(payload.primary_type)) return std::nullopt;
  const Json& m = payload.message;
  if (!m.is_object() || !m.contains("offerer") || !m.contains("offer") ||
      !m.contains("consideration") || !m["offer"].is_array() ||
      !m["consideration"].is_array()) {
    return std::nullopt;
  }
  auto offerer = json_address(m["offerer"]);
  if (!offerer) return std::nullopt;

  ListingAnalysis out;
  out.offerer = *offerer;
  const NetworkState* net = world.has_network(network) ? &world.network(network) : nullptr;

  for (const auto& item : m["offer"]) {
    U256 type = json_amount(item, "itemType");
    if (type != 2 && type != 3) continue;
    ++out.items;
    auto token = item.is_object() && item.contains("token") ? json_address(item["token"])
                                                            : std::nullopt;
    if (net && token) {
      auto it = net->nfts.find(*token);
      if (it != net->nfts.end()) out.floor_micro_usd += it->second.floor_price_micro_usd;
    }
  }
  for (const auto& item : m["consideration"]) {
    if (json_amount(item, "itemType") != 0) continue;
    auto recipient = item.is_object() && item.contains("recipient")
                         ? json_address(item["recipient"])
                         : std::nullopt;
    if (recipient && *recipient == out.offerer) out.revenue_wei += json_amount(item, "startAmount");
  }

  std::int64_t price = net ? net->native_price_micro_usd : 0;
  boost::multiprecision::uint512_t usd =
      boost::multiprecision::uint512_t(out.revenue_wei) * price / pow10(18);
  out.revenue_micro_usd = usd > INT64_MAX ? INT64_MAX : static_cast<std::int64_t>(usd);
  out.below_minimum = out.revenue_micro_usd < kMinListingRevenueMicroUsd;
  out.below_floor = out.items > 0 && out.revenue_micro_usd < out.floor_micro_usd;
  return out;
}

}  // namespace walletdiff::chain
