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

#include <gtest/gtest.h>

#include "test_support.h"
#include "walletdiff/chain/execution.h"
#include "walletdiff/chain/listing.h"
#include "walletdiff/chain/world.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/keccak.h"

namespace walletdiff::chain {
namespace {

using testing::fixtures;

const Address kUser = Address::from_string("0xc0ffee254729296a45a3885639ac7e10f9d54979");
const Address kTkn = Address::from_string("0x1c7d4b196cb0c7b01d743fbc6116a902379c7238");
const Address kSale = Address::from_string("0x5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e");
const Address kFrontRunner = Address::from_string("0xa2b3c4d5e6f708192a3b4c5d6e7f8091a2b3c4d5");
const Address kGasBranch = Address::from_string("0x4f3a1b2c3d4e5f60718293a4b5c6d7e8f9012345");

TransactionSeed call(const Address& from, const Address& to, const std::string& data,
                     U256 gas_price, U256 value = 0) {
  TransactionSeed tx;
  tx.from = from;
  tx.to = to;
  tx.inputdata = data;
  tx.gas_price = gas_price;
  tx.value = value;
  tx.chain_id = kSepolia;
  return tx;
}

BlockEnv env_with_gas(const ChainWorld& world, U256 gas_price) {
  BlockEnv env = world.network(kSepolia).env;
  env.gas_price = gas_price;
  return env;
}

TEST(World, LoadsBundledFixture) {
  const ChainWorld& w = fixtures().world;
  EXPECT_TRUE(w.has_network(kSepolia));
  EXPECT_TRUE(w.has_network(kMainnet));
  EXPECT_EQ(w.wallet_account, kUser);
  EXPECT_THROW(w.network(NetworkId{5}), Error);
}

TEST(World, EnsResolutionIsPerNetworkAndHonoursExpiry) {
  const ChainWorld& w = fixtures().world;
  auto masked = resolve_ens(w, kSepolia, "0x11e4857bb9993a50c685a79afad4e6f65d518dda.eth");
  ASSERT_TRUE(masked);
  EXPECT_EQ(masked->str(), "0xd77a7b3b13d3b2d5e6cb5a3c3b1e0d93d4a2f0c1");
  EXPECT_TRUE(resolve_ens(w, kMainnet, "alice.eth"));
  EXPECT_FALSE(resolve_ens(w, kSepolia, "alice.eth"));
  EXPECT_FALSE(resolve_ens(w, kSepolia, "old.eth"));  // expired before the world date
}

TEST(World, LabelsCarryDates) {
  AddressLabel l = lookup_label(fixtures().world, kFrontRunner);
  EXPECT_EQ(l.label, LabelKind::kDrainer);
  ASSERT_TRUE(l.labeled_at);
  EXPECT_EQ(l.labeled_at->str(), "2025-03-15");
  EXPECT_EQ(lookup_label(fixtures().world, kUser).label, LabelKind::kClean);
}

TEST(World, RejectsMalformedDocuments) {
  try {
    ChainWorld::from_json(Json{{"schema", "chain-world/1"}, {"networks", 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-world");
  }
}

TEST(Execution, TokenTransferMovesBalances) {
  ChainWorld w = fixtures().world;
  const auto& catalog = fixtures().catalog;
  U256 before = w.network(kSepolia).tokens.at(kTkn).balances[kUser];
  auto tx = call(kUser, kTkn,
                 "0xa9059cbb000000000000000000000000bf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c"
                 "00000000000000000000000000000000000000000000000000000000000f4240",
                 U256(20000000000));
  ExecutionOutcome out = execute_transaction(w, kSepolia, env_with_gas(w, tx.gas_price), tx, catalog);
  ASSERT_TRUE(out.success()) << out.revert_reason;
  EXPECT_EQ(out.delta_for(kUser, "TKN"), I256(-1000000));
  EXPECT_EQ(w.network(kSepolia).tokens.at(kTkn).balances[kUser], before - 1000000);
}

TEST(Execution, RevertLeavesStateUntouched) {
  ChainWorld w = fixtures().world;
  U256 huge = pow2(200);
  auto tx = call(kUser, kTkn,
                 "0xa9059cbb000000000000000000000000bf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c" +
                     u256_hex(huge).substr(2).insert(0, 64 - (u256_hex(huge).size() - 2), '0'),
                 U256(1));
  auto before = w.network(kSepolia).tokens.at(kTkn).balances;
  ExecutionOutcome out = execute_transaction(w, kSepolia, env_with_gas(w, 1), tx, fixtures().catalog);
  EXPECT_FALSE(out.success());
  EXPECT_EQ(w.network(kSepolia).tokens.at(kTkn).balances, before);
}

TEST(Execution, GasPriceBranchDependsOnObservedGasPrice) {
  const auto& catalog = fixtures().catalog;
  auto tx = call(kUser, kGasBranch, "0x1249c58b", U256(30000000000));
  ChainWorld a = fixtures().world;
  ExecutionOutcome at_zero = execute_transaction(a, kSepolia, env_with_gas(a, 0), tx, catalog);
  ChainWorld b = fixtures().world;
  ExecutionOutcome at_30 = execute_transaction(b, kSepolia, env_with_gas(b, tx.gas_price), tx, catalog);
  ASSERT_TRUE(at_zero.success());
  ASSERT_TRUE(at_30.success());
  EXPECT_EQ(at_zero.delta_for(kUser, "TKN"), I256(pow10(20)));  // +100 TKN at 18 decimals
  EXPECT_LT(at_30.delta_for(kUser, "TKN"), 0);
}

// The sale only succeeds while open; the front-runner's closeSale flips it.
TEST(Execution, FrontRunningFlipsOutcomeInBothOrderings) {
  const auto& catalog = fixtures().catalog;
  auto buy = call(kUser, kSale, "0xa6f2ae3a", U256(20000000000), pow10(18));
  auto close = call(kFrontRunner, kSale, "0xee55efee", U256(50000000000));

  ChainWorld alone = fixtures().world;
  EXPECT_TRUE(execute_transaction(alone, kSepolia, env_with_gas(alone, buy.gas_price), buy, catalog)
                  .success());

  ChainWorld buy_first = fixtures().world;
  BlockResult r1 = form_and_execute_block(buy_first, kSepolia, {buy}, catalog);
  ASSERT_EQ(r1.outcomes.size(), 1u);
  EXPECT_TRUE(r1.outcomes[0].success());

  ChainWorld close_first = fixtures().world;
  BlockResult r2 = form_and_execute_block(close_first, kSepolia, {buy, close}, catalog);
  ASSERT_EQ(r2.order, (std::vector<std::size_t>{1, 0}));  // higher gas price first
  EXPECT_TRUE(r2.outcomes[0].success());
  EXPECT_FALSE(r2.outcomes[1].success());
}

TEST(Execution, BlockOrdersByGasPriceThenPosition) {
  const auto& catalog = fixtures().catalog;
  ChainWorld w = fixtures().world;
  auto t = [&](U256 gp) { return call(kUser, kFrontRunner, "", gp, U256(1)); };
  BlockResult r = form_and_execute_block(w, kSepolia, {t(10), t(30), t(10), t(20)}, catalog);
  EXPECT_EQ(r.order, (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(Execution, UnknownSenderIsAnError) {
  ChainWorld w = fixtures().world;
  auto tx = call(Address::from_string("0x0000000000000000000000000000000000000abc"), kTkn, "", 1);
  try {
    execute_transaction(w, kSepolia, env_with_gas(w, 1), tx, fixtures().catalog);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-sender");
  }
}

TEST(Create2, AddressFollowsFormulaAndRejectsRedeploy) {
  ChainWorld w = fixtures().world;
  ContractBehavior b = w.network(kSepolia).behaviors.at(kGasBranch);
  b.address = Address();
  Hash256 salt{};
  salt[31] = 7;
  Bytes pre{0xff};
  pre.insert(pre.end(), kUser.bytes().begin(), kUser.bytes().end());
  pre.insert(pre.end(), salt.begin(), salt.end());
  Hash256 code_hash = keccak256(b.to_json().dump());
  pre.insert(pre.end(), code_hash.begin(), code_hash.end());
  Hash256 h = keccak256(pre);
  std::array<std::uint8_t, 20> expected;
  std::copy(h.begin() + 12, h.end(), expected.begin());
  EXPECT_EQ(create2_address(kUser, salt, b), Address(expected));
  Address a = deploy_create2(w, kSepolia, kUser, salt, b);
  EXPECT_EQ(a, Address(expected));
  EXPECT_TRUE(w.network(kSepolia).has_code(a));
  try {
    deploy_create2(w, kSepolia, kUser, salt, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "already-deployed");
  }
}

codec::Eip712Payload listing_with_revenue(const std::string& wei) {
  Json doc = read_json_file(testing::data_dir() / "catalog" / "messages" / "eip712_listing.json");
  Json& td = doc["payload"]["typedData"];
  td["message"]["consideration"][0]["startAmount"] = wei;
  td["message"]["consideration"][0]["endAmount"] = wei;
  return codec::parse_eip712_doc(td).payload;
}

TEST(Listing, TemplatePriceIsAboveFloor) {
  auto a = analyze_listing(listing_with_revenue("60000000000000000"), fixtures().world, kSepolia);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->items, 1u);
  EXPECT_EQ(a->revenue_micro_usd, 120000000);  // 0.06 ETH at $2000
  EXPECT_EQ(a->floor_micro_usd, 100000000);
  EXPECT_FALSE(a->underpriced());
}

// $0.05 of ETH at $2000 per ETH is 2.5e13 wei.
TEST(Listing, FiveCentListingIsUnderpriced) {
  auto a = analyze_listing(listing_with_revenue("25000000000000"), fixtures().world, kSepolia);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->revenue_micro_usd, 50000);
  EXPECT_TRUE(a->below_minimum);
  EXPECT_TRUE(a->below_floor);
  EXPECT_TRUE(a->underpriced());
}

TEST(Listing, ThresholdBoundary) {
  // Exactly $0.10 is not below the minimum; one wei less is.
  auto at = analyze_listing(listing_with_revenue("50000000000000"), fixtures().world, kSepolia);
  ASSERT_TRUE(at);
  EXPECT_EQ(at->revenue_micro_usd, kMinListingRevenueMicroUsd);
  EXPECT_FALSE(at->below_minimum);
  auto under = analyze_listing(listing_with_revenue("49999999999999"), fixtures().world, kSepolia);
  EXPECT_TRUE(under->below_minimum);
}

TEST(Listing, OtherTypedDataIsNotAListing) {
  Json doc = read_json_file(testing::data_dir() / "catalog" / "messages" / "eip712_mail.json");
  auto p = codec::parse_eip712_doc(doc["payload"]["typedData"]).payload;
  EXPECT_FALSE(analyze_listing(p, fixtures().world, kSepolia));
}

TEST(Usd, ParseAndFormat) {
  EXPECT_EQ(parse_usd_micro("12.34", "bad"), 12340000);
  EXPECT_EQ(format_usd_micro(50000), "0.05");
  EXPECT_THROW(parse_usd_micro("1.2.3", "bad"), Error);
}

}  // namespace
}  // namespace walletdiff::chain
