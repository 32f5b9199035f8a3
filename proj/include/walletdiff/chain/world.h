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

#ifndef WALLETDIFF_CHAIN_WORLD_H_
#define WALLETDIFF_CHAIN_WORLD_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walletdiff/codec/seed.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff::chain {

enum class LabelKind { kClean, kPhishing, kDrainer };
std::string to_string(LabelKind k);

struct AddressLabel {
  Address address;
  LabelKind label = LabelKind::kClean;
  std::optional<Date> labeled_at;  // required for non-clean labels
};

struct TokenContract {
  Address address;
  std::string name;
  std::string symbol;
  unsigned decimals = 18;
  U256 total_supply = 0;
  std::map<Address, U256> balances;
  std::map<std::pair<Address, Address>, U256> allowances;  // (owner, spender)
};

struct NftContract {
  Address address;
  std::string name;
  std::string symbol;
  std::int64_t floor_price_micro_usd = 0;
  std::map<U256, Address> owners;
  std::map<std::pair<Address, Address>, bool> operator_approvals;  // (owner, operator)

  std::size_t count_owned(const Address& a) const;
};

// ---- behavior programs ------------------------------------------------------

enum class CondVar { kGasPrice, kCoinbase, kTimestamp, kCaller, kValue, kStorage };
enum class Comparator { kEq, kNe, kLt, kLe, kGt, kGe };

struct Condition {
  CondVar var = CondVar::kGasPrice;
  std::string key;  // storage slot name for kStorage
  Comparator cmp = Comparator::kEq;
  U256 constant = 0;
};

struct PartyRef {
  enum class Kind { kCaller, kSelf, kCoinbase, kArg, kLiteral };
  Kind kind = Kind::kCaller;
  Address literal;
  int arg = -1;
};

struct AmountRef {
  enum class Kind { kLiteral, kAll, kTxValue, kArg };
  Kind kind = Kind::kLiteral;
  U256 literal = 0;
  int arg = -1;
};

struct Action {
  enum class Op {
    kTransferToken,
    kTransferNative,
    kTransferNft,
    kMint,
    kSetAllowance,
    kSetOperatorApproval,
    kSetStorage,
    kEmitEvent,
    kRevert,
  };
  Op op = Op::kRevert;
  Address asset;  // token or NFT contract
  PartyRef from;
  PartyRef to;    // recipient, spender or operator
  AmountRef amount;  // amount, or token id for kTransferNft
  bool approved = true;
  std::string key;  // storage slot or event name or revert reason
  U256 storage_value = 0;
  std::vector<std::string> args;  // event arguments
};

struct Clause {
  std::optional<std::string> function;  // guard on the called function name
  std::vector<Condition> conditions;    // all must hold; empty = unconditional
  std::vector<Action> actions;
};

// A contract whose effects are a guarded program instead of bytecode. The
// first clause whose guards hold runs; no match means the call reverts.
struct ContractBehavior {
  Address address;
  std::string name;
  std::vector<Clause> clauses;
  std::map<std::string, U256> storage;

  // Reads gasprice, coinbase or timestamp.
  bool reads_environment() const;
  bool reads_storage() const;
  Json to_json() const;
};

ContractBehavior behavior_from_json(const Json& j);

// ---- network state ----------------------------------------------------------

struct BlockEnv {
  Address coinbase;
  std::uint64_t timestamp = 0;
  std::uint64_t number = 0;
  U256 gas_price = 0;  // value observed as tx.gasprice
};

struct EnsRecord {
  Address address;
  std::optional<Date> expiry;
};

struct PendingTx {
  std::uint64_t seq = 0;
  TransactionSeed tx;
};

struct NetworkState {
  NetworkId id;
  std::string name;
  std::string native_symbol = "ETH";
  std::int64_t native_price_micro_usd = 0;
  BlockEnv env;
  std::map<Address, U256> native;  // every known account appears here
  std::map<Address, TokenContract> tokens;
  std::map<Address, NftContract> nfts;
  std::map<Address, ContractBehavior> behaviors;
  std::optional<Address> permit2;  // shared approval hub for Permit2 calls
  std::map<std::string, EnsRecord> ens;  // lowercase names
  std::vector<PendingTx> mempool;
  std::uint64_t next_seq = 0;

  bool has_code(const Address& a) const {
    return tokens.count(a) || nfts.count(a) || behaviors.count(a) || (permit2 && *permit2 == a);
  }
  void add_pending(const TransactionSeed& tx) { mempool.push_back({next_seq++, tx}); }
};

struct ChainWorld {
  std::map<std::uint64_t, NetworkState> networks;
  std::map<Address, AddressLabel> labels;
  Date as_of;
  Address wallet_account;  // the account the wallet under test controls

  // Throws Error("unknown-network").
  NetworkState& network(NetworkId id);
  const NetworkState& network(NetworkId id) const;
  bool has_network(NetworkId id) const { return networks.count(id.value) != 0; }

  // Throws Error("bad-world") on schema violations.
  static ChainWorld from_json(const Json& doc);
  static ChainWorld load(const std::filesystem::path& path);
};

// "12.34" -> 12340000. Throws Error(code) on malformed input.
std::int64_t parse_usd_micro(std::string_view text, const char* code);
std::string format_usd_micro(std::int64_t micro);

void label_address(ChainWorld& world, const Address& a, LabelKind label,
                   std::optional<Date> labeled_at);
AddressLabel lookup_label(const ChainWorld& world, const Address& a);

// Exact lookup on one network; expired or unknown names yield nullopt.
std::optional<Address> resolve_ens(const ChainWorld& world, NetworkId network,
                                   std::string_view name);

}  // namespace walletdiff::chain

#endif  // WALLETDIFF_CHAIN_WORLD_H_
