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

#ifndef WALLETDIFF_CHAIN_EXECUTION_H_
#define WALLETDIFF_CHAIN_EXECUTION_H_

#include <string>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/keccak.h"

namespace walletdiff::chain {

enum class Status { kSuccess, kRevert };

struct Delta {
  std::string asset;   // "native" or the token/NFT contract address
  std::string symbol;  // display symbol of the asset
  unsigned decimals = 0;
  Address account;
  I256 amount = 0;     // base units; NFT deltas count tokens
};

struct Event {
  std::string name;
  std::vector<std::string> args;
};

struct ExecutionOutcome {
  Status status = Status::kSuccess;
  std::string revert_reason;
  std::vector<Delta> deltas;  // sorted by (asset, account)
  std::vector<Event> events;
  std::uint64_t gas_used = 0;

  bool success() const { return status == Status::kSuccess; }
  // Net change for one account and asset symbol, zero when absent.
  I256 delta_for(const Address& account, std::string_view symbol) const;
};

// Gas is a flat charge: a base cost plus a fixed cost per executed action.
inline constexpr std::uint64_t kBaseGas = 21000;
inline constexpr std::uint64_t kGasPerAction = 5000;

// Runs one transaction against the network state. State changes only on
// success. `env.gas_price` is what the transaction observes as its gas price.
// Throws Error("unknown-sender") or Error("unknown-network").
ExecutionOutcome execute_transaction(ChainWorld& world, NetworkId network, const BlockEnv& env,
                                     const TransactionSeed& tx,
                                     const codec::SignatureCatalog& catalog);

struct BlockResult {
  std::vector<std::size_t> order;  // indices into the input, in execution order
  std::vector<ExecutionOutcome> outcomes;  // parallel to `order`
};

// Orders by gas price descending, ties by position, then executes in
// sequence. Each transaction observes its own gas price. Advances the block
// number once.
BlockResult form_and_execute_block(ChainWorld& world, NetworkId network,
                                   const std::vector<TransactionSeed>& mempool,
                                   const codec::SignatureCatalog& catalog);

// Address = last 20 bytes of keccak256(0xff || deployer || salt ||
// keccak256(canonical behavior JSON)). Registers the behavior at that address.
// Throws Error("already-deployed") when the address already holds code.
Address deploy_create2(ChainWorld& world, NetworkId network, const Address& deployer,
                       const Hash256& salt, ContractBehavior behavior);
Address create2_address(const Address& deployer, const Hash256& salt,
                        const ContractBehavior& behavior);

Json to_json(const ExecutionOutcome& outcome);

}  // namespace walletdiff::chain

#endif  // WALLETDIFF_CHAIN_EXECUTION_H_
