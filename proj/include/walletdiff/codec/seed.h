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

#ifndef WALLETDIFF_CODEC_SEED_H_
#define WALLETDIFF_CODEC_SEED_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff {

struct TransactionSeed {
  Address from;
  Address to;
  U256 value = 0;
  std::string inputdata;  // verbatim submitted text, possibly non-canonical
  U256 gas_price = 0;
  NetworkId chain_id = kSepolia;
  std::string method = "eth_sendTransactions";
};

struct HashPayload {
  std::string hash;  // 32-byte hex digest as submitted
};
struct TypedDataPayload {
  std::string json;  // verbatim typed-data document
};
struct SiwePayload {
  std::string text;
};
using MessagePayload = std::variant<HashPayload, codec::PersonalSignPayload,
                                    TypedDataPayload, SiwePayload>;

struct MessageSeed {
  codec::MessageFormat format = codec::MessageFormat::kTextString;
  codec::SigningMethod method = codec::SigningMethod::kPersonalSign;
  MessagePayload payload;
  NetworkId connected_network = kSepolia;
  std::string connected_uri;
};

struct InteractionStep {
  std::vector<std::string> path;  // node ids from the entry to the target
  std::string action;             // "click" or "input"
  std::string data;               // typed value rendered as text
  std::string data_type;          // integer-amount, address, token-name, ...
};

struct InteractionSeed {
  std::vector<InteractionStep> steps;
  std::string expected_semantics;
  NetworkId network = kSepolia;  // network the wallet is connected to
};

enum class SeedKind { kTransaction, kMessage, kInteraction };
std::string to_string(SeedKind k);

struct MutationRecord {
  std::string parent;
  std::string strategy;
  bool semantics_preserving = false;
  std::string locus;  // field path the strategy touched
};

struct Seed {
  std::string id;
  std::string origin;    // valid, template, catalog, crawl, mutant
  std::string pattern;   // malicious pattern name for catalog entries
  std::string scam_type;
  std::optional<MutationRecord> mutation;
  std::variant<TransactionSeed, MessageSeed, InteractionSeed> body;

  SeedKind kind() const { return static_cast<SeedKind>(body.index()); }
  const TransactionSeed& tx() const { return std::get<TransactionSeed>(body); }
  const MessageSeed& msg() const { return std::get<MessageSeed>(body); }
  const InteractionSeed& interaction() const { return std::get<InteractionSeed>(body); }
  TransactionSeed& tx() { return std::get<TransactionSeed>(body); }
  MessageSeed& msg() { return std::get<MessageSeed>(body); }
  InteractionSeed& interaction() { return std::get<InteractionSeed>(body); }
  // True for corpus parents and for mutants that keep the parent's meaning.
  bool keeps_parent_semantics() const {
    return !mutation || mutation->semantics_preserving;
  }
};

std::string format_seed_id(std::size_t n);  // "seed-0042"

Json to_json(const Seed& seed);
Json to_json(const TransactionSeed& tx);
Json to_json(const MessageSeed& msg);
Json to_json(const InteractionSeed& seed);
// Throws Error("bad-seed") on missing or malformed fields.
Seed seed_from_json(const Json& j);
TransactionSeed transaction_from_json(const Json& j);
MessageSeed message_from_json(const Json& j);
InteractionSeed interaction_from_json(const Json& j);

// Canonical form of the seed's payload: equal strings mean equal meaning.
// Transactions normalise their inputdata, typed data is canonicalised, hashes
// and challenges are lowercased with a 0x prefix. Throws
// Error("unnormalizable") when the payload cannot be canonicalised.
std::string canonical_payload(const Seed& seed, const codec::SignatureCatalog& catalog);

}  // namespace walletdiff

#endif  // WALLETDIFF_CODEC_SEED_H_
