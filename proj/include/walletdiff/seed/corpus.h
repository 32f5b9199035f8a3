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

#ifndef WALLETDIFF_SEED_CORPUS_H_
#define WALLETDIFF_SEED_CORPUS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/rng.h"

namespace walletdiff::seed {

// Malicious pattern names accepted in scam catalogs.
const std::vector<std::string>& known_patterns();

// Transactions that execute successfully on `network`. Pending mempool
// transactions come first, then transfers from the wallet account synthesized
// with `rng` until `count` seeds exist. Every returned seed has been executed
// on a copy of the world. Throws Error("bad-config") for count 0 and
// Error("insufficient-seeds") when fewer than `count` can be produced.
std::vector<Seed> collect_valid_transactions(const chain::ChainWorld& world, NetworkId network,
                                             const codec::SignatureCatalog& catalog,
                                             std::size_t count, Rng& rng);

// Loads every *.json message template in `dir`, sorted by file name. Throws
// Error("bad-template") when a template does not parse cleanly for its format
// and Error("corpus-incomplete") when a format/method pairing of the signing
// table has no template.
std::vector<Seed> build_message_corpus(const std::filesystem::path& dir);

// Violations found when parsing a message payload for its declared format.
std::vector<codec::Violation> validate_message(const MessageSeed& msg);

struct ScamCatalog {
  std::vector<Seed> seeds;
  std::vector<Address> attackers;  // addresses mutations may substitute in
};

// {"schema": "scam-catalog/1", "attackers": [...], "entries": [{"pattern",
// "scamType", "transaction" | "message"}]}. Transactions may give "call":
// {"signature", "args"} instead of "inputdata". Throws Error("bad-catalog") on
// malformed entries and Error("corpus-incomplete") when a known pattern has no
// entry.
ScamCatalog load_scam_catalog(const std::filesystem::path& path,
                              const codec::SignatureCatalog& catalog);

// Every format/method pairing of the signing table has a message seed.
// Throws Error("corpus-incomplete").
void check_format_coverage(const std::vector<Seed>& messages);

// Assigns "seed-0001", "seed-0002", ... in order.
void assign_ids(std::vector<Seed>& seeds, std::size_t first = 1);

}  // namespace walletdiff::seed

#endif  // WALLETDIFF_SEED_CORPUS_H_
