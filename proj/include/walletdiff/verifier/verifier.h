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

#ifndef WALLETDIFF_VERIFIER_VERIFIER_H_
#define WALLETDIFF_VERIFIER_VERIFIER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/wallet/adapter.h"
#include "walletdiff/wallet/screen.h"

namespace walletdiff::verify {

enum class OracleKind { kSimulatorAccuracy, kAlertReliability, kUiCorrectnessClarity };
std::string to_string(OracleKind k);
// Throws Error("unknown-oracle").
OracleKind parse_oracle_kind(std::string_view text);

// Violation kinds. Simulator: blockContext, envDefault, unparseableDisplay.
// Alert: formatMutant, ethSign, personalSignDecode, chainIdUriMismatch,
// nftListing, deceptiveName, approvalFamily, labeledAddress.
// UI: tokenMetadata, ensResolution, unreadableOrMissingText.
struct OracleVerdict {
  OracleKind oracle = OracleKind::kAlertReliability;
  std::string kind;  // violation kind, or the check name when not violated
  std::string expectation;
  std::string observed;
  bool violated = false;
  std::optional<wallet::RenderedScreen> screen_evidence;
  std::string seed_ref;
};

struct AttackVectorFinding {
  std::string vector;  // "V1".."V13" or "unclassified"
  std::vector<OracleVerdict> verdicts;  // all violated
  std::string seed_id;
  std::string parent;    // empty for corpus seeds
  std::string strategy;  // empty for corpus seeds
  std::string profile;
};

Json to_json(const OracleVerdict& v);
Json to_json(const AttackVectorFinding& f);

// Screen text in reading order: by row, then by column.
std::vector<std::string> extract_text(const wallet::RenderedScreen& screen);

struct TrustedToken {
  NetworkId network;
  std::string symbol;
  std::string name;
  Address address;
};

// {"schema": "trusted-tokens/1", "tokens": [...]}. Throws Error("bad-catalog").
std::vector<TrustedToken> trusted_tokens_from_json(const Json& j);
std::vector<TrustedToken> load_trusted_tokens(const std::filesystem::path& path);

struct OracleContext {
  const chain::ChainWorld& world;  // state before the submission
  const codec::SignatureCatalog& catalog;
  const std::vector<TrustedToken>& trusted;
  // Allowed |displayed - actual| / |actual| per asset. Zero means exact.
  double sim_relative_tolerance = 0.0;
};

// Outcome of a transaction as the sender sees it.
struct SenderOutcome {
  bool success = true;
  std::vector<std::pair<std::string, I256>> deltas;  // (asset, amount), sorted, non-zero
};

// Runs the seed alone with its own gas price and the network's environment.
SenderOutcome single_transaction_truth(const TransactionSeed& tx, const OracleContext& ctx);
// Runs the seed in a block with the pending transactions of other senders.
SenderOutcome block_truth(const TransactionSeed& tx, const OracleContext& ctx);

// Compares the "simulation" screen against single-transaction and block
// execution. No verdict when the wallet showed no simulation.
std::vector<OracleVerdict> oracle_simulator(const Seed& seed,
                                            const std::vector<wallet::RenderedScreen>& screens,
                                            const OracleContext& ctx);

// Alert kinds the seed warrants, most specific first. `session` is the wallet
// session after the submission.
std::vector<std::string> alert_reasons(const Seed& seed, const wallet::WalletSession& session,
                                       const OracleContext& ctx);

// True when a screen other than the confirmation screen carries an alert word,
// or when no screen changed.
bool alert_shown(const std::vector<wallet::RenderedScreen>& screens);

// Exactly one verdict for transaction and message seeds, none otherwise.
std::vector<OracleVerdict> oracle_alert(const Seed& seed,
                                        const std::vector<wallet::RenderedScreen>& screens,
                                        const wallet::WalletSession& session,
                                        const OracleContext& ctx);

// Correctness of ENS and token lines on interaction screens, and clarity of
// the confirmation screen for transactions and messages. At least one verdict
// for interaction seeds.
std::vector<OracleVerdict> oracle_ui(const Seed& seed,
                                     const std::vector<wallet::RenderedScreen>& screens,
                                     const wallet::WalletSession& session,
                                     const OracleContext& ctx);

// Every oracle that applies to the seed; never empty.
std::vector<OracleVerdict> run_oracles(const Seed& seed,
                                       const std::vector<wallet::RenderedScreen>& screens,
                                       const wallet::WalletSession& session,
                                       const OracleContext& ctx);

struct ClassifierRule {
  OracleKind oracle;
  std::string kind;
  std::string family;  // seed kind, or "*" for any
  std::string vector;
};

// Maps violated verdicts to attack vectors through a rule table.
class Classifier {
 public:
  // {"schema": "classifier-rules/1", "rules": [{"oracle", "kind", "family",
  // "vector"}]}. Throws Error("bad-rules") on duplicates of a key or vector.
  static Classifier from_json(const Json& j);
  static Classifier load(const std::filesystem::path& path);

  // Vector for one violation, "unclassified" when no rule matches.
  std::string vector_for(OracleKind oracle, std::string_view kind, SeedKind family) const;

  // One finding per vector, in order of first violation.
  std::vector<AttackVectorFinding> classify(const std::vector<OracleVerdict>& verdicts,
                                            const Seed& seed,
                                            const std::string& profile_name) const;

  const std::vector<ClassifierRule>& rules() const { return rules_; }

 private:
  std::vector<ClassifierRule> rules_;
};

}  // namespace walletdiff::verify

#endif  // WALLETDIFF_VERIFIER_VERIFIER_H_
