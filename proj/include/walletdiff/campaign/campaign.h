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

#ifndef WALLETDIFF_CAMPAIGN_CAMPAIGN_H_
#define WALLETDIFF_CAMPAIGN_CAMPAIGN_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/seed/corpus.h"
#include "walletdiff/seed/crawler.h"
#include "walletdiff/verifier/verifier.h"
#include "walletdiff/wallet/adapter.h"
#include "walletdiff/wallet/profile.h"
#include "walletdiff/wallet/ui.h"

namespace walletdiff::campaign {

inline constexpr std::array<const char*, 13> kVectors{"V1", "V2", "V3",  "V4",  "V5",  "V6", "V7",
                                                      "V8", "V9", "V10", "V11", "V12", "V13"};

// Fixture files, by default laid out under one data directory.
struct DataPaths {
  std::filesystem::path world;
  std::filesystem::path functions;
  std::filesystem::path messages;  // directory of message templates
  std::filesystem::path scams;
  std::filesystem::path trusted_tokens;
  std::filesystem::path profiles;
  std::filesystem::path layout;
  std::filesystem::path rules;

  static DataPaths from_dir(const std::filesystem::path& data_dir);
};

struct Fixtures {
  chain::ChainWorld world;
  codec::SignatureCatalog catalog;
  std::vector<Seed> messages;  // message templates
  seed::ScamCatalog scams;
  std::vector<verify::TrustedToken> trusted;
  std::vector<wallet::WalletProfile> profiles;
  wallet::UiLayout layout;
  verify::Classifier classifier;
};

// Loads and validates every fixture. Throws Error("io-error") naming the
// missing path, or the loader's error for malformed content.
Fixtures load_fixtures(const DataPaths& paths);

struct CorpusOptions {
  std::size_t transaction_count = 8;
  std::size_t inputs_per_field = 3;
  std::size_t mutation_budget = 16;
  std::uint64_t rng_seed = 1;
  NetworkId network = kSepolia;
};

struct CorpusStats {
  std::size_t valid = 0;
  std::size_t messages = 0;
  std::size_t catalog = 0;
  std::size_t interactions = 0;
  std::size_t mutants = 0;
  std::size_t preserving_mutants = 0;
  std::size_t total() const { return valid + messages + catalog + interactions + mutants; }
};

CorpusStats corpus_stats(const std::vector<Seed>& seeds);

// Per-phase wall time in milliseconds.
using Timing = std::map<std::string, double>;

struct Corpus {
  std::vector<Seed> seeds;  // parents first, then mutants in parent order
  seed::UiGraph graph;
};

// Valid transactions, message templates, scam catalog entries and crawled
// interactions, numbered in that order, followed by their mutants. Every
// random choice derives from `options.rng_seed`.
Corpus build_corpus(const Fixtures& fx, const CorpusOptions& options, Timing* timing = nullptr);

// {"schema": "walletdiff-corpus/1", "rngSeed", "stats", "seeds"}.
OrderedJson corpus_to_json(const std::vector<Seed>& seeds, std::uint64_t rng_seed);
// Throws Error("bad-corpus").
std::vector<Seed> corpus_from_json(const Json& j);

// Everything one submission produced.
struct Submission {
  std::vector<wallet::RenderedScreen> screens;
  wallet::WalletSession session;
  std::vector<verify::OracleVerdict> verdicts;
  std::vector<verify::AttackVectorFinding> findings;
  std::optional<std::string> crash;  // set when the wallet threw
};

// Resets the wallet to the seed's network and site, submits, and runs the
// oracles and classifier. A throwing wallet yields a crash and no verdicts.
Submission submit_and_verify(wallet::WalletAdapter& wallet, const Seed& seed, const Fixtures& fx,
                             double sim_tolerance, Timing* timing = nullptr);

struct CampaignConfig {
  DataPaths paths;
  std::vector<std::string> profiles;  // empty means every bundled profile
  CorpusOptions corpus;
  std::optional<std::filesystem::path> corpus_file;  // use these seeds instead of building
  std::size_t jobs = 1;
  double sim_tolerance = 0.0;
  std::filesystem::path out_dir;  // empty: nothing is written
};

struct ProfileResult {
  std::string name;
  bool expect_clean = false;
  std::string injected_vector;
  std::size_t submissions = 0;
  std::size_t verdicts = 0;
  std::size_t violations = 0;
  std::vector<verify::AttackVectorFinding> findings;
  std::vector<std::pair<std::string, std::string>> crashes;  // (seed id, message)
};

struct CampaignReport {
  std::uint64_t rng_seed = 0;
  CampaignConfig config;
  CorpusStats corpus;
  std::vector<ProfileResult> profiles;
  Timing timing;
};

// Loads fixtures (aborting before any submission on failure), builds or loads
// the corpus, submits every seed to every selected profile on `jobs` workers
// and classifies the results. With an output directory, writes report.json,
// report.md, timing.json and corpus.json there.
CampaignReport run_campaign(const CampaignConfig& config);

// profile -> vector -> vulnerable. Derived from the findings alone.
std::map<std::string, std::map<std::string, bool>> vulnerability_matrix(
    const std::vector<ProfileResult>& profiles);

// Deterministic report document; timing is kept out so equal seeds give equal
// bytes.
OrderedJson report_to_json(const CampaignReport& report);
// Markdown profile-by-vector table rebuilt from a report document's findings.
std::string render_matrix_markdown(const Json& report);
// Recomputes the matrix from the findings in a report document.
Json matrix_from_findings(const Json& report);

// 2 when a profile marked expect-clean has findings, else 0.
int exit_code(const CampaignReport& report);

struct ReplayResult {
  std::string trace;
  Submission submission;
};

// Submits one seed to one profile and renders a readable trace: each screen's
// text, each verdict, then the classification on the last line. Throws
// Error("unknown-profile").
ReplayResult replay(const Seed& seed, const std::string& profile_name, const Fixtures& fx,
                    double sim_tolerance = 0.0);

}  // namespace walletdiff::campaign

#endif  // WALLETDIFF_CAMPAIGN_CAMPAIGN_H_
