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

#include <set>

#include "test_support.h"
#include "walletdiff/common/error.h"
#include "walletdiff/verifier/verifier.h"
#include "walletdiff/wallet/keywords.h"
#include "walletdiff/wallet/mock_wallet.h"

namespace walletdiff::verify {
namespace {

using testing::fixtures;

OracleContext context() {
  return OracleContext{fixtures().world, fixtures().catalog, fixtures().trusted, 0.0};
}

Seed sale_purchase() {
  return seed_from_json(Json{{"id", "sale-buy"},
                             {"kind", "transaction"},
                             {"origin", "valid"},
                             {"transaction",
                              {{"chainId", 11155111},
                               {"from", "0xc0ffee254729296a45a3885639ac7e10f9d54979"},
                               {"to", "0x5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e5a1e"},
                               {"value", "1000000000000000000"},
                               {"gasPrice", "20000000000"},
                               {"inputdata", "0xa6f2ae3a"},
                               {"method", "eth_sendTransactions"}}}});
}

campaign::Submission submit(const std::string& profile, const Seed& seed) {
  wallet::MockWallet w(wallet::find_profile(fixtures().profiles, profile), fixtures().world,
                       fixtures().catalog, fixtures().layout);
  return campaign::submit_and_verify(w, seed, fixtures(), 0.0);
}

const OracleVerdict* find_verdict(const std::vector<OracleVerdict>& vs, OracleKind oracle) {
  for (const auto& v : vs) {
    if (v.oracle == oracle) return &v;
  }
  return nullptr;
}

Json rules(std::initializer_list<Json> entries) {
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(e);
  return Json{{"schema", "classifier-rules/1"}, {"rules", list}};
}

TEST(OracleKinds, NamesRoundTrip) {
  for (auto k : {OracleKind::kSimulatorAccuracy, OracleKind::kAlertReliability,
                 OracleKind::kUiCorrectnessClarity}) {
    EXPECT_EQ(parse_oracle_kind(to_string(k)), k);
  }
  try {
    parse_oracle_kind("vibes");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-oracle");
  }
}

TEST(Truth, GasPriceSeedLosesTokensAtItsOwnGasPrice) {
  Seed s = testing::load_seed("gasprice_branch_mint.json");
  SenderOutcome single = single_transaction_truth(s.tx(), context());
  ASSERT_TRUE(single.success);
  ASSERT_EQ(single.deltas.size(), 1u);
  EXPECT_LT(single.deltas[0].second, 0);
}

TEST(Truth, FrontRunnerMakesBlockTruthDiffer) {
  Seed s = sale_purchase();
  SenderOutcome single = single_transaction_truth(s.tx(), context());
  SenderOutcome block = block_truth(s.tx(), context());
  EXPECT_TRUE(single.success);
  EXPECT_FALSE(block.success);
}

TEST(SimulatorOracle, FlagsEnvironmentDefaultSimulation) {
  campaign::Submission sub = submit("inject-v2", testing::load_seed("gasprice_branch_mint.json"));
  const OracleVerdict* v = find_verdict(sub.verdicts, OracleKind::kSimulatorAccuracy);
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->violated);
  EXPECT_EQ(v->kind, "envDefault");
  ASSERT_TRUE(v->screen_evidence);
  EXPECT_EQ(v->seed_ref, "gasprice-branch-mint");
  ASSERT_EQ(sub.findings.size(), 1u);
  EXPECT_EQ(sub.findings[0].vector, "V2");
}

TEST(SimulatorOracle, FlagsSingleTransactionSimulationUnderFrontRunning) {
  campaign::Submission sub = submit("inject-v1", sale_purchase());
  const OracleVerdict* v = find_verdict(sub.verdicts, OracleKind::kSimulatorAccuracy);
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->violated);
  EXPECT_EQ(v->kind, "blockContext");
  ASSERT_FALSE(sub.findings.empty());
  EXPECT_EQ(sub.findings[0].vector, "V1");
}

TEST(SimulatorOracle, HardenedWalletPasses) {
  for (const Seed& s : {testing::load_seed("gasprice_branch_mint.json"), sale_purchase()}) {
    campaign::Submission sub = submit("hardened", s);
    for (const auto& v : sub.verdicts) EXPECT_FALSE(v.violated) << s.id << " " << v.kind;
  }
}

TEST(SimulatorOracle, NoVerdictWithoutSimulationScreen) {
  Seed s = testing::load_seed("benign_token_transfer.json");
  EXPECT_TRUE(oracle_simulator(s, {}, context()).empty());
}

TEST(AlertOracle, BenignTransferNeedsNoAlert) {
  Seed s = testing::load_seed("benign_token_transfer.json");
  wallet::WalletSession session;
  session.network = kSepolia;
  session.account = fixtures().world.wallet_account;
  EXPECT_TRUE(alert_reasons(s, session, context()).empty());
  campaign::Submission sub = submit("hardened", s);
  const OracleVerdict* v = find_verdict(sub.verdicts, OracleKind::kAlertReliability);
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->violated);
}

TEST(AlertOracle, EthSignWithoutBlockIsViolated) {
  for (const auto& m : fixtures().messages) {
    if (m.msg().method != codec::SigningMethod::kEthSign) continue;
    campaign::Submission sub = submit("inject-v3", m);
    const OracleVerdict* v = find_verdict(sub.verdicts, OracleKind::kAlertReliability);
    ASSERT_NE(v, nullptr);
    EXPECT_TRUE(v->violated);
    EXPECT_EQ(v->kind, "ethSign");
    EXPECT_TRUE(find_verdict(submit("hardened", m).verdicts, OracleKind::kAlertReliability));
    EXPECT_FALSE(find_verdict(submit("hardened", m).verdicts, OracleKind::kAlertReliability)->violated);
  }
}

TEST(AlertOracle, AlertWordsOnConfirmationScreenDoNotCount) {
  wallet::RenderedScreen confirm;
  confirm.screen_id = "confirm";
  confirm.changed_from_previous = true;
  wallet::add_line(confirm, "Risk score: low");
  EXPECT_FALSE(alert_shown({confirm}));
  wallet::RenderedScreen alert;
  alert.screen_id = "alert";
  alert.changed_from_previous = true;
  wallet::add_line(alert, "Warning: unlimited approval");
  EXPECT_TRUE(alert_shown({alert, confirm}));
  wallet::RenderedScreen frozen = confirm;
  frozen.changed_from_previous = false;
  EXPECT_TRUE(alert_shown({frozen}));
}

TEST(UiOracle, MaskedEnsSuggestionIsViolated) {
  Seed s = testing::load_seed("masked_ens_recipient.json");
  campaign::Submission bad = submit("ens-auto-suggest", s);
  const OracleVerdict* v = find_verdict(bad.verdicts, OracleKind::kUiCorrectnessClarity);
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->violated);
  EXPECT_EQ(v->kind, "ensResolution");
  campaign::Submission good = submit("hardened", s);
  ASSERT_FALSE(good.verdicts.empty());
  for (const auto& g : good.verdicts) EXPECT_FALSE(g.violated);
}

TEST(RunOracles, NeverEmpty) {
  for (const auto& s : testing::corpus_parents()) {
    EXPECT_FALSE(submit("hardened", s).verdicts.empty()) << s.id;
  }
}

TEST(ExtractText, ReadsRowsThenColumns) {
  wallet::RenderedScreen s;
  s.lines.push_back({"right", {100, 20, 40, 20}});
  s.lines.push_back({"left", {0, 20, 40, 20}});
  s.lines.push_back({"top", {0, 0, 40, 20}});
  EXPECT_EQ(extract_text(s), (std::vector<std::string>{"top", "left", "right"}));
}

TEST(TrustedTokens, LoadsBundledListAndRejectsBadDocuments) {
  EXPECT_FALSE(fixtures().trusted.empty());
  auto code = [](const Json& j) {
    try {
      trusted_tokens_from_json(j);
      return std::string("none");
    } catch (const Error& e) {
      return e.code();
    }
  };
  EXPECT_EQ(code(Json{{"schema", "nope"}}), "bad-catalog");
  EXPECT_EQ(code(Json{{"schema", "trusted-tokens/1"}, {"tokens", {{{"symbol", "TKN"}}}}}),
            "bad-catalog");
}

TEST(Classifier, BundledRulesCoverEveryVector) {
  std::set<std::string> vectors;
  for (const auto& r : fixtures().classifier.rules()) vectors.insert(r.vector);
  for (const char* v : campaign::kVectors) EXPECT_TRUE(vectors.count(v)) << v;
}

TEST(Classifier, RejectsDuplicateAndUnknownRules) {
  auto code = [](const Json& j) {
    try {
      Classifier::from_json(j);
      return std::string("none");
    } catch (const Error& e) {
      return e.code();
    }
  };
  Json a{{"oracle", "alertReliability"}, {"kind", "ethSign"}, {"family", "message"}, {"vector", "V3"}};
  Json b = a;
  b["vector"] = "V4";
  Json c = a;
  c["kind"] = "other";
  Json bad_oracle = a;
  bad_oracle["oracle"] = "vibes";
  Json bad_family = a;
  bad_family["family"] = "block";
  EXPECT_EQ(code(rules({a})), "none");
  EXPECT_EQ(code(rules({a, b})), "bad-rules");
  EXPECT_EQ(code(rules({a, c})), "bad-rules");
  EXPECT_EQ(code(rules({bad_oracle})), "bad-rules");
  EXPECT_EQ(code(rules({bad_family})), "bad-rules");
  EXPECT_EQ(code(Json{{"rules", Json::array()}}), "bad-rules");
}

TEST(Classifier, ExactFamilyBeatsWildcard) {
  Classifier c = Classifier::from_json(rules(
      {Json{{"oracle", "alertReliability"}, {"kind", "k"}, {"family", "*"}, {"vector", "V7"}},
       Json{{"oracle", "alertReliability"}, {"kind", "k"}, {"family", "message"}, {"vector", "V9"}}}));
  EXPECT_EQ(c.vector_for(OracleKind::kAlertReliability, "k", SeedKind::kMessage), "V9");
  EXPECT_EQ(c.vector_for(OracleKind::kAlertReliability, "k", SeedKind::kTransaction), "V7");
  EXPECT_EQ(c.vector_for(OracleKind::kAlertReliability, "other", SeedKind::kTransaction),
            "unclassified");
  EXPECT_EQ(c.vector_for(OracleKind::kUiCorrectnessClarity, "k", SeedKind::kTransaction),
            "unclassified");
}

TEST(Classifier, GroupsViolationsByVectorInFirstSeenOrder) {
  const Classifier& c = fixtures().classifier;
  Seed s = testing::load_seed("benign_token_transfer.json");
  s.mutation = MutationRecord{"seed-0001", "charEdit", false, "to"};
  auto v = [](OracleKind o, const std::string& kind, bool violated) {
    OracleVerdict out;
    out.oracle = o;
    out.kind = kind;
    out.violated = violated;
    return out;
  };
  auto findings = c.classify({v(OracleKind::kUiCorrectnessClarity, "unreadableOrMissingText", true),
                              v(OracleKind::kSimulatorAccuracy, "envDefault", true),
                              v(OracleKind::kAlertReliability, "approvalFamily", false),
                              v(OracleKind::kUiCorrectnessClarity, "unreadableOrMissingText", true),
                              v(OracleKind::kAlertReliability, "mystery", true)},
                             s, "p");
  ASSERT_EQ(findings.size(), 3u);
  EXPECT_EQ(findings[0].vector, "V13");
  EXPECT_EQ(findings[0].verdicts.size(), 2u);
  EXPECT_EQ(findings[1].vector, "V2");
  EXPECT_EQ(findings[2].vector, "unclassified");
  EXPECT_EQ(findings[0].parent, "seed-0001");
  EXPECT_EQ(findings[0].strategy, "charEdit");
  EXPECT_EQ(findings[0].profile, "p");
}

}  // namespace
}  // namespace walletdiff::verify
