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

#include <algorithm>
#include <fstream>
#include <set>

#include "test_support.h"
#include "walletdiff/chain/execution.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/rng.h"
#include "walletdiff/seed/corpus.h"
#include "walletdiff/seed/crawler.h"
#include "walletdiff/wallet/ui.h"

namespace walletdiff::seed {
namespace {

using testing::fixtures;

UiGraph crawl_bundled() {
  wallet::LayoutNavigator nav(fixtures().layout);
  return crawl_ui(nav);
}

TEST(Crawler, BuildsTreeReachableFromEntry) {
  UiGraph g = crawl_bundled();
  ASSERT_FALSE(g.nodes.empty());
  EXPECT_EQ(g.nodes.front().id, "entry");
  EXPECT_EQ(g.edges.size(), g.nodes.size() - 1);
  std::set<std::string> ids;
  for (const auto& n : g.nodes) EXPECT_TRUE(ids.insert(n.id).second) << "duplicate " << n.id;
  std::set<std::string> children;
  for (const auto& e : g.edges) {
    EXPECT_TRUE(ids.count(e.from));
    EXPECT_TRUE(children.insert(e.to).second) << "two parents for " << e.to;
  }
  for (const auto& n : g.nodes) {
    if (n.id == "entry") continue;
    auto path = g.path_to(n.id);
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(path.back(), n.id);
  }
}

TEST(Crawler, BridgeAmountBacktracksThroughSwapAndBridge) {
  UiGraph g = crawl_bundled();
  EXPECT_EQ(g.path_to("bridge-amount"), (std::vector<std::string>{"swap", "bridge", "bridge-amount"}));
  InputSemantics s = infer_semantics(g, "bridge-amount");
  EXPECT_EQ(s.tag, "bridge-amount");
  EXPECT_EQ(s.data_type, "integer-amount");
}

TEST(Crawler, InputsForIntegerFieldsAreDigits) {
  UiGraph g = crawl_bundled();
  Rng rng(9);
  auto seeds = generate_interactions(g, fixtures().world, kSepolia, 3, rng);
  bool found = false;
  for (const auto& s : seeds) {
    const auto& steps = s.interaction().steps;
    ASSERT_FALSE(steps.empty());
    if (steps.back().path.back() != "bridge-amount") continue;
    found = true;
    EXPECT_EQ(steps.back().path, (std::vector<std::string>{"swap", "bridge", "bridge-amount"}));
    const std::string& v = steps.back().data;
    EXPECT_FALSE(v.empty());
    EXPECT_TRUE(std::all_of(v.begin(), v.end(), ::isdigit)) << v;
  }
  EXPECT_TRUE(found);
}

TEST(Crawler, RecipientInputsIncludeEnsDerivedAddress) {
  UiGraph g = crawl_bundled();
  Rng rng(1);
  auto seeds = generate_interactions(g, fixtures().world, kSepolia, 4, rng);
  bool masked = false;
  for (const auto& s : seeds) {
    const auto& step = s.interaction().steps.back();
    masked = masked || (step.path.back() == "send-recipient" &&
                        step.data == "0x11e4857bb9993a50c685a79afad4e6f65d518dda");
  }
  EXPECT_TRUE(masked);
}

TEST(Crawler, ExportsNodeKindsAsShapes) {
  UiGraph g = crawl_bundled();
  std::string dot = to_dot(g);
  EXPECT_NE(dot.find("\"swap\" [label=\"Swap\", shape=circle]"), std::string::npos);
  EXPECT_NE(dot.find("\"bridge-amount\" [label=\"Amount\", shape=box]"), std::string::npos);
  Json j = to_json(g);
  EXPECT_EQ(j["nodes"].size(), g.nodes.size());
}

// Every click leads back to the same screen shape under a new title, forever.
class LoopingNavigator : public wallet::UiNavigator {
 public:
  void reset() override { depth_ = 0; }
  wallet::UiSnapshot snapshot() const override {
    wallet::UiSnapshot s;
    s.title = "Screen " + std::to_string(depth_ % 2);
    s.elements = {{"next", "Next", wallet::ElementKind::kClickable}};
    return s;
  }
  bool click(const std::string& id) override {
    if (id != "next") return false;
    ++depth_;
    return true;
  }

 private:
  int depth_ = 0;
};

TEST(Crawler, TerminatesOnLoopingScreens) {
  LoopingNavigator nav;
  UiGraph g = crawl_ui(nav);
  EXPECT_LE(g.nodes.size(), 4u);
  EXPECT_EQ(g.edges.size(), g.nodes.size() - 1);
}

TEST(Corpus, ValidTransactionsAllSucceed) {
  Rng rng(1);
  auto seeds = collect_valid_transactions(fixtures().world, kSepolia, fixtures().catalog, 8, rng);
  ASSERT_EQ(seeds.size(), 8u);
  for (const auto& s : seeds) {
    EXPECT_EQ(s.origin, "valid");
    chain::ChainWorld w = fixtures().world;
    chain::BlockEnv env = w.network(kSepolia).env;
    env.gas_price = s.tx().gas_price;
    EXPECT_TRUE(chain::execute_transaction(w, kSepolia, env, s.tx(), fixtures().catalog).success());
  }
  Rng again(1);
  auto second = collect_valid_transactions(fixtures().world, kSepolia, fixtures().catalog, 8, again);
  for (std::size_t i = 0; i < seeds.size(); ++i) EXPECT_EQ(to_json(seeds[i]), to_json(second[i]));
}

TEST(Corpus, ZeroTransactionsIsAConfigError) {
  Rng rng(1);
  try {
    collect_valid_transactions(fixtures().world, kSepolia, fixtures().catalog, 0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-config");
  }
}

TEST(Corpus, MessageTemplatesCoverEverySigningPairing) {
  const auto& messages = fixtures().messages;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& m : messages) {
    EXPECT_EQ(m.origin, "template");
    EXPECT_FALSE(codec::has_errors(validate_message(m.msg())));
    pairs.insert({codec::to_string(m.msg().format), codec::to_string(m.msg().method)});
  }
  for (const char* f : {"hash-string", "text-string", "eip-191", "eip-712", "eip-4361"}) {
    for (auto method : codec::signing_methods_for(f)) {
      EXPECT_TRUE(pairs.count({f, codec::to_string(method)})) << f;
    }
  }
  EXPECT_NO_THROW(check_format_coverage(messages));
}

TEST(Corpus, MissingPairingIsReported) {
  std::vector<Seed> messages;
  for (const auto& m : fixtures().messages) {
    if (m.msg().method != codec::SigningMethod::kEthSign) messages.push_back(m);
  }
  try {
    check_format_coverage(messages);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "corpus-incomplete");
  }
}

TEST(Corpus, ScamCatalogCoversKnownPatterns) {
  const ScamCatalog& scams = fixtures().scams;
  std::set<std::string> patterns;
  for (const auto& s : scams.seeds) {
    EXPECT_EQ(s.origin, "catalog");
    patterns.insert(s.pattern);
  }
  for (const auto& p : known_patterns()) EXPECT_TRUE(patterns.count(p)) << p;
  EXPECT_FALSE(scams.attackers.empty());
}

TEST(Corpus, ScamCatalogMissingPatternIsIncomplete) {
  Json doc = read_json_file(testing::data_dir() / "catalog" / "scams.json");
  Json kept = Json::array();
  for (const auto& e : doc["entries"]) {
    if (e["pattern"] != "NFT listing") kept.push_back(e);
  }
  doc["entries"] = kept;
  auto dir = testing::scratch_dir("scams");
  write_text_file(dir / "scams.json", doc.dump());
  try {
    load_scam_catalog(dir / "scams.json", fixtures().catalog);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "corpus-incomplete");
  }
}

TEST(Corpus, AssignIdsNumbersInOrder) {
  std::vector<Seed> seeds(3, fixtures().messages.front());
  assign_ids(seeds, 5);
  EXPECT_EQ(seeds[0].id, "seed-0005");
  EXPECT_EQ(seeds[2].id, "seed-0007");
}

}  // namespace
}  // namespace walletdiff::seed
