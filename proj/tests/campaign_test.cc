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

#include <filesystem>

#include "test_support.h"
#include "walletdiff/common/error.h"

namespace walletdiff::campaign {
namespace {

using testing::fixtures;

CampaignConfig small_config(std::size_t jobs) {
  CampaignConfig c;
  c.paths = DataPaths::from_dir(testing::data_dir());
  c.profiles = {"hardened", "inject-v2", "ens-auto-suggest"};
  c.corpus.mutation_budget = 2;
  c.jobs = jobs;
  return c;
}

TEST(Fixtures, MissingFileIsAnIoError) {
  DataPaths paths = DataPaths::from_dir(testing::data_dir());
  paths.rules = testing::scratch_dir("missing") / "classifier.json";
  try {
    load_fixtures(paths);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "io-error");
    EXPECT_NE(std::string(e.what()).find("classifier.json"), std::string::npos);
  }
}

TEST(Corpus, StatsCountEachOrigin) {
  CorpusOptions options;
  options.mutation_budget = 2;
  Corpus c = build_corpus(fixtures(), options);
  CorpusStats st = corpus_stats(c.seeds);
  EXPECT_EQ(st.valid, options.transaction_count);
  EXPECT_EQ(st.messages, fixtures().messages.size());
  EXPECT_EQ(st.catalog, fixtures().scams.seeds.size());
  EXPECT_GT(st.interactions, 0u);
  EXPECT_GT(st.mutants, 0u);
  EXPECT_EQ(st.total(), c.seeds.size());
  EXPECT_EQ(c.seeds.front().id, "seed-0001");
}

TEST(Corpus, JsonRoundTripKeepsRawBytes) {
  CorpusOptions options;
  options.mutation_budget = 16;
  Corpus c = build_corpus(fixtures(), options);
  OrderedJson doc = corpus_to_json(c.seeds, options.rng_seed);
  std::string text = doc.dump();  // throws on invalid UTF-8
  std::vector<Seed> back = corpus_from_json(Json::parse(text));
  ASSERT_EQ(back.size(), c.seeds.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(to_json(back[i]), to_json(c.seeds[i])) << back[i].id;
  }
  EXPECT_THROW(corpus_from_json(Json{{"schema", "other"}}), Error);
}

TEST(Campaign, WritesConsistentReport) {
  CampaignConfig config = small_config(2);
  config.out_dir = testing::scratch_dir("campaign");
  CampaignReport report = run_campaign(config);
  for (const char* f : {"report.json", "report.md", "timing.json", "corpus.json"}) {
    EXPECT_TRUE(std::filesystem::exists(config.out_dir / f)) << f;
  }
  Json doc = read_json_file(config.out_dir / "report.json");
  EXPECT_EQ(doc["schema"], "walletdiff-report/1");
  EXPECT_EQ(matrix_from_findings(doc), doc["matrix"]);
  EXPECT_EQ(render_matrix_markdown(doc), read_text_file(config.out_dir / "report.md"));
  EXPECT_EQ(exit_code(report), 0);
  EXPECT_EQ(doc["exitCode"], 0);

  auto matrix = vulnerability_matrix(report.profiles);
  for (const char* v : kVectors) {
    EXPECT_FALSE(matrix["hardened"][v]) << v;
    EXPECT_EQ(matrix["inject-v2"][v], std::string(v) == "V2") << v;
    EXPECT_EQ(matrix["ens-auto-suggest"][v], std::string(v) == "V12") << v;
  }
  Json timing = read_json_file(config.out_dir / "timing.json");
  for (const char* phase : {"crawl", "corpus", "fuzz", "verify", "total"}) {
    EXPECT_TRUE(timing.contains(phase)) << phase;
  }
}

TEST(Campaign, ReportIndependentOfWorkerCount) {
  std::string one = report_to_json(run_campaign(small_config(1))).dump(2);
  std::string four = report_to_json(run_campaign(small_config(4))).dump(2);
  EXPECT_EQ(one, four);
}

TEST(Campaign, ReloadedCorpusGivesSameReport) {
  CampaignConfig first = small_config(2);
  first.out_dir = testing::scratch_dir("reload");
  std::string a = report_to_json(run_campaign(first)).dump(2);
  CampaignConfig second = small_config(2);
  second.corpus_file = first.out_dir / "corpus.json";
  std::string b = report_to_json(run_campaign(second)).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Campaign, UnknownProfileAbortsBeforeSubmitting) {
  CampaignConfig config = small_config(1);
  config.profiles = {"no-such-wallet"};
  try {
    run_campaign(config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-profile");
  }
}

TEST(ExitCode, ExpectCleanProfileWithFindingsIsTwo) {
  CampaignReport report;
  ProfileResult clean;
  clean.name = "hardened";
  clean.expect_clean = true;
  ProfileResult vulnerable;
  vulnerable.name = "inject-v2";
  vulnerable.findings.push_back({"V2", {}, "seed-0001", "", "", "inject-v2"});
  report.profiles = {clean, vulnerable};
  EXPECT_EQ(exit_code(report), 0);
  report.profiles[0].findings.push_back({"V5", {}, "seed-0002", "", "", "hardened"});
  EXPECT_EQ(exit_code(report), 2);
}

TEST(Replay, GasPriceSeedOnInjectedProfile) {
  ReplayResult r = replay(testing::load_seed("gasprice_branch_mint.json"), "inject-v2", fixtures());
  EXPECT_NE(r.trace.find("seed gasprice-branch-mint (transaction) on profile inject-v2"),
            std::string::npos);
  EXPECT_NE(r.trace.find("+100 TKN"), std::string::npos);
  EXPECT_NE(r.trace.find("simulatorAccuracy/envDefault: VIOLATED"), std::string::npos);
  EXPECT_TRUE(r.trace.ends_with("classification: V2\n")) << r.trace;
}

TEST(Replay, MaskedEnsOnSuggestingProfile) {
  ReplayResult r = replay(testing::load_seed("masked_ens_recipient.json"), "ens-auto-suggest",
                          fixtures());
  EXPECT_TRUE(r.trace.ends_with("classification: V12\n")) << r.trace;
}

TEST(Replay, BenignTransferOnHardenedProfile) {
  ReplayResult r = replay(testing::load_seed("benign_token_transfer.json"), "hardened", fixtures());
  EXPECT_NE(r.trace.find("0 violation(s)"), std::string::npos);
  EXPECT_TRUE(r.trace.ends_with("classification: none\n")) << r.trace;
  EXPECT_TRUE(r.submission.findings.empty());
}

TEST(Replay, UnknownProfile) {
  try {
    replay(testing::load_seed("benign_token_transfer.json"), "nope", fixtures());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-profile");
  }
}

}  // namespace
}  // namespace walletdiff::campaign
