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

// Command-line front end: build corpora, crawl the wallet UI, run campaigns,
// replay single seeds and render report matrices.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI/CLI11.hpp>

#include "walletdiff/campaign/campaign.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/seed/crawler.h"
#include "walletdiff/wallet/mock_wallet.h"

#ifndef WALLETDIFF_DEFAULT_DATA_DIR
#define WALLETDIFF_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace walletdiff;

namespace {

constexpr int kExitInternal = 1;

struct Options {
  std::string data_dir = WALLETDIFF_DEFAULT_DATA_DIR;
  std::string world;
  std::vector<std::string> profiles;
  std::string seed_file;
  std::string corpus_file;
  std::string in_file;
  std::string out;
  std::uint64_t rng_seed = 1;
  std::size_t jobs = 1;
  std::size_t tx_count = 8;
  std::size_t inputs_per_field = 3;
  std::size_t budget = 16;
  double sim_tolerance = 0.0;
};

campaign::DataPaths paths_for(const Options& o) {
  campaign::DataPaths p = campaign::DataPaths::from_dir(o.data_dir);
  if (!o.world.empty()) p.world = o.world;
  return p;
}

campaign::CorpusOptions corpus_options(const Options& o) {
  campaign::CorpusOptions c;
  c.transaction_count = o.tx_count;
  c.inputs_per_field = o.inputs_per_field;
  c.mutation_budget = o.budget;
  c.rng_seed = o.rng_seed;
  return c;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text_file(path, text);
  std::cerr << "wrote " << path.string() << "\n";
}

int cmd_corpus(const Options& o) {
  if (o.tx_count == 0) throw Error("bad-config", "transaction count must be at least 1");
  campaign::Fixtures fx = campaign::load_fixtures(paths_for(o));
  campaign::Corpus corpus = campaign::build_corpus(fx, corpus_options(o));
  fs::path out = o.out.empty() ? fs::path("corpus") : fs::path(o.out);
  write_file(out / "corpus.json", campaign::corpus_to_json(corpus.seeds, o.rng_seed).dump(2) + "\n");
  write_file(out / "ui_graph.dot", seed::to_dot(corpus.graph));
  write_file(out / "ui_graph.json", seed::to_json(corpus.graph).dump(2) + "\n");
  campaign::CorpusStats s = campaign::corpus_stats(corpus.seeds);
  std::cout << "seeds: " << s.total() << " (valid " << s.valid << ", messages " << s.messages
            << ", catalog " << s.catalog << ", interactions " << s.interactions << ", mutants "
            << s.mutants << ")\n";
  return 0;
}

int cmd_crawl(const Options& o) {
  campaign::Fixtures fx = campaign::load_fixtures(paths_for(o));
  std::string profile = o.profiles.empty() ? "hardened" : o.profiles.front();
  wallet::MockWallet w(wallet::find_profile(fx.profiles, profile), fx.world, fx.catalog, fx.layout);
  seed::UiGraph graph = seed::crawl_ui(w.navigator());
  fs::path out = o.out.empty() ? fs::path("crawl") : fs::path(o.out);
  write_file(out / "ui_graph.dot", seed::to_dot(graph));
  write_file(out / "ui_graph.json", seed::to_json(graph).dump(2) + "\n");
  std::cout << "nodes: " << graph.nodes.size() << ", edges: " << graph.edges.size() << "\n";
  return 0;
}

int cmd_fuzz(const Options& o) {
  campaign::CampaignConfig config;
  config.paths = paths_for(o);
  config.profiles = o.profiles;
  config.corpus = corpus_options(o);
  if (!o.corpus_file.empty()) config.corpus_file = fs::path(o.corpus_file);
  config.jobs = o.jobs;
  config.sim_tolerance = o.sim_tolerance;
  config.out_dir = o.out.empty() ? fs::path("report") : fs::path(o.out);
  campaign::CampaignReport report = campaign::run_campaign(config);
  Json doc = Json::parse(campaign::report_to_json(report).dump());
  std::cout << campaign::render_matrix_markdown(doc);
  std::cerr << "report written to " << config.out_dir.string() << "\n";
  return campaign::exit_code(report);
}

int cmd_replay(const Options& o) {
  campaign::Fixtures fx = campaign::load_fixtures(paths_for(o));
  for (const auto& p : fx.profiles) {
    if (p.name == o.profiles.front()) {
      Seed seed = seed_from_json(map_strings(read_json_file(o.seed_file), restore_raw_bytes));
      if (seed.id.empty()) seed.id = fs::path(o.seed_file).stem().string();
      std::cout << campaign::replay(seed, p.name, fx, o.sim_tolerance).trace;
      return 0;
    }
  }
  throw CLI::ValidationError("--profile", "unknown profile " + o.profiles.front());
}

int cmd_report(const Options& o) {
  Json doc = read_json_file(o.in_file);
  std::string md = campaign::render_matrix_markdown(doc);
  if (!o.out.empty()) {
    write_file(o.out, md);
  } else {
    std::cout << md;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Differential testing of wallet extensions against mock wallet profiles"};
  app.require_subcommand(1);
  app.add_option("--data-dir", o.data_dir, "Fixture directory")
      ->envname("WALLETDIFF_DATA_DIR")
      ->capture_default_str();
  app.add_option("--world", o.world, "World fixture overriding <data-dir>/world/default.json")
      ->envname("WALLETDIFF_WORLD");
  app.add_option("--rng-seed", o.rng_seed, "Campaign random seed")
      ->envname("WALLETDIFF_RNG_SEED")
      ->capture_default_str();

  auto add_corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--tx-count", o.tx_count, "Valid transactions to collect")
        ->envname("WALLETDIFF_TX_COUNT")
        ->capture_default_str();
    sub->add_option("--inputs-per-field", o.inputs_per_field, "Random inputs per UI field")
        ->envname("WALLETDIFF_INPUTS_PER_FIELD")
        ->capture_default_str();
    sub->add_option("--budget", o.budget, "Mutants per parent seed")
        ->envname("WALLETDIFF_BUDGET")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--out", o.out, help)->envname("WALLETDIFF_OUT");
  };

  CLI::App* corpus = app.add_subcommand("corpus", "Build the seed corpus and write it to disk");
  add_corpus_flags(corpus);
  add_out(corpus, "Output directory (default ./corpus)");

  CLI::App* crawl = app.add_subcommand("crawl", "Crawl a profile's UI and export the element graph");
  crawl->add_option("--profile", o.profiles, "Wallet profile (default hardened)")
      ->envname("WALLETDIFF_PROFILE")
      ->expected(1);
  add_out(crawl, "Output directory (default ./crawl)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "Run a campaign over the corpus and profiles");
  add_corpus_flags(fuzz);
  fuzz->add_option("--profile", o.profiles, "Wallet profile; repeatable, default all")
      ->envname("WALLETDIFF_PROFILE");
  fuzz->add_option("--corpus", o.corpus_file, "Use a corpus.json instead of building one")
      ->envname("WALLETDIFF_CORPUS")
      ->check(CLI::ExistingFile);
  fuzz->add_option("--jobs", o.jobs, "Worker threads")
      ->envname("WALLETDIFF_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuzz->add_option("--sim-tolerance", o.sim_tolerance, "Relative simulation tolerance")
      ->envname("WALLETDIFF_SIM_TOLERANCE")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_out(fuzz, "Report directory (default ./report)");

  CLI::App* replay = app.add_subcommand("replay", "Submit one seed to one profile and trace it");
  replay->add_option("--seed", o.seed_file, "Seed JSON file")
      ->envname("WALLETDIFF_SEED")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--profile", o.profiles, "Wallet profile")
      ->envname("WALLETDIFF_PROFILE")
      ->required()
      ->expected(1);
  replay->add_option("--sim-tolerance", o.sim_tolerance, "Relative simulation tolerance")
      ->envname("WALLETDIFF_SIM_TOLERANCE")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CLI::App* report = app.add_subcommand("report", "Render the matrix of a report.json");
  report->add_option("--in", o.in_file, "report.json")
      ->envname("WALLETDIFF_REPORT")
      ->required()
      ->check(CLI::ExistingFile);
  add_out(report, "Markdown output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (corpus->parsed()) return cmd_corpus(o);
    if (crawl->parsed()) return cmd_crawl(o);
    if (fuzz->parsed()) return cmd_fuzz(o);
    if (replay->parsed()) return cmd_replay(o);
    return cmd_report(o);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
