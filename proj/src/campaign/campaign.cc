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

#include "walletdiff/campaign/campaign.h"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "walletdiff/common/error.h"
#include "walletdiff/mutator/mutator.h"
#include "walletdiff/wallet/mock_wallet.h"

namespace walletdiff::campaign {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_file(const fs::path& p) {
  if (!fs::exists(p)) throw Error("io-error", "missing fixture: " + p.string());
}

std::vector<const wallet::WalletProfile*> select_profiles(const Fixtures& fx,
                                                          const std::vector<std::string>& names) {
  std::vector<const wallet::WalletProfile*> out;
  if (names.empty()) {
    for (const auto& p : fx.profiles) out.push_back(&p);
  } else {
    for (const auto& n : names) out.push_back(&wallet::find_profile(fx.profiles, n));
  }
  return out;
}

OrderedJson stats_json(const CorpusStats& s) {
  OrderedJson j;
  j["valid"] = s.valid;
  j["messages"] = s.messages;
  j["catalog"] = s.catalog;
  j["interactions"] = s.interactions;
  j["mutants"] = s.mutants;
  j["preservingMutants"] = s.preserving_mutants;
  j["total"] = s.total();
  return j;
}

OrderedJson ordered(const Json& j) { return OrderedJson::parse(j.dump()); }

std::string indent_text(const std::string& text) { return "    " + wallet::escape_for_display(text); }

}  // namespace

DataPaths DataPaths::from_dir(const fs::path& data_dir) {
  DataPaths p;
  p.world = data_dir / "world" / "default.json";
  p.functions = data_dir / "catalog" / "functions.json";
  p.messages = data_dir / "catalog" / "messages";
  p.scams = data_dir / "catalog" / "scams.json";
  p.trusted_tokens = data_dir / "catalog" / "trusted_tokens.json";
  p.profiles = data_dir / "profiles" / "profiles.json";
  p.layout = data_dir / "ui" / "layout.json";
  p.rules = data_dir / "rules" / "classifier.json";
  return p;
}

Fixtures load_fixtures(const DataPaths& paths) {
  for (const auto& p : {paths.world, paths.functions, paths.messages, paths.scams,
                        paths.trusted_tokens, paths.profiles, paths.layout, paths.rules}) {
    require_file(p);
  }
  codec::SignatureCatalog catalog = codec::SignatureCatalog::load(paths.functions);
  seed::ScamCatalog scams = seed::load_scam_catalog(paths.scams, catalog);
  return Fixtures{chain::ChainWorld::load(paths.world),
                  std::move(catalog),
                  seed::build_message_corpus(paths.messages),
                  std::move(scams),
                  verify::load_trusted_tokens(paths.trusted_tokens),
                  wallet::load_profiles(paths.profiles),
                  wallet::UiLayout::load(paths.layout),
                  verify::Classifier::load(paths.rules)};
}

// ---- corpus -----------------------------------------------------------------

CorpusStats corpus_stats(const std::vector<Seed>& seeds) {
  CorpusStats s;
  for (const auto& seed : seeds) {
    if (seed.mutation) {
      ++s.mutants;
      if (seed.mutation->semantics_preserving) ++s.preserving_mutants;
    } else if (seed.origin == "valid") {
      ++s.valid;
    } else if (seed.origin == "template") {
      ++s.messages;
    } else if (seed.origin == "catalog") {
      ++s.catalog;
    } else {
      ++s.interactions;
    }
  }
  return s;
}

Corpus build_corpus(const Fixtures& fx, const CorpusOptions& options, Timing* timing) {
  Corpus corpus;
  auto start = Clock::now();
  {
    wallet::LayoutNavigator nav(fx.layout);
    corpus.graph = seed::crawl_ui(nav);
  }
  if (timing) (*timing)["crawl"] += ms_since(start);

  start = Clock::now();
  Rng tx_rng = Rng::derive(options.rng_seed, "valid-transactions");
  std::vector<Seed> parents = seed::collect_valid_transactions(
      fx.world, options.network, fx.catalog, options.transaction_count, tx_rng);
  for (const auto& s : fx.messages) parents.push_back(s);
  for (const auto& s : fx.scams.seeds) parents.push_back(s);
  Rng ui_rng = Rng::derive(options.rng_seed, "interactions");
  for (auto& s : seed::generate_interactions(corpus.graph, fx.world, options.network,
                                             options.inputs_per_field, ui_rng)) {
    parents.push_back(std::move(s));
  }
  seed::assign_ids(parents);

  mutate::Mutator mutator(fx.catalog, {options.mutation_budget, fx.scams.attackers});
  std::vector<Seed> mutants;
  for (const auto& p : parents) {
    Rng rng = Rng::derive(options.rng_seed, "mutate:" + p.id);
    for (auto& m : mutator.mutate(p, rng)) mutants.push_back(std::move(m));
  }
  seed::assign_ids(mutants, parents.size() + 1);
  corpus.seeds = std::move(parents);
  for (auto& m : mutants) corpus.seeds.push_back(std::move(m));
  if (timing) (*timing)["corpus"] += ms_since(start);
  return corpus;
}

OrderedJson corpus_to_json(const std::vector<Seed>& seeds, std::uint64_t rng_seed) {
  OrderedJson j;
  j["schema"] = "walletdiff-corpus/1";
  j["rngSeed"] = rng_seed;
  j["stats"] = stats_json(corpus_stats(seeds));
  OrderedJson list = OrderedJson::array();
  for (const auto& s : seeds) list.push_back(ordered(map_strings(to_json(s), escape_raw_bytes)));
  j["seeds"] = std::move(list);
  return j;
}

std::vector<Seed> corpus_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != "walletdiff-corpus/1") {
    throw Error("bad-corpus", "corpus file must have schema walletdiff-corpus/1");
  }
  std::vector<Seed> out;
  try {
    for (const auto& s : require(j, "seeds", "bad-corpus")) out.push_back(seed_from_json(map_strings(s, restore_raw_bytes)));
  } catch (const Error& e) {
    throw Error("bad-corpus", e.what());
  }
  return out;
}

// ---- submission -------------------------------------------------------------

namespace {

Submission submit_on(wallet::WalletAdapter& wallet, const Seed& seed,
                     const chain::ChainWorld& world, const Fixtures& fx, double tolerance,
                     Timing* timing) {
  Submission out;
  auto start = Clock::now();
  try {
    switch (seed.kind()) {
      case SeedKind::kTransaction:
        wallet.reset(seed.tx().chain_id, "");
        out.screens = wallet.submit_transaction(seed.tx());
        break;
      case SeedKind::kMessage:
        wallet.reset(seed.msg().connected_network, seed.msg().connected_uri);
        out.screens = wallet.submit_message(seed.msg());
        break;
      case SeedKind::kInteraction:
        wallet.reset(seed.interaction().network, "");
        out.screens = wallet.submit_interaction(seed.interaction());
        break;
    }
    out.session = wallet.session();
  } catch (const std::exception& e) {
    out.crash = e.what();
  }
  if (timing) (*timing)["fuzz"] += ms_since(start);
  if (out.crash) return out;

  start = Clock::now();
  verify::OracleContext ctx{world, fx.catalog, fx.trusted, tolerance};
  out.verdicts = verify::run_oracles(seed, out.screens, out.session, ctx);
  out.findings = fx.classifier.classify(out.verdicts, seed, wallet.profile().name);
  if (timing) (*timing)["verify"] += ms_since(start);
  return out;
}

struct TaskResult {
  std::size_t verdicts = 0;
  std::size_t violations = 0;
  std::vector<verify::AttackVectorFinding> findings;
  std::optional<std::string> crash;
};

}  // namespace

Submission submit_and_verify(wallet::WalletAdapter& wallet, const Seed& seed, const Fixtures& fx,
                             double sim_tolerance, Timing* timing) {
  return submit_on(wallet, seed, fx.world, fx, sim_tolerance, timing);
}

// ---- campaign ---------------------------------------------------------------

CampaignReport run_campaign(const CampaignConfig& config) {
  CampaignReport report;
  report.config = config;
  report.rng_seed = config.corpus.rng_seed;
  auto total_start = Clock::now();

  Fixtures fx = load_fixtures(config.paths);
  std::vector<const wallet::WalletProfile*> profiles = select_profiles(fx, config.profiles);

  std::vector<Seed> seeds;
  if (config.corpus_file) {
    auto start = Clock::now();
    seeds = corpus_from_json(read_json_file(*config.corpus_file));
    report.timing["corpus"] += ms_since(start);
  } else {
    seeds = build_corpus(fx, config.corpus, &report.timing).seeds;
  }
  report.corpus = corpus_stats(seeds);

  const std::size_t n_tasks = profiles.size() * seeds.size();
  std::vector<TaskResult> results(n_tasks);
  std::atomic<std::size_t> next{0};
  std::mutex timing_mu;
  auto worker = [&]() {
    chain::ChainWorld world = fx.world;
    std::map<std::size_t, std::unique_ptr<wallet::MockWallet>> wallets;
    Timing local;
    for (std::size_t t; (t = next.fetch_add(1)) < n_tasks;) {
      std::size_t pi = t / seeds.size();
      std::size_t si = t % seeds.size();
      auto& w = wallets[pi];
      if (!w) w = std::make_unique<wallet::MockWallet>(*profiles[pi], world, fx.catalog, fx.layout);
      Submission sub = submit_on(*w, seeds[si], world, fx, config.sim_tolerance, &local);
      TaskResult& r = results[t];
      r.crash = sub.crash;
      r.verdicts = sub.verdicts.size();
      for (const auto& v : sub.verdicts) r.violations += v.violated ? 1 : 0;
      r.findings = std::move(sub.findings);
    }
    std::lock_guard<std::mutex> lock(timing_mu);
    for (const auto& [k, v] : local) report.timing[k] += v;
  };
  std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    ProfileResult pr;
    pr.name = profiles[pi]->name;
    pr.expect_clean = profiles[pi]->expect_clean;
    pr.injected_vector = profiles[pi]->injected_vector;
    for (std::size_t si = 0; si < seeds.size(); ++si) {
      TaskResult& r = results[pi * seeds.size() + si];
      ++pr.submissions;
      pr.verdicts += r.verdicts;
      pr.violations += r.violations;
      if (r.crash) pr.crashes.emplace_back(seeds[si].id, "wallet-crashed: " + *r.crash);
      for (auto& f : r.findings) pr.findings.push_back(std::move(f));
    }
    report.profiles.push_back(std::move(pr));
  }
  report.timing["total"] = ms_since(total_start);

  if (!config.out_dir.empty()) {
    fs::create_directories(config.out_dir);
    OrderedJson doc = report_to_json(report);
    write_text_file(config.out_dir / "report.json", doc.dump(2) + "\n");
    write_text_file(config.out_dir / "report.md", render_matrix_markdown(Json::parse(doc.dump())));
    OrderedJson timing;
    for (const char* phase : {"crawl", "corpus", "fuzz", "verify", "total"}) {
      timing[phase] = report.timing.count(phase) ? report.timing.at(phase) : 0.0;
    }
    write_text_file(config.out_dir / "timing.json", timing.dump(2) + "\n");
    write_text_file(config.out_dir / "corpus.json",
                    corpus_to_json(seeds, config.corpus.rng_seed).dump(2) + "\n");
  }
  return report;
}

// ---- reporting --------------------------------------------------------------

std::map<std::string, std::map<std::string, bool>> vulnerability_matrix(
    const std::vector<ProfileResult>& profiles) {
  std::map<std::string, std::map<std::string, bool>> m;
  for (const auto& p : profiles) {
    auto& row = m[p.name];
    for (const char* v : kVectors) row[v] = false;
    for (const auto& f : p.findings) {
      if (row.count(f.vector)) row[f.vector] = true;
    }
  }
  return m;
}

OrderedJson report_to_json(const CampaignReport& report) {
  OrderedJson j;
  j["schema"] = "walletdiff-report/1";
  j["rngSeed"] = report.rng_seed;
  OrderedJson config;
  config["world"] = report.config.paths.world.filename().string();
  OrderedJson names = OrderedJson::array();
  for (const auto& p : report.profiles) names.push_back(p.name);
  config["profiles"] = names;
  config["transactionCount"] = report.config.corpus.transaction_count;
  config["inputsPerField"] = report.config.corpus.inputs_per_field;
  config["mutationBudget"] = report.config.corpus.mutation_budget;
  config["simTolerance"] = report.config.sim_tolerance;
  j["config"] = config;
  j["corpus"] = stats_json(report.corpus);

  std::map<std::string, std::size_t> by_vector;
  for (const char* v : kVectors) by_vector[v] = 0;
  std::size_t total = 0;
  std::size_t unclassified = 0;
  std::size_t crashes = 0;
  OrderedJson profiles = OrderedJson::array();
  for (const auto& p : report.profiles) {
    OrderedJson pj;
    pj["name"] = p.name;
    pj["expectClean"] = p.expect_clean;
    pj["injectedVector"] = p.injected_vector.empty() ? OrderedJson(nullptr)
                                                     : OrderedJson(p.injected_vector);
    pj["submissions"] = p.submissions;
    pj["verdicts"] = p.verdicts;
    pj["violations"] = p.violations;
    OrderedJson cj = OrderedJson::array();
    for (const auto& [seed, msg] : p.crashes) {
      OrderedJson c;
      c["seed"] = seed;
      c["error"] = msg;
      cj.push_back(c);
    }
    pj["crashes"] = cj;
    OrderedJson fj = OrderedJson::array();
    for (const auto& f : p.findings) {
      fj.push_back(ordered(map_strings(verify::to_json(f), replace_invalid_utf8)));
      ++total;
      if (by_vector.count(f.vector)) {
        ++by_vector[f.vector];
      } else {
        ++unclassified;
      }
    }
    pj["findings"] = fj;
    crashes += p.crashes.size();
    profiles.push_back(pj);
  }
  j["profiles"] = profiles;

  OrderedJson matrix;
  OrderedJson vectors = OrderedJson::array();
  for (const char* v : kVectors) vectors.push_back(v);
  matrix["vectors"] = vectors;
  OrderedJson rows = OrderedJson::array();
  auto m = vulnerability_matrix(report.profiles);
  for (const auto& p : report.profiles) {
    OrderedJson row;
    row["profile"] = p.name;
    OrderedJson cells;
    for (const char* v : kVectors) cells[v] = m[p.name][v] ? "vulnerable" : "clean";
    row["cells"] = cells;
    rows.push_back(row);
  }
  matrix["rows"] = rows;
  j["matrix"] = matrix;

  OrderedJson totals;
  totals["findings"] = total;
  totals["unclassified"] = unclassified;
  totals["crashes"] = crashes;
  OrderedJson bv;
  for (const char* v : kVectors) bv[v] = by_vector[v];
  totals["byVector"] = bv;
  j["totals"] = totals;
  j["exitCode"] = exit_code(report);
  return j;
}

Json matrix_from_findings(const Json& report) {
  Json rows = Json::array();
  for (const auto& p : report.at("profiles")) {
    Json cells = Json::object();
    for (const char* v : kVectors) cells[v] = "clean";
    for (const auto& f : p.at("findings")) {
      std::string v = f.at("vector").get<std::string>();
      if (cells.contains(v)) cells[v] = "vulnerable";
    }
    rows.push_back(Json{{"profile", p.at("name")}, {"cells", cells}});
  }
  Json vectors = Json::array();
  for (const char* v : kVectors) vectors.push_back(v);
  return Json{{"vectors", vectors}, {"rows", rows}};
}

std::string render_matrix_markdown(const Json& report) {
  Json matrix = matrix_from_findings(report);
  std::ostringstream out;
  out << "# Vulnerability matrix\n\n";
  out << "rng seed " << report.value("rngSeed", 0) << ", "
      << report.at("corpus").value("total", 0) << " seeds per profile. "
      << "X marks a profile with at least one finding of that vector.\n\n";
  out << "| Profile |";
  for (const char* v : kVectors) out << " " << v << " |";
  out << " Findings |\n|---|";
  for (std::size_t i = 0; i < kVectors.size(); ++i) out << ":-:|";
  out << "--:|\n";
  for (std::size_t i = 0; i < matrix["rows"].size(); ++i) {
    const Json& row = matrix["rows"][i];
    out << "| " << row["profile"].get<std::string>() << " |";
    for (const char* v : kVectors) out << (row["cells"][v] == "vulnerable" ? " X |" : "   |");
    out << " " << report["profiles"][i]["findings"].size() << " |\n";
  }
  return out.str();
}

int exit_code(const CampaignReport& report) {
  for (const auto& p : report.profiles) {
    if (p.expect_clean && !p.findings.empty()) return 2;
  }
  return 0;
}

// ---- replay -----------------------------------------------------------------

ReplayResult replay(const Seed& seed, const std::string& profile_name, const Fixtures& fx,
                    double sim_tolerance) {
  const wallet::WalletProfile& profile = wallet::find_profile(fx.profiles, profile_name);
  wallet::MockWallet wallet(profile, fx.world, fx.catalog, fx.layout);
  ReplayResult r;
  r.submission = submit_and_verify(wallet, seed, fx, sim_tolerance);
  std::ostringstream out;
  out << "seed " << seed.id << " (" << to_string(seed.kind()) << ") on profile " << profile.name
      << "\n";
  if (seed.mutation) {
    out << "mutant of " << seed.mutation->parent << " via " << seed.mutation->strategy << " at "
        << seed.mutation->locus << "\n";
  }
  if (r.submission.crash) {
    out << "wallet crashed: " << *r.submission.crash << "\n";
    out << "classification: wallet-crashed\n";
    r.trace = out.str();
    return r;
  }
  for (std::size_t i = 0; i < r.submission.screens.size(); ++i) {
    const auto& s = r.submission.screens[i];
    out << "screen " << i + 1 << ": " << s.screen_id
        << (s.changed_from_previous ? "" : " (unchanged)") << "\n";
    for (const auto& line : verify::extract_text(s)) out << indent_text(line) << "\n";
  }
  std::size_t violations = 0;
  for (const auto& v : r.submission.verdicts) {
    violations += v.violated ? 1 : 0;
    out << "verdict " << verify::to_string(v.oracle) << "/" << v.kind << ": "
        << (v.violated ? "VIOLATED" : "ok") << "\n"
        << "    expected: " << wallet::escape_for_display(v.expectation) << "\n"
        << "    observed: " << wallet::escape_for_display(v.observed) << "\n";
  }
  out << violations << " violation(s)\n";
  std::string classes;
  for (const auto& f : r.submission.findings) classes += (classes.empty() ? "" : ", ") + f.vector;
  out << "classification: " << (classes.empty() ? "none" : classes) << "\n";
  r.trace = out.str();
  return r;
}

}  // namespace walletdiff::campaign
