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

#ifndef WALLETDIFF_TESTS_TEST_SUPPORT_H_
#define WALLETDIFF_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "walletdiff/campaign/campaign.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/common/rng.h"
#include "walletdiff/mutator/mutator.h"

namespace walletdiff::testing {

inline std::filesystem::path data_dir() { return WALLETDIFF_TEST_DATA_DIR; }

// Bundled fixtures, loaded once per test binary.
inline const campaign::Fixtures& fixtures() {
  static const campaign::Fixtures fx =
      campaign::load_fixtures(campaign::DataPaths::from_dir(data_dir()));
  return fx;
}

inline Seed load_seed(const std::string& file) {
  return seed_from_json(read_json_file(data_dir() / "seeds" / file));
}

// Fresh directory under the system temp dir, removed first if present.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("walletdiff-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Parent seeds of the bundled corpus (no mutants).
inline std::vector<Seed> corpus_parents() {
  campaign::CorpusOptions options;
  options.mutation_budget = 0;
  return campaign::build_corpus(fixtures(), options).seeds;
}

struct MutantSample {
  std::vector<Seed> parents;
  std::vector<std::pair<std::size_t, Seed>> mutants;  // (parent index, mutant)
};

// Every content and format mutant of every parent under several generator
// seeds, until at least `minimum` mutants exist.
inline MutantSample sample_mutants(std::size_t minimum) {
  MutantSample out;
  out.parents = corpus_parents();
  mutate::Mutator mutator(fixtures().catalog, {64, fixtures().scams.attackers});
  for (std::uint64_t round = 1; out.mutants.size() < minimum && round < 64; ++round) {
    for (std::size_t i = 0; i < out.parents.size(); ++i) {
      Rng rng = Rng::derive(round, out.parents[i].id);
      for (auto& m : mutator.mutate_content(out.parents[i], rng)) out.mutants.emplace_back(i, m);
      for (auto& m : mutator.mutate_format(out.parents[i], rng)) out.mutants.emplace_back(i, m);
    }
  }
  return out;
}

}  // namespace walletdiff::testing

#endif  // WALLETDIFF_TESTS_TEST_SUPPORT_H_
