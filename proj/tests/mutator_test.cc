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

#include <map>
#include <set>

#include "test_support.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"
#include "walletdiff/mutator/mutator.h"

namespace walletdiff::mutate {
namespace {

using testing::fixtures;

TEST(FieldSemantics, ClassifiesByNameAndValue) {
  EXPECT_EQ(infer_field_semantics("to", "0xbf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c"),
            FieldSemantic::kAddress);
  EXPECT_EQ(infer_field_semantics("word",
                                  "000000000000000000000000bf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c"),
            FieldSemantic::kAddress);
  EXPECT_EQ(infer_field_semantics("amount", "1000"), FieldSemantic::kAmount);
  EXPECT_EQ(infer_field_semantics("value", "0x3e8"), FieldSemantic::kAmount);
  EXPECT_EQ(infer_field_semantics("signature", "0x3e8f"), FieldSemantic::kBytes);
  EXPECT_EQ(infer_field_semantics("contents", "Hello, Bob!"), FieldSemantic::kText);
  EXPECT_EQ(infer_field_semantics("contents", ""), FieldSemantic::kUnknown);
}

TEST(Strategies, NamesRoundTrip) {
  for (int i = 0; i <= static_cast<int>(Strategy::kPathReorder); ++i) {
    auto s = static_cast<Strategy>(i);
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  try {
    parse_strategy("shuffle");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-strategy");
  }
  EXPECT_TRUE(is_format_strategy(Strategy::kPrefixStrip));
  EXPECT_FALSE(is_format_strategy(Strategy::kCharEdit));
  EXPECT_EQ(huge_amount(), pow2(255));
}

// Format mutants flagged preserving keep the canonical payload; content
// mutants are never flagged preserving.
TEST(MutationProperty, PreservingFlagMatchesCanonicalEquality) {
  testing::MutantSample sample = testing::sample_mutants(1000);
  ASSERT_GE(sample.mutants.size(), 1000u);
  std::size_t preserving = 0;
  std::size_t content = 0;
  for (const auto& [pi, m] : sample.mutants) {
    const Seed& parent = sample.parents[pi];
    ASSERT_TRUE(m.mutation);
    Strategy s = parse_strategy(m.mutation->strategy);
    EXPECT_EQ(m.mutation->parent, parent.id);
    if (!is_format_strategy(s)) {
      ++content;
      EXPECT_FALSE(m.mutation->semantics_preserving) << m.mutation->strategy;
    }
    if (m.mutation->semantics_preserving) {
      ++preserving;
      EXPECT_TRUE(is_format_strategy(s));
      EXPECT_EQ(canonical_payload(m, fixtures().catalog), canonical_payload(parent, fixtures().catalog))
          << m.mutation->strategy << " at " << m.mutation->locus;
    }
  }
  EXPECT_GT(preserving, 0u);
  EXPECT_GT(content, 0u);
}

TEST(MutationProperty, MutantsDifferFromParent) {
  auto body = [](const Seed& s) { return to_json(s).at(to_string(s.kind())); };
  testing::MutantSample sample = testing::sample_mutants(1);
  for (const auto& [pi, m] : sample.mutants) {
    EXPECT_NE(body(m), body(sample.parents[pi]))
        << m.mutation->strategy << " at " << m.mutation->locus;
  }
}

TEST(MutationProperty, EveryStrategyIsExercised) {
  testing::MutantSample sample = testing::sample_mutants(1);
  std::set<std::string> used;
  for (const auto& [pi, m] : sample.mutants) used.insert(m.mutation->strategy);
  for (int i = 0; i <= static_cast<int>(Strategy::kPathReorder); ++i) {
    EXPECT_TRUE(used.count(to_string(static_cast<Strategy>(i)))) << to_string(static_cast<Strategy>(i));
  }
}

TEST(Mutator, SameSeedSameMutants) {
  Mutator mutator(fixtures().catalog, {16, fixtures().scams.attackers});
  for (const auto& parent : testing::corpus_parents()) {
    Rng a = Rng::derive(3, parent.id);
    Rng b = Rng::derive(3, parent.id);
    auto x = mutator.mutate(parent, a);
    auto y = mutator.mutate(parent, b);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(to_json(x[i]), to_json(y[i]));
  }
}

TEST(Mutator, BudgetCapsAndSpreadsAcrossStrategies) {
  Mutator small(fixtures().catalog, {3, fixtures().scams.attackers});
  Mutator large(fixtures().catalog, {1000, fixtures().scams.attackers});
  for (const auto& parent : testing::corpus_parents()) {
    Rng r1 = Rng::derive(1, parent.id);
    Rng r2 = Rng::derive(1, parent.id);
    auto capped = small.mutate(parent, r1);
    auto all = large.mutate(parent, r2);
    EXPECT_LE(capped.size(), 3u);
    std::set<std::string> strategies;
    for (const auto& m : all) strategies.insert(m.mutation->strategy);
    std::set<std::string> capped_strategies;
    for (const auto& m : capped) capped_strategies.insert(m.mutation->strategy);
    EXPECT_EQ(capped_strategies.size(), std::min<std::size_t>(3, strategies.size())) << parent.id;
  }
}

TEST(Mutator, PersonalSignNibbleDeletionBreaksDecoding) {
  const Seed* parent = nullptr;
  for (const auto& m : fixtures().messages) {
    if (m.msg().format == codec::MessageFormat::kEip191 &&
        m.msg().method == codec::SigningMethod::kPersonalSign) {
      parent = &m;
    }
  }
  ASSERT_NE(parent, nullptr);
  Mutator mutator(fixtures().catalog, {64, fixtures().scams.attackers});
  Rng rng(1);
  bool found = false;
  for (const auto& m : mutator.mutate_content(*parent, rng)) {
    if (m.mutation->strategy != "charEdit") continue;
    const auto& p = std::get<codec::PersonalSignPayload>(m.msg().payload);
    auto decoded = codec::decode_personal_sign(p);
    if (!decoded.ok && decoded.failure == "odd-length") found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Mutator, ValueMutantsOnTransactions) {
  Mutator mutator(fixtures().catalog, {64, fixtures().scams.attackers});
  for (const auto& parent : testing::corpus_parents()) {
    if (parent.kind() != SeedKind::kTransaction || parent.tx().value == 0) continue;
    Rng rng(1);
    std::map<std::string, U256> values;
    for (const auto& m : mutator.mutate_content(parent, rng)) {
      if (m.mutation->locus == "value") values[m.mutation->strategy] = m.tx().value;
    }
    EXPECT_EQ(values.at("valueZero"), U256(0));
    EXPECT_EQ(values.at("valueHuge"), huge_amount());
    return;
  }
  FAIL() << "no transaction with value";
}

TEST(Mutator, AddressReplacementUsesAttackers) {
  const auto& attackers = fixtures().scams.attackers;
  Mutator mutator(fixtures().catalog, {64, attackers});
  std::set<std::string> allowed;
  for (const auto& a : attackers) allowed.insert(a.str());
  std::size_t checked = 0;
  for (const auto& parent : testing::corpus_parents()) {
    if (parent.kind() != SeedKind::kTransaction) continue;
    Rng rng(2);
    for (const auto& m : mutator.mutate_content(parent, rng)) {
      if (m.mutation->strategy == "addressReplace" && m.mutation->locus == "to") {
        EXPECT_TRUE(allowed.count(m.tx().to.str()));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace walletdiff::mutate
