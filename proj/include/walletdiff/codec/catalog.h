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

#ifndef WALLETDIFF_CODEC_CATALOG_H_
#define WALLETDIFF_CODEC_CATALOG_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walletdiff/common/json_util.h"

namespace walletdiff::codec {

using Selector = std::array<std::uint8_t, 4>;

enum class FunctionFamily { kApproval, kNftListing, kDeceptiveName, kPlain };

enum class ApprovalKind {
  kApprove,
  kIncreaseAllowance,
  kSetApprovalForAll,
  kPermit,
  kPermit2Single,
  kPermit2Batch,
  kPermitForAll,
};

std::string to_string(FunctionFamily f);
std::string to_string(ApprovalKind k);
std::optional<ApprovalKind> parse_approval_kind(std::string_view text);

// Where the approval-relevant arguments sit in the call.
struct ApprovalSpec {
  ApprovalKind kind = ApprovalKind::kApprove;
  int spender_arg = -1;
  int amount_arg = -1;  // uint or uint[]; -1 when the grant is all-or-nothing
  int flag_arg = -1;    // bool "approved" argument for operator-style grants
};

struct FunctionEntry {
  std::string name;
  std::string signature;  // canonical, e.g. "approve(address,uint256)"
  std::vector<std::string> param_types;
  std::vector<std::string> param_names;
  FunctionFamily family = FunctionFamily::kPlain;
  std::optional<ApprovalSpec> approval;
  Selector selector{};
};

// Versioned function-signature database. Families for unknown selectors are
// still resolvable by name through the deceptive/listing name lists.
class SignatureCatalog {
 public:
  // The catalog bundled at build time (data/catalog/functions.json).
  static const SignatureCatalog& builtin();
  static SignatureCatalog load(const std::filesystem::path& path);
  static SignatureCatalog from_json(const Json& doc);

  const FunctionEntry* by_selector(const Selector& sel) const;
  const FunctionEntry* by_signature(std::string_view signature) const;
  // First entry with that name in catalog order.
  const FunctionEntry* by_name(std::string_view name) const;

  // Case-insensitive membership in the name lists.
  bool is_deceptive_name(std::string_view name) const;
  bool is_listing_name(std::string_view name) const;

  const std::vector<FunctionEntry>& entries() const { return entries_; }
  const std::string& version() const { return version_; }

 private:
  std::string version_;
  std::vector<FunctionEntry> entries_;
  std::map<std::uint32_t, std::size_t> by_selector_;
  std::vector<std::string> deceptive_names_;  // lowercased
  std::vector<std::string> listing_names_;    // lowercased
};

// Splits "f(a,b[])" into name and top-level parameter types. Throws
// Error("bad-catalog") on malformed signatures or tuple types.
std::pair<std::string, std::vector<std::string>> split_signature(
    std::string_view signature);

std::uint32_t selector_key(const Selector& sel);

}  // namespace walletdiff::codec

#endif  // WALLETDIFF_CODEC_CATALOG_H_
