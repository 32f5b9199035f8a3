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

#include "walletdiff/codec/catalog.h"

#include <algorithm>

#include "walletdiff/common/error.h"
#include "walletdiff/common/hex.h"
#include "walletdiff/common/keccak.h"

namespace walletdiff::codec {

// Defined in the generated builtin_catalog.cc.
extern const char* const kBuiltinCatalogJson;

namespace {

FunctionFamily parse_family(const std::string& s) {
  if (s == "approval") return FunctionFamily::kApproval;
  if (s == "nftListing") return FunctionFamily::kNftListing;
  if (s == "deceptive") return FunctionFamily::kDeceptiveName;
  if (s == "plain") return FunctionFamily::kPlain;
  throw Error("bad-catalog", "unknown family '" + s + "'");
}

bool contains_ci(const std::vector<std::string>& lowered, std::string_view name) {
  std::string key = to_lower(name);
  return std::find(lowered.begin(), lowered.end(), key) != lowered.end();
}

}  // namespace

std::string to_string(FunctionFamily f) {
  switch (f) {
    case FunctionFamily::kApproval: return "approvalFamily";
    case FunctionFamily::kNftListing: return "nftListingFamily";
    case FunctionFamily::kDeceptiveName: return "deceptiveNameFamily";
    case FunctionFamily::kPlain: return "plain";
  }
  return "plain";
}

std::string to_string(ApprovalKind k) {
  switch (k) {
    case ApprovalKind::kApprove: return "approve";
    case ApprovalKind::kIncreaseAllowance: return "increaseAllowance";
    case ApprovalKind::kSetApprovalForAll: return "setApprovalForAll";
    case ApprovalKind::kPermit: return "permit";
    case ApprovalKind::kPermit2Single: return "permit2Single";
    case ApprovalKind::kPermit2Batch: return "permit2Batch";
    case ApprovalKind::kPermitForAll: return "permitForAll";
  }
  return "approve";
}

std::optional<ApprovalKind> parse_approval_kind(std::string_view text) {
  for (ApprovalKind k :
       {ApprovalKind::kApprove, ApprovalKind::kIncreaseAllowance,
        ApprovalKind::kSetApprovalForAll, ApprovalKind::kPermit,
        ApprovalKind::kPermit2Single, ApprovalKind::kPermit2Batch,
        ApprovalKind::kPermitForAll}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::uint32_t selector_key(const Selector& sel) {
  return (std::uint32_t{sel[0]} << 24) | (std::uint32_t{sel[1]} << 16) |
         (std::uint32_t{sel[2]} << 8) | std::uint32_t{sel[3]};
}

std::pair<std::string, std::vector<std::string>> split_signature(
    std::string_view signature) {
  std::size_t open = signature.find('(');
  if (open == std::string_view::npos || open == 0 || signature.back() != ')') {
    throw Error("bad-catalog", "malformed signature '" + std::string(signature) + "'");
  }
  std::string name(signature.substr(0, open));
  std::string_view inner = signature.substr(open + 1, signature.size() - open - 2);
  std::vector<std::string> types;
  if (inner.find_first_of("() ") != std::string_view::npos) {
    throw Error("bad-catalog", "tuple or spaced types unsupported in '" +
                                   std::string(signature) + "'");
  }
  while (!inner.empty()) {
    std::size_t comma = inner.find(',');
    std::string_view t = inner.substr(0, comma);
    if (t.empty()) throw Error("bad-catalog", "empty parameter type");
    types.emplace_back(t);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
    if (inner.empty()) throw Error("bad-catalog", "trailing comma");
  }
  return {name, types};
}

SignatureCatalog SignatureCatalog::from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != "functions/1") {
    throw Error("bad-catalog", "expected schema functions/1");
  }
  SignatureCatalog cat;
  cat.version_ = doc.value("version", "");
  for (const auto& n : doc.value("deceptiveNames", Json::array())) {
    cat.deceptive_names_.push_back(to_lower(n.get<std::string>()));
  }
  for (const auto& n : doc.value("nftListingNames", Json::array())) {
    cat.listing_names_.push_back(to_lower(n.get<std::string>()));
  }
  for (const auto& f : require(doc, "functions", "bad-catalog")) {
    FunctionEntry e;
    e.signature = require_string(f, "signature", "bad-catalog");
    auto [name, types] = split_signature(e.signature);
    e.name = name;
    e.param_types = types;
    e.param_names = f.value("params", std::vector<std::string>{});
    if (e.param_names.size() != e.param_types.size()) {
      e.param_names.clear();
      for (std::size_t i = 0; i < e.param_types.size(); ++i) {
        e.param_names.push_back("arg" + std::to_string(i));
      }
    }
    e.family = parse_family(f.value("family", "plain"));
    if (f.contains("approval")) {
      const Json& a = f["approval"];
      auto kind = parse_approval_kind(require_string(a, "kind", "bad-catalog"));
      if (!kind) throw Error("bad-catalog", "unknown approval kind");
      ApprovalSpec spec;
      spec.kind = *kind;
      spec.spender_arg = a.value("spender", -1);
      spec.amount_arg = a.value("amount", -1);
      spec.flag_arg = a.value("flag", -1);
      int n = static_cast<int>(e.param_types.size());
      if (spec.spender_arg < 0 || spec.spender_arg >= n || spec.amount_arg >= n ||
          spec.flag_arg >= n) {
        throw Error("bad-catalog", "approval argument index out of range in " + e.signature);
      }
      e.approval = spec;
    }
    e.selector = function_selector(e.signature);
    std::uint32_t key = selector_key(e.selector);
    if (cat.by_selector_.count(key) != 0) {
      throw Error("bad-catalog", "duplicate selector for " + e.signature);
    }
    cat.by_selector_[key] = cat.entries_.size();
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

SignatureCatalog SignatureCatalog::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const SignatureCatalog& SignatureCatalog::builtin() {
  static const SignatureCatalog kCatalog = from_json(Json::parse(kBuiltinCatalogJson));
  return kCatalog;
}

const FunctionEntry* SignatureCatalog::by_selector(const Selector& sel) const {
  auto it = by_selector_.find(selector_key(sel));
  return it == by_selector_.end() ? nullptr : &entries_[it->second];
}

const FunctionEntry* SignatureCatalog::by_signature(std::string_view signature) const {
  for (const auto& e : entries_) {
    if (e.signature == signature) return &e;
  }
  return nullptr;
}

const FunctionEntry* SignatureCatalog::by_name(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool SignatureCatalog::is_deceptive_name(std::string_view name) const {
  return contains_ci(deceptive_names_, name);
}

bool SignatureCatalog::is_listing_name(std::string_view name) const {
  return contains_ci(listing_names_, name);
}

}  // namespace walletdiff::codec
