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

#include "walletdiff/codec/inputdata.h"

#include <algorithm>
#include <vector>

#include "walletdiff/common/error.h"

namespace walletdiff::codec {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::vector<std::string_view> split_tokens(std::string_view raw) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && is_separator(raw[i])) ++i;
    std::size_t start = i;
    while (i < raw.size() && !is_separator(raw[i])) ++i;
    if (i > start) out.push_back(raw.substr(start, i - start));
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void fail(const std::string& why) { throw Error("unnormalizable", why); }

Bytes contiguous(std::string_view raw) {
  auto bytes = parse_hex(raw);
  if (!bytes) fail("not hex: '" + std::string(raw.substr(0, 80)) + "'");
  return *bytes;
}

Bytes tokenized(const std::vector<std::string_view>& tokens, const SignatureCatalog& catalog) {
  std::string_view sel_text = strip_hex_prefix(tokens[0]);
  auto sel_bytes = parse_hex(sel_text);
  if (sel_text.size() != 8 || !sel_bytes) fail("first token is not a 4-byte selector");
  Selector sel{};
  std::copy(sel_bytes->begin(), sel_bytes->end(), sel.begin());

  const FunctionEntry* fn = catalog.by_selector(sel);
  bool decimal_ok = fn != nullptr && all_static(*fn);

  Bytes out(sel.begin(), sel.end());
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::string_view tok = tokens[i];
    std::optional<U256> word;
    if (!has_hex_prefix(tok) && tok.size() == 64) {
      word = parse_u256_hex(tok);
    } else if (has_hex_prefix(tok)) {
      if (tok.size() > 66) fail("hex token wider than one word");
      word = parse_u256_hex(tok);
    } else if (all_digits(tok)) {
      std::size_t slot = i - 1;
      if (!decimal_ok || slot >= fn->param_types.size()) {
        fail("decimal token outside a known numeric slot");
      }
      AbiType t = AbiType::parse(fn->param_types[slot]);
      if (!t.is_uint()) fail("decimal token in non-numeric slot " + std::to_string(slot));
      word = parse_u256_dec(tok);
      if (word && t.bits < 256 && (*word >> t.bits) != 0) word.reset();
    }
    if (!word) fail("bad word token '" + std::string(tok) + "'");
    auto w = u256_to_word(*word);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace

Bytes normalize_inputdata_bytes(std::string_view raw, const SignatureCatalog& catalog) {
  bool has_sep = std::any_of(raw.begin(), raw.end(), is_separator);
  if (!has_sep) return contiguous(raw);
  auto tokens = split_tokens(raw);
  if (tokens.empty()) return {};
  if (tokens.size() == 1) return contiguous(tokens[0]);
  return tokenized(tokens, catalog);
}

std::string normalize_inputdata(std::string_view raw, const SignatureCatalog& catalog) {
  return to_hex(normalize_inputdata_bytes(raw, catalog));
}

bool is_canonical_inputdata(std::string_view raw) {
  if (raw.size() < 2 || raw[0] != '0' || raw[1] != 'x' || raw.size() % 2 != 0) return false;
  return std::all_of(raw.begin() + 2, raw.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

FunctionFamily classify_function_name(std::string_view name, const SignatureCatalog& catalog) {
  if (const FunctionEntry* e = catalog.by_name(name)) {
    if (e->family != FunctionFamily::kPlain) return e->family;
  }
  if (catalog.is_deceptive_name(name)) return FunctionFamily::kDeceptiveName;
  if (catalog.is_listing_name(name)) return FunctionFamily::kNftListing;
  return FunctionFamily::kPlain;
}

FunctionFamily classify_function(const DecodedCall& call, const SignatureCatalog& catalog) {
  if (!call.known()) return FunctionFamily::kPlain;
  if (call.function->family != FunctionFamily::kPlain) return call.function->family;
  return classify_function_name(call.function->name, catalog);
}

bool is_unlimited_amount(const U256& amount) {
  if (amount >= pow2(255)) return true;
  // 2^n - 1: all ones below the top bit.
  if (amount == 0 || ((amount + 1) & amount) != 0) return false;
  return boost::multiprecision::msb(amount) + 1 >= 128;
}

std::optional<ApprovalSemantics> approval_semantics(const DecodedCall& call) {
  if (!call.known() || !call.function->approval) return std::nullopt;
  const ApprovalSpec& spec = *call.function->approval;
  ApprovalSemantics s;
  s.kind = spec.kind;
  s.spender = call.args[spec.spender_arg].address();
  if (spec.flag_arg >= 0) {
    s.granted = call.args[spec.flag_arg].word != 0;
  }
  if (spec.amount_arg < 0) {
    s.amount.reset();
    s.unlimited = true;
    return s;
  }
  const AbiArg& amt = call.args[spec.amount_arg];
  if (amt.semantic == SemanticType::kArray) {
    U256 top = 0;
    bool any_unlimited = false;
    for (const U256& v : amt.items) {
      top = std::max(top, v);
      any_unlimited = any_unlimited || is_unlimited_amount(v);
    }
    s.amount = top;
    s.unlimited = any_unlimited;
  } else {
    s.amount = amt.word;
    s.unlimited = is_unlimited_amount(amt.word);
  }
  return s;
}

}  // namespace walletdiff::codec
