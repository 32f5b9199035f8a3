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

#ifndef WALLETDIFF_CODEC_INPUTDATA_H_
#define WALLETDIFF_CODEC_INPUTDATA_H_

#include <optional>
#include <string>
#include <string_view>

#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/common/types.h"

namespace walletdiff::codec {

// Canonicalises submitted calldata text to "0x" + lowercase hex.
//
// Contiguous input may omit the 0x prefix and mix case. Input split by commas
// or whitespace is read as a selector token followed by one token per 32-byte
// word: 64 hex digits, 0x-hex (left-padded), or an all-digit decimal integer.
// Decimal tokens are only accepted in uint slots of known functions whose
// parameters are all static, since only there is the word layout fixed. An
// all-digit token of exactly 64 characters is read as hex.
//
// Empty input (or a bare "0x") yields "0x". Throws Error("unnormalizable").
std::string normalize_inputdata(std::string_view raw, const SignatureCatalog& catalog);
Bytes normalize_inputdata_bytes(std::string_view raw, const SignatureCatalog& catalog);

// True when `raw` is already in canonical form.
bool is_canonical_inputdata(std::string_view raw);

FunctionFamily classify_function(const DecodedCall& call, const SignatureCatalog& catalog);
// Name-only variant for calls whose selector is unknown but named elsewhere.
FunctionFamily classify_function_name(std::string_view name, const SignatureCatalog& catalog);

struct ApprovalSemantics {
  ApprovalKind kind = ApprovalKind::kApprove;
  Address spender;
  std::optional<U256> amount;  // nullopt means "all"
  bool unlimited = false;
  bool granted = true;  // false for an operator revocation (approved=false)
};

// Amounts of at least 2^255, or exactly 2^n-1 for n >= 128.
bool is_unlimited_amount(const U256& amount);

// Defined for the seven approval kinds, nullopt for every other call.
std::optional<ApprovalSemantics> approval_semantics(const DecodedCall& call);

}  // namespace walletdiff::codec

#endif  // WALLETDIFF_CODEC_INPUTDATA_H_
