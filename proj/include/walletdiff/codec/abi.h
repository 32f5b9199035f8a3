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

#ifndef WALLETDIFF_CODEC_ABI_H_
#define WALLETDIFF_CODEC_ABI_H_

#include <optional>
#include <string>
#include <vector>

#include "walletdiff/codec/catalog.h"
#include "walletdiff/common/hex.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff::codec {

// Coarse argument class used by display code and mutation heuristics.
enum class SemanticType { kAddress, kUint, kBytes, kBool, kArray };

std::string to_string(SemanticType t);

// Parsed ABI type. Supported: address, bool, uintN, bytesN, bytes, string,
// and T[] of a static scalar T.
struct AbiType {
  enum class Base { kAddress, kBool, kUint, kFixedBytes, kBytes, kString };
  Base base = Base::kUint;
  unsigned bits = 256;  // uintN width, or bytesN size * 8
  bool is_array = false;

  static AbiType parse(std::string_view text);  // throws Error("bad-type")
  bool is_dynamic() const {
    return is_array || base == Base::kBytes || base == Base::kString;
  }
  bool is_uint() const { return !is_array && base == Base::kUint; }
  SemanticType semantic() const;
};

struct AbiArg {
  std::string name;
  std::string type;  // canonical ABI type text
  SemanticType semantic = SemanticType::kUint;
  U256 word = 0;                // static scalar value
  Bytes data;                   // bytes/string payload
  std::vector<U256> items;      // array elements

  // Display form: addresses canonical, integers decimal, bytes 0x-hex,
  // arrays "[a, b]".
  std::string display() const;
  Address address() const;  // word interpreted as an address
};

struct DecodedCall {
  Selector selector{};
  const FunctionEntry* function = nullptr;  // null when the selector is unknown
  std::vector<AbiArg> args;                 // raw 32-byte words when unknown

  std::string function_name() const {
    return function ? function->name : std::string("unknown");
  }
  bool known() const { return function != nullptr; }
};

// Throws Error("no-selector") for fewer than 4 bytes and
// Error("decode-error") when a known function's arguments are malformed.
DecodedCall decode_call(const Bytes& calldata, const SignatureCatalog& catalog);

// Arguments as JSON: strings for addresses, decimal or 0x-hex strings or
// numbers for integers, booleans, 0x-hex for bytes, arrays for T[].
// Throws Error("encode-error") on type mismatch.
Bytes encode_call(const FunctionEntry& fn, const Json& args);
Bytes encode_args(const std::vector<std::string>& types, const Json& args);

// True when every parameter of the function is a static type.
bool all_static(const FunctionEntry& fn);

}  // namespace walletdiff::codec

#endif  // WALLETDIFF_CODEC_ABI_H_
