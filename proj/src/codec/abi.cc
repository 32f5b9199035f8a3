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

#include "walletdiff/codec/abi.h"

#include <algorithm>

#include "walletdiff/common/error.h"

namespace walletdiff::codec {

namespace {

constexpr std::size_t kWord = 32;

U256 read_word(const Bytes& data, std::size_t offset) {
  if (offset + kWord > data.size()) {
    throw Error("decode-error", "word at " + std::to_string(offset) + " past end");
  }
  return word_to_u256(data.data() + offset);
}

std::size_t to_size(const U256& v, std::size_t limit) {
  if (v > limit) throw Error("decode-error", "offset or length out of range");
  return static_cast<std::size_t>(v);
}

void check_scalar(const AbiType& t, const U256& w) {
  switch (t.base) {
    case AbiType::Base::kAddress:
      if (w >> 160 != 0) throw Error("decode-error", "dirty address word");
      break;
    case AbiType::Base::kBool:
      if (w > 1) throw Error("decode-error", "bool word not 0 or 1");
      break;
    case AbiType::Base::kUint:
      if (t.bits < 256 && (w >> t.bits) != 0) {
        throw Error("decode-error", "uint" + std::to_string(t.bits) + " overflow");
      }
      break;
    case AbiType::Base::kFixedBytes:
      if (t.bits < 256 && (w & (pow2(256 - t.bits) - 1)) != 0) {
        throw Error("decode-error", "dirty bytesN padding");
      }
      break;
    default:
      break;
  }
}

std::optional<unsigned> small_number(std::string_view s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  unsigned n = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<unsigned>(c - '0');
  }
  return n;
}

void append_word(Bytes& out, const U256& v) {
  auto w = u256_to_word(v);
  out.insert(out.end(), w.begin(), w.end());
}

void append_padded(Bytes& out, const Bytes& data) {
  append_word(out, data.size());
  out.insert(out.end(), data.begin(), data.end());
  std::size_t pad = (kWord - data.size() % kWord) % kWord;
  out.insert(out.end(), pad, 0);
}

U256 scalar_from_json(const AbiType& t, const Json& v) {
  switch (t.base) {
    case AbiType::Base::kAddress: {
      if (!v.is_string()) throw Error("encode-error", "address must be a string");
      return Address::from_string(v.get<std::string>()).as_u256();
    }
    case AbiType::Base::kBool:
      if (!v.is_boolean()) throw Error("encode-error", "bool must be true/false");
      return v.get<bool>() ? 1 : 0;
    case AbiType::Base::kUint: {
      std::optional<U256> n;
      if (v.is_number_unsigned()) {
        n = U256(v.get<std::uint64_t>());
      } else if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        n = U256(v.get<std::int64_t>());
      }
      if (v.is_string()) n = parse_u256(v.get<std::string>());
      if (!n) throw Error("encode-error", "bad integer " + v.dump());
      if (t.bits < 256 && (*n >> t.bits) != 0) throw Error("encode-error", "uint overflow");
      return *n;
    }
    case AbiType::Base::kFixedBytes: {
      auto b = v.is_string() ? parse_hex(v.get<std::string>()) : std::nullopt;
      if (!b || b->size() != t.bits / 8) throw Error("encode-error", "bad bytesN " + v.dump());
      b->resize(kWord, 0);
      return word_to_u256(b->data());
    }
    default:
      throw Error("encode-error", "not a scalar type");
  }
}

}  // namespace

std::string to_string(SemanticType t) {
  switch (t) {
    case SemanticType::kAddress: return "address";
    case SemanticType::kUint: return "uint";
    case SemanticType::kBytes: return "bytes";
    case SemanticType::kBool: return "bool";
    case SemanticType::kArray: return "array";
  }
  return "bytes";
}

AbiType AbiType::parse(std::string_view text) {
  AbiType t;
  if (text.size() > 2 && text.substr(text.size() - 2) == "[]") {
    t.is_array = true;
    text.remove_suffix(2);
  }
  auto bad = [&] { return Error("bad-type", "unsupported ABI type '" + std::string(text) + "'"); };
  if (text == "address") {
    t.base = Base::kAddress;
    t.bits = 160;
  } else if (text == "bool") {
    t.base = Base::kBool;
    t.bits = 8;
  } else if (text == "string") {
    t.base = Base::kString;
  } else if (text == "bytes") {
    t.base = Base::kBytes;
  } else if (text.rfind("uint", 0) == 0) {
    t.base = Base::kUint;
    std::string_view n = text.substr(4);
    auto bits = n.empty() ? std::optional<unsigned>(256) : small_number(n);
    if (!bits || *bits == 0 || *bits > 256 || *bits % 8 != 0) throw bad();
    t.bits = *bits;
  } else if (text.rfind("bytes", 0) == 0) {
    t.base = Base::kFixedBytes;
    auto n = small_number(text.substr(5));
    if (!n || *n == 0 || *n > 32) throw bad();
    t.bits = *n * 8;
  } else {
    throw bad();
  }
  if (t.is_array && (t.base == Base::kBytes || t.base == Base::kString)) throw bad();
  return t;
}

SemanticType AbiType::semantic() const {
  if (is_array) return SemanticType::kArray;
  switch (base) {
    case Base::kAddress: return SemanticType::kAddress;
    case Base::kBool: return SemanticType::kBool;
    case Base::kUint: return SemanticType::kUint;
    default: return SemanticType::kBytes;
  }
}

std::string AbiArg::display() const {
  AbiType t = AbiType::parse(type);
  auto scalar = [&](const U256& w) -> std::string {
    switch (t.base) {
      case AbiType::Base::kAddress: {
        auto bytes = u256_to_word(w);
        return Address::from_word(bytes.data()).str();
      }
      case AbiType::Base::kBool: return w != 0 ? "true" : "false";
      case AbiType::Base::kUint: return u256_dec(w);
      case AbiType::Base::kFixedBytes: {
        auto bytes = u256_to_word(w);
        return to_hex(std::span(bytes.data(), t.bits / 8));
      }
      default: return "";
    }
  };
  if (t.is_array) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += scalar(items[i]);
    }
    return out + "]";
  }
  if (t.base == AbiType::Base::kBytes) return to_hex(data);
  if (t.base == AbiType::Base::kString) return std::string(data.begin(), data.end());
  return scalar(word);
}

Address AbiArg::address() const {
  auto bytes = u256_to_word(word);
  return Address::from_word(bytes.data());
}

bool all_static(const FunctionEntry& fn) {
  return std::none_of(fn.param_types.begin(), fn.param_types.end(),
                      [](const std::string& t) { return AbiType::parse(t).is_dynamic(); });
}

DecodedCall decode_call(const Bytes& calldata, const SignatureCatalog& catalog) {
  if (calldata.size() < 4) throw Error("no-selector", "calldata shorter than 4 bytes");
  DecodedCall call;
  std::copy_n(calldata.begin(), 4, call.selector.begin());
  Bytes body(calldata.begin() + 4, calldata.end());
  call.function = catalog.by_selector(call.selector);

  if (!call.known()) {
    for (std::size_t off = 0; off + kWord <= body.size(); off += kWord) {
      AbiArg a;
      a.name = "word" + std::to_string(off / kWord);
      a.type = "bytes32";
      a.semantic = SemanticType::kBytes;
      a.word = read_word(body, off);
      call.args.push_back(std::move(a));
    }
    return call;
  }

  const FunctionEntry& fn = *call.function;
  for (std::size_t i = 0; i < fn.param_types.size(); ++i) {
    AbiType t = AbiType::parse(fn.param_types[i]);
    AbiArg a;
    a.name = fn.param_names[i];
    a.type = fn.param_types[i];
    a.semantic = t.semantic();
    U256 head = read_word(body, i * kWord);
    if (!t.is_dynamic()) {
      check_scalar(t, head);
      a.word = head;
    } else {
      std::size_t offset = to_size(head, body.size());
      std::size_t len = to_size(read_word(body, offset), body.size());
      std::size_t start = offset + kWord;
      if (t.is_array) {
        if (len > (body.size() - start) / kWord) throw Error("decode-error", "array past end");
        AbiType elem = t;
        elem.is_array = false;
        for (std::size_t k = 0; k < len; ++k) {
          U256 w = read_word(body, start + k * kWord);
          check_scalar(elem, w);
          a.items.push_back(w);
        }
      } else {
        if (len > body.size() - start) throw Error("decode-error", "bytes past end");
        a.data.assign(body.begin() + start, body.begin() + start + len);
      }
    }
    call.args.push_back(std::move(a));
  }
  return call;
}

Bytes encode_args(const std::vector<std::string>& types, const Json& args) {
  if (!args.is_array() || args.size() != types.size()) {
    throw Error("encode-error", "expected " + std::to_string(types.size()) + " arguments");
  }
  Bytes head;
  Bytes tail;
  const std::size_t head_size = types.size() * kWord;
  for (std::size_t i = 0; i < types.size(); ++i) {
    AbiType t = AbiType::parse(types[i]);
    const Json& v = args[i];
    if (!t.is_dynamic()) {
      append_word(head, scalar_from_json(t, v));
      continue;
    }
    append_word(head, head_size + tail.size());
    if (t.is_array) {
      if (!v.is_array()) throw Error("encode-error", "expected array for " + types[i]);
      AbiType elem = t;
      elem.is_array = false;
      append_word(tail, v.size());
      for (const auto& item : v) append_word(tail, scalar_from_json(elem, item));
    } else if (t.base == AbiType::Base::kBytes) {
      auto b = v.is_string() ? parse_hex(v.get<std::string>()) : std::nullopt;
      if (!b) throw Error("encode-error", "bad bytes " + v.dump());
      append_padded(tail, *b);
    } else {
      if (!v.is_string()) throw Error("encode-error", "string expected");
      std::string s = v.get<std::string>();
      append_padded(tail, Bytes(s.begin(), s.end()));
    }
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

Bytes encode_call(const FunctionEntry& fn, const Json& args) {
  Bytes out(fn.selector.begin(), fn.selector.end());
  Bytes body = encode_args(fn.param_types, args);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

}  // namespace walletdiff::codec
