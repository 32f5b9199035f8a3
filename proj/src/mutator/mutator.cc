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

#include "walletdiff/mutator/mutator.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/inputdata.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"

namespace walletdiff::mutate {

namespace {

constexpr std::array<Strategy, 11> kAllStrategies{
    Strategy::kValueZero,   Strategy::kValueHuge,    Strategy::kAddressReplace,
    Strategy::kCharEdit,    Strategy::kIllegalEncoding, Strategy::kBitFlip,
    Strategy::kArithmetic,  Strategy::kHexToDecimal, Strategy::kParamSwap,
    Strategy::kPrefixStrip, Strategy::kPathReorder};

constexpr std::string_view kHexDigits = "0123456789abcdef";
constexpr std::string_view kTextChars =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
// UTF-8 encoding of the lone surrogate U+D800, which is not valid UTF-8.
constexpr std::string_view kSurrogateBytes = "\xed\xa0\x80";
// Placeholder swapped for a "\ud800" escape after JSON serialisation.
constexpr std::string_view kSurrogateMark = "@@walletdiff-surrogate@@";

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_hex_text(std::string_view s) {
  s = strip_hex_prefix(s);
  return !s.empty() && std::all_of(s.begin(), s.end(), is_hex_digit);
}

bool amount_name(std::string_view name) {
  std::string n = to_lower(name);
  for (std::string_view w : {"value", "amount", "price", "wad", "fee", "balance"}) {
    if (n.find(w) != std::string::npos) return true;
  }
  return false;
}

// A mutation candidate before it becomes a seed.
struct Candidate {
  Strategy strategy;
  std::string locus;
  Seed seed;
};

class Builder {
 public:
  Builder(const Seed& parent) : parent_(parent) {}

  void add(Strategy s, std::string locus, Seed mutant, bool preserving = false) {
    mutant.id.clear();
    mutant.origin = "mutant";
    mutant.mutation = MutationRecord{parent_.id, to_string(s), preserving, locus};
    out_.push_back({s, std::move(locus), std::move(mutant)});
  }

  std::vector<Candidate> take() { return std::move(out_); }
  const Seed& parent() const { return parent_; }

 private:
  const Seed& parent_;
  std::vector<Candidate> out_;
};

// ---- string edits -----------------------------------------------------------

// Three single-character edits of `s` at random positions from `start`:
// deletion, insertion and replacement from `alphabet`.
std::array<std::string, 3> char_edits(const std::string& s, std::size_t start,
                                      std::string_view alphabet, Rng& rng) {
  std::array<std::string, 3> out{s, s, s};
  std::size_t span = s.size() > start ? s.size() - start : 0;
  if (span > 0) out[0].erase(start + rng.below(span), 1);
  out[1].insert(start + rng.below(span + 1), 1, alphabet[rng.below(alphabet.size())]);
  if (span > 0) {
    std::size_t pos = start + rng.below(span);
    char c = out[2][pos];
    char r = alphabet[rng.below(alphabet.size())];
    if (r == c) r = alphabet[(alphabet.find(r) + 1) % alphabet.size()];
    out[2][pos] = r;
  }
  return out;
}

// A control byte in 0x00..0x08 and the surrogate bytes, each at a random
// position.
std::array<std::string, 2> illegal_encodings(const std::string& s, Rng& rng) {
  std::array<std::string, 2> out{s, s};
  out[0].insert(rng.below(s.size() + 1), 1, static_cast<char>(rng.below(9)));
  out[1].insert(rng.below(s.size() + 1), kSurrogateBytes);
  return out;
}

U256 flip_bit(const U256& v, Rng& rng) { return v ^ (U256(1) << static_cast<unsigned>(rng.below(256))); }

U256 arithmetic(const U256& v, Rng& rng) {
  U256 k = rng.between(1, 255);
  return rng.coin() ? v + k : v - k;  // wraps modulo 2^256
}

Bytes flip_byte_bit(Bytes b, Rng& rng) {
  if (!b.empty()) b[rng.below(b.size())] ^= static_cast<std::uint8_t>(1u << rng.below(8));
  return b;
}

// ---- numeric surfaces shared by transactions, messages and interactions -----

using NumericSetter = std::function<Seed(const U256&)>;

void numeric_mutants(Builder& b, const std::string& locus, const U256& current,
                     const NumericSetter& set, Rng& rng) {
  if (current != 0) b.add(Strategy::kValueZero, locus, set(U256(0)));
  if (current != huge_amount()) b.add(Strategy::kValueHuge, locus, set(huge_amount()));
  b.add(Strategy::kBitFlip, locus, set(flip_bit(current, rng)));
  b.add(Strategy::kArithmetic, locus, set(arithmetic(current, rng)));
}

const Address* pick_attacker(const std::vector<Address>& attackers, const Address* avoid,
                             Rng& rng) {
  if (attackers.empty()) return nullptr;
  std::size_t i = rng.below(attackers.size());
  for (std::size_t n = 0; n < attackers.size(); ++n) {
    const Address& a = attackers[(i + n) % attackers.size()];
    if (!avoid || a != *avoid) return &a;
  }
  return nullptr;
}

// ---- transactions -----------------------------------------------------------

Json arg_to_json(const codec::AbiArg& a) {
  codec::AbiType t = codec::AbiType::parse(a.type);
  if (t.is_array) {
    Json arr = Json::array();
    for (const auto& item : a.items) {
      if (t.base == codec::AbiType::Base::kAddress) {
        auto w = u256_to_word(item);
        arr.push_back(Address::from_word(w.data()).str());
      } else if (t.base == codec::AbiType::Base::kBool) {
        arr.push_back(item != 0);
      } else {
        arr.push_back(u256_dec(item));
      }
    }
    return arr;
  }
  switch (t.base) {
    case codec::AbiType::Base::kAddress: return a.address().str();
    case codec::AbiType::Base::kBool: return a.word != 0;
    case codec::AbiType::Base::kUint: return u256_dec(a.word);
    case codec::AbiType::Base::kFixedBytes: {
      auto w = u256_to_word(a.word);
      return to_hex(std::span<const std::uint8_t>(w.data(), t.bits / 8));
    }
    case codec::AbiType::Base::kBytes: return to_hex(a.data);
    case codec::AbiType::Base::kString: return std::string(a.data.begin(), a.data.end());
  }
  return nullptr;
}

Json args_to_json(const codec::DecodedCall& call) {
  Json out = Json::array();
  for (const auto& a : call.args) out.push_back(arg_to_json(a));
  return out;
}

void transaction_content(Builder& b, const codec::SignatureCatalog& catalog,
                         const MutatorOptions& opt, Rng& rng) {
  const Seed& parent = b.parent();
  const TransactionSeed& tx = parent.tx();

  numeric_mutants(b, "value", tx.value, [&](const U256& v) {
    Seed m = parent;
    m.tx().value = v;
    return m;
  }, rng);

  std::optional<codec::DecodedCall> call;
  try {
    Bytes data = codec::normalize_inputdata_bytes(tx.inputdata, catalog);
    if (!data.empty()) call = codec::decode_call(data, catalog);
  } catch (const Error&) {
  }

  if (tx.inputdata.empty() || tx.inputdata == "0x") {
    if (const Address* a = pick_attacker(opt.attackers, &tx.to, rng)) {
      Seed m = parent;
      m.tx().to = *a;
      b.add(Strategy::kAddressReplace, "to", std::move(m));
    }
  }

  if (call && call->known()) {
    const codec::FunctionEntry& fn = *call->function;
    Json args = args_to_json(*call);
    auto with_arg = [&](std::size_t i, Json v) {
      Json changed = args;
      changed[i] = std::move(v);
      Seed m = parent;
      m.tx().inputdata = to_hex(codec::encode_call(fn, changed));
      return m;
    };
    for (std::size_t i = 0; i < call->args.size(); ++i) {
      const codec::AbiArg& a = call->args[i];
      std::string name = i < fn.param_names.size() ? fn.param_names[i] : "arg" + std::to_string(i);
      std::string locus = "args." + name;
      codec::AbiType t = codec::AbiType::parse(a.type);
      if (t.is_array) continue;
      if (t.base == codec::AbiType::Base::kUint) {
        unsigned bits = t.bits;
        numeric_mutants(b, locus, a.word, [&, bits](const U256& v) {
          U256 fitted = bits < 256 ? v & ((U256(1) << bits) - 1) : v;
          return with_arg(i, u256_dec(fitted));
        }, rng);
      } else if (t.base == codec::AbiType::Base::kAddress) {
        Address cur = a.address();
        if (const Address* at = pick_attacker(opt.attackers, &cur, rng)) {
          b.add(Strategy::kAddressReplace, locus, with_arg(i, at->str()));
        }
      } else if (t.base == codec::AbiType::Base::kString) {
        std::string text(a.data.begin(), a.data.end());
        for (auto& e : char_edits(text, 0, kTextChars, rng)) {
          b.add(Strategy::kCharEdit, locus, with_arg(i, Json(e)));
        }
        for (auto& e : illegal_encodings(text, rng)) {
          // Raw bytes are carried as a string; encode_call copies them verbatim.
          b.add(Strategy::kIllegalEncoding, locus, with_arg(i, Json(e)));
        }
      }
    }
  }

  if (!tx.inputdata.empty() && tx.inputdata != "0x") {
    std::size_t start = has_hex_prefix(tx.inputdata) ? 2 : 0;
    for (auto& e : char_edits(tx.inputdata, start, kHexDigits, rng)) {
      Seed m = parent;
      m.tx().inputdata = e;
      b.add(Strategy::kCharEdit, "inputdata", std::move(m));
    }
  }
}

void transaction_format(Builder& b, const codec::SignatureCatalog& catalog, Rng& rng) {
  const Seed& parent = b.parent();
  const TransactionSeed& tx = parent.tx();
  if (tx.inputdata.empty() || tx.inputdata == "0x") return;

  if (has_hex_prefix(tx.inputdata)) {
    Seed m = parent;
    m.tx().inputdata = std::string(strip_hex_prefix(tx.inputdata));
    b.add(Strategy::kPrefixStrip, "inputdata", std::move(m), true);
  }

  Bytes data;
  try {
    data = codec::normalize_inputdata_bytes(tx.inputdata, catalog);
  } catch (const Error&) {
    return;
  }
  if (data.size() < 4 || (data.size() - 4) % 32 != 0) return;
  std::size_t words = (data.size() - 4) / 32;
  codec::Selector sel{};
  std::copy(data.begin(), data.begin() + 4, sel.begin());
  const codec::FunctionEntry* fn = catalog.by_selector(sel);

  if (fn && codec::all_static(*fn) && fn->param_types.size() == words) {
    std::string text = to_hex(std::span<const std::uint8_t>(data.data(), 4));
    bool any_decimal = false;
    for (std::size_t i = 0; i < words; ++i) {
      const std::uint8_t* w = data.data() + 4 + 32 * i;
      std::string token = to_hex(std::span<const std::uint8_t>(w, 32), false);
      if (codec::AbiType::parse(fn->param_types[i]).is_uint()) {
        std::string dec = u256_dec(word_to_u256(w));
        // A 64-character digit run would be read back as hex.
        if (dec.size() != 64) {
          token = dec;
          any_decimal = true;
        }
      }
      text += "," + token;
    }
    if (any_decimal) {
      Seed m = parent;
      m.tx().inputdata = text;
      b.add(Strategy::kHexToDecimal, "inputdata", std::move(m), true);
    }
  }

  if (words >= 2) {
    std::size_t i = rng.below(words - 1);
    Bytes swapped = data;
    std::swap_ranges(swapped.begin() + 4 + 32 * i, swapped.begin() + 4 + 32 * (i + 1),
                     swapped.begin() + 4 + 32 * (i + 1));
    if (swapped != data) {
      Seed m = parent;
      m.tx().inputdata = to_hex(swapped);
      std::string a = fn && i < fn->param_names.size() ? fn->param_names[i] : "word" + std::to_string(i);
      std::string c = fn && i + 1 < fn->param_names.size() ? fn->param_names[i + 1]
                                                          : "word" + std::to_string(i + 1);
      b.add(Strategy::kParamSwap, "args." + a + "<->args." + c, std::move(m));
    }
  }
}

// ---- messages ---------------------------------------------------------------

Seed with_payload(const Seed& parent, MessagePayload p) {
  Seed m = parent;
  m.msg().payload = std::move(p);
  return m;
}

// Serialises `doc`, turning the surrogate placeholder into a lone "\ud800".
std::string dump_typed(const Json& doc) {
  std::string text = doc.dump();
  for (std::size_t pos; (pos = text.find(kSurrogateMark)) != std::string::npos;) {
    text.replace(pos, kSurrogateMark.size(), "\\ud800");
  }
  return text;
}

struct JsonLeaf {
  Json::json_pointer pointer;
  std::string locus;
  std::string key;
};

void json_leaves(const Json& j, const Json::json_pointer& ptr, const std::string& locus,
                 const std::string& key, std::vector<JsonLeaf>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) json_leaves(v, ptr / k, locus + "." + k, k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      json_leaves(j[i], ptr / i, locus + "." + std::to_string(i), key, out);
    }
  } else if (j.is_string() || j.is_number_unsigned() || j.is_number_integer()) {
    out.push_back({ptr, locus, key});
  }
}

void typed_data_content(Builder& b, const TypedDataPayload& p, const MutatorOptions& opt,
                        Rng& rng) {
  Json doc = Json::parse(p.json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return;
  std::vector<JsonLeaf> leaves;
  for (const char* section : {"domain", "message"}) {
    if (doc.contains(section)) {
      json_leaves(doc[section], Json::json_pointer("/" + std::string(section)), section, "",
                  leaves);
    }
  }
  auto emit = [&](Strategy s, const JsonLeaf& leaf, Json value) {
    Json changed = doc;
    changed[leaf.pointer] = std::move(value);
    b.add(s, "payload.typedData." + leaf.locus,
          with_payload(b.parent(), TypedDataPayload{dump_typed(changed)}));
  };
  for (const auto& leaf : leaves) {
    const Json& v = doc[leaf.pointer];
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    switch (infer_field_semantics(leaf.key, text)) {
      case FieldSemantic::kAmount: {
        auto cur = codec::json_to_u256(v);
        if (!cur) break;
        bool as_number = v.is_number();
        numeric_mutants(b, "payload.typedData." + leaf.locus, *cur, [&](const U256& n) {
          Json nv = as_number && n <= U256(UINT64_MAX) ? Json(static_cast<std::uint64_t>(n))
                                                        : Json(u256_dec(n));
          Json changed = doc;
          changed[leaf.pointer] = nv;
          return with_payload(b.parent(), TypedDataPayload{dump_typed(changed)});
        }, rng);
        break;
      }
      case FieldSemantic::kAddress: {
        auto cur = Address::parse(text);
        if (const Address* a = pick_attacker(opt.attackers, cur ? &*cur : nullptr, rng)) {
          emit(Strategy::kAddressReplace, leaf, a->str());
        }
        break;
      }
      case FieldSemantic::kText: {
        for (auto& e : char_edits(text, 0, kTextChars, rng)) emit(Strategy::kCharEdit, leaf, e);
        std::string control = text;
        control.insert(rng.below(text.size() + 1), 1, static_cast<char>(rng.below(9)));
        emit(Strategy::kIllegalEncoding, leaf, control);
        std::string surrogate = text;
        surrogate.insert(rng.below(text.size() + 1), kSurrogateMark);
        emit(Strategy::kIllegalEncoding, leaf, surrogate);
        break;
      }
      case FieldSemantic::kBytes: {
        auto bytes = parse_hex(text);
        if (bytes && !bytes->empty()) emit(Strategy::kBitFlip, leaf, to_hex(flip_byte_bit(*bytes, rng)));
        break;
      }
      case FieldSemantic::kUnknown:
        break;
    }
  }
}

// Rewrites every integer-typed field of `j` (of struct type `type`) as a
// decimal string. Returns true when any field changed representation.
bool integers_to_decimal(Json& j, const std::string& type,
                         const std::map<std::string, std::vector<codec::TypedField>>& types) {
  auto it = types.find(type);
  if (it == types.end() || !j.is_object()) return false;
  bool changed = false;
  for (const auto& f : it->second) {
    if (!j.contains(f.name)) continue;
    Json& v = j[f.name];
    bool is_array = f.type.ends_with("[]");
    std::string base = is_array ? f.type.substr(0, f.type.size() - 2) : f.type;
    bool integer = base.starts_with("uint") || base.starts_with("int");
    auto convert = [&](Json& x) {
      if (integer) {
        if (x.is_string() && all_digits(x.get<std::string>())) return;
        auto n = codec::json_to_u256(x);
        if (!n) return;
        x = u256_dec(*n);
        changed = true;
      } else if (types.count(base)) {
        changed = integers_to_decimal(x, base, types) || changed;
      }
    };
    if (is_array && v.is_array()) {
      for (auto& x : v) convert(x);
    } else if (!is_array) {
      convert(v);
    }
  }
  return changed;
}

void typed_data_format(Builder& b, const TypedDataPayload& p, Rng& rng) {
  Json doc = Json::parse(p.json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return;
  try {
    codec::Eip712Result parsed = codec::parse_eip712_doc(doc);
    auto types = parsed.payload.types;
    if (!types.count("EIP712Domain")) {
      types["EIP712Domain"] = {{"chainId", "uint256"}};
    }
    Json changed = doc;
    bool any = false;
    if (changed.contains("domain")) any = integers_to_decimal(changed["domain"], "EIP712Domain", types);
    if (changed.contains("message")) {
      any = integers_to_decimal(changed["message"], parsed.payload.primary_type, types) || any;
    }
    if (any) {
      b.add(Strategy::kHexToDecimal, "payload.typedData",
            with_payload(b.parent(), TypedDataPayload{changed.dump()}), true);
    }
  } catch (const Error&) {
  }

  if (doc.contains("message") && doc["message"].is_object() && doc["message"].size() >= 2) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc["message"].items()) keys.push_back(k);
    std::size_t i = rng.below(keys.size() - 1);
    Json changed = doc;
    std::swap(changed["message"][keys[i]], changed["message"][keys[i + 1]]);
    if (changed != doc) {
      b.add(Strategy::kParamSwap, "payload.typedData.message." + keys[i] + "<->" + keys[i + 1],
            with_payload(b.parent(), TypedDataPayload{changed.dump()}));
    }
  }
}

void message_content(Builder& b, const MutatorOptions& opt, Rng& rng) {
  const Seed& parent = b.parent();
  const MessagePayload& payload = parent.msg().payload;

  if (const auto* h = std::get_if<HashPayload>(&payload)) {
    std::size_t start = has_hex_prefix(h->hash) ? 2 : 0;
    for (auto& e : char_edits(h->hash, start, kHexDigits, rng)) {
      b.add(Strategy::kCharEdit, "payload.hash", with_payload(parent, HashPayload{e}));
    }
    if (auto bytes = parse_hex(h->hash)) {
      b.add(Strategy::kBitFlip, "payload.hash",
            with_payload(parent, HashPayload{to_hex(flip_byte_bit(*bytes, rng))}));
    }
  } else if (const auto* ps = std::get_if<codec::PersonalSignPayload>(&payload)) {
    std::size_t start = has_hex_prefix(ps->challenge) ? 2 : 0;
    for (auto& e : char_edits(ps->challenge, start, kHexDigits, rng)) {
      b.add(Strategy::kCharEdit, "payload.challenge",
            with_payload(parent, codec::PersonalSignPayload{e, ps->address}));
    }
    if (auto bytes = parse_hex(ps->challenge)) {
      std::string text(bytes->begin(), bytes->end());
      for (auto& e : illegal_encodings(text, rng)) {
        Bytes raw(e.begin(), e.end());
        b.add(Strategy::kIllegalEncoding, "payload.challenge",
              with_payload(parent, codec::PersonalSignPayload{to_hex(raw), ps->address}));
      }
      b.add(Strategy::kBitFlip, "payload.challenge",
            with_payload(parent, codec::PersonalSignPayload{to_hex(flip_byte_bit(*bytes, rng)),
                                                            ps->address}));
    }
    auto cur = Address::parse(ps->address);
    if (const Address* a = pick_attacker(opt.attackers, cur ? &*cur : nullptr, rng)) {
      b.add(Strategy::kAddressReplace, "payload.address",
            with_payload(parent, codec::PersonalSignPayload{ps->challenge, a->str()}));
    }
  } else if (const auto* td = std::get_if<TypedDataPayload>(&payload)) {
    typed_data_content(b, *td, opt, rng);
  } else if (const auto* w = std::get_if<SiwePayload>(&payload)) {
    codec::Eip4361Result r = codec::parse_eip4361(w->text);
    if (codec::render_eip4361(r.payload) != w->text) return;
    auto emit = [&](Strategy s, const std::string& locus, const codec::Eip4361Payload& p) {
      b.add(s, "payload.text." + locus, with_payload(parent, SiwePayload{codec::render_eip4361(p)}));
    };
    if (const Address* a = pick_attacker(opt.attackers, r.payload.address ? &*r.payload.address : nullptr, rng)) {
      codec::Eip4361Payload p = r.payload;
      p.address_text = a->str();
      emit(Strategy::kAddressReplace, "address", p);
    }
    if (r.payload.chain_id) {
      numeric_mutants(b, "payload.text.chainId", *r.payload.chain_id, [&](const U256& n) {
        codec::Eip4361Payload p = r.payload;
        p.chain_id_text = u256_dec(n);
        return with_payload(parent, SiwePayload{codec::render_eip4361(p)});
      }, rng);
    }
    if (!r.payload.statement.empty()) {
      for (auto& e : char_edits(r.payload.statement, 0, kTextChars, rng)) {
        codec::Eip4361Payload p = r.payload;
        p.statement = e;
        emit(Strategy::kCharEdit, "statement", p);
      }
      for (auto& e : illegal_encodings(r.payload.statement, rng)) {
        codec::Eip4361Payload p = r.payload;
        p.statement = e;
        emit(Strategy::kIllegalEncoding, "statement", p);
      }
    }
    std::size_t host = r.payload.uri.find("://");
    std::size_t start = host == std::string::npos ? 0 : host + 3;
    for (auto& e : char_edits(r.payload.uri, start, kTextChars, rng)) {
      codec::Eip4361Payload p = r.payload;
      p.uri = e;
      emit(Strategy::kCharEdit, "uri", p);
    }
  }
}

void message_format(Builder& b, Rng& rng) {
  const Seed& parent = b.parent();
  const MessagePayload& payload = parent.msg().payload;

  if (const auto* h = std::get_if<HashPayload>(&payload)) {
    if (has_hex_prefix(h->hash)) {
      b.add(Strategy::kPrefixStrip, "payload.hash",
            with_payload(parent, HashPayload{std::string(strip_hex_prefix(h->hash))}), true);
    }
  } else if (const auto* ps = std::get_if<codec::PersonalSignPayload>(&payload)) {
    if (has_hex_prefix(ps->challenge)) {
      b.add(Strategy::kPrefixStrip, "payload.challenge",
            with_payload(parent, codec::PersonalSignPayload{
                                     std::string(strip_hex_prefix(ps->challenge)), ps->address}),
            true);
    }
    if (ps->challenge != ps->address) {
      b.add(Strategy::kParamSwap, "payload.challenge<->payload.address",
            with_payload(parent, codec::PersonalSignPayload{ps->address, ps->challenge}));
    }
  } else if (const auto* td = std::get_if<TypedDataPayload>(&payload)) {
    typed_data_format(b, *td, rng);
  } else if (const auto* w = std::get_if<SiwePayload>(&payload)) {
    // Swap two adjacent "Key: value" lines of the field block.
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (true) {
      std::size_t nl = w->text.find('\n', pos);
      lines.push_back(w->text.substr(pos, nl == std::string::npos ? nl : nl - pos));
      if (nl == std::string::npos) break;
      pos = nl + 1;
    }
    std::vector<std::size_t> fields;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].find(": ") != std::string::npos) fields.push_back(i);
    }
    if (fields.size() >= 2) {
      std::size_t k = rng.below(fields.size() - 1);
      std::swap(lines[fields[k]], lines[fields[k + 1]]);
      std::string text;
      for (std::size_t i = 0; i < lines.size(); ++i) text += (i ? "\n" : "") + lines[i];
      std::string a = lines[fields[k + 1]].substr(0, lines[fields[k + 1]].find(':'));
      std::string c = lines[fields[k]].substr(0, lines[fields[k]].find(':'));
      b.add(Strategy::kParamSwap, "payload.text." + a + "<->" + c,
            with_payload(parent, SiwePayload{text}));
    }
  }
}

// ---- interactions -----------------------------------------------------------

void interaction_content(Builder& b, const MutatorOptions& opt, Rng& rng) {
  const Seed& parent = b.parent();
  const InteractionSeed& is = parent.interaction();
  for (std::size_t i = 0; i < is.steps.size(); ++i) {
    const InteractionStep& st = is.steps[i];
    if (st.action != "input") continue;
    std::string locus = "steps." + std::to_string(i) + ".data";
    auto with_data = [&](std::string data) {
      Seed m = parent;
      m.interaction().steps[i].data = std::move(data);
      return m;
    };
    switch (infer_field_semantics(st.data_type, st.data)) {
      case FieldSemantic::kAmount: {
        auto cur = parse_u256_dec(st.data);
        if (!cur) break;
        numeric_mutants(b, locus, *cur, [&](const U256& n) { return with_data(u256_dec(n)); }, rng);
        break;
      }
      case FieldSemantic::kAddress: {
        auto cur = Address::parse(st.data);
        if (const Address* a = pick_attacker(opt.attackers, cur ? &*cur : nullptr, rng)) {
          b.add(Strategy::kAddressReplace, locus, with_data(a->str()));
        }
        for (auto& e : char_edits(st.data, has_hex_prefix(st.data) ? 2 : 0, kHexDigits, rng)) {
          b.add(Strategy::kCharEdit, locus, with_data(e));
        }
        break;
      }
      case FieldSemantic::kText:
      case FieldSemantic::kBytes:
        for (auto& e : char_edits(st.data, 0, kTextChars, rng)) {
          b.add(Strategy::kCharEdit, locus, with_data(e));
        }
        for (auto& e : illegal_encodings(st.data, rng)) {
          b.add(Strategy::kIllegalEncoding, locus, with_data(e));
        }
        break;
      case FieldSemantic::kUnknown:
        break;
    }
  }
}

void interaction_format(Builder& b, Rng& rng) {
  const Seed& parent = b.parent();
  const InteractionSeed& is = parent.interaction();
  for (std::size_t i = 0; i < is.steps.size(); ++i) {
    const auto& path = is.steps[i].path;
    if (path.size() < 2) continue;
    std::size_t k = rng.below(path.size() - 1);
    if (path[k] == path[k + 1]) continue;
    Seed m = parent;
    std::swap(m.interaction().steps[i].path[k], m.interaction().steps[i].path[k + 1]);
    b.add(Strategy::kPathReorder, "steps." + std::to_string(i) + ".path", std::move(m));
  }
}

// Drops no-op mutants and preserving mutants that fail the equality check.
std::vector<Seed> finalize(const Seed& parent, std::vector<Candidate> candidates,
                           const codec::SignatureCatalog& catalog) {
  Json parent_body = to_json(parent);
  parent_body.erase("id");
  std::optional<std::string> parent_canonical;
  std::vector<Seed> out;
  for (auto& c : candidates) {
    Json body = to_json(c.seed);
    std::string kind = to_string(c.seed.kind());
    if (body[kind] == parent_body[kind]) continue;
    if (c.seed.mutation->semantics_preserving) {
      try {
        if (!parent_canonical) parent_canonical = canonical_payload(parent, catalog);
        if (canonical_payload(c.seed, catalog) != *parent_canonical) continue;
      } catch (const Error&) {
        continue;
      }
    }
    out.push_back(std::move(c.seed));
  }
  return out;
}

}  // namespace

std::string to_string(FieldSemantic s) {
  switch (s) {
    case FieldSemantic::kAmount: return "amount";
    case FieldSemantic::kAddress: return "address";
    case FieldSemantic::kBytes: return "bytes";
    case FieldSemantic::kText: return "text";
    case FieldSemantic::kUnknown: return "unknown";
  }
  return "unknown";
}

FieldSemantic infer_field_semantics(std::string_view field_name, std::string_view value) {
  if (value.empty()) return FieldSemantic::kUnknown;
  if (Address::parse(value)) return FieldSemantic::kAddress;
  std::string_view digits = strip_hex_prefix(value);
  if (digits.size() == 64 && is_hex_text(digits) &&
      digits.substr(0, 24).find_first_not_of('0') == std::string_view::npos) {
    return FieldSemantic::kAddress;
  }
  if (all_digits(value)) return FieldSemantic::kAmount;
  if (has_hex_prefix(value) && is_hex_text(value)) {
    return amount_name(field_name) ? FieldSemantic::kAmount : FieldSemantic::kBytes;
  }
  return FieldSemantic::kText;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kValueZero: return "valueZero";
    case Strategy::kValueHuge: return "valueHuge";
    case Strategy::kAddressReplace: return "addressReplace";
    case Strategy::kCharEdit: return "charEdit";
    case Strategy::kIllegalEncoding: return "illegalEncoding";
    case Strategy::kBitFlip: return "bitFlip";
    case Strategy::kArithmetic: return "arithmetic";
    case Strategy::kHexToDecimal: return "hexToDecimal";
    case Strategy::kParamSwap: return "paramSwap";
    case Strategy::kPrefixStrip: return "prefixStrip";
    case Strategy::kPathReorder: return "pathReorder";
  }
  return "";
}

Strategy parse_strategy(std::string_view text) {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == text) return s;
  }
  throw Error("unknown-strategy", std::string(text));
}

bool is_format_strategy(Strategy s) {
  return s == Strategy::kHexToDecimal || s == Strategy::kParamSwap ||
         s == Strategy::kPrefixStrip || s == Strategy::kPathReorder;
}

U256 huge_amount() { return U256(1) << 255; }

Mutator::Mutator(const codec::SignatureCatalog& catalog, MutatorOptions options)
    : catalog_(catalog), options_(std::move(options)) {}

std::vector<Seed> Mutator::mutate_content(const Seed& parent, Rng& rng) const {
  Builder b(parent);
  switch (parent.kind()) {
    case SeedKind::kTransaction: transaction_content(b, catalog_, options_, rng); break;
    case SeedKind::kMessage: message_content(b, options_, rng); break;
    case SeedKind::kInteraction: interaction_content(b, options_, rng); break;
  }
  return finalize(parent, b.take(), catalog_);
}

std::vector<Seed> Mutator::mutate_format(const Seed& parent, Rng& rng) const {
  Builder b(parent);
  switch (parent.kind()) {
    case SeedKind::kTransaction: transaction_format(b, catalog_, rng); break;
    case SeedKind::kMessage: message_format(b, rng); break;
    case SeedKind::kInteraction: interaction_format(b, rng); break;
  }
  return finalize(parent, b.take(), catalog_);
}

std::vector<Seed> Mutator::mutate(const Seed& parent, Rng& rng) const {
  std::vector<Seed> all = mutate_content(parent, rng);
  for (auto& m : mutate_format(parent, rng)) all.push_back(std::move(m));

  std::map<Strategy, std::vector<Seed*>> buckets;
  for (auto& m : all) buckets[parse_strategy(m.mutation->strategy)].push_back(&m);
  std::vector<Seed> out;
  for (std::size_t round = 0; out.size() < options_.budget; ++round) {
    bool any = false;
    for (Strategy s : kAllStrategies) {
      auto it = buckets.find(s);
      if (it == buckets.end() || round >= it->second.size()) continue;
      any = true;
      out.push_back(*it->second[round]);
      if (out.size() == options_.budget) break;
    }
    if (!any) break;
  }
  return out;
}

}  // namespace walletdiff::mutate
