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

#include "walletdiff/codec/messages.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "walletdiff/common/error.h"
#include "walletdiff/common/hex.h"

namespace walletdiff::codec {

namespace {

void add(std::vector<Violation>& out, std::string code, std::string field,
         Severity sev = Severity::kError, std::string detail = {}) {
  out.push_back({std::move(code), std::move(field), sev, std::move(detail)});
}

bool is_struct(const std::map<std::string, std::vector<TypedField>>& types,
               const std::string& type) {
  return types.count(type) != 0;
}

bool is_integer_type(std::string_view t) {
  return t.rfind("uint", 0) == 0 || t.rfind("int", 0) == 0;
}

bool is_bytes_type(std::string_view t) { return t.rfind("bytes", 0) == 0; }

// Validates `value` against `type`; when `canon` is non-null writes the
// canonical form of the value into it.
void check_value(const std::map<std::string, std::vector<TypedField>>& types,
                 const std::string& type, const Json& value, const std::string& path,
                 std::vector<Violation>& out, Json* canon, int depth) {
  if (depth > 32) {
    add(out, "invalid-value", path, Severity::kError, "nesting too deep");
    return;
  }
  if (type.size() > 2 && type.substr(type.size() - 2) == "[]") {
    std::string elem = type.substr(0, type.size() - 2);
    if (!value.is_array()) {
      add(out, "invalid-value", path, Severity::kError, "expected array");
      if (canon) *canon = value;
      return;
    }
    if (canon) *canon = Json::array();
    for (std::size_t i = 0; i < value.size(); ++i) {
      Json c;
      check_value(types, elem, value[i], path + "[" + std::to_string(i) + "]", out,
                  canon ? &c : nullptr, depth + 1);
      if (canon) canon->push_back(std::move(c));
    }
    return;
  }
  if (is_struct(types, type)) {
    if (!value.is_object()) {
      add(out, "invalid-value", path, Severity::kError, "expected object of type " + type);
      if (canon) *canon = value;
      return;
    }
    if (canon) *canon = Json::object();
    for (const TypedField& f : types.at(type)) {
      std::string sub = path + "." + f.name;
      if (!value.contains(f.name)) {
        add(out, "missing-field", sub);
        continue;
      }
      Json c;
      check_value(types, f.type, value.at(f.name), sub, out, canon ? &c : nullptr, depth + 1);
      if (canon) (*canon)[f.name] = std::move(c);
    }
    return;
  }
  if (canon) *canon = value;
  if (type == "address") {
    auto a = value.is_string() ? Address::parse(value.get<std::string>()) : std::nullopt;
    if (!a) {
      add(out, "invalid-address", path);
    } else if (canon) {
      *canon = a->str();
    }
  } else if (is_integer_type(type)) {
    auto n = json_to_u256(value);
    if (!n) {
      add(out, "invalid-value", path, Severity::kError, "expected integer");
    } else if (canon) {
      *canon = u256_dec(*n);
    }
  } else if (type == "bool") {
    if (!value.is_boolean()) add(out, "invalid-value", path, Severity::kError, "expected bool");
  } else if (type == "string") {
    if (!value.is_string()) add(out, "invalid-value", path, Severity::kError, "expected string");
  } else if (is_bytes_type(type)) {
    auto b = value.is_string() ? parse_hex(value.get<std::string>()) : std::nullopt;
    if (!b) {
      add(out, "invalid-value", path, Severity::kError, "expected hex bytes");
    } else if (canon) {
      *canon = to_hex(*b);
    }
  } else {
    add(out, "unknown-type", path, Severity::kError, type);
  }
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

constexpr std::string_view kSiweHeaderSuffix =
    " wants you to sign in with your Ethereum account:";

}  // namespace

std::string to_string(MessageFormat f) {
  switch (f) {
    case MessageFormat::kHashString: return "hash-string";
    case MessageFormat::kTextString: return "text-string";
    case MessageFormat::kEip191: return "eip-191";
    case MessageFormat::kEip712: return "eip-712";
    case MessageFormat::kEip4361: return "eip-4361";
  }
  return "";
}

std::string to_string(SigningMethod m) {
  switch (m) {
    case SigningMethod::kEthSign: return "eth_sign";
    case SigningMethod::kPersonalSign: return "personal_sign";
    case SigningMethod::kSignTypedDataV4: return "eth_signTypedData_v4";
    case SigningMethod::kSendTransactions: return "eth_sendTransactions";
  }
  return "";
}

MessageFormat parse_message_format(std::string_view text) {
  for (MessageFormat f : {MessageFormat::kHashString, MessageFormat::kTextString,
                          MessageFormat::kEip191, MessageFormat::kEip712,
                          MessageFormat::kEip4361}) {
    if (to_string(f) == text) return f;
  }
  throw Error("unknown-format", std::string(text));
}

SigningMethod parse_signing_method(std::string_view text) {
  if (text == "eth_sendTransaction") return SigningMethod::kSendTransactions;
  for (SigningMethod m : {SigningMethod::kEthSign, SigningMethod::kPersonalSign,
                          SigningMethod::kSignTypedDataV4, SigningMethod::kSendTransactions}) {
    if (to_string(m) == text) return m;
  }
  throw Error("unknown-method", std::string(text));
}

std::vector<SigningMethod> signing_methods_for(std::string_view format) {
  if (format == "transaction") return {SigningMethod::kSendTransactions};
  switch (parse_message_format(format)) {
    case MessageFormat::kHashString: return {SigningMethod::kEthSign};
    case MessageFormat::kTextString: return {SigningMethod::kPersonalSign};
    case MessageFormat::kEip191: return {SigningMethod::kPersonalSign, SigningMethod::kEthSign};
    case MessageFormat::kEip712: return {SigningMethod::kSignTypedDataV4};
    case MessageFormat::kEip4361: return {SigningMethod::kSignTypedDataV4};
  }
  return {};
}

bool is_valid_pairing(MessageFormat format, SigningMethod method) {
  auto methods = signing_methods_for(to_string(format));
  return std::find(methods.begin(), methods.end(), method) != methods.end();
}

std::string to_string(Severity s) {
  switch (s) {
    case Severity::kInfo: return "info";
    case Severity::kWarning: return "warning";
    case Severity::kError: return "error";
  }
  return "error";
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::kError; });
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t n;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if (c >= 0xc2 && c <= 0xdf) {
      n = 1;
      cp = c & 0x1f;
    } else if (c >= 0xe0 && c <= 0xef) {
      n = 2;
      cp = c & 0x0f;
    } else if (c >= 0xf0 && c <= 0xf4) {
      n = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (i + k >= s.size()) return false;
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    if ((n == 2 && cp < 0x800) || (n == 3 && cp < 0x10000) || cp > 0x10ffff ||
        (cp >= 0xd800 && cp <= 0xdfff)) {
      return false;
    }
    i += n + 1;
  }
  return true;
}

PersonalSignDecode decode_personal_sign(const PersonalSignPayload& payload) {
  PersonalSignDecode r;
  r.address = Address::parse(payload.address);
  std::string_view hex = strip_hex_prefix(payload.challenge);
  if (!std::all_of(hex.begin(), hex.end(), is_hex_digit)) {
    r.failure = "non-hex";
    return r;
  }
  if (hex.size() % 2 != 0) {
    r.failure = "odd-length";
    return r;
  }
  auto bytes = parse_hex(hex);
  std::string text(bytes->begin(), bytes->end());
  if (!is_valid_utf8(text)) {
    r.failure = "invalid-utf8";
    return r;
  }
  for (unsigned char c : text) {
    if ((c < 0x20 && c != '\t' && c != '\n' && c != '\r') || c == 0x7f) {
      r.failure = "unreadable";
      return r;
    }
  }
  r.ok = true;
  r.text = std::move(text);
  return r;
}

std::optional<U256> json_to_u256(const Json& v) {
  if (v.is_number_unsigned()) return U256(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return U256(static_cast<std::uint64_t>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_u256(v.get<std::string>());
  return std::nullopt;
}

Eip712Result parse_eip712(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error("malformed-json", e.what());
  }
  return parse_eip712_doc(doc);
}

Eip712Result parse_eip712_doc(const Json& doc) {
  if (!doc.is_object()) throw Error("malformed-json", "typed data must be a JSON object");
  Eip712Result r;
  auto& v = r.violations;
  auto& p = r.payload;

  if (!doc.contains("types") || !doc["types"].is_object()) {
    add(v, "missing-field", "types");
  } else {
    for (const auto& [type_name, fields] : doc["types"].items()) {
      std::vector<TypedField> list;
      if (!fields.is_array()) {
        add(v, "invalid-value", "types." + type_name, Severity::kError, "expected field list");
        continue;
      }
      for (const auto& f : fields) {
        if (!f.is_object() || !f.contains("name") || !f.contains("type") ||
            !f["name"].is_string() || !f["type"].is_string()) {
          add(v, "invalid-value", "types." + type_name, Severity::kError, "bad field entry");
          continue;
        }
        list.push_back({f["name"].get<std::string>(), f["type"].get<std::string>()});
      }
      p.types[type_name] = std::move(list);
    }
  }

  if (!doc.contains("primaryType") || !doc["primaryType"].is_string()) {
    add(v, "missing-field", "primaryType");
  } else {
    p.primary_type = doc["primaryType"].get<std::string>();
    if (!is_struct(p.types, p.primary_type)) add(v, "unknown-primaryType", "primaryType");
  }

  if (!doc.contains("domain") || !doc["domain"].is_object()) {
    add(v, "missing-field", "domain");
  } else {
    Json d = doc["domain"];
    if (d.contains("verifyContract") && !d.contains("verifyingContract")) {
      d["verifyingContract"] = d["verifyContract"];
      d.erase("verifyContract");
      add(v, "nonstandard-field", "domain.verifyContract", Severity::kInfo,
          "read as verifyingContract");
    }
    p.domain_json = d;
    auto str_field = [&](const char* key, std::optional<std::string>& slot, bool required) {
      if (!d.contains(key)) {
        if (required) add(v, "missing-field", std::string("domain.") + key);
        return;
      }
      if (!d[key].is_string()) {
        add(v, "invalid-value", std::string("domain.") + key);
        return;
      }
      slot = d[key].get<std::string>();
    };
    str_field("name", p.domain.name, true);
    str_field("version", p.domain.version, true);
    str_field("salt", p.domain.salt, false);
    if (!d.contains("chainId")) {
      add(v, "missing-field", "domain.chainId");
    } else {
      p.domain.chain_id = json_to_u256(d["chainId"]);
      if (!p.domain.chain_id || *p.domain.chain_id == 0) {
        p.domain.chain_id.reset();
        add(v, "invalid-chainId", "domain.chainId", Severity::kError, d["chainId"].dump());
      }
    }
    if (!d.contains("verifyingContract")) {
      add(v, "missing-field", "domain.verifyingContract");
    } else {
      const Json& vc = d["verifyingContract"];
      p.domain.verifying_contract =
          vc.is_string() ? Address::parse(vc.get<std::string>()) : std::nullopt;
      if (!p.domain.verifying_contract) add(v, "invalid-address", "domain.verifyingContract");
    }
  }

  if (!doc.contains("message") || !doc["message"].is_object()) {
    add(v, "missing-field", "message");
  } else {
    p.message = doc["message"];
    if (is_struct(p.types, p.primary_type)) {
      check_value(p.types, p.primary_type, p.message, "message", v, nullptr, 0);
    }
  }
  return r;
}

std::string canonical_eip712(const Eip712Result& parsed) {
  const Eip712Payload& p = parsed.payload;
  Json out = Json::object();
  Json types = Json::object();
  for (const auto& [name, fields] : p.types) {
    Json list = Json::array();
    for (const auto& f : fields) list.push_back({{"name", f.name}, {"type", f.type}});
    types[name] = list;
  }
  out["types"] = types;
  out["primaryType"] = p.primary_type;

  Json domain = p.domain_json;
  if (p.domain.chain_id) domain["chainId"] = u256_dec(*p.domain.chain_id);
  if (p.domain.verifying_contract) domain["verifyingContract"] = p.domain.verifying_contract->str();
  if (p.domain.salt) {
    if (auto b = parse_hex(*p.domain.salt)) domain["salt"] = to_hex(*b);
  }
  out["domain"] = domain;

  Json message = p.message;
  if (is_struct(p.types, p.primary_type)) {
    std::vector<Violation> ignored;
    check_value(p.types, p.primary_type, p.message, "message", ignored, &message, 0);
  }
  out["message"] = message;
  return out.dump();
}

std::string uri_host(std::string_view uri) {
  std::size_t scheme = uri.find("://");
  if (scheme == std::string_view::npos) return "";
  std::string_view rest = uri.substr(scheme + 3);
  rest = rest.substr(0, rest.find_first_of("/?#"));
  std::size_t at = rest.rfind('@');
  if (at != std::string_view::npos) rest.remove_prefix(at + 1);
  rest = rest.substr(0, rest.find(':'));
  return to_lower(rest);
}

Eip4361Result parse_eip4361(std::string_view text) {
  Eip4361Result r;
  auto& v = r.violations;
  auto& p = r.payload;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  }

  std::size_t i = 0;
  const std::string& header = lines[0];
  if (header.size() > kSiweHeaderSuffix.size() &&
      header.compare(header.size() - kSiweHeaderSuffix.size(), kSiweHeaderSuffix.size(),
                     kSiweHeaderSuffix) == 0) {
    p.domain = header.substr(0, header.size() - kSiweHeaderSuffix.size());
  } else {
    add(v, "missing-field", "domain", Severity::kError, "header line not recognised");
  }
  ++i;
  if (i < lines.size()) {
    p.address_text = trim(lines[i]);
    p.address = Address::parse(p.address_text);
    ++i;
  }
  if (!p.address) add(v, "invalid-address", "address");

  static const std::vector<std::string> kKeys = {
      "URI", "Version", "Chain ID", "Nonce", "Issued At", "Expiration Time",
      "Not Before", "Request ID", "Resources"};
  auto key_of = [&](const std::string& line) -> std::string {
    for (const auto& k : kKeys) {
      if (line.rfind(k + ":", 0) == 0) return k;
    }
    return "";
  };

  // Optional statement between blank lines.
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i < lines.size() && key_of(lines[i]).empty()) {
    p.statement = lines[i];
    ++i;
  }
  std::map<std::string, std::string> fields;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::string k = key_of(lines[i]);
    if (k.empty()) {
      if (lines[i].rfind("- ", 0) == 0) continue;  // resource list item
      add(v, "invalid-value", "line" + std::to_string(i + 1), Severity::kWarning, lines[i]);
      continue;
    }
    fields[k] = trim(std::string_view(lines[i]).substr(k.size() + 1));
  }
  auto need = [&](const std::string& key, std::string& slot, const char* path) {
    auto it = fields.find(key);
    if (it == fields.end()) {
      add(v, "missing-field", path);
      return false;
    }
    slot = it->second;
    return true;
  };
  if (need("URI", p.uri, "uri") && uri_host(p.uri).empty()) {
    add(v, "invalid-uri", "uri", Severity::kError, p.uri);
  }
  if (need("Version", p.version, "version") && p.version != "1") {
    add(v, "invalid-value", "version", Severity::kError, p.version);
  }
  if (need("Chain ID", p.chain_id_text, "chainId")) {
    p.chain_id = parse_u256_dec(p.chain_id_text);
    if (!p.chain_id || *p.chain_id == 0) {
      p.chain_id.reset();
      add(v, "invalid-chainId", "chainId", Severity::kError, p.chain_id_text);
    }
  }
  if (need("Nonce", p.nonce, "nonce")) {
    bool alnum = std::all_of(p.nonce.begin(), p.nonce.end(),
                             [](unsigned char c) { return std::isalnum(c) != 0; });
    if (!alnum || p.nonce.size() < 8) add(v, "invalid-value", "nonce", Severity::kError, p.nonce);
  }
  if (need("Issued At", p.issued_at, "issuedAt") &&
      (p.issued_at.size() < 20 || p.issued_at[10] != 'T')) {
    add(v, "invalid-value", "issuedAt", Severity::kError, p.issued_at);
  }
  return r;
}

std::string render_eip4361(const Eip4361Payload& p) {
  std::ostringstream out;
  out << p.domain << kSiweHeaderSuffix << "\n" << p.address_text << "\n\n";
  if (!p.statement.empty()) out << p.statement << "\n\n";
  out << "URI: " << p.uri << "\n"
      << "Version: " << p.version << "\n"
      << "Chain ID: " << p.chain_id_text << "\n"
      << "Nonce: " << p.nonce << "\n"
      << "Issued At: " << p.issued_at;
  return out.str();
}

}  // namespace walletdiff::codec
