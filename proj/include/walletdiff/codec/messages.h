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

#ifndef WALLETDIFF_CODEC_MESSAGES_H_
#define WALLETDIFF_CODEC_MESSAGES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff::codec {

enum class MessageFormat { kHashString, kTextString, kEip191, kEip712, kEip4361 };
enum class SigningMethod { kEthSign, kPersonalSign, kSignTypedDataV4, kSendTransactions };

std::string to_string(MessageFormat f);
std::string to_string(SigningMethod m);
// Throws Error("unknown-format").
MessageFormat parse_message_format(std::string_view text);
// Accepts the singular "eth_sendTransaction" as an alias. Throws
// Error("unknown-method").
SigningMethod parse_signing_method(std::string_view text);

// Signing methods that may carry data of the given format. Format names are
// "hash-string", "text-string", "eip-191", "eip-712", "eip-4361" and
// "transaction". Throws Error("unknown-format").
std::vector<SigningMethod> signing_methods_for(std::string_view format);
bool is_valid_pairing(MessageFormat format, SigningMethod method);

enum class Severity { kInfo, kWarning, kError };
std::string to_string(Severity s);

struct Violation {
  std::string code;   // missing-field, invalid-chainId, invalid-address, ...
  std::string field;  // dotted path, e.g. "domain.chainId"
  Severity severity = Severity::kError;
  std::string detail;
};

bool has_errors(const std::vector<Violation>& violations);

// ---- personal_sign ---------------------------------------------------------

struct PersonalSignPayload {
  std::string challenge;  // hex text expected to decode to readable UTF-8
  std::string address;    // address-shaped text, not validated on construction
};

struct PersonalSignDecode {
  bool ok = false;
  std::string text;     // decoded message when ok
  std::string failure;  // odd-length, non-hex, invalid-utf8, unreadable
  std::optional<Address> address;
};

// Never throws. Text containing C0 controls other than tab/newline/CR, or DEL,
// counts as unreadable.
PersonalSignDecode decode_personal_sign(const PersonalSignPayload& payload);
bool is_valid_utf8(std::string_view bytes);

// ---- EIP-712 ---------------------------------------------------------------

struct TypedField {
  std::string name;
  std::string type;
};

struct Eip712Domain {
  std::optional<std::string> name;
  std::optional<std::string> version;
  std::optional<std::string> salt;
  std::optional<U256> chain_id;
  std::optional<Address> verifying_contract;
};

struct Eip712Payload {
  std::map<std::string, std::vector<TypedField>> types;
  std::string primary_type;
  Eip712Domain domain;
  Json domain_json = Json::object();
  Json message = Json::object();
};

struct Eip712Result {
  Eip712Payload payload;
  std::vector<Violation> violations;
};

// Throws Error("malformed-json") when the text is not JSON or not an object.
// Structural problems are reported as violations and the payload is returned
// with whatever could be recovered. The domain key "verifyContract" is read as
// "verifyingContract" with an informational violation.
Eip712Result parse_eip712(std::string_view json_text);
Eip712Result parse_eip712_doc(const Json& doc);

// Canonical rendering used for equality checks: integers become decimal
// strings, addresses lowercase, object keys sorted.
std::string canonical_eip712(const Eip712Result& parsed);

// Accepts JSON numbers, decimal strings and 0x-hex strings.
std::optional<U256> json_to_u256(const Json& v);

// ---- EIP-4361 --------------------------------------------------------------

struct Eip4361Payload {
  std::string domain;
  std::string address_text;
  std::optional<Address> address;
  std::string statement;
  std::string uri;
  std::string version;
  std::string chain_id_text;
  std::optional<U256> chain_id;
  std::string nonce;
  std::string issued_at;
};

struct Eip4361Result {
  Eip4361Payload payload;
  std::vector<Violation> violations;
};

// Never throws; every deviation is a violation.
Eip4361Result parse_eip4361(std::string_view text);
std::string render_eip4361(const Eip4361Payload& p);

// Host part of an absolute URI ("https://app.example/login" -> "app.example").
std::string uri_host(std::string_view uri);

}  // namespace walletdiff::codec

#endif  // WALLETDIFF_CODEC_MESSAGES_H_
