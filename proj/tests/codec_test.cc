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

#include <string>
#include <vector>

#include "test_support.h"
#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/codec/inputdata.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/hex.h"
#include "walletdiff/common/rng.h"

namespace walletdiff::codec {
namespace {

const SignatureCatalog& catalog() { return SignatureCatalog::builtin(); }

constexpr const char* kRecipient = "0xbf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c";
constexpr const char* kSpender = "0x3d9819210a31b4961b30ef54be2aed79b9c9cd3b";

// Calldata produced by an independent head/tail encoder written in Python.
constexpr const char* kTransferOracle =
    "0xa9059cbb000000000000000000000000bf5efbe47be542ba6d44f4e59bad8f8f90b9dc4c"
    "00000000000000000000000000000000000000000000000000000000000f4240";
constexpr const char* kMixedOracle =
    "0x0000000000000000000000000000000000000000000000000000000000000007"
    "0000000000000000000000000000000000000000000000000000000000000080"
    "0000000000000000000000003d9819210a31b4961b30ef54be2aed79b9c9cd3b"
    "00000000000000000000000000000000000000000000000000000000000000c0"
    "000000000000000000000000000000000000000000000000000000000000000b"
    "68656c6c6f20776f726c64000000000000000000000000000000000000000000"
    "0000000000000000000000000000000000000000000000000000000000000003"
    "0000000000000000000000000000000000000000000000000000000000000001"
    "0000000000000000000000000000000000000000000000000000000000000002"
    "0000000000000000000000000000000000000000000000000000000000000003";
constexpr const char* kSetApprovalForAllOracle =
    "0xa22cb4650000000000000000000000003d9819210a31b4961b30ef54be2aed79b9c9cd3b"
    "0000000000000000000000000000000000000000000000000000000000000001";

TEST(Abi, EncodeMatchesReferenceEncoder) {
  const FunctionEntry* transfer = catalog().by_signature("transfer(address,uint256)");
  ASSERT_NE(transfer, nullptr);
  EXPECT_EQ(to_hex(encode_call(*transfer, Json::array({kRecipient, "1000000"}))), kTransferOracle);
  EXPECT_EQ(to_hex(encode_args({"uint256", "string", "address", "uint256[]"},
                               Json::array({7, "hello world", kSpender, {1, 2, 3}}))),
            kMixedOracle);
  const FunctionEntry* sa = catalog().by_signature("setApprovalForAll(address,bool)");
  ASSERT_NE(sa, nullptr);
  EXPECT_EQ(to_hex(encode_call(*sa, Json::array({kSpender, true}))), kSetApprovalForAllOracle);
}

TEST(Abi, EncodeRejectsOverflowAndBadTypes) {
  EXPECT_THROW(encode_args({"uint8"}, Json::array({"256"})), Error);
  EXPECT_THROW(AbiType::parse("tuple(uint256)"), Error);
}

Json sample_value(const std::string& type, Rng& rng) {
  AbiType t = AbiType::parse(type);
  auto scalar = [&](AbiType s) -> Json {
    switch (s.base) {
      case AbiType::Base::kAddress: {
        Bytes b(20);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
        return to_hex(b);
      }
      case AbiType::Base::kBool: return rng.coin();
      case AbiType::Base::kUint: return std::to_string(rng.below(s.bits >= 64 ? 1u << 30 : 200));
      case AbiType::Base::kFixedBytes: return to_hex(Bytes(s.bits / 8, 0xab));
      case AbiType::Base::kBytes: return "0x0102030405";
      case AbiType::Base::kString: return "text";
    }
    return nullptr;
  };
  if (!t.is_array) return scalar(t);
  AbiType elem = t;
  elem.is_array = false;
  return Json::array({scalar(elem), scalar(elem)});
}

TEST(Abi, DecodeRoundTripsEveryCatalogFunction) {
  Rng rng(11);
  for (const auto& fn : catalog().entries()) {
    SCOPED_TRACE(fn.signature);
    Json args = Json::array();
    for (const auto& t : fn.param_types) args.push_back(sample_value(t, rng));
    Bytes data = encode_call(fn, args);
    DecodedCall call = decode_call(data, catalog());
    ASSERT_TRUE(call.known());
    EXPECT_EQ(call.function->signature, fn.signature);
    ASSERT_EQ(call.args.size(), fn.param_types.size());
    // Re-encoding the decoded words reproduces the calldata.
    Json again = Json::array();
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      AbiType t = AbiType::parse(fn.param_types[i]);
      const AbiArg& a = call.args[i];
      if (t.is_array) {
        Json items = Json::array();
        for (const auto& w : a.items) {
          items.push_back(t.base == AbiType::Base::kAddress ? Json(Address::from_word(u256_to_word(w).data()).str())
                          : t.base == AbiType::Base::kBool ? Json(w != 0)
                                                           : Json(u256_dec(w)));
        }
        again.push_back(items);
      } else if (t.base == AbiType::Base::kAddress) {
        again.push_back(a.address().str());
      } else if (t.base == AbiType::Base::kBool) {
        again.push_back(a.word != 0);
      } else if (t.base == AbiType::Base::kUint) {
        again.push_back(u256_dec(a.word));
      } else if (t.base == AbiType::Base::kFixedBytes) {
        auto w = u256_to_word(a.word);
        again.push_back(to_hex(std::span<const std::uint8_t>(w.data(), t.bits / 8)));
      } else if (t.base == AbiType::Base::kBytes) {
        again.push_back(to_hex(a.data));
      } else {
        again.push_back(std::string(a.data.begin(), a.data.end()));
      }
    }
    EXPECT_EQ(encode_call(fn, again), data);
  }
}

TEST(Abi, UnknownSelectorDecodesToRawWords) {
  auto data = parse_hex("0xdeadbeef" + std::string(64, '0'));
  DecodedCall call = decode_call(*data, catalog());
  EXPECT_FALSE(call.known());
  EXPECT_EQ(call.function_name(), "unknown");
  EXPECT_EQ(call.args.size(), 1u);
}

TEST(Inputdata, NormalizesPrefixCaseAndDecimalTokens) {
  std::string upper = std::string(kTransferOracle).substr(2);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  EXPECT_EQ(normalize_inputdata(upper, catalog()), kTransferOracle);
  std::string tokenized = std::string("0xa9059cbb,") + kRecipient + ",1000000";
  EXPECT_EQ(normalize_inputdata(tokenized, catalog()), kTransferOracle);
  EXPECT_EQ(normalize_inputdata("", catalog()), "0x");
  EXPECT_TRUE(is_canonical_inputdata(kTransferOracle));
  EXPECT_FALSE(is_canonical_inputdata(upper));
}

TEST(Inputdata, NormalizeIsIdempotent) {
  for (std::string raw : {std::string(kTransferOracle).substr(2),
                          std::string("0xa9059cbb ") + kRecipient + " 1000000",
                          std::string("0X1249C58B"), std::string("")}) {
    std::string once = normalize_inputdata(raw, catalog());
    EXPECT_EQ(normalize_inputdata(once, catalog()), once) << raw;
  }
}

TEST(Inputdata, RejectsGarbage) {
  try {
    normalize_inputdata("0xa9059cbb,zz", catalog());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unnormalizable");
  }
  EXPECT_THROW(normalize_inputdata("0x123", catalog()), Error);
}

TEST(Approvals, UnlimitedThreshold) {
  EXPECT_TRUE(is_unlimited_amount(u256_max()));
  EXPECT_TRUE(is_unlimited_amount(pow2(255)));
  EXPECT_TRUE(is_unlimited_amount(pow2(128) - 1));
  EXPECT_TRUE(is_unlimited_amount(pow2(160) - 1));
  EXPECT_FALSE(is_unlimited_amount(pow2(127) - 1));
  EXPECT_FALSE(is_unlimited_amount(pow2(200)));
  EXPECT_FALSE(is_unlimited_amount(U256(1000)));
  EXPECT_FALSE(is_unlimited_amount(U256(0)));
}

std::optional<ApprovalSemantics> semantics_of(const std::string& sig, const Json& args) {
  const FunctionEntry* fn = catalog().by_signature(sig);
  EXPECT_NE(fn, nullptr) << sig;
  return approval_semantics(decode_call(encode_call(*fn, args), catalog()));
}

TEST(Approvals, SemanticEquivalenceOfMaxApproveAndOperatorGrant) {
  auto approve = semantics_of("approve(address,uint256)", Json::array({kSpender, u256_dec(u256_max())}));
  ASSERT_TRUE(approve);
  EXPECT_TRUE(approve->unlimited);
  EXPECT_EQ(approve->spender.str(), kSpender);
  auto all = semantics_of("setApprovalForAll(address,bool)", Json::array({kSpender, true}));
  ASSERT_TRUE(all);
  EXPECT_TRUE(all->unlimited);
  EXPECT_EQ(all->kind, ApprovalKind::kSetApprovalForAll);
  auto revoke = semantics_of("setApprovalForAll(address,bool)", Json::array({kSpender, false}));
  ASSERT_TRUE(revoke);
  EXPECT_FALSE(revoke->granted);
  auto small = semantics_of("approve(address,uint256)", Json::array({kSpender, "1000"}));
  ASSERT_TRUE(small);
  EXPECT_FALSE(small->unlimited);
  EXPECT_FALSE(semantics_of("transfer(address,uint256)", Json::array({kSpender, "1"})));
}

TEST(Approvals, EveryApprovalKindIsRecognised) {
  std::set<ApprovalKind> seen;
  Rng rng(5);
  for (const auto& fn : catalog().entries()) {
    Json args = Json::array();
    for (const auto& t : fn.param_types) args.push_back(sample_value(t, rng));
    auto s = approval_semantics(decode_call(encode_call(fn, args), catalog()));
    EXPECT_EQ(s.has_value(), fn.approval.has_value()) << fn.signature;
    if (s) seen.insert(s->kind);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(SigningTable, ReproducesFormatToMethodRows) {
  using M = SigningMethod;
  EXPECT_EQ(signing_methods_for("hash-string"), std::vector<M>{M::kEthSign});
  EXPECT_EQ(signing_methods_for("text-string"), std::vector<M>{M::kPersonalSign});
  EXPECT_EQ(signing_methods_for("eip-191"), (std::vector<M>{M::kPersonalSign, M::kEthSign}));
  EXPECT_EQ(signing_methods_for("eip-712"), std::vector<M>{M::kSignTypedDataV4});
  EXPECT_EQ(signing_methods_for("eip-4361"), std::vector<M>{M::kSignTypedDataV4});
  EXPECT_EQ(signing_methods_for("transaction"), std::vector<M>{M::kSendTransactions});
  EXPECT_EQ(to_string(M::kSendTransactions), "eth_sendTransactions");
  EXPECT_EQ(parse_signing_method("eth_sendTransaction"), M::kSendTransactions);
  try {
    signing_methods_for("eip-999");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown-format");
  }
  EXPECT_TRUE(is_valid_pairing(MessageFormat::kEip191, M::kEthSign));
  EXPECT_FALSE(is_valid_pairing(MessageFormat::kEip712, M::kPersonalSign));
}

TEST(PersonalSign, DecodesAndReportsFailures) {
  auto ok = decode_personal_sign({"0x48656c6c6f", "0xc0ffee254729296a45a3885639ac7e10f9d54979"});
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.text, "Hello");
  EXPECT_TRUE(ok.address);
  EXPECT_EQ(decode_personal_sign({"0x48656c6c6", ""}).failure, "odd-length");
  EXPECT_EQ(decode_personal_sign({"0xzz", ""}).failure, "non-hex");
  EXPECT_EQ(decode_personal_sign({"0xeda080", ""}).failure, "invalid-utf8");
  EXPECT_EQ(decode_personal_sign({"0x4801", ""}).failure, "unreadable");
}

TEST(PersonalSign, NeverThrowsOnArbitraryInput) {
  Rng rng(3);
  const std::string alphabet = "0123456789abcdefxX \x01\xff";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    std::size_t n = rng.below(24);
    for (std::size_t k = 0; k < n; ++k) s += alphabet[rng.below(alphabet.size())];
    EXPECT_NO_THROW(decode_personal_sign({s, s}));
  }
}

std::string mail_json() {
  Json doc = read_json_file(testing::data_dir() / "catalog" / "messages" / "eip712_mail.json");
  return doc["payload"]["typedData"].dump();
}

TEST(Eip712, ParsesTemplateCleanly) {
  Eip712Result r = parse_eip712(mail_json());
  EXPECT_FALSE(has_errors(r.violations));
  EXPECT_FALSE(r.payload.primary_type.empty());
  EXPECT_TRUE(r.payload.domain.chain_id);
}

TEST(Eip712, AcceptsVerifyContractSpellingWithInfo) {
  Json doc = Json::parse(mail_json());
  doc["domain"]["verifyContract"] = doc["domain"]["verifyingContract"];
  doc["domain"].erase("verifyingContract");
  Eip712Result r = parse_eip712(doc.dump());
  EXPECT_FALSE(has_errors(r.violations));
  ASSERT_TRUE(r.payload.domain.verifying_contract);
  bool info = false;
  for (const auto& v : r.violations) {
    info = info || (v.code == "nonstandard-field" && v.severity == Severity::kInfo);
  }
  EXPECT_TRUE(info);
}

TEST(Eip712, CanonicalFormIgnoresRadixAndCase) {
  Json doc = Json::parse(mail_json());
  Json hexed = doc;
  U256 chain = *json_to_u256(doc["domain"]["chainId"]);
  hexed["domain"]["chainId"] = u256_hex(chain);
  std::string vc = hexed["domain"]["verifyingContract"].get<std::string>();
  for (auto& c : vc) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  hexed["domain"]["verifyingContract"] = "0x" + vc.substr(2);
  EXPECT_EQ(canonical_eip712(parse_eip712(doc.dump())), canonical_eip712(parse_eip712(hexed.dump())));
}

TEST(Eip712, ReportsStructuralViolations) {
  Json doc = Json::parse(mail_json());
  doc["domain"]["chainId"] = "not-a-number";
  doc.erase("primaryType");
  Eip712Result r = parse_eip712(doc.dump());
  std::set<std::string> codes;
  for (const auto& v : r.violations) codes.insert(v.code);
  EXPECT_TRUE(codes.count("invalid-chainId"));
  EXPECT_TRUE(codes.count("missing-field"));
  try {
    parse_eip712("[1,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "malformed-json");
  }
}

std::string siwe_text() {
  Json doc = read_json_file(testing::data_dir() / "catalog" / "messages" / "eip4361_login.json");
  return doc["payload"]["text"].get<std::string>();
}

TEST(Eip4361, ParsesAndRendersRoundTrip) {
  Eip4361Result r = parse_eip4361(siwe_text());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.payload.domain, "app.example");
  EXPECT_EQ(r.payload.uri, "https://app.example/login");
  ASSERT_TRUE(r.payload.chain_id);
  EXPECT_EQ(*r.payload.chain_id, U256(11155111));
  EXPECT_EQ(render_eip4361(r.payload), siwe_text());
  EXPECT_EQ(uri_host(r.payload.uri), "app.example");
}

TEST(Eip4361, EveryDeviationIsAViolation) {
  std::string text = siwe_text();
  auto broken = text;
  broken.replace(broken.find("Chain ID: 11155111"), 18, "Chain ID: eleven");
  std::set<std::string> codes;
  for (const auto& v : parse_eip4361(broken).violations) codes.insert(v.code);
  EXPECT_TRUE(codes.count("invalid-chainId"));
  auto no_uri = text;
  no_uri.erase(no_uri.find("URI: "), no_uri.find("\nVersion") - no_uri.find("URI: ") + 1);
  EXPECT_FALSE(parse_eip4361(no_uri).violations.empty());
  EXPECT_NO_THROW(parse_eip4361(""));
  EXPECT_FALSE(parse_eip4361("").violations.empty());
}

TEST(Seed, JsonRoundTripKeepsPluralMethodSpelling) {
  Seed s = testing::load_seed("gasprice_branch_mint.json");
  EXPECT_EQ(s.tx().method, "eth_sendTransactions");
  Seed back = seed_from_json(to_json(s));
  EXPECT_EQ(to_json(back), to_json(s));
  EXPECT_EQ(format_seed_id(42), "seed-0042");
}

}  // namespace
}  // namespace walletdiff::codec
