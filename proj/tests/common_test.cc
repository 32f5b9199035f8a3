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

#include "walletdiff/common/error.h"
#include "walletdiff/common/hex.h"
#include "walletdiff/common/json_util.h"
#include "walletdiff/common/keccak.h"
#include "walletdiff/common/rng.h"
#include "walletdiff/common/types.h"

namespace walletdiff {
namespace {

std::string hex_of(const Hash256& h) { return to_hex(h, false); }

// Reference digests computed with pycryptodome's keccak (256-bit).
TEST(Keccak, MatchesReferenceDigests) {
  EXPECT_EQ(hex_of(keccak256(std::string_view(""))),
            "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
  EXPECT_EQ(hex_of(keccak256(std::string_view("abc"))),
            "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
  // 200 bytes spans more than one 136-byte block.
  EXPECT_EQ(hex_of(keccak256(std::string(200, 'a'))),
            "96ea54061def936c4be90b518992fdc6f12f535068a256229aca54267b4d084d");
}

TEST(Keccak, FunctionSelectorsMatchReference) {
  auto sel = [](std::string_view sig) { return to_hex(function_selector(sig), false); };
  EXPECT_EQ(sel("transfer(address,uint256)"), "a9059cbb");
  EXPECT_EQ(sel("approve(address,uint256)"), "095ea7b3");
  EXPECT_EQ(sel("setApprovalForAll(address,bool)"), "a22cb465");
  EXPECT_EQ(sel("transferFrom(address,address,uint256)"), "23b872dd");
  EXPECT_EQ(sel("increaseAllowance(address,uint256)"), "39509351");
  EXPECT_EQ(sel("permit(address,address,uint256,uint256,uint8,bytes32,bytes32)"), "d505accf");
  EXPECT_EQ(sel("mint()"), "1249c58b");
}

TEST(Hex, RoundTripAndRejects) {
  auto b = parse_hex("0x00ff10");
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (Bytes{0x00, 0xff, 0x10}));
  EXPECT_EQ(to_hex(*b), "0x00ff10");
  EXPECT_TRUE(parse_hex("00FF"));
  EXPECT_FALSE(parse_hex("0x0"));
  EXPECT_FALSE(parse_hex("0xzz"));
}

TEST(Address, ParsesToLowercaseAndRejectsBadLength) {
  auto a = Address::parse("0xC0FFEE254729296A45A3885639AC7E10F9D54979");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->str(), "0xc0ffee254729296a45a3885639ac7e10f9d54979");
  EXPECT_FALSE(Address::parse("0xc0ffee"));
  EXPECT_FALSE(Address::parse("c0ffee254729296a45a3885639ac7e10f9d5497900"));
}

TEST(Units, FormatAndParseRoundTrip) {
  EXPECT_EQ(format_units(U256(1500000), 6), "1.5");
  EXPECT_EQ(format_units(U256(0), 18), "0");
  for (unsigned decimals : {0u, 6u, 18u}) {
    for (U256 v : {U256(0), U256(1), U256(123456789), pow10(30) + 7}) {
      auto back = parse_units(format_units(v, decimals), decimals);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, v);
    }
  }
}

TEST(U256, HexAndDecimalParsing) {
  EXPECT_EQ(*parse_u256("0xff"), U256(255));
  EXPECT_EQ(*parse_u256("255"), U256(255));
  EXPECT_EQ(u256_hex(U256(0)), "0x0");
  EXPECT_EQ(u256_dec(u256_max()),
            "115792089237316195423570985008687907853269984665640564039457584007913129639935");
  EXPECT_FALSE(parse_u256_dec("12a"));
}

TEST(Rng, DerivedStreamsAreReproducibleAndSeparated) {
  Rng a = Rng::derive(7, "label");
  Rng b = Rng::derive(7, "label");
  Rng c = Rng::derive(7, "other");
  Rng d = Rng::derive(8, "label");
  std::uint64_t va = a.next();
  EXPECT_EQ(va, b.next());
  EXPECT_NE(va, c.next());
  EXPECT_NE(va, d.next());
}

TEST(Utf8, SequenceLength) {
  std::string s = "a\xc3\xa9\xe2\x82\xac\xf0\x9f\x98\x80";
  EXPECT_EQ(utf8_sequence_length(s, 0), 1u);
  EXPECT_EQ(utf8_sequence_length(s, 1), 2u);
  EXPECT_EQ(utf8_sequence_length(s, 3), 3u);
  EXPECT_EQ(utf8_sequence_length(s, 6), 4u);
  EXPECT_EQ(utf8_sequence_length("\xed\xa0\x80", 0), 0u);  // surrogate
  EXPECT_EQ(utf8_sequence_length("\xc0\xaf", 0), 0u);      // overlong
  EXPECT_EQ(utf8_sequence_length("\xe2\x82", 0), 0u);      // truncated
}

TEST(Utf8, RawBytesSurviveJson) {
  std::string raw = std::string("ok \xed\xa0\x80 \x01 end \xff", 13);
  Json j = map_strings(Json{{"text", raw}, {"list", {raw, 5}}}, escape_raw_bytes);
  std::string dumped = j.dump();  // throws on invalid UTF-8
  Json back = map_strings(Json::parse(dumped), restore_raw_bytes);
  EXPECT_EQ(back["text"].get<std::string>(), raw);
  EXPECT_EQ(back["list"][0].get<std::string>(), raw);
  EXPECT_EQ(back["list"][1].get<int>(), 5);
}

TEST(Utf8, ReplaceInvalid) {
  EXPECT_EQ(replace_invalid_utf8("a\xff" "b"), "a\xef\xbf\xbd" "b");
  EXPECT_EQ(replace_invalid_utf8("caf\xc3\xa9"), "caf\xc3\xa9");
}

TEST(JsonUtil, RequireNamesMissingKey) {
  Json j = {{"a", 1}};
  try {
    require(j, "b", "bad-thing");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-thing");
    EXPECT_NE(std::string(e.what()).find("b"), std::string::npos);
  }
}

TEST(JsonUtil, ReadMissingFileIsIoError) {
  try {
    read_json_file("/nonexistent/walletdiff.json");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "io-error");
    EXPECT_NE(std::string(e.what()).find("/nonexistent/walletdiff.json"), std::string::npos);
  }
}

TEST(Date, ParseAndArithmetic) {
  auto d = Date::parse("2025-03-15");
  ASSERT_TRUE(d);
  EXPECT_EQ(d->plus_days(17).str(), "2025-04-01");
  EXPECT_FALSE(Date::parse("2025-13-01"));
}

}  // namespace
}  // namespace walletdiff
