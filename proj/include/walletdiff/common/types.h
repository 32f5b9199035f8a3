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

#ifndef WALLETDIFF_COMMON_TYPES_H_
#define WALLETDIFF_COMMON_TYPES_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "walletdiff/common/hex.h"

namespace walletdiff {

using U256 = boost::multiprecision::uint256_t;
// Signed balance deltas. 257 bits would be exact; 256-bit magnitudes never
// exceed 2^255 in practice because supplies are bounded.
using I256 = boost::multiprecision::int256_t;

// Decimal or 0x-hex. Rejects empty input, signs, and values above 2^256-1.
std::optional<U256> parse_u256(std::string_view text);
std::optional<U256> parse_u256_dec(std::string_view text);
std::optional<U256> parse_u256_hex(std::string_view text);  // with or w/o 0x
std::string u256_dec(const U256& v);
std::string u256_hex(const U256& v);  // minimal 0x form, "0x0" for zero
std::string i256_dec(const I256& v);

// Big-endian 32-byte word <-> integer.
std::array<std::uint8_t, 32> u256_to_word(const U256& v);
U256 word_to_u256(const std::uint8_t* word);

U256 pow2(unsigned n);
U256 pow10(unsigned n);
U256 u256_max();

// Renders base units with `decimals` fractional digits, trailing zeros
// trimmed ("1.5", "100", "0.000001").
std::string format_units(const U256& amount, unsigned decimals);
// Parses "12.5" into base units; nullopt on excess precision or junk.
std::optional<U256> parse_units(std::string_view text, unsigned decimals);

class Address {
 public:
  Address() = default;
  explicit Address(const std::array<std::uint8_t, 20>& bytes) : bytes_(bytes) {}

  // Requires 0x + exactly 40 hex digits, any case.
  static std::optional<Address> parse(std::string_view text);
  // Throws Error("invalid-address") on malformed input.
  static Address from_string(std::string_view text);
  // Low 20 bytes of a 32-byte ABI word.
  static Address from_word(const std::uint8_t* word);

  std::string str() const;  // canonical lowercase 0x-form
  const std::array<std::uint8_t, 20>& bytes() const { return bytes_; }
  U256 as_u256() const;
  bool is_zero() const;

  auto operator<=>(const Address&) const = default;

 private:
  std::array<std::uint8_t, 20> bytes_{};
};

struct NetworkId {
  std::uint64_t value = 0;
  auto operator<=>(const NetworkId&) const = default;
};

inline constexpr NetworkId kMainnet{1};
inline constexpr NetworkId kSepolia{11155111};

// Calendar date used for label freshness and ENS expiry.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  static std::optional<Date> parse(std::string_view iso);  // YYYY-MM-DD
  std::string str() const;
  std::int64_t days_since_epoch() const;
  static Date from_days(std::int64_t days);
  Date plus_days(std::int64_t n) const { return from_days(days_since_epoch() + n); }

  auto operator<=>(const Date&) const = default;
};

}  // namespace walletdiff

#endif  // WALLETDIFF_COMMON_TYPES_H_
