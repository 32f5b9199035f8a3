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

#include "walletdiff/common/types.h"

#include <chrono>
#include <cstdio>

#include "walletdiff/common/error.h"

namespace walletdiff {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::chrono::year_month_day civil(int y, int m, int d) {
  return std::chrono::year_month_day{std::chrono::year{y},
                                     std::chrono::month{static_cast<unsigned>(m)},
                                     std::chrono::day{static_cast<unsigned>(d)}};
}

}  // namespace

std::optional<U256> parse_u256_dec(std::string_view text) {
  if (!all_digits(text)) return std::nullopt;
  boost::multiprecision::uint512_t acc = 0;
  const boost::multiprecision::uint512_t limit = u256_max();
  for (char c : text) {
    acc = acc * 10 + static_cast<unsigned>(c - '0');
    if (acc > limit) return std::nullopt;
  }
  return static_cast<U256>(acc);
}

std::optional<U256> parse_u256_hex(std::string_view text) {
  text = strip_hex_prefix(text);
  if (text.empty()) return std::nullopt;
  // Leading zeros are allowed beyond 64 digits as long as the value fits.
  std::size_t first = text.find_first_not_of('0');
  if (first == std::string_view::npos) {
    for (char c : text) {
      if (!is_hex_digit(c)) return std::nullopt;
    }
    return U256(0);
  }
  if (text.size() - first > 64) return std::nullopt;
  U256 acc = 0;
  for (char c : text) {
    if (!is_hex_digit(c)) return std::nullopt;
    unsigned d = (c <= '9') ? c - '0' : (c | 0x20) - 'a' + 10;
    acc = (acc << 4) | d;
  }
  return acc;
}

std::optional<U256> parse_u256(std::string_view text) {
  if (has_hex_prefix(text)) return parse_u256_hex(text);
  return parse_u256_dec(text);
}

std::string u256_dec(const U256& v) { return v.str(); }

std::string u256_hex(const U256& v) {
  if (v == 0) return "0x0";
  auto word = u256_to_word(v);
  std::string h = to_hex(word, false);
  return "0x" + h.substr(h.find_first_not_of('0'));
}

std::string i256_dec(const I256& v) { return v.str(); }

std::array<std::uint8_t, 32> u256_to_word(const U256& v) {
  std::array<std::uint8_t, 32> out{};
  U256 x = v;
  for (int i = 31; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(x & 0xff);
    x >>= 8;
  }
  return out;
}

U256 word_to_u256(const std::uint8_t* word) {
  U256 acc = 0;
  for (int i = 0; i < 32; ++i) acc = (acc << 8) | word[i];
  return acc;
}

U256 pow2(unsigned n) { return n >= 256 ? U256(0) : U256(1) << n; }

U256 pow10(unsigned n) {
  U256 r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

U256 u256_max() { return ~U256(0); }

std::string format_units(const U256& amount, unsigned decimals) {
  std::string digits = amount.str();
  if (decimals == 0) return digits;
  if (digits.size() <= decimals) {
    digits.insert(0, decimals - digits.size() + 1, '0');
  }
  std::string whole = digits.substr(0, digits.size() - decimals);
  std::string frac = digits.substr(digits.size() - decimals);
  std::size_t end = frac.find_last_not_of('0');
  if (end == std::string::npos) return whole;
  return whole + "." + frac.substr(0, end + 1);
}

std::optional<U256> parse_units(std::string_view text, unsigned decimals) {
  std::size_t dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac)) return std::nullopt;
  std::string f(frac);
  while (!f.empty() && f.back() == '0') f.pop_back();
  if (f.size() > decimals) return std::nullopt;
  f.append(decimals - f.size(), '0');
  std::string joined = std::string(whole.empty() ? "0" : whole) + f;
  return parse_u256_dec(joined);
}

std::optional<Address> Address::parse(std::string_view text) {
  if (text.size() != 42 || !has_hex_prefix(text)) return std::nullopt;
  auto bytes = parse_hex(text);
  if (!bytes || bytes->size() != 20) return std::nullopt;
  std::array<std::uint8_t, 20> a{};
  std::copy(bytes->begin(), bytes->end(), a.begin());
  return Address(a);
}

Address Address::from_string(std::string_view text) {
  auto a = parse(text);
  if (!a) throw Error("invalid-address", std::string(text));
  return *a;
}

Address Address::from_word(const std::uint8_t* word) {
  std::array<std::uint8_t, 20> a{};
  std::copy(word + 12, word + 32, a.begin());
  return Address(a);
}

std::string Address::str() const { return to_hex(bytes_); }

U256 Address::as_u256() const {
  U256 acc = 0;
  for (std::uint8_t b : bytes_) acc = (acc << 8) | b;
  return acc;
}

bool Address::is_zero() const {
  for (std::uint8_t b : bytes_) {
    if (b != 0) return false;
  }
  return true;
}

std::optional<Date> Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  if (!all_digits(iso.substr(0, 4)) || !all_digits(iso.substr(5, 2)) ||
      !all_digits(iso.substr(8, 2))) {
    return std::nullopt;
  }
  Date d{std::stoi(std::string(iso.substr(0, 4))),
         std::stoi(std::string(iso.substr(5, 2))),
         std::stoi(std::string(iso.substr(8, 2)))};
  if (!civil(d.year, d.month, d.day).ok()) return std::nullopt;
  return d;
}

std::string Date::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::int64_t Date::days_since_epoch() const {
  return std::chrono::sys_days{civil(year, month, day)}.time_since_epoch().count();
}

Date Date::from_days(std::int64_t n) {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{n}}};
  return Date{static_cast<int>(ymd.year()), static_cast<int>(unsigned(ymd.month())),
              static_cast<int>(unsigned(ymd.day()))};
}

}  // namespace walletdiff
