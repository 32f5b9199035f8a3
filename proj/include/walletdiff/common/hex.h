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

#ifndef WALLETDIFF_COMMON_HEX_H_
#define WALLETDIFF_COMMON_HEX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace walletdiff {

using Bytes = std::vector<std::uint8_t>;

// Lowercase hex, "0x"-prefixed unless `prefix` is false.
std::string to_hex(std::span<const std::uint8_t> bytes, bool prefix = true);

// Accepts an optional 0x/0X prefix and either case. Returns nullopt on odd
// length or any non-hex character.
std::optional<Bytes> parse_hex(std::string_view text);

bool is_hex_digit(char c);
bool has_hex_prefix(std::string_view text);
std::string_view strip_hex_prefix(std::string_view text);
std::string to_lower(std::string_view text);

}  // namespace walletdiff

#endif  // WALLETDIFF_COMMON_HEX_H_
