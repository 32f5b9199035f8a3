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

#ifndef WALLETDIFF_COMMON_KECCAK_H_
#define WALLETDIFF_COMMON_KECCAK_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace walletdiff {

using Hash256 = std::array<std::uint8_t, 32>;

// Keccak-256 with the original 0x01 domain padding (Ethereum flavour, not
// FIPS-202 SHA3-256). Every selector and derived address goes through this.
Hash256 keccak256(std::span<const std::uint8_t> data);
Hash256 keccak256(std::string_view text);

// First four bytes of keccak256(signature), e.g. "transfer(address,uint256)".
std::array<std::uint8_t, 4> function_selector(std::string_view signature);

}  // namespace walletdiff

#endif  // WALLETDIFF_COMMON_KECCAK_H_
