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

#ifndef WALLETDIFF_WALLET_KEYWORDS_H_
#define WALLETDIFF_WALLET_KEYWORDS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace walletdiff::wallet {

// Words that mark an alert on a screen, matched case-insensitively.
inline constexpr std::array<std::string_view, 2> kAlertWords{"warning", "risk"};
// Marker of an incoming balance change besides a leading '+'.
inline constexpr std::string_view kIncomingWord = "receive";
// Marker of a predicted revert.
inline constexpr std::string_view kFailureWord = "fail";

inline constexpr std::string_view kAlertPrefix = "Warning: ";
inline constexpr std::string_view kSimulationWithheld =
    "Risk: simulation withheld for a state-dependent contract";
inline constexpr std::string_view kNoBalanceChanges = "No balance changes";

bool has_alert_word(std::string_view text);
bool predicts_failure(std::string_view text);

// One displayed balance change, "[+-]<number> <SYMBOL>" optionally followed
// by " (<asset>)".
struct DisplayedDelta {
  bool incoming = false;
  std::string amount;  // decimal text without sign
  std::string symbol;
  std::string asset;   // empty for the native currency
};

// Finds the first delta in `line`. A "receive" word also marks the change as
// incoming.
std::optional<DisplayedDelta> parse_delta(std::string_view line);
// "Balance change: +1.5 TKN (0x...)".
std::string render_delta(const DisplayedDelta& d);

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_KEYWORDS_H_
