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

#include "walletdiff/wallet/keywords.h"

#include <regex>

#include "walletdiff/common/hex.h"

namespace walletdiff::wallet {

bool has_alert_word(std::string_view text) {
  std::string lower = to_lower(text);
  for (std::string_view w : kAlertWords) {
    if (lower.find(w) != std::string::npos) return true;
  }
  return false;
}

bool predicts_failure(std::string_view text) {
  return to_lower(text).find(kFailureWord) != std::string::npos;
}

std::optional<DisplayedDelta> parse_delta(std::string_view line) {
  static const std::regex pattern(
      R"(([+-])([0-9]+(?:\.[0-9]+)?) ([A-Za-z0-9_.$-]+)(?: \((0x[0-9a-fA-F]{40})\))?)");
  std::string text(line);
  std::smatch m;
  if (!std::regex_search(text, m, pattern)) return std::nullopt;
  DisplayedDelta d;
  d.incoming = m[1] == "+" || to_lower(text).find(kIncomingWord) != std::string::npos;
  d.amount = m[2];
  d.symbol = m[3];
  d.asset = m[4].matched ? to_lower(m[4].str()) : "";
  return d;
}

std::string render_delta(const DisplayedDelta& d) {
  std::string text = std::string("Balance change: ") + (d.incoming ? "+" : "-") + d.amount + " " +
                     d.symbol;
  if (!d.asset.empty()) text += " (" + d.asset + ")";
  return text;
}

}  // namespace walletdiff::wallet
