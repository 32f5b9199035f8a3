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

#ifndef WALLETDIFF_WALLET_PROFILE_H_
#define WALLETDIFF_WALLET_PROFILE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff::wallet {

// How strongly a wallet reacts to a rule match, weakest first.
enum class AlertLevel { kNone, kIdentification, kNotification, kAlert, kBlock };
std::string to_string(AlertLevel level);
AlertLevel parse_alert_level(std::string_view text);  // throws Error("bad-profile")

// Security checks a mock wallet can run. Ids are stable and used in profile
// files ("eth-sign", "approval.permit2Batch", ...).
const std::vector<std::string>& rule_registry();
bool is_known_rule(std::string_view id);

enum class DisplayMode { kKeyValue, kRawJson };
enum class EnsMode { kNetworkAware, kMainnetOnly };
enum class TokenSearchMode { kNameAndAddress, kNameOnly };

struct WalletProfile {
  std::string name;
  std::string description;
  bool expect_clean = false;         // a correct wallet: no findings expected
  std::string injected_vector;       // the single vector this profile seeds, if any

  // Simulator.
  bool has_simulator = true;
  bool sim_hide_env_dependent = true;      // withhold sims of env-reading contracts
  bool sim_hide_storage_dependent = true;  // withhold sims of state-dependent contracts
  std::optional<U256> sim_gas_price;       // nullopt: use the transaction's gas price
  std::optional<Address> sim_coinbase;     // nullopt: use the network's coinbase

  // Security rules.
  std::map<std::string, AlertLevel> rules;
  bool raw_selector_matching = false;  // rules only see byte-exact canonical selectors
  bool switch_network_on_unprefixed = false;  // moves the session to mainnet silently
  int risky_label_lag_days = 0;        // labels younger than this are unknown

  // Rendering.
  DisplayMode display_mode = DisplayMode::kKeyValue;
  std::set<std::string> displayed_message_fields{"*"};  // dotted paths or "*"
  bool escape_control_chars = true;
  bool listing_shows_item_prices = true;

  // Interactions.
  bool metadata_editable = false;
  EnsMode ens_mode = EnsMode::kNetworkAware;
  bool ens_auto_suggest = false;
  TokenSearchMode token_search = TokenSearchMode::kNameAndAddress;

  AlertLevel level_of(std::string_view rule) const;
  bool shows_message_field(std::string_view path) const;
};

// Profiles file: {"schema": "wallet-profile/1", "profiles": [...]}. Each profile
// may name a profile defined earlier in "extends", then apply "settings",
// "disableRules" and "ruleLevels" on top. Throws Error("bad-profile").
std::vector<WalletProfile> load_profiles(const std::filesystem::path& path);
std::vector<WalletProfile> profiles_from_json(const Json& doc);
const WalletProfile& find_profile(const std::vector<WalletProfile>& profiles,
                                  std::string_view name);  // throws unknown-profile

Json to_json(const WalletProfile& profile);

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_PROFILE_H_
