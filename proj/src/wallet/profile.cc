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

#include "walletdiff/wallet/profile.h"

#include <algorithm>

#include "walletdiff/common/error.h"

namespace walletdiff::wallet {

namespace {

constexpr const char* kBad = "bad-profile";

void apply_settings(WalletProfile& p, const Json& s) {
  for (const auto& [key, v] : s.items()) {
    try {
      if (key == "hasSimulator") {
        p.has_simulator = v.get<bool>();
      } else if (key == "simHideEnvDependent") {
        p.sim_hide_env_dependent = v.get<bool>();
      } else if (key == "simHideStorageDependent") {
        p.sim_hide_storage_dependent = v.get<bool>();
      } else if (key == "simGasPriceDefault") {
        if (v.is_null()) {
          p.sim_gas_price.reset();
        } else {
          auto n = parse_u256(v.get<std::string>());
          if (!n) throw Error(kBad, "bad simGasPriceDefault");
          p.sim_gas_price = *n;
        }
      } else if (key == "simCoinbaseDefault") {
        if (v.is_null()) {
          p.sim_coinbase.reset();
        } else {
          p.sim_coinbase = Address::from_string(v.get<std::string>());
        }
      } else if (key == "rawSelectorMatching") {
        p.raw_selector_matching = v.get<bool>();
      } else if (key == "quirkSwitchNetworkOnMissingPrefix") {
        p.switch_network_on_unprefixed = v.get<bool>();
      } else if (key == "riskyLabelLagDays") {
        p.risky_label_lag_days = v.get<int>();
      } else if (key == "displayMode") {
        std::string m = v.get<std::string>();
        if (m == "keyValue") {
          p.display_mode = DisplayMode::kKeyValue;
        } else if (m == "rawJson") {
          p.display_mode = DisplayMode::kRawJson;
        } else {
          throw Error(kBad, "unknown displayMode " + m);
        }
      } else if (key == "displayedMessageFields") {
        p.displayed_message_fields = v.get<std::set<std::string>>();
      } else if (key == "escapeControlChars") {
        p.escape_control_chars = v.get<bool>();
      } else if (key == "listingShowsItemPrices") {
        p.listing_shows_item_prices = v.get<bool>();
      } else if (key == "metadataEditable") {
        p.metadata_editable = v.get<bool>();
      } else if (key == "ensMode") {
        std::string m = v.get<std::string>();
        if (m == "networkAware") {
          p.ens_mode = EnsMode::kNetworkAware;
        } else if (m == "mainnetOnly") {
          p.ens_mode = EnsMode::kMainnetOnly;
        } else {
          throw Error(kBad, "unknown ensMode " + m);
        }
      } else if (key == "ensAutoSuggest") {
        p.ens_auto_suggest = v.get<bool>();
      } else if (key == "tokenSearchMode") {
        std::string m = v.get<std::string>();
        if (m == "nameAndAddress") {
          p.token_search = TokenSearchMode::kNameAndAddress;
        } else if (m == "nameOnly") {
          p.token_search = TokenSearchMode::kNameOnly;
        } else {
          throw Error(kBad, "unknown tokenSearchMode " + m);
        }
      } else {
        throw Error(kBad, "unknown setting '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(kBad, "setting '" + key + "': " + e.what());
    }
  }
}

}  // namespace

std::string to_string(AlertLevel level) {
  switch (level) {
    case AlertLevel::kNone: return "none";
    case AlertLevel::kIdentification: return "identification";
    case AlertLevel::kNotification: return "notification";
    case AlertLevel::kAlert: return "alert";
    case AlertLevel::kBlock: return "block";
  }
  return "none";
}

AlertLevel parse_alert_level(std::string_view text) {
  for (AlertLevel l : {AlertLevel::kNone, AlertLevel::kIdentification,
                       AlertLevel::kNotification, AlertLevel::kAlert, AlertLevel::kBlock}) {
    if (to_string(l) == text) return l;
  }
  throw Error(kBad, "unknown alert level '" + std::string(text) + "'");
}

const std::vector<std::string>& rule_registry() {
  static const std::vector<std::string> kRules = {
      "eth-sign",
      "approval.approve",
      "approval.increaseAllowance",
      "approval.setApprovalForAll",
      "approval.permit",
      "approval.permit2Single",
      "approval.permit2Batch",
      "approval.permitForAll",
      "nft-listing",
      "deceptive-function",
      "risky-address",
      "chain-mismatch",
      "uri-mismatch",
      "malformed-message",
      "personal-sign-decode",
      "non-canonical-inputdata",
  };
  return kRules;
}

bool is_known_rule(std::string_view id) {
  const auto& r = rule_registry();
  return std::find(r.begin(), r.end(), id) != r.end();
}

AlertLevel WalletProfile::level_of(std::string_view rule) const {
  auto it = rules.find(std::string(rule));
  return it == rules.end() ? AlertLevel::kNone : it->second;
}

bool WalletProfile::shows_message_field(std::string_view path) const {
  if (displayed_message_fields.count("*")) return true;
  return displayed_message_fields.count(std::string(path)) != 0;
}

std::vector<WalletProfile> profiles_from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != "wallet-profile/1") {
    throw Error(kBad, "expected schema wallet-profile/1");
  }
  std::vector<WalletProfile> out;
  for (const auto& pj : require(doc, "profiles", kBad)) {
    WalletProfile p;
    if (pj.contains("extends")) {
      p = find_profile(out, pj["extends"].get<std::string>());
    } else {
      for (const auto& r : rule_registry()) p.rules[r] = AlertLevel::kAlert;
    }
    p.name = require_string(pj, "name", kBad);
    p.description = pj.value("description", "");
    p.expect_clean = pj.value("expectClean", false);
    p.injected_vector = pj.value("injectedVector", "");
    if (pj.contains("settings")) apply_settings(p, pj["settings"]);
    for (const auto& r : pj.value("disableRules", std::vector<std::string>{})) {
      if (!is_known_rule(r)) throw Error(kBad, "unknown rule '" + r + "'");
      p.rules.erase(r);
    }
    if (pj.contains("ruleLevels")) {
      for (const auto& [r, lv] : pj["ruleLevels"].items()) {
        if (r == "*") {
          for (auto& [_, level] : p.rules) level = parse_alert_level(lv.get<std::string>());
          continue;
        }
        if (!is_known_rule(r)) throw Error(kBad, "unknown rule '" + r + "'");
        p.rules[r] = parse_alert_level(lv.get<std::string>());
      }
    }
    for (const auto& existing : out) {
      if (existing.name == p.name) throw Error(kBad, "duplicate profile " + p.name);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<WalletProfile> load_profiles(const std::filesystem::path& path) {
  return profiles_from_json(read_json_file(path));
}

const WalletProfile& find_profile(const std::vector<WalletProfile>& profiles,
                                  std::string_view name) {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw Error("unknown-profile", std::string(name));
}

Json to_json(const WalletProfile& p) {
  Json rules = Json::object();
  for (const auto& [r, l] : p.rules) rules[r] = to_string(l);
  Json j{{"name", p.name},
         {"description", p.description},
         {"expectClean", p.expect_clean},
         {"hasSimulator", p.has_simulator},
         {"simHideEnvDependent", p.sim_hide_env_dependent},
         {"simHideStorageDependent", p.sim_hide_storage_dependent},
         {"rawSelectorMatching", p.raw_selector_matching},
         {"quirkSwitchNetworkOnMissingPrefix", p.switch_network_on_unprefixed},
         {"riskyLabelLagDays", p.risky_label_lag_days},
         {"displayMode", p.display_mode == DisplayMode::kKeyValue ? "keyValue" : "rawJson"},
         {"displayedMessageFields", p.displayed_message_fields},
         {"escapeControlChars", p.escape_control_chars},
         {"listingShowsItemPrices", p.listing_shows_item_prices},
         {"metadataEditable", p.metadata_editable},
         {"ensMode", p.ens_mode == EnsMode::kNetworkAware ? "networkAware" : "mainnetOnly"},
         {"ensAutoSuggest", p.ens_auto_suggest},
         {"tokenSearchMode",
          p.token_search == TokenSearchMode::kNameAndAddress ? "nameAndAddress" : "nameOnly"},
         {"rules", rules}};
  if (!p.injected_vector.empty()) j["injectedVector"] = p.injected_vector;
  j["simGasPriceDefault"] = p.sim_gas_price ? Json(u256_dec(*p.sim_gas_price)) : Json(nullptr);
  j["simCoinbaseDefault"] = p.sim_coinbase ? Json(p.sim_coinbase->str()) : Json(nullptr);
  return j;
}

}  // namespace walletdiff::wallet
