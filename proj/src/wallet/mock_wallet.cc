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

#include "walletdiff/wallet/mock_wallet.h"

#include <algorithm>
#include <cstdio>

#include "walletdiff/chain/execution.h"
#include "walletdiff/chain/listing.h"
#include "walletdiff/codec/inputdata.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"
#include "walletdiff/wallet/keywords.h"

namespace walletdiff::wallet {

namespace {

std::string hex_byte(std::uint8_t b) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", b);
  return buf;
}

std::string prefix_for(AlertLevel level) {
  switch (level) {
    case AlertLevel::kIdentification: return "Detected: ";
    case AlertLevel::kNotification: return "Notice: ";
    default: return std::string(kAlertPrefix);
  }
}

void collect_address_strings(const Json& j, std::vector<Address>& out) {
  if (j.is_string()) {
    if (auto a = Address::parse(j.get<std::string>())) out.push_back(*a);
  } else if (j.is_object() || j.is_array()) {
    for (const auto& v : j) collect_address_strings(v, out);
  }
}

// Raw JSON view of a payload. Bytes outside UTF-8 show as U+FFFD.
std::string raw_json(const Json& v) {
  return v.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattens a JSON message into (dotted path, value) pairs.
void flatten(const Json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    out.emplace_back(path, scalar_text(j));
  }
}

// Removes fields the profile does not display. Paths are "domain.x" and
// "message.a.b".
void filter_fields(Json& j, const std::string& path, const WalletProfile& p) {
  if (!j.is_object()) return;
  for (auto it = j.begin(); it != j.end();) {
    std::string sub = path + "." + it.key();
    if (!it.value().is_object() && !p.shows_message_field(sub)) {
      it = j.erase(it);
    } else {
      filter_fields(it.value(), sub, p);
      ++it;
    }
  }
}

std::string native_amount(const U256& wei, const std::string& symbol) {
  return format_units(wei, 18) + " " + symbol;
}

}  // namespace

std::string escape_for_display(std::string_view raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.size();) {
    auto b = static_cast<std::uint8_t>(raw[i]);
    if (b < 0x20 || b == 0x7f) {
      out += hex_byte(b);
      ++i;
    } else if (b < 0x80) {
      out += raw[i];
      ++i;
    } else if (std::size_t n = utf8_sequence_length(raw, i)) {
      out.append(raw.substr(i, n));
      i += n;
    } else {
      out += hex_byte(b);
      ++i;
    }
  }
  return out;
}

MockWallet::MockWallet(WalletProfile profile, const chain::ChainWorld& world,
                       const codec::SignatureCatalog& catalog, UiLayout layout)
    : profile_(std::move(profile)),
      world_(world),
      catalog_(catalog),
      navigator_(std::move(layout)) {
  session_.account = world_.wallet_account;
}

void MockWallet::reset(NetworkId network, std::string uri) {
  session_ = WalletSession{};
  session_.network = network;
  session_.connected_uri = std::move(uri);
  session_.account = world_.wallet_account;
  navigator_.reset();
}

// ---- security rules ---------------------------------------------------------

void MockWallet::hit(std::vector<RuleHit>& hits, const std::string& rule, std::string text) const {
  AlertLevel level = profile_.level_of(rule);
  if (level == AlertLevel::kNone) return;
  hits.push_back({rule, level, std::move(text)});
}

bool MockWallet::label_known(const Address& a) const {
  chain::AddressLabel l = chain::lookup_label(world_, a);
  if (l.label == chain::LabelKind::kClean || !l.labeled_at) return false;
  return l.labeled_at->plus_days(profile_.risky_label_lag_days) <= world_.as_of;
}

void MockWallet::check_addresses(std::vector<RuleHit>& hits,
                                 const std::vector<Address>& addresses) const {
  std::vector<Address> seen;
  for (const auto& a : addresses) {
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    if (label_known(a)) {
      hit(hits, "risky-address",
          "address " + a.str() + " is labeled " +
              chain::to_string(chain::lookup_label(world_, a).label));
    }
  }
}

std::vector<RenderedScreen> MockWallet::finish(std::vector<RuleHit> hits,
                                               std::vector<RenderedScreen> details) const {
  AlertLevel top = AlertLevel::kNone;
  for (const auto& h : hits) top = std::max(top, h.level);
  if (top == AlertLevel::kBlock) return {unchanged_screen("blocked")};

  RenderedScreen security;
  security.screen_id = "security";
  add_line(security, "Security check");
  if (hits.empty()) add_line(security, "No issues found", 1);
  for (const auto& h : hits) {
    if (h.level >= AlertLevel::kIdentification) add_line(security, prefix_for(h.level) + h.text, 1);
  }
  std::vector<RenderedScreen> out{security};
  for (auto& d : details) out.push_back(std::move(d));
  return out;
}

RenderedScreen MockWallet::unchanged_screen(const std::string& id) const {
  RenderedScreen s;
  s.screen_id = id;
  s.changed_from_previous = false;
  add_line(s, navigator_.current().title);
  return s;
}

// ---- transactions -----------------------------------------------------------

std::vector<RenderedScreen> MockWallet::submit_transaction(const TransactionSeed& tx) {
  if (profile_.switch_network_on_unprefixed && !tx.inputdata.empty() &&
      !has_hex_prefix(tx.inputdata)) {
    session_.network = kMainnet;
  }

  std::optional<codec::DecodedCall> call;
  std::string problem;
  try {
    Bytes data = codec::normalize_inputdata_bytes(tx.inputdata, catalog_);
    if (!data.empty()) call = codec::decode_call(data, catalog_);
  } catch (const Error& e) {
    problem = e.code();
  }
  bool canonical = codec::is_canonical_inputdata(tx.inputdata);
  const codec::DecodedCall* matched =
      call && (canonical || !profile_.raw_selector_matching) ? &*call : nullptr;

  std::vector<RuleHit> hits;
  if (!problem.empty()) {
    hit(hits, "non-canonical-inputdata", "inputdata could not be decoded (" + problem + ")");
  } else if (!canonical) {
    hit(hits, "non-canonical-inputdata", "inputdata is not in canonical hex form");
  }
  if (matched) {
    if (auto ap = codec::approval_semantics(*matched)) {
      std::string what = ap->amount ? u256_dec(*ap->amount) + " units" : "all tokens";
      std::string text = matched->function_name() + " grants " + ap->spender.str() +
                         " access to " + what + (ap->unlimited ? " (unlimited)" : "");
      hit(hits, "approval." + codec::to_string(ap->kind), text);
    }
    switch (codec::classify_function(*matched, catalog_)) {
      case codec::FunctionFamily::kNftListing:
        hit(hits, "nft-listing", matched->function_name() + " lists or transfers NFTs");
        break;
      case codec::FunctionFamily::kDeceptiveName:
        hit(hits, "deceptive-function",
            "function name " + matched->function_name() + " is common in scams");
        break;
      default:
        break;
    }
  }
  std::vector<Address> addresses{tx.to};
  if (call) {
    for (const auto& a : call->args) {
      if (a.semantic == codec::SemanticType::kAddress) addresses.push_back(a.address());
      if (a.type == "address[]") {
        for (const auto& item : a.items) {
          auto w = u256_to_word(item);
          addresses.push_back(Address::from_word(w.data()));
        }
      }
    }
  }
  check_addresses(hits, addresses);

  AlertLevel top = AlertLevel::kNone;
  for (const auto& h : hits) top = std::max(top, h.level);
  std::vector<RenderedScreen> details;
  if (profile_.has_simulator && top < AlertLevel::kAlert) details.push_back(simulate(tx));
  details.push_back(render_transaction(tx, call, !problem.empty()));
  return finish(std::move(hits), std::move(details));
}

RenderedScreen MockWallet::simulate(const TransactionSeed& tx) const {
  RenderedScreen s;
  s.screen_id = "simulation";
  add_line(s, "Simulation");
  if (world_.has_network(session_.network)) {
    const chain::NetworkState& net = world_.network(session_.network);
    auto b = net.behaviors.find(tx.to);
    if (b != net.behaviors.end() &&
        ((profile_.sim_hide_env_dependent && b->second.reads_environment()) ||
         (profile_.sim_hide_storage_dependent && b->second.reads_storage()))) {
      add_line(s, std::string(kSimulationWithheld), 1);
      return s;
    }
  }
  chain::ChainWorld copy = world_;
  try {
    chain::BlockEnv env = copy.network(session_.network).env;
    env.gas_price = profile_.sim_gas_price.value_or(tx.gas_price);
    if (profile_.sim_coinbase) env.coinbase = *profile_.sim_coinbase;
    chain::ExecutionOutcome o = chain::execute_transaction(copy, session_.network, env, tx, catalog_);
    if (!o.success()) {
      add_line(s, "Transaction will fail (" + o.revert_reason + ")", 1);
      return s;
    }
    bool any = false;
    for (const auto& d : o.deltas) {
      if (d.account != tx.from || d.amount == 0) continue;
      any = true;
      I256 mag = d.amount < 0 ? I256(-d.amount) : d.amount;
      DisplayedDelta shown{d.amount > 0, format_units(static_cast<U256>(mag), d.decimals),
                           d.symbol, d.asset == "native" ? "" : d.asset};
      add_line(s, render_delta(shown), 1);
    }
    if (!any) add_line(s, std::string(kNoBalanceChanges), 1);
  } catch (const Error& e) {
    add_line(s, "Transaction will fail (" + e.code() + ")", 1);
  }
  return s;
}

RenderedScreen MockWallet::render_transaction(const TransactionSeed& tx,
                                              const std::optional<codec::DecodedCall>& call,
                                              bool undecodable) const {
  RenderedScreen s;
  s.screen_id = "confirm";
  s.buttons = {{"Confirm", "confirm"}, {"Reject", "reject"}};
  std::string symbol = "ETH";
  std::string net_name = "network-" + std::to_string(session_.network.value);
  if (world_.has_network(session_.network)) {
    symbol = world_.network(session_.network).native_symbol;
    net_name = world_.network(session_.network).name;
  }
  if (profile_.display_mode == DisplayMode::kRawJson) {
    Json raw{{"from", tx.from.str()},
             {"to", tx.to.str()},
             {"value", u256_hex(tx.value)},
             {"data", tx.inputdata},
             {"chainId", u256_hex(U256(session_.network.value))}};
    add_line(s, display_text(raw_json(raw)));
    return s;
  }
  add_line(s, "Transaction request");
  add_line(s, "From: " + tx.from.str());
  add_line(s, "To: " + tx.to.str());
  add_line(s, "Network: " + net_name + " (chainId " + std::to_string(session_.network.value) + ")");
  add_line(s, "Value: " + native_amount(tx.value, symbol));
  if (undecodable) {
    add_line(s, "Data: " + display_text(tx.inputdata));
  } else if (call) {
    if (call->known()) {
      add_line(s, "Function: " + call->function_name());
      for (std::size_t i = 0; i < call->args.size(); ++i) {
        const auto& names = call->function->param_names;
        std::string name = i < names.size() ? names[i] : "arg" + std::to_string(i);
        add_line(s, name + ": " + call->args[i].display(), 1);
      }
    } else {
      add_line(s, "Function: unknown (" + to_hex(call->selector) + ")");
      for (std::size_t i = 0; i < call->args.size(); ++i) {
        add_line(s, "word" + std::to_string(i) + ": " + call->args[i].display(), 1);
      }
    }
  }
  return s;
}

// ---- messages ---------------------------------------------------------------

std::vector<RenderedScreen> MockWallet::submit_message(const MessageSeed& msg) {
  std::vector<RuleHit> hits;
  if (!codec::is_valid_pairing(msg.format, msg.method)) {
    hit(hits, "malformed-message",
        codec::to_string(msg.format) + " cannot be signed with " + codec::to_string(msg.method));
  }
  if (msg.method == codec::SigningMethod::kEthSign) {
    hit(hits, "eth-sign", "eth_sign can authorize any transaction");
  }
  std::string connected_host = codec::uri_host(session_.connected_uri);

  if (const auto* h = std::get_if<HashPayload>(&msg.payload)) {
    auto bytes = parse_hex(h->hash);
    if (!bytes || bytes->size() != 32) hit(hits, "malformed-message", "hash is not 32 bytes of hex");
  } else if (const auto* p = std::get_if<codec::PersonalSignPayload>(&msg.payload)) {
    auto d = codec::decode_personal_sign(*p);
    if (!d.ok) hit(hits, "personal-sign-decode", "message could not be decoded (" + d.failure + ")");
    if (d.address) check_addresses(hits, {*d.address});
  } else if (const auto* t = std::get_if<TypedDataPayload>(&msg.payload)) {
    try {
      codec::Eip712Result r = codec::parse_eip712(t->json);
      bool chain_bad = !r.payload.domain.chain_id;
      for (const auto& v : r.violations) {
        if (v.severity != codec::Severity::kError) continue;
        if (v.code == "invalid-chainId") {
          chain_bad = true;
        } else {
          hit(hits, "malformed-message", v.code + " at " + v.field);
        }
      }
      if (chain_bad) {
        hit(hits, "chain-mismatch", "typed data has no valid chain id");
      } else if (*r.payload.domain.chain_id != U256(session_.network.value)) {
        hit(hits, "chain-mismatch",
            "typed data is bound to chain " + u256_dec(*r.payload.domain.chain_id) +
                " but the wallet is on chain " + std::to_string(session_.network.value));
      }
      std::vector<Address> addresses;
      collect_address_strings(r.payload.domain_json, addresses);
      collect_address_strings(r.payload.message, addresses);
      check_addresses(hits, addresses);
      if (auto l = chain::analyze_listing(r.payload, world_, session_.network)) {
        if (l->underpriced()) {
          hit(hits, "nft-listing",
              "listing pays $" + chain::format_usd_micro(l->revenue_micro_usd) + " for items with floor $" +
                  chain::format_usd_micro(l->floor_micro_usd));
        }
      }
    } catch (const Error&) {
      hit(hits, "malformed-message", "typed data is not valid JSON");
    }
  } else if (const auto* w = std::get_if<SiwePayload>(&msg.payload)) {
    codec::Eip4361Result r = codec::parse_eip4361(w->text);
    bool chain_bad = false;
    bool uri_bad = false;
    for (const auto& v : r.violations) {
      if (v.severity != codec::Severity::kError) continue;
      if (v.code == "invalid-chainId" || v.field == "chainId") {
        chain_bad = true;
      } else if (v.code == "invalid-uri" || v.field == "uri") {
        uri_bad = true;
      } else {
        hit(hits, "malformed-message", v.code + " at " + v.field);
      }
    }
    if (chain_bad) {
      hit(hits, "chain-mismatch", "sign-in request has no valid chain id");
    } else if (r.payload.chain_id && *r.payload.chain_id != U256(session_.network.value)) {
      hit(hits, "chain-mismatch",
          "sign-in request names chain " + u256_dec(*r.payload.chain_id) +
              " but the wallet is on chain " + std::to_string(session_.network.value));
    }
    if (uri_bad) {
      hit(hits, "uri-mismatch", "sign-in request has no valid URI");
    } else if (codec::uri_host(r.payload.uri) != connected_host ||
               to_lower(r.payload.domain) != connected_host) {
      hit(hits, "uri-mismatch",
          "sign-in request for " + r.payload.uri + " does not match the connected site " +
              connected_host);
    }
    if (r.payload.address) check_addresses(hits, {*r.payload.address});
  }
  return finish(std::move(hits), {render_message(msg)});
}

std::string MockWallet::display_text(std::string_view raw) const {
  return profile_.escape_control_chars ? escape_for_display(raw) : std::string(raw);
}

RenderedScreen MockWallet::render_message(const MessageSeed& msg) const {
  RenderedScreen s;
  s.screen_id = "confirm";
  s.buttons = {{"Sign", "sign"}, {"Reject", "reject"}};
  bool raw = profile_.display_mode == DisplayMode::kRawJson;

  if (const auto* h = std::get_if<HashPayload>(&msg.payload)) {
    if (raw) {
      add_line(s, display_text(raw_json(Json{{"hash", h->hash}})));
    } else {
      add_line(s, "Signature request (" + codec::to_string(msg.method) + ")");
      add_line(s, "Sign hash: " + display_text(h->hash));
    }
  } else if (const auto* p = std::get_if<codec::PersonalSignPayload>(&msg.payload)) {
    if (raw) {
      add_line(s, display_text(raw_json(Json{{"challenge", p->challenge}, {"address", p->address}})));
      return s;
    }
    add_line(s, "Signature request (" + codec::to_string(msg.method) + ")");
    auto d = codec::decode_personal_sign(*p);
    if (d.ok) {
      std::size_t start = 0;
      std::string_view text = d.text;
      while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        add_line(s, "Message: " + display_text(line));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
      }
    } else if (profile_.level_of("personal-sign-decode") != AlertLevel::kNone) {
      add_line(s, "Message (hex): " + display_text(p->challenge));
    } else {
      auto bytes = parse_hex(p->challenge);
      std::string lossy = bytes ? std::string(bytes->begin(), bytes->end()) : p->challenge;
      add_line(s, "Message: " + display_text(lossy));
    }
    add_line(s, "Account: " + display_text(p->address));
  } else if (const auto* t = std::get_if<TypedDataPayload>(&msg.payload)) {
    Json doc = Json::parse(t->json, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      add_line(s, "Typed data: " + display_text(t->json));
      return s;
    }
    if (raw) {
      Json shown = doc;
      if (shown.contains("domain")) filter_fields(shown["domain"], "domain", profile_);
      if (shown.contains("message")) filter_fields(shown["message"], "message", profile_);
      add_line(s, display_text(raw_json(shown)));
      return s;
    }
    add_line(s, "Signature request (" + codec::to_string(msg.method) + ")");
    add_line(s, "Type: " + display_text(scalar_text(doc.value("primaryType", Json("")))));
    if (doc.contains("domain") && doc["domain"].is_object()) {
      const Json& d = doc["domain"];
      std::vector<std::pair<std::string, std::string>> fields;
      flatten(d, "", fields);
      for (const auto& [k, v] : fields) {
        if (!profile_.shows_message_field("domain." + k)) continue;
        std::string label = k == "chainId" ? "Chain ID"
                            : k == "verifyingContract" ? "Verifying contract"
                                                       : "Domain " + k;
        add_line(s, label + ": " + display_text(v));
      }
    }
    if (doc.contains("message")) {
      std::vector<std::pair<std::string, std::string>> fields;
      flatten(doc["message"], "", fields);
      for (const auto& [k, v] : fields) {
        if (profile_.shows_message_field("message." + k)) add_line(s, display_text(k + ": " + v), 1);
      }
    }
    try {
      codec::Eip712Result r = codec::parse_eip712_doc(doc);
      if (auto l = chain::analyze_listing(r.payload, world_, session_.network)) {
        std::string sym = world_.has_network(session_.network)
                              ? world_.network(session_.network).native_symbol
                              : "ETH";
        add_line(s, "Listing: " + std::to_string(l->items) + " item(s) for " +
                        native_amount(l->revenue_wei, sym));
        if (profile_.listing_shows_item_prices) {
          add_line(s, "Seller receives $" + chain::format_usd_micro(l->revenue_micro_usd) +
                          ", collection floor $" + chain::format_usd_micro(l->floor_micro_usd), 1);
        }
      }
    } catch (const Error&) {
    }
  } else if (const auto* w = std::get_if<SiwePayload>(&msg.payload)) {
    if (raw) {
      add_line(s, display_text(raw_json(Json{{"text", w->text}})));
      return s;
    }
    codec::Eip4361Result r = codec::parse_eip4361(w->text);
    const auto& p = r.payload;
    add_line(s, "Sign-in request: " + display_text(p.domain));
    add_line(s, "Account: " + display_text(p.address_text));
    if (!p.statement.empty()) add_line(s, "Statement: " + display_text(p.statement));
    add_line(s, "URI: " + display_text(p.uri));
    add_line(s, "Chain ID: " + display_text(p.chain_id_text));
    add_line(s, "Nonce: " + display_text(p.nonce));
    add_line(s, "Issued at: " + display_text(p.issued_at));
  }
  return s;
}

// ---- interactions -----------------------------------------------------------

std::string MockWallet::token_symbol(const chain::TokenContract& t) const {
  auto it = session_.token_overrides.find(t.address);
  if (it != session_.token_overrides.end() && it->second.symbol) return *it->second.symbol;
  return t.symbol;
}

unsigned MockWallet::token_decimals(const chain::TokenContract& t) const {
  auto it = session_.token_overrides.find(t.address);
  if (it != session_.token_overrides.end() && it->second.decimals) return *it->second.decimals;
  return t.decimals;
}

bool MockWallet::apply_input(const UiElement& element, const std::string& data,
                             RenderedScreen& out) {
  const chain::NetworkState* net =
      world_.has_network(session_.network) ? &world_.network(session_.network) : nullptr;
  const std::string& role = element.role;

  if (role == "recipient") {
    if (auto a = Address::parse(data)) {
      add_line(out, "Recipient: " + a->str());
      if (profile_.ens_auto_suggest) {
        NetworkId where = profile_.ens_mode == EnsMode::kMainnetOnly ? kMainnet : session_.network;
        std::string typed = to_lower(data);
        if (world_.has_network(where)) {
          for (const auto& [name, rec] : world_.network(where).ens) {
            if (name.rfind(typed, 0) != 0) continue;
            if (auto r = chain::resolve_ens(world_, where, name)) {
              add_line(out, "Suggestion: " + name + " -> " + r->str(), 1);
            }
          }
        }
      }
    } else if (data.size() > 4 && to_lower(data).ends_with(".eth")) {
      NetworkId where = profile_.ens_mode == EnsMode::kMainnetOnly ? kMainnet : session_.network;
      auto r = chain::resolve_ens(world_, where, data);
      add_line(out, "ENS: " + display_text(to_lower(data)) + " -> " + (r ? r->str() : "not found"));
    } else {
      add_line(out, "Recipient: invalid address");
    }
  } else if (role == "amount") {
    add_line(out, "Amount: " + display_text(data));
  } else if (role == "chain") {
    add_line(out, "Chain: " + display_text(data));
  } else if (role == "token-search") {
    std::string q = to_lower(data);
    bool any = false;
    if (net && !q.empty()) {
      for (const auto& [addr, tok] : net->tokens) {
        if (to_lower(token_symbol(tok)) != q && to_lower(tok.name).find(q) == std::string::npos) {
          continue;
        }
        any = true;
        std::string text = "Token: " + token_symbol(tok) + " (" + tok.name + ")";
        if (profile_.token_search == TokenSearchMode::kNameAndAddress) text += " " + addr.str();
        add_line(out, text);
      }
    }
    if (!any) add_line(out, "Token: no results");
  } else if (role == "token-symbol" || role == "token-decimals") {
    if (!element.token || !net || !net->tokens.count(*element.token)) {
      add_line(out, "Token: unavailable on this network");
      return true;
    }
    const chain::TokenContract& tok = net->tokens.at(*element.token);
    if (!profile_.metadata_editable) {
      add_line(out, "Notice: token metadata is read-only");
    } else if (role == "token-decimals") {
      auto n = parse_u256_dec(data);
      if (n && *n <= 36) {
        session_.token_overrides[tok.address].decimals = static_cast<unsigned>(*n);
      } else {
        add_line(out, "Notice: decimals must be a number up to 36");
      }
    } else {
      if (!data.empty() && data.size() <= 16 && escape_for_display(data) == data) {
        session_.token_overrides[tok.address].symbol = data;
      } else {
        add_line(out, "Notice: symbol must be 1 to 16 printable characters");
      }
    }
    auto bal = tok.balances.find(session_.account);
    U256 amount = bal == tok.balances.end() ? U256(0) : bal->second;
    add_line(out, "Balance: " + format_units(amount, token_decimals(tok)) + " " +
                      token_symbol(tok) + " (" + tok.address.str() + ")");
  } else {
    add_line(out, "Input: " + display_text(data));
  }
  return true;
}

std::vector<RenderedScreen> MockWallet::submit_interaction(const InteractionSeed& seed) {
  std::vector<RenderedScreen> out;
  for (const auto& step : seed.steps) {
    navigator_.reset();
    bool ok = !step.path.empty();
    for (std::size_t i = 0; ok && i < step.path.size(); ++i) {
      const UiElement* e = navigator_.current().find(step.path[i]);
      bool last = i + 1 == step.path.size();
      if (!e) {
        ok = false;
      } else if (!last || step.action == "click") {
        ok = navigator_.click(e->id);
      } else if (e->kind != ElementKind::kInput) {
        ok = false;
      }
    }
    if (!ok) {
      out.push_back(unchanged_screen("interaction"));
      break;
    }
    RenderedScreen s;
    s.screen_id = "interaction";
    add_line(s, navigator_.current().title);
    if (step.action == "input") {
      apply_input(*navigator_.current().find(step.path.back()), step.data, s);
    } else {
      for (const auto& e : navigator_.current().elements) s.buttons.push_back({e.label, e.id});
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace walletdiff::wallet
