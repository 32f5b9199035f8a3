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

#include "walletdiff/verifier/verifier.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "walletdiff/chain/execution.h"
#include "walletdiff/chain/listing.h"
#include "walletdiff/codec/inputdata.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"
#include "walletdiff/wallet/keywords.h"
#include "walletdiff/wallet/mock_wallet.h"

namespace walletdiff::verify {

namespace {

using wallet::RenderedScreen;

constexpr const char* kPrecedence[] = {
    "formatMutant", "ethSign",       "personalSignDecode", "chainIdUriMismatch",
    "nftListing",   "deceptiveName", "approvalFamily",     "labeledAddress"};

const std::map<std::string, std::string>& pattern_reasons() {
  static const std::map<std::string, std::string> kMap = {
      {"Dangerous eth_sign", "ethSign"},
      {"Overlooked Approval", "approvalFamily"},
      {"NFT listing", "nftListing"},
      {"Deceptive Function Name", "deceptiveName"},
      {"Risky address", "labeledAddress"},
      {"Unintended Authorization", "chainIdUriMismatch"},
  };
  return kMap;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

// Text after "<prefix>" when the line starts with it.
std::optional<std::string> after(std::string_view line, std::string_view prefix) {
  if (!starts_with(line, prefix)) return std::nullopt;
  return std::string(line.substr(prefix.size()));
}

bool labeled(const chain::ChainWorld& world, const Address& a) {
  chain::AddressLabel l = chain::lookup_label(world, a);
  return l.label != chain::LabelKind::kClean && l.labeled_at && *l.labeled_at <= world.as_of;
}

void collect_addresses(const Json& j, std::vector<Address>& out) {
  if (j.is_string()) {
    if (auto a = Address::parse(j.get<std::string>())) out.push_back(*a);
  } else if (j.is_object() || j.is_array()) {
    for (const auto& v : j) collect_addresses(v, out);
  }
}

std::optional<codec::DecodedCall> lenient_decode(const TransactionSeed& tx,
                                                 const codec::SignatureCatalog& catalog,
                                                 bool* undecodable) {
  *undecodable = false;
  try {
    Bytes data = codec::normalize_inputdata_bytes(tx.inputdata, catalog);
    if (data.empty()) return std::nullopt;
    return codec::decode_call(data, catalog);
  } catch (const Error&) {
    *undecodable = true;
    return std::nullopt;
  }
}

std::vector<Address> call_addresses(const codec::DecodedCall& call) {
  std::vector<Address> out;
  for (const auto& a : call.args) {
    if (a.semantic == codec::SemanticType::kAddress) out.push_back(a.address());
    if (a.type == "address[]") {
      for (const auto& item : a.items) {
        auto w = u256_to_word(item);
        out.push_back(Address::from_word(w.data()));
      }
    }
  }
  return out;
}

SenderOutcome sender_view(const chain::ExecutionOutcome& o, const Address& sender) {
  SenderOutcome out;
  out.success = o.success();
  if (!out.success) return out;
  for (const auto& d : o.deltas) {
    if (d.account == sender && d.amount != 0) out.deltas.emplace_back(d.asset, d.amount);
  }
  std::sort(out.deltas.begin(), out.deltas.end());
  return out;
}

std::string describe(const SenderOutcome& o) {
  if (!o.success) return "revert";
  if (o.deltas.empty()) return "success, no balance changes";
  std::string out = "success";
  for (const auto& [asset, amount] : o.deltas) {
    out += ", " + asset + " " + (amount > 0 ? "+" : "") + i256_dec(amount);
  }
  return out;
}

bool same_outcome(const SenderOutcome& shown, const SenderOutcome& truth, double tolerance) {
  if (shown.success != truth.success) return false;
  if (!shown.success) return true;
  if (shown.deltas.size() != truth.deltas.size()) return false;
  for (std::size_t i = 0; i < shown.deltas.size(); ++i) {
    const auto& [sa, sv] = shown.deltas[i];
    const auto& [ta, tv] = truth.deltas[i];
    if (sa != ta || (sv > 0) != (tv > 0)) return false;
    if (sv == tv) continue;
    if (tolerance <= 0) return false;
    I256 diff = sv > tv ? I256(sv - tv) : I256(tv - sv);
    I256 mag = tv < 0 ? I256(-tv) : tv;
    if (static_cast<long double>(diff) > tolerance * static_cast<long double>(mag)) return false;
  }
  return true;
}

// Decimals and symbol for an asset on the network; native uses 18.
std::optional<unsigned> asset_decimals(const chain::NetworkState& net, const std::string& asset) {
  if (asset == "native") return 18;
  auto a = Address::parse(asset);
  if (!a) return std::nullopt;
  if (auto t = net.tokens.find(*a); t != net.tokens.end()) return t->second.decimals;
  if (net.nfts.count(*a)) return 0;
  return std::nullopt;
}

OracleVerdict verdict(OracleKind oracle, std::string kind, std::string expectation,
                      std::string observed, bool violated, const Seed& seed,
                      const RenderedScreen* screen) {
  OracleVerdict v;
  v.oracle = oracle;
  v.kind = std::move(kind);
  v.expectation = std::move(expectation);
  v.observed = std::move(observed);
  v.violated = violated;
  v.seed_ref = seed.id;
  if (screen) v.screen_evidence = *screen;
  return v;
}

const RenderedScreen* find_screen(const std::vector<RenderedScreen>& screens,
                                  std::string_view id) {
  for (const auto& s : screens) {
    if (s.screen_id == id) return &s;
  }
  return nullptr;
}

bool contains_ci(const std::vector<std::string>& lines, std::string_view needle) {
  std::string n = to_lower(needle);
  return std::any_of(lines.begin(), lines.end(),
                     [&](const std::string& l) { return to_lower(l).find(n) != std::string::npos; });
}

bool unreadable(std::string_view line) {
  for (char c : line) {
    auto b = static_cast<unsigned char>(c);
    if (b < 0x20 || b == 0x7f) return true;
  }
  return !codec::is_valid_utf8(line);
}

// Fields a confirmation screen must show for the seed, as (label, text)
// pairs. Each text must appear on some line.
std::vector<std::pair<std::string, std::string>> required_texts(const Seed& seed,
                                                                const OracleContext& ctx,
                                                                bool* skip) {
  std::vector<std::pair<std::string, std::string>> out;
  *skip = false;
  if (seed.kind() == SeedKind::kTransaction) {
    const TransactionSeed& tx = seed.tx();
    out.emplace_back("sender", "From: " + tx.from.str());
    out.emplace_back("recipient", "To: " + tx.to.str());
    out.emplace_back("value", "Value: ");
    out.emplace_back("chainId", "(chainId ");
    bool undecodable = false;
    if (auto call = lenient_decode(tx, ctx.catalog, &undecodable); call && call->known()) {
      for (std::size_t i = 0; i < call->args.size(); ++i) {
        if (call->args[i].semantic != codec::SemanticType::kAddress) continue;
        const auto& names = call->function->param_names;
        std::string name = i < names.size() ? names[i] : "arg" + std::to_string(i);
        out.emplace_back(name, call->args[i].address().str());
      }
    }
    return out;
  }
  const MessageSeed& msg = seed.msg();
  if (const auto* p = std::get_if<codec::PersonalSignPayload>(&msg.payload)) {
    if (!codec::decode_personal_sign(*p).ok) {
      *skip = true;
      return out;
    }
    out.emplace_back("sender", "Account: ");
  } else if (const auto* t = std::get_if<TypedDataPayload>(&msg.payload)) {
    Json doc = Json::parse(t->json, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      *skip = true;
      return out;
    }
    if (doc.contains("domain") && doc["domain"].is_object() && doc["domain"].contains("chainId")) {
      out.emplace_back("chainId", "Chain ID: ");
    }
    std::vector<Address> addresses;
    if (doc.contains("domain")) collect_addresses(doc["domain"], addresses);
    if (doc.contains("message")) collect_addresses(doc["message"], addresses);
    for (const auto& a : addresses) out.emplace_back("address", a.str());
  } else if (std::holds_alternative<SiwePayload>(msg.payload)) {
    out.emplace_back("uri", "URI: ");
    out.emplace_back("chainId", "Chain ID: ");
    out.emplace_back("sender", "Account: ");
  }
  return out;
}

void clarity_checks(const Seed& seed, const std::vector<RenderedScreen>& screens,
                    const OracleContext& ctx, std::vector<OracleVerdict>& out) {
  const RenderedScreen* confirm = find_screen(screens, "confirm");
  if (!confirm) return;
  bool skip = false;
  auto required = required_texts(seed, ctx, &skip);
  if (skip) return;
  std::vector<std::string> lines = extract_text(*confirm);
  for (const auto& l : lines) {
    if (starts_with(l, "{") || starts_with(l, "[")) {
      out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "unreadableOrMissingText",
                            "request shown as labeled fields", "raw JSON line: " + l.substr(0, 80),
                            true, seed, confirm));
      return;
    }
    if (unreadable(l)) {
      out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "unreadableOrMissingText",
                            "printable text on the confirmation screen",
                            "unreadable characters in: " + wallet::escape_for_display(l), true, seed, confirm));
      return;
    }
  }
  for (const auto& [label, text] : required) {
    bool found = contains_ci(lines, text);
    if (!found) {
      out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "unreadableOrMissingText",
                            label + " shown as '" + text + "'", label + " missing", true, seed,
                            confirm));
      return;
    }
  }
  out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "confirmationClarity",
                        "important fields shown readably", "all present", false, seed, confirm));
}

}  // namespace

// ---- serialisation ----------------------------------------------------------

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::kSimulatorAccuracy: return "simulatorAccuracy";
    case OracleKind::kAlertReliability: return "alertReliability";
    case OracleKind::kUiCorrectnessClarity: return "uiCorrectnessClarity";
  }
  return "";
}

OracleKind parse_oracle_kind(std::string_view text) {
  for (OracleKind k : {OracleKind::kSimulatorAccuracy, OracleKind::kAlertReliability,
                       OracleKind::kUiCorrectnessClarity}) {
    if (to_string(k) == text) return k;
  }
  throw Error("unknown-oracle", std::string(text));
}

Json to_json(const OracleVerdict& v) {
  Json j{{"oracle", to_string(v.oracle)},
         {"kind", v.kind},
         {"expectation", v.expectation},
         {"observed", v.observed},
         {"violated", v.violated},
         {"seedRef", v.seed_ref}};
  j["screenEvidence"] = v.screen_evidence ? wallet::to_json(*v.screen_evidence) : Json(nullptr);
  return j;
}

Json to_json(const AttackVectorFinding& f) {
  Json verdicts = Json::array();
  for (const auto& v : f.verdicts) verdicts.push_back(to_json(v));
  Json lineage{{"seed", f.seed_id}};
  if (!f.parent.empty()) {
    lineage["parent"] = f.parent;
    lineage["strategy"] = f.strategy;
  }
  return Json{{"vector", f.vector},
              {"profile", f.profile},
              {"lineage", lineage},
              {"verdicts", verdicts}};
}

// ---- screen text ------------------------------------------------------------

std::vector<std::string> extract_text(const RenderedScreen& screen) {
  std::vector<const wallet::ScreenLine*> order;
  for (const auto& l : screen.lines) order.push_back(&l);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return std::pair(a->region.y, a->region.x) < std::pair(b->region.y, b->region.x);
  });
  std::vector<std::string> out;
  for (const auto* l : order) out.push_back(l->text);
  return out;
}

// ---- trusted tokens ---------------------------------------------------------

std::vector<TrustedToken> trusted_tokens_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != "trusted-tokens/1") {
    throw Error("bad-catalog", "trusted token list must have schema trusted-tokens/1");
  }
  std::vector<TrustedToken> out;
  for (const auto& t : require(j, "tokens", "bad-catalog")) {
    TrustedToken tok;
    const Json& n = require(t, "network", "bad-catalog");
    if (!n.is_number_unsigned()) throw Error("bad-catalog", "token network must be a number");
    tok.network = NetworkId{n.get<std::uint64_t>()};
    tok.symbol = require_string(t, "symbol", "bad-catalog");
    tok.name = t.value("name", "");
    auto a = Address::parse(require_string(t, "address", "bad-catalog"));
    if (!a) throw Error("bad-catalog", "bad trusted token address");
    tok.address = *a;
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<TrustedToken> load_trusted_tokens(const std::filesystem::path& path) {
  return trusted_tokens_from_json(read_json_file(path));
}

// ---- simulator oracle -------------------------------------------------------

SenderOutcome single_transaction_truth(const TransactionSeed& tx, const OracleContext& ctx) {
  if (!ctx.world.has_network(tx.chain_id)) return SenderOutcome{false, {}};
  chain::ChainWorld copy = ctx.world;
  chain::BlockEnv env = copy.network(tx.chain_id).env;
  env.gas_price = tx.gas_price;
  try {
    return sender_view(chain::execute_transaction(copy, tx.chain_id, env, tx, ctx.catalog),
                       tx.from);
  } catch (const Error&) {
    return SenderOutcome{false, {}};
  }
}

SenderOutcome block_truth(const TransactionSeed& tx, const OracleContext& ctx) {
  if (!ctx.world.has_network(tx.chain_id)) return SenderOutcome{false, {}};
  chain::ChainWorld copy = ctx.world;
  std::vector<TransactionSeed> mempool;
  for (const auto& p : copy.network(tx.chain_id).mempool) {
    if (p.tx.from != tx.from) mempool.push_back(p.tx);
  }
  mempool.push_back(tx);
  try {
    chain::BlockResult r = chain::form_and_execute_block(copy, tx.chain_id, mempool, ctx.catalog);
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      if (r.order[i] == mempool.size() - 1) return sender_view(r.outcomes[i], tx.from);
    }
  } catch (const Error&) {
  }
  return SenderOutcome{false, {}};
}

std::vector<OracleVerdict> oracle_simulator(const Seed& seed,
                                            const std::vector<RenderedScreen>& screens,
                                            const OracleContext& ctx) {
  if (seed.kind() != SeedKind::kTransaction) return {};
  const RenderedScreen* sim = find_screen(screens, "simulation");
  if (!sim) return {};
  const TransactionSeed& tx = seed.tx();
  auto lines = extract_text(*sim);
  if (!lines.empty()) lines.erase(lines.begin());  // title

  SenderOutcome shown;
  bool withheld = false;
  std::string bad_line;
  for (const auto& l : lines) {
    if (l == wallet::kSimulationWithheld) {
      withheld = true;
    } else if (wallet::predicts_failure(l)) {
      shown.success = false;
    } else if (l == wallet::kNoBalanceChanges) {
    } else if (auto d = wallet::parse_delta(l)) {
      std::string asset = d->asset.empty() ? "native" : d->asset;
      std::optional<unsigned> decimals;
      if (ctx.world.has_network(tx.chain_id)) {
        decimals = asset_decimals(ctx.world.network(tx.chain_id), asset);
      }
      auto amount = decimals ? parse_units(d->amount, *decimals) : std::nullopt;
      if (!amount) {
        bad_line = l;
        break;
      }
      I256 v = static_cast<I256>(*amount);
      shown.deltas.emplace_back(asset, d->incoming ? v : I256(-v));
    } else {
      bad_line = l;
      break;
    }
  }
  if (!bad_line.empty()) {
    return {verdict(OracleKind::kSimulatorAccuracy, "unparseableDisplay",
                    "parseable simulation display", "unrecognised line: " + bad_line, true, seed,
                    sim)};
  }
  if (withheld) {
    return {verdict(OracleKind::kSimulatorAccuracy, "simulationWithheld",
                    "simulation matches execution", "simulation withheld", false, seed, sim)};
  }
  if (!shown.success) shown.deltas.clear();
  std::sort(shown.deltas.begin(), shown.deltas.end());

  SenderOutcome single = single_transaction_truth(tx, ctx);
  if (!same_outcome(shown, single, ctx.sim_relative_tolerance)) {
    return {verdict(OracleKind::kSimulatorAccuracy, "envDefault",
                    "single-transaction execution: " + describe(single),
                    "simulation shows: " + describe(shown), true, seed, sim)};
  }
  SenderOutcome block = block_truth(tx, ctx);
  if (!same_outcome(single, block, 0.0)) {
    return {verdict(OracleKind::kSimulatorAccuracy, "blockContext",
                    "block execution: " + describe(block),
                    "simulation shows: " + describe(shown), true, seed, sim)};
  }
  return {verdict(OracleKind::kSimulatorAccuracy, "simulationAgreement",
                  "simulation matches execution: " + describe(single),
                  "simulation shows: " + describe(shown), false, seed, sim)};
}

// ---- alert oracle -----------------------------------------------------------

std::vector<std::string> alert_reasons(const Seed& seed, const wallet::WalletSession& session,
                                       const OracleContext& ctx) {
  std::set<std::string> reasons;
  const chain::ChainWorld& world = ctx.world;
  std::vector<Address> addresses;

  if (seed.kind() == SeedKind::kTransaction) {
    const TransactionSeed& tx = seed.tx();
    bool undecodable = false;
    auto call = lenient_decode(tx, ctx.catalog, &undecodable);
    bool has_data = !tx.inputdata.empty() && tx.inputdata != "0x";
    if (has_data && (undecodable || !codec::is_canonical_inputdata(tx.inputdata))) {
      reasons.insert("formatMutant");
    }
    if (session.network != tx.chain_id) reasons.insert("formatMutant");
    if (call) {
      if (codec::approval_semantics(*call)) reasons.insert("approvalFamily");
      switch (codec::classify_function(*call, ctx.catalog)) {
        case codec::FunctionFamily::kNftListing: reasons.insert("nftListing"); break;
        case codec::FunctionFamily::kDeceptiveName: reasons.insert("deceptiveName"); break;
        default: break;
      }
      addresses = call_addresses(*call);
    }
    addresses.push_back(tx.to);
  } else if (seed.kind() == SeedKind::kMessage) {
    const MessageSeed& msg = seed.msg();
    U256 connected(session.network.value);
    std::string host = codec::uri_host(session.connected_uri);
    if (msg.method == codec::SigningMethod::kEthSign) reasons.insert("ethSign");
    if (!codec::is_valid_pairing(msg.format, msg.method)) reasons.insert("chainIdUriMismatch");
    if (const auto* h = std::get_if<HashPayload>(&msg.payload)) {
      auto bytes = parse_hex(h->hash);
      if (!bytes || bytes->size() != 32) reasons.insert("chainIdUriMismatch");
    } else if (const auto* p = std::get_if<codec::PersonalSignPayload>(&msg.payload)) {
      auto d = codec::decode_personal_sign(*p);
      if (!d.ok) reasons.insert("personalSignDecode");
      if (d.address) addresses.push_back(*d.address);
    } else if (const auto* t = std::get_if<TypedDataPayload>(&msg.payload)) {
      try {
        codec::Eip712Result r = codec::parse_eip712(t->json);
        if (codec::has_errors(r.violations) || !r.payload.domain.chain_id ||
            *r.payload.domain.chain_id != connected) {
          reasons.insert("chainIdUriMismatch");
        }
        collect_addresses(r.payload.domain_json, addresses);
        collect_addresses(r.payload.message, addresses);
        if (auto l = chain::analyze_listing(r.payload, world, session.network);
            l && l->underpriced()) {
          reasons.insert("nftListing");
        }
      } catch (const Error&) {
        reasons.insert("chainIdUriMismatch");
      }
    } else if (const auto* w = std::get_if<SiwePayload>(&msg.payload)) {
      codec::Eip4361Result r = codec::parse_eip4361(w->text);
      const auto& p = r.payload;
      if (codec::has_errors(r.violations) || !p.chain_id || *p.chain_id != connected ||
          codec::uri_host(p.uri) != host || to_lower(p.domain) != host) {
        reasons.insert("chainIdUriMismatch");
      }
      if (p.address) addresses.push_back(*p.address);
    }
  }
  for (const auto& a : addresses) {
    if (labeled(world, a)) reasons.insert("labeledAddress");
  }
  if (seed.keeps_parent_semantics() && !seed.pattern.empty()) {
    auto it = pattern_reasons().find(seed.pattern);
    if (it != pattern_reasons().end()) reasons.insert(it->second);
  }
  std::vector<std::string> out;
  for (const char* k : kPrecedence) {
    if (reasons.count(k)) out.push_back(k);
  }
  return out;
}

bool alert_shown(const std::vector<RenderedScreen>& screens) {
  bool changed = false;
  for (const auto& s : screens) {
    changed = changed || s.changed_from_previous;
    if (s.screen_id == "confirm") continue;
    for (const auto& l : extract_text(s)) {
      if (wallet::has_alert_word(l)) return true;
    }
  }
  return !changed;
}

std::vector<OracleVerdict> oracle_alert(const Seed& seed,
                                        const std::vector<RenderedScreen>& screens,
                                        const wallet::WalletSession& session,
                                        const OracleContext& ctx) {
  if (seed.kind() == SeedKind::kInteraction) return {};
  auto reasons = alert_reasons(seed, session, ctx);
  const RenderedScreen* evidence = screens.empty() ? nullptr : &screens.front();
  bool shown = alert_shown(screens);
  if (reasons.empty()) {
    return {verdict(OracleKind::kAlertReliability, "benign", "no alert required",
                    shown ? "alert shown" : "no alert", false, seed, evidence)};
  }
  std::string all;
  for (const auto& r : reasons) all += (all.empty() ? "" : ", ") + r;
  return {verdict(OracleKind::kAlertReliability, reasons.front(), "alert for " + all,
                  shown ? "alert shown" : "no alert keyword and the screen changed", !shown, seed,
                  evidence)};
}

// ---- UI oracle --------------------------------------------------------------

std::vector<OracleVerdict> oracle_ui(const Seed& seed, const std::vector<RenderedScreen>& screens,
                                     const wallet::WalletSession& session,
                                     const OracleContext& ctx) {
  std::vector<OracleVerdict> out;
  if (seed.kind() != SeedKind::kInteraction) {
    clarity_checks(seed, screens, ctx, out);
    return out;
  }
  const chain::ChainWorld& world = ctx.world;
  const chain::NetworkState* net =
      world.has_network(session.network) ? &world.network(session.network) : nullptr;
  auto trusted = [&](const Address& a) {
    return std::any_of(ctx.trusted.begin(), ctx.trusted.end(), [&](const TrustedToken& t) {
      return t.network == session.network && t.address == a;
    });
  };
  auto add = [&](std::string kind, std::string expectation, std::string observed, bool violated,
                 const RenderedScreen& s) {
    out.push_back(verdict(OracleKind::kUiCorrectnessClarity, std::move(kind),
                          std::move(expectation), std::move(observed), violated, seed, &s));
  };

  for (const auto& s : screens) {
    auto lines = extract_text(s);
    std::optional<Address> typed;
    for (const auto& l : lines) {
      if (auto r = after(l, "Recipient: ")) typed = Address::parse(*r);
    }
    for (const auto& l : lines) {
      if (auto r = after(l, "ENS: ")) {
        std::size_t arrow = r->rfind(" -> ");
        if (arrow == std::string::npos) continue;
        std::string name = r->substr(0, arrow);
        std::string shown = r->substr(arrow + 4);
        auto truth = chain::resolve_ens(world, session.network, name);
        std::string expected = truth ? truth->str() : "not found";
        add("ensResolution", name + " -> " + expected, name + " -> " + shown,
            to_lower(shown) != expected, s);
      } else if (auto r = after(l, "Suggestion: ")) {
        std::size_t arrow = r->rfind(" -> ");
        if (arrow == std::string::npos) continue;
        std::string name = r->substr(0, arrow);
        auto shown = Address::parse(r->substr(arrow + 4));
        auto truth = chain::resolve_ens(world, session.network, name);
        bool violated = !shown || !truth || *shown != *truth || (typed && *shown != *typed);
        add("ensResolution",
            typed ? "typed address " + typed->str() + " kept" : name + " resolved on this network",
            "suggested " + name + " -> " + r->substr(arrow + 4), violated, s);
      } else if (auto r = after(l, "Token: ")) {
        if (*r == "no results" || starts_with(*r, "unavailable")) continue;
        std::size_t paren = r->find(" (");
        std::string symbol = r->substr(0, paren);
        std::size_t space = r->rfind(' ');
        auto addr = space == std::string::npos ? std::nullopt : Address::parse(r->substr(space + 1));
        if (addr) {
          bool ok = net && net->tokens.count(*addr) && net->tokens.at(*addr).symbol == symbol;
          add("tokenMetadata", "token " + addr->str() + " shown with its on-chain symbol", l, !ok,
              s);
        } else {
          bool ambiguous = true;
          if (net) {
            bool any = false;
            bool untrusted = false;
            for (const auto& [a, tok] : net->tokens) {
              if (to_lower(tok.symbol) != to_lower(symbol)) continue;
              any = true;
              untrusted = untrusted || !trusted(a);
            }
            ambiguous = !any || untrusted;
          }
          add("tokenMetadata", "token " + symbol + " identifiable without its address", l,
              ambiguous, s);
        }
      } else if (auto r = after(l, "Balance: ")) {
        std::size_t open = r->rfind(" (");
        auto addr = open == std::string::npos
                        ? std::nullopt
                        : Address::parse(r->substr(open + 2, r->size() - open - 3));
        if (!addr || !net || !net->tokens.count(*addr)) {
          add("tokenMetadata", "balance of a known token", l, true, s);
          continue;
        }
        const chain::TokenContract& tok = net->tokens.at(*addr);
        auto bal = tok.balances.find(session.account);
        U256 amount = bal == tok.balances.end() ? U256(0) : bal->second;
        std::string expected = format_units(amount, tok.decimals) + " " + tok.symbol;
        add("tokenMetadata", "balance " + expected, r->substr(0, open),
            r->substr(0, open) != expected, s);
      }
    }
  }
  if (out.empty()) {
    out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "nothingToCheck",
                          "ENS and token data match the chain", "no ENS or token data displayed",
                          false, seed, screens.empty() ? nullptr : &screens.back()));
  }
  return out;
}

std::vector<OracleVerdict> run_oracles(const Seed& seed, const std::vector<RenderedScreen>& screens,
                                       const wallet::WalletSession& session,
                                       const OracleContext& ctx) {
  std::vector<OracleVerdict> out = oracle_simulator(seed, screens, ctx);
  for (auto& v : oracle_alert(seed, screens, session, ctx)) out.push_back(std::move(v));
  for (auto& v : oracle_ui(seed, screens, session, ctx)) out.push_back(std::move(v));
  if (out.empty()) {
    out.push_back(verdict(OracleKind::kUiCorrectnessClarity, "nothingToCheck",
                          "screens rendered", std::to_string(screens.size()) + " screen(s)", false,
                          seed, screens.empty() ? nullptr : &screens.front()));
  }
  return out;
}

// ---- classifier -------------------------------------------------------------

Classifier Classifier::from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != "classifier-rules/1") {
    throw Error("bad-rules", "rule table must have schema classifier-rules/1");
  }
  Classifier c;
  std::set<std::tuple<OracleKind, std::string, std::string>> keys;
  std::set<std::string> vectors;
  for (const auto& r : require(j, "rules", "bad-rules")) {
    ClassifierRule rule;
    try {
      rule.oracle = parse_oracle_kind(require_string(r, "oracle", "bad-rules"));
    } catch (const Error& e) {
      throw Error("bad-rules", e.what());
    }
    rule.kind = require_string(r, "kind", "bad-rules");
    rule.family = r.value("family", "*");
    if (rule.family != "*" && rule.family != "transaction" && rule.family != "message" &&
        rule.family != "interaction") {
      throw Error("bad-rules", "unknown seed family '" + rule.family + "'");
    }
    rule.vector = require_string(r, "vector", "bad-rules");
    if (!keys.insert({rule.oracle, rule.kind, rule.family}).second) {
      throw Error("bad-rules", "duplicate rule for " + to_string(rule.oracle) + "/" + rule.kind);
    }
    if (!vectors.insert(rule.vector).second) {
      throw Error("bad-rules", "vector " + rule.vector + " has more than one rule");
    }
    c.rules_.push_back(std::move(rule));
  }
  return c;
}

Classifier Classifier::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

std::string Classifier::vector_for(OracleKind oracle, std::string_view kind,
                                   SeedKind family) const {
  std::string fam = to_string(family);
  for (const char* pass : {"exact", "any"}) {
    for (const auto& r : rules_) {
      if (r.oracle != oracle || r.kind != kind) continue;
      if (std::string_view(pass) == "exact" ? r.family == fam : r.family == "*") return r.vector;
    }
  }
  return "unclassified";
}

std::vector<AttackVectorFinding> Classifier::classify(const std::vector<OracleVerdict>& verdicts,
                                                      const Seed& seed,
                                                      const std::string& profile_name) const {
  std::vector<AttackVectorFinding> out;
  for (const auto& v : verdicts) {
    if (!v.violated) continue;
    std::string vec = vector_for(v.oracle, v.kind, seed.kind());
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const AttackVectorFinding& f) { return f.vector == vec; });
    if (it == out.end()) {
      AttackVectorFinding f;
      f.vector = vec;
      f.seed_id = seed.id;
      if (seed.mutation) {
        f.parent = seed.mutation->parent;
        f.strategy = seed.mutation->strategy;
      }
      f.profile = profile_name;
      out.push_back(std::move(f));
      it = out.end() - 1;
    }
    it->verdicts.push_back(v);
  }
  return out;
}

}  // namespace walletdiff::verify
