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

#include "walletdiff/chain/world.h"

#include <algorithm>

#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"

namespace walletdiff::chain {

namespace {

constexpr const char* kBad = "bad-world";

U256 amount_of(const Json& v) {
  auto n = codec::json_to_u256(v);
  if (!n) throw Error(kBad, "bad amount " + v.dump());
  return *n;
}

Address address_of(const Json& v) {
  auto a = v.is_string() ? Address::parse(v.get<std::string>()) : std::nullopt;
  if (!a) throw Error(kBad, "bad address " + v.dump());
  return *a;
}

// Reference to j[key] or to a static empty object. Iterating items() of a
// temporary returned by Json::value would dangle.
const Json& object_or_empty(const Json& j, const char* key) {
  static const Json kEmpty = Json::object();
  auto it = j.find(key);
  return it == j.end() ? kEmpty : *it;
}

Date date_of(const Json& v) {
  auto d = v.is_string() ? Date::parse(v.get<std::string>()) : std::nullopt;
  if (!d) throw Error(kBad, "bad date " + v.dump());
  return *d;
}

CondVar parse_var(const std::string& s, std::string& key) {
  if (s == "gasprice") return CondVar::kGasPrice;
  if (s == "coinbase") return CondVar::kCoinbase;
  if (s == "timestamp") return CondVar::kTimestamp;
  if (s == "caller") return CondVar::kCaller;
  if (s == "value") return CondVar::kValue;
  if (s.rfind("storage:", 0) == 0 && s.size() > 8) {
    key = s.substr(8);
    return CondVar::kStorage;
  }
  throw Error(kBad, "unknown condition variable '" + s + "'");
}

std::string var_name(const Condition& c) {
  switch (c.var) {
    case CondVar::kGasPrice: return "gasprice";
    case CondVar::kCoinbase: return "coinbase";
    case CondVar::kTimestamp: return "timestamp";
    case CondVar::kCaller: return "caller";
    case CondVar::kValue: return "value";
    case CondVar::kStorage: return "storage:" + c.key;
  }
  return "";
}

const std::vector<std::pair<std::string, Comparator>> kComparators = {
    {"==", Comparator::kEq}, {"!=", Comparator::kNe}, {"<", Comparator::kLt},
    {"<=", Comparator::kLe}, {">", Comparator::kGt},  {">=", Comparator::kGe}};

Comparator parse_cmp(const std::string& s) {
  for (const auto& [text, cmp] : kComparators) {
    if (text == s) return cmp;
  }
  throw Error(kBad, "unknown comparator '" + s + "'");
}

std::string cmp_name(Comparator c) {
  for (const auto& [text, cmp] : kComparators) {
    if (cmp == c) return text;
  }
  return "==";
}

// Constants may be addresses (for caller/coinbase) or integers.
U256 constant_of(const Json& v) {
  if (v.is_string()) {
    if (auto a = Address::parse(v.get<std::string>())) return a->as_u256();
  }
  return amount_of(v);
}

PartyRef party_of(const Json& v) {
  if (!v.is_string()) throw Error(kBad, "party must be a string");
  std::string s = v.get<std::string>();
  PartyRef p;
  if (s == "caller") {
    p.kind = PartyRef::Kind::kCaller;
  } else if (s == "self") {
    p.kind = PartyRef::Kind::kSelf;
  } else if (s == "coinbase") {
    p.kind = PartyRef::Kind::kCoinbase;
  } else if (s.rfind("arg:", 0) == 0) {
    p.kind = PartyRef::Kind::kArg;
    p.arg = std::stoi(s.substr(4));
  } else {
    p.kind = PartyRef::Kind::kLiteral;
    p.literal = address_of(v);
  }
  return p;
}

std::string party_text(const PartyRef& p) {
  switch (p.kind) {
    case PartyRef::Kind::kCaller: return "caller";
    case PartyRef::Kind::kSelf: return "self";
    case PartyRef::Kind::kCoinbase: return "coinbase";
    case PartyRef::Kind::kArg: return "arg:" + std::to_string(p.arg);
    case PartyRef::Kind::kLiteral: return p.literal.str();
  }
  return "";
}

AmountRef amount_ref_of(const Json& v) {
  AmountRef a;
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "all") {
      a.kind = AmountRef::Kind::kAll;
      return a;
    }
    if (s == "txValue") {
      a.kind = AmountRef::Kind::kTxValue;
      return a;
    }
    if (s.rfind("arg:", 0) == 0) {
      a.kind = AmountRef::Kind::kArg;
      a.arg = std::stoi(s.substr(4));
      return a;
    }
  }
  a.kind = AmountRef::Kind::kLiteral;
  a.literal = amount_of(v);
  return a;
}

std::string amount_text(const AmountRef& a) {
  switch (a.kind) {
    case AmountRef::Kind::kAll: return "all";
    case AmountRef::Kind::kTxValue: return "txValue";
    case AmountRef::Kind::kArg: return "arg:" + std::to_string(a.arg);
    case AmountRef::Kind::kLiteral: return u256_dec(a.literal);
  }
  return "";
}

const std::vector<std::pair<std::string, Action::Op>> kOps = {
    {"transferToken", Action::Op::kTransferToken},
    {"transferNative", Action::Op::kTransferNative},
    {"transferNft", Action::Op::kTransferNft},
    {"mint", Action::Op::kMint},
    {"setAllowance", Action::Op::kSetAllowance},
    {"setOperatorApproval", Action::Op::kSetOperatorApproval},
    {"setStorage", Action::Op::kSetStorage},
    {"emitEvent", Action::Op::kEmitEvent},
    {"revert", Action::Op::kRevert}};

Action action_of(const Json& j) {
  Action a;
  std::string op = require_string(j, "op", kBad);
  auto it = std::find_if(kOps.begin(), kOps.end(), [&](const auto& p) { return p.first == op; });
  if (it == kOps.end()) throw Error(kBad, "unknown action '" + op + "'");
  a.op = it->second;
  if (j.contains("token")) a.asset = address_of(j["token"]);
  if (j.contains("nft")) a.asset = address_of(j["nft"]);
  if (j.contains("from")) a.from = party_of(j["from"]);
  if (j.contains("to")) a.to = party_of(j["to"]);
  if (j.contains("spender")) a.to = party_of(j["spender"]);
  if (j.contains("operator")) a.to = party_of(j["operator"]);
  if (j.contains("amount")) a.amount = amount_ref_of(j["amount"]);
  if (j.contains("tokenId")) a.amount = amount_ref_of(j["tokenId"]);
  a.approved = j.value("approved", true);
  if (j.contains("key")) a.key = j["key"].get<std::string>();
  if (j.contains("event")) a.key = j["event"].get<std::string>();
  if (j.contains("reason")) a.key = j["reason"].get<std::string>();
  if (j.contains("value")) a.storage_value = amount_of(j["value"]);
  a.args = j.value("args", std::vector<std::string>{});
  return a;
}

Json action_json(const Action& a) {
  Json j;
  for (const auto& [name, op] : kOps) {
    if (op == a.op) j["op"] = name;
  }
  switch (a.op) {
    case Action::Op::kTransferToken:
    case Action::Op::kMint:
      j["token"] = a.asset.str();
      if (a.op == Action::Op::kTransferToken) j["from"] = party_text(a.from);
      j["to"] = party_text(a.to);
      j["amount"] = amount_text(a.amount);
      break;
    case Action::Op::kTransferNative:
      j["from"] = party_text(a.from);
      j["to"] = party_text(a.to);
      j["amount"] = amount_text(a.amount);
      break;
    case Action::Op::kTransferNft:
      j["nft"] = a.asset.str();
      j["from"] = party_text(a.from);
      j["to"] = party_text(a.to);
      j["tokenId"] = amount_text(a.amount);
      break;
    case Action::Op::kSetAllowance:
      j["token"] = a.asset.str();
      j["from"] = party_text(a.from);
      j["spender"] = party_text(a.to);
      j["amount"] = amount_text(a.amount);
      break;
    case Action::Op::kSetOperatorApproval:
      j["nft"] = a.asset.str();
      j["from"] = party_text(a.from);
      j["operator"] = party_text(a.to);
      j["approved"] = a.approved;
      break;
    case Action::Op::kSetStorage:
      j["key"] = a.key;
      j["value"] = u256_dec(a.storage_value);
      break;
    case Action::Op::kEmitEvent:
      j["event"] = a.key;
      j["args"] = a.args;
      break;
    case Action::Op::kRevert:
      j["reason"] = a.key;
      break;
  }
  return j;
}

NetworkState network_of(const Json& n) {
  NetworkState s;
  auto id = codec::json_to_u256(require(n, "id", kBad));
  if (!id || *id == 0 || *id > U256(UINT64_MAX)) throw Error(kBad, "bad network id");
  s.id = NetworkId{static_cast<std::uint64_t>(*id)};
  s.name = n.value("name", "network-" + u256_dec(*id));
  s.native_symbol = n.value("nativeSymbol", "ETH");
  s.native_price_micro_usd = parse_usd_micro(n.value("nativePriceUsd", "0"), kBad);
  if (n.contains("env")) {
    const Json& e = n["env"];
    if (e.contains("coinbase")) s.env.coinbase = address_of(e["coinbase"]);
    s.env.timestamp = e.value("timestamp", std::uint64_t{0});
    s.env.number = e.value("number", std::uint64_t{0});
    if (e.contains("gasPrice")) s.env.gas_price = amount_of(e["gasPrice"]);
  }
  for (const auto& [addr, bal] : object_or_empty(n, "accounts").items()) {
    s.native[address_of(addr)] = amount_of(bal);
  }
  for (const auto& t : n.value("tokens", Json::array())) {
    TokenContract tok;
    tok.address = address_of(require(t, "address", kBad));
    tok.name = require_string(t, "name", kBad);
    tok.symbol = require_string(t, "symbol", kBad);
    tok.decimals = t.value("decimals", 18u);
    if (tok.decimals > 36) throw Error(kBad, "decimals above 36 for " + tok.symbol);
    for (const auto& [addr, bal] : object_or_empty(t, "balances").items()) {
      tok.balances[address_of(addr)] = amount_of(bal);
      tok.total_supply += amount_of(bal);
    }
    for (const auto& a : t.value("allowances", Json::array())) {
      tok.allowances[{address_of(a["owner"]), address_of(a["spender"])}] = amount_of(a["amount"]);
    }
    s.tokens[tok.address] = std::move(tok);
  }
  for (const auto& t : n.value("nfts", Json::array())) {
    NftContract nft;
    nft.address = address_of(require(t, "address", kBad));
    nft.name = t.value("name", "");
    nft.symbol = require_string(t, "symbol", kBad);
    nft.floor_price_micro_usd = parse_usd_micro(t.value("floorPriceUsd", "0"), kBad);
    for (const auto& [id, owner] : object_or_empty(t, "owners").items()) {
      auto tid = parse_u256_dec(id);
      if (!tid) throw Error(kBad, "bad token id " + id);
      nft.owners[*tid] = address_of(owner);
    }
    s.nfts[nft.address] = std::move(nft);
  }
  for (const auto& b : n.value("behaviors", Json::array())) {
    ContractBehavior beh = behavior_from_json(b);
    s.behaviors[beh.address] = std::move(beh);
  }
  if (n.contains("permit2")) s.permit2 = address_of(n["permit2"]);
  for (const auto& e : n.value("ens", Json::array())) {
    EnsRecord rec;
    rec.address = address_of(require(e, "address", kBad));
    if (e.contains("expiry")) rec.expiry = date_of(e["expiry"]);
    std::string name = to_lower(require_string(e, "name", kBad));
    if (name.empty()) throw Error(kBad, "empty ENS name");
    if (!s.ens.emplace(name, rec).second) throw Error(kBad, "duplicate ENS name " + name);
  }
  for (const auto& tx : n.value("mempool", Json::array())) {
    s.add_pending(transaction_from_json(tx));
  }
  return s;
}

}  // namespace

std::string to_string(LabelKind k) {
  switch (k) {
    case LabelKind::kClean: return "clean";
    case LabelKind::kPhishing: return "phishing";
    case LabelKind::kDrainer: return "drainer";
  }
  return "clean";
}

std::size_t NftContract::count_owned(const Address& a) const {
  return static_cast<std::size_t>(std::count_if(
      owners.begin(), owners.end(), [&](const auto& kv) { return kv.second == a; }));
}

bool ContractBehavior::reads_environment() const {
  for (const auto& c : clauses) {
    for (const auto& cond : c.conditions) {
      if (cond.var == CondVar::kGasPrice || cond.var == CondVar::kCoinbase ||
          cond.var == CondVar::kTimestamp) {
        return true;
      }
    }
  }
  return false;
}

bool ContractBehavior::reads_storage() const {
  for (const auto& c : clauses) {
    for (const auto& cond : c.conditions) {
      if (cond.var == CondVar::kStorage) return true;
    }
  }
  return false;
}

Json ContractBehavior::to_json() const {
  Json clauses_json = Json::array();
  for (const auto& c : clauses) {
    Json cj = Json::object();
    if (c.function) cj["function"] = *c.function;
    Json when = Json::array();
    for (const auto& cond : c.conditions) {
      when.push_back({{"var", var_name(cond)}, {"cmp", cmp_name(cond.cmp)},
                      {"value", u256_dec(cond.constant)}});
    }
    cj["when"] = when;
    Json actions = Json::array();
    for (const auto& a : c.actions) actions.push_back(action_json(a));
    cj["do"] = actions;
    clauses_json.push_back(cj);
  }
  Json storage_json = Json::object();
  for (const auto& [k, v] : storage) storage_json[k] = u256_dec(v);
  return Json{{"name", name}, {"clauses", clauses_json}, {"storage", storage_json}};
}

ContractBehavior behavior_from_json(const Json& j) {
  ContractBehavior b;
  if (j.contains("address")) b.address = address_of(j["address"]);
  b.name = j.value("name", "");
  for (const auto& c : require(j, "clauses", kBad)) {
    Clause clause;
    if (c.contains("function")) clause.function = c["function"].get<std::string>();
    for (const auto& w : c.value("when", Json::array())) {
      Condition cond;
      cond.var = parse_var(require_string(w, "var", kBad), cond.key);
      cond.cmp = parse_cmp(w.value("cmp", "=="));
      cond.constant = constant_of(require(w, "value", kBad));
      clause.conditions.push_back(cond);
    }
    for (const auto& a : require(c, "do", kBad)) clause.actions.push_back(action_of(a));
    b.clauses.push_back(std::move(clause));
  }
  for (const auto& [k, v] : object_or_empty(j, "storage").items()) b.storage[k] = amount_of(v);
  return b;
}

NetworkState& ChainWorld::network(NetworkId id) {
  auto it = networks.find(id.value);
  if (it == networks.end()) throw Error("unknown-network", std::to_string(id.value));
  return it->second;
}

const NetworkState& ChainWorld::network(NetworkId id) const {
  auto it = networks.find(id.value);
  if (it == networks.end()) throw Error("unknown-network", std::to_string(id.value));
  return it->second;
}

ChainWorld ChainWorld::from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != "world/1") {
    throw Error(kBad, "expected schema world/1");
  }
  ChainWorld w;
  w.as_of = date_of(require(doc, "asOf", kBad));
  w.wallet_account = address_of(require(doc, "walletAccount", kBad));
  for (const auto& n : require(doc, "networks", kBad)) {
    NetworkState s = network_of(n);
    std::uint64_t id = s.id.value;
    if (!w.networks.emplace(id, std::move(s)).second) {
      throw Error(kBad, "duplicate network id " + std::to_string(id));
    }
  }
  for (const auto& l : doc.value("labels", Json::array())) {
    std::string kind = require_string(l, "label", kBad);
    LabelKind k = kind == "phishing" ? LabelKind::kPhishing
                  : kind == "drainer" ? LabelKind::kDrainer
                  : kind == "clean"   ? LabelKind::kClean
                                      : throw Error(kBad, "unknown label " + kind);
    std::optional<Date> at;
    if (l.contains("labeledAt")) at = date_of(l["labeledAt"]);
    if (k != LabelKind::kClean && !at) throw Error(kBad, "labeledAt required for " + kind);
    label_address(w, address_of(require(l, "address", kBad)), k, at);
  }
  return w;
}

ChainWorld ChainWorld::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

std::int64_t parse_usd_micro(std::string_view text, const char* code) {
  auto units = parse_units(text, 6);
  if (!units || *units > U256(INT64_MAX)) throw Error(code, "bad USD amount '" + std::string(text) + "'");
  return static_cast<std::int64_t>(*units);
}

std::string format_usd_micro(std::int64_t micro) {
  if (micro < 0) return "-" + format_usd_micro(-micro);
  return format_units(U256(micro), 6);
}

void label_address(ChainWorld& world, const Address& a, LabelKind label,
                   std::optional<Date> labeled_at) {
  world.labels[a] = AddressLabel{a, label, labeled_at};
}

AddressLabel lookup_label(const ChainWorld& world, const Address& a) {
  auto it = world.labels.find(a);
  if (it == world.labels.end()) return AddressLabel{a, LabelKind::kClean, std::nullopt};
  return it->second;
}

std::optional<Address> resolve_ens(const ChainWorld& world, NetworkId network,
                                   std::string_view name) {
  if (name.empty() || !world.has_network(network)) return std::nullopt;
  const NetworkState& n = world.network(network);
  auto it = n.ens.find(to_lower(name));
  if (it == n.ens.end()) return std::nullopt;
  if (it->second.expiry && *it->second.expiry < world.as_of) return std::nullopt;
  return it->second.address;
}

}  // namespace walletdiff::chain
