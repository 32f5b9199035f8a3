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

#include "walletdiff/seed/corpus.h"

#include <algorithm>

#include "walletdiff/chain/execution.h"
#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/messages.h"
#include "walletdiff/common/error.h"

namespace walletdiff::seed {

namespace {

bool succeeds(const chain::ChainWorld& world, NetworkId network, const TransactionSeed& tx,
              const codec::SignatureCatalog& catalog) {
  chain::ChainWorld copy = world;
  try {
    chain::BlockEnv env = copy.network(network).env;
    env.gas_price = tx.gas_price;
    return chain::execute_transaction(copy, network, env, tx, catalog).success();
  } catch (const Error&) {
    return false;
  }
}

Seed make_seed(std::string origin, TransactionSeed tx) {
  Seed s;
  s.origin = std::move(origin);
  s.body = std::move(tx);
  return s;
}

}  // namespace

const std::vector<std::string>& known_patterns() {
  static const std::vector<std::string> kPatterns = {
      "Dangerous eth_sign",      "Overlooked Approval", "NFT listing",
      "Deceptive Function Name", "Risky address",       "Unintended Authorization",
  };
  return kPatterns;
}

std::vector<Seed> collect_valid_transactions(const chain::ChainWorld& world, NetworkId network,
                                             const codec::SignatureCatalog& catalog,
                                             std::size_t count, Rng& rng) {
  if (count == 0) throw Error("bad-config", "transaction count must be at least 1");
  std::vector<Seed> out;
  const chain::NetworkState& net = world.network(network);
  for (const auto& p : net.mempool) {
    if (out.size() >= count) break;
    if (succeeds(world, network, p.tx, catalog)) out.push_back(make_seed("valid", p.tx));
  }

  // Recipients: every funded externally owned account other than the wallet.
  std::vector<Address> recipients;
  for (const auto& [addr, bal] : net.native) {
    if (addr != world.wallet_account && !net.has_code(addr) &&
        chain::lookup_label(world, addr).label == chain::LabelKind::kClean) {
      recipients.push_back(addr);
    }
  }
  std::vector<const chain::TokenContract*> held;
  for (const auto& [addr, tok] : net.tokens) {
    auto it = tok.balances.find(world.wallet_account);
    if (it != tok.balances.end() && it->second > 0) held.push_back(&tok);
  }
  const codec::FunctionEntry* transfer = catalog.by_signature("transfer(address,uint256)");

  const U256 native_balance =
      net.native.count(world.wallet_account) ? net.native.at(world.wallet_account) : U256(0);
  for (std::size_t attempt = 0; !recipients.empty() && out.size() < count && attempt < count * 8;
       ++attempt) {
    TransactionSeed tx;
    tx.from = world.wallet_account;
    tx.gas_price = net.env.gas_price;
    tx.chain_id = network;
    Address to = recipients[rng.below(recipients.size())];
    std::size_t pick = rng.below(held.size() + 1);
    if (pick == held.size() || !transfer) {
      if (native_balance == 0) continue;
      // Between 1/1000 and 1/10 of the balance, in whole thousandths.
      tx.to = to;
      tx.value = native_balance / 1000 * rng.between(1, 100);
    } else {
      const chain::TokenContract& tok = *held[pick];
      U256 bal = tok.balances.at(world.wallet_account);
      U256 amount = bal / 1000 * rng.between(1, 100);
      tx.to = tok.address;
      tx.inputdata = to_hex(codec::encode_call(*transfer, Json::array({to.str(), u256_dec(amount)})));
    }
    if (succeeds(world, network, tx, catalog)) out.push_back(make_seed("valid", std::move(tx)));
  }
  if (out.size() < count) {
    throw Error("insufficient-seeds", "found " + std::to_string(out.size()) + " of " +
                                          std::to_string(count) + " valid transactions");
  }
  return out;
}

void check_format_coverage(const std::vector<Seed>& messages) {
  for (const char* format : {"hash-string", "text-string", "eip-191", "eip-712", "eip-4361"}) {
    for (codec::SigningMethod m : codec::signing_methods_for(format)) {
      bool found = std::any_of(messages.begin(), messages.end(), [&](const Seed& s) {
        return s.kind() == SeedKind::kMessage &&
               codec::to_string(s.msg().format) == format && s.msg().method == m;
      });
      if (!found) {
        throw Error("corpus-incomplete",
                    std::string("no template for ") + format + " with " + codec::to_string(m));
      }
    }
  }
}

std::vector<codec::Violation> validate_message(const MessageSeed& msg) {
  std::vector<codec::Violation> v;
  if (!codec::is_valid_pairing(msg.format, msg.method)) {
    v.push_back({"invalid-pairing", "method", codec::Severity::kError,
                 codec::to_string(msg.format) + " with " + codec::to_string(msg.method)});
  }
  if (const auto* h = std::get_if<HashPayload>(&msg.payload)) {
    auto b = parse_hex(h->hash);
    if (!b || b->size() != 32) v.push_back({"invalid-value", "hash", codec::Severity::kError, ""});
  } else if (const auto* p = std::get_if<codec::PersonalSignPayload>(&msg.payload)) {
    auto d = codec::decode_personal_sign(*p);
    if (!d.ok) v.push_back({"invalid-value", "challenge", codec::Severity::kError, d.failure});
    if (!d.address) v.push_back({"invalid-address", "address", codec::Severity::kError, ""});
  } else if (const auto* t = std::get_if<TypedDataPayload>(&msg.payload)) {
    try {
      auto r = codec::parse_eip712(t->json);
      v.insert(v.end(), r.violations.begin(), r.violations.end());
    } catch (const Error& e) {
      v.push_back({"malformed-json", "", codec::Severity::kError, e.what()});
    }
  } else if (const auto* s = std::get_if<SiwePayload>(&msg.payload)) {
    auto r = codec::parse_eip4361(s->text);
    v.insert(v.end(), r.violations.begin(), r.violations.end());
  }
  return v;
}

std::vector<Seed> build_message_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) throw Error("io-error", dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<Seed> out;
  for (const auto& f : files) {
    Seed s;
    s.origin = "template";
    try {
      s.body = message_from_json(read_json_file(f));
    } catch (const Error& e) {
      throw Error("bad-template", f.filename().string() + ": " + e.what());
    }
    auto violations = validate_message(s.msg());
    if (!violations.empty()) {
      throw Error("bad-template", f.filename().string() + ": " + violations.front().code + " at " +
                                      violations.front().field);
    }
    out.push_back(std::move(s));
  }
  check_format_coverage(out);
  return out;
}

ScamCatalog load_scam_catalog(const std::filesystem::path& path,
                              const codec::SignatureCatalog& catalog) {
  constexpr const char* kBad = "bad-catalog";
  Json doc = read_json_file(path);
  if (!doc.is_object() || doc.value("schema", "") != "scam-catalog/1") {
    throw Error(kBad, "expected schema scam-catalog/1");
  }
  ScamCatalog out;
  for (const auto& a : doc.value("attackers", Json::array())) {
    auto addr = a.is_string() ? Address::parse(a.get<std::string>()) : std::nullopt;
    if (!addr) throw Error(kBad, "bad attacker address " + a.dump());
    out.attackers.push_back(*addr);
  }
  for (const auto& e : require(doc, "entries", kBad)) {
    Seed s;
    s.origin = "catalog";
    s.pattern = require_string(e, "pattern", kBad);
    const auto& known = known_patterns();
    if (std::find(known.begin(), known.end(), s.pattern) == known.end()) {
      throw Error(kBad, "unknown pattern '" + s.pattern + "'");
    }
    s.scam_type = e.value("scamType", "");
    try {
      if (e.contains("transaction")) {
        Json tj = e["transaction"];
        if (tj.contains("call")) {
          const Json& call = tj["call"];
          std::string sig = require_string(call, "signature", kBad);
          const codec::FunctionEntry* fn = catalog.by_signature(sig);
          if (!fn) throw Error(kBad, "signature not in function catalog: " + sig);
          tj["inputdata"] = to_hex(codec::encode_call(*fn, call.value("args", Json::array())));
        }
        s.body = transaction_from_json(tj);
      } else if (e.contains("message")) {
        s.body = message_from_json(e["message"]);
      } else {
        throw Error(kBad, "entry needs a transaction or a message");
      }
    } catch (const Error& err) {
      if (err.code() == kBad) throw;
      throw Error(kBad, s.scam_type + ": " + err.what());
    }
    out.seeds.push_back(std::move(s));
  }
  for (const auto& pattern : known_patterns()) {
    bool found = std::any_of(out.seeds.begin(), out.seeds.end(),
                             [&](const Seed& s) { return s.pattern == pattern; });
    if (!found) throw Error("corpus-incomplete", "no catalog entry for pattern " + pattern);
  }
  return out;
}

void assign_ids(std::vector<Seed>& seeds, std::size_t first) {
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i].id = format_seed_id(first + i);
}

}  // namespace walletdiff::seed
