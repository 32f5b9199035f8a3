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

#include "walletdiff/codec/seed.h"

#include <cstdio>

#include "walletdiff/codec/inputdata.h"
#include "walletdiff/common/error.h"

namespace walletdiff {

namespace {

U256 u256_field(const Json& j, const char* key) {
  const Json& v = require(j, key, "bad-seed");
  auto n = codec::json_to_u256(v);
  if (!n) throw Error("bad-seed", std::string("bad integer in '") + key + "'");
  return *n;
}

NetworkId network_field(const Json& j, const char* key, NetworkId fallback) {
  if (!j.contains(key)) return fallback;
  auto n = codec::json_to_u256(j[key]);
  if (!n || *n == 0 || *n > U256(UINT64_MAX)) {
    throw Error("bad-seed", std::string("bad network id in '") + key + "'");
  }
  return NetworkId{static_cast<std::uint64_t>(*n)};
}

Address address_field(const Json& j, const char* key) {
  auto a = Address::parse(require_string(j, key, "bad-seed"));
  if (!a) throw Error("bad-seed", std::string("bad address in '") + key + "'");
  return *a;
}

std::string canonical_hex(std::string_view text) {
  auto b = parse_hex(text);
  if (!b) throw Error("unnormalizable", "not hex: " + std::string(text));
  return to_hex(*b);
}

}  // namespace

std::string to_string(SeedKind k) {
  switch (k) {
    case SeedKind::kTransaction: return "transaction";
    case SeedKind::kMessage: return "message";
    case SeedKind::kInteraction: return "interaction";
  }
  return "";
}

std::string format_seed_id(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "seed-%04zu", n);
  return buf;
}

Json to_json(const TransactionSeed& tx) {
  return Json{{"from", tx.from.str()},
              {"to", tx.to.str()},
              {"value", u256_dec(tx.value)},
              {"inputdata", tx.inputdata},
              {"gasPrice", u256_dec(tx.gas_price)},
              {"chainId", tx.chain_id.value},
              {"method", tx.method}};
}

Json to_json(const MessageSeed& msg) {
  Json payload = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HashPayload>) {
          return Json{{"hash", p.hash}};
        } else if constexpr (std::is_same_v<T, codec::PersonalSignPayload>) {
          return Json{{"challenge", p.challenge}, {"address", p.address}};
        } else if constexpr (std::is_same_v<T, TypedDataPayload>) {
          return Json{{"typedData", p.json}};
        } else {
          return Json{{"text", p.text}};
        }
      },
      msg.payload);
  return Json{{"format", codec::to_string(msg.format)},
              {"method", codec::to_string(msg.method)},
              {"payload", payload},
              {"connectedNetwork", msg.connected_network.value},
              {"connectedUri", msg.connected_uri}};
}

Json to_json(const InteractionSeed& seed) {
  Json steps = Json::array();
  for (const auto& s : seed.steps) {
    Json step{{"path", s.path}, {"action", s.action}};
    if (s.action == "input") {
      step["data"] = s.data;
      step["dataType"] = s.data_type;
    }
    steps.push_back(step);
  }
  return Json{{"steps", steps},
              {"expectedSemantics", seed.expected_semantics},
              {"network", seed.network.value}};
}

Json to_json(const Seed& seed) {
  Json j{{"id", seed.id}, {"kind", to_string(seed.kind())}, {"origin", seed.origin}};
  if (!seed.pattern.empty()) j["pattern"] = seed.pattern;
  if (!seed.scam_type.empty()) j["scamType"] = seed.scam_type;
  if (seed.mutation) {
    j["parent"] = seed.mutation->parent;
    j["mutation"] = {{"strategy", seed.mutation->strategy},
                     {"semanticsPreserving", seed.mutation->semantics_preserving},
                     {"locus", seed.mutation->locus}};
  }
  std::visit([&](const auto& body) { j[to_string(seed.kind())] = to_json(body); }, seed.body);
  return j;
}

TransactionSeed transaction_from_json(const Json& j) {
  TransactionSeed tx;
  tx.from = address_field(j, "from");
  tx.to = address_field(j, "to");
  tx.value = j.contains("value") ? u256_field(j, "value") : U256(0);
  tx.inputdata = j.value("inputdata", "");
  tx.gas_price = j.contains("gasPrice") ? u256_field(j, "gasPrice") : U256(0);
  tx.chain_id = network_field(j, "chainId", kSepolia);
  tx.method = j.value("method", "eth_sendTransactions");
  if (codec::parse_signing_method(tx.method) != codec::SigningMethod::kSendTransactions) {
    throw Error("bad-seed", "transaction method must be eth_sendTransactions");
  }
  return tx;
}

MessageSeed message_from_json(const Json& j) {
  MessageSeed m;
  m.format = codec::parse_message_format(require_string(j, "format", "bad-seed"));
  m.method = codec::parse_signing_method(require_string(j, "method", "bad-seed"));
  const Json& p = require(j, "payload", "bad-seed");
  if (p.contains("hash")) {
    m.payload = HashPayload{p["hash"].get<std::string>()};
  } else if (p.contains("challenge")) {
    m.payload = codec::PersonalSignPayload{p["challenge"].get<std::string>(),
                                           p.value("address", "")};
  } else if (p.contains("typedData")) {
    const Json& td = p["typedData"];
    m.payload = TypedDataPayload{td.is_string() ? td.get<std::string>() : td.dump()};
  } else if (p.contains("text")) {
    m.payload = SiwePayload{p["text"].get<std::string>()};
  } else {
    throw Error("bad-seed", "unrecognised message payload");
  }
  m.connected_network = network_field(j, "connectedNetwork", kSepolia);
  m.connected_uri = j.value("connectedUri", "");
  return m;
}

InteractionSeed interaction_from_json(const Json& j) {
  InteractionSeed s;
  for (const auto& step : require(j, "steps", "bad-seed")) {
    InteractionStep st;
    st.path = step.value("path", std::vector<std::string>{});
    st.action = require_string(step, "action", "bad-seed");
    if (st.action != "click" && st.action != "input") {
      throw Error("bad-seed", "step action must be click or input");
    }
    if (step.contains("data")) {
      st.data = step["data"].is_string() ? step["data"].get<std::string>() : step["data"].dump();
    }
    st.data_type = step.value("dataType", "");
    s.steps.push_back(std::move(st));
  }
  s.expected_semantics = j.value("expectedSemantics", "");
  s.network = network_field(j, "network", kSepolia);
  return s;
}

Seed seed_from_json(const Json& j) {
  Seed s;
  s.id = require_string(j, "id", "bad-seed");
  s.origin = j.value("origin", "");
  s.pattern = j.value("pattern", "");
  s.scam_type = j.value("scamType", "");
  if (j.contains("mutation")) {
    const Json& m = j["mutation"];
    s.mutation = MutationRecord{j.value("parent", ""), m.value("strategy", ""),
                                m.value("semanticsPreserving", false), m.value("locus", "")};
  }
  std::string kind = require_string(j, "kind", "bad-seed");
  if (kind == "transaction") {
    s.body = transaction_from_json(require(j, "transaction", "bad-seed"));
  } else if (kind == "message") {
    s.body = message_from_json(require(j, "message", "bad-seed"));
  } else if (kind == "interaction") {
    s.body = interaction_from_json(require(j, "interaction", "bad-seed"));
  } else {
    throw Error("bad-seed", "unknown seed kind '" + kind + "'");
  }
  return s;
}

std::string canonical_payload(const Seed& seed, const codec::SignatureCatalog& catalog) {
  switch (seed.kind()) {
    case SeedKind::kTransaction: {
      const TransactionSeed& tx = seed.tx();
      return "tx|" + tx.from.str() + "|" + tx.to.str() + "|" + u256_dec(tx.value) + "|" +
             codec::normalize_inputdata(tx.inputdata, catalog) + "|" +
             u256_dec(tx.gas_price) + "|" + std::to_string(tx.chain_id.value);
    }
    case SeedKind::kMessage: {
      const MessageSeed& m = seed.msg();
      std::string head = "msg|" + codec::to_string(m.format) + "|" + codec::to_string(m.method) +
                         "|" + std::to_string(m.connected_network.value) + "|" +
                         m.connected_uri + "|";
      return head + std::visit(
                        [](const auto& p) -> std::string {
                          using T = std::decay_t<decltype(p)>;
                          if constexpr (std::is_same_v<T, HashPayload>) {
                            return canonical_hex(p.hash);
                          } else if constexpr (std::is_same_v<T, codec::PersonalSignPayload>) {
                            return canonical_hex(p.challenge) + "|" + to_lower(p.address);
                          } else if constexpr (std::is_same_v<T, TypedDataPayload>) {
                            try {
                              return codec::canonical_eip712(codec::parse_eip712(p.json));
                            } catch (const Error& e) {
                              throw Error("unnormalizable", e.what());
                            }
                          } else {
                            return p.text;
                          }
                        },
                        m.payload);
    }
    case SeedKind::kInteraction:
      return "ui|" + to_json(seed.interaction()).dump();
  }
  return "";
}

}  // namespace walletdiff
