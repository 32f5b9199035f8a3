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

#include "walletdiff/seed/crawler.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "walletdiff/common/keccak.h"

namespace walletdiff::seed {

namespace {

std::string screen_hash(const wallet::UiSnapshot& snap) {
  std::string text;
  for (const auto& e : snap.elements) {
    text += e.label;
    text += e.kind == wallet::ElementKind::kInput ? "\x1finput\x1e" : "\x1f" "clickable\x1e";
  }
  Hash256 h = keccak256(text);
  return to_hex(std::span<const std::uint8_t>(h.data(), 6), false);
}

std::string kind_name(wallet::ElementKind k) {
  return k == wallet::ElementKind::kInput ? "input" : "clickable";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const std::map<std::string, std::string>& context_words() {
  static const std::map<std::string, std::string> kWords = {
      {"send", "send"},   {"swap", "swap"},    {"bridge", "bridge"},
      {"tokens", "token"}, {"receive", "receive"}, {"buy", "buy"},
  };
  return kWords;
}

struct FieldInfo {
  const char* field;
  const char* type;
};

const std::map<std::string, FieldInfo>& field_words() {
  static const std::map<std::string, FieldInfo> kWords = {
      {"recipient", {"recipient", "address"}},
      {"address", {"address", "address"}},
      {"to", {"recipient", "address"}},
      {"amount", {"amount", "integer-amount"}},
      {"value", {"amount", "integer-amount"}},
      {"decimals", {"decimals", "integer-amount"}},
      {"search", {"search", "token-name"}},
      {"token", {"token", "token-name"}},
      {"symbol", {"symbol", "free-text"}},
      {"chain", {"chain", "free-text"}},
      {"network", {"chain", "free-text"}},
      {"memo", {"memo", "free-text"}},
      {"ens", {"ens", "ens-name"}},
      {"name", {"ens", "ens-name"}},
  };
  return kWords;
}

std::string random_address(Rng& rng) {
  std::array<std::uint8_t, 20> b{};
  for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
  return Address(b).str();
}

std::string random_symbol(Rng& rng) {
  std::string s;
  std::size_t n = rng.between(3, 5);
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('A' + rng.below(26));
  return s;
}

// ENS names across every network, deduplicated and sorted.
std::vector<std::string> ens_names(const chain::ChainWorld& world) {
  std::set<std::string> names;
  for (const auto& [_, net] : world.networks) {
    for (const auto& [name, rec] : net.ens) names.insert(name);
  }
  return {names.begin(), names.end()};
}

}  // namespace

const UiNode* UiGraph::find(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::vector<std::string> UiGraph::path_to(std::string_view id) const {
  std::vector<std::string> out;
  const UiNode* n = find(id);
  while (n && n->kind != "entry") {
    out.push_back(n->id);
    n = find(n->parent);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

UiGraph crawl_ui(wallet::UiNavigator& navigator, const CrawlOptions& options) {
  UiGraph g;
  g.nodes.push_back({"entry", "", "", "entry", "", "", {}});
  struct Pending {
    std::vector<std::string> clicks;
    std::string parent;
  };
  std::deque<Pending> queue{{{}, "entry"}};
  std::set<std::string> seen_screens;
  std::set<std::string> used_ids{"entry"};

  while (!queue.empty() && seen_screens.size() < options.max_screens) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    navigator.reset();
    for (const auto& id : p.clicks) {
      if (!navigator.click(id)) throw CrawlAborted("navigation to '" + id + "' failed", g);
    }
    wallet::UiSnapshot snap = navigator.snapshot();
    std::string hash = screen_hash(snap);
    if (!seen_screens.insert(hash).second) continue;
    for (const auto& e : snap.elements) {
      std::string id = e.id;
      for (int k = 2; used_ids.count(id); ++k) id = e.id + "#" + std::to_string(k);
      used_ids.insert(id);
      g.nodes.push_back({id, e.id, e.label, kind_name(e.kind), p.parent, hash, p.clicks});
      g.edges.push_back({p.parent, id});
      if (e.kind == wallet::ElementKind::kClickable) {
        std::vector<std::string> next = p.clicks;
        next.push_back(e.id);
        queue.push_back({std::move(next), id});
      }
    }
  }
  navigator.reset();
  return g;
}

std::string to_dot(const UiGraph& graph) {
  std::string out = "digraph ui {\n";
  for (const auto& n : graph.nodes) {
    std::string shape = n.kind == "entry" ? "point" : n.kind == "input" ? "box" : "circle";
    out += "  \"" + dot_escape(n.id) + "\" [label=\"" + dot_escape(n.label) + "\", shape=" +
           shape + "];\n";
  }
  for (const auto& e : graph.edges) {
    out += "  \"" + dot_escape(e.from) + "\" -> \"" + dot_escape(e.to) + "\";\n";
  }
  out += "}\n";
  return out;
}

Json to_json(const UiGraph& graph) {
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back({{"id", n.id},
                     {"element", n.element_id},
                     {"label", n.label},
                     {"kind", n.kind},
                     {"parent", n.parent},
                     {"screen", n.screen}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) edges.push_back({{"from", e.from}, {"to", e.to}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

InputSemantics infer_semantics(const UiGraph& graph, std::string_view node_id) {
  const UiNode* node = graph.find(node_id);
  if (!node) return {"free-text", "free-text"};
  std::string context;
  for (const UiNode* a = graph.find(node->parent); a && a->kind != "entry";
       a = graph.find(a->parent)) {
    auto it = context_words().find(to_lower(a->label));
    if (it != context_words().end()) {
      context = it->second;
      break;
    }
  }
  auto f = field_words().find(to_lower(node->label));
  if (f == field_words().end()) return {"free-text", "free-text"};
  std::string tag = context.empty() ? f->second.field : context + "-" + f->second.field;
  return {tag, f->second.type};
}

std::vector<Seed> generate_interactions(const UiGraph& graph, const chain::ChainWorld& world,
                                        NetworkId network, std::size_t per_input, Rng& rng) {
  std::vector<std::string> names = ens_names(world);
  std::vector<std::string> symbols;
  if (world.has_network(network)) {
    std::set<std::string> s;
    for (const auto& [_, tok] : world.network(network).tokens) s.insert(tok.symbol);
    symbols.assign(s.begin(), s.end());
  }

  std::vector<Seed> out;
  for (const auto& node : graph.nodes) {
    if (node.kind != "input") continue;
    InputSemantics sem = infer_semantics(graph, node.id);
    std::vector<std::string> values;
    if (sem.data_type == "address") {
      values.push_back(random_address(rng));
      for (const auto& n : names) {
        std::string stem = n.substr(0, n.size() - (n.ends_with(".eth") ? 4 : 0));
        values.push_back(Address::parse(stem) ? stem : n);
      }
    } else if (sem.data_type == "integer-amount") {
      bool small = sem.tag.ends_with("decimals");
      for (std::size_t i = 0; i < per_input; ++i) {
        values.push_back(std::to_string(small ? rng.between(0, 24) : rng.between(1, 1000000)));
      }
    } else if (sem.data_type == "token-name") {
      values = symbols;
    } else if (sem.data_type == "ens-name") {
      values = names;
    } else {
      for (std::size_t i = 0; i < per_input; ++i) values.push_back(random_symbol(rng));
    }
    if (values.size() > per_input) values.resize(per_input);
    std::vector<std::string> path;
    for (const auto& id : graph.path_to(node.id)) path.push_back(graph.find(id)->element_id);
    for (const auto& v : values) {
      InteractionSeed is;
      is.network = network;
      is.expected_semantics = sem.tag;
      is.steps.push_back({path, "input", v, sem.data_type});
      Seed s;
      s.origin = "crawl";
      s.body = std::move(is);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace walletdiff::seed
