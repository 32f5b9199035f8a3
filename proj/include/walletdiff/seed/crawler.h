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

#ifndef WALLETDIFF_SEED_CRAWLER_H_
#define WALLETDIFF_SEED_CRAWLER_H_

#include <string>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/seed.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/rng.h"
#include "walletdiff/wallet/ui.h"

namespace walletdiff::seed {

struct UiNode {
  std::string id;          // unique within the graph; "entry" for the root
  std::string element_id;  // id reported by the navigator
  std::string label;
  std::string kind;        // entry, clickable, input
  std::string parent;      // node whose click revealed this one; empty for entry
  std::string screen;      // hash of the screen the element sits on
  std::vector<std::string> clicks;  // element ids clicked from home to reach the screen
};

struct UiEdge {
  std::string from;
  std::string to;
};

// Interaction graph. Every interactable element appears once, under the click
// that first revealed its screen. Clicks leading back to a screen already
// seen add no edges, so the graph is a tree rooted at "entry".
struct UiGraph {
  std::vector<UiNode> nodes;
  std::vector<UiEdge> edges;

  const UiNode* find(std::string_view id) const;
  // Node ids from below the entry down to `id`, inclusive.
  std::vector<std::string> path_to(std::string_view id) const;
};

// Raised when the navigator refuses a click the crawler replays. Carries the
// graph built so far.
class CrawlAborted : public Error {
 public:
  CrawlAborted(const std::string& message, UiGraph partial)
      : Error("crawl-aborted", message), partial_(std::move(partial)) {}
  const UiGraph& partial() const { return partial_; }

 private:
  UiGraph partial_;
};

struct CrawlOptions {
  std::size_t max_screens = 256;
};

// Breadth-first walk from the home screen. Screens are identified by a hash
// of their element labels and kinds.
UiGraph crawl_ui(wallet::UiNavigator& navigator, const CrawlOptions& options = {});

std::string to_dot(const UiGraph& graph);
Json to_json(const UiGraph& graph);

struct InputSemantics {
  std::string tag;        // e.g. "send-recipient", "bridge-amount"
  std::string data_type;  // address, integer-amount, token-name, ens-name, free-text
};

// Reads the labels on the path from the entry to an input node: the nearest
// ancestor naming a context (send, swap, bridge, tokens) and the node's own
// label naming the field.
InputSemantics infer_semantics(const UiGraph& graph, std::string_view node_id);

// Typed input seeds for every input node: up to `per_input` values each.
// Address fields get a random address followed by ENS-derived candidates
// (names that embed an address contribute that address).
std::vector<Seed> generate_interactions(const UiGraph& graph, const chain::ChainWorld& world,
                                        NetworkId network, std::size_t per_input, Rng& rng);

}  // namespace walletdiff::seed

#endif  // WALLETDIFF_SEED_CRAWLER_H_
