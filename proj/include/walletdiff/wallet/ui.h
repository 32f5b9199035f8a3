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

#ifndef WALLETDIFF_WALLET_UI_H_
#define WALLETDIFF_WALLET_UI_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walletdiff/common/json_util.h"
#include "walletdiff/common/types.h"

namespace walletdiff::wallet {

enum class ElementKind { kClickable, kInput };

struct UiElement {
  std::string id;
  std::string label;
  ElementKind kind = ElementKind::kClickable;
  std::string target;  // screen reached by clicking
  std::string role;    // input behavior: recipient, amount, token-search, ...
  std::optional<Address> token;  // token bound to metadata-edit inputs
};

struct UiScreenDef {
  std::string id;
  std::string title;
  std::vector<UiElement> elements;

  const UiElement* find(std::string_view element_id) const;
};

// Static description of a wallet's screens: {"schema": "ui-layout/1",
// "home": id, "screens": {id: {"title", "elements": [...]}}}.
struct UiLayout {
  std::string home;
  std::map<std::string, UiScreenDef> screens;

  // Throws Error("bad-layout").
  static UiLayout from_json(const Json& doc);
  static UiLayout load(const std::filesystem::path& path);
  const UiScreenDef& screen(const std::string& id) const;
};

struct ElementView {
  std::string id;
  std::string label;
  ElementKind kind = ElementKind::kClickable;
};

struct UiSnapshot {
  std::string title;
  std::vector<ElementView> elements;
};

// What a crawler can do with a live wallet UI: look at the current screen,
// click an element, and return to the start screen.
class UiNavigator {
 public:
  virtual ~UiNavigator() = default;
  virtual void reset() = 0;
  virtual UiSnapshot snapshot() const = 0;
  // False when the element is absent or not clickable.
  virtual bool click(const std::string& element_id) = 0;
};

// Navigator over a static layout.
class LayoutNavigator : public UiNavigator {
 public:
  explicit LayoutNavigator(UiLayout layout);

  void reset() override;
  UiSnapshot snapshot() const override;
  bool click(const std::string& element_id) override;

  const UiLayout& layout() const { return layout_; }
  const UiScreenDef& current() const { return layout_.screen(current_); }

 private:
  UiLayout layout_;
  std::string current_;
};

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_UI_H_
