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

#include "walletdiff/wallet/ui.h"

#include "walletdiff/common/error.h"

namespace walletdiff::wallet {

namespace {
constexpr const char* kBad = "bad-layout";
}

const UiElement* UiScreenDef::find(std::string_view element_id) const {
  for (const auto& e : elements) {
    if (e.id == element_id) return &e;
  }
  return nullptr;
}

UiLayout UiLayout::from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != "ui-layout/1") {
    throw Error(kBad, "expected schema ui-layout/1");
  }
  UiLayout layout;
  layout.home = require_string(doc, "home", kBad);
  for (const auto& [id, sj] : require(doc, "screens", kBad).items()) {
    UiScreenDef s;
    s.id = id;
    s.title = sj.value("title", id);
    for (const auto& ej : sj.value("elements", Json::array())) {
      UiElement e;
      e.id = require_string(ej, "id", kBad);
      e.label = ej.value("label", "");
      std::string kind = ej.value("kind", "clickable");
      if (kind == "clickable") {
        e.kind = ElementKind::kClickable;
      } else if (kind == "input") {
        e.kind = ElementKind::kInput;
      } else {
        throw Error(kBad, "unknown element kind " + kind);
      }
      e.target = ej.value("target", "");
      e.role = ej.value("role", "");
      if (ej.contains("token")) e.token = Address::from_string(ej["token"].get<std::string>());
      s.elements.push_back(std::move(e));
    }
    layout.screens[id] = std::move(s);
  }
  if (!layout.screens.count(layout.home)) throw Error(kBad, "home screen missing");
  for (const auto& [id, s] : layout.screens) {
    for (const auto& e : s.elements) {
      if (e.kind == ElementKind::kClickable && !layout.screens.count(e.target)) {
        throw Error(kBad, "element " + e.id + " targets unknown screen '" + e.target + "'");
      }
    }
  }
  return layout;
}

UiLayout UiLayout::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const UiScreenDef& UiLayout::screen(const std::string& id) const {
  auto it = screens.find(id);
  if (it == screens.end()) throw Error(kBad, "unknown screen " + id);
  return it->second;
}

LayoutNavigator::LayoutNavigator(UiLayout layout)
    : layout_(std::move(layout)), current_(layout_.home) {}

void LayoutNavigator::reset() { current_ = layout_.home; }

UiSnapshot LayoutNavigator::snapshot() const {
  const UiScreenDef& s = current();
  UiSnapshot snap{s.title, {}};
  for (const auto& e : s.elements) snap.elements.push_back({e.id, e.label, e.kind});
  return snap;
}

bool LayoutNavigator::click(const std::string& element_id) {
  const UiElement* e = current().find(element_id);
  if (!e || e->kind != ElementKind::kClickable) return false;
  current_ = e->target;
  return true;
}

}  // namespace walletdiff::wallet
