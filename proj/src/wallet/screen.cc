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

#include "walletdiff/wallet/screen.h"

#include <algorithm>

namespace walletdiff::wallet {

void add_line(RenderedScreen& screen, std::string text, int indent) {
  int row = 0;
  for (const auto& l : screen.lines) row = std::max(row, l.region.y / kLineHeight + 1);
  Region r{indent * kCharWidth, row * kLineHeight,
           static_cast<int>(text.size()) * kCharWidth, kLineHeight};
  screen.lines.push_back({std::move(text), r});
}

Json to_json(const RenderedScreen& screen) {
  Json lines = Json::array();
  for (const auto& l : screen.lines) {
    lines.push_back({{"text", l.text},
                     {"region", {l.region.x, l.region.y, l.region.width, l.region.height}}});
  }
  Json buttons = Json::array();
  for (const auto& b : screen.buttons) buttons.push_back({{"label", b.label}, {"node", b.node_id}});
  return Json{{"screenId", screen.screen_id},
              {"changedFromPrevious", screen.changed_from_previous},
              {"lines", lines},
              {"buttons", buttons}};
}

RenderedScreen screen_from_json(const Json& j) {
  RenderedScreen s;
  s.screen_id = j.value("screenId", "");
  s.changed_from_previous = j.value("changedFromPrevious", true);
  for (const auto& l : j.value("lines", Json::array())) {
    const Json& r = l["region"];
    s.lines.push_back({l.value("text", ""),
                       Region{r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()}});
  }
  for (const auto& b : j.value("buttons", Json::array())) {
    s.buttons.push_back({b.value("label", ""), b.value("node", "")});
  }
  return s;
}

}  // namespace walletdiff::wallet
