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

#ifndef WALLETDIFF_WALLET_SCREEN_H_
#define WALLETDIFF_WALLET_SCREEN_H_

#include <string>
#include <vector>

#include "walletdiff/common/json_util.h"

namespace walletdiff::wallet {

// Pixel rectangle of one rendered text run. Rows are `kLineHeight` apart.
struct Region {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

inline constexpr int kLineHeight = 20;
inline constexpr int kCharWidth = 8;

struct ScreenLine {
  std::string text;
  Region region;
};

struct Button {
  std::string label;
  std::string node_id;
};

// One frame shown to the user. `lines` carry no ordering guarantee; readers
// sort by region.
struct RenderedScreen {
  std::string screen_id;
  std::vector<ScreenLine> lines;
  std::vector<Button> buttons;
  bool changed_from_previous = true;
};

// Appends text at the next free row of `screen`.
void add_line(RenderedScreen& screen, std::string text, int indent = 0);

Json to_json(const RenderedScreen& screen);
RenderedScreen screen_from_json(const Json& j);

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_SCREEN_H_
