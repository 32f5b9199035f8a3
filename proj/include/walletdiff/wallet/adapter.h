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

#ifndef WALLETDIFF_WALLET_ADAPTER_H_
#define WALLETDIFF_WALLET_ADAPTER_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walletdiff/codec/seed.h"
#include "walletdiff/common/types.h"
#include "walletdiff/wallet/profile.h"
#include "walletdiff/wallet/screen.h"
#include "walletdiff/wallet/ui.h"

namespace walletdiff::wallet {

// User edits to token metadata, keyed by token contract.
struct TokenOverride {
  std::optional<std::string> symbol;
  std::optional<unsigned> decimals;
};

struct WalletSession {
  NetworkId network = kSepolia;
  std::string connected_uri;
  Address account;
  std::map<Address, TokenOverride> token_overrides;
};

// The surface a wallet under test exposes to the campaign. Each submit call
// returns every screen the wallet showed, in order.
class WalletAdapter {
 public:
  virtual ~WalletAdapter() = default;

  virtual const WalletProfile& profile() const = 0;
  // Returns to the home screen with a fresh session connected to a dapp on
  // `network`.
  virtual void reset(NetworkId network, std::string uri) = 0;
  virtual const WalletSession& session() const = 0;

  virtual std::vector<RenderedScreen> submit_transaction(const TransactionSeed& tx) = 0;
  virtual std::vector<RenderedScreen> submit_message(const MessageSeed& msg) = 0;
  virtual std::vector<RenderedScreen> submit_interaction(const InteractionSeed& seed) = 0;

  virtual UiNavigator& navigator() = 0;
};

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_ADAPTER_H_
