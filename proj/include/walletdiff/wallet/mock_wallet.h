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

#ifndef WALLETDIFF_WALLET_MOCK_WALLET_H_
#define WALLETDIFF_WALLET_MOCK_WALLET_H_

#include <string>
#include <vector>

#include "walletdiff/chain/world.h"
#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/catalog.h"
#include "walletdiff/wallet/adapter.h"

namespace walletdiff::wallet {

// A configurable in-process wallet. Its behavior is entirely determined by a
// WalletProfile, so known weaknesses can be switched on one at a time.
//
// The world is read-only; simulations run on private copies.
class MockWallet : public WalletAdapter {
 public:
  MockWallet(WalletProfile profile, const chain::ChainWorld& world,
             const codec::SignatureCatalog& catalog, UiLayout layout);

  const WalletProfile& profile() const override { return profile_; }
  void reset(NetworkId network, std::string uri) override;
  const WalletSession& session() const override { return session_; }

  std::vector<RenderedScreen> submit_transaction(const TransactionSeed& tx) override;
  std::vector<RenderedScreen> submit_message(const MessageSeed& msg) override;
  std::vector<RenderedScreen> submit_interaction(const InteractionSeed& seed) override;

  UiNavigator& navigator() override { return navigator_; }

 private:
  struct RuleHit {
    std::string rule;
    AlertLevel level = AlertLevel::kNone;
    std::string text;
  };

  void hit(std::vector<RuleHit>& hits, const std::string& rule, std::string text) const;
  void check_addresses(std::vector<RuleHit>& hits, const std::vector<Address>& addresses) const;
  bool label_known(const Address& a) const;

  std::vector<RenderedScreen> finish(std::vector<RuleHit> hits,
                                     std::vector<RenderedScreen> details) const;
  RenderedScreen simulate(const TransactionSeed& tx) const;
  RenderedScreen render_transaction(const TransactionSeed& tx,
                                    const std::optional<codec::DecodedCall>& call,
                                    bool undecodable) const;
  RenderedScreen render_message(const MessageSeed& msg) const;
  RenderedScreen unchanged_screen(const std::string& id) const;

  bool apply_input(const UiElement& element, const std::string& data, RenderedScreen& out);
  std::string display_text(std::string_view raw) const;
  std::string token_symbol(const chain::TokenContract& t) const;
  unsigned token_decimals(const chain::TokenContract& t) const;

  WalletProfile profile_;
  const chain::ChainWorld& world_;
  const codec::SignatureCatalog& catalog_;
  LayoutNavigator navigator_;
  WalletSession session_;
};

// Replaces C0 controls, DEL and bytes outside valid UTF-8 with \xNN escapes.
std::string escape_for_display(std::string_view raw);

}  // namespace walletdiff::wallet

#endif  // WALLETDIFF_WALLET_MOCK_WALLET_H_
