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

#include "walletdiff/chain/execution.h"

#include <algorithm>
#include <numeric>

#include "walletdiff/codec/abi.h"
#include "walletdiff/codec/inputdata.h"
#include "walletdiff/common/error.h"
#include "walletdiff/common/keccak.h"

namespace walletdiff::chain {

namespace {

struct Revert {
  std::string reason;
};

struct AssetMeta {
  std::string symbol;
  unsigned decimals = 0;
};

using HoldingKey = std::pair<std::string, Address>;

struct Holdings {
  std::map<HoldingKey, U256> amounts;
  std::map<std::string, AssetMeta> meta;
};

Holdings holdings(const NetworkState& net) {
  Holdings h;
  h.meta["native"] = {net.native_symbol, 18};
  for (const auto& [a, bal] : net.native) h.amounts[{"native", a}] = bal;
  for (const auto& [addr, tok] : net.tokens) {
    std::string key = addr.str();
    h.meta[key] = {tok.symbol, tok.decimals};
    for (const auto& [a, bal] : tok.balances) h.amounts[{key, a}] = bal;
  }
  for (const auto& [addr, nft] : net.nfts) {
    std::string key = addr.str();
    h.meta[key] = {nft.symbol, 0};
    for (const auto& [id, owner] : nft.owners) h.amounts[{key, owner}] += 1;
  }
  return h;
}

std::vector<Delta> diff(const Holdings& before, const Holdings& after) {
  std::set<HoldingKey> keys;
  for (const auto& [k, v] : before.amounts) keys.insert(k);
  for (const auto& [k, v] : after.amounts) keys.insert(k);
  std::vector<Delta> out;
  for (const HoldingKey& k : keys) {
    auto b = before.amounts.find(k);
    auto a = after.amounts.find(k);
    I256 vb = b == before.amounts.end() ? I256(0) : static_cast<I256>(b->second);
    I256 va = a == after.amounts.end() ? I256(0) : static_cast<I256>(a->second);
    if (va == vb) continue;
    const AssetMeta& m = after.meta.count(k.first) ? after.meta.at(k.first) : before.meta.at(k.first);
    out.push_back(Delta{k.first, m.symbol, m.decimals, k.second, va - vb});
  }
  return out;
}

bool compare(const U256& lhs, Comparator cmp, const U256& rhs) {
  switch (cmp) {
    case Comparator::kEq: return lhs == rhs;
    case Comparator::kNe: return lhs != rhs;
    case Comparator::kLt: return lhs < rhs;
    case Comparator::kLe: return lhs <= rhs;
    case Comparator::kGt: return lhs > rhs;
    case Comparator::kGe: return lhs >= rhs;
  }
  return false;
}

class Executor {
 public:
  Executor(NetworkState& net, const BlockEnv& env, const TransactionSeed& tx,
           const codec::SignatureCatalog& catalog)
      : net_(net), env_(env), tx_(tx), catalog_(catalog) {}

  void run() {
    Bytes data;
    try {
      data = codec::normalize_inputdata_bytes(tx_.inputdata, catalog_);
    } catch (const Error&) {
      throw Revert{"decode-error"};
    }
    if (tx_.value > 0) move_native(tx_.from, tx_.to, tx_.value);
    if (data.empty()) {
      if (auto it = net_.behaviors.find(tx_.to); it != net_.behaviors.end()) {
        run_behavior(it->second);
      }
      return;
    }
    try {
      call_ = codec::decode_call(data, catalog_);
    } catch (const Error&) {
      throw Revert{"decode-error"};
    }
    if (net_.tokens.count(tx_.to)) {
      token_call(net_.tokens.at(tx_.to));
    } else if (net_.nfts.count(tx_.to)) {
      nft_call(net_.nfts.at(tx_.to));
    } else if (net_.permit2 && *net_.permit2 == tx_.to) {
      permit2_call();
    } else if (net_.behaviors.count(tx_.to)) {
      run_behavior(net_.behaviors.at(tx_.to));
    } else {
      throw Revert{"no-code"};
    }
  }

  std::vector<Event> events;
  std::uint64_t actions = 0;

 private:
  const codec::AbiArg& arg(std::size_t i) const {
    if (!call_ || i >= call_->args.size()) throw Revert{"bad-argument"};
    return call_->args[i];
  }

  std::string signature() const {
    return call_ && call_->known() ? call_->function->signature : std::string();
  }

  void move_native(const Address& from, const Address& to, const U256& amount) {
    U256& bal = net_.native[from];
    if (bal < amount) throw Revert{"insufficient-funds"};
    bal -= amount;
    net_.native[to] += amount;
    ++actions;
  }

  void move_token(TokenContract& tok, const Address& from, const Address& to, const U256& amount) {
    U256& bal = tok.balances[from];
    if (bal < amount) throw Revert{"insufficient-balance"};
    bal -= amount;
    tok.balances[to] += amount;
    events.push_back({"Transfer", {tok.address.str(), from.str(), to.str(), u256_dec(amount)}});
    ++actions;
  }

  void set_allowance(TokenContract& tok, const Address& owner, const Address& spender,
                     const U256& amount) {
    tok.allowances[{owner, spender}] = amount;
    events.push_back({"Approval", {tok.address.str(), owner.str(), spender.str(), u256_dec(amount)}});
    ++actions;
  }

  void move_nft(NftContract& nft, const Address& from, const Address& to, const U256& id) {
    auto it = nft.owners.find(id);
    if (it == nft.owners.end() || it->second != from) throw Revert{"not-owner"};
    it->second = to;
    events.push_back({"Transfer", {nft.address.str(), from.str(), to.str(), u256_dec(id)}});
    ++actions;
  }

  void set_operator(NftContract& nft, const Address& owner, const Address& op, bool approved) {
    nft.operator_approvals[{owner, op}] = approved;
    events.push_back({"ApprovalForAll", {nft.address.str(), owner.str(), op.str(),
                                         approved ? "true" : "false"}});
    ++actions;
  }

  void token_call(TokenContract& tok) {
    const std::string sig = signature();
    const Address& caller = tx_.from;
    if (sig == "transfer(address,uint256)") {
      move_token(tok, caller, arg(0).address(), arg(1).word);
    } else if (sig == "transferFrom(address,address,uint256)") {
      Address from = arg(0).address();
      U256 amount = arg(2).word;
      if (from != caller) {
        U256& allowance = tok.allowances[{from, caller}];
        if (allowance < amount) throw Revert{"insufficient-allowance"};
        if (allowance != u256_max()) allowance -= amount;
      }
      move_token(tok, from, arg(1).address(), amount);
    } else if (sig == "approve(address,uint256)") {
      set_allowance(tok, caller, arg(0).address(), arg(1).word);
    } else if (sig == "increaseAllowance(address,uint256)") {
      U256 current = tok.allowances[{caller, arg(0).address()}];
      if (u256_max() - current < arg(1).word) throw Revert{"allowance-overflow"};
      set_allowance(tok, caller, arg(0).address(), current + arg(1).word);
    } else if (sig == "permit(address,address,uint256,uint256,uint8,bytes32,bytes32)") {
      set_allowance(tok, arg(0).address(), arg(1).address(), arg(2).word);
    } else if (sig == "balanceOf(address)") {
      ++actions;
    } else {
      throw Revert{"unsupported-function"};
    }
  }

  void nft_call(NftContract& nft) {
    const std::string sig = signature();
    const Address& caller = tx_.from;
    if (sig == "setApprovalForAll(address,bool)") {
      set_operator(nft, caller, arg(0).address(), arg(1).word != 0);
    } else if (sig == "transferFrom(address,address,uint256)") {
      Address from = arg(0).address();
      if (from != caller) {
        auto it = nft.operator_approvals.find({from, caller});
        if (it == nft.operator_approvals.end() || !it->second) throw Revert{"not-approved"};
      }
      move_nft(nft, from, arg(1).address(), arg(2).word);
    } else if (sig == "permitForAll(address,address,bool,uint256,uint256,bytes)") {
      set_operator(nft, arg(0).address(), arg(1).address(), arg(2).word != 0);
    } else {
      throw Revert{"unsupported-function"};
    }
  }

  TokenContract& token_at(const Address& a) {
    auto it = net_.tokens.find(a);
    if (it == net_.tokens.end()) throw Revert{"unknown-token"};
    return it->second;
  }

  void permit2_call() {
    auto approval = call_ ? codec::approval_semantics(*call_) : std::nullopt;
    if (!approval) throw Revert{"unsupported-function"};
    Address owner = arg(0).address();
    if (approval->kind == codec::ApprovalKind::kPermit2Single) {
      set_allowance(token_at(arg(1).address()), owner, approval->spender, arg(2).word);
    } else if (approval->kind == codec::ApprovalKind::kPermit2Batch) {
      const auto& tokens = arg(1).items;
      const auto& amounts = arg(2).items;
      if (tokens.size() != amounts.size()) throw Revert{"length-mismatch"};
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto word = u256_to_word(tokens[i]);
        set_allowance(token_at(Address::from_word(word.data())), owner, approval->spender,
                      amounts[i]);
      }
    } else {
      throw Revert{"unsupported-function"};
    }
  }

  U256 read_var(const Condition& c, const ContractBehavior& b) const {
    switch (c.var) {
      case CondVar::kGasPrice: return env_.gas_price;
      case CondVar::kCoinbase: return env_.coinbase.as_u256();
      case CondVar::kTimestamp: return env_.timestamp;
      case CondVar::kCaller: return tx_.from.as_u256();
      case CondVar::kValue: return tx_.value;
      case CondVar::kStorage: {
        auto it = b.storage.find(c.key);
        return it == b.storage.end() ? U256(0) : it->second;
      }
    }
    return 0;
  }

  Address party(const PartyRef& p, const ContractBehavior& b) const {
    switch (p.kind) {
      case PartyRef::Kind::kCaller: return tx_.from;
      case PartyRef::Kind::kSelf: return b.address;
      case PartyRef::Kind::kCoinbase: return env_.coinbase;
      case PartyRef::Kind::kArg: return arg(static_cast<std::size_t>(p.arg)).address();
      case PartyRef::Kind::kLiteral: return p.literal;
    }
    return {};
  }

  U256 amount(const AmountRef& a, const U256& all) const {
    switch (a.kind) {
      case AmountRef::Kind::kLiteral: return a.literal;
      case AmountRef::Kind::kAll: return all;
      case AmountRef::Kind::kTxValue: return tx_.value;
      case AmountRef::Kind::kArg: return arg(static_cast<std::size_t>(a.arg)).word;
    }
    return 0;
  }

  void run_behavior(ContractBehavior& b) {
    std::string fn = call_ ? call_->function_name() : "";
    for (const Clause& clause : b.clauses) {
      if (clause.function && *clause.function != fn) continue;
      bool match = std::all_of(clause.conditions.begin(), clause.conditions.end(),
                               [&](const Condition& c) {
                                 return compare(read_var(c, b), c.cmp, c.constant);
                               });
      if (!match) continue;
      for (const Action& a : clause.actions) apply(a, b);
      return;
    }
    throw Revert{"no-matching-clause"};
  }

  void apply(const Action& a, ContractBehavior& b) {
    switch (a.op) {
      case Action::Op::kTransferToken: {
        TokenContract& tok = token_at(a.asset);
        Address from = party(a.from, b);
        move_token(tok, from, party(a.to, b), amount(a.amount, tok.balances[from]));
        break;
      }
      case Action::Op::kTransferNative: {
        Address from = party(a.from, b);
        move_native(from, party(a.to, b), amount(a.amount, net_.native[from]));
        break;
      }
      case Action::Op::kTransferNft: {
        auto it = net_.nfts.find(a.asset);
        if (it == net_.nfts.end()) throw Revert{"unknown-nft"};
        move_nft(it->second, party(a.from, b), party(a.to, b), amount(a.amount, 0));
        break;
      }
      case Action::Op::kMint: {
        TokenContract& tok = token_at(a.asset);
        U256 n = amount(a.amount, 0);
        Address to = party(a.to, b);
        tok.total_supply += n;
        tok.balances[to] += n;
        events.push_back({"Transfer", {tok.address.str(), Address().str(), to.str(), u256_dec(n)}});
        ++actions;
        break;
      }
      case Action::Op::kSetAllowance: {
        TokenContract& tok = token_at(a.asset);
        set_allowance(tok, party(a.from, b), party(a.to, b), amount(a.amount, u256_max()));
        break;
      }
      case Action::Op::kSetOperatorApproval: {
        auto it = net_.nfts.find(a.asset);
        if (it == net_.nfts.end()) throw Revert{"unknown-nft"};
        set_operator(it->second, party(a.from, b), party(a.to, b), a.approved);
        break;
      }
      case Action::Op::kSetStorage:
        b.storage[a.key] = a.storage_value;
        ++actions;
        break;
      case Action::Op::kEmitEvent:
        events.push_back({a.key, a.args});
        ++actions;
        break;
      case Action::Op::kRevert:
        throw Revert{a.key.empty() ? "reverted" : a.key};
    }
  }

  NetworkState& net_;
  const BlockEnv& env_;
  const TransactionSeed& tx_;
  const codec::SignatureCatalog& catalog_;
  std::optional<codec::DecodedCall> call_;
};

}  // namespace

I256 ExecutionOutcome::delta_for(const Address& account, std::string_view symbol) const {
  I256 total = 0;
  for (const Delta& d : deltas) {
    if (d.account == account && d.symbol == symbol) total += d.amount;
  }
  return total;
}

ExecutionOutcome execute_transaction(ChainWorld& world, NetworkId network, const BlockEnv& env,
                                     const TransactionSeed& tx,
                                     const codec::SignatureCatalog& catalog) {
  NetworkState& net = world.network(network);
  if (!net.native.count(tx.from)) throw Error("unknown-sender", tx.from.str());

  NetworkState backup = net;
  Holdings before = holdings(net);
  Executor exec(net, env, tx, catalog);
  ExecutionOutcome out;
  try {
    exec.run();
  } catch (const Revert& r) {
    net = std::move(backup);
    out.status = Status::kRevert;
    out.revert_reason = r.reason;
    out.gas_used = kBaseGas;
    return out;
  }
  out.deltas = diff(before, holdings(net));
  out.events = std::move(exec.events);
  out.gas_used = kBaseGas + kGasPerAction * exec.actions;
  return out;
}

BlockResult form_and_execute_block(ChainWorld& world, NetworkId network,
                                   const std::vector<TransactionSeed>& mempool,
                                   const codec::SignatureCatalog& catalog) {
  NetworkState& net = world.network(network);
  BlockResult r;
  r.order.resize(mempool.size());
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
    return mempool[a].gas_price > mempool[b].gas_price;
  });
  for (std::size_t idx : r.order) {
    BlockEnv env = net.env;
    env.gas_price = mempool[idx].gas_price;
    try {
      r.outcomes.push_back(execute_transaction(world, network, env, mempool[idx], catalog));
    } catch (const Error& e) {
      ExecutionOutcome bad;
      bad.status = Status::kRevert;
      bad.revert_reason = e.code();
      r.outcomes.push_back(bad);
    }
  }
  net.env.number += 1;
  net.env.timestamp += 12;
  return r;
}

Address create2_address(const Address& deployer, const Hash256& salt,
                        const ContractBehavior& behavior) {
  Hash256 code_hash = keccak256(behavior.to_json().dump());
  Bytes pre;
  pre.push_back(0xff);
  pre.insert(pre.end(), deployer.bytes().begin(), deployer.bytes().end());
  pre.insert(pre.end(), salt.begin(), salt.end());
  pre.insert(pre.end(), code_hash.begin(), code_hash.end());
  Hash256 h = keccak256(pre);
  std::array<std::uint8_t, 20> a{};
  std::copy(h.begin() + 12, h.end(), a.begin());
  return Address(a);
}

Address deploy_create2(ChainWorld& world, NetworkId network, const Address& deployer,
                       const Hash256& salt, ContractBehavior behavior) {
  NetworkState& net = world.network(network);
  Address addr = create2_address(deployer, salt, behavior);
  if (net.has_code(addr)) throw Error("already-deployed", addr.str());
  behavior.address = addr;
  net.behaviors[addr] = std::move(behavior);
  return addr;
}

Json to_json(const ExecutionOutcome& outcome) {
  Json deltas = Json::array();
  for (const Delta& d : outcome.deltas) {
    deltas.push_back({{"asset", d.asset}, {"symbol", d.symbol}, {"account", d.account.str()},
                      {"amount", i256_dec(d.amount)}});
  }
  Json events = Json::array();
  for (const Event& e : outcome.events) events.push_back({{"name", e.name}, {"args", e.args}});
  Json j{{"status", outcome.success() ? "success" : "revert"},
         {"deltas", deltas},
         {"events", events},
         {"gasUsed", outcome.gas_used}};
  if (!outcome.success()) j["reason"] = outcome.revert_reason;
  return j;
}

}  // namespace walletdiff::chain
