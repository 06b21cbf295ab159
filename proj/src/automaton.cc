#include "tra/automaton.hh"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tra {

RankedAlphabet::RankedAlphabet(std::vector<SymbolInfo> symbols)
    : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (SymbolId i = 0; i < symbols_.size(); ++i) {
    if (!seen.insert(symbols_[i].name).second)
      throw std::invalid_argument("duplicate symbol name: " + symbols_[i].name);
    if (symbols_[i].rank == 0) leaf_symbols_.push_back(i);
    max_rank_ = std::max(max_rank_, symbols_[i].rank);
  }
}

std::optional<SymbolId> RankedAlphabet::index_of(const std::string& name) const {
  for (SymbolId i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

TreeAutomaton::TreeAutomaton(RankedAlphabet alphabet, std::uint32_t state_count,
                             std::vector<StateId> initial,
                             std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)) {
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
  std::sort(transitions_.begin(), transitions_.end());

  initial_mask_.assign(state_count_, 0);
  for (StateId q : initial_)
    if (q < state_count_) initial_mask_[q] = 1;

  by_source_.resize(state_count_);
  by_symbol_.resize(alphabet_.size());
  occurrences_.resize(state_count_);
  for (std::uint32_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    if (t.source < state_count_) by_source_[t.source].push_back(i);
    if (t.symbol < alphabet_.size()) by_symbol_[t.symbol].push_back(i);
    for (std::uint32_t pos = 0; pos < t.targets.size(); ++pos)
      if (t.targets[pos] < state_count_)
        occurrences_[t.targets[pos]].push_back({i, pos});
  }
}

bool TreeAutomaton::has_leaf_rule(StateId q, SymbolId s) const {
  for (std::uint32_t i : by_source_[q]) {
    const Transition& t = transitions_[i];
    if (t.symbol == s && t.targets.empty()) return true;
  }
  return false;
}

std::vector<std::string> validate(const TreeAutomaton& a) {
  std::vector<std::string> out;
  const auto& sigma = a.alphabet();
  for (StateId q : a.initial())
    if (q >= a.state_count())
      out.push_back("initial state " + std::to_string(q) + " out of range");
  const auto& ts = a.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Transition& t = ts[i];
    std::string tag = "transition #" + std::to_string(i);
    if (t.symbol >= sigma.size()) {
      out.push_back(tag + ": unknown symbol id " + std::to_string(t.symbol));
      continue;
    }
    tag += " <" + std::to_string(t.source) + "," + sigma.name(t.symbol) + ">";
    if (t.source >= a.state_count())
      out.push_back(tag + ": source out of range");
    if (t.targets.size() != sigma.rank(t.symbol))
      out.push_back(tag + ": arity mismatch, symbol rank " +
                    std::to_string(sigma.rank(t.symbol)) + " vs " +
                    std::to_string(t.targets.size()) + " targets");
    for (StateId r : t.targets)
      if (r >= a.state_count())
        out.push_back(tag + ": target " + std::to_string(r) + " out of range");
    if (i > 0 && ts[i] == ts[i - 1])
      out.push_back(tag + ": duplicate transition");
  }
  return out;
}

AutomatonStats stats(const TreeAutomaton& a) {
  AutomatonStats st;
  st.state_count = a.state_count();
  st.transition_count = a.transitions().size();
  st.per_symbol.assign(a.alphabet().size(), 0);
  for (const Transition& t : a.transitions())
    if (t.symbol < st.per_symbol.size()) ++st.per_symbol[t.symbol];
  st.initial_count = static_cast<std::uint32_t>(a.initial().size());
  return st;
}

std::vector<bool> productive_states(const TreeAutomaton& a) {
  std::vector<bool> productive(a.state_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Transition& t : a.transitions()) {
      if (t.source >= a.state_count() || productive[t.source]) continue;
      bool ok = true;
      for (StateId r : t.targets)
        if (r >= a.state_count() || !productive[r]) { ok = false; break; }
      if (ok) {
        productive[t.source] = true;
        changed = true;
      }
    }
  }
  return productive;
}

RemoveUselessResult remove_useless_mapped(const TreeAutomaton& a) {
  const std::uint32_t n = a.state_count();
  std::vector<bool> productive = productive_states(a);

  // Reachability runs on the productive restriction: a transition counts only
  // if its source and all targets survived the first phase. Doing it in this
  // order makes the operation idempotent.
  std::vector<bool> reachable(n, false);
  std::vector<StateId> stack;
  for (StateId q : a.initial())
    if (q < n && productive[q] && !reachable[q]) {
      reachable[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (std::uint32_t ti : a.transitions_from(q)) {
      const Transition& t = a.transition(ti);
      bool alive = true;
      for (StateId r : t.targets)
        if (!productive[r]) { alive = false; break; }
      if (!alive) continue;
      for (StateId r : t.targets)
        if (!reachable[r]) {
          reachable[r] = true;
          stack.push_back(r);
        }
    }
  }

  RemoveUselessResult res;
  res.old_to_new.assign(n, std::nullopt);
  StateId next = 0;
  for (StateId q = 0; q < n; ++q)
    if (productive[q] && reachable[q]) res.old_to_new[q] = next++;

  std::vector<StateId> initial;
  for (StateId q : a.initial())
    if (q < n && res.old_to_new[q]) initial.push_back(*res.old_to_new[q]);

  std::vector<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    if (t.source >= n || !res.old_to_new[t.source]) continue;
    Transition nt;
    nt.source = *res.old_to_new[t.source];
    nt.symbol = t.symbol;
    nt.targets.reserve(t.targets.size());
    bool alive = true;
    for (StateId r : t.targets) {
      if (r >= n || !res.old_to_new[r]) { alive = false; break; }
      nt.targets.push_back(*res.old_to_new[r]);
    }
    if (alive) transitions.push_back(std::move(nt));
  }
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());

  res.automaton = TreeAutomaton(a.alphabet(), next, std::move(initial),
                                std::move(transitions));
  return res;
}

TreeAutomaton remove_useless(const TreeAutomaton& a) {
  return remove_useless_mapped(a).automaton;
}

}  // namespace tra
