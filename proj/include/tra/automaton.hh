#pragma once

// Top-down nondeterministic tree automata: ranked alphabets, transitions,
// and the automaton value type shared by every algorithm in the library.
//
// Leaf rules are modelled as arity-0 transitions (empty target list); the
// unique final state they point to is implicit and never stored.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tra {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Raised when an operation exceeds its configured work budget
/// (determinization macro-states, saturation growth, ...).
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct SymbolInfo {
  std::string name;
  std::uint32_t rank = 0;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

/// A set of named symbols, each with a fixed arity. Symbol identity is the
/// dense index into the declaration order.
class RankedAlphabet {
public:
  RankedAlphabet() = default;
  explicit RankedAlphabet(std::vector<SymbolInfo> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId s) const { return symbols_[s].name; }
  std::uint32_t rank(SymbolId s) const { return symbols_[s].rank; }
  const std::vector<SymbolInfo>& symbols() const { return symbols_; }

  std::optional<SymbolId> index_of(const std::string& name) const;

  /// Indices of all rank-0 symbols, in declaration order.
  const std::vector<SymbolId>& leaf_symbols() const { return leaf_symbols_; }
  std::uint32_t max_rank() const { return max_rank_; }

  friend bool operator==(const RankedAlphabet& a, const RankedAlphabet& b) {
    return a.symbols_ == b.symbols_;
  }

private:
  std::vector<SymbolInfo> symbols_;
  std::vector<SymbolId> leaf_symbols_;
  std::uint32_t max_rank_ = 0;
};

/// One rule <source, symbol, targets>; targets.size() must equal the
/// symbol's rank, so leaf rules carry no targets.
struct Transition {
  StateId source = 0;
  SymbolId symbol = 0;
  std::vector<StateId> targets;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Position of a state inside a transition's target tuple; the unit of
/// Spoiler moves in upward games.
struct Occurrence {
  std::uint32_t transition = 0;  // index into TreeAutomaton::transitions()
  std::uint32_t position = 0;    // index into that transition's targets

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Immutable top-down tree automaton. Transitions are stored sorted by
/// (source, symbol, targets); lookup tables are built once at construction,
/// so values can be shared freely across threads.
class TreeAutomaton {
public:
  TreeAutomaton() = default;
  TreeAutomaton(RankedAlphabet alphabet, std::uint32_t state_count,
                std::vector<StateId> initial, std::vector<Transition> transitions);

  const RankedAlphabet& alphabet() const { return alphabet_; }
  std::uint32_t state_count() const { return state_count_; }
  const std::vector<StateId>& initial() const { return initial_; }
  bool is_initial(StateId q) const { return q < state_count_ && initial_mask_[q] != 0; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(std::uint32_t idx) const { return transitions_[idx]; }

  /// Indices of transitions with the given source, in (symbol, targets) order.
  const std::vector<std::uint32_t>& transitions_from(StateId q) const {
    return by_source_[q];
  }
  /// Indices of transitions over the given symbol.
  const std::vector<std::uint32_t>& transitions_with(SymbolId s) const {
    return by_symbol_[s];
  }
  /// Every (transition, position) where q appears as a target.
  const std::vector<Occurrence>& occurrences(StateId q) const {
    return occurrences_[q];
  }
  bool has_leaf_rule(StateId q, SymbolId s) const;

  friend bool operator==(const TreeAutomaton& a, const TreeAutomaton& b) {
    return a.state_count_ == b.state_count_ && a.initial_ == b.initial_ &&
           a.transitions_ == b.transitions_ && a.alphabet_ == b.alphabet_;
  }

private:
  RankedAlphabet alphabet_;
  std::uint32_t state_count_ = 0;
  std::vector<StateId> initial_;        // sorted, unique
  std::vector<Transition> transitions_; // sorted; duplicates kept as given
  std::vector<std::uint8_t> initial_mask_;
  std::vector<std::vector<std::uint32_t>> by_source_;
  std::vector<std::vector<std::uint32_t>> by_symbol_;
  std::vector<std::vector<Occurrence>> occurrences_;
};

struct AutomatonStats {
  std::uint32_t state_count = 0;
  std::uint64_t transition_count = 0;
  std::vector<std::uint64_t> per_symbol; // indexed by SymbolId
  std::uint32_t initial_count = 0;

  friend bool operator==(const AutomatonStats&, const AutomatonStats&) = default;
};

/// Reports every broken invariant (arity mismatches, out-of-range states,
/// duplicate rules); empty result means the automaton is well-formed.
std::vector<std::string> validate(const TreeAutomaton& a);

AutomatonStats stats(const TreeAutomaton& a);

struct RemoveUselessResult {
  TreeAutomaton automaton;
  /// old state -> new state, or nullopt for removed states.
  std::vector<std::optional<StateId>> old_to_new;
};

/// Drops states that cannot read any closed tree, then states unreachable
/// from the initial set, and re-indexes densely. Language preserving and
/// idempotent.
RemoveUselessResult remove_useless_mapped(const TreeAutomaton& a);
TreeAutomaton remove_useless(const TreeAutomaton& a);

/// States from which some closed tree can be read.
std::vector<bool> productive_states(const TreeAutomaton& a);

}  // namespace tra
