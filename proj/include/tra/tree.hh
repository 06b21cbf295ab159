#pragma once

// Finite ranked trees and an interned forest of all closed trees up to a
// bounded depth. The forest backs the brute-force language oracles: nodes
// are deduplicated so per-automaton sweeps run once per distinct subtree.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tra/automaton.hh"

namespace tra {

struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

struct TreeNode {
  std::string symbol;
  std::vector<TreePtr> children;
};

TreePtr make_tree(std::string symbol, std::vector<TreePtr> children = {});

/// Depth counts nodes along the longest path; a single leaf has depth 1.
std::uint32_t tree_depth(const TreePtr& t);

/// Canonical text form, e.g. "a(b,a(b,b))".
std::string tree_to_string(const TreePtr& t);

/// All closed trees over an alphabet with depth <= max_depth, interned:
/// structurally equal subtrees share one node id. Ids are ordered by depth,
/// then by symbol index, then by child tuples, so enumeration order is
/// deterministic and children always precede parents.
class TreeForest {
public:
  TreeForest(const RankedAlphabet& alphabet, std::uint32_t max_depth);

  const RankedAlphabet& alphabet() const { return alphabet_; }
  std::uint32_t max_depth() const { return max_depth_; }
  std::size_t size() const { return symbols_.size(); }

  SymbolId symbol(std::uint32_t id) const { return symbols_[id]; }
  std::uint32_t depth(std::uint32_t id) const { return depths_[id]; }
  std::span<const std::uint32_t> children(std::uint32_t id) const {
    return {child_pool_.data() + child_offsets_[id],
            alphabet_.rank(symbols_[id])};
  }

  TreePtr to_tree(std::uint32_t id) const;
  std::string to_string(std::uint32_t id) const;

  /// For each node, the set of automaton states that can read the tree,
  /// packed little-endian into 64-bit words ((n+63)/64 words per node).
  /// The automaton's alphabet must equal the forest's.
  std::vector<std::uint64_t> read_sets(const TreeAutomaton& a) const;
  static bool read_bit(const std::vector<std::uint64_t>& sets,
                       std::uint32_t words_per_node, std::uint32_t node,
                       StateId q) {
    return (sets[static_cast<std::size_t>(node) * words_per_node + q / 64] >>
            (q % 64)) & 1u;
  }

  /// One bit per node: does the automaton accept the tree from some initial
  /// state?
  std::vector<bool> accept_vector(const TreeAutomaton& a) const;

private:
  RankedAlphabet alphabet_;
  std::uint32_t max_depth_;
  std::vector<SymbolId> symbols_;
  std::vector<std::uint32_t> child_offsets_;
  std::vector<std::uint32_t> depths_;
  std::vector<std::uint32_t> child_pool_;
};

}  // namespace tra
