#pragma once

#include <cstddef>
#include <vector>

#include "treecong/tree.hpp"

namespace treecong {

/// Child-subtree profile of one polytomy (internal node with >= 3 children).
struct PolytomyProfile {
  std::size_t child_count = 0;             // f_i
  std::vector<std::size_t> child_sizes;    // leaf counts, descending
};

/// Counts extracted from a (typically strict-consensus) tree that the
/// consensus-family metrics consume.
struct ConsensusStats {
  std::size_t shared_nodes = 0;     // N: internal nodes, root included
  std::size_t polytomy_leaves = 0;  // P: leaf children of polytomous nodes
  std::size_t leaf_count = 0;       // T
  /// Leaf count below each internal node; element 0 is the root (== T).
  std::vector<std::size_t> subtree_sizes;
  std::vector<PolytomyProfile> polytomies;
};

/// Strict consensus of two trees over the same leaf set: exactly the
/// clusters present in both, with unshared structure collapsed into
/// polytomies. Throws LeafSetMismatch otherwise.
RootedTree strict_consensus(const RootedTree& a, const RootedTree& b);

ConsensusStats consensus_stats(const RootedTree& cons);

/// Builds the unique tree whose internal-node clusters are exactly the
/// given laminar family over `labels` (which must contain the full set).
RootedTree tree_from_clusters(const std::vector<std::string>& labels,
                              const std::vector<LeafSet>& family);

}  // namespace treecong
