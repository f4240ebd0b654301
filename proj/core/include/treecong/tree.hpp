#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecong/errors.hpp"

namespace treecong {

/// Bitset over a tree's (sorted) leaf-label universe. Bit i corresponds to
/// the i-th label in lexicographic order.
using LeafSet = boost::dynamic_bitset<>;

class TreeBuilder;

/// Immutable rooted dendrogram over uniquely labeled leaves.
///
/// Nodes live in an arena indexed by NodeId. Every internal node has at
/// least two children; leaves carry a label index into `labels()`, which is
/// sorted lexicographically so that leaf indices are comparable across trees
/// sharing a label set. Child order is presentational only; serialization
/// canonicalizes it.
class RootedTree {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNoNode = static_cast<NodeId>(-1);

  struct Node {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;  // empty for leaves
    std::int32_t leaf = -1;        // index into labels(), -1 for internal nodes
    bool is_leaf() const { return leaf >= 0; }
  };

  NodeId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[id]; }

  /// Leaf labels in lexicographic order; T = labels().size().
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t leaf_count() const { return labels_.size(); }

  /// Leaf-label universe as a full bitset (all bits set).
  LeafSet full_leaf_set() const;

  /// Set of labels below `id`, as a bitset over labels().
  const LeafSet& leaves_below(NodeId id) const { return below_[id]; }

  /// Nodes in postorder (children before parents, root last).
  const std::vector<NodeId>& postorder() const { return postorder_; }

  /// Node of the leaf labeled labels()[label_index].
  NodeId leaf_node(std::size_t label_index) const { return leaf_nodes_[label_index]; }

  bool is_binary() const;

  /// True when the tree is a caterpillar (maximally asymmetrical binary
  /// tree): binary, and every internal node has at most one internal child.
  bool is_caterpillar() const;

 private:
  friend class TreeBuilder;
  RootedTree() = default;

  std::vector<Node> nodes_;
  std::vector<std::string> labels_;
  std::vector<NodeId> leaf_nodes_;
  std::vector<LeafSet> below_;
  std::vector<NodeId> postorder_;
  NodeId root_ = kNoNode;
};

/// Arena-style constructor for RootedTree. Leaves and internal nodes are
/// added bottom-up; finish() validates the shape and freezes the result.
class TreeBuilder {
 public:
  RootedTree::NodeId add_leaf(std::string label);
  RootedTree::NodeId add_internal(std::vector<RootedTree::NodeId> children);

  /// Validates that `root` reaches every added node exactly once, that all
  /// internal nodes have >= 2 children and that leaf labels are unique.
  /// Throws Error (or ParseError::DuplicateLeafLabel via parse paths) on
  /// violation.
  RootedTree finish(RootedTree::NodeId root);

 private:
  std::vector<RootedTree::Node> nodes_;
  std::vector<std::string> raw_labels_;  // per leaf node, in insertion order
};

/// Set of clusters (one per internal node) of a tree, over the tree's sorted
/// label universe. `all` is sorted by (popcount, bits) so that equal cluster
/// sets compare equal; the full leaf set (root cluster) is present and is
/// the only trivial member.
struct ClusterSet {
  std::vector<std::string> labels;
  std::vector<LeafSet> all;

  /// Clusters excluding the full leaf set.
  std::vector<LeafSet> nontrivial() const;
};

ClusterSet clusters(const RootedTree& tree);

/// True when both trees have the same label set and the same cluster set.
bool same_topology(const RootedTree& a, const RootedTree& b);

/// Induced topology on `keep`: prunes all other leaves and contracts
/// internal nodes left with a single child. Requires keep to be a subset of
/// the tree's labels with |keep| >= 3.
RootedTree restrict_to(const RootedTree& tree, const std::vector<std::string>& keep);

/// Both trees restricted to their shared labels; requires >= 3 in common.
std::pair<RootedTree, RootedTree> common_leaf_reduction(const RootedTree& a,
                                                        const RootedTree& b);

namespace detail {

/// restrict_to without the |keep| >= 3 floor; `keep` is a bitset over
/// tree.labels() with at least one bit set.
RootedTree induced(const RootedTree& tree, const LeafSet& keep);

}  // namespace detail

}  // namespace treecong
