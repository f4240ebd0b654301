#include "treecong/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace treecong {

LeafSet RootedTree::full_leaf_set() const {
  LeafSet all(leaf_count());
  all.set();
  return all;
}

bool RootedTree::is_binary() const {
  for (const Node& n : nodes_) {
    if (!n.is_leaf() && n.children.size() != 2) return false;
  }
  return true;
}

bool RootedTree::is_caterpillar() const {
  if (!is_binary()) return false;
  for (const Node& n : nodes_) {
    if (n.is_leaf()) continue;
    std::size_t internal_children = 0;
    for (NodeId c : n.children) {
      if (!nodes_[c].is_leaf()) ++internal_children;
    }
    if (internal_children > 1) return false;
  }
  return true;
}

RootedTree::NodeId TreeBuilder::add_leaf(std::string label) {
  RootedTree::Node n;
  n.leaf = static_cast<std::int32_t>(raw_labels_.size());
  raw_labels_.push_back(std::move(label));
  nodes_.push_back(std::move(n));
  return static_cast<RootedTree::NodeId>(nodes_.size() - 1);
}

RootedTree::NodeId TreeBuilder::add_internal(std::vector<RootedTree::NodeId> children) {
  RootedTree::Node n;
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  auto id = static_cast<RootedTree::NodeId>(nodes_.size() - 1);
  for (RootedTree::NodeId c : nodes_[id].children) nodes_[c].parent = id;
  return id;
}

RootedTree TreeBuilder::finish(RootedTree::NodeId root) {
  if (nodes_.empty() || root >= nodes_.size()) throw Error("tree builder: invalid root");

  RootedTree tree;
  tree.nodes_ = std::move(nodes_);
  tree.root_ = root;

  // Leaf labels, sorted; remap leaf indices onto the sorted order.
  std::vector<std::string> sorted = raw_labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("duplicate leaf label");
  }
  for (const std::string& l : sorted) {
    if (l.empty()) throw Error("empty leaf label");
  }
  std::map<std::string, std::int32_t> index_of;
  for (std::size_t i = 0; i < sorted.size(); ++i) index_of[sorted[i]] = static_cast<std::int32_t>(i);
  tree.labels_ = std::move(sorted);
  tree.leaf_nodes_.assign(tree.labels_.size(), RootedTree::kNoNode);

  // Iterative postorder from the root; verifies reachability and arity.
  const std::size_t n = tree.nodes_.size();
  std::vector<char> seen(n, 0);
  std::vector<std::pair<RootedTree::NodeId, std::size_t>> stack;
  stack.emplace_back(root, 0);
  seen[root] = 1;
  tree.postorder_.reserve(n);
  while (!stack.empty()) {
    auto& [id, next_child] = stack.back();
    const RootedTree::Node& node = tree.nodes_[id];
    if (!node.is_leaf() && node.children.size() < 2) {
      throw Error("internal node with fewer than 2 children");
    }
    if (next_child < node.children.size()) {
      RootedTree::NodeId c = node.children[next_child++];
      if (c >= n || seen[c]) throw Error("tree builder: node reached twice");
      seen[c] = 1;
      stack.emplace_back(c, 0);
    } else {
      tree.postorder_.push_back(id);
      stack.pop_back();
    }
  }
  if (tree.postorder_.size() != n) throw Error("tree builder: unreachable nodes");

  // Remap leaves and fill per-node leaf sets bottom-up.
  const std::size_t t = tree.labels_.size();
  tree.below_.assign(n, LeafSet(t));
  for (RootedTree::NodeId id : tree.postorder_) {
    RootedTree::Node& node = tree.nodes_[id];
    if (node.is_leaf()) {
      node.leaf = index_of[raw_labels_[node.leaf]];
      tree.leaf_nodes_[node.leaf] = id;
      tree.below_[id].set(node.leaf);
    } else {
      for (RootedTree::NodeId c : node.children) tree.below_[id] |= tree.below_[c];
    }
  }
  tree.nodes_[root].parent = RootedTree::kNoNode;
  return tree;
}

std::vector<LeafSet> ClusterSet::nontrivial() const {
  std::vector<LeafSet> out;
  out.reserve(all.size());
  for (const LeafSet& c : all) {
    if (c.count() < labels.size()) out.push_back(c);
  }
  return out;
}

static bool cluster_less(const LeafSet& a, const LeafSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a < b;
}

ClusterSet clusters(const RootedTree& tree) {
  ClusterSet cs;
  cs.labels = tree.labels();
  for (RootedTree::NodeId id : tree.postorder()) {
    if (!tree.node(id).is_leaf()) cs.all.push_back(tree.leaves_below(id));
  }
  std::sort(cs.all.begin(), cs.all.end(), cluster_less);
  return cs;
}

bool same_topology(const RootedTree& a, const RootedTree& b) {
  if (a.labels() != b.labels()) return false;
  return clusters(a).all == clusters(b).all;
}

namespace detail {

RootedTree induced(const RootedTree& tree, const LeafSet& keep) {
  TreeBuilder builder;
  // Per node: the id of its surviving image in the builder, or kNoNode.
  std::vector<RootedTree::NodeId> image(tree.node_count(), RootedTree::kNoNode);
  for (RootedTree::NodeId id : tree.postorder()) {
    const RootedTree::Node& node = tree.node(id);
    if (node.is_leaf()) {
      if (keep.test(static_cast<std::size_t>(node.leaf))) {
        image[id] = builder.add_leaf(tree.labels()[node.leaf]);
      }
      continue;
    }
    std::vector<RootedTree::NodeId> kids;
    for (RootedTree::NodeId c : node.children) {
      if (image[c] != RootedTree::kNoNode) kids.push_back(image[c]);
    }
    if (kids.size() >= 2) {
      image[id] = builder.add_internal(std::move(kids));
    } else if (kids.size() == 1) {
      image[id] = kids[0];  // contract the unary node
    }
  }
  return builder.finish(image[tree.root()]);
}

}  // namespace detail

RootedTree restrict_to(const RootedTree& tree, const std::vector<std::string>& keep) {
  if (keep.size() < 3) throw TooFewLeaves("restriction needs at least 3 leaves");
  LeafSet mask(tree.leaf_count());
  const auto& labels = tree.labels();
  for (const std::string& l : keep) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw LeafNotFound("leaf not in tree: " + l);
    mask.set(static_cast<std::size_t>(it - labels.begin()));
  }
  if (mask.count() < 3) throw TooFewLeaves("restriction needs at least 3 distinct leaves");
  return detail::induced(tree, mask);
}

std::pair<RootedTree, RootedTree> common_leaf_reduction(const RootedTree& a,
                                                        const RootedTree& b) {
  std::vector<std::string> shared;
  std::set_intersection(a.labels().begin(), a.labels().end(), b.labels().begin(),
                        b.labels().end(), std::back_inserter(shared));
  if (shared.size() < 3) {
    throw InsufficientOverlap("trees share " + std::to_string(shared.size()) +
                              " leaves; need at least 3");
  }
  return {restrict_to(a, shared), restrict_to(b, shared)};
}

}  // namespace treecong
