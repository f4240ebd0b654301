#include "treecong/newick.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>

namespace treecong {

namespace {

bool is_structural(char c) {
  return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  // Parses one tree starting at pos_; leaves pos_ just past the ";".
  RootedTree parse_one() {
    builder_ = TreeBuilder();
    labels_seen_.clear();
    skip_ws();
    if (eof()) throw err(ParseError::Kind::EmptyLabel, pos_, "empty tree statement");
    RootedTree::NodeId root = parse_subtree();
    skip_ws();
    if (eof() || text_[pos_] != ';') {
      throw err(ParseError::Kind::UnbalancedParentheses, pos_, "expected ';'");
    }
    ++pos_;
    return builder_.finish(root);
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  RootedTree::NodeId parse_subtree() {
    skip_ws();
    if (eof()) throw err(ParseError::Kind::UnbalancedParentheses, pos_, "unexpected end of input");
    if (text_[pos_] == '(') {
      const std::size_t open_at = pos_;
      ++pos_;
      std::vector<RootedTree::NodeId> children;
      children.push_back(parse_subtree());
      skip_ws();
      while (!eof() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(parse_subtree());
        skip_ws();
      }
      if (eof() || text_[pos_] != ')') {
        throw err(ParseError::Kind::UnbalancedParentheses, open_at, "unmatched '('");
      }
      ++pos_;
      discard_annotations();
      if (children.size() == 1) return children[0];  // contract unary group
      return builder_.add_internal(std::move(children));
    }
    const std::size_t label_at = pos_;
    std::string label = parse_label();
    if (label.empty()) throw err(ParseError::Kind::EmptyLabel, label_at, "leaf label expected");
    if (!labels_seen_.insert(label).second) {
      throw err(ParseError::Kind::DuplicateLeafLabel, label_at, "duplicate leaf label '" + label + "'");
    }
    RootedTree::NodeId leaf = builder_.add_leaf(std::move(label));
    discard_length();
    return leaf;
  }

  // Internal-node label and branch length, both ignored.
  void discard_annotations() {
    skip_ws();
    if (!eof() && (text_[pos_] == '\'' || !is_structural(text_[pos_]))) {
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) parse_label();
    }
    discard_length();
  }

  void discard_length() {
    skip_ws();
    if (eof() || text_[pos_] != ':') return;
    ++pos_;
    skip_ws();
    while (!eof() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           !is_structural(text_[pos_])) {
      ++pos_;
    }
  }

  std::string parse_label() {
    std::string out;
    if (!eof() && text_[pos_] == '\'') {
      const std::size_t open_at = pos_;
      ++pos_;
      while (true) {
        if (eof()) throw err(ParseError::Kind::UnbalancedParentheses, open_at, "unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (!eof() && text_[pos_] == '\'') {  // '' escapes a quote
            out.push_back('\'');
            ++pos_;
          } else {
            break;
          }
        } else {
          out.push_back(c);
        }
      }
      return out;
    }
    while (!eof() && !is_structural(text_[pos_]) &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_++]);
    }
    return out;
  }

  static ParseError err(ParseError::Kind kind, std::size_t offset, const std::string& what) {
    return ParseError(kind, offset, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
  std::set<std::string> labels_seen_;
};

}  // namespace

RootedTree parse_newick(std::string_view text) {
  Parser parser(text);
  RootedTree tree = parser.parse_one();
  parser.skip_ws();
  if (!parser.eof()) {
    throw ParseError(ParseError::Kind::TrailingGarbage, parser.pos(), "trailing text after ';'");
  }
  return tree;
}

std::vector<RootedTree> parse_newick_list(std::string_view text) {
  std::vector<RootedTree> trees;
  Parser parser(text);
  parser.skip_ws();
  while (!parser.eof()) {
    trees.push_back(parser.parse_one());
    parser.skip_ws();
  }
  return trees;
}

std::vector<RootedTree> read_newick(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_newick_list(text);
}

namespace {

void write_subtree(const RootedTree& tree, RootedTree::NodeId id,
                   const std::vector<std::int32_t>& min_leaf, std::string& out) {
  const RootedTree::Node& node = tree.node(id);
  if (node.is_leaf()) {
    const std::string& label = tree.labels()[node.leaf];
    bool needs_quotes = label.find_first_of("(),:;' \t\n") != std::string::npos;
    if (!needs_quotes) {
      out += label;
    } else {
      out += '\'';
      for (char c : label) {
        out += c;
        if (c == '\'') out += '\'';
      }
      out += '\'';
    }
    return;
  }
  std::vector<RootedTree::NodeId> order = node.children;
  std::sort(order.begin(), order.end(), [&](RootedTree::NodeId a, RootedTree::NodeId b) {
    return min_leaf[a] < min_leaf[b];
  });
  out += '(';
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    write_subtree(tree, order[i], min_leaf, out);
  }
  out += ')';
}

}  // namespace

std::string write_newick(const RootedTree& tree) {
  // Smallest descendant label index per node; label indices are already in
  // lexicographic order.
  std::vector<std::int32_t> min_leaf(tree.node_count());
  for (RootedTree::NodeId id : tree.postorder()) {
    const RootedTree::Node& node = tree.node(id);
    if (node.is_leaf()) {
      min_leaf[id] = node.leaf;
    } else {
      std::int32_t best = min_leaf[node.children[0]];
      for (RootedTree::NodeId c : node.children) best = std::min(best, min_leaf[c]);
      min_leaf[id] = best;
    }
  }
  std::string out;
  write_subtree(tree, tree.root(), min_leaf, out);
  out += ';';
  return out;
}

}  // namespace treecong
