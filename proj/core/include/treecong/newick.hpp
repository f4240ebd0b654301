#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "treecong/tree.hpp"

namespace treecong {

/// Parses a single ";"-terminated Newick statement. Branch lengths and
/// internal-node labels are accepted and discarded; quoted labels
/// ('like this', with '' escaping a quote) are supported; groups with a
/// single child are contracted. Anything but whitespace after the ";" is a
/// TrailingGarbage error. Throws ParseError with the offending byte offset.
RootedTree parse_newick(std::string_view text);

/// Parses every ";"-terminated statement in `text`, in order.
std::vector<RootedTree> parse_newick_list(std::string_view text);

/// Reads parse_newick_list from a stream (e.g. a .nwk file).
std::vector<RootedTree> read_newick(std::istream& in);

/// Canonical serialization: children ordered by their lexicographically
/// smallest descendant label, no branch lengths, terminated with ";".
/// parse(write(t)) is topologically identical to t, and write is a fixed
/// point over parse.
std::string write_newick(const RootedTree& tree);

}  // namespace treecong
