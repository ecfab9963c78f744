// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "sufficere/tree.hpp"

namespace sufficere {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(int line) : line_(line) {}

  [[noreturn]] void fail(TreeErrorCode code, const std::string& msg,
                         int column) const {
    throw TreeError(code, msg, line_, column);
  }

  std::int64_t integer(const Token& tok) const {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) {
      fail(TreeErrorCode::kSyntax,
           "expected a non-negative integer, got '" + std::string(tok.text) +
               "'",
           tok.column);
    }
    return value;
  }

  NodeId node(const Token& tok, std::size_t n) const {
    const std::int64_t v = integer(tok);
    if (static_cast<std::uint64_t>(v) >= n) {
      fail(TreeErrorCode::kDanglingNode,
           "node " + std::string(tok.text) + " does not exist", tok.column);
    }
    return static_cast<NodeId>(v);
  }

 private:
  int line_;
};

}  // namespace

AnnotatedTree parse_tree(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<NodeId> parent;
  std::vector<char> letter;
  std::vector<NodeId> link;
  std::vector<NodeId> order;
  std::vector<int> edge_line;
  std::vector<int> link_line;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Parser p(line_no);
    const std::string_view keyword = tokens[0].text;

    if (!have_header) {
      if (keyword != "nodes" || tokens.size() != 2) {
        p.fail(TreeErrorCode::kSyntax, "expected 'nodes <n>' header",
               tokens[0].column);
      }
      const std::int64_t count = p.integer(tokens[1]);
      if (count < 1 || count > INT32_MAX / 2) {
        p.fail(TreeErrorCode::kNodeCount, "node count out of range",
               tokens[1].column);
      }
      n = static_cast<std::size_t>(count);
      parent.assign(n, kNoNode);
      letter.assign(n, kWildcard);
      link.assign(n, kNoNode);
      edge_line.assign(n, 0);
      link_line.assign(n, 0);
      parent[0] = kBot;
      have_header = true;
      continue;
    }

    if (keyword == "edge") {
      if (tokens.size() != 4) {
        p.fail(TreeErrorCode::kSyntax,
               "expected 'edge <parent> <child> <letter>'", tokens[0].column);
      }
      const NodeId from = p.node(tokens[1], n);
      const NodeId to = p.node(tokens[2], n);
      if (tokens[3].text.size() != 1) {
        p.fail(TreeErrorCode::kSyntax, "first letter must be one character",
               tokens[3].column);
      }
      const char c = tokens[3].text[0];
      if (!is_edge_letter(c)) {
        p.fail(TreeErrorCode::kReservedLetter,
               "'" + std::string(1, c) + "' cannot label an edge",
               tokens[3].column);
      }
      if (to == kRoot) {
        p.fail(TreeErrorCode::kNotATree, "the root cannot be a child",
               tokens[2].column);
      }
      if (from == to) {
        p.fail(TreeErrorCode::kNotATree, "self loop", tokens[2].column);
      }
      if (parent[to] != kNoNode) {
        p.fail(TreeErrorCode::kNotATree,
               "node " + std::to_string(to) + " already has a parent",
               tokens[2].column);
      }
      parent[to] = from;
      letter[to] = c;
      edge_line[to] = line_no;
      order.push_back(to);
    } else if (keyword == "slink") {
      if (tokens.size() != 3) {
        p.fail(TreeErrorCode::kSyntax, "expected 'slink <from> <to>'",
               tokens[0].column);
      }
      const NodeId from = p.node(tokens[1], n);
      const NodeId to = p.node(tokens[2], n);
      if (from == kRoot) {
        p.fail(TreeErrorCode::kRootLink,
               "the suffix link of the root is implied", tokens[1].column);
      }
      if (link[from] != kNoNode) {
        p.fail(TreeErrorCode::kDuplicateLink,
               "node " + std::to_string(from) + " already has a suffix link",
               tokens[1].column);
      }
      link[from] = to;
      link_line[from] = line_no;
    } else {
      p.fail(TreeErrorCode::kSyntax,
             "unknown directive '" + std::string(keyword) + "'",
             tokens[0].column);
    }
  }

  if (!have_header) {
    throw TreeError(TreeErrorCode::kSyntax, "missing 'nodes <n>' header");
  }
  for (std::size_t x = 1; x < n; ++x) {
    if (parent[x] == kNoNode) {
      throw TreeError(TreeErrorCode::kNotATree,
                      "node " + std::to_string(x) + " has no incoming edge");
    }
  }
  std::vector<int> degree(n, 0);
  for (std::size_t x = 1; x < n; ++x) ++degree[parent[x]];
  for (std::size_t x = 1; x < n; ++x) {
    if (link[x] == kNoNode) continue;
    if (degree[x] == 0) {
      throw TreeError(TreeErrorCode::kLinkOnLeaf,
                      "leaf " + std::to_string(x) + " has a suffix link",
                      link_line[x]);
    }
    if (link[x] != kRoot && degree[link[x]] == 0) {
      throw TreeError(TreeErrorCode::kLinkTarget,
                      "suffix link of node " + std::to_string(x) +
                          " points to a leaf",
                      link_line[x]);
    }
  }
  return AnnotatedTree::assemble(std::move(parent), std::move(letter),
                                 std::move(link), order, edge_line);
}

std::vector<NodeId> canonical_order(const AnnotatedTree& tree) {
  std::vector<NodeId> order;
  order.reserve(tree.size());
  std::vector<NodeId> stack{kRoot};
  std::vector<NodeId> kids;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    order.push_back(x);
    const auto c = tree.children(x);
    kids.assign(c.begin(), c.end());
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return tree.letter(a) > tree.letter(b);  // reversed for the stack
    });
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  return order;
}

namespace {

std::vector<NodeId> ranks(const AnnotatedTree& tree,
                          const std::vector<NodeId>& order) {
  std::vector<NodeId> rank(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<NodeId>(i);
  }
  return rank;
}

}  // namespace

std::string serialize_tree(const AnnotatedTree& tree) {
  const auto order = canonical_order(tree);
  const auto rank = ranks(tree, order);
  std::string out = "nodes " + std::to_string(tree.size()) + "\n";
  for (NodeId x : order) {
    if (x == kRoot) continue;
    out += "edge " + std::to_string(rank[tree.parent(x)]) + " " +
           std::to_string(rank[x]) + " " + tree.letter(x) + "\n";
  }
  for (NodeId x : order) {
    if (x == kRoot || tree.is_leaf(x)) continue;
    const NodeId s = tree.suffix_link(x);
    if (s == kNoNode) continue;
    out += "slink " + std::to_string(rank[x]) + " " + std::to_string(rank[s]) +
           "\n";
  }
  return out;
}

bool canonical_equal(const AnnotatedTree& a, const AnnotatedTree& b) {
  if (a.size() != b.size() || a.leaf_count() != b.leaf_count()) return false;
  const auto order_a = canonical_order(a);
  const auto order_b = canonical_order(b);
  const auto rank_a = ranks(a, order_a);
  const auto rank_b = ranks(b, order_b);
  const auto mapped = [](const std::vector<NodeId>& rank, NodeId x) {
    return x < 0 ? x : rank[x];
  };
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    const NodeId x = order_a[i];
    const NodeId y = order_b[i];
    if (a.child_count(x) != b.child_count(y)) return false;
    if (i == 0) continue;
    if (a.letter(x) != b.letter(y)) return false;
    if (rank_a[a.parent(x)] != rank_b[b.parent(y)]) return false;
    if (mapped(rank_a, a.suffix_link(x)) != mapped(rank_b, b.suffix_link(y))) {
      return false;
    }
  }
  return true;
}

}  // namespace sufficere
