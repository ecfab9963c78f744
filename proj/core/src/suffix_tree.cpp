// Copyright 2026 The Sufficere Authors
// SPDX-License-Identifier: Apache-2.0

#include "sufficere/suffix_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace sufficere {
namespace {

std::string checked_text(std::string_view s, bool dollar) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == kTerminator) {
      if (dollar || i + 1 != s.size()) {
        throw std::invalid_argument(
            "'$' may only appear once, as the final character");
      }
      continue;
    }
    if (!is_edge_letter(c)) {
      throw std::invalid_argument(std::string("character '") + c +
                                  "' is reserved or not printable");
    }
  }
  std::string text(s);
  if (dollar) text.push_back(kTerminator);
  return text;
}

void set_child(SuffixTree::Node& parent, char c, NodeId child) {
  auto& kids = parent.children;
  auto it = std::lower_bound(
      kids.begin(), kids.end(), c,
      [](const std::pair<char, NodeId>& e, char key) { return e.first < key; });
  if (it != kids.end() && it->first == c) {
    it->second = child;
  } else {
    kids.insert(it, {c, child});
  }
}

}  // namespace

NodeId SuffixTree::child(NodeId x, char c) const {
  for (const auto& [letter, id] : nodes_[x].children) {
    if (letter == c) return id;
  }
  return kNoNode;
}

std::string SuffixTree::label(NodeId x) const {
  const Node& v = nodes_[x];
  return text_.substr(static_cast<std::size_t>(v.end - v.depth),
                      static_cast<std::size_t>(v.depth));
}

SuffixLocation SuffixTree::locate(std::string_view s) const {
  NodeId v = kRoot;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const NodeId w = child(v, s[pos]);
    if (w == kNoNode) throw std::invalid_argument("string does not occur");
    const std::string_view edge = edge_label(w);
    std::size_t k = 0;
    while (k < edge.size() && pos + k < s.size()) {
      if (edge[k] != s[pos + k]) {
        throw std::invalid_argument("string does not occur");
      }
      ++k;
    }
    pos += k;
    if (k < edge.size()) return {w, static_cast<std::int32_t>(k)};
    v = w;
  }
  return {v, 0};
}

NodeId SuffixTree::parent_of(SuffixLocation loc) const {
  return loc.is_explicit() ? loc.node : nodes_[loc.node].parent;
}

std::int32_t SuffixTree::string_depth(SuffixLocation loc) const {
  if (loc.is_explicit()) return nodes_[loc.node].depth;
  return nodes_[nodes_[loc.node].parent].depth + loc.offset;
}

// Parents, depths, and the suffix chain.
void SuffixTree::finish() {
  const auto m = static_cast<std::int32_t>(text_.size());
  std::vector<NodeId> stack{kRoot};
  nodes_[kRoot].depth = 0;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (const auto& [c, y] : nodes_[x].children) {
      nodes_[y].parent = x;
      nodes_[y].depth = nodes_[x].depth + edge_length(y);
      stack.push_back(y);
    }
  }
  nodes_[kRoot].link = kBot;

  // Suffix i + 1 starts below the link of the deepest internal node on the
  // path of suffix i, so the walk only skips whole edges (skip/count) and the
  // total work is linear.
  chain_.assign(static_cast<std::size_t>(m) + 1, SuffixLocation{});
  NodeId v = kRoot;
  for (std::int32_t i = 0; i <= m; ++i) {
    std::int32_t pos = i + nodes_[v].depth;
    std::int32_t remaining = m - pos;
    SuffixLocation loc{v, 0};
    while (remaining > 0) {
      const NodeId w = child(v, text_[pos]);
      const std::int32_t len = edge_length(w);
      if (remaining < len) {
        loc = {w, remaining};
        break;
      }
      remaining -= len;
      pos += len;
      v = w;
      loc = {w, 0};
    }
    chain_[static_cast<std::size_t>(i)] = loc;
    if (nodes_[v].children.empty()) v = nodes_[v].parent;
    v = v == kRoot ? kRoot : nodes_[v].link;
  }
}

SuffixTree build_suffix_tree(std::string_view s, bool dollar) {
  SuffixTree st;
  st.text_ = checked_text(s, dollar);
  const std::string& text = st.text_;
  const auto m = static_cast<std::int32_t>(text.size());
  auto& nodes = st.nodes_;
  nodes.emplace_back();

  const auto add_leaf = [&](NodeId parent, std::int32_t start) {
    const auto id = static_cast<NodeId>(nodes.size());
    SuffixTree::Node leaf;
    leaf.parent = parent;
    leaf.start = start;
    leaf.end = m;
    leaf.depth = nodes[parent].depth + (m - start);
    nodes.push_back(std::move(leaf));
    set_child(nodes[parent], text[start], id);
  };

  for (std::int32_t i = 0; i < m; ++i) {
    NodeId v = kRoot;
    std::int32_t pos = i;
    while (pos < m) {
      const NodeId w = st.child(v, text[pos]);
      if (w == kNoNode) {
        add_leaf(v, pos);
        break;
      }
      const std::int32_t start = nodes[w].start;
      const std::int32_t len = nodes[w].end - start;
      std::int32_t k = 0;
      while (k < len && pos + k < m && text[start + k] == text[pos + k]) ++k;
      if (k == len) {
        v = w;
        pos += len;
        continue;
      }
      if (pos + k == m) break;  // suffix ends inside the edge
      const auto mid = static_cast<NodeId>(nodes.size());
      SuffixTree::Node split;
      split.parent = v;
      split.start = start;
      split.end = start + k;
      split.depth = nodes[v].depth + k;
      nodes.push_back(std::move(split));
      set_child(nodes[v], text[start], mid);
      nodes[w].parent = mid;
      nodes[w].start = start + k;
      set_child(nodes[mid], text[start + k], w);
      add_leaf(mid, pos + k);
      break;
    }
  }

  // A node's label is text[end - depth, end).
  for (NodeId x = 1; x < static_cast<NodeId>(nodes.size()); ++x) {
    if (nodes[x].children.empty()) continue;
    const std::string_view label(text.data() + nodes[x].end - nodes[x].depth,
                                 static_cast<std::size_t>(nodes[x].depth));
    const SuffixLocation target = st.locate(label.substr(1));
    if (!target.is_explicit() || st.is_leaf(target.node)) {
      throw std::logic_error("suffix link target is not an internal node");
    }
    nodes[x].link = target.node;
  }
  st.finish();
  return st;
}

SuffixTree build_suffix_tree_online(std::string_view s, bool dollar) {
  SuffixTree st;
  st.text_ = checked_text(s, dollar);
  const std::string& text = st.text_;
  const auto m = static_cast<std::int32_t>(text.size());
  constexpr std::int32_t kOpen = std::numeric_limits<std::int32_t>::max();
  auto& nodes = st.nodes_;
  nodes.reserve(2 * static_cast<std::size_t>(m) + 1);
  nodes.emplace_back();

  const auto new_node = [&](std::int32_t start, std::int32_t end) {
    SuffixTree::Node v;
    v.start = start;
    v.end = end;
    nodes.push_back(std::move(v));
    return static_cast<NodeId>(nodes.size() - 1);
  };

  NodeId active_node = kRoot;
  std::int32_t active_edge = 0;
  std::int32_t active_length = 0;
  std::int32_t remainder = 0;

  for (std::int32_t pos = 0; pos < m; ++pos) {
    const char c = text[pos];
    NodeId pending_link = kNoNode;
    const auto link_pending = [&](NodeId target) {
      if (pending_link != kNoNode) nodes[pending_link].link = target;
      pending_link = target;
    };
    ++remainder;
    while (remainder > 0) {
      if (active_length == 0) active_edge = pos;
      const NodeId next = st.child(active_node, text[active_edge]);
      if (next == kNoNode) {
        const NodeId leaf = new_node(pos, kOpen);
        set_child(nodes[active_node], text[active_edge], leaf);
        link_pending(active_node);
      } else {
        const std::int32_t len =
            std::min(nodes[next].end, pos + 1) - nodes[next].start;
        if (active_length >= len) {
          active_edge += len;
          active_length -= len;
          active_node = next;
          continue;
        }
        if (text[nodes[next].start + active_length] == c) {
          ++active_length;
          link_pending(active_node);
          break;
        }
        const NodeId split =
            new_node(nodes[next].start, nodes[next].start + active_length);
        set_child(nodes[active_node], text[active_edge], split);
        const NodeId leaf = new_node(pos, kOpen);
        set_child(nodes[split], c, leaf);
        nodes[next].start += active_length;
        set_child(nodes[split], text[nodes[next].start], next);
        link_pending(split);
      }
      --remainder;
      if (active_node == kRoot && active_length > 0) {
        --active_length;
        active_edge = pos - remainder + 1;
      } else if (active_node != kRoot) {
        const NodeId link = nodes[active_node].link;
        active_node = link > 0 ? link : kRoot;
      }
    }
  }

  for (auto& v : nodes) {
    if (v.end == kOpen) v.end = m;
  }
  for (NodeId x = 1; x < static_cast<NodeId>(nodes.size()); ++x) {
    if (!nodes[x].children.empty() && nodes[x].link == kNoNode) {
      nodes[x].link = kRoot;
    }
  }
  st.finish();
  return st;
}

AnnotatedTree to_annotated(const SuffixTree& st) {
  const std::size_t n = st.size();
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    order.push_back(x);
    const auto& kids = st.node(x).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      stack.push_back(it->second);
    }
  }
  std::vector<NodeId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<NodeId>(i);

  std::vector<NodeId> parent(n, kBot);
  std::vector<char> letter(n, kWildcard);
  std::vector<NodeId> link(n, kNoNode);
  for (std::size_t i = 1; i < n; ++i) {
    const NodeId x = order[i];
    const auto& v = st.node(x);
    parent[i] = rank[v.parent];
    letter[i] = st.text()[v.start];
    if (!v.children.empty()) link[i] = rank[v.link];
  }
  return AnnotatedTree::from_arrays(std::move(parent), std::move(letter),
                                    std::move(link));
}

ChainClass classify(const SuffixTree& st, SuffixLocation loc) {
  const bool leaf = st.is_leaf(loc.node);
  if (loc.is_explicit()) {
    return leaf ? ChainClass::kLeaf : ChainClass::kExplicitInternal;
  }
  return leaf ? ChainClass::kImplicitOnLeafEdge
              : ChainClass::kImplicitOnInternalEdge;
}

ChainSegments suffix_chain_segments(const SuffixTree& st) {
  ChainSegments out;
  const auto chain = st.suffix_chain();
  int previous = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const ChainClass cls = classify(st, chain[i]);
    if (static_cast<int>(cls) < previous) {
      throw std::logic_error("suffix chain classes out of order");
    }
    previous = static_cast<int>(cls);
    switch (cls) {
      case ChainClass::kLeaf: out.leaves.push_back(chain[i]); break;
      case ChainClass::kImplicitOnLeafEdge:
        out.implicit_on_leaf_edges.push_back(chain[i]);
        break;
      case ChainClass::kImplicitOnInternalEdge:
        out.implicit_on_internal_edges.push_back(chain[i]);
        break;
      case ChainClass::kExplicitInternal:
        out.explicit_internal.push_back(chain[i]);
        break;
    }
  }
  return out;
}

bool realizes(std::string_view s, const AnnotatedTree& t) {
  if (s.size() < t.leaf_count()) return false;
  try {
    return canonical_equal(to_annotated(build_suffix_tree(s, false)), t);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace sufficere
