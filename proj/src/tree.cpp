#include "peakparity/tree.hpp"

#include <algorithm>
#include <string>

namespace peakparity {

OrderedTree::OrderedTree() : parent_{root}, children_(1) {}

std::size_t OrderedTree::depth(NodeId n) const {
  std::size_t d = 0;
  for (; n != root; n = parent_.at(n))
    ++d;
  return d;
}

NodeId OrderedTree::add_child(NodeId n) {
  const NodeId id = children_.size();
  children_.at(n).push_back(id);
  children_.emplace_back();
  parent_.push_back(n);
  return id;
}

std::vector<NodeId> OrderedTree::preorder() const {
  std::vector<NodeId> order;
  order.reserve(node_count());
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    order.push_back(n);
    const auto& ch = children_[n];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
      stack.push_back(*it);
  }
  return order;
}

std::vector<int> OrderedTree::leaf_heights() const {
  std::vector<int> depth(node_count(), 0);
  std::vector<int> out;
  for (NodeId n : preorder()) {
    if (n != root)
      depth[n] = depth[parent_[n]] + 1;
    if (children_[n].empty())
      out.push_back(depth[n]);
  }
  return out;
}

std::string OrderedTree::to_parens() const {
  std::string out;
  out.reserve(2 * edge_count());
  // (node, next child index) frames
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [n, i] = stack.back();
    if (i < children_[n].size()) {
      const NodeId c = children_[n][i++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty())
        out.push_back(')');
    }
  }
  return out;
}

OrderedTree OrderedTree::from_parens(std::string_view text) {
  OrderedTree t;
  NodeId cur = root;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      cur = t.add_child(cur);
    } else if (text[i] == ')') {
      if (cur == root)
        throw Error(ErrorCode::InvalidTreeEncoding,
                    "unmatched ')' at position " + std::to_string(i), static_cast<std::int64_t>(i));
      cur = t.parent_[cur];
    } else {
      throw Error(ErrorCode::InvalidTreeEncoding,
                  "unexpected character '" + std::string(1, text[i]) + "' at position " +
                      std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  if (cur != root)
    throw Error(ErrorCode::InvalidTreeEncoding, "unclosed '(' in tree encoding",
                static_cast<std::int64_t>(text.size()));
  return t;
}

OrderedTree glove_to_tree(const DyckPath& p) {
  OrderedTree t;
  NodeId cur = OrderedTree::root;
  for (Step s : p.steps())
    cur = s == Step::Up ? t.add_child(cur) : t.parent(cur);
  return t;
}

DyckPath glove_to_dyck(const OrderedTree& t) {
  const std::string parens = t.to_parens();
  Steps s;
  s.reserve(parens.size());
  for (char c : parens)
    s.push_back(c == '(' ? Step::Up : Step::Down);
  return DyckPath::validate(std::move(s));
}

namespace {

constexpr unsigned even_bit = 1;
constexpr unsigned odd_bit = 2;

// For every node, the set of parities of its distances to leaves below it.
std::vector<unsigned> leaf_distance_parities(const OrderedTree& t) {
  std::vector<unsigned> mask(t.node_count(), 0);
  const auto order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId n = *it;
    if (t.is_leaf(n)) {
      mask[n] = even_bit;
      continue;
    }
    for (NodeId c : t.children(n)) {
      // one more edge flips each parity
      const unsigned m = mask[c];
      mask[n] |= ((m & even_bit) ? odd_bit : 0u) | ((m & odd_bit) ? even_bit : 0u);
    }
  }
  return mask;
}

Parity parity_from_mask(unsigned mask, NodeId edge) {
  if (mask == (even_bit | odd_bit))
    throw Error(ErrorCode::IllDefinedParity,
                "edge " + std::to_string(edge) + " has leaves below it at both parities",
                static_cast<std::int64_t>(edge));
  return mask == odd_bit ? Parity::Odd : Parity::Even;
}

} // namespace

Parity edge_parity(const OrderedTree& t, NodeId edge) {
  if (edge == OrderedTree::root || edge >= t.node_count())
    throw std::out_of_range("edge id " + std::to_string(edge) + " is not an edge of this tree");
  return parity_from_mask(leaf_distance_parities(t)[edge], edge);
}

char to_char(EdgeColor c) noexcept {
  switch (c) {
  case EdgeColor::Blue: return 'B';
  case EdgeColor::Red: return 'R';
  case EdgeColor::Black: return 'K';
  }
  return '?';
}

std::size_t EdgeColoring::count(EdgeColor c) const {
  if (colors_.empty())
    return 0;
  return static_cast<std::size_t>(std::count(colors_.begin() + 1, colors_.end(), c));
}

std::string EdgeColoring::serialize(const OrderedTree& t) const {
  std::string out;
  for (NodeId n : t.preorder())
    if (n != OrderedTree::root)
      out.push_back(to_char((*this)[n]));
  return out;
}

EdgeColoring color_edges(const OrderedTree& t) {
  const auto mask = leaf_distance_parities(t);
  // The root's leaf distances are the leaf heights.
  parity_from_mask(mask[OrderedTree::root], OrderedTree::root);

  EdgeColoring c(t.node_count());
  for (NodeId e = 1; e < t.node_count(); ++e)
    if (parity_from_mask(mask[e], e) == Parity::Odd)
      c.set(e, EdgeColor::Blue);
  for (NodeId e = 1; e < t.node_count(); ++e)
    if (c[e] == EdgeColor::Blue)
      c.set(t.children(e).front(), EdgeColor::Red); // odd parity => not a leaf
  return c;
}

bool is_valid_coloring(const OrderedTree& t, const EdgeColoring& c) {
  if (c.node_count() != t.node_count())
    return false;
  std::size_t blue = 0;
  std::size_t red = 0;
  for (NodeId e = 1; e < t.node_count(); ++e) {
    if (c[e] == EdgeColor::Blue) {
      ++blue;
      const auto& ch = t.children(e);
      if (ch.empty() || c[ch.front()] != EdgeColor::Red)
        return false;
    } else if (c[e] == EdgeColor::Red) {
      ++red;
      const NodeId up = t.parent(e);
      if (up == OrderedTree::root || c[up] != EdgeColor::Blue || t.children(up).front() != e)
        return false;
    }
  }
  return blue == red;
}

ColoredTree relocate_reds(const OrderedTree& t, const EdgeColoring& c) {
  ColoredTree out{t, c};
  auto& children = out.tree.children_;
  auto& parent = out.tree.parent_;
  for (NodeId r = 1; r < t.node_count(); ++r) {
    if (c[r] != EdgeColor::Red)
      continue;
    // Remove r from between its endpoints: its child edges take its slot under
    // r's upper endpoint, then r is re-hung there as the rightmost leaf edge.
    const NodeId up = parent[r];
    auto& siblings = children[up];
    const auto slot = std::find(siblings.begin(), siblings.end(), r);
    std::vector<NodeId> lifted = std::move(children[r]);
    children[r].clear();
    for (NodeId g : lifted)
      parent[g] = up;
    const auto at = siblings.erase(slot);
    siblings.insert(at, lifted.begin(), lifted.end());
    siblings.push_back(r);
  }
  return out;
}

MotzkinPath walk_to_motzkin(const OrderedTree& t, const EdgeColoring& c) {
  Steps s;
  s.reserve(t.edge_count());
  for (NodeId n : t.preorder()) {
    if (n == OrderedTree::root)
      continue;
    switch (c[n]) {
    case EdgeColor::Blue: s.push_back(Step::Up); break;
    case EdgeColor::Red: s.push_back(Step::Down); break;
    case EdgeColor::Black: s.push_back(Step::Flat); break;
    }
  }
  try {
    return MotzkinPath::validate(std::move(s));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidMotzkinOutput, std::string("walk output is not a Motzkin path: ") + e.what(),
                e.position());
  }
}

} // namespace peakparity
