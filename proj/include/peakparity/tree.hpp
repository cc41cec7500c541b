#pragma once

#include "peakparity/path.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace peakparity {

using NodeId = std::size_t;

class EdgeColoring;
struct ColoredTree;

/// Rooted ordered tree. Node 0 is the root; every other node stands for the
/// edge joining it to its parent, so edges and non-root nodes share ids.
class OrderedTree {
public:
  static constexpr NodeId root = 0;

  /// The one-vertex tree.
  OrderedTree();

  std::size_t node_count() const noexcept { return children_.size(); }
  std::size_t edge_count() const noexcept { return children_.size() - 1; }

  NodeId parent(NodeId n) const { return parent_.at(n); }
  const std::vector<NodeId>& children(NodeId n) const { return children_.at(n); }
  bool is_leaf(NodeId n) const { return children_.at(n).empty(); }
  std::size_t depth(NodeId n) const;

  /// Appends a new rightmost child of `n` and returns its id.
  NodeId add_child(NodeId n);

  /// Node ids in left-to-right preorder, root first.
  std::vector<NodeId> preorder() const;

  /// Leaf depths in left-to-right order. The one-vertex tree yields {0}.
  std::vector<int> leaf_heights() const;

  /// Balanced parentheses: "(" descends along a new edge, ")" ascends.
  std::string to_parens() const;
  static OrderedTree from_parens(std::string_view text);

  /// Shape equality; ids are ignored.
  bool same_shape(const OrderedTree& other) const { return to_parens() == other.to_parens(); }

private:
  friend ColoredTree relocate_reds(const OrderedTree&, const EdgeColoring&);

  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
};

OrderedTree glove_to_tree(const DyckPath& p);
DyckPath glove_to_dyck(const OrderedTree& t);

enum class Parity { Even, Odd };

/// Parity of the edge count from the lower endpoint of `edge` down to any
/// leaf below it. Throws IllDefinedParity when leaves below disagree.
Parity edge_parity(const OrderedTree& t, NodeId edge);

enum class EdgeColor { Blue, Red, Black };

char to_char(EdgeColor c) noexcept;

/// Total colouring of the edges of one tree, indexed by edge (child node) id.
class EdgeColoring {
public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t node_count) : colors_(node_count, EdgeColor::Black) {}

  EdgeColor operator[](NodeId edge) const { return colors_.at(edge); }
  void set(NodeId edge, EdgeColor c) { colors_.at(edge) = c; }
  std::size_t node_count() const noexcept { return colors_.size(); }
  std::size_t count(EdgeColor c) const;

  /// One letter per edge in the tree's preorder: B(lue), R(ed), K (black).
  std::string serialize(const OrderedTree& t) const;

private:
  std::vector<EdgeColor> colors_;
};

/// Blue for odd-parity edges, Red for the leftmost child edge of each Blue
/// edge, Black otherwise. Requires every leaf height to share one parity.
EdgeColoring color_edges(const OrderedTree& t);

/// Checks the colouring invariants against t; false on any violation.
bool is_valid_coloring(const OrderedTree& t, const EdgeColoring& c);

struct ColoredTree {
  OrderedTree tree;
  EdgeColoring coloring;
};

/// Deletes every Red edge and reinserts it as the rightmost child edge of its
/// parent edge. Deleting contracts the edge: its child edges move up into its
/// old slot, and it comes back as a leaf. Ids are stable, so the colouring
/// carries over unchanged.
ColoredTree relocate_reds(const OrderedTree& t, const EdgeColoring& c);

/// Left-to-right preorder walk; Blue -> U, Red -> D, Black -> F.
/// Throws InvalidMotzkinOutput if the emitted steps are not a Motzkin path.
MotzkinPath walk_to_motzkin(const OrderedTree& t, const EdgeColoring& c);

} // namespace peakparity
