#pragma once

// Mark-rewriting operators that polarization rules are assembled from.
// All of them mutate marks in place and never touch tree shape.

#include <string>
#include <vector>

#include "udpolar/binary_tree.hpp"
#include "udpolar/error.hpp"
#include "udpolar/polarity.hpp"

namespace udpolar {

namespace detail {

inline Polarity require_mark(const BinaryDepTree& t, NodeId id,
                             const char* op) {
  const Mark m = t[id].mark;
  if (!m)
    throw InvariantError(std::string(op) + ": node " + std::to_string(id) +
                         " has no mark");
  return *m;
}

}  // namespace detail

// Up <-> Down over the whole subtree. Flat marks stay Flat.
inline void negate_subtree(BinaryDepTree& t, NodeId id) {
  const auto nodes = t.subtree(id);
  for (NodeId n : nodes) detail::require_mark(t, n, "negate_subtree");
  for (NodeId n : nodes) t.set_mark(n, flip(*t[n].mark));
}

inline void equalize_subtree(BinaryDepTree& t, NodeId id) {
  for (NodeId n : t.subtree(id)) t.set_mark(n, Polarity::Flat);
}

// Right child Down: flip the left subtree.
inline void backward_negation(BinaryDepTree& t, NodeId id) {
  const Node& n = t[id];
  if (detail::require_mark(t, n.right, "backward_negation") == Polarity::Down)
    negate_subtree(t, n.left);
}

// Right child Flat: flatten the left subtree.
inline void backward_equalization(BinaryDepTree& t, NodeId id) {
  const Node& n = t[id];
  if (detail::require_mark(t, n.right, "backward_equalization") == Polarity::Flat)
    equalize_subtree(t, n.left);
}

// Left child Down: flip the right subtree.
inline void forward_negation(BinaryDepTree& t, NodeId id) {
  const Node& n = t[id];
  if (detail::require_mark(t, n.left, "forward_negation") == Polarity::Down)
    negate_subtree(t, n.right);
}

// Left child Flat: flatten the right subtree.
inline void forward_equalization(BinaryDepTree& t, NodeId id) {
  const Node& n = t[id];
  if (detail::require_mark(t, n.left, "forward_equalization") == Polarity::Flat)
    equalize_subtree(t, n.right);
}

namespace detail {

// The parent of `id` plus its other subtree.
inline std::vector<NodeId> topdown_scope(const BinaryDepTree& t, NodeId id,
                                         const char* op) {
  const NodeId parent = t[id].parent;
  if (parent == kNoNode)
    throw InvariantError(std::string(op) + ": node " + std::to_string(id) +
                         " is the root and has no enclosing scope");
  const Node& p = t[parent];
  auto scope = t.subtree(p.left == id ? p.right : p.left);
  scope.push_back(parent);
  return scope;
}

}  // namespace detail

// Flips the parent of `id` and everything under it except the subtree at `id`.
inline void topdown_negation(BinaryDepTree& t, NodeId id) {
  const auto scope = detail::topdown_scope(t, id, "topdown_negation");
  for (NodeId n : scope) detail::require_mark(t, n, "topdown_negation");
  for (NodeId n : scope) t.set_mark(n, flip(*t[n].mark));
}

// Flattens the parent of `id` and everything under it except the subtree at `id`.
inline void topdown_equalization(BinaryDepTree& t, NodeId id) {
  for (NodeId n : detail::topdown_scope(t, id, "topdown_equalization"))
    t.set_mark(n, Polarity::Flat);
}

}  // namespace udpolar
