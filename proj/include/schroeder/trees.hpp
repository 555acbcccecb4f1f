#pragma once

// psi: the Dyck-path insertion algorithm building an ordered rooted tree
// with n generators from a free-mode colored Dyck path in D^s_n(1,0), and
// its inverse.
//
// psi keeps a pending list: the leaves of the tree built so far that the
// depth-first traversal has not yet passed. A j-descent walks j entries
// forward; the j-th one receives the next ascent's tree by a new edge (the
// leaf turns into a unary node). psi_inv peels maximal unary-free subtrees
// off the input tree and replays the same walk.

#include <stdexcept>
#include <string>
#include <vector>

#include "schroeder/colored_dyck.hpp"
#include "schroeder/ordered_tree.hpp"

namespace schroeder {

inline std::vector<int> leaf_positions(const std::vector<int>& preorder, int offset = 0) {
  std::vector<int> out;
  for (std::size_t i = 0; i < preorder.size(); ++i)
    if (preorder[i] == 0) out.push_back(offset + static_cast<int>(i));
  return out;
}

/// psi(q) for q in D^s_n(1,0): free-mode path whose j-ascents carry trees in
/// ST_{j-1}. Returns the tree with n generators.
inline OrderedTree psi(const ColoredDyckPath& q) {
  if (q.block_mode) throw std::invalid_argument("psi: expected a free-mode path");
  int n = q.weight();
  if (n < 1) throw std::invalid_argument("psi: empty path");
  validate_colored_dyck(q, n, ColorKind::schroeder_trees);

  // split tokens into (ascent tree, following descent length) runs
  std::vector<const OrderedTree*> ascents;
  std::vector<int> descents;
  for (const auto& t : q.tokens) {
    if (const auto* b = std::get_if<ColoredDyckPath::Block>(&t)) {
      ascents.push_back(&std::get<OrderedTree>(b->color));
      descents.push_back(0);
    } else {
      descents.back() += 1;
    }
  }

  std::vector<int> tree = ascents[0]->preorder;
  std::vector<int> pending = leaf_positions(tree);
  for (std::size_t i = 1; i < ascents.size(); ++i) {
    int j = descents[i - 1];
    // pass j-1 leaves for good, graft at the j-th
    pending.erase(pending.begin(), pending.begin() + (j - 1));
    int graft = pending.front();
    pending.erase(pending.begin());

    const std::vector<int>& g = ascents[i]->preorder;
    tree[graft] = 1;
    tree.insert(tree.begin() + graft + 1, g.begin(), g.end());
    for (int& pos : pending)
      if (pos > graft) pos += static_cast<int>(g.size());
    std::vector<int> fresh = leaf_positions(g, graft + 1);
    pending.insert(pending.begin(), fresh.begin(), fresh.end());
  }
  if (static_cast<int>(pending.size()) != descents.back())
    throw std::logic_error("psi: final descent does not close the leaf walk");

  OrderedTree out{std::move(tree)};
  if (out.generators() != n) throw std::logic_error("psi: generator count mismatch");
  return out;
}

namespace detail {

// Maximal subtree rooted at `pos` with no unary node: nodes of outdegree 1
// in the host tree become leaves of the peel. Returns the peel in preorder
// plus the host positions of its leaves, in depth-first order.
inline void peel_subtree(const std::vector<int>& pre, int pos, std::vector<int>& peel,
                         std::vector<int>& leaves) {
  int c = pre[pos];
  if (c == 1 || c == 0) {
    peel.push_back(0);
    leaves.push_back(pos);
    return;
  }
  peel.push_back(c);
  int child = pos + 1;
  for (int i = 0; i < c; ++i) {
    peel_subtree(pre, child, peel, leaves);
    // skip the whole child subtree in the host preorder
    long open = 1;
    while (open > 0) {
      open += pre[child] - 1;
      ++child;
    }
  }
}

}  // namespace detail

/// Inverse of psi. Peels unary-free building blocks off t and emits the
/// ascent/descent runs of the corresponding colored Dyck path.
inline ColoredDyckPath psi_inv(const OrderedTree& t) {
  if (!t.valid()) throw std::invalid_argument("psi_inv: invalid preorder");
  const std::vector<int>& pre = t.preorder;

  ColoredDyckPath q{false, 0, {}};
  std::vector<int> peel;
  std::vector<int> pending;
  peel.reserve(pre.size());
  detail::peel_subtree(pre, 0, peel, pending);
  q.tokens.emplace_back(ColoredDyckPath::Block{static_cast<int>(pending.size()),
                                               ColorLabel{OrderedTree{peel}}});
  while (true) {
    // walk pending leaves until one is unary in the host tree
    std::size_t hit = 0;
    while (hit < pending.size() && pre[pending[hit]] != 1) ++hit;
    if (hit == pending.size()) {
      for (std::size_t i = 0; i < pending.size(); ++i)
        q.tokens.emplace_back(ColoredDyckPath::Down{});
      break;
    }
    for (std::size_t i = 0; i <= hit; ++i) q.tokens.emplace_back(ColoredDyckPath::Down{});
    int next_root = pending[hit] + 1;  // single child of the unary node
    std::vector<int> rest(pending.begin() + hit + 1, pending.end());
    peel.clear();
    pending.clear();
    detail::peel_subtree(pre, next_root, peel, pending);
    q.tokens.emplace_back(ColoredDyckPath::Block{static_cast<int>(pending.size()),
                                                 ColorLabel{OrderedTree{peel}}});
    pending.insert(pending.end(), rest.begin(), rest.end());
  }
  return q;
}

}  // namespace schroeder
