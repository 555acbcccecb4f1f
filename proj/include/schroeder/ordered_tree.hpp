#pragma once

// Ordered rooted trees in preorder child-count encoding: entry i is the
// number of children of the i-th node in depth-first order. "2,0,0" is the
// cherry, "0" the single vertex. Generators are leaves plus unary nodes.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

struct OrderedTree {
  std::vector<int> preorder;

  auto operator<=>(const OrderedTree&) const = default;

  int nodes() const { return static_cast<int>(preorder.size()); }

  /// A preorder sequence is valid when the running sum of (children - 1)
  /// stays >= 0 before the final node and ends at -1.
  bool valid() const {
    if (preorder.empty()) return false;
    long open = 1;
    for (std::size_t i = 0; i < preorder.size(); ++i) {
      if (preorder[i] < 0) return false;
      open += preorder[i] - 1;
      if (open < 0) return false;
      if (open == 0 && i + 1 != preorder.size()) return false;
    }
    return open == 0;
  }

  int leaves() const {
    int c = 0;
    for (int d : preorder) c += (d == 0);
    return c;
  }

  int unary() const {
    int c = 0;
    for (int d : preorder) c += (d == 1);
    return c;
  }

  int generators() const { return leaves() + unary(); }

  /// Size of the subtree rooted at node index pos.
  int subtree_size(int pos) const {
    long open = 1;
    int i = pos;
    while (open > 0) {
      open += preorder[i] - 1;
      ++i;
    }
    return i - pos;
  }

  std::string text() const {
    std::string s;
    for (std::size_t i = 0; i < preorder.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(preorder[i]);
    }
    return s;
  }

  static OrderedTree parse(std::string_view text) {
    OrderedTree t;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(pos, end - pos));
      if (item.empty()) throw std::invalid_argument("OrderedTree::parse: empty entry");
      t.preorder.push_back(std::stoi(item));
      pos = end + 1;
    }
    if (!t.valid()) throw std::invalid_argument("OrderedTree::parse: invalid preorder");
    return t;
  }
};

/// Member of ST_n: no unary node and exactly n+1 leaves.
inline bool is_schroeder_tree(const OrderedTree& t, int n) {
  if (!t.valid()) return false;
  for (int d : t.preorder)
    if (d == 1) return false;
  return t.leaves() == n + 1;
}

/// All of ST_n in lexicographic preorder order; count s_n. A tree with L
/// leaves and no unary node has at most 2L - 1 nodes.
inline std::vector<OrderedTree> enum_st(int n) {
  if (n < 0) throw std::invalid_argument("enum_st: negative n");
  int target = n + 1;
  int max_nodes = 2 * target - 1;
  std::vector<OrderedTree> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int open, int leaves) -> void {
    if (open == 0) {
      if (leaves == target) out.push_back(OrderedTree{cur});
      return;
    }
    int nodes = static_cast<int>(cur.size());
    for (int c = 0; c <= target; c == 0 ? c = 2 : ++c) {  // skip outdegree 1
      int open2 = open - 1 + c;
      int leaves2 = leaves + (c == 0);
      if (leaves2 + open2 > target) break;
      if (nodes + 1 + open2 > max_nodes) break;
      cur.push_back(c);
      self(self, open2, leaves2);
      cur.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// All ordered rooted trees with exactly n generators, in lexicographic
/// preorder order; count tree_count(n). Finite because such a tree has at
/// most 2n - 1 nodes. This enumerator is a plain generate-and-filter search,
/// independent of the Dyck-path bijection it is tested against.
inline std::vector<OrderedTree> enum_trees_by_generators(int n) {
  if (n < 1) throw std::invalid_argument("enum_trees_by_generators: need n >= 1");
  int max_nodes = 2 * n - 1;
  std::vector<OrderedTree> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int open, int gens) -> void {
    if (open == 0) {
      if (gens == n) out.push_back(OrderedTree{cur});
      return;
    }
    int nodes = static_cast<int>(cur.size());
    for (int c = 0; nodes + 1 + open - 1 + c <= max_nodes; ++c) {
      int open2 = open - 1 + c;
      int gens2 = gens + (c <= 1);
      // every open slot roots a subtree with at least one generator
      if (gens2 + open2 > n) {
        if (c >= 2) break;
        continue;
      }
      cur.push_back(c);
      self(self, open2, gens2);
      cur.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

}  // namespace schroeder
