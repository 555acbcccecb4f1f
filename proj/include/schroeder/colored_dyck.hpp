#pragma once

// Colored Dyck paths, the common currency of the three bijections. A path
// is a token sequence of bare down-steps and colored ascent blocks.
//
//   block mode, parameter a:  Block(j) expands to u^{(a+1)j} d^j, Down to d;
//                             the word has semilength (a+1)n.
//   free mode:                Block(j) expands to u^j (a maximal ascent),
//                             Down to d; ordinary Dyck path of semilength n.
//
// Colors come from one of three registered domains per block length j:
// SP^/\_j paths (sigma_j colors), trees in ST_{j-1} (s_{j-1} colors) or
// dissections in B_{j-1} (s_{j-1} colors).
//
// Text form: "<u/d word>;colors=<c1>|<c2>|..." with color payloads in block
// order.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schroeder/dissection.hpp"
#include "schroeder/lattice_path.hpp"
#include "schroeder/numbers.hpp"
#include "schroeder/ordered_tree.hpp"

namespace schroeder {

using ColorLabel = std::variant<LatticePath, OrderedTree, Dissection>;

enum class ColorKind { wedge_paths, schroeder_trees, dissections };

inline std::string color_text(const ColorLabel& c) {
  if (const LatticePath* p = std::get_if<LatticePath>(&c)) return p->word();
  if (const OrderedTree* t = std::get_if<OrderedTree>(&c)) return t->text();
  return std::get<Dissection>(c).text();
}

struct ColoredDyckPath {
  struct Down {
    bool operator==(const Down&) const = default;
  };
  struct Block {
    int size = 0;  // the parameter j
    ColorLabel color;

    bool operator==(const Block&) const = default;
  };
  using Token = std::variant<Down, Block>;

  bool block_mode = true;
  int a = 0;  // ascent parameter in block mode; ignored in free mode
  std::vector<Token> tokens;

  bool operator==(const ColoredDyckPath&) const = default;

  int ascent_of(int j) const { return block_mode ? (a + 1) * j : j; }

  /// Sum of block sizes (the n of D^c_n).
  int weight() const {
    int n = 0;
    for (const Token& t : tokens)
      if (const Block* b = std::get_if<Block>(&t)) n += b->size;
    return n;
  }

  int block_count() const {
    int k = 0;
    for (const Token& t : tokens) k += std::holds_alternative<Block>(t);
    return k;
  }

  int semilength() const {
    int up = 0;
    for (const Token& t : tokens)
      if (const Block* b = std::get_if<Block>(&t)) up += ascent_of(b->size);
    return up;
  }

  std::string dyck_word() const {
    std::string w;
    for (const Token& t : tokens) {
      if (const Block* b = std::get_if<Block>(&t)) {
        w.append(ascent_of(b->size), 'u');
        if (block_mode) w.append(b->size, 'd');
      } else {
        w.push_back('d');
      }
    }
    return w;
  }

  /// Running height after each token.
  std::vector<int> heights() const {
    std::vector<int> h;
    h.reserve(tokens.size());
    int cur = 0;
    for (const Token& t : tokens) {
      if (const Block* b = std::get_if<Block>(&t))
        cur += ascent_of(b->size) - (block_mode ? b->size : 0);
      else
        cur -= 1;
      h.push_back(cur);
    }
    return h;
  }

  /// Number of returns of the word to height zero (the final one included).
  int returns_to_zero() const {
    int r = 0;
    for (int h : heights()) r += (h == 0);
    return r;
  }

  std::string text() const {
    std::string s = dyck_word() + ";colors=";
    bool first = true;
    for (const Token& t : tokens) {
      if (const Block* b = std::get_if<Block>(&t)) {
        if (!first) s.push_back('|');
        s += color_text(b->color);
        first = false;
      }
    }
    return s;
  }
};

inline ExactInt color_count(ColorKind kind, int j) {
  if (j < 1) throw std::invalid_argument("color_count: need block length >= 1");
  switch (kind) {
    case ColorKind::wedge_paths: return sigma(j);
    case ColorKind::schroeder_trees:
    case ColorKind::dissections: return little_schroeder(j - 1);
  }
  throw std::logic_error("color_count: bad kind");
}

/// Colors for block/ascent length j, in enumeration order. Memoized per
/// thread.
inline const std::vector<ColorLabel>& color_domain(ColorKind kind, int j) {
  if (j < 1) throw std::invalid_argument("color_domain: need block length >= 1");
  thread_local std::map<std::pair<ColorKind, int>, std::vector<ColorLabel>> cache;
  auto key = std::make_pair(kind, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<ColorLabel> domain;
  switch (kind) {
    case ColorKind::wedge_paths:
      for (auto& p : enum_sp_wedge(j)) domain.emplace_back(std::move(p));
      break;
    case ColorKind::schroeder_trees:
      for (auto& t : enum_st(j - 1)) domain.emplace_back(std::move(t));
      break;
    case ColorKind::dissections:
      for (auto& d : enum_dissections(j - 1)) domain.emplace_back(std::move(d));
      break;
  }
  return cache.emplace(key, std::move(domain)).first->second;
}

inline bool color_valid(ColorKind kind, int j, const ColorLabel& c) {
  switch (kind) {
    case ColorKind::wedge_paths: {
      const LatticePath* p = std::get_if<LatticePath>(&c);
      return p && is_sp_wedge(*p, j);
    }
    case ColorKind::schroeder_trees: {
      const OrderedTree* t = std::get_if<OrderedTree>(&c);
      return t && is_schroeder_tree(*t, j - 1);
    }
    case ColorKind::dissections: {
      const Dissection* d = std::get_if<Dissection>(&c);
      if (!d || d->size != j - 1) return false;
      try {
        validate_dissection(*d);
      } catch (const std::invalid_argument&) {
        return false;
      }
      return true;
    }
  }
  return false;
}

/// Structural and color validity of q as a member of D^c_n(a,1) (block
/// mode) or D^c_n(1,0) (free mode) with the given color domain. Throws
/// std::invalid_argument describing the first violation.
inline void validate_colored_dyck(const ColoredDyckPath& q, int n, ColorKind kind) {
  if (q.weight() != n)
    throw std::invalid_argument("colored dyck: block sizes sum to " +
                                std::to_string(q.weight()) + ", expected " + std::to_string(n));
  int h = 0;
  bool prev_block = false;
  for (const auto& t : q.tokens) {
    if (const auto* b = std::get_if<ColoredDyckPath::Block>(&t)) {
      if (b->size < 1) throw std::invalid_argument("colored dyck: empty block");
      if (!q.block_mode && prev_block)
        throw std::invalid_argument("colored dyck: adjacent ascents are not maximal");
      if (!color_valid(kind, b->size, b->color))
        throw std::invalid_argument("colored dyck: color invalid for block length " +
                                    std::to_string(b->size));
      h += q.ascent_of(b->size) - (q.block_mode ? b->size : 0);
      prev_block = true;
    } else {
      h -= 1;
      if (h < 0) throw std::invalid_argument("colored dyck: height dips below zero");
      prev_block = false;
    }
  }
  if (h != 0) throw std::invalid_argument("colored dyck: word does not return to zero");
}

inline bool is_valid_colored_dyck(const ColoredDyckPath& q, int n, ColorKind kind) {
  try {
    validate_colored_dyck(q, n, kind);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

namespace detail {

inline void enum_colored_dyck_rec(ColoredDyckPath& cur, int budget, int height,
                                  bool prev_block, ColorKind kind,
                                  std::vector<ColoredDyckPath>& out) {
  if (budget == 0 && height == 0) {
    out.push_back(cur);
    return;
  }
  if (height >= 1) {
    cur.tokens.emplace_back(ColoredDyckPath::Down{});
    enum_colored_dyck_rec(cur, budget, height - 1, false, kind, out);
    cur.tokens.pop_back();
  }
  if (!cur.block_mode && prev_block) return;  // ascents must stay maximal
  for (int j = 1; j <= budget; ++j) {
    int gain = cur.block_mode ? cur.a * j : j;
    for (const ColorLabel& c : color_domain(kind, j)) {
      cur.tokens.emplace_back(ColoredDyckPath::Block{j, c});
      enum_colored_dyck_rec(cur, budget - j, height + gain, true, kind, out);
      cur.tokens.pop_back();
    }
  }
}

}  // namespace detail

/// Every element of D^c_n(a,1): words over d and blocks u^{(a+1)j} d^j,
/// block length j colored from the domain for j.
inline std::vector<ColoredDyckPath> enum_colored_dyck_block(int n, int a, ColorKind kind) {
  if (n < 1 || a < 0) throw std::invalid_argument("enum_colored_dyck_block: bad arguments");
  std::vector<ColoredDyckPath> out;
  ColoredDyckPath cur{true, a, {}};
  detail::enum_colored_dyck_rec(cur, n, 0, false, kind, out);
  return out;
}

/// Every element of D^c_n(1,0): ordinary Dyck paths of semilength n with
/// colored maximal ascents.
inline std::vector<ColoredDyckPath> enum_colored_dyck_free(int n, ColorKind kind) {
  if (n < 1) throw std::invalid_argument("enum_colored_dyck_free: need n >= 1");
  std::vector<ColoredDyckPath> out;
  ColoredDyckPath cur{false, 0, {}};
  detail::enum_colored_dyck_rec(cur, n, 0, false, kind, out);
  return out;
}

inline ColorLabel parse_color(ColorKind kind, std::string_view text) {
  switch (kind) {
    case ColorKind::wedge_paths: return LatticePath::parse(text);
    case ColorKind::schroeder_trees: return OrderedTree::parse(text);
    case ColorKind::dissections: return Dissection::parse(text);
  }
  throw std::logic_error("parse_color: bad kind");
}

/// Parses "<u/d word>;colors=<c1>|..." back into a token sequence and
/// validates it against the color domain.
inline ColoredDyckPath parse_colored_dyck(std::string_view text, bool block_mode, int a,
                                          ColorKind kind) {
  std::size_t marker = text.find(";colors=");
  if (marker == std::string_view::npos)
    throw std::invalid_argument("parse_colored_dyck: missing ;colors= section");
  std::string_view word = text.substr(0, marker);
  std::string_view colors = text.substr(marker + 8);

  std::vector<ColorLabel> labels;
  if (!colors.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t end = colors.find('|', pos);
      if (end == std::string_view::npos) {
        labels.push_back(parse_color(kind, colors.substr(pos)));
        break;
      }
      labels.push_back(parse_color(kind, colors.substr(pos, end - pos)));
      pos = end + 1;
    }
  }

  ColoredDyckPath q{block_mode, block_mode ? a : 0, {}};
  std::size_t color_idx = 0;
  std::size_t i = 0;
  int n = 0;
  while (i < word.size()) {
    if (word[i] == 'u') {
      std::size_t run = 0;
      while (i + run < word.size() && word[i + run] == 'u') ++run;
      int j;
      if (block_mode) {
        if (run % (a + 1) != 0)
          throw std::invalid_argument("parse_colored_dyck: ascent length not divisible by a+1");
        j = static_cast<int>(run) / (a + 1);
      } else {
        j = static_cast<int>(run);
      }
      if (color_idx >= labels.size())
        throw std::invalid_argument("parse_colored_dyck: fewer colors than blocks");
      q.tokens.emplace_back(ColoredDyckPath::Block{j, labels[color_idx++]});
      i += run;
      if (block_mode) {
        // the block owns the next j down-steps
        for (int t = 0; t < j; ++t, ++i)
          if (i >= word.size() || word[i] != 'd')
            throw std::invalid_argument("parse_colored_dyck: block missing its down-steps");
      }
      n += j;
    } else if (word[i] == 'd') {
      q.tokens.emplace_back(ColoredDyckPath::Down{});
      ++i;
    } else {
      throw std::invalid_argument("parse_colored_dyck: word must be over u/d");
    }
  }
  if (color_idx != labels.size())
    throw std::invalid_argument("parse_colored_dyck: more colors than blocks");
  validate_colored_dyck(q, n, kind);
  return q;
}

}  // namespace schroeder
