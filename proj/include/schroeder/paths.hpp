#pragma once

// The two path bijections:
//
//   * the Lemma-1 correspondence between colored compositions CS_{n+k,k}
//     and Schroeder paths to (n+k-1, n+k-1) with exactly k-1 diagonal
//     D-steps (comp_to_path / path_to_comp), and
//
//   * xi, mapping a rational Schroeder path in S_n(alpha) to a colored Dyck
//     path in D^sigma_n(alpha-1, 1), together with its inverse. xi walks the
//     path backwards from (n, alpha n); tokens are appended to the Dyck path
//     in that walk order.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schroeder/colored_dyck.hpp"
#include "schroeder/lattice_path.hpp"

namespace schroeder {

// A composition with each part of size i labeled by a Schroeder path to
// (i-1, i-1); the trivial path labels parts of size 1.
struct ColoredComposition {
  struct Part {
    int size = 0;
    LatticePath label;

    bool operator==(const Part&) const = default;
  };
  std::vector<Part> parts;

  bool operator==(const ColoredComposition&) const = default;

  int total() const {
    int t = 0;
    for (const Part& p : parts) t += p.size;
    return t;
  }

  int part_count() const { return static_cast<int>(parts.size()); }

  /// "3:NDE|1:|4:NNNEEE|1:"
  std::string text() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s.push_back('|');
      s += std::to_string(parts[i].size) + ":" + parts[i].label.word();
    }
    return s;
  }

  static ColoredComposition parse(std::string_view t) {
    ColoredComposition c;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t end = t.find('|', pos);
      if (end == std::string_view::npos) end = t.size();
      std::string_view item = t.substr(pos, end - pos);
      std::size_t colon = item.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("ColoredComposition::parse: missing ':'");
      Part p;
      p.size = std::stoi(std::string(item.substr(0, colon)));
      p.label = LatticePath::parse(item.substr(colon + 1));
      c.parts.push_back(std::move(p));
      if (end == t.size()) break;
      pos = end + 1;
    }
    return c;
  }
};

inline void validate_colored_composition(const ColoredComposition& c) {
  if (c.parts.empty()) throw std::invalid_argument("colored composition: no parts");
  for (const auto& p : c.parts) {
    if (p.size < 1) throw std::invalid_argument("colored composition: part size < 1");
    if (!is_schroeder_path(p.label, p.size - 1))
      throw std::invalid_argument("colored composition: label is not a Schroeder path of size " +
                                  std::to_string(p.size - 1));
  }
}

/// All colored compositions of n into k parts: compositions in lexicographic
/// order, labels in Schroeder-path enumeration order.
inline std::vector<ColoredComposition> enum_colored_compositions(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("enum_colored_compositions: need 1 <= k <= n");
  std::vector<ColoredComposition> out;
  ColoredComposition cur;
  auto rec = [&](auto&& self, int remaining, int parts_left) -> void {
    if (parts_left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int size = 1; size + (parts_left - 1) <= remaining; ++size) {
      for (const LatticePath& label : enum_schroeder_paths(size - 1)) {
        cur.parts.push_back({size, label});
        self(self, remaining - size, parts_left - 1);
        cur.parts.pop_back();
      }
    }
  };
  rec(rec, n, k);
  return out;
}

/// Lemma 1, composition to path: concatenates the part labels joined by
/// D-steps on the diagonal. A composition of n+k with k parts yields a
/// Schroeder path to (n+k-1, n+k-1) with exactly k-1 diagonal D-steps.
inline LatticePath comp_to_path(const ColoredComposition& c) {
  validate_colored_composition(c);
  LatticePath p;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) p.steps.push_back(Step::D);
    p.steps.insert(p.steps.end(), c.parts[i].label.steps.begin(),
                   c.parts[i].label.steps.end());
  }
  return p;
}

/// Lemma 1, path to composition: splits a weakly-above path ending on the
/// diagonal at its diagonal D-steps.
inline ColoredComposition path_to_comp(const LatticePath& p) {
  ColoredComposition c;
  LatticePath segment;
  Point cur;
  long segment_start = 0;  // diagonal coordinate where the open segment began
  for (Step s : p.steps) {
    if (s == Step::D && cur.x == cur.y) {
      c.parts.push_back({static_cast<int>(cur.x - segment_start + 1), segment});
      segment = LatticePath{};
      segment_start = cur.x + 1;
      cur = advance(cur, s);
      continue;
    }
    segment.steps.push_back(s);
    cur = advance(cur, s);
    if (cur.y < cur.x)
      throw std::invalid_argument("path_to_comp: path dips below the diagonal");
  }
  if (cur.x != cur.y)
    throw std::invalid_argument("path_to_comp: path does not end on the diagonal");
  c.parts.push_back({static_cast<int>(cur.x - segment_start + 1), segment});
  return c;
}

/// xi: walk p in S_n(alpha) backwards from (n, alpha n). A D-step emits a
/// unit block colored D; an E-step emits a block of size j colored by the
/// SP^/\_j subpath hanging between the two nearest slope-1 intersections;
/// an N-step emits a bare down-step.
inline ColoredDyckPath xi(const LatticePath& p, int alpha) {
  if (alpha < 1) throw std::invalid_argument("xi: need alpha >= 1");
  Point end = p.endpoint();
  if (end.x < 1 || end.y != static_cast<long>(alpha) * end.x ||
      !is_rational_schroeder(p, static_cast<int>(end.x), alpha))
    throw std::invalid_argument("xi: input is not a rational Schroeder path");

  auto pts = p.points();
  ColoredDyckPath q{true, alpha - 1, {}};
  int i = static_cast<int>(p.steps.size()) - 1;
  while (i >= 0) {
    Step s = p.steps[i];
    if (s == Step::N) {
      q.tokens.emplace_back(ColoredDyckPath::Down{});
      --i;
    } else if (s == Step::D) {
      q.tokens.emplace_back(
          ColoredDyckPath::Block{1, ColorLabel{LatticePath::parse("D")}});
      --i;
    } else {
      // E-step arriving at pts[i+1]; find the previous point on the same
      // slope-1 line
      long level = pts[i + 1].y - pts[i + 1].x;
      int t = i;
      while (pts[t].y - pts[t].x != level) --t;
      int j = static_cast<int>(pts[i + 1].x - pts[t].x);
      LatticePath sub{std::vector<Step>(p.steps.begin() + t, p.steps.begin() + i + 1)};
      if (!is_sp_wedge(sub, j))
        throw std::logic_error("xi: extracted subpath is not in SP^/\\_" + std::to_string(j));
      q.tokens.emplace_back(ColoredDyckPath::Block{j, ColorLabel{std::move(sub)}});
      i = t - 1;
    }
  }
  return q;
}

/// Inverse of xi: walk the colored Dyck path right to left, emitting an
/// N-step per bare down-step and splicing in the block colors.
inline LatticePath xi_inv(const ColoredDyckPath& q, int alpha) {
  if (alpha < 1) throw std::invalid_argument("xi_inv: need alpha >= 1");
  if (!q.block_mode || q.a != alpha - 1)
    throw std::invalid_argument("xi_inv: path is not in block mode with a = alpha-1");
  int n = q.weight();
  validate_colored_dyck(q, n, ColorKind::wedge_paths);
  LatticePath p;
  for (auto it = q.tokens.rbegin(); it != q.tokens.rend(); ++it) {
    if (const auto* b = std::get_if<ColoredDyckPath::Block>(&*it)) {
      const LatticePath& label = std::get<LatticePath>(b->color);
      p.steps.insert(p.steps.end(), label.steps.begin(), label.steps.end());
    } else {
      p.steps.push_back(Step::N);
    }
  }
  if (!is_rational_schroeder(p, n, alpha))
    throw std::invalid_argument("xi_inv: tokens do not assemble to a rational Schroeder path");
  return p;
}

}  // namespace schroeder
