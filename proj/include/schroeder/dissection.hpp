#pragma once

// Polygon dissections viewed as biconnected rooted outerplanar maps. A
// member of B_n is a convex polygon with n+2 vertices and a set of pairwise
// noncrossing diagonals; B_0 is the single-edge map. Vertices are labeled
// 1..n+2 in the order the counterclockwise boundary walk from the root
// vertex visits them, so the root edge joins 1 and 2.
//
// Text form: "n=<n>;diag=<a-b,c-d,...>" with pairs a<b sorted
// lexicographically.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schroeder {

struct Dissection {
  int size = 0;  // n; the polygon has n+2 vertices
  std::vector<std::pair<int, int>> diagonals;

  auto operator<=>(const Dissection&) const = default;

  int polygon_vertices() const { return size + 2; }

  std::string text() const {
    std::string s = "n=" + std::to_string(size) + ";diag=";
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(diagonals[i].first) + "-" + std::to_string(diagonals[i].second);
    }
    return s;
  }

  static Dissection parse(std::string_view t);
};

inline bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  // both pairs ordered; crossing means strictly interleaved endpoints
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline void validate_dissection(const Dissection& d) {
  if (d.size < 0) throw std::invalid_argument("dissection: negative size");
  int m = d.polygon_vertices();
  for (auto [a, b] : d.diagonals) {
    if (a < 1 || b > m || a >= b)
      throw std::invalid_argument("dissection: diagonal endpoint out of range");
    if (b - a < 2 || (a == 1 && b == m))
      throw std::invalid_argument("dissection: diagonal joins adjacent vertices");
  }
  for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < d.diagonals.size(); ++j) {
      if (d.diagonals[i] == d.diagonals[j])
        throw std::invalid_argument("dissection: duplicate diagonal");
      if (diagonals_cross(d.diagonals[i], d.diagonals[j]))
        throw std::invalid_argument("dissection: crossing diagonals");
    }
  }
  if (!std::is_sorted(d.diagonals.begin(), d.diagonals.end()))
    throw std::invalid_argument("dissection: diagonals not sorted");
}

inline Dissection Dissection::parse(std::string_view t) {
  auto bad = []() -> Dissection {
    throw std::invalid_argument("Dissection::parse: malformed text");
  };
  if (t.substr(0, 2) != "n=") return bad();
  std::size_t semi = t.find(";diag=");
  if (semi == std::string_view::npos) return bad();
  Dissection d;
  d.size = std::stoi(std::string(t.substr(2, semi - 2)));
  std::string_view rest = t.substr(semi + 6);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t end = rest.find(',', pos);
    if (end == std::string_view::npos) end = rest.size();
    std::string_view pair = rest.substr(pos, end - pos);
    std::size_t dash = pair.find('-');
    if (dash == std::string_view::npos) return bad();
    d.diagonals.emplace_back(std::stoi(std::string(pair.substr(0, dash))),
                             std::stoi(std::string(pair.substr(dash + 1))));
    pos = end + 1;
  }
  validate_dissection(d);
  return d;
}

/// All dissections of the (n+2)-gon (every noncrossing diagonal set),
/// ordered lexicographically by sorted diagonal list; count s_n.
inline std::vector<Dissection> enum_dissections(int n) {
  if (n < 0) throw std::invalid_argument("enum_dissections: negative n");
  int m = n + 2;
  std::vector<std::pair<int, int>> candidates;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 2; b <= m; ++b)
      if (!(a == 1 && b == m)) candidates.emplace_back(a, b);
  std::vector<Dissection> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.push_back(Dissection{n, cur});
    for (std::size_t i = from; i < candidates.size(); ++i) {
      bool ok = true;
      for (auto& d : cur)
        if (diagonals_cross(d, candidates[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(candidates[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace schroeder
