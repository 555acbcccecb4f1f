#pragma once

// Lattice paths over the steps N = (0,1), E = (1,0), D = (1,1), plus the
// validity predicates and exhaustive generators for the three path families
// used as building blocks: Schroeder paths, the strictly-above family
// SP^/\_n, and rational Schroeder paths of slope alpha.
//
// Paths serialize as words over {N, E, D}; the empty word is the trivial
// path. Generators emit in lexicographic word order with D < E < N.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

enum class Step : char { D = 'D', E = 'E', N = 'N' };

struct Point {
  long x = 0;
  long y = 0;

  bool operator==(const Point&) const = default;
};

inline Point advance(Point p, Step s) {
  switch (s) {
    case Step::D: return {p.x + 1, p.y + 1};
    case Step::E: return {p.x + 1, p.y};
    case Step::N: return {p.x, p.y + 1};
  }
  throw std::logic_error("advance: bad step");
}

struct LatticePath {
  std::vector<Step> steps;

  auto operator<=>(const LatticePath&) const = default;

  std::size_t size() const { return steps.size(); }

  Point endpoint() const {
    Point p;
    for (Step s : steps) p = advance(p, s);
    return p;
  }

  /// Lattice points visited, starting at the origin (size() + 1 entries).
  std::vector<Point> points() const {
    std::vector<Point> pts{{0, 0}};
    pts.reserve(steps.size() + 1);
    for (Step s : steps) pts.push_back(advance(pts.back(), s));
    return pts;
  }

  std::string word() const {
    std::string w;
    w.reserve(steps.size());
    for (Step s : steps) w.push_back(static_cast<char>(s));
    return w;
  }

  static LatticePath parse(std::string_view w) {
    LatticePath p;
    p.steps.reserve(w.size());
    for (char c : w) {
      if (c != 'N' && c != 'E' && c != 'D')
        throw std::invalid_argument("LatticePath::parse: bad step character");
      p.steps.push_back(static_cast<Step>(c));
    }
    return p;
  }
};

/// Schroeder path to (n,n): weakly above y = x, no D-step on the diagonal.
inline bool is_schroeder_path(const LatticePath& p, int n) {
  Point cur;
  for (Step s : p.steps) {
    if (s == Step::D && cur.x == cur.y) return false;
    cur = advance(cur, s);
    if (cur.y < cur.x) return false;
  }
  return cur == Point{n, n};
}

/// Member of SP^/\_n: ends at (n,n) and is strictly above the diagonal at
/// every interior point. For n = 1 the unit diagonal path D is admitted
/// alongside NE.
inline bool is_sp_wedge(const LatticePath& p, int n) {
  if (n < 1) return false;
  auto pts = p.points();
  if (pts.back() != Point{n, n}) return false;
  if (n == 1) return p.word() == "D" || p.word() == "NE";
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    if (pts[i].y <= pts[i].x) return false;
  return true;
}

/// Rational Schroeder path: ends at (n, alpha*n), every point (and, for
/// alpha >= 1, therefore every step segment) weakly above y = alpha*x.
inline bool is_rational_schroeder(const LatticePath& p, int n, int alpha) {
  Point cur;
  for (Step s : p.steps) {
    cur = advance(cur, s);
    if (cur.y < static_cast<long>(alpha) * cur.x) return false;
  }
  return cur == Point{n, static_cast<long>(alpha) * n};
}

/// All Schroeder paths to (n,n), count s_n, in lexicographic word order.
inline std::vector<LatticePath> enum_schroeder_paths(int n) {
  if (n < 0) throw std::invalid_argument("enum_schroeder_paths: negative n");
  std::vector<LatticePath> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, long x, long y) -> void {
    if (x == n && y == n) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (x < n && y < n && x != y) {  // D, never on the diagonal
      cur.push_back(Step::D);
      self(self, x + 1, y + 1);
      cur.pop_back();
    }
    if (x < n && y >= x + 1) {
      cur.push_back(Step::E);
      self(self, x + 1, y);
      cur.pop_back();
    }
    if (y < n) {
      cur.push_back(Step::N);
      self(self, x, y + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// All of SP^/\_n, count sigma_n = 2 s_{n-1}.
inline std::vector<LatticePath> enum_sp_wedge(int n) {
  if (n < 1) throw std::invalid_argument("enum_sp_wedge: need n >= 1");
  if (n == 1) return {LatticePath::parse("D"), LatticePath::parse("NE")};
  std::vector<LatticePath> out;
  std::vector<Step> cur;
  // interior points must satisfy y > x
  auto ok = [&](long x, long y) { return (x == n && y == n) || y > x; };
  auto rec = [&](auto&& self, long x, long y) -> void {
    if (x == n && y == n) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (x < n && y < n && ok(x + 1, y + 1)) {
      cur.push_back(Step::D);
      self(self, x + 1, y + 1);
      cur.pop_back();
    }
    if (x < n && ok(x + 1, y)) {
      cur.push_back(Step::E);
      self(self, x + 1, y);
      cur.pop_back();
    }
    if (y < n && ok(x, y + 1)) {
      cur.push_back(Step::N);
      self(self, x, y + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// All of S_n(alpha), count rational_schroeder_count(n, alpha).
inline std::vector<LatticePath> enum_rational_paths(int n, int alpha) {
  if (n < 1 || alpha < 1)
    throw std::invalid_argument("enum_rational_paths: need n, alpha >= 1");
  long top = static_cast<long>(alpha) * n;
  std::vector<LatticePath> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, long x, long y) -> void {
    if (x == n && y == top) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (x < n && y + 1 <= top && y + 1 >= alpha * (x + 1)) {
      cur.push_back(Step::D);
      self(self, x + 1, y + 1);
      cur.pop_back();
    }
    if (x < n && y >= alpha * (x + 1)) {
      cur.push_back(Step::E);
      self(self, x + 1, y);
      cur.pop_back();
    }
    if (y < top) {
      cur.push_back(Step::N);
      self(self, x, y + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace schroeder
