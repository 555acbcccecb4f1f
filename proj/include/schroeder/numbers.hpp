#pragma once

// Schroeder sequences, partial Bell polynomials, the four-parameter Bell
// transform, and the closed-form counting formulas built from them.
//
// Every function that promises an ExactInt computes through ExactRational
// and asserts integrality at the end (see require_integer). Sequence values
// are memoized per thread, so concurrent callers never share mutable state.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schroeder/exact.hpp"

namespace schroeder {

/// Little Schroeder numbers s_0 = 1, then 1, 3, 11, 45, 197, ...
/// computed from s_n = sum_{j=1}^{n} (1/j) C(n+j, j-1) C(n-1, j-1).
inline ExactInt little_schroeder(int n) {
  if (n < 0) throw std::invalid_argument("little_schroeder: negative index");
  thread_local std::vector<ExactInt> cache{ExactInt(1)};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    ExactRational sum = 0;
    for (int j = 1; j <= m; ++j)
      sum += make_rational(binomial(m + j, j - 1) * binomial(m - 1, j - 1), j);
    cache.push_back(require_integer(sum, "little_schroeder"));
  }
  return cache[n];
}

/// Large Schroeder numbers: r_0 = 1, r_n = 2 s_n for n >= 1.
inline ExactInt large_schroeder(int n) {
  if (n < 0) throw std::invalid_argument("large_schroeder: negative index");
  if (n == 0) return 1;
  return 2 * little_schroeder(n);
}

/// sigma_j = 2 s_{j-1}, the size of SP^/\_j. Defined for j >= 1 only.
inline ExactInt sigma(int j) {
  if (j < 1) throw std::invalid_argument("sigma: index must be >= 1");
  return 2 * little_schroeder(j - 1);
}

// A multi-index alpha in pi(n,k): counts has length n-k+1, sum(counts) = k
// and sum(i * counts[i-1]) = n.
struct MultiIndex {
  int n = 0;
  int k = 0;
  std::vector<int> counts;

  bool operator==(const MultiIndex&) const = default;
};

/// Visits every element of pi(n,k) exactly once, in lexicographic order of
/// the counts vector.
inline void for_each_multi_index(int n, int k,
                                 const std::function<void(const MultiIndex&)>& fn) {
  if (n < 0 || k < 0) throw std::invalid_argument("for_each_multi_index: negative argument");
  if (k > n) throw std::invalid_argument("for_each_multi_index: need k <= n");
  int len = n - k + 1;
  MultiIndex mi{n, k, std::vector<int>(len, 0)};
  // pos is 0-based; part weight is pos+1. kr/nr are the unassigned part
  // count and weight.
  auto rec = [&](auto&& self, int pos, int kr, int nr) -> void {
    if (pos == len) {
      if (kr == 0 && nr == 0) fn(mi);
      return;
    }
    for (int c = 0; c <= kr; ++c) {
      int nr2 = nr - c * (pos + 1);
      if (nr2 < 0) break;
      int kr2 = kr - c;
      // the remaining kr2 parts have weights in [pos+2, len]
      bool feasible = (pos + 1 == len) ? (kr2 == 0 && nr2 == 0)
                                       : (nr2 >= kr2 * (pos + 2) && nr2 <= kr2 * len);
      if (!feasible) continue;
      mi.counts[pos] = c;
      self(self, pos + 1, kr2, nr2);
      mi.counts[pos] = 0;
    }
  };
  rec(rec, 0, k, n);
}

inline std::vector<MultiIndex> enum_multi_indices(int n, int k) {
  std::vector<MultiIndex> out;
  for_each_multi_index(n, k, [&](const MultiIndex& mi) { out.push_back(mi); });
  return out;
}

/// Partial Bell polynomial B_{n,k}(z_1, ..., z_{n-k+1}) evaluated exactly by
/// its defining sum over pi(n,k). B_{0,0} = 1, B_{n,0} = 0 for n > 0 and
/// B_{n,k} = 0 for k > n.
inline ExactRational partial_bell(int n, int k, const std::vector<ExactRational>& z) {
  if (n < 0 || k < 0) throw std::invalid_argument("partial_bell: negative argument");
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (static_cast<int>(z.size()) < n - k + 1)
    throw std::invalid_argument("partial_bell: z supplies fewer than n-k+1 values");
  ExactRational total = 0;
  ExactInt n_fact = factorial(n);
  for_each_multi_index(n, k, [&](const MultiIndex& mi) {
    ExactRational term(n_fact);
    for (int i = 1; i <= n - k + 1; ++i) {
      int a = mi.counts[i - 1];
      if (a == 0) continue;
      term /= factorial(a);
      ExactRational base = z[i - 1] / ExactRational(factorial(i));
      for (int t = 0; t < a; ++t) term *= base;
    }
    total += term;
  });
  return total;
}

/// z_i = i! x_i, the argument list (1! x_1, 2! x_2, ...) used by every Bell
/// evaluation in this library.
inline std::vector<ExactRational> factorial_weighted(const std::vector<ExactInt>& x) {
  std::vector<ExactRational> z;
  z.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    z.emplace_back(factorial(static_cast<int>(i) + 1) * x[i]);
  return z;
}

/// c_j = s_{j-1} for j = 1..len (the coloring sequence of sections 4 and 5).
inline std::vector<ExactInt> little_schroeder_shifted(int len) {
  std::vector<ExactInt> c;
  c.reserve(len);
  for (int j = 1; j <= len; ++j) c.push_back(little_schroeder(j - 1));
  return c;
}

/// c_j = sigma_j for j = 1..len (the coloring sequence of section 3).
inline std::vector<ExactInt> sigma_values(int len) {
  std::vector<ExactInt> c;
  c.reserve(len);
  for (int j = 1; j <= len; ++j) c.push_back(sigma(j));
  return c;
}

/// (1! s_0, 2! s_1, ...) of the given length.
inline std::vector<ExactRational> little_schroeder_weights(int len) {
  return factorial_weighted(little_schroeder_shifted(len));
}

/// (1! r_0, 2! r_1, ...) of the given length.
inline std::vector<ExactRational> large_schroeder_weights(int len) {
  std::vector<ExactInt> x;
  x.reserve(len);
  for (int j = 1; j <= len; ++j) x.push_back(large_schroeder(j - 1));
  return factorial_weighted(x);
}

/// B_{n,k}(1! s_0, 2! s_1, ...) in closed form:
/// n!/(k-1)! sum_{j=1}^{n-k} (1/j) C(n-k-1, j-1) C(n+j-1, j-1) for k < n,
/// and 1 for k = n.
inline ExactInt bell_little_schroeder(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("bell_little_schroeder: need 1 <= k <= n");
  if (k == n) return 1;  // B_{n,n}(1! s_0, ...) = (1! s_0)^n
  ExactRational sum = 0;
  for (int j = 1; j <= n - k; ++j)
    sum += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
  ExactRational r = ExactRational(factorial(n)) / ExactRational(factorial(k - 1)) * sum;
  return require_integer(r, "bell_little_schroeder");
}

/// B_{n,k}(1! r_0, 2! r_1, ...) via the alternating reduction to the little
/// Schroeder evaluation:
/// sum_{l=0}^{k} (-1)^l 2^{k-l} C(n,l) B_{n-l,k-l}(1! s_0, ...).
inline ExactInt bell_large_schroeder(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("bell_large_schroeder: need 1 <= k <= n");
  ExactInt total = 0;
  for (int l = 0; l <= k; ++l) {
    ExactInt inner;
    if (k - l == 0)
      inner = (n - l == 0) ? 1 : 0;
    else
      inner = bell_little_schroeder(n - l, k - l);
    ExactInt term = pow2(k - l) * binomial(n, l) * inner;
    total += (l % 2 == 0) ? term : -term;
  }
  return total;
}

struct BellTransformParams {
  long a = 0;
  long b = 0;
  long c = 0;
  long d = 0;
};

/// Bell transform y = Y_{a,b,c,d}(x):
/// y_n = sum_{k=1}^{n} (1/n!) [prod_{j=1}^{k-1} (an+bk+cj+d)] B_{n,k}(1! x_1, 2! x_2, ...).
/// Returns y_1..y_N. A non-integral y_n is reported as an error naming n;
/// the transforms used here are integral, so a rational result signals
/// malformed parameters rather than something to pass through.
inline std::vector<ExactInt> bell_transform(const BellTransformParams& p,
                                            const std::vector<ExactInt>& x, int N) {
  if (N < 1) throw std::invalid_argument("bell_transform: need N >= 1");
  if (static_cast<int>(x.size()) < N)
    throw std::invalid_argument("bell_transform: x supplies fewer than N values");
  std::vector<ExactRational> z = factorial_weighted(x);
  std::vector<ExactInt> y;
  y.reserve(N);
  for (int n = 1; n <= N; ++n) {
    ExactRational acc = 0;
    for (int k = 1; k <= n; ++k) {
      ExactInt coeff = 1;
      for (int j = 1; j <= k - 1; ++j)
        coeff *= ExactInt(p.a * n + p.b * k + p.c * j + p.d);
      if (coeff == 0) continue;
      acc += ExactRational(coeff) * partial_bell(n, k, z) / ExactRational(factorial(n));
    }
    y.push_back(require_integer(acc, "bell_transform: y_" + std::to_string(n)));
  }
  return y;
}

/// The Y_{a,b,-1,1} transform of the little Schroeder sequence, in closed
/// form:
/// y_n = (1/n) C((a+b)n, n-1)
///       + sum_{k=1}^{n-1} sum_{j=1}^{n-k} (1/j) C(an+bk, k-1) C(n-k-1, j-1) C(n+j-1, j-1).
inline std::vector<ExactInt> transform_special(int a, int b, int N) {
  if (a < 0 || b < 0) throw std::invalid_argument("transform_special: need a, b >= 0");
  if (N < 1) throw std::invalid_argument("transform_special: need N >= 1");
  std::vector<ExactInt> y;
  y.reserve(N);
  for (int n = 1; n <= N; ++n) {
    ExactRational acc = make_rational(binomial(static_cast<long>(a + b) * n, n - 1), n);
    for (int k = 1; k <= n - 1; ++k) {
      ExactRational inner = 0;
      for (int j = 1; j <= n - k; ++j)
        inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
      acc += ExactRational(binomial(static_cast<long>(a) * n + static_cast<long>(b) * k, k - 1)) * inner;
    }
    y.push_back(require_integer(acc, "transform_special: y_" + std::to_string(n)));
  }
  return y;
}

/// #S_n(alpha) = (1/(alpha n + 1)) sum_{l=0}^{n} C(alpha n + 1, n-l) C(alpha n + l, l).
inline ExactInt rational_schroeder_count(int n, int alpha) {
  if (n < 1 || alpha < 1)
    throw std::invalid_argument("rational_schroeder_count: need n, alpha >= 1");
  long an = static_cast<long>(alpha) * n;
  ExactInt sum = 0;
  for (int l = 0; l <= n; ++l) sum += binomial(an + 1, n - l) * binomial(an + l, l);
  return require_integer(make_rational(sum, an + 1), "rational_schroeder_count");
}

/// Paths in S_n(alpha) built from n unit blocks (D or NE):
/// 2^n / ((alpha-1)n + 1) * C(alpha n, n).
inline ExactInt n_blocks_count(int n, int alpha) {
  if (n < 1 || alpha < 1) throw std::invalid_argument("n_blocks_count: need n, alpha >= 1");
  long denom = static_cast<long>(alpha - 1) * n + 1;
  return require_integer(
      make_rational(pow2(n) * binomial(static_cast<long>(alpha) * n, n), denom),
      "n_blocks_count");
}

/// Paths in S_n(alpha) built from exactly k SP^/\ blocks. For k < n this is
/// 2^k C((alpha-1)n + k, k-1) sum_{j=1}^{n-k} (1/j) C(n-k-1, j-1) C(n+j-1, j-1);
/// k = n delegates to n_blocks_count.
inline ExactInt blocks_count(int n, int alpha, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("blocks_count: need 1 <= k <= n");
  if (alpha < 1) throw std::invalid_argument("blocks_count: need alpha >= 1");
  if (k == n) return n_blocks_count(n, alpha);
  ExactRational inner = 0;
  for (int j = 1; j <= n - k; ++j)
    inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
  ExactRational r =
      ExactRational(pow2(k) * binomial(static_cast<long>(alpha - 1) * n + k, k - 1)) * inner;
  return require_integer(r, "blocks_count");
}

/// Number of colored Dyck paths in D^c_n(a,b) with exactly k peaks:
/// C(an + bk, k-1) (k-1)!/n! B_{n,k}(1! c_1, 2! c_2, ...).
/// Specializes to (a,b,c) = (alpha-1, 1, sigma), (1, 0, s-shifted) and
/// (1, 1, s-shifted).
inline ExactInt colored_dyck_peak_count(int a, int b, const std::vector<ExactInt>& c,
                                        int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("colored_dyck_peak_count: need 1 <= k <= n");
  if (a < 0 || b < 0 || b > 1)
    throw std::invalid_argument("colored_dyck_peak_count: need a >= 0 and b in {0,1}");
  std::vector<ExactRational> z = factorial_weighted(c);
  ExactRational r =
      ExactRational(binomial(static_cast<long>(a) * n + static_cast<long>(b) * k, k - 1) *
                    factorial(k - 1)) *
      partial_bell(n, k, z) / ExactRational(factorial(n));
  return require_integer(r, "colored_dyck_peak_count");
}

/// #CS_{n,k} = (k!/n!) B_{n,k}(1! s_0, 2! s_1, ...), the number of colored
/// compositions of n with k parts, part j admitting s_{j-1} colors.
inline ExactInt composition_count(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("composition_count: need 1 <= k <= n");
  ExactRational r = ExactRational(factorial(k)) / ExactRational(factorial(n)) *
                    partial_bell(n, k, little_schroeder_weights(n - k + 1));
  return require_integer(r, "composition_count");
}

/// #T_n, ordered rooted trees with n generators:
/// 1 + sum_{k=1}^{n-1} sum_{j=1}^{n-k} (1/j) C(n, k-1) C(n-k-1, j-1) C(n+j-1, j-1).
inline ExactInt tree_count(int n) {
  if (n < 1) throw std::invalid_argument("tree_count: need n >= 1");
  ExactRational acc = 1;
  for (int k = 1; k <= n - 1; ++k) {
    ExactRational inner = 0;
    for (int j = 1; j <= n - k; ++j)
      inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
    acc += ExactRational(binomial(n, k - 1)) * inner;
  }
  return require_integer(acc, "tree_count");
}

/// Trees in T_n with exactly k-1 unary nodes. Closed form for k < n; k = n
/// gives the single chain.
inline ExactInt trees_with_unary(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("trees_with_unary: need 1 <= k <= n");
  if (k == n) return 1;
  ExactRational inner = 0;
  for (int j = 1; j <= n - k; ++j)
    inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
  return require_integer(ExactRational(binomial(n, k - 1)) * inner, "trees_with_unary");
}

/// #M_n, simple rooted outerplanar maps with n+1 vertices:
/// (1/n) C(2n, n-1) + sum_{k=1}^{n-1} sum_{j=1}^{n-k} (1/j) C(n+k, k-1) C(n-k-1, j-1) C(n+j-1, j-1).
inline ExactInt map_count(int n) {
  if (n < 1) throw std::invalid_argument("map_count: need n >= 1");
  ExactRational acc = make_rational(binomial(2L * n, n - 1), n);
  for (int k = 1; k <= n - 1; ++k) {
    ExactRational inner = 0;
    for (int j = 1; j <= n - k; ++j)
      inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
    acc += ExactRational(binomial(static_cast<long>(n) + k, k - 1)) * inner;
  }
  return require_integer(acc, "map_count");
}

/// Maps in M_n with exactly k biconnected components. The k = n slice is the
/// Catalan number C_n.
inline ExactInt maps_with_components(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("maps_with_components: need 1 <= k <= n");
  if (k == n) return require_integer(make_rational(binomial(2L * n, n - 1), n),
                                     "maps_with_components");
  ExactRational inner = 0;
  for (int j = 1; j <= n - k; ++j)
    inner += make_rational(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j);
  return require_integer(ExactRational(binomial(static_cast<long>(n) + k, k - 1)) * inner,
                         "maps_with_components");
}

}  // namespace schroeder
