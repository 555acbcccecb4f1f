#pragma once

// Simple rooted outerplanar maps assembled from polygon-dissection
// components glued at cut vertices, and the bijection phi between M_n and
// the colored Dyck paths D^s_n(1,1).
//
// A map is stored constructively: components in the order the
// counterclockwise boundary walk (starting along the root edge) first
// enters them, each with the id of the vertex its root merges into. Vertex
// ids follow discovery order, the root vertex being 0. The walk keeps one
// pending arrival per vertex: entering a component consumes the arrival of
// its attach vertex and schedules the component's own vertices plus a
// return to the attach vertex; every other arrival is a plain visit. The
// walk ends with the final return to vertex 0.
//
// phi emits, per component entry, an ascent block u^{2i} d^i (the component
// having i+1 vertices, its dissection being the color) and one bare
// down-step per plain visit; the final return emits nothing.

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schroeder/colored_dyck.hpp"
#include "schroeder/dissection.hpp"

namespace schroeder {

struct OuterplanarMap {
  struct Component {
    Dissection diss;
    int attach = 0;  // vertex id the component's root merges into

    bool operator==(const Component&) const = default;
  };
  std::vector<Component> components;

  bool operator==(const OuterplanarMap&) const = default;
};

namespace detail {

/// Replays the boundary walk, firing on_entry(component index) per
/// component entry and on_visit(vertex id) per plain arrival; the final
/// return to vertex 0 fires neither. Returns the vertex count. Throws when
/// an attach index is not realizable.
template <class OnEntry, class OnVisit>
int replay_walk(const OuterplanarMap& m, OnEntry on_entry, OnVisit on_visit) {
  if (m.components.empty()) throw std::invalid_argument("map: no components");
  if (m.components[0].attach != 0)
    throw std::invalid_argument("map: first component must attach at vertex 0");
  validate_dissection(m.components[0].diss);

  std::vector<int> pending;
  int next_id = 1;
  on_entry(0);
  for (int t = 0; t < m.components[0].diss.size + 1; ++t) pending.push_back(next_id++);
  pending.push_back(0);

  for (std::size_t ci = 1; ci < m.components.size(); ++ci) {
    const auto& comp = m.components[ci];
    validate_dissection(comp.diss);
    if (comp.attach < 0 || comp.attach >= next_id)
      throw std::invalid_argument("map: attach names an unknown vertex");
    std::size_t f = 0;
    while (f < pending.size() && pending[f] != comp.attach) ++f;
    if (f == pending.size())
      throw std::invalid_argument("map: attach vertex already passed by the walk");
    for (std::size_t i = 0; i < f; ++i) on_visit(pending[i]);
    on_entry(static_cast<int>(ci));

    std::vector<int> next;
    next.reserve(pending.size() + comp.diss.size + 2);
    for (int t = 0; t < comp.diss.size + 1; ++t) next.push_back(next_id++);
    next.push_back(comp.attach);
    next.insert(next.end(), pending.begin() + f + 1, pending.end());
    pending = std::move(next);
  }

  if (pending.empty() || pending.back() != 0)
    throw std::logic_error("map: walk does not close at the root vertex");
  for (std::size_t i = 0; i + 1 < pending.size(); ++i) on_visit(pending[i]);
  return next_id;
}

}  // namespace detail

inline void validate_map(const OuterplanarMap& m) {
  detail::replay_walk(m, [](int) {}, [](int) {});
}

inline int vertex_count(const OuterplanarMap& m) {
  return detail::replay_walk(m, [](int) {}, [](int) {});
}

/// Deterministic textual form: the boundary walk with component entries
/// spelled out ("(<dissection>)") and plain visits marked ".". Equal maps
/// produce equal strings and vice versa.
inline std::string canonical_serialize(const OuterplanarMap& m) {
  std::string s;
  detail::replay_walk(
      m, [&](int ci) { s += "(" + m.components[ci].diss.text() + ")"; },
      [&](int) { s += "."; });
  return s;
}

/// phi: map to colored Dyck path in D^s_n(1,1).
inline ColoredDyckPath phi(const OuterplanarMap& m) {
  ColoredDyckPath q{true, 1, {}};
  detail::replay_walk(
      m,
      [&](int ci) {
        const auto& comp = m.components[ci];
        q.tokens.emplace_back(
            ColoredDyckPath::Block{comp.diss.size + 1, ColorLabel{comp.diss}});
      },
      [&](int) { q.tokens.emplace_back(ColoredDyckPath::Down{}); });
  return q;
}

/// Inverse of phi: assembles the map by successive merges. A block of size
/// i after j free down-steps roots its component at the vertex whose
/// arrival follows those j visits.
inline OuterplanarMap phi_inv(const ColoredDyckPath& q) {
  if (!q.block_mode || q.a != 1)
    throw std::invalid_argument("phi_inv: path is not in block mode with a = 1");
  int n = q.weight();
  if (n < 1) throw std::invalid_argument("phi_inv: empty path");
  validate_colored_dyck(q, n, ColorKind::dissections);

  OuterplanarMap m;
  std::vector<int> pending;
  int next_id = 1;
  for (const auto& t : q.tokens) {
    if (const auto* b = std::get_if<ColoredDyckPath::Block>(&t)) {
      const Dissection& diss = std::get<Dissection>(b->color);
      if (m.components.empty()) {
        m.components.push_back({diss, 0});
        for (int i = 0; i < b->size; ++i) pending.push_back(next_id++);
        pending.push_back(0);
      } else {
        int attach = pending.front();
        pending.erase(pending.begin());
        m.components.push_back({diss, attach});
        std::vector<int> sub;
        for (int i = 0; i < b->size; ++i) sub.push_back(next_id++);
        sub.push_back(attach);
        pending.insert(pending.begin(), sub.begin(), sub.end());
      }
    } else {
      pending.erase(pending.begin());
    }
  }
  if (pending.size() != 1 || pending.front() != 0)
    throw std::logic_error("phi_inv: walk does not close at the root vertex");
  return m;
}

/// All of M_n, as phi_inv over D^s_n(1,1); canonical forms are checked
/// pairwise distinct, a duplicate being a hard failure.
inline std::vector<OuterplanarMap> enum_maps(int n) {
  if (n < 1) throw std::invalid_argument("enum_maps: need n >= 1");
  std::vector<OuterplanarMap> out;
  std::set<std::string> seen;
  for (const ColoredDyckPath& q : enum_colored_dyck_block(n, 1, ColorKind::dissections)) {
    OuterplanarMap m = phi_inv(q);
    if (!seen.insert(canonical_serialize(m)).second)
      throw std::logic_error("enum_maps: duplicate canonical form, phi_inv not injective");
    out.push_back(std::move(m));
  }
  return out;
}

/// Parses the canonical_serialize form back into a map.
inline OuterplanarMap parse_map(std::string_view text) {
  ColoredDyckPath q{true, 1, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.') {
      q.tokens.emplace_back(ColoredDyckPath::Down{});
      ++i;
    } else if (text[i] == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos)
        throw std::invalid_argument("parse_map: unbalanced component marker");
      Dissection d = Dissection::parse(text.substr(i + 1, close - i - 1));
      q.tokens.emplace_back(ColoredDyckPath::Block{d.size + 1, ColorLabel{d}});
      i = close + 1;
    } else {
      throw std::invalid_argument("parse_map: unexpected character");
    }
  }
  return phi_inv(q);
}

}  // namespace schroeder
