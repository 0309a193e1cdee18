#pragma once

// Hand-built configuration of a self-intersecting P3: a triangle L, R, v with
// edges e1 = L-v, e2 = L-R, e3 = v-R, and a second apex w joined to L by e1'.
// Each edge lies on its own translate through its two endpoints.

#include "pipeline.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace fixture {

using transcut::CellGraph;
using transcut::Point;
using transcut::Rational;
using transcut::Translate;

struct P3Config {
  std::vector<Point> points;          // L, R, v, w
  std::vector<Translate> translates;  // curves of e2, e1, e3, e1'
  CellGraph graph;                    // edges e2, e1, e3, e1' in that order
};

inline Point at(long x, long y) { return {Rational(x), Rational(y)}; }

inline P3Config p3_config(const Point& w) {
  P3Config f;
  const Point L = at(-3, 0), R = at(3, 0), v = at(-1, 3);
  f.points = {L, R, v, w};
  f.translates = {*transcut::curve_through(L, R), *transcut::curve_through(L, v),
                  *transcut::curve_through(v, R), *transcut::curve_through(L, w)};
  f.graph.cell = 0;
  f.graph.vertices = {0, 1, 2, 3};
  auto edge = [&](std::size_t a, std::size_t b, std::size_t curve) {
    f.graph.edges.push_back({std::min(a, b), std::max(a, b), curve,
                             std::min(f.points[a].x, f.points[b].x),
                             std::max(f.points[a].x, f.points[b].x)});
  };
  edge(0, 1, 0);
  edge(0, 2, 1);
  edge(2, 1, 2);
  edge(0, 3, 3);
  return f;
}

/// Stand-in for the cell: (-4, 4) x (-10, 4).
inline bool in_box(const Point& p) { return p.x > -4 && p.x < 4 && p.y > -10 && p.y < 4; }

/// Paths as {min(e1, e3), e2, max(e1, e3)}.
inline std::set<std::array<std::size_t, 3>> normalized(const std::vector<transcut::P3Witness>& ws) {
  std::set<std::array<std::size_t, 3>> out;
  for (const auto& w : ws) out.insert({std::min(w.e1, w.e3), w.e2, std::max(w.e1, w.e3)});
  return out;
}

}  // namespace fixture
