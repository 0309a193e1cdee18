#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. Each one recomputes a library result from first principles, with no
// shared code beyond the value types.

#include "additive.hpp"
#include "arrangement.hpp"
#include "cutting.hpp"
#include "incidence.hpp"
#include "pipeline.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using transcut::Cell;
using transcut::Instance;
using transcut::Line;
using transcut::Point;
using transcut::Rational;
using transcut::Translate;
using transcut::XBound;

inline Rational eval(const Translate& t, const Rational& x) {
  const Rational d = x - t.a;
  return d * d + t.b;
}

inline Rational lift(const Translate& t, const Rational& x) {
  // (x - a)^2 + b - x^2 = -2 a x + a^2 + b
  return -2 * t.a * x + t.a * t.a + t.b;
}

// Intersection of two translates, by solving (x-a1)^2 + b1 = (x-a2)^2 + b2.
inline std::optional<Point> meet(const Translate& t1, const Translate& t2) {
  if (t1.a == t2.a) return std::nullopt;
  const Rational x = (t2.a * t2.a + t2.b - t1.a * t1.a - t1.b) / (2 * (t2.a - t1.a));
  return Point{x, eval(t1, x)};
}

inline std::size_t level(const std::vector<Translate>& fam, const Point& p) {
  std::size_t below = 0;
  for (const auto& t : fam) {
    if (eval(t, p.x) < p.y) ++below;
  }
  return below;
}

// ---- arrangement ---------------------------------------------------------

struct ArrangementCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

/// Pairwise intersections; edges = n + 2 * (vertex incidences) when no point
/// lies on three curves.
inline ArrangementCounts arrangement_counts(const std::vector<Translate>& fam) {
  ArrangementCounts out;
  std::vector<std::size_t> per_curve(fam.size(), 0);
  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const auto p = meet(fam[i], fam[j]);
      if (!p) continue;
      ++per_curve[i];
      ++per_curve[j];
      seen.insert({p->x, p->y});
    }
  }
  out.vertices = seen.size();
  for (auto c : per_curve) out.edges += c + 1;
  return out;
}

/// A point strictly inside the x-range of an edge.
inline Rational interior_x(const XBound& lo, const XBound& hi) {
  if (lo.finite() && hi.finite()) return (lo.value() + hi.value()) / 2;
  if (lo.finite()) return lo.value() + 1;
  if (hi.finite()) return hi.value() - 1;
  return 0;
}

// ---- cells ---------------------------------------------------------------

/// Open x-interval with rational or infinite ends.
struct Interval {
  XBound lo;
  XBound hi;

  // Keep only x with m x + c > 0.
  void require_positive(const Rational& m, const Rational& c) {
    if (sgn(m) == 0) {
      if (sgn(c) <= 0) hi = lo = XBound(Rational(0));
      return;
    }
    const Rational root = -c / m;
    if (sgn(m) > 0) {
      if (lo < XBound(root)) lo = XBound(root);
    } else {
      if (XBound(root) < hi) hi = XBound(root);
    }
  }
  bool empty() const { return !(lo < hi); }
};

/// Does the lifted line l meet the open interior of the cell? Solved as an
/// intersection of half-lines in x.
inline bool crosses(const Cell& cell, const Line& l) {
  Interval iv{cell.x_lo(), cell.x_hi()};
  if (cell.bottom) {
    iv.require_positive(l.slope - cell.bottom->line.slope,
                        l.intercept - cell.bottom->line.intercept);
  }
  if (cell.top) {
    iv.require_positive(cell.top->line.slope - l.slope, cell.top->line.intercept - l.intercept);
  }
  return !iv.empty();
}

inline std::size_t crossing_count(const transcut::Cutting& c, const Cell& cell) {
  std::size_t k = 0;
  for (const auto& l : c.family().lines()) k += crosses(cell, l) ? 1 : 0;
  return k;
}

inline bool inside(const Cell& cell, const Point& p) {
  const Rational ly = p.y - p.x * p.x;
  if (!(cell.x_lo() < XBound(p.x)) || !(XBound(p.x) < cell.x_hi())) return false;
  if (cell.bottom && !(cell.bottom->line.at(p.x) < ly)) return false;
  if (cell.top && !(ly < cell.top->line.at(p.x))) return false;
  return true;
}

/// Every cell whose open interior contains p.
inline std::vector<std::size_t> cells_containing(const transcut::Cutting& c, const Point& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (inside(c.cells[i], p)) out.push_back(i);
  }
  return out;
}

// ---- simplification properties ------------------------------------------

struct SimpCounts {
  std::size_t portion = 0;  // most curves meeting a level portion p_u..p_v
  std::size_t arc = 0;      // most curves meeting a closed arc
  std::int64_t min_level = 0;
  std::int64_t max_level = 0;
};

inline bool meets_segment(const Line& l, const Line& seg, const Rational& x0, const Rational& x1) {
  if (l == seg) return true;
  if (l.slope == seg.slope) return false;
  const Rational x = (seg.intercept - l.intercept) / (l.slope - seg.slope);
  return x0 <= x && x <= x1;
}

inline std::int64_t lifted_level(const transcut::CurveFamily& fam, const Rational& x,
                                 const Rational& y) {
  std::int64_t below = 0;
  for (const auto& t : fam.translates()) {
    if (lift(t, x) < y) ++below;
  }
  return below;
}

/// Recomputes the three simplification clauses for one level: crossings of
/// each level portion between consecutive junction samples, crossings of each
/// arc, and the range of levels met along every piece of the simplified chain.
inline SimpCounts simplification_counts(const transcut::Arrangement& arr,
                                        const transcut::LevelChain& chain,
                                        const transcut::Simplification& simp) {
  const auto& fam = arr.family();
  SimpCounts out;
  out.min_level = out.max_level = static_cast<std::int64_t>(chain.k);
  const auto& J = simp.junction_samples;
  for (std::size_t j = 0; j + 1 < J.size(); ++j) {
    const std::size_t u = J[j], v = J[j + 1];
    const Rational xu = simp.sample_points[u].x, xv = simp.sample_points[v].x;
    std::size_t portion = 0;
    for (std::size_t c = 0; c < fam.size(); ++c) {
      bool hit = false;
      for (std::size_t e = u; e <= v && !hit; ++e) {
        const auto& edge = chain.edges[e];
        const Rational a = edge.x_lo.finite() && xu < edge.x_lo.value() ? edge.x_lo.value() : xu;
        const Rational b = edge.x_hi.finite() && edge.x_hi.value() < xv ? edge.x_hi.value() : xv;
        hit = meets_segment(fam.line(c), fam.line(edge.curve), a, b);
      }
      portion += hit ? 1 : 0;
    }
    out.portion = std::max(out.portion, portion);

    const Line& arc = simp.chain.pieces()[j + 1].line;
    std::size_t arc_hits = 0;
    for (const auto& l : fam.lines()) arc_hits += meets_segment(l, arc, xu, xv) ? 1 : 0;
    out.arc = std::max(out.arc, arc_hits);
  }

  for (const auto& piece : simp.chain.pieces()) {
    std::vector<Rational> xs;
    for (const auto& l : fam.lines()) {
      if (l.slope == piece.line.slope) continue;
      const Rational x = (piece.line.intercept - l.intercept) / (l.slope - piece.line.slope);
      if (!(XBound(x) < piece.x_lo) && !(piece.x_hi < XBound(x))) xs.push_back(x);
    }
    if (piece.x_lo.finite()) xs.push_back(piece.x_lo.value());
    if (piece.x_hi.finite()) xs.push_back(piece.x_hi.value());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rational> probe = xs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) probe.push_back((xs[i] + xs[i + 1]) / 2);
    if (!xs.empty()) {
      if (!piece.x_lo.finite()) probe.push_back(xs.front() - 1);
      if (!piece.x_hi.finite()) probe.push_back(xs.back() + 1);
    } else {
      probe.push_back(interior_x(piece.x_lo, piece.x_hi));
    }
    for (const auto& x : probe) {
      const std::int64_t lv = lifted_level(fam, x, piece.line.at(x));
      out.min_level = std::min(out.min_level, lv);
      out.max_level = std::max(out.max_level, lv);
    }
  }
  return out;
}

// ---- incidences ----------------------------------------------------------

inline std::uint64_t incidences(const Instance& inst) {
  std::uint64_t total = 0;
  for (const auto& s : inst.s_coords) {
    for (const auto& t : inst.translates) {
      const Point q{s + t.a, s * s + t.b};
      for (const auto& p : inst.points) {
        if (p == q) {
          ++total;
          break;
        }
      }
    }
  }
  return total;
}

inline std::uint64_t unit_pairs(const std::vector<Point>& pts, const std::vector<Point>& U) {
  std::uint64_t total = 0;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      for (const auto& u : U) {
        if (x.x - y.x == u.x && x.y - y.y == u.y) ++total;
      }
    }
  }
  return total;
}

// ---- additive (integer coordinates) --------------------------------------

using V2 = std::pair<std::int64_t, std::int64_t>;

inline V2 to_v2(const Translate& t) {
  return {t.a.get_num().get_si(), t.b.get_num().get_si()};
}

inline std::set<V2> differences(const std::vector<V2>& A) {
  std::set<V2> out;
  for (const auto& a : A) {
    for (const auto& b : A) out.insert({a.first - b.first, a.second - b.second});
  }
  return out;
}

/// Every element of the GAP, enumerated.
inline std::set<V2> gap_elements(const transcut::Gap& g) {
  std::set<V2> out;
  const V2 base = to_v2(g.base);
  if (g.dimension() == 0) {
    out.insert(base);
    return out;
  }
  const V2 g1 = to_v2(g.generators[0]);
  const std::uint64_t l1 = g.lengths[0];
  const V2 g2 = g.dimension() > 1 ? to_v2(g.generators[1]) : V2{0, 0};
  const std::uint64_t l2 = g.dimension() > 1 ? g.lengths[1] : 1;
  for (std::uint64_t i = 0; i < l1; ++i) {
    for (std::uint64_t j = 0; j < l2; ++j) {
      const auto x = static_cast<std::int64_t>(i), y = static_cast<std::int64_t>(j);
      out.insert({base.first + x * g1.first + y * g2.first, base.second + x * g1.second + y * g2.second});
    }
  }
  return out;
}

struct MinGap {
  std::uint64_t size = 0;
  std::size_t dimension = 0;
};

/// Smallest GAP of dimension <= d_max containing A whose generators are
/// differences of A. Coefficients of each point are solved directly: by
/// divisibility for one generator, by Cramer's rule for two.
inline MinGap min_gap(const std::vector<V2>& A, std::size_t d_max) {
  MinGap best{std::numeric_limits<std::uint64_t>::max(), 0};
  auto offer = [&](std::uint64_t size, std::size_t d) {
    if (size < best.size || (size == best.size && d < best.dimension)) best = {size, d};
  };
  if (A.size() == 1) {
    offer(1, 0);
    return best;
  }
  std::set<V2> gens;
  for (const auto& d : differences(A)) {
    if (d.first > 0 || (d.first == 0 && d.second > 0)) gens.insert(d);
  }
  const std::vector<V2> G(gens.begin(), gens.end());
  const V2 o = A.front();
  auto span = [](const std::vector<std::int64_t>& xs) {
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return static_cast<std::uint64_t>(*hi - *lo + 1);
  };
  for (const auto& g : G) {
    std::vector<std::int64_t> xs;
    for (const auto& a : A) {
      const std::int64_t dx = a.first - o.first, dy = a.second - o.second;
      // dx = x g.first, dy = x g.second
      if (dx * g.second != dy * g.first) break;
      const std::int64_t num = g.first != 0 ? dx : dy, den = g.first != 0 ? g.first : g.second;
      if (num % den != 0) break;
      xs.push_back(num / den);
    }
    if (xs.size() == A.size()) offer(span(xs), 1);
  }
  if (d_max < 2) return best;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const V2 g1 = G[i], g2 = G[j];
      const std::int64_t det = g1.first * g2.second - g1.second * g2.first;
      if (det == 0) continue;
      std::vector<std::int64_t> xs, ys;
      for (const auto& a : A) {
        const std::int64_t dx = a.first - o.first, dy = a.second - o.second;
        const std::int64_t x = dx * g2.second - dy * g2.first, y = g1.first * dy - g1.second * dx;
        if (x % det != 0 || y % det != 0) break;
        xs.push_back(x / det);
        ys.push_back(y / det);
      }
      if (xs.size() == A.size()) offer(span(xs) * span(ys), 2);
    }
  }
  return best;
}

// ---- pipeline ------------------------------------------------------------

/// Good triples recomputed from scratch: points of P on each good curve are
/// collected by direct evaluation, boundary points are dropped by scanning all
/// cells, and runs of three are kept when they share a cell and their S-values
/// are at most C2 ranks apart (exclusive).
inline std::vector<std::array<std::size_t, 4>> good_triples(const Instance& inst,
                                                            const transcut::Cutting& cutting,
                                                            const std::vector<std::size_t>& good,
                                                            std::size_t C2) {
  std::vector<Rational> S = inst.s_coords;
  std::sort(S.begin(), S.end());
  std::vector<std::array<std::size_t, 4>> out;  // curve, p0, p1, p2
  std::map<std::size_t, std::vector<std::size_t>> where;
  for (std::size_t t : good) {
    const Translate& tr = inst.translates[t];
    struct Hit {
      Rational x;
      std::size_t point;
      std::size_t rank;
      std::size_t cell;
    };
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
      const Point& p = inst.points[i];
      if (eval(tr, p.x) != p.y) continue;
      const Rational s = p.x - tr.a;
      const auto it = std::find(S.begin(), S.end(), s);
      if (it == S.end()) continue;
      auto w = where.find(i);
      if (w == where.end()) w = where.emplace(i, cells_containing(cutting, p)).first;
      if (w->second.size() != 1) continue;
      hits.push_back({p.x, i, static_cast<std::size_t>(it - S.begin()), w->second[0]});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.x < b.x; });
    for (std::size_t k = 0; k + 2 < hits.size(); ++k) {
      if (hits[k].cell != hits[k + 1].cell || hits[k].cell != hits[k + 2].cell) continue;
      if (hits[k + 2].rank - hits[k].rank - 1 > C2) continue;
      out.push_back({t, hits[k].point, hits[k + 1].point, hits[k + 2].point});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Self-intersecting paths as (min end edge, middle edge, max end edge),
/// found by trying every ordered edge triple.
inline std::set<std::array<std::size_t, 3>> p3_paths(
    const transcut::CellGraph& g, const std::vector<Translate>& translates,
    const std::function<bool(const Point&)>& inside_cell) {
  std::set<std::array<std::size_t, 3>> out;
  const auto& E = g.edges;
  auto shares = [&](std::size_t e, std::size_t v) { return E[e].u == v || E[e].v == v; };
  for (std::size_t e1 = 0; e1 < E.size(); ++e1) {
    for (std::size_t e2 = 0; e2 < E.size(); ++e2) {
      for (std::size_t e3 = 0; e3 < E.size(); ++e3) {
        if (e1 == e2 || e2 == e3 || e1 == e3) continue;
        // e2 = (b, c) with e1 at b and e3 at c
        for (auto [b, c] : {std::pair{E[e2].u, E[e2].v}, std::pair{E[e2].v, E[e2].u}}) {
          if (!shares(e1, b) || !shares(e3, c)) continue;
          const std::size_t a = E[e1].u == b ? E[e1].v : E[e1].u;
          const std::size_t d = E[e3].u == c ? E[e3].v : E[e3].u;
          std::set<std::size_t> verts{a, b, c, d};
          if (verts.size() != 4) continue;
          if (E[e1].curve == E[e3].curve) continue;
          const auto p = meet(translates[E[e1].curve], translates[E[e3].curve]);
          if (!p || !inside_cell(*p)) continue;
          out.insert({std::min(e1, e3), e2, std::max(e1, e3)});
        }
      }
    }
  }
  return out;
}

/// Triangle count of the simple graph on the edges, by checking every
/// vertex triple.
inline std::uint64_t triangles(const transcut::CellGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (const auto& e : g.edges) adj.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  const auto& V = g.vertices;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      if (!adj.count({V[i], V[j]})) continue;
      for (std::size_t k = j + 1; k < V.size(); ++k) {
        if (adj.count({V[i], V[k]}) && adj.count({V[j], V[k]})) ++count;
      }
    }
  }
  return count;
}

// ---- random inputs -------------------------------------------------------

inline Rational small_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational q(transcut::Integer(num(rng)), transcut::Integer(den(rng)));
  q.canonicalize();
  return q;
}

}  // namespace oracle
