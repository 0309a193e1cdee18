#include "pipeline.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace transcut {

namespace {

Integer cube(const Integer& z) { return z * z * z; }

Rational cube(const Rational& q) { return q * q * q; }

// count >= c n^{1/3}  <=>  count^3 >= c^3 n
bool at_least_cbrt(std::size_t count, const Rational& c, std::size_t n) {
  return Rational(cube(Integer(static_cast<unsigned long>(count)))) >=
         cube(c) * static_cast<unsigned long>(n);
}

std::unordered_map<Point, std::size_t, PointHash> point_index(const Instance& inst) {
  std::unordered_map<Point, std::size_t, PointHash> index;
  index.reserve(inst.points.size());
  for (std::size_t i = 0; i < inst.points.size(); ++i) index.emplace(inst.points[i], i);
  return index;
}

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::size_t distinct_differences(const std::vector<Translate>& set) {
  std::unordered_set<Translate, TranslateHash> diffs;
  diffs.reserve(set.size() * set.size());
  for (const auto& a : set) {
    for (const auto& b : set) diffs.insert(a - b);
  }
  return diffs.size();
}

DenseSubset finish_subset(std::vector<std::size_t> vertices,
                          const std::vector<Translate>& translates) {
  DenseSubset out;
  out.vertices = std::move(vertices);
  std::vector<Translate> set;
  for (auto v : out.vertices) set.push_back(translates.at(v));
  if (!set.empty()) {
    out.difference_size = distinct_differences(set);
    out.doubling = Rational(static_cast<unsigned long>(out.difference_size),
                            static_cast<unsigned long>(set.size()));
    out.doubling.canonicalize();
  }
  return out;
}

}  // namespace

std::size_t default_r(std::size_t n) {
  // Smallest m with (2m)^3 >= n is ceil(n^{1/3} / 2).
  std::size_t m = 0;
  while (8 * m * m * m < n) ++m;
  return std::max<std::size_t>(11, m);
}

std::vector<std::size_t> good_curves(const Instance& inst, const Rational& c_good) {
  if (c_good <= 0) throw std::invalid_argument("good_curves: c_good must be positive");
  const IncidenceCount counts = count_incidences(inst);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inst.translates.size(); ++i) {
    if (counts.per_translate[i] > 0 &&
        at_least_cbrt(counts.per_translate[i], c_good, inst.translates.size())) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::optional<std::size_t>> locate_points(const Cutting& cutting, const Instance& inst,
                                                      unsigned jobs) {
  std::vector<std::optional<std::size_t>> out(inst.points.size());
  parallel_for(inst.points.size(), jobs, [&](std::size_t i) {
    const Location loc = locate(cutting, inst.points[i]);
    if (const auto* cell = std::get_if<std::size_t>(&loc)) out[i] = *cell;
  });
  return out;
}

namespace {

std::vector<GoodTriple> triples_from(const Instance& inst,
                                     const std::vector<std::optional<std::size_t>>& where,
                                     const std::vector<std::size_t>& good, std::size_t C2) {
  const auto index = point_index(inst);
  std::vector<Rational> s_sorted = inst.s_coords;
  std::sort(s_sorted.begin(), s_sorted.end());

  std::vector<GoodTriple> out;
  struct OnCurve {
    std::size_t point;
    std::size_t s_rank;
    std::size_t cell;
  };
  std::vector<OnCurve> run;
  for (std::size_t t : good) {
    run.clear();
    for (std::size_t k = 0; k < s_sorted.size(); ++k) {
      const auto it = index.find(shifted(s_sorted[k], inst.translates[t]));
      if (it == index.end()) continue;
      const auto& cell = where[it->second];
      if (!cell) continue;  // boundary points are ignored
      run.push_back({it->second, k, *cell});
    }
    for (std::size_t k = 0; k + 2 < run.size(); ++k) {
      const auto& a = run[k];
      const auto& b = run[k + 1];
      const auto& c = run[k + 2];
      if (a.cell != b.cell || b.cell != c.cell) continue;
      if (c.s_rank - a.s_rank - 1 > C2) continue;
      out.push_back({t, {a.point, b.point, c.point}, a.cell});
    }
  }
  return out;
}

std::vector<CellStats> classify_from(std::size_t cells,
                                     const std::vector<std::optional<std::size_t>>& where,
                                     const std::vector<GoodTriple>& triples, std::size_t n,
                                     const Rational& C3, const Rational& C4) {
  if (C3 < 0 || C4 < 0) throw std::invalid_argument("classify_good_cells: negative threshold");
  std::vector<std::size_t> points(cells, 0);
  for (const auto& w : where) {
    if (w) ++points.at(*w);
  }
  std::vector<std::set<std::size_t>> curves(cells);
  for (const auto& t : triples) curves.at(t.cell).insert(t.curve);

  // f >= C3 n^{2/3} <=> f^3 >= C3^3 n^2;  p <= C4 n^{1/3} <=> p^3 <= C4^3 n.
  const Integer nn(static_cast<unsigned long>(n));
  std::vector<CellStats> out;
  for (std::size_t c = 0; c < cells; ++c) {
    const std::size_t f = curves[c].size();
    if (f == 0) continue;
    const bool many = Rational(cube(Integer(static_cast<unsigned long>(f)))) >=
                      cube(C3) * Rational(nn * nn);
    const bool sparse = Rational(cube(Integer(static_cast<unsigned long>(points[c])))) <=
                        cube(C4) * Rational(nn);
    if (many && sparse) out.push_back({c, points[c], f});
  }
  return out;
}

}  // namespace

std::vector<GoodTriple> find_good_triples(const Instance& inst, const Cutting& cutting,
                                          const std::vector<std::size_t>& good, std::size_t C2) {
  return triples_from(inst, locate_points(cutting, inst), good, C2);
}

std::vector<CellStats> classify_good_cells(const Cutting& cutting,
                                           const std::vector<GoodTriple>& triples,
                                           const Instance& inst, const Rational& C3,
                                           const Rational& C4) {
  return classify_from(cutting.cells.size(), locate_points(cutting, inst), triples,
                       inst.translates.size(), C3, C4);
}

CellGraph build_cell_graph(std::size_t cell, const std::vector<GoodTriple>& triples,
                           const Instance& inst) {
  CellGraph g;
  g.cell = cell;
  std::map<std::size_t, const GoodTriple*> pick;  // curve -> leftmost triple
  for (const auto& t : triples) {
    if (t.cell != cell) continue;
    auto [it, fresh] = pick.emplace(t.curve, &t);
    if (!fresh && inst.points[t.points[0]].x < inst.points[it->second->points[0]].x) {
      it->second = &t;
    }
  }
  std::vector<const GoodTriple*> chosen;
  for (const auto& [curve, t] : pick) chosen.push_back(t);
  std::sort(chosen.begin(), chosen.end(), [&](const GoodTriple* a, const GoodTriple* b) {
    const auto& xa = inst.points[a->points[0]].x;
    const auto& xb = inst.points[b->points[0]].x;
    if (xa != xb) return xa < xb;
    return a->curve < b->curve;
  });

  std::set<std::size_t> vertices;
  for (const GoodTriple* t : chosen) {
    g.chosen.push_back(*t);
    const auto& p = t->points;
    for (auto [a, b] : {std::pair{p[0], p[1]}, std::pair{p[0], p[2]}, std::pair{p[1], p[2]}}) {
      GraphEdge e;
      e.u = std::min(a, b);
      e.v = std::max(a, b);
      e.curve = t->curve;
      e.x_lo = inst.points[a].x;
      e.x_hi = inst.points[b].x;
      g.edges.push_back(std::move(e));
    }
    vertices.insert(p.begin(), p.end());
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  return g;
}

TriangleCount count_triangles(const CellGraph& g) {
  std::map<std::size_t, std::set<std::size_t>> adj;
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  TriangleCount out;
  std::unordered_set<std::uint64_t> used;
  for (const auto& [a, na] : adj) {
    for (auto itb = na.upper_bound(a); itb != na.end(); ++itb) {
      const std::size_t b = *itb;
      const auto& nb = adj[b];
      for (auto itc = na.upper_bound(b); itc != na.end(); ++itc) {
        const std::size_t c = *itc;
        if (!nb.count(c)) continue;
        ++out.total;
        const std::uint64_t ab = pair_key(a, b), ac = pair_key(a, c), bc = pair_key(b, c);
        if (!used.count(ab) && !used.count(ac) && !used.count(bc)) {
          used.insert({ab, ac, bc});
          ++out.edge_disjoint;
        }
      }
    }
  }
  return out;
}

std::vector<P3Witness> find_self_intersecting_p3(
    const CellGraph& g, const std::vector<Translate>& translates,
    const std::function<bool(const Point&)>& inside) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].u].push_back(e);
    incident[g.edges[e].v].push_back(e);
  }
  auto other = [&](std::size_t e, std::size_t end) {
    return g.edges[e].u == end ? g.edges[e].v : g.edges[e].u;
  };

  std::map<std::uint64_t, bool> meets;  // curve pair -> intersection inside
  auto curves_meet_inside = [&](std::size_t c1, std::size_t c3) {
    const std::uint64_t key = pair_key(c1, c3);
    auto it = meets.find(key);
    if (it != meets.end()) return it->second;
    const auto p = intersect(translates.at(c1), translates.at(c3));
    const bool ok = p && inside(*p);
    meets.emplace(key, ok);
    return ok;
  };

  std::vector<P3Witness> out;
  for (std::size_t e2 = 0; e2 < g.edges.size(); ++e2) {
    const std::size_t b = g.edges[e2].u;
    const std::size_t c = g.edges[e2].v;
    if (b == c) continue;
    for (std::size_t e1 : incident[b]) {
      if (e1 == e2) continue;
      const std::size_t a = other(e1, b);
      if (a == c) continue;
      for (std::size_t e3 : incident[c]) {
        if (e3 == e2 || e3 == e1) continue;
        const std::size_t d = other(e3, c);
        if (d == a || d == b) continue;
        const std::size_t c1 = g.edges[e1].curve;
        const std::size_t c3 = g.edges[e3].curve;
        if (c1 == c3) continue;
        if (curves_meet_inside(c1, c3)) out.push_back({g.cell, e1, e2, e3});
      }
    }
  }
  return out;
}

HGraph build_h_graph(const std::vector<std::size_t>& vertices,
                     const std::vector<CellGraph>& graphs,
                     const std::vector<Translate>& translates, const Cutting& cutting,
                     unsigned jobs) {
  std::vector<std::vector<P3Witness>> per_graph(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t k) {
    const std::size_t cell = graphs[k].cell;
    per_graph[k] = find_self_intersecting_p3(graphs[k], translates, [&](const Point& p) {
      const Location loc = locate(cutting, p);
      const auto* c = std::get_if<std::size_t>(&loc);
      return c && *c == cell;
    });
  });

  HGraph h;
  h.vertices = vertices;
  std::sort(h.vertices.begin(), h.vertices.end());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<P3Witness>> edges;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    for (const auto& w : per_graph[k]) {
      std::size_t i = graphs[k].edges[w.e1].curve;
      std::size_t j = graphs[k].edges[w.e3].curve;
      if (i > j) std::swap(i, j);
      edges[{i, j}].push_back(w);
      ++h.witness_count;
    }
  }
  for (auto& [key, ws] : edges) {
    ++h.multiplicity[ws.size()];
    h.edges.push_back({key.first, key.second, std::move(ws)});
  }
  return h;
}

std::vector<Translate> restricted_difference(const HGraph& h,
                                             const std::vector<Translate>& translates) {
  std::unordered_set<Translate, TranslateHash> diffs;
  for (const auto& e : h.edges) {
    diffs.insert(translates.at(e.i) - translates.at(e.j));
    diffs.insert(translates.at(e.j) - translates.at(e.i));
  }
  std::vector<Translate> out(diffs.begin(), diffs.end());
  std::sort(out.begin(), out.end(),
            [](const Translate& l, const Translate& r) { return lex_less(l, r); });
  return out;
}

DenseSubset extract_dense_subset(const HGraph& h, const std::vector<Translate>& translates,
                                 const Rational& K) {
  if (K <= 0) throw std::invalid_argument("extract_dense_subset: K must be positive");
  std::map<std::size_t, std::set<std::size_t>> adj;
  for (const auto& e : h.edges) {
    adj[e.i].insert(e.j);
    adj[e.j].insert(e.i);
  }
  if (adj.empty()) return finish_subset({}, translates);

  // threshold = (2|E| / |V|) / K, compared exactly as deg * |V| * K < 2|E|.
  const Rational vk = Rational(static_cast<unsigned long>(adj.size())) * K;
  const Rational twice_e(static_cast<unsigned long>(2 * h.edges.size()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      if (Rational(static_cast<unsigned long>(it->second.size())) * vk < twice_e) {
        for (auto nb : it->second) adj[nb].erase(it->first);
        it = adj.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  std::vector<std::size_t> keep;
  for (const auto& [v, nb] : adj) keep.push_back(v);
  return finish_subset(std::move(keep), translates);
}

DenseSubset exhaustive_dense_subset(const HGraph& h, const std::vector<Translate>& translates) {
  const std::size_t m = h.vertices.size();
  if (m > kExhaustiveSubsetLimit) {
    throw std::invalid_argument("exhaustive_dense_subset: more than 18 vertices");
  }
  if (m == 0) {
    DenseSubset out = finish_subset({}, translates);
    out.exhaustive = true;
    return out;
  }
  // Ids of the distinct values t_a - t_b, so a subset's difference set size is
  // a count of distinct ids.
  std::unordered_map<Translate, std::uint32_t, TranslateHash> ids;
  std::vector<std::uint32_t> diff_id(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Translate d = translates.at(h.vertices[a]) - translates.at(h.vertices[b]);
      auto [it, fresh] = ids.emplace(d, static_cast<std::uint32_t>(ids.size()));
      diff_id[a * m + b] = it->second;
    }
  }
  std::vector<std::uint32_t> stamp(ids.size(), 0);
  std::uint32_t epoch = 0;
  std::uint32_t best_mask = 0;
  std::size_t best_size = 0, best_diff = 0;
  const std::size_t min_size = (m + 1) / 2;
  std::vector<std::size_t> members;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < min_size) continue;
    members.clear();
    for (std::size_t a = 0; a < m; ++a) {
      if (mask >> a & 1u) members.push_back(a);
    }
    ++epoch;
    std::size_t diff = 0;
    for (auto a : members) {
      for (auto b : members) {
        auto& s = stamp[diff_id[a * m + b]];
        if (s != epoch) {
          s = epoch;
          ++diff;
        }
      }
    }
    // diff / size < best_diff / best_size, then larger size.
    const bool better = best_size == 0 || diff * best_size < best_diff * size ||
                        (diff * best_size == best_diff * size && size > best_size);
    if (better) {
      best_mask = mask;
      best_size = size;
      best_diff = diff;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < m; ++a) {
    if (best_mask >> a & 1u) keep.push_back(h.vertices[a]);
  }
  DenseSubset out = finish_subset(std::move(keep), translates);
  out.exhaustive = true;
  return out;
}

PipelineResult run_pipeline(const Instance& inst, const PipelineConfig& config) {
  validate(inst);
  if (config.c_good <= 0) throw std::invalid_argument("pipeline: c_good must be positive");
  if (config.C3 < 0 || config.C4 < 0) throw std::invalid_argument("pipeline: negative threshold");
  if (config.K <= 0) throw std::invalid_argument("pipeline: K must be positive");
  if (config.r != 0 && config.r < 11) throw std::invalid_argument("pipeline: r must be >= 11");

  PipelineResult res;
  PipelineReport& rep = res.report;
  rep.n = inst.translates.size();
  rep.points = inst.points.size();
  rep.config = config;
  rep.r = config.r != 0 ? config.r : default_r(rep.n);

  res.good = good_curves(inst, config.c_good);
  rep.good_curves = res.good.size();
  if (res.good.size() <= rep.r) {
    rep.skipped = "need more than r good curves to build a cutting";
    return res;
  }

  std::vector<Translate> sub;
  for (auto t : res.good) sub.push_back(inst.translates[t]);
  CuttingOptions copt;
  copt.perturb = true;
  if (config.q != 0) {
    copt.policy = QPolicy::Fixed;
    copt.fixed_q = config.q;
  }
  res.cutting = std::make_shared<const Cutting>(build_cutting(CurveFamily(sub), rep.r, copt));
  const Cutting& cutting = *res.cutting;
  rep.q = cutting.q;
  rep.cells = cutting.cells.size();

  const auto where = locate_points(cutting, inst, config.jobs);
  rep.boundary_points = static_cast<std::size_t>(
      std::count_if(where.begin(), where.end(), [](const auto& w) { return !w; }));
  res.triples = triples_from(inst, where, res.good, config.C2);
  rep.good_triples = res.triples.size();

  rep.good_cell_stats =
      classify_from(cutting.cells.size(), where, res.triples, rep.n, config.C3, config.C4);
  rep.good_cells = rep.good_cell_stats.size();

  std::unordered_map<std::size_t, std::vector<GoodTriple>> by_cell;
  for (const auto& t : res.triples) by_cell[t.cell].push_back(t);
  res.graphs.resize(rep.good_cells);
  std::vector<TriangleCount> tri(rep.good_cells);
  parallel_for(rep.good_cells, config.jobs, [&](std::size_t k) {
    const std::size_t cell = rep.good_cell_stats[k].cell;
    res.graphs[k] = build_cell_graph(cell, by_cell.at(cell), inst);
    tri[k] = count_triangles(res.graphs[k]);
  });
  for (const auto& t : tri) {
    rep.triangles += t.total;
    rep.edge_disjoint_triangles += t.edge_disjoint;
  }

  res.h = build_h_graph(res.good, res.graphs, inst.translates, cutting, config.jobs);
  rep.self_intersecting_p3 = res.h.witness_count;
  rep.h_edges = res.h.edges.size();
  rep.multiplicity = res.h.multiplicity;
  rep.restricted_difference = restricted_difference(res.h, inst.translates).size();

  if (config.exhaustive_subset) {
    res.dense = exhaustive_dense_subset(res.h, inst.translates);
  } else {
    res.dense = extract_dense_subset(res.h, inst.translates, config.K);
  }
  rep.exhaustive_subset = res.dense.exhaustive;
  rep.dense_subset = res.dense.vertices.size();
  rep.dense_difference = res.dense.difference_size;
  rep.dense_vertices = res.dense.vertices;
  return res;
}

}  // namespace transcut
