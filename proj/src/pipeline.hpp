#pragma once

// Structure pipeline: good curves, good triples inside cells of a cutting of
// the good curves, good cells, per-cell graphs, self-intersecting P3s, the
// graph H on curves, and a dense subset with small difference set.

#include "cutting.hpp"
#include "incidence.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace transcut {

struct PipelineConfig {
  Rational c_good{1, 2};
  std::size_t C2 = 5;
  Rational C3{1, 8};
  Rational C4{8};
  std::size_t r = 0;  // 0: max(11, ceil(n^{1/3} / 2)), n = |T|
  std::size_t q = 0;  // 0: adaptive cutting; otherwise a fixed simplification step
  /// Peeling aggressiveness of the dense-subset step: vertices whose H-degree
  /// is below (average degree) / K are removed until none is left.
  Rational K{2};
  /// Exhaustive dense-subset search instead of peeling (|T'| <= 18 only).
  bool exhaustive_subset = false;
  unsigned jobs = 1;
};

/// max(11, ceil(n^{1/3} / 2)), computed exactly.
std::size_t default_r(std::size_t n);

/// Translates carrying at least c_good * n^{1/3} points of P, n = |T|, in
/// index order.
std::vector<std::size_t> good_curves(const Instance& inst, const Rational& c_good);

struct GoodTriple {
  std::size_t curve = 0;                // index into inst.translates
  std::array<std::size_t, 3> points{};  // indices into inst.points, x-ordered
  std::size_t cell = 0;
};

/// Cell of every point of P, or nullopt for points on the cutting boundary.
std::vector<std::optional<std::size_t>> locate_points(const Cutting& cutting, const Instance& inst,
                                                      unsigned jobs = 1);

/// cutting must be built on the curves good[0], good[1], ... (any order is
/// fine; only point location is used). Boundary points are dropped first, then
/// every run of three consecutive remaining points of P on a curve that lies
/// in one cell and spans at most C2 intermediate S-values is a triple.
std::vector<GoodTriple> find_good_triples(const Instance& inst, const Cutting& cutting,
                                          const std::vector<std::size_t>& good, std::size_t C2);

struct CellStats {
  std::size_t cell = 0;
  std::size_t points = 0;        // points of P in the open cell
  std::size_t triple_curves = 0;  // distinct curves with a triple in the cell
};

/// Cells with triple_curves >= C3 n^{2/3} and points <= C4 n^{1/3}, n = |T|.
std::vector<CellStats> classify_good_cells(const Cutting& cutting,
                                           const std::vector<GoodTriple>& triples,
                                           const Instance& inst, const Rational& C3,
                                           const Rational& C4);

struct GraphEdge {
  std::size_t u = 0;  // point indices, u < v
  std::size_t v = 0;
  std::size_t curve = 0;  // translate carrying the arc
  Rational x_lo;          // arc x-range along the curve
  Rational x_hi;
};

struct CellGraph {
  std::size_t cell = 0;
  std::vector<std::size_t> vertices;  // sorted
  std::vector<GraphEdge> edges;       // multigraph
  std::vector<GoodTriple> chosen;     // one triple per curve
};

/// Picks, per curve, the triple with the leftmost first point and adds its
/// three edges. Triples from other cells are ignored.
CellGraph build_cell_graph(std::size_t cell, const std::vector<GoodTriple>& triples,
                           const Instance& inst);

struct TriangleCount {
  std::uint64_t total = 0;
  std::uint64_t edge_disjoint = 0;  // greedy, triangles in lexicographic order
};

/// Counts on the simple graph underlying g.
TriangleCount count_triangles(const CellGraph& g);

struct P3Witness {
  std::size_t cell = 0;
  std::size_t e1 = 0;  // edge indices into the cell graph
  std::size_t e2 = 0;
  std::size_t e3 = 0;
};

/// Paths e1 e2 e3 on four distinct vertices whose end edges lie on distinct
/// curves meeting at a point accepted by inside. Each path is reported once.
std::vector<P3Witness> find_self_intersecting_p3(
    const CellGraph& g, const std::vector<Translate>& translates,
    const std::function<bool(const Point&)>& inside);

struct HEdge {
  std::size_t i = 0;  // translate indices, i < j
  std::size_t j = 0;
  std::vector<P3Witness> witnesses;
};

struct HGraph {
  std::vector<std::size_t> vertices;  // sorted translate indices
  std::vector<HEdge> edges;           // sorted by (i, j)
  std::map<std::size_t, std::size_t> multiplicity;  // witnesses per edge -> edges
  std::size_t witness_count = 0;
};

/// Collects self-intersecting P3s of every graph, with the intersection
/// point required to lie in the graph's own cell.
HGraph build_h_graph(const std::vector<std::size_t>& vertices,
                     const std::vector<CellGraph>& graphs,
                     const std::vector<Translate>& translates, const Cutting& cutting,
                     unsigned jobs = 1);

/// { t_i - t_j : ij in E(H) }, both orientations, sorted.
std::vector<Translate> restricted_difference(const HGraph& h,
                                             const std::vector<Translate>& translates);

struct DenseSubset {
  std::vector<std::size_t> vertices;  // translate indices
  std::size_t difference_size = 0;    // |T'' - T''|
  Rational doubling;                  // difference_size / |T''|, 0 if empty
  bool exhaustive = false;
};

inline constexpr std::size_t kExhaustiveSubsetLimit = 18;

/// Heuristic: drops isolated vertices, then peels vertices of degree below
/// (average degree) / K. Throws std::invalid_argument for K <= 0.
DenseSubset extract_dense_subset(const HGraph& h, const std::vector<Translate>& translates,
                                 const Rational& K);

/// Exact minimum doubling over subsets of h.vertices of size at least half;
/// ties go to larger subsets, then to the lexicographically first one.
/// Throws std::invalid_argument above kExhaustiveSubsetLimit vertices.
DenseSubset exhaustive_dense_subset(const HGraph& h, const std::vector<Translate>& translates);

struct PipelineReport {
  std::size_t n = 0;  // |T|
  std::size_t points = 0;
  PipelineConfig config;
  std::size_t r = 0;
  std::size_t q = 0;
  std::size_t cells = 0;
  std::size_t good_curves = 0;
  std::size_t boundary_points = 0;
  std::size_t good_triples = 0;
  std::size_t good_cells = 0;
  std::uint64_t triangles = 0;
  std::uint64_t edge_disjoint_triangles = 0;
  std::size_t self_intersecting_p3 = 0;
  std::size_t h_edges = 0;
  std::map<std::size_t, std::size_t> multiplicity;
  std::size_t restricted_difference = 0;
  std::size_t dense_subset = 0;
  std::size_t dense_difference = 0;
  bool exhaustive_subset = false;
  std::vector<CellStats> good_cell_stats;
  std::vector<std::size_t> dense_vertices;
  std::string skipped;  // why the pipeline stopped early, if it did
};

struct PipelineResult {
  PipelineReport report;
  std::vector<std::size_t> good;
  std::shared_ptr<const Cutting> cutting;  // built on the good curves
  std::vector<GoodTriple> triples;
  std::vector<CellGraph> graphs;           // one per good cell
  HGraph h;
  DenseSubset dense;
};

/// Throws std::invalid_argument for invalid thresholds or a malformed
/// instance. Stops after the good-curve step, with report.skipped set, when
/// there are too few good curves to cut.
PipelineResult run_pipeline(const Instance& inst, const PipelineConfig& config);

}  // namespace transcut
