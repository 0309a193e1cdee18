#pragma once

#include "geometry.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace transcut {

/// Raised when an arrangement is requested for a family with a triple point
/// and perturbation is disabled.
class DegenerateFamily : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vertex {
  Point location;
  std::size_t first = 0;   // curve indices, first < second
  std::size_t second = 0;
};

/// Maximal vertex-free open arc of one curve, with its constant level.
struct Edge {
  std::size_t curve = 0;
  XBound x_lo;
  XBound x_hi;
  std::size_t level = 0;
};

/// E_k: the edges of level k ordered left to right.
struct LevelChain {
  std::size_t k = 0;
  std::vector<Edge> edges;
};

struct GeneralPosition {
  enum class Failure { None, VerticalShift, TriplePoint };

  bool ok = true;
  Failure failure = Failure::None;
  std::vector<std::size_t> witness;  // offending pair or triple of curve indices
  std::optional<Point> where;        // location of a triple point

  explicit operator bool() const { return ok; }
};

/// True iff no two translates are vertical shifts and no point lies on three
/// curves. On failure the first offending pair/triple is reported.
GeneralPosition is_general_position(const CurveFamily& fam);

/// Same check restricted to triple points (vertical shifts are allowed in an
/// arrangement).
GeneralPosition find_triple_point(const CurveFamily& fam);

struct ArrangementOptions {
  /// Resolve triple points by shifting curve i vertically by eps * a_i^2 for
  /// a small rational eps. Vertical-shift pairs stay vertical-shift pairs.
  bool perturb = false;
};

/// Vertical shift applied by the perturbation, or empty when none was needed.
struct Perturbation {
  Rational epsilon;
};

/// Perturbs fam as described in ArrangementOptions. Returns fam unchanged
/// (and no perturbation) when it has no triple point.
std::pair<CurveFamily, std::optional<Perturbation>> perturb_family(const CurveFamily& fam);

class Arrangement {
 public:
  const CurveFamily& family() const { return family_; }
  const std::optional<Perturbation>& perturbation() const { return perturbation_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge indices of level k in left-to-right order.
  const std::vector<std::size_t>& level_edges(std::size_t k) const { return levels_.at(k); }
  std::size_t level_count() const { return levels_.size(); }

  /// First edge index of curve i; edges of a curve are stored contiguously
  /// left to right.
  std::size_t curve_edge_begin(std::size_t i) const { return curve_offsets_.at(i); }
  std::size_t curve_edge_end(std::size_t i) const { return curve_offsets_.at(i + 1); }

 private:
  friend Arrangement build_arrangement(const CurveFamily&, const ArrangementOptions&);

  CurveFamily family_;
  std::optional<Perturbation> perturbation_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> curve_offsets_;
  std::vector<std::vector<std::size_t>> levels_;
};

/// Throws DegenerateFamily when fam has a triple point and options.perturb is
/// false; throws std::invalid_argument for an empty family.
Arrangement build_arrangement(const CurveFamily& fam, const ArrangementOptions& options = {});

/// Throws std::out_of_range unless 0 <= k < n.
LevelChain compute_level(const Arrangement& arr, std::size_t k);

/// Lifted y-coordinate of an edge's curve at x.
Rational edge_lifted_at(const Arrangement& arr, const Edge& e, const Rational& x);

}  // namespace transcut
