#pragma once

// Cuttings of an arrangement of parabola translates.
//
// Levels jq+i of the arrangement are replaced by their q-simplifications P_j
// (arcs of translates through every q-th sample point, plus two rays), the
// plane between consecutive P_j is split by vertical walls dropped from every
// junction of the two bounding chains, and each resulting trapezoid-like
// region is a cell. All geometry is exact.

#include "arrangement.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace transcut {

/// One x-monotone piece of a boundary chain.
struct Piece {
  enum class Kind { LeftRay, Arc, RightRay, Edge };

  Kind kind = Kind::Arc;
  Translate curve;
  Line line;
  XBound x_lo;
  XBound x_hi;
  /// Family curve carrying this piece (rays and level edges), if any.
  std::optional<std::size_t> family_curve;
};

/// A piecewise x-monotone curve defined for every x.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  /// x-coordinates where consecutive pieces meet, increasing.
  const std::vector<Rational>& junctions() const { return junctions_; }

  /// Index of a piece whose closed x-range contains x.
  std::size_t piece_at(const Rational& x) const;
  Rational lifted_at(const Rational& x) const;

 private:
  std::vector<Piece> pieces_;
  std::vector<Rational> junctions_;
};

struct Simplification {
  std::size_t k = 0;  // level index
  std::size_t q = 0;  // 0 for an unsimplified level (trivial cutting)
  std::vector<Point> sample_points;          // p_0 .. p_t
  std::vector<std::size_t> junction_samples;  // sample indices joined by arcs
  Chain chain;

  std::size_t arc_count() const;
};

struct VerticalSegment {
  Rational x;
  std::optional<Rational> y_lo;  // parabola coordinates; empty = unbounded
  std::optional<Rational> y_hi;
};

struct Cell {
  std::size_t strip = 0;  // region between chain strip-1 and chain strip
  std::size_t rank = 0;   // left-to-right position inside the strip
  std::optional<Piece> bottom;
  std::optional<Piece> top;
  std::optional<VerticalSegment> left_wall;
  std::optional<VerticalSegment> right_wall;
  bool atypical = false;

  XBound x_lo() const;
  XBound x_hi() const;
};

enum class QPolicy {
  /// q = floor(n / 3r) - 1 exactly; fails when that is below 2.
  Strict,
  /// Starts from floor(n / 3r) - 1 (at least 2) and increases q until the cell
  /// count is at most 20 r^2. Also replaces an oversized trivial cutting.
  Adaptive,
  /// q = CuttingOptions::fixed_q, no trivial branch and no bound checks.
  Fixed,
};

struct CuttingOptions {
  bool perturb = false;
  QPolicy policy = QPolicy::Adaptive;
  std::size_t fixed_q = 0;  // used by QPolicy::Fixed, at least 2
};

struct Cutting {
  std::size_t n = 0;
  std::size_t r = 0;
  bool trivial = false;
  std::int64_t base_q = 0;  // floor(n/3r) - 1, may be < 2
  std::size_t q = 0;         // 0 in the trivial branch
  std::size_t offset = 0;
  QPolicy policy = QPolicy::Adaptive;
  std::shared_ptr<const Arrangement> arrangement;
  std::vector<Simplification> simplifications;  // P_0 .. P_{J-1}, bottom to top
  std::vector<std::vector<Rational>> strip_walls;
  std::vector<std::size_t> strip_first_cell;
  std::vector<Cell> cells;

  const CurveFamily& family() const { return arrangement->family(); }
  std::size_t strip_count() const { return strip_walls.size(); }
};

/// floor(n / 3r) - 1. Throws std::invalid_argument unless 11 <= r < n/4 and
/// the result is at least 2.
std::size_t choose_q(std::size_t n, std::size_t r);

/// floor(n / 3r) - 1 without range checks (may be negative).
std::int64_t base_q(std::size_t n, std::size_t r);

/// i in [0, q) minimizing the number of edges in the union of levels jq+i;
/// ties go to the smaller i.
std::size_t choose_offset(const Arrangement& arr, std::size_t q);

/// Edge count of the levels i, i+q, i+2q, ...
std::size_t offset_class_size(const Arrangement& arr, std::size_t q, std::size_t i);

/// q-simplification of a level chain of arr. Throws std::invalid_argument for
/// q < 2 or an empty chain.
Simplification q_simplify(const Arrangement& arr, const LevelChain& chain, std::size_t q);

/// Level chain as an unsimplified chain (pieces = level edges).
Simplification level_as_chain(const Arrangement& arr, const LevelChain& chain);

struct SimpPropReport {
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t arcs = 0;
  std::size_t max_portion_crossings = 0;  // clause (i)
  std::size_t max_arc_crossings = 0;      // clause (ii)
  std::int64_t min_level = 0;             // clause (iii), over the whole chain
  std::int64_t max_level = 0;
  std::int64_t band_lo = 0;
  std::int64_t band_hi = 0;
  bool pass_portion = true;
  bool pass_arc = true;
  bool pass_band = true;

  bool pass() const { return pass_portion && pass_arc && pass_band; }
};

SimpPropReport verify_simpprop(const Arrangement& arr, const LevelChain& chain,
                               const Simplification& simp, std::size_t q);

/// Throws std::invalid_argument for r < 11 or r >= n, and DegenerateFamily for
/// triple points without options.perturb. Throws std::runtime_error if no
/// valid cutting exists under the policy (chains crossing).
Cutting build_cutting(const CurveFamily& fam, std::size_t r, const CuttingOptions& options = {});

/// True iff lower lies below upper everywhere; touching is allowed only at
/// the x-coordinates listed in touch_ok (sorted).
bool chain_below(const Chain& lower, const Chain& upper, const std::vector<Rational>& touch_ok);

/// Indices of family curves meeting the open interior of the cell, found by
/// testing each curve between the x-coordinates where it meets the cell
/// boundary.
std::vector<std::size_t> curves_crossing_cell(const Cutting& cutting, const Cell& cell);

/// Strict interior test in lifted coordinates.
bool cell_contains_lifted(const Cell& cell, const Rational& x, const Rational& lifted_y);

struct OnBoundary {};
using Location = std::variant<std::size_t, OnBoundary>;

Location locate(const Cutting& cutting, const Point& p);

struct CuttingReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t q = 0;
  std::int64_t base_q = 0;
  std::size_t offset = 0;
  bool trivial = false;
  std::size_t chains = 0;
  std::size_t cells = 0;
  std::size_t pieces = 0;
  std::size_t max_crossing = 0;
  std::size_t atypical_max_crossing = 0;
  std::vector<std::size_t> crossings;  // per cell
  std::uint64_t bound_20r2 = 0;
  bool pass_cells = false;
  bool pass_nr = false;
  bool pass_3q2 = true;
  bool pass_separation = false;
  bool pass_piece_budget = true;
  std::optional<SimpPropReport> simpprop;  // aggregated over all P_j

  bool pass() const {
    return pass_cells && pass_nr && pass_3q2 && pass_separation &&
           (!simpprop || simpprop->pass());
  }
};

struct VerifyOptions {
  bool simpprop = true;
  unsigned jobs = 1;
};

CuttingReport verify_cutting(const Cutting& cutting, const VerifyOptions& options = {});

const char* to_string(QPolicy policy);
const char* to_string(Piece::Kind kind);

}  // namespace transcut
