#include "cutting.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace transcut {

namespace {

Point point_on(const Line& line, const Rational& x) { return unlift(x, line.at(x)); }

bool contains_sorted(const std::vector<Rational>& xs, const Rational& x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

std::vector<Rational> merged_unique(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A finite x strictly inside the open interval (lo, hi).
Rational probe_x(const XBound& lo, const XBound& hi) {
  if (lo.finite() && hi.finite()) return (lo.value() + hi.value()) / 2;
  if (lo.finite()) return lo.value() + 1;
  if (hi.finite()) return hi.value() - 1;
  return 0;
}

bool strictly_inside(const XBound& lo, const XBound& hi, const Rational& x) {
  return lo < x && x < hi;
}

bool within_closed(const XBound& lo, const XBound& hi, const Rational& x) {
  return !(x < lo) && !(hi < x);
}

Piece make_piece(Piece::Kind kind, const Line& line, XBound lo, XBound hi,
                 std::optional<std::size_t> family_curve) {
  Piece p;
  p.kind = kind;
  p.line = line;
  p.curve = line.translate();
  p.x_lo = std::move(lo);
  p.x_hi = std::move(hi);
  p.family_curve = family_curve;
  return p;
}

std::optional<VerticalSegment> wall_at(const XBound& x, const std::optional<Piece>& bottom,
                                       const std::optional<Piece>& top) {
  if (!x.finite()) return std::nullopt;
  VerticalSegment w;
  w.x = x.value();
  if (bottom) w.y_lo = point_on(bottom->line, w.x).y;
  if (top) w.y_hi = point_on(top->line, w.x).y;
  return w;
}

struct Assembly {
  std::vector<std::vector<Rational>> strip_walls;
  std::vector<std::size_t> strip_first_cell;
  std::vector<Cell> cells;
  bool separated = true;
};

Assembly assemble(const std::vector<Simplification>& chains, bool allow_touching) {
  Assembly out;
  const std::size_t J = chains.size();
  for (std::size_t j = 0; j + 1 < J; ++j) {
    const Chain& lower = chains[j].chain;
    const Chain& upper = chains[j + 1].chain;
    std::vector<Rational> touch;
    if (allow_touching) {
      std::set_intersection(lower.junctions().begin(), lower.junctions().end(),
                            upper.junctions().begin(), upper.junctions().end(),
                            std::back_inserter(touch));
    }
    if (!chain_below(lower, upper, touch)) {
      out.separated = false;
      break;
    }
  }

  static const std::vector<Rational> kNone;
  for (std::size_t s = 0; s <= J; ++s) {
    const Chain* bottom = s > 0 ? &chains[s - 1].chain : nullptr;
    const Chain* top = s < J ? &chains[s].chain : nullptr;
    std::vector<Rational> walls = merged_unique(bottom ? bottom->junctions() : kNone,
                                                top ? top->junctions() : kNone);
    out.strip_first_cell.push_back(out.cells.size());
    for (std::size_t rank = 0; rank <= walls.size(); ++rank) {
      XBound lo = rank == 0 ? XBound::neg_inf() : XBound(walls[rank - 1]);
      XBound hi = rank == walls.size() ? XBound::pos_inf() : XBound(walls[rank]);
      const Rational probe = probe_x(lo, hi);
      Cell cell;
      cell.strip = s;
      cell.rank = rank;
      if (bottom) cell.bottom = bottom->pieces()[bottom->piece_at(probe)];
      if (top) cell.top = top->pieces()[top->piece_at(probe)];
      cell.left_wall = wall_at(lo, cell.bottom, cell.top);
      cell.right_wall = wall_at(hi, cell.bottom, cell.top);
      cell.atypical = s == 0 || s == J || !cell.left_wall || !cell.right_wall;
      out.cells.push_back(std::move(cell));
    }
    out.strip_walls.push_back(std::move(walls));
  }
  return out;
}

struct Built {
  Cutting cutting;
  bool separated = true;
};

Built build_trivial(std::shared_ptr<const Arrangement> arr, std::size_t r) {
  Built b;
  Cutting& c = b.cutting;
  c.n = arr->family().size();
  c.r = r;
  c.trivial = true;
  c.base_q = base_q(c.n, r);
  c.arrangement = arr;
  for (std::size_t k = 0; k < arr->level_count(); ++k) {
    c.simplifications.push_back(level_as_chain(*arr, compute_level(*arr, k)));
  }
  Assembly a = assemble(c.simplifications, true);
  c.strip_walls = std::move(a.strip_walls);
  c.strip_first_cell = std::move(a.strip_first_cell);
  c.cells = std::move(a.cells);
  b.separated = a.separated;
  return b;
}

Built build_with_q(std::shared_ptr<const Arrangement> arr, std::size_t r, std::size_t q) {
  Built b;
  Cutting& c = b.cutting;
  c.n = arr->family().size();
  c.r = r;
  c.q = q;
  c.base_q = base_q(c.n, r);
  c.arrangement = arr;
  c.offset = choose_offset(*arr, q);
  for (std::size_t k = c.offset; k < arr->level_count(); k += q) {
    c.simplifications.push_back(q_simplify(*arr, compute_level(*arr, k), q));
  }
  Assembly a = assemble(c.simplifications, false);
  c.strip_walls = std::move(a.strip_walls);
  c.strip_first_cell = std::move(a.strip_first_cell);
  c.cells = std::move(a.cells);
  b.separated = a.separated;
  return b;
}

std::uint64_t cell_bound(std::size_t r) { return 20ULL * r * r; }

}  // namespace

Chain::Chain(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("chain without pieces");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (!pieces_[i].x_hi.finite() || !(pieces_[i].x_hi == pieces_[i + 1].x_lo)) {
      throw std::invalid_argument("chain pieces are not consecutive");
    }
    junctions_.push_back(pieces_[i].x_hi.value());
  }
}

std::size_t Chain::piece_at(const Rational& x) const {
  return static_cast<std::size_t>(std::lower_bound(junctions_.begin(), junctions_.end(), x) -
                                  junctions_.begin());
}

Rational Chain::lifted_at(const Rational& x) const { return pieces_[piece_at(x)].line.at(x); }

std::size_t Simplification::arc_count() const {
  return static_cast<std::size_t>(
      std::count_if(chain.pieces().begin(), chain.pieces().end(),
                    [](const Piece& p) { return p.kind == Piece::Kind::Arc; }));
}

XBound Cell::x_lo() const { return left_wall ? XBound(left_wall->x) : XBound::neg_inf(); }
XBound Cell::x_hi() const { return right_wall ? XBound(right_wall->x) : XBound::pos_inf(); }

std::int64_t base_q(std::size_t n, std::size_t r) {
  return static_cast<std::int64_t>(n / (3 * r)) - 1;
}

std::size_t choose_q(std::size_t n, std::size_t r) {
  if (r < 11 || 4 * r >= n) {
    throw std::invalid_argument("choose_q requires 11 <= r < n/4 (n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
  }
  const std::int64_t q = base_q(n, r);
  if (q < 2) {
    throw std::invalid_argument("floor(n/3r) - 1 = " + std::to_string(q) + " is below 2");
  }
  return static_cast<std::size_t>(q);
}

std::size_t offset_class_size(const Arrangement& arr, std::size_t q, std::size_t i) {
  std::size_t total = 0;
  for (std::size_t k = i; k < arr.level_count(); k += q) total += arr.level_edges(k).size();
  return total;
}

std::size_t choose_offset(const Arrangement& arr, std::size_t q) {
  if (q < 1) throw std::invalid_argument("choose_offset: q must be positive");
  std::size_t best = 0;
  std::size_t best_size = offset_class_size(arr, q, 0);
  for (std::size_t i = 1; i < q; ++i) {
    const std::size_t s = offset_class_size(arr, q, i);
    if (s < best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

Simplification level_as_chain(const Arrangement& arr, const LevelChain& chain) {
  if (chain.edges.empty()) throw std::invalid_argument("empty level chain");
  Simplification simp;
  simp.k = chain.k;
  std::vector<Piece> pieces;
  pieces.reserve(chain.edges.size());
  for (const auto& e : chain.edges) {
    pieces.push_back(make_piece(Piece::Kind::Edge, arr.family().line(e.curve), e.x_lo, e.x_hi,
                                e.curve));
  }
  simp.chain = Chain(std::move(pieces));
  return simp;
}

Simplification q_simplify(const Arrangement& arr, const LevelChain& chain, std::size_t q) {
  if (q < 2) throw std::invalid_argument("q_simplify: q must be at least 2");
  if (chain.edges.empty()) throw std::invalid_argument("q_simplify: empty level chain");

  const auto& edges = chain.edges;
  const std::size_t t = edges.size() - 1;
  Simplification simp;
  simp.k = chain.k;
  simp.q = q;
  if (t == 0) {
    const auto& e = edges.front();
    simp.chain = Chain({make_piece(Piece::Kind::Edge, arr.family().line(e.curve), e.x_lo,
                                   e.x_hi, e.curve)});
    return simp;
  }

  simp.sample_points.reserve(t + 1);
  for (std::size_t i = 0; i <= t; ++i) {
    const Edge& e = edges[i];
    Rational x = i == 0 ? Rational(e.x_hi.value() - 1)
               : i == t ? Rational(e.x_lo.value() + 1)
                        : Rational((e.x_lo.value() + e.x_hi.value()) / 2);
    simp.sample_points.push_back(point_on(arr.family().line(e.curve), x));
  }

  for (std::size_t i = 0; i <= (t - 1) / q; ++i) simp.junction_samples.push_back(i * q);
  simp.junction_samples.push_back(t);

  std::vector<Piece> pieces;
  const auto& first = simp.sample_points.front();
  pieces.push_back(make_piece(Piece::Kind::LeftRay, arr.family().line(edges.front().curve),
                              XBound::neg_inf(), XBound(first.x), edges.front().curve));
  for (std::size_t j = 0; j + 1 < simp.junction_samples.size(); ++j) {
    const Point& p = simp.sample_points[simp.junction_samples[j]];
    const Point& w = simp.sample_points[simp.junction_samples[j + 1]];
    if (!(p.x < w.x)) throw std::logic_error("q_simplify: sample points not x-increasing");
    const auto through = curve_through(p, w);
    const Line line = Line::from(*through);
    std::optional<std::size_t> on_family;
    const auto& ue = edges[simp.junction_samples[j]];
    const auto& we = edges[simp.junction_samples[j + 1]];
    if (ue.curve == we.curve) on_family = ue.curve;
    pieces.push_back(make_piece(Piece::Kind::Arc, line, XBound(p.x), XBound(w.x), on_family));
  }
  const auto& last = simp.sample_points.back();
  pieces.push_back(make_piece(Piece::Kind::RightRay, arr.family().line(edges.back().curve),
                              XBound(last.x), XBound::pos_inf(), edges.back().curve));
  simp.chain = Chain(std::move(pieces));
  return simp;
}

bool chain_below(const Chain& lower, const Chain& upper, const std::vector<Rational>& touch_ok) {
  const std::vector<Rational> xs = merged_unique(lower.junctions(), upper.junctions());
  const Line& lf = lower.pieces().front().line;
  const Line& uf = upper.pieces().front().line;
  if (xs.empty()) return lf.slope == uf.slope && uf.intercept > lf.intercept;

  std::vector<int> gap_sign;
  gap_sign.reserve(xs.size());
  for (const auto& x : xs) {
    const int s = cmp(upper.lifted_at(x), lower.lifted_at(x));
    if (s < 0) return false;
    if (s == 0 && !contains_sorted(touch_ok, x)) return false;
    gap_sign.push_back(s);
  }
  // Between consecutive breakpoints both chains are linear; zero at both ends
  // means the chains overlap on that interval.
  for (std::size_t i = 1; i < gap_sign.size(); ++i) {
    if (gap_sign[i] == 0 && gap_sign[i - 1] == 0) return false;
  }
  const int left_slope = cmp(uf.slope, lf.slope);
  if (left_slope > 0 || (left_slope == 0 && gap_sign.front() == 0)) return false;
  const int right_slope = cmp(upper.pieces().back().line.slope, lower.pieces().back().line.slope);
  if (right_slope < 0 || (right_slope == 0 && gap_sign.back() == 0)) return false;
  return true;
}

Cutting build_cutting(const CurveFamily& fam, std::size_t r, const CuttingOptions& options) {
  const std::size_t n = fam.size();
  if (r < 11) throw std::invalid_argument("build_cutting: r must be at least 11");
  if (r >= n) {
    throw std::invalid_argument("build_cutting: r=" + std::to_string(r) +
                                " must be smaller than n=" + std::to_string(n));
  }
  auto arr = std::make_shared<const Arrangement>(build_arrangement(fam, {options.perturb}));
  const std::uint64_t bound = cell_bound(r);

  if (options.policy == QPolicy::Fixed) {
    if (options.fixed_q < 2) throw std::invalid_argument("build_cutting: fixed q must be >= 2");
    Built b = build_with_q(arr, r, options.fixed_q);
    b.cutting.policy = options.policy;
    return std::move(b.cutting);
  }

  if (4 * r >= n) {
    Built t = build_trivial(arr, r);
    t.cutting.policy = options.policy;
    if (options.policy == QPolicy::Strict || (t.separated && t.cutting.cells.size() <= bound)) {
      return std::move(t.cutting);
    }
  }

  std::size_t q = 0;
  if (options.policy == QPolicy::Strict) {
    q = choose_q(n, r);
    Built b = build_with_q(arr, r, q);
    b.cutting.policy = options.policy;
    return std::move(b.cutting);
  }

  q = static_cast<std::size_t>(std::max<std::int64_t>(2, base_q(n, r)));
  std::optional<Cutting> last;
  for (; q < std::max<std::size_t>(n, 3); ++q) {
    Built b = build_with_q(arr, r, q);
    b.cutting.policy = options.policy;
    if (b.separated && b.cutting.cells.size() <= bound) return std::move(b.cutting);
    last = std::move(b.cutting);
  }
  return std::move(*last);
}

bool cell_contains_lifted(const Cell& cell, const Rational& x, const Rational& lifted_y) {
  if (!strictly_inside(cell.x_lo(), cell.x_hi(), x)) return false;
  if (cell.bottom && !(cell.bottom->line.at(x) < lifted_y)) return false;
  if (cell.top && !(lifted_y < cell.top->line.at(x))) return false;
  return true;
}

std::vector<std::size_t> curves_crossing_cell(const Cutting& cutting, const Cell& cell) {
  const CurveFamily& fam = cutting.family();
  const XBound lo = cell.x_lo();
  const XBound hi = cell.x_hi();
  std::vector<std::size_t> out;
  std::vector<Rational> events;

  // Floating-point reject for bounded cells: every difference involved is
  // linear in x, so a curve clearly below the bottom (or above the top) at
  // both walls misses the cell. Anything close goes to the exact test.
  const bool walled = lo.finite() && hi.finite();
  double xl = 0, xr = 0, bl = 0, br = 0, tl = 0, tr = 0;
  if (walled) {
    xl = to_double(lo.value());
    xr = to_double(hi.value());
    if (cell.bottom) {
      bl = to_double(cell.bottom->line.slope) * xl + to_double(cell.bottom->line.intercept);
      br = to_double(cell.bottom->line.slope) * xr + to_double(cell.bottom->line.intercept);
    }
    if (cell.top) {
      tl = to_double(cell.top->line.slope) * xl + to_double(cell.top->line.intercept);
      tr = to_double(cell.top->line.slope) * xr + to_double(cell.top->line.intercept);
    }
  }
  auto clearly_below = [](double v, double w) {
    return v < w - 1e-9 * (std::fabs(v) + std::fabs(w) + 1.0);
  };

  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Line& line = fam.line(i);
    if (walled) {
      const double s = to_double(line.slope);
      const double c = to_double(line.intercept);
      const double ll = s * xl + c;
      const double lr = s * xr + c;
      if (cell.bottom && clearly_below(ll, bl) && clearly_below(lr, br)) continue;
      if (cell.top && clearly_below(tl, ll) && clearly_below(tr, lr)) continue;
    }
    events.clear();
    if (lo.finite()) events.push_back(lo.value());
    if (hi.finite()) events.push_back(hi.value());
    for (const auto* boundary : {&cell.bottom, &cell.top}) {
      if (!*boundary) continue;
      const Line& b = (*boundary)->line;
      if (b.slope == line.slope) continue;
      Rational x = crossing_x(line, b);
      if (strictly_inside(lo, hi, x)) events.push_back(std::move(x));
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    auto inside = [&](const Rational& x) {
      return cell_contains_lifted(cell, x, line.at(x));
    };
    bool hit = false;
    if (events.empty()) {
      hit = inside(Rational(0));
    } else {
      if (!lo.finite()) hit = inside(events.front() - 1);
      for (std::size_t e = 1; !hit && e < events.size(); ++e) {
        hit = inside((events[e - 1] + events[e]) / 2);
      }
      if (!hit && !hi.finite()) hit = inside(events.back() + 1);
    }
    if (hit) out.push_back(i);
  }
  return out;
}

Location locate(const Cutting& cutting, const Point& p) {
  const Rational y = lifted_y(p);
  const auto& chains = cutting.simplifications;
  std::size_t lo = 0;
  std::size_t hi = chains.size();
  // First chain whose height at p.x is >= y; chains are vertically ordered.
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (chains[mid].chain.lifted_at(p.x) < y) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < chains.size() && chains[lo].chain.lifted_at(p.x) == y) return OnBoundary{};
  const auto& walls = cutting.strip_walls[lo];
  const auto it = std::lower_bound(walls.begin(), walls.end(), p.x);
  if (it != walls.end() && *it == p.x) return OnBoundary{};
  return cutting.strip_first_cell[lo] + static_cast<std::size_t>(it - walls.begin());
}

SimpPropReport verify_simpprop(const Arrangement& arr, const LevelChain& chain,
                               const Simplification& simp, std::size_t q) {
  const CurveFamily& fam = arr.family();
  const std::int64_t k = static_cast<std::int64_t>(chain.k);
  const std::int64_t half = static_cast<std::int64_t>((q + 1) / 2);
  SimpPropReport rep;
  rep.k = chain.k;
  rep.q = q;
  rep.arcs = simp.arc_count();
  rep.band_lo = k - half;
  rep.band_hi = k + half;
  rep.min_level = k;
  rep.max_level = k;

  std::vector<std::pair<double, double>> approx;
  approx.reserve(fam.size());
  for (const auto& l : fam.lines()) approx.emplace_back(to_double(l.slope), to_double(l.intercept));
  auto level_at = [&](const Rational& x, const Rational& y) {
    const double dx = to_double(x);
    const double dy = to_double(y);
    std::int64_t level = 0;
    for (std::size_t c = 0; c < approx.size(); ++c) {
      const double v = approx[c].first * dx + approx[c].second;
      const double tol = 1e-9 * (std::fabs(approx[c].first * dx) + std::fabs(approx[c].second) +
                                 std::fabs(dy) + 1.0);
      if (v < dy - tol) {
        ++level;
      } else if (v <= dy + tol && fam.line(c).at(x) < y) {
        ++level;
      }
    }
    return level;
  };
  auto note_level = [&](std::int64_t level) {
    rep.min_level = std::min(rep.min_level, level);
    rep.max_level = std::max(rep.max_level, level);
  };

  const auto& edges = chain.edges;
  const auto& pieces = simp.chain.pieces();
  if (edges.size() > 1) {
    const Line& left = pieces.front().line;
    const Rational xl = simp.sample_points.front().x - 1;
    note_level(level_at(xl, left.at(xl)));
    const Line& right = pieces.back().line;
    const Rational xr = simp.sample_points.back().x + 1;
    note_level(level_at(xr, right.at(xr)));
  }

  std::vector<Rational> xs, bx, by;
  std::vector<double> dbx, dby;
  for (std::size_t j = 0; j + 1 < simp.junction_samples.size(); ++j) {
    const std::size_t u = simp.junction_samples[j];
    const std::size_t v = simp.junction_samples[j + 1];
    const Rational& xu = simp.sample_points[u].x;
    const Rational& xv = simp.sample_points[v].x;
    const XBound bu(xu);
    const XBound bv(xv);
    const Line& arc = pieces[j + 1].line;

    // (i) curves meeting the level portion between p_u and p_v. The portion is
    // a continuous polyline, so a curve meets it iff its signed gap to the
    // portion is <= 0 at one breakpoint and >= 0 at another.
    bx.clear();
    by.clear();
    bx.push_back(xu);
    by.push_back(fam.line(edges[u].curve).at(xu));
    for (std::size_t e = u; e < v; ++e) {
      bx.push_back(edges[e].x_hi.value());
      by.push_back(fam.line(edges[e].curve).at(bx.back()));
    }
    bx.push_back(xv);
    by.push_back(fam.line(edges[v].curve).at(xv));
    dbx.assign(bx.size(), 0.0);
    dby.assign(bx.size(), 0.0);
    for (std::size_t b = 0; b < bx.size(); ++b) {
      dbx[b] = to_double(bx[b]);
      dby[b] = to_double(by[b]);
    }
    std::size_t portion = 0;
    for (std::size_t c = 0; c < fam.size(); ++c) {
      bool below = false, above = false, unsure = false;
      for (std::size_t b = 0; b < bx.size(); ++b) {
        const double val = approx[c].first * dbx[b] + approx[c].second;
        const double tol = 1e-9 * (std::fabs(approx[c].first * dbx[b]) +
                                   std::fabs(approx[c].second) + std::fabs(dby[b]) + 1.0);
        if (val < dby[b] - tol) {
          below = true;
        } else if (val > dby[b] + tol) {
          above = true;
        } else {
          unsure = true;
        }
      }
      if (unsure && !(below && above)) {
        below = above = false;
        const Line& lc = fam.line(c);
        for (std::size_t b = 0; b < bx.size(); ++b) {
          const int sg = cmp(lc.at(bx[b]), by[b]);
          if (sg <= 0) below = true;
          if (sg >= 0) above = true;
        }
      }
      if (below && above) ++portion;
    }
    rep.max_portion_crossings = std::max(rep.max_portion_crossings, portion);

    // (ii) curves meeting the closed arc, and (iii) levels along it.
    std::size_t arc_hits = 0;
    xs.clear();
    xs.push_back(xu);
    xs.push_back(xv);
    for (const auto& lc : fam.lines()) {
      if (lc == arc) {
        ++arc_hits;
        continue;
      }
      if (lc.slope == arc.slope) continue;
      Rational x = crossing_x(lc, arc);
      if (within_closed(bu, bv, x)) {
        ++arc_hits;
        xs.push_back(std::move(x));
      }
    }
    rep.max_arc_crossings = std::max(rep.max_arc_crossings, arc_hits);

    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      note_level(level_at(xs[i], arc.at(xs[i])));
      if (i + 1 < xs.size()) {
        const Rational mid = (xs[i] + xs[i + 1]) / 2;
        note_level(level_at(mid, arc.at(mid)));
      }
    }
  }

  rep.pass_portion = rep.max_portion_crossings <= q + 1;
  rep.pass_arc = rep.max_arc_crossings <= q + 1;
  rep.pass_band = rep.min_level >= rep.band_lo && rep.max_level <= rep.band_hi;
  return rep;
}

CuttingReport verify_cutting(const Cutting& cutting, const VerifyOptions& options) {
  CuttingReport rep;
  rep.n = cutting.n;
  rep.r = cutting.r;
  rep.q = cutting.q;
  rep.base_q = cutting.base_q;
  rep.offset = cutting.offset;
  rep.trivial = cutting.trivial;
  rep.chains = cutting.simplifications.size();
  rep.cells = cutting.cells.size();
  rep.bound_20r2 = cell_bound(cutting.r);
  for (const auto& s : cutting.simplifications) rep.pieces += s.chain.pieces().size();

  rep.crossings.assign(cutting.cells.size(), 0);
  parallel_for(cutting.cells.size(), options.jobs, [&](std::size_t i) {
    rep.crossings[i] = curves_crossing_cell(cutting, cutting.cells[i]).size();
  });
  for (std::size_t i = 0; i < cutting.cells.size(); ++i) {
    rep.max_crossing = std::max(rep.max_crossing, rep.crossings[i]);
    if (cutting.cells[i].atypical) {
      rep.atypical_max_crossing = std::max(rep.atypical_max_crossing, rep.crossings[i]);
    }
  }

  rep.pass_cells = rep.cells <= rep.bound_20r2;
  rep.pass_nr = rep.max_crossing * cutting.r <= cutting.n;
  rep.pass_3q2 = cutting.trivial || rep.max_crossing <= 3 * cutting.q + 2;

  rep.pass_separation = true;
  for (std::size_t j = 0; j + 1 < cutting.simplifications.size(); ++j) {
    const Chain& lower = cutting.simplifications[j].chain;
    const Chain& upper = cutting.simplifications[j + 1].chain;
    std::vector<Rational> touch;
    if (cutting.trivial) {
      std::set_intersection(lower.junctions().begin(), lower.junctions().end(),
                            upper.junctions().begin(), upper.junctions().end(),
                            std::back_inserter(touch));
    }
    if (!chain_below(lower, upper, touch)) {
      rep.pass_separation = false;
      break;
    }
  }

  if (!cutting.trivial) {
    const Integer n(static_cast<unsigned long>(cutting.n));
    const Integer q(static_cast<unsigned long>(cutting.q));
    rep.pass_piece_budget = Integer(static_cast<unsigned long>(rep.pieces)) * q * q <=
                            n * n + 3 * n * q;
  }

  if (options.simpprop && !cutting.trivial) {
    const Arrangement& arr = *cutting.arrangement;
    std::vector<SimpPropReport> parts(cutting.simplifications.size());
    parallel_for(parts.size(), options.jobs, [&](std::size_t j) {
      const auto& simp = cutting.simplifications[j];
      parts[j] = verify_simpprop(arr, compute_level(arr, simp.k), simp, cutting.q);
    });
    SimpPropReport agg;
    agg.q = cutting.q;
    agg.min_level = 0;
    agg.max_level = 0;
    std::int64_t worst_below = 0;
    std::int64_t worst_above = 0;
    for (const auto& p : parts) {
      agg.arcs += p.arcs;
      agg.max_portion_crossings = std::max(agg.max_portion_crossings, p.max_portion_crossings);
      agg.max_arc_crossings = std::max(agg.max_arc_crossings, p.max_arc_crossings);
      worst_below = std::max(worst_below, static_cast<std::int64_t>(p.k) - p.min_level);
      worst_above = std::max(worst_above, p.max_level - static_cast<std::int64_t>(p.k));
      agg.pass_portion = agg.pass_portion && p.pass_portion;
      agg.pass_arc = agg.pass_arc && p.pass_arc;
      agg.pass_band = agg.pass_band && p.pass_band;
    }
    // Aggregated band is reported relative to k: [-below, +above].
    agg.min_level = -worst_below;
    agg.max_level = worst_above;
    agg.band_lo = -static_cast<std::int64_t>((cutting.q + 1) / 2);
    agg.band_hi = static_cast<std::int64_t>((cutting.q + 1) / 2);
    rep.simpprop = agg;
  }
  return rep;
}

const char* to_string(QPolicy policy) {
  switch (policy) {
    case QPolicy::Strict: return "strict";
    case QPolicy::Adaptive: return "adaptive";
    case QPolicy::Fixed: return "fixed";
  }
  return "adaptive";
}

const char* to_string(Piece::Kind kind) {
  switch (kind) {
    case Piece::Kind::LeftRay: return "left_ray";
    case Piece::Kind::Arc: return "arc";
    case Piece::Kind::RightRay: return "right_ray";
    case Piece::Kind::Edge: return "edge";
  }
  return "?";
}

}  // namespace transcut
