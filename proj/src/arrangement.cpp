#include "arrangement.hpp"

#include <algorithm>
#include <unordered_map>

namespace transcut {

namespace {

struct Crossing {
  Rational x;
  std::size_t other;
};

// Crossings of curve i with every non-parallel curve, sorted by x.
std::vector<Crossing> crossings_of(const CurveFamily& fam, std::size_t i) {
  std::vector<Crossing> out;
  out.reserve(fam.size());
  const Line& li = fam.line(i);
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (j == i || fam.line(j).slope == li.slope) continue;
    out.push_back({crossing_x(li, fam.line(j)), j});
  }
  std::sort(out.begin(), out.end(), [](const Crossing& l, const Crossing& r) {
    const int c = cmp(l.x, r.x);
    return c < 0 || (c == 0 && l.other < r.other);
  });
  return out;
}

}  // namespace

GeneralPosition find_triple_point(const CurveFamily& fam) {
  GeneralPosition out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto xs = crossings_of(fam, i);
    for (std::size_t t = 1; t < xs.size(); ++t) {
      if (xs[t].x == xs[t - 1].x) {
        out.ok = false;
        out.failure = GeneralPosition::Failure::TriplePoint;
        std::vector<std::size_t> w{i, xs[t - 1].other, xs[t].other};
        std::sort(w.begin(), w.end());
        out.witness = std::move(w);
        out.where = unlift(xs[t].x, fam.line(i).at(xs[t].x));
        return out;
      }
    }
  }
  return out;
}

GeneralPosition is_general_position(const CurveFamily& fam) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto& bucket = by_hash[hash_value(fam[i].a)];
    for (std::size_t j : bucket) {
      if (fam[j].a == fam[i].a) {
        GeneralPosition out;
        out.ok = false;
        out.failure = GeneralPosition::Failure::VerticalShift;
        out.witness = {j, i};
        return out;
      }
    }
    bucket.push_back(i);
  }
  return find_triple_point(fam);
}

std::pair<CurveFamily, std::optional<Perturbation>> perturb_family(const CurveFamily& fam) {
  if (find_triple_point(fam)) return {fam, std::nullopt};

  Rational scale = 1;
  for (const auto& t : fam.translates()) {
    Rational s = 1 + t.a * t.a + abs(t.b);
    if (s > scale) scale = s;
  }
  // The shift by eps * a^2 separates every concurrent triple (three distinct
  // slopes never satisfy the Vandermonde relation); a fresh eps is only
  // needed if some other triple happens to become concurrent.
  Rational eps = Rational(1, 1 << 20) / (scale * scale);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Translate> shifted;
    shifted.reserve(fam.size());
    for (const auto& t : fam.translates()) {
      shifted.push_back({t.a, Rational(t.b + eps * t.a * t.a)});
    }
    CurveFamily candidate(std::move(shifted));
    if (find_triple_point(candidate)) return {std::move(candidate), Perturbation{eps}};
    eps /= 65536;
  }
  throw DegenerateFamily("perturbation failed to reach general position");
}

Arrangement build_arrangement(const CurveFamily& fam, const ArrangementOptions& options) {
  if (fam.empty()) throw std::invalid_argument("build_arrangement: empty family");

  Arrangement arr;
  if (options.perturb) {
    auto [perturbed, info] = perturb_family(fam);
    arr.family_ = std::move(perturbed);
    arr.perturbation_ = std::move(info);
  } else {
    arr.family_ = fam;
  }
  const CurveFamily& f = arr.family_;
  const std::size_t n = f.size();

  arr.curve_offsets_.reserve(n + 1);
  arr.levels_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    arr.curve_offsets_.push_back(arr.edges_.size());
    const Line& li = f.line(i);
    const auto xs = crossings_of(f, i);
    for (std::size_t t = 1; t < xs.size(); ++t) {
      if (xs[t].x == xs[t - 1].x) {
        throw DegenerateFamily("curves " + std::to_string(i) + ", " +
                               std::to_string(xs[t - 1].other) + ", " +
                               std::to_string(xs[t].other) +
                               " share a point; enable perturbation");
      }
    }

    // Level at x -> -inf: curves that end up below i on the far left.
    std::size_t level = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Line& lj = f.line(j);
      const int s = cmp(lj.slope, li.slope);
      if (s > 0 || (s == 0 && lj.intercept < li.intercept)) ++level;
    }

    XBound lo = XBound::neg_inf();
    for (const auto& c : xs) {
      arr.edges_.push_back({i, lo, XBound(c.x), level});
      // Crossing j from left to right: j goes from below to above iff its
      // slope is larger.
      if (f.line(c.other).slope > li.slope) {
        --level;
      } else {
        ++level;
      }
      lo = XBound(c.x);
      if (c.other > i) {
        arr.vertices_.push_back({unlift(c.x, li.at(c.x)), i, c.other});
      }
    }
    arr.edges_.push_back({i, lo, XBound::pos_inf(), level});
  }
  arr.curve_offsets_.push_back(arr.edges_.size());

  for (std::size_t e = 0; e < arr.edges_.size(); ++e) {
    arr.levels_.at(arr.edges_[e].level).push_back(e);
  }
  for (auto& lvl : arr.levels_) {
    std::sort(lvl.begin(), lvl.end(), [&](std::size_t l, std::size_t r) {
      return arr.edges_[l].x_lo < arr.edges_[r].x_lo;
    });
  }
  return arr;
}

LevelChain compute_level(const Arrangement& arr, std::size_t k) {
  if (k >= arr.level_count()) {
    throw std::out_of_range("level " + std::to_string(k) + " out of range [0, " +
                            std::to_string(arr.level_count()) + ")");
  }
  LevelChain chain{k, {}};
  for (std::size_t e : arr.level_edges(k)) chain.edges.push_back(arr.edges()[e]);
  return chain;
}

Rational edge_lifted_at(const Arrangement& arr, const Edge& e, const Rational& x) {
  return arr.family().line(e.curve).at(x);
}

}  // namespace transcut
