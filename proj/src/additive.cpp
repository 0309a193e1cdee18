#include "additive.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace transcut {

namespace {

bool is_zero(const Translate& v) { return sgn(v.a) == 0 && sgn(v.b) == 0; }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational cross(const Translate& u, const Translate& v) { return u.a * v.b - u.b * v.a; }

// x with w = x g, if x is an integer.
std::optional<Integer> solve1(const Translate& w, const Translate& g) {
  Rational x;
  if (sgn(g.a) != 0) {
    x = w.a / g.a;
    if (w.b != x * g.b) return std::nullopt;
  } else {
    if (sgn(w.a) != 0) return std::nullopt;
    x = w.b / g.b;
  }
  if (!is_integer(x)) return std::nullopt;
  return x.get_num();
}

// (x1, x2) with w = x1 g1 + x2 g2 for independent g1, g2, if integral.
std::optional<std::pair<Integer, Integer>> solve2(const Translate& w, const Translate& g1,
                                                  const Translate& g2, const Rational& det) {
  Rational x1 = cross(w, g2) / det;
  if (!is_integer(x1)) return std::nullopt;
  Rational x2 = cross(g1, w) / det;
  if (!is_integer(x2)) return std::nullopt;
  return std::pair{x1.get_num(), x2.get_num()};
}

bool in_range(const Integer& x, std::uint64_t length) {
  return x >= 0 && x < Integer(std::to_string(length));
}

struct Candidate {
  GapFit fit;
  Integer size;
};

bool better(const Candidate& lhs, const Candidate& rhs) {
  if (lhs.size != rhs.size) return lhs.size < rhs.size;
  if (lhs.fit.gap.dimension() != rhs.fit.gap.dimension()) {
    return lhs.fit.gap.dimension() < rhs.fit.gap.dimension();
  }
  return lhs.fit.coverage > rhs.fit.coverage;
}

std::uint64_t to_u64(const Integer& z) { return std::stoull(z.get_str()); }

}  // namespace

Translate canonical_direction(const Translate& v) {
  if (sgn(v.a) > 0 || (sgn(v.a) == 0 && sgn(v.b) > 0)) return v;
  return {Rational(-v.a), Rational(-v.b)};
}

DifferenceSet difference_set(const std::vector<Translate>& A) {
  if (A.empty()) throw std::invalid_argument("difference_set: empty set");
  std::unordered_set<Translate, TranslateHash> unique(A.begin(), A.end());
  if (unique.size() != A.size()) throw std::invalid_argument("difference_set: duplicate element");

  std::unordered_set<Translate, TranslateHash> diffs;
  diffs.reserve(A.size() * A.size());
  for (const auto& a : A) {
    for (const auto& b : A) diffs.insert(a - b);
  }
  DifferenceSet out;
  out.elements.assign(diffs.begin(), diffs.end());
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Translate& l, const Translate& r) { return lex_less(l, r); });
  out.doubling = Rational(static_cast<unsigned long>(out.elements.size()),
                          static_cast<unsigned long>(A.size()));
  out.doubling.canonicalize();
  return out;
}

Integer Gap::size() const {
  Integer s = 1;
  for (auto l : lengths) s *= Integer(std::to_string(l));
  return s;
}

bool gap_contains(const Gap& g, const Translate& v) {
  if (g.dimension() > 2) throw std::invalid_argument("gap_contains: dimension above 2");
  if (g.lengths.size() != g.generators.size()) {
    throw std::invalid_argument("gap_contains: lengths do not match generators");
  }
  for (auto l : g.lengths) {
    if (l == 0) return false;
  }
  const Translate w = v - g.base;
  if (g.dimension() == 0) return is_zero(w);

  const Translate& g1 = g.generators[0];
  if (g.dimension() == 1) {
    if (is_zero(g1)) return is_zero(w);
    const auto x = solve1(w, g1);
    return x && in_range(*x, g.lengths[0]);
  }

  const Translate& g2 = g.generators[1];
  const Rational det = cross(g1, g2);
  if (sgn(det) != 0) {
    const auto x = solve2(w, g1, g2, det);
    return x && in_range(x->first, g.lengths[0]) && in_range(x->second, g.lengths[1]);
  }
  // Dependent generators: walk the second coordinate.
  for (std::uint64_t x2 = 0; x2 < g.lengths[1]; ++x2) {
    const Translate rest = w - Integer(std::to_string(x2)) * g2;
    if (is_zero(g1)) {
      if (is_zero(rest)) return true;
      continue;
    }
    const auto x1 = solve1(rest, g1);
    if (x1 && in_range(*x1, g.lengths[0])) return true;
  }
  return false;
}

std::optional<GapFit> gap_fit(const std::vector<Translate>& A, const GapFitOptions& options) {
  if (A.empty()) throw std::invalid_argument("gap_fit: empty set");
  if (options.d_max > 2) throw std::invalid_argument("gap_fit: d_max above 2 is unsupported");
  if (options.exact && A.size() > kExactGapFitLimit) {
    throw std::invalid_argument("gap_fit: exact mode needs |A| <= 12");
  }
  if (options.min_coverage <= 0 || options.min_coverage > 1) {
    throw std::invalid_argument("gap_fit: coverage fraction must lie in (0, 1]");
  }

  const Integer cap(std::to_string(options.size_cap));
  const bool capped = options.size_cap > 0;
  const Rational need = options.min_coverage * static_cast<unsigned long>(A.size());

  std::optional<Candidate> best;
  auto offer = [&](Candidate c) {
    if (capped && c.size > cap) return;
    if (Rational(static_cast<unsigned long>(c.fit.coverage)) < need) return;
    if (!best || better(c, *best)) best = std::move(c);
  };

  if (A.size() == 1 || options.d_max == 0) {
    Candidate c;
    c.fit.gap.base = A.front();
    c.fit.coverage = 1;
    c.size = 1;
    offer(std::move(c));
    if (options.d_max == 0) {
      if (!best) return std::nullopt;
      return best->fit;
    }
  }

  // Generator candidates: canonical differences, by popularity.
  std::unordered_map<Translate, std::size_t, TranslateHash> popularity;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      ++popularity[canonical_direction(A[i] - A[j])];
    }
  }
  std::vector<std::pair<Translate, std::size_t>> ranked(popularity.begin(), popularity.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
    if (l.second != r.second) return l.second > r.second;
    return lex_less(l.first, r.first);
  });
  if (!options.exact && ranked.size() > kPopularGenerators) ranked.resize(kPopularGenerators);

  std::vector<std::size_t> anchors{0};
  if (options.min_coverage < 1) {
    for (std::size_t i = 1; i < std::min<std::size_t>(A.size(), 4); ++i) anchors.push_back(i);
  }

  for (std::size_t anchor : anchors) {
    const Translate& origin = A[anchor];
    for (const auto& [g, count] : ranked) {
      (void)count;
      std::optional<Integer> lo, hi;
      std::size_t covered = 0;
      for (const auto& a : A) {
        const auto x = solve1(a - origin, g);
        if (!x) continue;
        ++covered;
        if (!lo || *x < *lo) lo = *x;
        if (!hi || *x > *hi) hi = *x;
      }
      Candidate c;
      c.size = *hi - *lo + 1;
      if (capped && c.size > cap) continue;
      c.fit.gap.base = origin + *lo * g;
      c.fit.gap.generators = {g};
      c.fit.gap.lengths = {to_u64(c.size)};
      c.fit.coverage = covered;
      offer(std::move(c));
    }
    if (options.d_max < 2) continue;

    for (std::size_t i = 0; i < ranked.size(); ++i) {
      for (std::size_t j = i + 1; j < ranked.size(); ++j) {
        const Translate& g1 = ranked[i].first;
        const Translate& g2 = ranked[j].first;
        const Rational det = cross(g1, g2);
        if (sgn(det) == 0) continue;
        std::optional<Integer> lo1, hi1, lo2, hi2;
        std::size_t covered = 0;
        for (const auto& a : A) {
          const auto x = solve2(a - origin, g1, g2, det);
          if (!x) continue;
          ++covered;
          if (!lo1 || x->first < *lo1) lo1 = x->first;
          if (!hi1 || x->first > *hi1) hi1 = x->first;
          if (!lo2 || x->second < *lo2) lo2 = x->second;
          if (!hi2 || x->second > *hi2) hi2 = x->second;
        }
        Candidate c;
        const Integer l1 = *hi1 - *lo1 + 1;
        const Integer l2 = *hi2 - *lo2 + 1;
        c.size = l1 * l2;
        if (capped && c.size > cap) continue;
        c.fit.gap.base = origin + *lo1 * g1 + *lo2 * g2;
        c.fit.gap.generators = {g1, g2};
        c.fit.gap.lengths = {to_u64(l1), to_u64(l2)};
        c.fit.coverage = covered;
        offer(std::move(c));
      }
    }
  }
  if (!best) return std::nullopt;
  return best->fit;
}

}  // namespace transcut
