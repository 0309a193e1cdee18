#pragma once

// Difference sets and generalized arithmetic progressions over Q^2.

#include "geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace transcut {

struct DifferenceSet {
  std::vector<Translate> elements;  // lexicographically sorted, includes 0
  Rational doubling;                // |A - A| / |A|
};

/// Throws std::invalid_argument for an empty or duplicated A.
DifferenceSet difference_set(const std::vector<Translate>& A);

/// { base + sum x_i g_i : 0 <= x_i < L_i }.
struct Gap {
  Translate base;
  std::vector<Translate> generators;
  std::vector<std::uint64_t> lengths;

  std::size_t dimension() const { return generators.size(); }
  Integer size() const;
};

/// Membership by exact integer solve. Throws std::invalid_argument for d > 2.
bool gap_contains(const Gap& g, const Translate& v);

struct GapFitOptions {
  std::size_t d_max = 2;
  std::uint64_t size_cap = 0;
  /// Try every canonical difference as a generator (requires |A| <= 12)
  /// instead of the 20 most popular ones.
  bool exact = false;
  /// Fraction of A that must be covered; 1 means full containment.
  Rational min_coverage = 1;
};

struct GapFit {
  Gap gap;
  std::size_t coverage = 0;
};

inline constexpr std::size_t kExactGapFitLimit = 12;
inline constexpr std::size_t kPopularGenerators = 20;

/// Smallest accepted GAP (ties: lower dimension, then more coverage), or
/// empty when none fits under the caps. Throws std::invalid_argument for an
/// empty A, d_max > 2, or exact mode with |A| > 12.
std::optional<GapFit> gap_fit(const std::vector<Translate>& A, const GapFitOptions& options);

/// Representative of {v, -v} with a > 0, or a == 0 and b > 0.
Translate canonical_direction(const Translate& v);

}  // namespace transcut
