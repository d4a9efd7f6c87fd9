#pragma once

#include "crn/errors.hpp"
#include "crn/polynomial.hpp"
#include "crn/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace crn {

/// Largest ambient dimension the exact hull code accepts.
inline constexpr std::size_t kMaxHullDimension = 7;
/// Largest number of polytopes for inclusion-exclusion (2^r hulls).
inline constexpr std::size_t kMaxInclusionExclusion = 6;
/// Largest system size for mixed-cell enumeration.
inline constexpr std::size_t kMaxCellEnumeration = 8;

/// Finite set of distinct lattice points of a common length.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// Drops repeated points (keeping first occurrences). Throws ContractError
  /// when empty or when lengths differ.
  explicit PointConfiguration(std::vector<IntVector> points);

  std::size_t dimension() const { return points_.front().size(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<IntVector>& points() const { return points_; }
  const IntVector& operator[](std::size_t i) const { return points_[i]; }

  PointConfiguration translated(const IntVector& by) const;

 private:
  std::vector<IntVector> points_;
};

/// Support of a polynomial (the hull is taken lazily by the consumers).
PointConfiguration newton_polytope(const Polynomial& p);

/// Support of w.x - c for a generic constant c: the origin and e_a for a in supp(w).
PointConfiguration conservation_support(const RationalVector& w);

/// Inequality normal . x <= offset with a primitive integer normal.
struct Facet {
  IntVector normal;
  Integer offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  }
};

struct Polytope {
  std::size_t ambient_dimension = 0;
  std::size_t dimension = 0;       ///< affine dimension
  std::vector<IntVector> vertices;  ///< extreme points, in input order
  /// Facet inequalities. For lower-dimensional polytopes these are the facets
  /// inside the affine hull, written in the coordinates that parameterize it.
  std::vector<Facet> facets;
  Rational volume;                  ///< Euclidean volume in the ambient space
};

/// Beneath-beyond convex hull with exact integer orientation tests. The volume
/// comes from the placing triangulation built along the way.
Polytope convex_hull(const PointConfiguration& points);

Rational convex_hull_volume(const PointConfiguration& points);

/// The pointwise sum set, pruned to the vertices of its hull.
PointConfiguration minkowski_sum(const std::vector<PointConfiguration>& configs);

/// Coefficient of mu_1 ... mu_r in Vol(mu_1 P_1 + ... + mu_r P_r), by
/// inclusion-exclusion over the 2^r - 1 partial Minkowski sums.
Rational mixed_volume_ie(const std::vector<PointConfiguration>& configs);

/// A type-(1,...,1) cell of a fine mixed subdivision: one edge per configuration.
struct MixedCell {
  std::vector<std::array<std::size_t, 2>> choice;  ///< point indices per configuration
  std::vector<std::array<IntVector, 2>> edges;
  Rational volume;  ///< |det| of the edge vectors
};

struct CellEnumeration {
  std::vector<MixedCell> cells;
  unsigned attempts = 0;  ///< liftings drawn, including rejected degenerate ones
  Rational total_volume() const;
};

/// Mixed cells of the regular fine mixed subdivision induced by a random
/// integer lifting in [0, 2^20]. A tuple of edges is a cell when the lifted
/// edge endpoints are the unique minimizers of one common affine functional
/// per configuration. Any tie by another point signals a non-generic lifting
/// and forces a redraw; after max_attempts redraws NonGenericError is thrown.
CellEnumeration enumerate_mixed_cells(const std::vector<PointConfiguration>& configs,
                                      std::uint64_t seed, unsigned max_attempts = 5);

Rational mixed_volume_cells(const std::vector<PointConfiguration>& configs, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Exact feasibility of small linear systems

enum class Relation { Less, LessEqual, Equal };

/// coeffs . x  (relation)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Decides whether a system of strict, weak and equality constraints has a
/// real solution, by Gaussian substitution of the equalities followed by
/// Fourier-Motzkin elimination with strictness tracking.
bool fourier_motzkin_feasible(std::vector<LinearConstraint> constraints, std::size_t variables);

}  // namespace crn
