#include "crn/polyhedral.hpp"

#include "crn/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace crn {

PointConfiguration::PointConfiguration(std::vector<IntVector> points) {
  if (points.empty()) throw ContractError("empty point configuration");
  const std::size_t length = points.front().size();
  std::set<IntVector> seen;
  for (auto& p : points) {
    if (p.size() != length) throw ContractError("points of different lengths");
    if (seen.insert(p).second) points_.push_back(std::move(p));
  }
}

PointConfiguration PointConfiguration::translated(const IntVector& by) const {
  std::vector<IntVector> out;
  for (const auto& p : points_) out.push_back(p + by);
  return PointConfiguration(std::move(out));
}

PointConfiguration newton_polytope(const Polynomial& p) {
  if (p.is_zero()) throw ContractError("Newton polytope of the zero polynomial");
  return PointConfiguration(p.support());
}

PointConfiguration conservation_support(const RationalVector& w) {
  if (is_zero(w)) throw ContractError("zero conservation law");
  std::vector<IntVector> pts{IntVector(w.size(), 0)};
  for (std::size_t a = 0; a < w.size(); ++a)
    if (w[a] != 0) pts.push_back(unit_vector(w.size(), a));
  return PointConfiguration(std::move(pts));
}

// ---------------------------------------------------------------------------
// Convex hulls

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g <= 1) return v;
  IntVector out(v);
  for (auto& z : out) z /= g;
  return out;
}

struct HullFacet {
  std::vector<std::size_t> verts;  // sorted point indices
  IntVector normal;                // outward, not reduced: |normal . (p - v0)| = d! vol
  Integer offset;
};

struct FullHull {
  bool full_dimensional = false;
  std::vector<std::size_t> extreme;  // sorted indices of extreme points
  std::vector<Facet> facets;         // distinct primitive facet inequalities
  Integer scaled_volume;             // d! * volume
};

class BeneathBeyond {
 public:
  BeneathBeyond(const std::vector<IntVector>& pts, std::size_t d) : pts_(pts), d_(d) {}

  FullHull run() {
    FullHull out;
    std::vector<std::size_t> simplex = initial_simplex();
    if (simplex.size() != d_ + 1) return out;
    out.full_dimensional = true;

    center_ = IntVector(d_, 0);
    for (auto i : simplex) center_ = center_ + pts_[i];

    for (std::size_t skip = 0; skip <= d_; ++skip) {
      std::vector<std::size_t> verts;
      for (std::size_t t = 0; t <= d_; ++t)
        if (t != skip) verts.push_back(simplex[t]);
      facets_.push_back(make_facet(std::move(verts)));
    }
    {
      const auto& f = facets_.front();
      const std::size_t opposite = simplex[0];
      volume_ = abs(dot(f.normal, pts_[opposite]) - f.offset);
    }

    std::vector<bool> placed(pts_.size(), false);
    for (auto i : simplex) placed[i] = true;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (!placed[i]) insert(i);

    out.scaled_volume = volume_;
    collect(out);
    return out;
  }

 private:
  std::vector<std::size_t> initial_simplex() const {
    std::vector<std::size_t> chosen{0};
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < pts_.size() && chosen.size() <= d_; ++i) {
      rows.push_back(to_rational(pts_[i] - pts_[0]));
      if (rank(RationalMatrix::from_rows(rows, d_)) == rows.size()) {
        chosen.push_back(i);
      } else {
        rows.pop_back();
      }
    }
    return chosen;
  }

  HullFacet make_facet(std::vector<std::size_t> verts) const {
    std::sort(verts.begin(), verts.end());
    const IntVector& base = pts_[verts[0]];
    IntegerMatrix rows(d_ - 1, d_);
    for (std::size_t i = 1; i < verts.size(); ++i) {
      const IntVector diff = pts_[verts[i]] - base;
      for (std::size_t j = 0; j < d_; ++j) rows(i - 1, j) = diff[j];
    }
    IntVector normal(d_);
    for (std::size_t j = 0; j < d_; ++j) {
      IntegerMatrix minor(d_ - 1, d_ - 1);
      for (std::size_t i = 0; i + 1 < d_; ++i)
        for (std::size_t c = 0, cc = 0; c < d_; ++c)
          if (c != j) minor(i, cc++) = rows(i, c);
      normal[j] = (j % 2 == 0 ? 1 : -1) * determinant(minor);
    }
    Integer offset = dot(normal, base);
    // The simplex centroid (scaled by d+1) must lie strictly inside.
    if (dot(normal, center_) - static_cast<unsigned long>(d_ + 1) * offset > 0) {
      for (auto& z : normal) z = -z;
      offset = -offset;
    }
    return {std::move(verts), std::move(normal), std::move(offset)};
  }

  void insert(std::size_t q) {
    const IntVector& p = pts_[q];
    std::map<std::vector<std::size_t>, int> ridges;
    std::vector<bool> visible(facets_.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      Integer h = dot(facets_[f].normal, p) - facets_[f].offset;
      if (h <= 0) continue;
      visible[f] = true;
      any = true;
      volume_ += h;
      const auto& v = facets_[f].verts;
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t t = 0; t < v.size(); ++t)
          if (t != skip) ridge.push_back(v[t]);
        ++ridges[ridge];
      }
    }
    if (!any) return;

    std::vector<HullFacet> next;
    next.reserve(facets_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (!visible[f]) next.push_back(std::move(facets_[f]));
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> verts = ridge;
      verts.push_back(q);
      next.push_back(make_facet(std::move(verts)));
    }
    facets_ = std::move(next);
  }

  void collect(FullHull& out) const {
    std::set<Facet> planes;
    std::set<std::size_t> candidates;
    for (const auto& f : facets_) {
      Integer g = 0;
      for (const auto& z : f.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
      Facet pf{primitive(f.normal), f.offset / g};
      planes.insert(std::move(pf));
      candidates.insert(f.verts.begin(), f.verts.end());
    }
    out.facets.assign(planes.begin(), planes.end());

    // A boundary point is a vertex iff the facet normals through it span R^d.
    for (auto i : candidates) {
      std::vector<RationalVector> normals;
      for (const auto& f : out.facets)
        if (dot(f.normal, pts_[i]) == f.offset) normals.push_back(to_rational(f.normal));
      if (normals.size() >= d_ && rank(RationalMatrix::from_rows(normals, d_)) == d_)
        out.extreme.push_back(i);
    }
  }

  const std::vector<IntVector>& pts_;
  std::size_t d_;
  IntVector center_;
  std::vector<HullFacet> facets_;
  Integer volume_;
};

struct HullInfo {
  std::size_t dimension = 0;
  std::vector<std::size_t> extreme;
  std::vector<Facet> facets;
  Rational volume;  // ambient volume, 0 unless full-dimensional
};

// Hull of distinct points of any affine dimension: the points are projected
// onto coordinates that parameterize their affine hull.
HullInfo hull_of(const std::vector<IntVector>& pts) {
  HullInfo info;
  const std::size_t n = pts.front().size();
  if (pts.size() == 1) {
    info.extreme = {0};
    info.volume = n == 0 ? 1 : 0;
    return info;
  }

  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(to_rational(pts[i] - pts[0]));
  const RrefResult r = rref(RationalMatrix::from_rows(diffs, n));
  const std::size_t k = r.rank;
  if (k > kMaxHullDimension)
    throw CapabilityError("convex hull of affine dimension " + std::to_string(k) +
                          " exceeds the cap of " + std::to_string(kMaxHullDimension));
  info.dimension = k;

  std::vector<IntVector> projected;
  if (k == n) {
    projected = pts;
  } else {
    for (const auto& p : pts) {
      IntVector q;
      for (auto c : r.pivot_columns) q.push_back(p[c]);
      projected.push_back(std::move(q));
    }
  }

  FullHull h = BeneathBeyond(projected, k).run();
  info.extreme = std::move(h.extreme);
  for (auto& f : h.facets) {
    if (k == n) {
      info.facets.push_back(std::move(f));
      continue;
    }
    IntVector lifted(n, 0);
    for (std::size_t t = 0; t < k; ++t) lifted[r.pivot_columns[t]] = f.normal[t];
    info.facets.push_back({std::move(lifted), std::move(f.offset)});
  }
  info.volume = k == n ? make_rational(h.scaled_volume, factorial(n)) : Rational(0);
  return info;
}

std::vector<IntVector> distinct(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<IntVector> vertices_of(const std::vector<IntVector>& pts) {
  const HullInfo h = hull_of(pts);
  std::vector<IntVector> out;
  for (auto i : h.extreme) out.push_back(pts[i]);
  return out;
}

std::vector<IntVector> pairwise_sums(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p + q);
  return distinct(std::move(out));
}

void check_hull_dimension(std::size_t n) {
  if (n > kMaxHullDimension)
    throw CapabilityError("ambient dimension " + std::to_string(n) + " exceeds the hull cap of " +
                          std::to_string(kMaxHullDimension));
}

}  // namespace

Polytope convex_hull(const PointConfiguration& points) {
  check_hull_dimension(points.dimension());
  HullInfo h = hull_of(points.points());
  Polytope out;
  out.ambient_dimension = points.dimension();
  out.dimension = h.dimension;
  for (auto i : h.extreme) out.vertices.push_back(points[i]);
  out.facets = std::move(h.facets);
  out.volume = std::move(h.volume);
  return out;
}

Rational convex_hull_volume(const PointConfiguration& points) {
  check_hull_dimension(points.dimension());
  return hull_of(points.points()).volume;
}

PointConfiguration minkowski_sum(const std::vector<PointConfiguration>& configs) {
  if (configs.empty()) throw ContractError("Minkowski sum of nothing");
  const std::size_t n = configs.front().dimension();
  for (const auto& c : configs)
    if (c.dimension() != n) throw DimensionError("Minkowski summands of different dimension");
  check_hull_dimension(n);

  std::vector<IntVector> acc = vertices_of(configs.front().points());
  for (std::size_t i = 1; i < configs.size(); ++i)
    acc = vertices_of(pairwise_sums(acc, vertices_of(configs[i].points())));
  return PointConfiguration(std::move(acc));
}

Rational mixed_volume_ie(const std::vector<PointConfiguration>& configs) {
  const std::size_t r = configs.size();
  if (r == 0) throw ContractError("mixed volume of an empty system");
  if (r > kMaxInclusionExclusion)
    throw CapabilityError("inclusion-exclusion is capped at " +
                          std::to_string(kMaxInclusionExclusion) + " polytopes");
  for (const auto& c : configs)
    if (c.dimension() != r) throw DimensionError("need r polytopes in R^r");

  std::vector<std::vector<IntVector>> base(r);
  for (std::size_t i = 0; i < r; ++i) base[i] = vertices_of(configs[i].points());

  const std::size_t subsets = std::size_t{1} << r;
  std::vector<std::vector<IntVector>> sum_vertices(subsets);
  Rational total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t top = 0;
    while ((mask >> (top + 1)) != 0) ++top;
    const std::size_t rest = mask ^ (std::size_t{1} << top);
    std::vector<IntVector> pts = rest == 0 ? base[top] : pairwise_sums(sum_vertices[rest], base[top]);
    HullInfo h = hull_of(pts);
    for (auto i : h.extreme) sum_vertices[mask].push_back(pts[i]);

    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((r - size) % 2 == 0)
      total += h.volume;
    else
      total -= h.volume;
  }
  if (total.get_den() != 1)
    throw std::logic_error("non-integral mixed volume " + to_string(total) + " for lattice polytopes");
  return total;
}

// ---------------------------------------------------------------------------
// Mixed cells

Rational CellEnumeration::total_volume() const {
  Rational v = 0;
  for (const auto& c : cells) v += c.volume;
  return v;
}

namespace {

enum class CellTest { NotCell, Cell, Tie };

class CellSearch {
 public:
  CellSearch(const std::vector<PointConfiguration>& configs,
             const std::vector<std::vector<Integer>>& lifting)
      : configs_(configs), lifting_(lifting), r_(configs.size()), choice_(r_) {}

  // Returns false if a tie was found (non-generic lifting).
  bool run(std::vector<MixedCell>& cells) {
    cells_ = &cells;
    tie_ = false;
    descend(0, {});
    return !tie_;
  }

 private:
  // `echelon` holds the chosen edge directions reduced to echelon form, so a
  // dependent edge is rejected as soon as it is picked.
  void descend(std::size_t i, std::vector<std::pair<std::size_t, RationalVector>> echelon) {
    if (tie_) return;
    if (i == r_) {
      evaluate();
      return;
    }
    const auto& a = configs_[i];
    for (std::size_t p = 0; p < a.size(); ++p)
      for (std::size_t q = p + 1; q < a.size(); ++q) {
        RationalVector v = to_rational(a[q] - a[p]);
        for (const auto& [pivot, row] : echelon)
          if (v[pivot] != 0) {
            const Rational f = v[pivot] / row[pivot];
            for (std::size_t t = 0; t < r_; ++t) v[t] -= f * row[t];
          }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (it == v.end()) continue;
        auto next = echelon;
        next.emplace_back(static_cast<std::size_t>(it - v.begin()), std::move(v));
        choice_[i] = {p, q};
        descend(i + 1, std::move(next));
      }
  }

  void evaluate() {
    // Lower-facet normal (gamma, 1): gamma . (b - a) = w(a) - w(b) for every chosen edge.
    RationalMatrix system(r_, r_ + 1);
    IntegerMatrix edges(r_, r_);
    for (std::size_t i = 0; i < r_; ++i) {
      const auto [p, q] = choice_[i];
      const IntVector e = configs_[i][q] - configs_[i][p];
      for (std::size_t t = 0; t < r_; ++t) {
        system(i, t) = e[t];
        edges(i, t) = e[t];
      }
      system(i, r_) = lifting_[i][p] - lifting_[i][q];
    }
    const RrefResult solved = rref(system);
    RationalVector gamma(r_);
    for (std::size_t t = 0; t < r_; ++t) gamma[t] = solved.reduced(t, r_);

    bool tie = false;
    for (std::size_t i = 0; i < r_; ++i) {
      const auto [p, q] = choice_[i];
      const Rational level = dot(gamma, to_rational(configs_[i][p])) + lifting_[i][p];
      for (std::size_t u = 0; u < configs_[i].size(); ++u) {
        if (u == p || u == q) continue;
        const Rational value = dot(gamma, to_rational(configs_[i][u])) + lifting_[i][u];
        if (value < level) return;
        if (value == level) tie = true;
      }
    }
    if (tie) {
      tie_ = true;
      return;
    }

    MixedCell cell;
    cell.choice = choice_;
    for (std::size_t i = 0; i < r_; ++i)
      cell.edges.push_back({configs_[i][choice_[i][0]], configs_[i][choice_[i][1]]});
    cell.volume = abs(determinant(edges));
    cells_->push_back(std::move(cell));
  }

  const std::vector<PointConfiguration>& configs_;
  const std::vector<std::vector<Integer>>& lifting_;
  std::size_t r_;
  std::vector<std::array<std::size_t, 2>> choice_;
  std::vector<MixedCell>* cells_ = nullptr;
  bool tie_ = false;
};

}  // namespace

CellEnumeration enumerate_mixed_cells(const std::vector<PointConfiguration>& configs,
                                      std::uint64_t seed, unsigned max_attempts) {
  const std::size_t r = configs.size();
  if (r == 0) throw ContractError("mixed cells of an empty system");
  if (r > kMaxCellEnumeration)
    throw CapabilityError("mixed-cell enumeration is capped at " +
                          std::to_string(kMaxCellEnumeration) + " polytopes");
  for (const auto& c : configs)
    if (c.dimension() != r) throw DimensionError("need r configurations in R^r");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 1L << 20);
  CellEnumeration out;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<std::vector<Integer>> lifting(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t p = 0; p < configs[i].size(); ++p) lifting[i].emplace_back(dist(rng));

    std::vector<MixedCell> cells;
    out.attempts = attempt;
    if (CellSearch(configs, lifting).run(cells)) {
      out.cells = std::move(cells);
      return out;
    }
  }
  throw NonGenericError("no generic lifting found in " + std::to_string(max_attempts) + " attempts");
}

Rational mixed_volume_cells(const std::vector<PointConfiguration>& configs, std::uint64_t seed) {
  return enumerate_mixed_cells(configs, seed).total_volume();
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

bool trivially_holds(const LinearConstraint& c) {
  switch (c.relation) {
    case Relation::Less: return 0 < c.rhs;
    case Relation::LessEqual: return 0 <= c.rhs;
    case Relation::Equal: return c.rhs == 0;
  }
  return false;
}

// Scale so the first nonzero coefficient has magnitude one; keeps duplicates detectable.
void normalize(LinearConstraint& c) {
  auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x != 0; });
  if (it == c.coeffs.end()) return;
  const Rational s = 1 / abs(*it);
  for (auto& x : c.coeffs) x *= s;
  c.rhs *= s;
}

}  // namespace

bool fourier_motzkin_feasible(std::vector<LinearConstraint> constraints, std::size_t variables) {
  for (const auto& c : constraints)
    if (c.coeffs.size() != variables) throw DimensionError("constraint length mismatch");

  // Substitute equalities away.
  for (;;) {
    auto eq = std::find_if(constraints.begin(), constraints.end(),
                           [](const LinearConstraint& c) { return c.relation == Relation::Equal; });
    if (eq == constraints.end()) break;
    const LinearConstraint e = *eq;
    constraints.erase(eq);
    auto piv = std::find_if(e.coeffs.begin(), e.coeffs.end(), [](const Rational& x) { return x != 0; });
    if (piv == e.coeffs.end()) {
      if (e.rhs != 0) return false;
      continue;
    }
    const std::size_t j = static_cast<std::size_t>(piv - e.coeffs.begin());
    for (auto& c : constraints) {
      if (c.coeffs[j] == 0) continue;
      const Rational f = c.coeffs[j] / e.coeffs[j];
      for (std::size_t t = 0; t < variables; ++t) c.coeffs[t] -= f * e.coeffs[t];
      c.rhs -= f * e.rhs;
    }
  }

  for (std::size_t j = 0; j < variables; ++j) {
    std::vector<LinearConstraint> upper, lower, rest;
    for (auto& c : constraints) {
      normalize(c);
      if (c.coeffs[j] > 0)
        upper.push_back(std::move(c));
      else if (c.coeffs[j] < 0)
        lower.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& u : upper)
      for (const auto& l : lower) {
        // u has x_j coefficient +1 and l has -1 after normalization.
        const Rational su = 1 / u.coeffs[j];
        const Rational sl = 1 / -l.coeffs[j];
        LinearConstraint c;
        c.coeffs.resize(variables);
        for (std::size_t t = 0; t < variables; ++t) c.coeffs[t] = su * u.coeffs[t] + sl * l.coeffs[t];
        c.coeffs[j] = 0;
        c.rhs = su * u.rhs + sl * l.rhs;
        c.relation = (u.relation == Relation::Less || l.relation == Relation::Less)
                         ? Relation::Less
                         : Relation::LessEqual;
        rest.push_back(std::move(c));
      }
    for (auto& c : rest) normalize(c);
    std::sort(rest.begin(), rest.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
      if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
      if (a.rhs != b.rhs) return a.rhs < b.rhs;
      return a.relation < b.relation;
    });
    rest.erase(std::unique(rest.begin(), rest.end(),
                           [](const LinearConstraint& a, const LinearConstraint& b) {
                             return a.coeffs == b.coeffs && a.rhs == b.rhs && a.relation == b.relation;
                           }),
               rest.end());
    constraints = std::move(rest);
  }
  return std::all_of(constraints.begin(), constraints.end(), trivially_holds);
}

}  // namespace crn
