#pragma once

#include <cstdint>
#include <map>

#include "torus/polytope.hpp"

namespace torus {

// A finite set of nonzero integer vectors defining the toric arrangement
// {x : v_i . x = 0 mod 1}. Use make_vector_set for validated construction.
struct VectorSet {
  std::size_t n = 0;
  std::vector<IntVec> vectors;
};

// Validates dimensions, nonzero vectors, and rejects duplicates.
VectorSet make_vector_set(std::size_t n, std::vector<IntVec> vectors);

bool spans(const VectorSet& a);

// lcm of |det| over all n-subsets of A with nonzero determinant.
Int determinant_lcm(const VectorSet& a);

// (n+1) * determinant_lcm: the smallest denominator certified by the theorem.
Int theorem_bound(const VectorSet& a);

// A lift names one open cell in R^n: equalities v_i . x = offsets[i] for
// i in eq_set, strict bands offsets[j] < v_j . x < offsets[j]+1 otherwise.
struct Lift {
  std::vector<std::size_t> eq_set;  // strictly increasing, 0-based
  IntVec offsets;                   // length k
  auto operator<=>(const Lift&) const = default;
};

// Closed-cell description (bands closed, equalities kept).
HPolytope lift_polytope(const VectorSet& a, const Lift& lift);

// True iff the open cell is nonempty: the closure has vertices and is not
// contained in any band face. Returns the closure vertices alongside.
bool lift_is_valid(const VectorSet& a, const Lift& lift, VertexSet* closure = nullptr);

// Enumeration of all valid lifts whose offsets lie in the unit-cube ranges:
// equalities in [m_i, M_i], bands in [m_i - 1, M_i], where m_i/M_i are the
// min/max of v_i . x over [0,1]^n. Every stratum of the torus has at least
// one lift in the output.
//
// The walk is vertex-driven: each nonempty cell's closure contains a vertex
// of the level-hyperplane arrangement, so visiting all vertices (n-subsets
// of directions, one level each) and reading off the incident cells finds
// every candidate without sweeping the full offset box.
struct EnumeratedLift {
  Lift lift;
  std::vector<std::uint32_t> vertex_ids;  // closure vertices, ascending ids
};
struct LiftEnumeration {
  std::vector<RatVec> vertex_pool;      // arrangement vertices, lex-sorted
  std::vector<RatVec> vertex_values;    // [id][j] = v_j . vertex
  std::vector<EnumeratedLift> lifts;    // valid lifts sorted by key
};
LiftEnumeration enumerate_lifts_detailed(const VectorSet& a);
std::vector<Lift> enumerate_lifts(const VectorSet& a);

// Reference enumeration: sweep the full cartesian offset ranges and validate
// each candidate. Exponential in k; kept as a cross-checking oracle.
std::vector<Lift> enumerate_lifts_by_ranges(const VectorSet& a);

// Translate a valid lift by z = floor(centroid of closure), landing the
// centroid in [0,1)^n. Lifts of the same stratum share one canonical key.
Lift canonical_orbit_key(const VectorSet& a, const Lift& lift);

struct Stratum {
  Lift key;               // canonical lift
  std::size_t dim;        // n - rank{v_i : i in eq_set}
  RatVec representative;  // centroid of the canonical closure, in [0,1)^n
  VertexSet closure;
};

struct Stratification {
  VectorSet input;
  Int dlcm;   // D_A
  Int bound;  // (n+1) * D_A
  std::vector<Stratum> strata;  // dim descending, then key ascending
  std::map<std::size_t, std::size_t> counts_by_dim;
};

Stratification stratify(const VectorSet& a);

struct CoverageReport {
  Int m;
  bool covered = false;
  std::vector<std::optional<RatVec>> witnesses;  // parallel to strata
  std::vector<std::size_t> missing;              // stratum indices, ascending
};

// Does the grid (1/m)Z^n meet every stratum? Witnesses come from an exact
// scan (lexicographically smallest point) for small grids; for large m with
// m = l * D_A and l > dim, the constructive interior point of the scaled
// closure is used instead, certified against the lift constraints.
CoverageReport coverage(const Stratification& s, const Int& m);

// All m <= limit with full coverage, ascending.
std::vector<Int> working_denominators(const Stratification& s, const Int& limit);

// The smallest working m as a singleton set; empty when none <= limit.
std::vector<Int> minimal_working_set(const Stratification& s, const Int& limit);

// The lift whose open cell contains x, read off from the values v_j . x.
Lift lift_containing(const VectorSet& a, const RatVec& x);

// Number of distinct strata met by the grid (1/m)Z^n, computed directly from
// the grid points (independent of enumerate_lifts): each point is classified
// by lift_containing and lifts are identified up to Z^n translation.
std::size_t grid_orbit_census(const VectorSet& a, const Int& m);

struct AreaEntry {
  std::size_t stratum_index;
  Rat area;
  std::size_t vertex_count;
};

// Exact areas of the 2-dimensional strata, ascending (ties by stratum order).
// Only for n = 2.
std::vector<AreaEntry> smallest_area_strata(const Stratification& s);

}  // namespace torus
