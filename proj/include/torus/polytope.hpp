#pragma once

#include <optional>
#include <utility>

#include "torus/linalg.hpp"

namespace torus {

// Closed convex region cut out by integer hyperplane equalities and unit
// bands lo <= normal . x <= lo + 1. Bounded whenever the normals span R^n.
struct HPolytope {
  std::size_t ambient_dim = 0;
  std::vector<std::pair<IntVec, Int>> equalities;  // normal . x == rhs
  std::vector<std::pair<IntVec, Int>> bands;       // lo <= normal . x <= lo+1
};

// Exact vertex set; points are lex-sorted and pairwise distinct.
// affine_dim is the dimension of the affine hull (-1 when empty).
struct VertexSet {
  std::vector<RatVec> points;
  int affine_dim = -1;
};

// All vertices: solutions of n linearly independent candidate hyperplanes
// (equalities, band floors, band ceilings) that satisfy every constraint.
// Empty set iff the polytope is empty. Throws UnboundedError when the
// constraint normals do not span R^n.
VertexSet vertices(const HPolytope& p);

int affine_dim_of(const std::vector<RatVec>& points);

RatVec centroid(const VertexSet& vs);  // throws EmptySetError when empty

// Centroid of the vertex set: lies in the relative interior, hence strictly
// off every band face that does not contain the whole polytope.
RatVec relative_interior_point(const HPolytope& p);

bool is_contained_in_hyperplane(const VertexSet& vs, const IntVec& normal,
                                const Int& c);

// True iff D*w is integral for every vertex w.
bool scaled_lattice_check(const VertexSet& vs, const Int& d);

// Interior lattice point of k*hull(vs) for an integral vertex set, following
// the constructive route when k >= affine_dim + 1 (sum of affine_dim + 1
// affinely independent vertices, padded with copies of the first); the result
// is certified against facets recomputed from the scaled vertex set. For
// smaller k an exhaustive box scan decides existence exactly.
std::optional<IntVec> interior_lattice_point(const VertexSet& vs, const Int& k);

// True iff x lies in the relative interior of hull(vs): x is in the affine
// hull and strictly inside every facet (facets recomputed from vs).
bool in_relative_interior(const RatVec& x, const VertexSet& vs);

// All points of (1/m)Z^n in the bounding box of p satisfying every equality
// exactly and every band strictly (lo < normal . x < lo+1), lex-sorted.
std::vector<RatVec> lattice_points_of_denominator(const HPolytope& p,
                                                  const Int& m);

// Exact area of a full-dimensional polygon in R^2 (convex hull boundary
// traversal). Throws DimensionError unless ambient dim and affine_dim are 2.
Rat volume(const VertexSet& vs);

}  // namespace torus
