#pragma once

#include "rootpoly/rootsys.hpp"

#include <vector>

// Independent cross-check machinery.  Nothing here reuses the border-strip
// construction: volumes come from pulling triangulations of explicit point
// sets, facets from exhaustive hyperplane enumeration, and digraph counts
// from enumerating arc subsets.  Test code compares the main pipeline
// against these.

namespace rootpoly {

// Pulling triangulation of conv(points) for a point set whose affine hull
// misses the origin (e.g. points on a facet of a polytope containing 0).
// Affine geometry inside that hull is plain linear algebra on the ambient
// space, so simplices are returned as point lists of size rank(points).
std::vector<std::vector<IntVec>> pulling_triangulation(const std::vector<IntVec>& points);

// Sum of |det| over the pulling triangulation: the normalized volume of the
// cone from the origin over conv(points), for full-rank point sets.
Int coned_volume(const std::vector<IntVec>& points);

// Facets of a full-dimensional polytope conv(points), by exhaustive
// enumeration of hyperplanes spanned by affinely independent n-subsets.
// Each facet satisfies normal . x <= offset with primitive (normal, offset).
struct HullFacet {
  IntVec normal;
  Int offset = 0;
  std::vector<int> incident;  // indices of points lying on the facet
};

std::vector<HullFacet> brute_hull_facets(const std::vector<IntVec>& points);

Location hull_location(const std::vector<HullFacet>& facets, const RatPoint& p);

// Indices of points that are vertices of conv(points): points lying on n
// facets with linearly independent normals.
std::vector<int> hull_vertices(const std::vector<IntVec>& points,
                               const std::vector<HullFacet>& facets);

// Normalized volume of conv(points) for a polytope containing the origin:
// sum of coned volumes over facets whose hyperplane misses 0.
Int hull_volume_from_origin(const std::vector<IntVec>& points);

// Anti-standard digraphs on vertices [n+1] by brute force over all n-arc
// subsets: (1) no vertex is both a source and a target of arcs, and (2) if
// s < s' are sources then every target of s is <= every target of s'.
long count_anti_standard_digraphs(int n);
// Same, restricted to digraphs whose arcs all point left to right.
long count_left_to_right_anti_standard(int n);

// Normalized volume of the full root polytope conv(Phi) by fanning each
// facet from its lexicographically least vertex (types A and C).
Int fan_volume_of_root_polytope(const RootSystem& rs);

}  // namespace rootpoly
