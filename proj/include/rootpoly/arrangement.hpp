#pragma once

#include "rootpoly/ideals.hpp"
#include "rootpoly/weyl.hpp"

#include <string>
#include <utility>
#include <vector>

// The hyperplane arrangement spanned by the codimension-2 faces of the root
// polytope: seed normals are read off the faces fixed by pairs of extended
// Dynkin nodes whose complement stays connected, then closed under the Weyl
// action.  Region counts come from the intersection poset via the
// characteristic polynomial.

namespace rootpoly {

struct Hyperplane {
  Covector normal;  // primitive, first nonzero entry positive
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal == b.normal;
  }
};

// Pairs {i, j} of finite Dynkin nodes whose removal from the extended
// diagram (node 0 kept) leaves it connected; one per codim-2 face orbit.
std::vector<std::pair<int, int>> codim2_index_pairs(const RootSystem& rs);

// The roots pinned by such a pair: coefficients at i and j equal to the
// respective marks.  Always spans a hyperplane (rank n-1).
RootFilter codim2_face_roots(const RootSystem& rs, int i, int j);

std::vector<Hyperplane> build_arrangement(const RootSystem& rs);

// Intersection subspaces stored as canonical row bases of their annihilator
// covector spaces; ordered by reverse inclusion (ambient space at the
// bottom), with Moebius values accumulated bottom-up.
struct PosetElement {
  IntMat basis;  // rows: covectors cutting the subspace
  int rank = 0;  // codimension of the subspace
  Int moebius = 0;
};

struct IntersectionPoset {
  std::vector<PosetElement> elements;  // sorted by (rank, basis)
};

IntersectionPoset intersection_poset(const std::vector<Hyperplane>& hs, int n);

// Coefficients of the characteristic polynomial, index = power of t.
std::vector<Int> characteristic_polynomial(const std::vector<Hyperplane>& hs, int n);

// Number of chambers, via evaluation at -1 (Zaslavsky).
Int region_count(const std::vector<Hyperplane>& hs, int n);

// Face polynomial of the type A arrangement: 1 + x * f_P(x).
std::vector<Int> face_polynomial_A(const RootSystem& rs);

struct SeparationWitness {
  Covector hyperplane;
  int facet_id = 0;
  Root u, v;  // roots of one facet strictly separated by the hyperplane
};

struct RegionsFacetsReport {
  bool coincide = true;
  std::vector<SeparationWitness> witnesses;
};

// Chambers of the arrangement match the facet cones exactly when no
// hyperplane strictly separates two roots of one facet; reports every
// violating triple (hyperplane, facet, root pair).
RegionsFacetsReport regions_vs_facets(const RootSystem& rs);

struct SubsystemReport {
  std::vector<Root> positive_roots;  // positive part of span(input) cap Phi
  std::vector<Root> simple_system;   // members not sums of two members
  std::string dynkin_type;           // e.g. "B3", "A2+A1", "unclassified"
};

SubsystemReport parabolic_closure(const RootSystem& rs, const std::vector<Root>& roots);

// Positive roots of the subsystem generated from the input by reflections
// (compare against parabolic_closure to detect non-parabolic subsystems).
std::vector<Root> reflection_subsystem(const RootSystem& rs, const std::vector<Root>& roots);

}  // namespace rootpoly
