#pragma once

#include "rootpoly/ideals.hpp"

#include <utility>
#include <vector>

// Border-strip triangulations of the root polytope P = conv(Phi) and its
// positive part P+ = conv(Phi+ u {0}), types A and C.  Each simplex is the
// cone (with the origin implicit) over the image w(B(I)) of the border of an
// abelian ideal, for w a minimal coset representative at the facet apex.

namespace rootpoly {

struct Simplex {
  std::vector<Root> vertices;  // n roots, images of a border under the coset rep
  int apex = 0;                // 1-based simple index of the facet class
  std::vector<int> coset_word; // reduced word of the representative
  RootFilter ideal;            // the abelian ideal whose border was mapped
};

enum class PolytopeTag { P, PPlus, Facet, IdealHull };

struct Triangulation {
  std::vector<Simplex> simplices;
  PolytopeTag tag = PolytopeTag::P;
  int facet_index = 0;  // set for tag == Facet
  RootFilter ideal;     // set for tag == IdealHull
};

// |det| of the n vertex vectors: normalized volume of the coned simplex.
Int normalized_volume(const RootSystem& rs, const std::vector<Root>& vertices);

// Borders of all members of I_ab(alpha_i): the triangulation of the facet
// cone at apex i (identity coset).
Triangulation facet_triangulation(const RootSystem& rs, int i);

// The full triangulation of P: facet triangulations carried around by all
// minimal coset representatives, over every facet apex.
Triangulation full_triangulation(const RootSystem& rs);

// Simplices of t whose vertices are all positive roots: the induced
// triangulation of P+ (t must be a full triangulation).
Triangulation positive_restriction(const RootSystem& rs, const Triangulation& t);

// Triangulation of conv(I) for an abelian ideal with an apex: borders of the
// members J of the same class with J contained in I.
Triangulation ideal_hull_triangulation(const RootSystem& rs, const RootFilter& ideal);

// P as an exact inequality system (x, g) <= bound over Weyl images g of the
// facet coweights.
struct HalfspaceModel {
  std::vector<std::pair<Covector, Int>> inequalities;
};

HalfspaceModel halfspace_model(const RootSystem& rs);

Location location(const HalfspaceModel& model, const RatPoint& p);
// Position relative to the cone spanned by the positive roots.
Location positive_cone_location(const RatPoint& p);

// Face numbers f_0 .. f_{n-1} of P, closed form (types A and C).
std::vector<Int> f_polynomial(const RootSystem& rs);

// Anti-standard arc diagrams on [n+1] (type A): simplices of the full
// triangulation correspond to digraphs with n arcs such that no vertex is
// both a source and a target and arc targets are monotone in their sources.
struct AntiStandardGraph {
  int vertices = 0;                        // n + 1
  std::vector<std::pair<int, int>> edges;  // (source, target), 1-based
};

AntiStandardGraph simplex_to_digraph(const RootSystem& rs, const Simplex& s);
std::vector<Root> digraph_to_simplex(const RootSystem& rs, const AntiStandardGraph& g);

// The involution on W^i carrying each border of the facet at apex i to a
// mirrored border; acts on the rectangle M_i by reversing columns (type A).
WeylElement standard_antipode(const RootSystem& rs, int i);

struct VolumeReport {
  Int vol_P_over_vol_Pi;       // total normalized volume of P
  Rat vol_Pplus_over_vol_P;    // fraction carried by the positive part
  Rat exponents_ratio;         // prod(exponents) / |W|, equal to the above
};

VolumeReport volume_report(const RootSystem& rs);

}  // namespace rootpoly
