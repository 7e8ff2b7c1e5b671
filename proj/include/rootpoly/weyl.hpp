#pragma once

#include "rootpoly/rootsys.hpp"

#include <cstdint>
#include <vector>

// Weyl group elements as exact integer matrices acting on simple-root
// coordinates (column j = image of alpha_j).  The inverse matrix is carried
// along so inversion sets and covector actions never solve a system.  The
// accompanying word (1-based simple reflection indices, leftmost factor
// first) is provenance for reporting; identity of elements is always decided
// by the matrix.

namespace rootpoly {

struct WeylElement {
  IntMat mat;
  IntMat inv;
  std::vector<int> word;
};

// Linear functional on root coordinates; values[j-1] is the pairing with
// alpha_j.  Fundamental coweights are the standard basis functionals.
struct Covector {
  IntVec values;
  friend bool operator==(const Covector& a, const Covector& b) { return a.values == b.values; }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based
// Reflection through an arbitrary root beta.
WeylElement root_reflection(const RootSystem& rs, const Root& beta);

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a then-after b: a*b
WeylElement inverse(const WeylElement& w);
bool same_element(const WeylElement& a, const WeylElement& b);

Root apply(const RootSystem& rs, const WeylElement& w, const Root& r);
// Push-forward of a functional: (w.f)(x) = f(w^{-1} x).
Covector apply(const RootSystem& rs, const WeylElement& w, const Covector& f);

Covector fundamental_coweight(const RootSystem& rs, int i);  // 1-based

// N(w) = {beta in Phi+ : w^{-1} beta < 0}, as a bitset over the canonical
// positive-root order (bit k = positive_roots()[k]).
std::uint64_t inversion_set(const RootSystem& rs, const WeylElement& w);
// N-bar(w) = N(w^{-1}) = {beta in Phi+ : w beta < 0}.
std::uint64_t co_inversion_set(const RootSystem& rs, const WeylElement& w);

int length(const RootSystem& rs, const WeylElement& w);
// Simple indices i with length(w s_i) < length(w), equivalently bits of
// co_inversion_set(w) that are simple.
std::vector<int> right_descents(const RootSystem& rs, const WeylElement& w);

// Minimal-length representatives of the cosets w W_{Pi \ {alpha_i}},
// deterministically ordered (lexicographic on matrices).  Generated by a BFS
// that multiplies by simple reflections on the left, which stays inside the
// set of minimal representatives; right multiplication would not reach all
// of them.
std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, int i);

// Entire Weyl group by BFS (intended for small-rank tests and oracles).
std::vector<WeylElement> full_group(const RootSystem& rs);

// Orbit of a covector under W.  With dedup_sign, f and -f are identified and
// each class is represented by its sign-canonical member (first nonzero
// entry positive).
std::vector<Covector> orbit_covector(const RootSystem& rs, const Covector& f, bool dedup_sign);

}  // namespace rootpoly
