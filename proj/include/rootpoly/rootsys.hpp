#pragma once

#include "rootpoly/errors.hpp"
#include "rootpoly/linalg.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

// Classical root systems in simple-root coordinates.  A root is its integer
// coordinate vector in the basis of simple roots; positive roots are kept in
// a canonical order (by height, then lexicographically) that every other
// module relies on for determinism.
//
// Cartan convention: cartan(i,j) = <alpha_j, alpha_i^vee>, so the simple
// reflection acts by s_i(alpha_j) = alpha_j - cartan(i,j) * alpha_i.
// Simple-root indices are 1-based throughout the public interface.

namespace rootpoly {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

struct RootSystemType {
  Family family;
  int rank;
};

class RootSystem;

// A validated root: coordinates of an element of Phi (positive or negative).
class Root {
 public:
  Root(const RootSystem& rs, IntVec coords);

  const IntVec& coords() const { return coords_; }
  bool positive() const { return positive_; }

  friend bool operator==(const Root& a, const Root& b) { return a.coords_ == b.coords_; }

 private:
  friend class RootSystem;
  struct Checked {};
  Root(IntVec coords, bool positive, Checked) : coords_(std::move(coords)), positive_(positive) {}

  IntVec coords_;
  bool positive_;
};

struct CoverRelation {
  int lower;   // index into positive_roots()
  int upper;   // index into positive_roots()
  int simple;  // 1-based: upper - lower = alpha_simple
};

class RootSystem {
 public:
  explicit RootSystem(RootSystemType t);

  RootSystemType type() const { return type_; }
  Family family() const { return type_.family; }
  int n() const { return type_.rank; }

  const IntMat& cartan() const { return cartan_; }
  // Symmetrized Cartan matrix: gram(i,j) is proportional to (alpha_i, alpha_j),
  // scaled so all entries are integers (short roots get squared length 2).
  const IntMat& gram() const { return gram_; }

  const std::vector<IntVec>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const IntVec& highest_root() const { return positive_.back(); }
  int highest_root_index() const { return num_positive() - 1; }

  const IntVec& marks() const { return marks_; }
  Int mark(int i) const { return marks_[i - 1]; }

  bool is_long(int idx) const { return long_flag_[idx]; }
  bool is_long_simple(int i) const;
  std::vector<int> long_simple_indices() const;

  // Edges of the extended Dynkin diagram on nodes {0, 1, ..., n}; node 0 is
  // attached to i exactly when the highest root pairs nontrivially with alpha_i.
  const std::vector<std::pair<int, int>>& extended_edges() const { return extended_edges_; }

  const std::vector<int>& exponents() const { return exponents_; }
  int coxeter_number() const { return coxeter_number_; }
  Int weyl_order() const;

  // --- lookup helpers ---
  std::optional<int> index_of(const IntVec& coords) const;  // positive roots only
  bool is_positive_root(const IntVec& coords) const { return index_of(coords).has_value(); }
  bool is_root(const IntVec& coords) const;

  Root root(IntVec coords) const;            // validates membership in +-Phi
  Root positive(int idx) const;              // by canonical index
  Root negative(int idx) const;
  Root simple(int i) const;                  // 1-based
  Root theta() const { return positive(highest_root_index()); }

  Int height(const IntVec& coords) const { return coords.sum(); }

  // componentwise order on positive roots (the root poset)
  bool leq(int i, int j) const;
  std::uint64_t up_closure_bits(int idx) const { return up_bits_[idx]; }

  // index of positive_roots[i] + positive_roots[j] in Phi+, or -1
  int sum_index(int i, int j) const { return sum_index_[i][j]; }

  // Gram pairing of coordinate vectors (scaled inner product).
  Int inner(const IntVec& x, const IntVec& y) const { return x.dot(gram_ * y); }
  // Exact coroot pairing <x, beta^vee> = 2 (x, beta) / (beta, beta).
  Int coroot_pair(const IntVec& x, const IntVec& beta) const;

 private:
  RootSystemType type_;
  IntMat cartan_;
  IntMat gram_;
  std::vector<IntVec> positive_;
  IntVec marks_;
  std::vector<bool> long_flag_;
  std::vector<std::pair<int, int>> extended_edges_;
  std::vector<int> exponents_;
  int coxeter_number_ = 0;
  std::map<std::vector<Int>, int> index_;
  std::vector<std::uint64_t> up_bits_;
  std::vector<std::vector<int>> sum_index_;
};

RootSystem build_root_system(RootSystemType t);
RootSystem build_root_system(Family f, int rank);

// All covering pairs of the root poset: upper = lower + alpha_simple.
std::vector<CoverRelation> cover_relations(const RootSystem& rs);

}  // namespace rootpoly
