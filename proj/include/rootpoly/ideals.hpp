#pragma once

#include "rootpoly/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Abelian ideals of the nilradical, represented as bitsets over the canonical
// positive-root order.  An ideal is an upward-closed set in the root poset;
// it is abelian when no two of its elements (repetition allowed) sum to a
// root.  Theta always denotes the highest root.

namespace rootpoly {

struct RootFilter {
  std::uint64_t bits = 0;

  bool test(int idx) const { return (bits >> idx) & 1u; }
  void set(int idx) { bits |= (std::uint64_t{1} << idx); }
  void reset(int idx) { bits &= ~(std::uint64_t{1} << idx); }
  int count() const;
  bool empty() const { return bits == 0; }
  bool subset_of(const RootFilter& o) const { return (bits & ~o.bits) == 0; }

  friend bool operator==(const RootFilter& a, const RootFilter& b) { return a.bits == b.bits; }
  friend bool operator<(const RootFilter& a, const RootFilter& b) { return a.bits < b.bits; }
};

std::string to_hex(const RootFilter& f);
RootFilter filter_from_hex(const std::string& s);

// Member roots in canonical order.
std::vector<Root> filter_roots(const RootSystem& rs, const RootFilter& f);

// Is the set upward closed in the root poset?
bool is_filter(const RootSystem& rs, const RootFilter& f);

// {gamma in Phi+ : gamma >= alpha}; alpha must be a positive root.
RootFilter principal_filter(const RootSystem& rs, const Root& alpha);

// Upward closed and sum-free (no beta, gamma in the set, repetition allowed,
// with beta + gamma a root).
bool is_abelian_ideal(const RootSystem& rs, const RootFilter& f);

// All abelian ideals (always 2^n of them), deterministically ordered.
std::vector<RootFilter> enumerate_abelian_ideals(const RootSystem& rs);

// Apex classification for nonempty abelian ideals of types A and C: the
// class of I is the simple root alpha_i such that I belongs to I_ab(alpha_i).
// Computed two ways (the theta-pair criterion and the family-specific rule)
// which are asserted to agree; returns nullopt when the theta-pair criterion
// fails (ideal in no class), e.g. the empty ideal.
std::optional<int> classify_ideal(const RootSystem& rs, const RootFilter& f);

// The maximal member M_i of I_ab(alpha_i): all positive roots whose
// alpha_i-coefficient equals the mark m_i.
RootFilter max_member(const RootSystem& rs, int i);

// All members of I_ab(alpha_i), for long simple alpha_i in types A and C.
std::vector<RootFilter> members_of_I_ab(const RootSystem& rs, int i);

// Border of an abelian ideal with an apex: the n roots beta in I such that
// for all simple gamma1, gamma2 (repetition allowed) with beta - gamma1 and
// beta - gamma2 positive roots, beta - gamma1 - gamma2 is not in I.
std::vector<Root> border(const RootSystem& rs, const RootFilter& f);

// Upward closure of a set of positive roots.
RootFilter ideal_from_border(const RootSystem& rs, const std::vector<Root>& roots);

// The bijection between abelian ideals contained in M_i and the minimal
// coset representatives W^i, for marks m_i = 1: pairs (M_i \ Nbar(w), w).
std::vector<std::pair<RootFilter, WeylElement>> abelian_ideals_below(const RootSystem& rs, int i);

// Type C only: the pair of long roots (lambda_row, lambda_col) heading the
// row and column of beta's diagram cell; lambda_row + lambda_col = 2 beta.
std::pair<Root, Root> hook_long_roots(const RootSystem& rs, const Root& beta);

// For a long root lambda: U = {beta in Phi+ : beta - lambda in Phi+} and
// R = {beta in Phi+ : lambda - beta in Phi+}.
RootFilter roots_above(const RootSystem& rs, const Root& lambda);
RootFilter roots_below(const RootSystem& rs, const Root& lambda);

}  // namespace rootpoly
