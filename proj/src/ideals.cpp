#include "rootpoly/ideals.hpp"

#include "rootpoly/diagram.hpp"

#include <algorithm>
#include <bit>

namespace rootpoly {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("ideals: ") + what);
}

// interval root alpha_s + ... + alpha_t as coordinates
IntVec interval(int n, int s, int t) {
  IntVec v = IntVec::Zero(n);
  for (int k = s; k <= t; ++k) v[k - 1] = 1;
  return v;
}

}  // namespace

int RootFilter::count() const { return std::popcount(bits); }

std::string to_hex(const RootFilter& f) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(f.bits));
  return buf;
}

RootFilter filter_from_hex(const std::string& s) {
  std::string body = s;
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
  if (body.empty() || body.size() > 16) fail(ErrorCode::BadSpec, "bad ideal hex '" + s + "'");
  std::uint64_t bits = 0;
  for (char c : body) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else fail(ErrorCode::BadSpec, "bad ideal hex '" + s + "'");
    bits = (bits << 4) | static_cast<std::uint64_t>(d);
  }
  return {bits};
}

std::vector<Root> filter_roots(const RootSystem& rs, const RootFilter& f) {
  std::vector<Root> out;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (f.test(k)) out.push_back(rs.positive(k));
  }
  return out;
}

bool is_filter(const RootSystem& rs, const RootFilter& f) {
  if (rs.num_positive() < 64 && (f.bits >> rs.num_positive()) != 0) return false;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!f.test(k)) continue;
    std::uint64_t up = rs.up_closure_bits(k);
    if ((up & ~f.bits) != 0) return false;
  }
  return true;
}

RootFilter principal_filter(const RootSystem& rs, const Root& alpha) {
  if (!alpha.positive()) fail(ErrorCode::NotPositiveRoot, "principal filter needs a positive root");
  return {rs.up_closure_bits(*rs.index_of(alpha.coords()))};
}

bool is_abelian_ideal(const RootSystem& rs, const RootFilter& f) {
  if (!is_filter(rs, f)) return false;
  for (int i = 0; i < rs.num_positive(); ++i) {
    if (!f.test(i)) continue;
    for (int j = i; j < rs.num_positive(); ++j) {
      if (!f.test(j)) continue;
      if (rs.sum_index(i, j) >= 0) return false;
    }
  }
  return true;
}

std::vector<RootFilter> enumerate_abelian_ideals(const RootSystem& rs) {
  const int npos = rs.num_positive();
  std::vector<RootFilter> out;
  std::vector<int> gens;
  // DFS over antichains of generators in increasing canonical order; a prefix
  // of an abelian ideal is abelian, so pruning on the partial filter is safe.
  auto abelian_quick = [&](std::uint64_t bits) {
    for (int i = 0; i < npos; ++i) {
      if (!((bits >> i) & 1u)) continue;
      for (int j = i; j < npos; ++j) {
        if (!((bits >> j) & 1u)) continue;
        if (rs.sum_index(i, j) >= 0) return false;
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self, int from, std::uint64_t bits) -> void {
    out.push_back({bits});
    for (int g = from; g < npos; ++g) {
      if ((bits >> g) & 1u) continue;  // g >= an existing generator
      bool comparable = false;
      for (int e : gens) {
        if (rs.leq(g, e)) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      std::uint64_t nbits = bits | rs.up_closure_bits(g);
      if (!abelian_quick(nbits)) continue;
      gens.push_back(g);
      self(self, g + 1, nbits);
      gens.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

RootFilter max_member(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "simple index out of range");
  RootFilter f;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.positive_roots()[k][i - 1] == rs.mark(i)) f.set(k);
  }
  return f;
}

std::optional<int> classify_ideal(const RootSystem& rs, const RootFilter& f) {
  if (!is_abelian_ideal(rs, f)) fail(ErrorCode::NotAbelian, "classify_ideal needs an abelian ideal");
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, "apex classification is implemented for types A and C");
  const int n = rs.n();
  const int npos = rs.num_positive();
  const int theta = rs.highest_root_index();

  // Theta-pair criterion: for every pair beta + gamma = theta, exactly one of
  // the two lies in the ideal.
  bool pair_ok = !f.empty() && f.test(theta);
  if (pair_ok) {
    for (int i = 0; i < npos && pair_ok; ++i) {
      for (int j = i + 1; j < npos && pair_ok; ++j) {
        if (rs.sum_index(i, j) == theta && f.test(i) == f.test(j)) pair_ok = false;
      }
    }
  }

  // Family-specific apex rule.
  std::optional<int> apex;
  if (rs.family() == Family::A) {
    for (int i = 1; i <= n; ++i) {
      auto lo = rs.index_of(interval(n, 1, i));
      auto hi = rs.index_of(interval(n, i, n));
      if (!f.test(*lo) || !f.test(*hi)) continue;
      if (!f.subset_of(max_member(rs, i))) continue;
      check(!apex.has_value(), "apex rule matched two simple roots");
      apex = i;
    }
  } else {
    auto bridge = rs.index_of(interval(n, 1, n));  // alpha_1 + ... + alpha_n
    if (!f.empty() && f.test(*bridge) && f.subset_of(max_member(rs, n))) apex = n;
  }

  check(pair_ok == apex.has_value(), "theta-pair criterion disagrees with the apex rule");
  return apex;
}

std::vector<RootFilter> members_of_I_ab(const RootSystem& rs, int i) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, "ideal classes are implemented for types A and C");
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "simple index out of range");
  if (!rs.is_long_simple(i)) fail(ErrorCode::NotLongSimple, "apex must be a long simple root");
  std::vector<RootFilter> out;
  for (const RootFilter& f : enumerate_abelian_ideals(rs)) {
    if (f.empty()) continue;
    if (classify_ideal(rs, f) == std::optional<int>(i)) out.push_back(f);
  }
  return out;
}

std::vector<Root> border(const RootSystem& rs, const RootFilter& f) {
  std::optional<int> apex = classify_ideal(rs, f);  // NotAbelian propagates
  if (!apex) fail(ErrorCode::NoApex, "ideal belongs to no apex class");
  const int npos = rs.num_positive();

  // Generic rule: beta stays iff no double descent beta - gamma1 - gamma2
  // (gamma_k simple, each single step staying in Phi+) lands back in the ideal.
  RootFilter keep;
  for (int b = 0; b < npos; ++b) {
    if (!f.test(b)) continue;
    const IntVec& beta = rs.positive_roots()[b];
    bool border_cell = true;
    for (int g1 = 1; g1 <= rs.n() && border_cell; ++g1) {
      IntVec d1 = beta;
      d1[g1 - 1] -= 1;
      if (d1[g1 - 1] < 0 || !rs.is_positive_root(d1)) continue;
      for (int g2 = 1; g2 <= rs.n() && border_cell; ++g2) {
        IntVec d2 = beta;
        d2[g2 - 1] -= 1;
        if (d2[g2 - 1] < 0 || !rs.is_positive_root(d2)) continue;
        IntVec dd = d1;
        dd[g2 - 1] -= 1;
        if (dd[g2 - 1] < 0) continue;
        if (auto idx = rs.index_of(dd); idx && f.test(*idx)) border_cell = false;
      }
    }
    if (border_cell) keep.set(b);
  }

  if (rs.family() == Family::A) {
    // Cross-check against the diagonal rule: keep beta = alpha_{s,t} iff
    // alpha_{s+1,t-1} is outside the ideal.
    RootFilter diag;
    for (int b = 0; b < npos; ++b) {
      if (!f.test(b)) continue;
      auto [r, c] = diagram_of(rs, rs.positive(b));
      bool inside = false;
      if (diagram_in_shape(rs, r + 1, c + 1)) {
        Root se = diagram_position(rs, r + 1, c + 1);
        inside = f.test(*rs.index_of(se.coords()));
      }
      if (!inside) diag.set(b);
    }
    check(diag == keep, "type A diagonal rule disagrees with the generic border rule");
  }

  check(keep.count() == rs.n(), "border must have exactly n cells");
  return filter_roots(rs, keep);
}

RootFilter ideal_from_border(const RootSystem& rs, const std::vector<Root>& roots) {
  RootFilter f;
  for (const Root& r : roots) {
    if (!r.positive()) fail(ErrorCode::NotPositiveRoot, "border roots must be positive");
    f.bits |= rs.up_closure_bits(*rs.index_of(r.coords()));
  }
  return f;
}

std::vector<std::pair<RootFilter, WeylElement>> abelian_ideals_below(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "simple index out of range");
  if (rs.mark(i) != 1) fail(ErrorCode::MarkNotOne, "bijection requires a simple root of mark 1");
  RootFilter m = max_member(rs, i);
  std::vector<std::pair<RootFilter, WeylElement>> out;
  for (WeylElement& w : minimal_coset_reps(rs, i)) {
    std::uint64_t nbar = co_inversion_set(rs, w);
    check((nbar & ~m.bits) == 0, "co-inversion set of a minimal representative must lie in M_i");
    RootFilter ideal{m.bits & ~nbar};
    check(is_abelian_ideal(rs, ideal), "M_i minus a co-inversion set must be an abelian ideal");
    out.emplace_back(ideal, std::move(w));
  }
  return out;
}

std::pair<Root, Root> hook_long_roots(const RootSystem& rs, const Root& beta) {
  if (rs.family() != Family::C) fail(ErrorCode::WrongType, "hook long roots are a type C notion");
  if (!beta.positive() || beta.coords()[rs.n() - 1] != 1)
    fail(ErrorCode::NotInM, "root must lie in the highest-root class M");
  auto [r, c] = diagram_of(rs, beta);
  Root lr = diagram_position(rs, r, r);
  Root lc = diagram_position(rs, c, c);
  check(lr.coords() + lc.coords() == 2 * beta.coords(), "hook roots must average to beta");
  return {lr, lc};
}

RootFilter roots_above(const RootSystem& rs, const Root& lambda) {
  RootFilter f;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.is_positive_root(rs.positive_roots()[k] - lambda.coords())) f.set(k);
  }
  return f;
}

RootFilter roots_below(const RootSystem& rs, const Root& lambda) {
  RootFilter f;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.is_positive_root(lambda.coords() - rs.positive_roots()[k])) f.set(k);
  }
  return f;
}

}  // namespace rootpoly
