#include "rootpoly/verify.hpp"

#include "rootpoly/arrangement.hpp"
#include "rootpoly/oracle.hpp"
#include "rootpoly/report.hpp"
#include "rootpoly/triangulate.hpp"

#include <set>
#include <stdexcept>

namespace rootpoly::verify {

namespace {

struct Sink {
  std::vector<Item>* items;
  int criterion;

  void check(const std::string& name, bool cond, const std::string& detail = "") {
    items->push_back({criterion, name, cond, cond ? "" : detail});
  }
};

std::string sys_name(Family f, int n) {
  return std::string(1, static_cast<char>(f)) + std::to_string(n);
}

bool in_scope(const std::optional<RootSystemType>& scope, Family f, int n) {
  return !scope || (scope->family == f && scope->rank == n);
}

std::vector<IntVec> all_roots(const RootSystem& rs) {
  std::vector<IntVec> pts;
  for (const IntVec& r : rs.positive_roots()) {
    pts.push_back(r);
    pts.push_back(-r);
  }
  return pts;
}

std::vector<IntVec> positive_roots_and_origin(const RootSystem& rs) {
  std::vector<IntVec> pts{IntVec::Zero(rs.n())};
  for (const IntVec& r : rs.positive_roots()) pts.push_back(r);
  return pts;
}

Int expected_facets(Family f, int n) {
  return f == Family::A ? (Int{1} << (n + 1)) - 2 : Int{1} << n;
}

// ---------------------------------------------------------------- criterion 1
void c1_facet_counts(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 5; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int expect = expected_facets(f, n);
      HalfspaceModel model = halfspace_model(rs);
      s.check(sys_name(f, n) + " halfspace count",
              static_cast<Int>(model.inequalities.size()) == expect,
              "got " + std::to_string(model.inequalities.size()));
      auto hull = brute_hull_facets(all_roots(rs));
      s.check(sys_name(f, n) + " exhaustive hull facet count",
              static_cast<Int>(hull.size()) == expect, "got " + std::to_string(hull.size()));
    }
  }
}

// ---------------------------------------------------------------- criterion 2
void c2_triangulation_counts(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 6; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int expect = f == Family::A ? (n + 1) * catalan(n) : Int{1} << (2 * n - 1);
      Triangulation t = full_triangulation(rs);
      s.check(sys_name(f, n) + " simplex count",
              static_cast<Int>(t.simplices.size()) == expect,
              "got " + std::to_string(t.simplices.size()) + ", want " + std::to_string(expect));
    }
  }
}

// ---------------------------------------------------------------- criterion 3
void c3_positive_counts(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 6; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int expect = f == Family::A ? catalan(n) : binomial(2 * n - 1, n);
      Triangulation tp = positive_restriction(rs, full_triangulation(rs));
      s.check(sys_name(f, n) + " positive simplex count",
              static_cast<Int>(tp.simplices.size()) == expect,
              "got " + std::to_string(tp.simplices.size()) + ", want " + std::to_string(expect));
    }
  }
}

// ---------------------------------------------------------------- criterion 4
void c4_unimodularity(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 6; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      int bad = 0;
      for (const Simplex& sx : full_triangulation(rs).simplices) {
        if (normalized_volume(rs, sx.vertices) != 1) ++bad;
      }
      s.check(sys_name(f, n) + " all simplices unimodular", bad == 0,
              std::to_string(bad) + " simplices with volume != 1");
    }
  }
}

// ---------------------------------------------------------------- criterion 5
void c5_volume_partition(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 5; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int total = 0;
      for (const Simplex& sx : full_triangulation(rs).simplices)
        total += normalized_volume(rs, sx.vertices);
      Int oracle = fan_volume_of_root_polytope(rs);
      s.check(sys_name(f, n) + " triangulation volume equals fan volume", total == oracle,
              "triangulation " + std::to_string(total) + ", fan " + std::to_string(oracle));
    }
  }
}

// ---------------------------------------------------------------- criterion 6
void c6_box_membership(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 4; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      auto hull = brute_hull_facets(positive_roots_and_origin(rs));
      HalfspaceModel model = halfspace_model(rs);
      const Int m = rs.marks().maxCoeff();
      long mismatches = 0;
      long points = 0;
      IntVec num = IntVec::Constant(n, -2 * m);
      for (;;) {
        RatPoint p{num, 2};
        ++points;
        Location via_hull = hull_location(hull, p);
        Location in_p = location(model, p);
        Location in_cone = positive_cone_location(p);
        Location combined;
        if (in_p == Location::Outside || in_cone == Location::Outside)
          combined = Location::Outside;
        else if (in_p == Location::Boundary || in_cone == Location::Boundary)
          combined = Location::Boundary;
        else
          combined = Location::Interior;
        if (via_hull != combined) ++mismatches;
        int k = 0;
        while (k < n && num[k] == 2 * m) num[k++] = -2 * m;
        if (k == n) break;
        ++num[k];
      }
      s.check(sys_name(f, n) + " box points agree with hull (" + std::to_string(points) + " pts)",
              mismatches == 0, std::to_string(mismatches) + " mismatches");
    }
  }
}

// ---------------------------------------------------------------- criterion 7
void c7_b3_witness(Sink s, const std::optional<RootSystemType>& scope) {
  if (!in_scope(scope, Family::B, 3)) return;
  RootSystem rs = build_root_system(Family::B, 3);
  IntVec d(3);
  d << 1, 0, 2;  // alpha_1 + 2 alpha_3
  RatPoint p{d, 2};
  auto hull_p = brute_hull_facets(all_roots(rs));
  auto hull_plus = brute_hull_facets(positive_roots_and_origin(rs));
  s.check("B3 half of alpha_1 + 2 alpha_3 lies on the polytope boundary",
          hull_location(hull_p, p) == Location::Boundary);
  s.check("B3 point lies outside the positive part",
          hull_location(hull_plus, p) == Location::Outside);
  std::optional<Rat> exit;
  for (const HullFacet& fct : hull_plus) {
    Int denom = fct.normal.dot(d);
    if (denom <= 0) continue;
    Rat t(fct.offset, denom);
    if (!exit || t < *exit) exit = t;
  }
  s.check("B3 ray exits the positive part at t = 1/3", exit && *exit == Rat(1, 3),
          exit ? to_string(*exit) : "no exit");
  RatPoint exit_point{d, 3};
  s.check("B3 exit point lies on the positive-part boundary",
          hull_location(hull_plus, exit_point) == Location::Boundary);
}

// ---------------------------------------------------------------- criterion 8
void c8_arrangement(Sink s, const std::optional<RootSystemType>& scope) {
  for (int n = 2; n <= 5; ++n) {
    if (!in_scope(scope, Family::A, n)) continue;
    RootSystem rs = build_root_system(Family::A, n);
    std::vector<Int> chi = characteristic_polynomial(build_arrangement(rs), n);
    std::vector<Int> expect(n + 1, 0);
    expect[0] = (n % 2 == 0 ? 1 : -1) * n;
    for (int k = 1; k <= n; ++k)
      expect[k] = ((n - k) % 2 == 0 ? 1 : -1) * binomial(n + 1, k + 1);
    s.check(sys_name(Family::A, n) + " characteristic polynomial", chi == expect);
  }
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 5; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int regions = region_count(build_arrangement(rs), n);
      s.check(sys_name(f, n) + " region count equals facet count",
              regions == expected_facets(f, n), "got " + std::to_string(regions));
    }
  }
  for (Family f : {Family::A, Family::C}) {
    if (!in_scope(scope, f, 4)) continue;
    RootSystem rs = build_root_system(f, 4);
    s.check(sys_name(f, 4) + " regions coincide with facet cones",
            regions_vs_facets(rs).coincide);
  }
  for (Family f : {Family::B, Family::D}) {
    if (!in_scope(scope, f, 4)) continue;
    RootSystem rs = build_root_system(f, 4);
    RegionsFacetsReport rep = regions_vs_facets(rs);
    bool valid = !rep.coincide && !rep.witnesses.empty();
    if (valid) {
      const SeparationWitness& w = rep.witnesses.front();
      Int hu = w.hyperplane.values.dot(w.u.coords());
      Int hv = w.hyperplane.values.dot(w.v.coords());
      valid = hu > 0 && hv < 0;
    }
    s.check(sys_name(f, 4) + " facet strictly separated by an arrangement hyperplane", valid);
  }
}

// ---------------------------------------------------------------- criterion 9
void c9_f_vector(Sink s, const std::optional<RootSystemType>& scope) {
  if (in_scope(scope, Family::A, 3)) {
    RootSystem rs = build_root_system(Family::A, 3);
    std::vector<Int> f = f_polynomial(rs);
    s.check("A3 face vector is (12, 24, 14)", f == std::vector<Int>({12, 24, 14}));
  }
  for (int n = 2; n <= 5; ++n) {
    if (!in_scope(scope, Family::A, n)) continue;
    RootSystem rs = build_root_system(Family::A, n);
    std::vector<Int> f = f_polynomial(rs);
    Int euler = 0;
    for (int i = 0; i < n; ++i) euler += (i % 2 == 0 ? 1 : -1) * f[i];
    s.check(sys_name(Family::A, n) + " Euler relation", euler == 1 - (n % 2 == 0 ? 1 : -1));
    s.check(sys_name(Family::A, n) + " top face count", f[n - 1] == expected_facets(Family::A, n));
    if (n <= 3) {
      auto hull = brute_hull_facets(all_roots(rs));
      auto pts = all_roots(rs);
      s.check(sys_name(Family::A, n) + " vertex count matches exhaustive hull",
              static_cast<Int>(hull_vertices(pts, hull).size()) == f[0]);
    }
  }
  for (int n = 2; n <= 3; ++n) {
    if (!in_scope(scope, Family::C, n)) continue;
    RootSystem rs = build_root_system(Family::C, n);
    std::vector<Int> f = f_polynomial(rs);
    auto pts = all_roots(rs);
    auto hull = brute_hull_facets(pts);
    s.check(sys_name(Family::C, n) + " vertex count matches exhaustive hull",
            static_cast<Int>(hull_vertices(pts, hull).size()) == f[0]);
    s.check(sys_name(Family::C, n) + " facet count matches exhaustive hull",
            static_cast<Int>(hull.size()) == f[n - 1]);
  }
}

// --------------------------------------------------------------- criterion 10
void c10_bijections(Sink s, const std::optional<RootSystemType>& scope) {
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 5; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      std::vector<int> apexes;
      if (f == Family::A) {
        for (int i = 1; i <= n; ++i) apexes.push_back(i);
      } else {
        apexes.push_back(n);
      }
      std::vector<RootFilter> ideals = enumerate_abelian_ideals(rs);
      for (int i : apexes) {
        auto pairs = abelian_ideals_below(rs, i);
        Int expect = f == Family::A ? binomial(n + 1, i) : Int{1} << n;
        bool ok = static_cast<Int>(pairs.size()) == expect;
        std::set<std::uint64_t> seen;
        RootFilter m = max_member(rs, i);
        std::set<std::uint64_t> expected_set;
        for (const RootFilter& id : ideals) {
          if (id.subset_of(m)) expected_set.insert(id.bits);
        }
        for (const auto& [ideal, w] : pairs) {
          if (!is_abelian_ideal(rs, ideal) || !ideal.subset_of(m)) ok = false;
          if (!seen.insert(ideal.bits).second) ok = false;
        }
        if (seen != expected_set) ok = false;
        s.check(sys_name(f, n) + " ideals below M_" + std::to_string(i) +
                    " biject with coset representatives",
                ok);
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    if (!in_scope(scope, Family::A, n)) continue;
    RootSystem rs = build_root_system(Family::A, n);
    Triangulation t = full_triangulation(rs);
    long oracle = count_anti_standard_digraphs(n);
    s.check(sys_name(Family::A, n) + " arc diagram count matches simplex count",
            oracle == static_cast<long>(t.simplices.size()),
            "digraphs " + std::to_string(oracle) + ", simplices " +
                std::to_string(t.simplices.size()));
    // bijectivity: distinct digraphs, and mapping back recovers the vertices
    std::set<std::vector<int>> keys;
    bool roundtrip = true;
    for (const Simplex& sx : t.simplices) {
      AntiStandardGraph g = simplex_to_digraph(rs, sx);
      std::vector<int> key;
      for (auto& [a, b] : g.edges) {
        key.push_back(a);
        key.push_back(b);
      }
      if (!keys.insert(key).second) roundtrip = false;
      std::vector<Root> back = digraph_to_simplex(rs, g);
      std::set<std::vector<Int>> vs, ws;
      for (const Root& r : sx.vertices)
        vs.insert(std::vector<Int>(r.coords().data(), r.coords().data() + n));
      for (const Root& r : back)
        ws.insert(std::vector<Int>(r.coords().data(), r.coords().data() + n));
      if (vs != ws) roundtrip = false;
    }
    s.check(sys_name(Family::A, n) + " simplex-digraph roundtrip is injective", roundtrip);
    long ltr = count_left_to_right_anti_standard(n);
    Triangulation tp = positive_restriction(rs, t);
    s.check(sys_name(Family::A, n) + " left-to-right diagrams match positive simplices",
            ltr == static_cast<long>(tp.simplices.size()));
  }
}

// --------------------------------------------------------------- criterion 11
void c11_propagation(Sink s, const std::optional<RootSystemType>& scope) {
  if (in_scope(scope, Family::C, 4)) {
    RootSystem rs = build_root_system(Family::C, 4);
    const int n = 4;
    std::vector<int> longs;
    for (int k = 0; k < rs.num_positive(); ++k) {
      if (rs.is_long(k)) longs.push_back(k);
    }
    RootFilter m = max_member(rs, n);
    long violations = 0;
    for (const WeylElement& w : full_group(rs)) {
      for (int lk : longs) {
        Root lambda = rs.positive(lk);
        IntVec wl = w.mat * lambda.coords();
        RootFilter up = roots_above(rs, lambda);
        RootFilter down = roots_below(rs, lambda);
        for (int t = 0; t < n; ++t) {
          if (wl[t] < 0) {
            for (int bk = 0; bk < rs.num_positive(); ++bk) {
              if (!up.test(bk)) continue;
              if ((w.mat * rs.positive_roots()[bk])[t] > 0) ++violations;
            }
          } else if (wl[t] > 0) {
            for (int bk = 0; bk < rs.num_positive(); ++bk) {
              if (!down.test(bk) || !m.test(bk)) continue;
              if ((w.mat * rs.positive_roots()[bk])[t] < 0) ++violations;
            }
          }
        }
      }
    }
    s.check("C4 long-root sign propagation across the whole group", violations == 0,
            std::to_string(violations) + " violations");
  }
  for (Family f : {Family::A, Family::C}) {
    if (!in_scope(scope, f, 4)) continue;
    RootSystem rs = build_root_system(f, 4);
    std::vector<int> apexes;
    if (f == Family::A) {
      for (int i = 1; i <= 4; ++i) apexes.push_back(i);
    } else {
      apexes.push_back(4);
    }
    long violations = 0;
    for (int i : apexes) {
      RootFilter m = max_member(rs, i);
      std::vector<int> cells;
      for (int k = 0; k < rs.num_positive(); ++k) {
        if (m.test(k)) cells.push_back(k);
      }
      for (const WeylElement& w : minimal_coset_reps(rs, i)) {
        for (int a : cells) {
          for (int b : cells) {
            if (!rs.leq(a, b)) continue;  // a <= b
            IntVec diff = w.mat * (rs.positive_roots()[b] - rs.positive_roots()[a]);
            if ((diff.array() < 0).any()) ++violations;
          }
        }
      }
    }
    s.check(sys_name(f, 4) + " coset representatives preserve the order on M_i",
            violations == 0, std::to_string(violations) + " violations");
  }
  for (Family f : {Family::A, Family::C}) {
    for (int n = 2; n <= 6; ++n) {
      if (!in_scope(scope, f, n)) continue;
      RootSystem rs = build_root_system(f, n);
      Int total = 0;
      for (int i : rs.long_simple_indices()) total += members_of_I_ab(rs, i).size();
      s.check(sys_name(f, n) + " apex classes hold 2^(n-1) ideals in total",
              total == Int{1} << (n - 1), "got " + std::to_string(total));
    }
  }
}

}  // namespace

const char* criterion_label(int k) {
  switch (k) {
    case 1: return "facet counts match closed forms";
    case 2: return "full triangulation sizes";
    case 3: return "positive triangulation sizes";
    case 4: return "unimodularity of every simplex";
    case 5: return "volume partition against the fan oracle";
    case 6: return "halfspace model matches exhaustive hulls on a box";
    case 7: return "type B boundary point escaping the positive part";
    case 8: return "characteristic polynomials, regions, and separations";
    case 9: return "face vectors";
    case 10: return "coset and arc-diagram bijections";
    case 11: return "sign and order propagation, class totals";
  }
  return "unknown";
}

std::vector<Item> run_criterion(int k, std::optional<RootSystemType> scope) {
  std::vector<Item> items;
  Sink s{&items, k};
  switch (k) {
    case 1: c1_facet_counts(s, scope); break;
    case 2: c2_triangulation_counts(s, scope); break;
    case 3: c3_positive_counts(s, scope); break;
    case 4: c4_unimodularity(s, scope); break;
    case 5: c5_volume_partition(s, scope); break;
    case 6: c6_box_membership(s, scope); break;
    case 7: c7_b3_witness(s, scope); break;
    case 8: c8_arrangement(s, scope); break;
    case 9: c9_f_vector(s, scope); break;
    case 10: c10_bijections(s, scope); break;
    case 11: c11_propagation(s, scope); break;
    default: throw std::invalid_argument("criterion out of range");
  }
  return items;
}

std::vector<Item> run_all() {
  std::vector<Item> all;
  for (int k = 1; k <= num_criteria; ++k) {
    std::vector<Item> items = run_criterion(k);
    all.insert(all.end(), items.begin(), items.end());
  }
  return all;
}

std::vector<Item> run_for(RootSystemType t) {
  std::vector<Item> all;
  for (int k = 1; k <= num_criteria; ++k) {
    std::vector<Item> items = run_criterion(k, t);
    all.insert(all.end(), items.begin(), items.end());
  }
  return all;
}

}  // namespace rootpoly::verify
