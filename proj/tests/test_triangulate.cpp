#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootpoly/diagram.hpp"
#include "rootpoly/oracle.hpp"
#include "rootpoly/triangulate.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace rootpoly;

namespace {

IntVec vec(std::initializer_list<Int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int k = 0;
  for (Int x : xs) v[k++] = x;
  return v;
}

std::set<std::vector<Int>> vertex_key(const Simplex& s) {
  std::set<std::vector<Int>> key;
  for (const Root& r : s.vertices)
    key.insert(std::vector<Int>(r.coords().data(), r.coords().data() + r.coords().size()));
  return key;
}

std::vector<IntVec> filter_points(const RootSystem& rs, const RootFilter& f) {
  std::vector<IntVec> pts;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (f.test(k)) pts.push_back(rs.positive_roots()[k]);
  return pts;
}

}  // namespace

TEST_CASE("facet triangulation of A3 at apex 2, pinned") {
  RootSystem rs = build_root_system(Family::A, 3);
  Triangulation t = facet_triangulation(rs, 2);
  REQUIRE(t.simplices.size() == 2);
  std::set<std::set<std::vector<Int>>> keys;
  for (const Simplex& s : t.simplices) {
    CHECK(s.apex == 2);
    CHECK(normalized_volume(rs, s.vertices) == 1);
    keys.insert(vertex_key(s));
  }
  std::set<std::set<std::vector<Int>>> expect{
      {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}},
      {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}},
  };
  CHECK(keys == expect);
}

TEST_CASE("triangulation sizes at small rank") {
  struct Case {
    Family f;
    int n;
    std::size_t full, positive;
  };
  for (Case c : {Case{Family::A, 1, 2, 1}, Case{Family::A, 2, 6, 2}, Case{Family::A, 3, 20, 5},
                 Case{Family::C, 2, 8, 3}, Case{Family::C, 3, 32, 10}}) {
    RootSystem rs = build_root_system(c.f, c.n);
    Triangulation t = full_triangulation(rs);
    CHECK(t.simplices.size() == c.full);
    CHECK(positive_restriction(rs, t).simplices.size() == c.positive);
    std::set<std::set<std::vector<Int>>> keys;
    for (const Simplex& s : t.simplices) {
      CHECK(normalized_volume(rs, s.vertices) == 1);
      CHECK(keys.insert(vertex_key(s)).second);  // no simplex appears twice
    }
  }
  CHECK_THROWS_AS(full_triangulation(build_root_system(Family::B, 3)), Error);
  CHECK_THROWS_AS(facet_triangulation(build_root_system(Family::D, 4), 1), Error);
}

TEST_CASE("normalized volume needs exactly n vertices") {
  RootSystem rs = build_root_system(Family::A, 3);
  std::vector<Root> two{rs.positive(0), rs.positive(1)};
  CHECK_THROWS_AS(normalized_volume(rs, two), std::invalid_argument);
}

TEST_CASE("halfspace model bounds every root and is tight on facets") {
  struct Case {
    Family f;
    int n;
    std::size_t facets;
  };
  for (Case c : {Case{Family::A, 2, 6}, Case{Family::A, 3, 14}, Case{Family::C, 2, 4},
                 Case{Family::C, 3, 8}}) {
    RootSystem rs = build_root_system(c.f, c.n);
    HalfspaceModel model = halfspace_model(rs);
    CHECK(model.inequalities.size() == c.facets);
    for (int k = 0; k < rs.num_positive(); ++k) {
      CHECK(location(model, {rs.positive_roots()[k], 1}) == Location::Boundary);
      CHECK(location(model, {IntVec(-rs.positive_roots()[k]), 1}) == Location::Boundary);
    }
    CHECK(location(model, {IntVec::Zero(c.n), 1}) == Location::Interior);
    // each inequality is tight on roots affinely spanning a facet: their
    // differences from the first tight root fill n-1 dimensions
    for (const auto& [g, bound] : model.inequalities) {
      std::vector<IntVec> tight;
      for (int k = 0; k < rs.num_positive(); ++k) {
        for (IntVec b : {IntVec(rs.positive_roots()[k]), IntVec(-rs.positive_roots()[k])}) {
          if (g.values.dot(b) == bound) tight.push_back(b);
        }
      }
      REQUIRE(tight.size() >= static_cast<std::size_t>(c.n));
      IntMat diffs(static_cast<int>(tight.size()) - 1, c.n);
      for (std::size_t r = 1; r < tight.size(); ++r)
        diffs.row(static_cast<int>(r) - 1) = (tight[r] - tight[0]).transpose();
      CHECK(rank_exact(diffs) == c.n - 1);
    }
  }
}

TEST_CASE("halfspace model agrees with the exhaustive hull") {
  for (Family f : {Family::A, Family::C}) {
    RootSystem rs = build_root_system(f, 2);
    HalfspaceModel model = halfspace_model(rs);
    std::vector<IntVec> pts;
    for (const IntVec& r : rs.positive_roots()) {
      pts.push_back(r);
      pts.push_back(-r);
    }
    auto hull = brute_hull_facets(pts);
    for (Int x = -6; x <= 6; ++x) {
      for (Int y = -6; y <= 6; ++y) {
        RatPoint p{vec({x, y}), 2};
        CHECK(location(model, p) == hull_location(hull, p));
      }
    }
  }
}

TEST_CASE("positive cone location") {
  CHECK(positive_cone_location({vec({1, 2, 3}), 2}) == Location::Interior);
  CHECK(positive_cone_location({vec({1, 0, 3}), 1}) == Location::Boundary);
  CHECK(positive_cone_location({vec({1, -1, 3}), 5}) == Location::Outside);
}

TEST_CASE("face numbers, pinned and structural") {
  CHECK(f_polynomial(build_root_system(Family::A, 2)) == std::vector<Int>({6, 6}));
  CHECK(f_polynomial(build_root_system(Family::A, 3)) == std::vector<Int>({12, 24, 14}));
  CHECK(f_polynomial(build_root_system(Family::C, 2)) == std::vector<Int>({4, 4}));
  CHECK(f_polynomial(build_root_system(Family::C, 3)) == std::vector<Int>({6, 12, 8}));
  CHECK_THROWS_AS(f_polynomial(build_root_system(Family::B, 3)), Error);
  for (int n = 2; n <= 6; ++n) {
    for (Family f : {Family::A, Family::C}) {
      std::vector<Int> fv = f_polynomial(build_root_system(f, n));
      Int euler = 0;
      for (int i = 0; i < n; ++i) euler += (i % 2 == 0 ? 1 : -1) * fv[i];
      CHECK(euler == 1 - (n % 2 == 0 ? 1 : -1));  // sphere Euler characteristic
    }
  }
}

TEST_CASE("arc diagrams are in bijection with simplices") {
  for (int n : {2, 3, 4}) {
    RootSystem rs = build_root_system(Family::A, n);
    Triangulation t = full_triangulation(rs);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const Simplex& s : t.simplices) {
      AntiStandardGraph g = simplex_to_digraph(rs, s);
      CHECK(g.vertices == n + 1);
      CHECK(g.edges.size() == static_cast<std::size_t>(n));
      CHECK(seen.insert(g.edges).second);
      std::vector<Root> back = digraph_to_simplex(rs, g);
      std::set<std::vector<Int>> a, b;
      for (const Root& r : s.vertices)
        a.insert(std::vector<Int>(r.coords().data(), r.coords().data() + n));
      for (const Root& r : back)
        b.insert(std::vector<Int>(r.coords().data(), r.coords().data() + n));
      CHECK(a == b);
    }
    CHECK(seen.size() == t.simplices.size());
  }
}

TEST_CASE("malformed arc diagrams are rejected") {
  RootSystem rs = build_root_system(Family::A, 3);
  auto graph = [](std::vector<std::pair<int, int>> edges) {
    AntiStandardGraph g;
    g.vertices = 4;
    g.edges = std::move(edges);
    return g;
  };
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 2}, {3, 4}})), Error);  // too few arcs
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 2}, {2, 3}, {3, 4}})), Error);  // source+target
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 4}, {2, 3}, {2, 4}})), Error);  // not monotone
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 2}, {1, 2}, {3, 4}})), Error);  // duplicate
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 5}, {2, 4}, {3, 4}})), Error);  // out of range
  CHECK_THROWS_AS(digraph_to_simplex(rs, graph({{1, 1}, {2, 4}, {3, 4}})), Error);  // loop

  // a valid all-reversed diagram maps to negative roots
  std::vector<Root> verts = digraph_to_simplex(rs, graph({{2, 1}, {3, 1}, {4, 1}}));
  for (const Root& r : verts) CHECK_FALSE(r.positive());
  CHECK_THROWS_AS(simplex_to_digraph(build_root_system(Family::C, 2), Simplex{}), Error);
}

TEST_CASE("standard antipode mirrors the top-cell columns") {
  for (int n : {3, 4}) {
    RootSystem rs = build_root_system(Family::A, n);
    for (int i = 1; i <= n; ++i) {
      WeylElement sigma = standard_antipode(rs, i);
      CHECK(same_element(compose(sigma, sigma), identity_element(rs)));
      RootFilter m = max_member(rs, i);
      for (int k = 0; k < rs.num_positive(); ++k) {
        if (!m.test(k)) continue;
        auto [row, col] = diagram_of(rs, rs.positive(k));
        Root image = apply(rs, sigma, rs.positive(k));
        auto [irow, icol] = diagram_of(rs, image);
        CHECK(irow == row);
        CHECK(icol == i + 1 - col);
      }
    }
  }
  CHECK(same_element(standard_antipode(build_root_system(Family::A, 4), 1),
                     identity_element(build_root_system(Family::A, 4))));
  CHECK_THROWS_AS(standard_antipode(build_root_system(Family::C, 3), 3), Error);
  CHECK_THROWS_AS(standard_antipode(build_root_system(Family::A, 3), 4), Error);
}

TEST_CASE("volume reports") {
  VolumeReport a2 = volume_report(build_root_system(Family::A, 2));
  CHECK(a2.vol_P_over_vol_Pi == 6);
  CHECK(a2.vol_Pplus_over_vol_P == Rat(1, 3));
  VolumeReport a3 = volume_report(build_root_system(Family::A, 3));
  CHECK(a3.vol_P_over_vol_Pi == 20);
  CHECK(a3.vol_Pplus_over_vol_P == Rat(1, 4));
  VolumeReport c2 = volume_report(build_root_system(Family::C, 2));
  CHECK(c2.vol_P_over_vol_Pi == 8);
  CHECK(c2.vol_Pplus_over_vol_P == Rat(3, 8));
  VolumeReport c3 = volume_report(build_root_system(Family::C, 3));
  CHECK(c3.vol_P_over_vol_Pi == 32);
  CHECK(c3.vol_Pplus_over_vol_P == Rat(5, 16));
  CHECK(c3.exponents_ratio == Rat(15, 48));  // reduced internally
}

TEST_CASE("ideal hulls triangulate the cone over the ideal") {
  struct Case {
    Family f;
    int n;
  };
  for (Case c : {Case{Family::A, 3}, Case{Family::C, 3}}) {
    RootSystem rs = build_root_system(c.f, c.n);
    for (const RootFilter& f : enumerate_abelian_ideals(rs)) {
      if (!classify_ideal(rs, f)) continue;
      Triangulation t = ideal_hull_triangulation(rs, f);
      CHECK(!t.simplices.empty());
      Int total = 0;
      for (const Simplex& s : t.simplices) total += normalized_volume(rs, s.vertices);
      CHECK(total == coned_volume(filter_points(rs, f)));
    }
  }
}

TEST_CASE("ideal hulls: pinned one-simplex cases and the top cells") {
  RootSystem a3 = build_root_system(Family::A, 3);
  RootFilter ia;
  for (const IntVec& v : {vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 1, 1})})
    ia.set(*a3.index_of(v));
  CHECK(ideal_hull_triangulation(a3, ia).simplices.size() == 1);

  RootSystem c2 = build_root_system(Family::C, 2);
  RootFilter ic;
  for (const IntVec& v : {vec({1, 1}), vec({2, 1})}) ic.set(*c2.index_of(v));
  CHECK(ideal_hull_triangulation(c2, ic).simplices.size() == 1);

  // the hull of a top cell is its facet triangulation
  for (int i = 1; i <= 3; ++i) {
    Triangulation hull = ideal_hull_triangulation(a3, max_member(a3, i));
    Triangulation facet = facet_triangulation(a3, i);
    REQUIRE(hull.simplices.size() == facet.simplices.size());
    for (std::size_t k = 0; k < hull.simplices.size(); ++k)
      CHECK(vertex_key(hull.simplices[k]) == vertex_key(facet.simplices[k]));
  }

  RootFilter top;
  top.set(c2.highest_root_index());
  CHECK_THROWS_AS(ideal_hull_triangulation(c2, top), Error);  // no apex
}

TEST_CASE("swapping a coset representative preserves volume but can break positivity") {
  RootSystem rs = build_root_system(Family::A, 3);
  std::vector<int> apexes{1, 2, 3};
  // precompute borders per apex
  std::vector<std::vector<std::vector<Root>>> borders(4);
  for (int i : apexes)
    for (const RootFilter& m : members_of_I_ab(rs, i)) borders[i].push_back(border(rs, m));

  bool positivity_broke = false;
  for (int i : apexes) {
    std::vector<WeylElement> reps = minimal_coset_reps(rs, i);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (int j = 1; j <= 3; ++j) {
        if (j == i) continue;
        // replace reps[r] by another member of the same coset
        std::vector<WeylElement> twisted = reps;
        twisted[r] = compose(reps[r], simple_reflection(rs, j));
        std::size_t count = 0;
        Int volume = 0;
        std::size_t positive = 0;
        for (int a : apexes) {
          const std::vector<WeylElement>& use = (a == i) ? twisted : minimal_coset_reps(rs, a);
          for (const WeylElement& w : use) {
            for (const std::vector<Root>& b : borders[a]) {
              std::vector<Root> verts;
              bool all_positive = true;
              for (const Root& x : b) {
                verts.push_back(apply(rs, w, x));
                all_positive = all_positive && verts.back().positive();
              }
              ++count;
              volume += normalized_volume(rs, verts);
              if (all_positive) ++positive;
            }
          }
        }
        CHECK(count == 20);
        CHECK(volume == 20);  // any coset member carries the facet cone onto itself
        if (positive != 5) positivity_broke = true;
      }
    }
  }
  CHECK(positivity_broke);  // the minimal representative is essential for the positive part
}
