#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootpoly/ideals.hpp"
#include "rootpoly/weyl.hpp"

#include <bit>
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

// membership in the standard parabolic subgroup generated by {s_j : j != i}:
// all inversions of u avoid the alpha_i coordinate
bool in_parabolic(const RootSystem& rs, const WeylElement& u, int i) {
  std::uint64_t inv = inversion_set(rs, u);
  for (int k = 0; k < rs.num_positive(); ++k) {
    if ((inv >> k) & 1) {
      if (rs.positive_roots()[k][i - 1] != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("simple reflections act by the Cartan convention") {
  RootSystem rs = build_root_system(Family::C, 2);
  WeylElement s1 = simple_reflection(rs, 1);
  CHECK(apply(rs, s1, rs.simple(2)).coords() == vec({2, 1}));
  CHECK(apply(rs, s1, rs.simple(1)).coords() == vec({-1, 0}));
  CHECK(same_element(compose(s1, s1), identity_element(rs)));

  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    int n = f == Family::D ? 4 : 3;
    RootSystem r = build_root_system(f, n);
    for (int i = 1; i <= n; ++i) {
      WeylElement s = simple_reflection(r, i);
      CHECK(s.mat * s.mat == IntMat::Identity(n, n));
      CHECK(s.mat == s.inv);
      // s_i permutes the positive roots other than alpha_i
      for (int k = 0; k < r.num_positive(); ++k) {
        Root image = apply(r, s, r.positive(k));
        if (r.positive_roots()[k] == r.simple(i).coords())
          CHECK(image.coords() == IntVec(-r.simple(i).coords()));
        else
          CHECK(image.positive());
      }
    }
  }
}

TEST_CASE("composition, inversion and words") {
  RootSystem rs = build_root_system(Family::B, 3);
  WeylElement w = compose(simple_reflection(rs, 1),
                          compose(simple_reflection(rs, 2), simple_reflection(rs, 3)));
  CHECK(w.word == std::vector<int>({1, 2, 3}));
  CHECK(w.mat * w.inv == IntMat::Identity(3, 3));
  WeylElement wi = inverse(w);
  CHECK(wi.mat == w.inv);
  CHECK(wi.word == std::vector<int>({3, 2, 1}));
  CHECK(same_element(compose(w, wi), identity_element(rs)));
  // leftmost factor first: w(alpha) = s1(s2(s3(alpha)))
  Root image = apply(rs, w, rs.simple(3));
  Root by_hand = apply(rs, simple_reflection(rs, 1),
                       apply(rs, simple_reflection(rs, 2),
                             apply(rs, simple_reflection(rs, 3), rs.simple(3))));
  CHECK(image.coords() == by_hand.coords());
}

TEST_CASE("root reflections fix the orthogonal complement") {
  RootSystem rs = build_root_system(Family::D, 4);
  WeylElement t = root_reflection(rs, rs.theta());
  CHECK(apply(rs, t, rs.theta()).coords() == IntVec(-rs.marks()));
  for (int k = 0; k < rs.num_positive(); ++k) {
    const IntVec& b = rs.positive_roots()[k];
    if (rs.inner(b, rs.marks()) == 0) CHECK(t.mat * b == b);
  }
  CHECK(same_element(compose(t, t), identity_element(rs)));
  // reflection in a simple root coincides with the simple reflection
  for (int i = 1; i <= 4; ++i)
    CHECK(same_element(root_reflection(rs, rs.simple(i)), simple_reflection(rs, i)));
}

TEST_CASE("inversion set of s1 s2 in A2") {
  RootSystem rs = build_root_system(Family::A, 2);
  WeylElement w = compose(simple_reflection(rs, 1), simple_reflection(rs, 2));
  // canonical order: [alpha_2, alpha_1, theta]; N(w) = {alpha_1, theta}
  CHECK(*rs.index_of(rs.simple(1).coords()) == 1);
  CHECK(inversion_set(rs, w) == 0b110u);
  CHECK(length(rs, w) == 2);
  CHECK(co_inversion_set(rs, w) == inversion_set(rs, inverse(w)));
}

TEST_CASE("lengths count inversions and inversion sets are biconvex") {
  for (Family f : {Family::A, Family::B}) {
    RootSystem rs = build_root_system(f, 3);
    std::vector<WeylElement> group = full_group(rs);
    for (const WeylElement& w : group) {
      std::uint64_t inv = inversion_set(rs, w);
      CHECK(length(rs, w) == std::popcount(inv));
      CHECK(static_cast<int>(w.word.size()) == length(rs, w));  // BFS words are reduced
      for (int a = 0; a < rs.num_positive(); ++a) {
        for (int b = 0; b < rs.num_positive(); ++b) {
          int s = rs.sum_index(a, b);
          if (s < 0) continue;
          bool ina = (inv >> a) & 1, inb = (inv >> b) & 1, ins = (inv >> s) & 1;
          if (ina && inb) CHECK(ins);
          if (!ina && !inb) CHECK_FALSE(ins);
        }
      }
    }
  }
}

TEST_CASE("full group sizes") {
  CHECK(full_group(build_root_system(Family::A, 2)).size() == 6);
  CHECK(full_group(build_root_system(Family::A, 3)).size() == 24);
  CHECK(full_group(build_root_system(Family::B, 2)).size() == 8);
  CHECK(full_group(build_root_system(Family::B, 3)).size() == 48);
  CHECK(full_group(build_root_system(Family::C, 3)).size() == 48);
  CHECK(full_group(build_root_system(Family::D, 3)).size() == 24);
  CHECK(full_group(build_root_system(Family::D, 4)).size() == 192);
  // elements are pairwise distinct
  RootSystem rs = build_root_system(Family::B, 3);
  std::set<std::vector<Int>> keys;
  for (const WeylElement& w : full_group(rs)) {
    std::vector<Int> key(w.mat.data(), w.mat.data() + 9);
    CHECK(keys.insert(key).second);
    CHECK(w.mat * w.inv == IntMat::Identity(3, 3));
  }
}

TEST_CASE("right descents match length drops") {
  RootSystem rs = build_root_system(Family::B, 2);
  CHECK(right_descents(rs, identity_element(rs)).empty());
  for (const WeylElement& w : full_group(rs)) {
    std::vector<int> descents = right_descents(rs, w);
    std::set<int> ds(descents.begin(), descents.end());
    for (int i = 1; i <= 2; ++i) {
      bool drop = length(rs, compose(w, simple_reflection(rs, i))) < length(rs, w);
      CHECK(ds.count(i) == (drop ? 1u : 0u));
    }
  }
}

TEST_CASE("minimal coset representatives: counts and characterization") {
  RootSystem a3 = build_root_system(Family::A, 3);
  CHECK(minimal_coset_reps(a3, 1).size() == 4);
  CHECK(minimal_coset_reps(a3, 2).size() == 6);
  CHECK(minimal_coset_reps(a3, 3).size() == 4);
  CHECK(minimal_coset_reps(build_root_system(Family::A, 4), 2).size() == 10);
  CHECK(minimal_coset_reps(build_root_system(Family::C, 3), 3).size() == 8);
  CHECK(minimal_coset_reps(build_root_system(Family::B, 3), 1).size() == 6);

  for (int i = 1; i <= 3; ++i) {
    for (const WeylElement& w : minimal_coset_reps(a3, i)) {
      // w sends every simple root except alpha_i to a positive root
      for (int j = 1; j <= 3; ++j) {
        if (j == i) continue;
        CHECK(apply(a3, w, a3.simple(j)).positive());
      }
      CHECK(static_cast<int>(w.word.size()) == length(a3, w));
    }
  }
}

TEST_CASE("cosets partition the group") {
  for (Family f : {Family::A, Family::C}) {
    RootSystem rs = build_root_system(f, 3);
    std::vector<WeylElement> group = full_group(rs);
    for (int i = 1; i <= 3; ++i) {
      std::vector<WeylElement> reps = minimal_coset_reps(rs, i);
      long parabolic_order = 0;
      for (const WeylElement& u : group)
        if (in_parabolic(rs, u, i)) ++parabolic_order;
      CHECK(reps.size() * parabolic_order == group.size());
      // each group element lies in exactly one coset, and the rep is the
      // shortest member of that coset
      for (const WeylElement& u : group) {
        int hits = 0;
        for (const WeylElement& w : reps) {
          WeylElement v = compose(inverse(w), u);
          if (in_parabolic(rs, v, i)) {
            ++hits;
            CHECK(length(rs, w) <= length(rs, u));
          }
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("coset representatives stay below the top cell") {
  // for marks m_i = 1, every root w sends negative lies in M_i
  auto check_sys = [](const RootSystem& rs, int i) {
    RootFilter m = max_member(rs, i);
    for (const WeylElement& w : minimal_coset_reps(rs, i)) {
      std::uint64_t nbar = co_inversion_set(rs, w);
      CHECK((nbar & ~m.bits) == 0);
    }
  };
  RootSystem a3 = build_root_system(Family::A, 3);
  for (int i = 1; i <= 3; ++i) check_sys(a3, i);
  check_sys(build_root_system(Family::C, 3), 3);
  check_sys(build_root_system(Family::B, 3), 1);
}

TEST_CASE("covector action is contragredient to the root action") {
  RootSystem rs = build_root_system(Family::B, 2);
  for (const WeylElement& w : full_group(rs)) {
    for (int i = 1; i <= 2; ++i) {
      Covector f = fundamental_coweight(rs, i);
      Covector wf = apply(rs, w, f);
      for (int k = 0; k < rs.num_positive(); ++k) {
        Root r = rs.positive(k);
        Root wr = apply(rs, w, r);
        CHECK(wf.values.dot(wr.coords()) == f.values.dot(r.coords()));
      }
    }
  }
}

TEST_CASE("fundamental coweights are the coordinate functionals") {
  RootSystem rs = build_root_system(Family::C, 3);
  for (int i = 1; i <= 3; ++i) {
    Covector f = fundamental_coweight(rs, i);
    for (int j = 1; j <= 3; ++j) CHECK(f.values.dot(rs.simple(j).coords()) == (i == j ? 1 : 0));
  }
}

TEST_CASE("covector orbits have parabolic-index size") {
  for (Family f : {Family::A, Family::B, Family::C}) {
    RootSystem rs = build_root_system(f, 3);
    for (int i = 1; i <= 3; ++i) {
      std::vector<Covector> orbit = orbit_covector(rs, fundamental_coweight(rs, i), false);
      CHECK(orbit.size() == minimal_coset_reps(rs, i).size());
      std::set<std::vector<Int>> keys;
      for (const Covector& c : orbit) {
        std::vector<Int> key(c.values.data(), c.values.data() + 3);
        CHECK(keys.insert(key).second);
      }
      // sign-deduplicated orbits identify f with -f
      std::vector<Covector> half = orbit_covector(rs, fundamental_coweight(rs, i), true);
      CHECK(half.size() * 2 >= orbit.size());
      for (const Covector& c : half) {
        bool is_member = keys.count(std::vector<Int>(c.values.data(), c.values.data() + 3)) > 0;
        IntVec neg = -c.values;
        bool neg_member = keys.count(std::vector<Int>(neg.data(), neg.data() + 3)) > 0;
        CHECK((is_member || neg_member));
      }
    }
  }
}
