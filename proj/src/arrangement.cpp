#include "rootpoly/arrangement.hpp"

#include "rootpoly/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootpoly {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("arrangement: ") + what);
}

IntMat rows_from(const std::vector<IntVec>& v) {
  IntMat m(v.size(), v.empty() ? 0 : v[0].size());
  for (std::size_t i = 0; i < v.size(); ++i) m.row(i) = v[i].transpose();
  return m;
}

std::vector<Int> mat_key(const IntMat& m) {
  std::vector<Int> k{m.rows(), m.cols()};
  k.insert(k.end(), m.data(), m.data() + m.size());
  return k;
}

// rowspace(a) subseteq rowspace(b)?
bool rowspace_subset(const IntMat& a, const IntMat& b) {
  IntMat stacked(a.rows() + b.rows(), b.cols());
  stacked.topRows(a.rows()) = a;
  stacked.bottomRows(b.rows()) = b;
  return rank_exact(stacked) == static_cast<int>(b.rows());
}

}  // namespace

std::vector<std::pair<int, int>> codim2_index_pairs(const RootSystem& rs) {
  const int n = rs.n();
  if (n < 2) fail(ErrorCode::InvalidRank, "codim-2 faces need rank at least 2");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // connectivity of the extended diagram restricted to {0..n} \ {i, j}
      std::vector<bool> removed(n + 1, false);
      removed[i] = removed[j] = true;
      std::vector<int> stack{0};
      std::vector<bool> seen(n + 1, false);
      seen[0] = true;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [x, y] : rs.extended_edges()) {
          int other = -1;
          if (x == v) other = y;
          else if (y == v) other = x;
          if (other >= 0 && !removed[other] && !seen[other]) {
            seen[other] = true;
            ++reached;
            stack.push_back(other);
          }
        }
      }
      if (reached == n - 1) out.emplace_back(i, j);
    }
  }
  return out;
}

RootFilter codim2_face_roots(const RootSystem& rs, int i, int j) {
  RootFilter f;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const IntVec& c = rs.positive_roots()[k];
    if (c[i - 1] == rs.mark(i) && c[j - 1] == rs.mark(j)) f.set(k);
  }
  return f;
}

std::vector<Hyperplane> build_arrangement(const RootSystem& rs) {
  std::set<std::vector<Int>> seen;
  std::vector<Hyperplane> out;
  for (auto [i, j] : codim2_index_pairs(rs)) {
    std::vector<IntVec> span;
    for (const Root& r : filter_roots(rs, codim2_face_roots(rs, i, j))) span.push_back(r.coords());
    check(rank_exact(rows_from(span)) == rs.n() - 1, "codim-2 face roots must span a hyperplane");
    std::vector<IntVec> ker = kernel_basis(rows_from(span));
    check(ker.size() == 1, "hyperplane normal must be unique");
    Covector seed{primitive_signed(ker[0])};
    for (const Covector& g : orbit_covector(rs, seed, /*dedup_sign=*/true)) {
      std::vector<Int> key(g.values.data(), g.values.data() + rs.n());
      if (seen.insert(key).second) out.push_back({g});
    }
  }
  std::sort(out.begin(), out.end(), [](const Hyperplane& a, const Hyperplane& b) {
    return lex_less(a.normal.values, b.normal.values);
  });
  return out;
}

IntersectionPoset intersection_poset(const std::vector<Hyperplane>& hs, int n) {
  std::map<std::vector<Int>, IntMat> elements;
  IntMat ambient(0, n);
  elements.emplace(mat_key(ambient), ambient);
  std::vector<IntMat> work{ambient};
  while (!work.empty()) {
    std::vector<IntMat> next;
    for (const IntMat& x : work) {
      for (const Hyperplane& h : hs) {
        IntMat stacked(x.rows() + 1, n);
        stacked.topRows(x.rows()) = x;
        stacked.bottomRows(1) = h.normal.values.transpose();
        IntMat y = row_basis(stacked).rows;
        if (elements.emplace(mat_key(y), y).second) next.push_back(y);
      }
    }
    work = std::move(next);
  }

  IntersectionPoset poset;
  for (auto& [key, basis] : elements) {
    PosetElement e;
    e.rank = static_cast<int>(basis.rows());
    e.basis = basis;
    poset.elements.push_back(std::move(e));
  }
  std::sort(poset.elements.begin(), poset.elements.end(),
            [](const PosetElement& a, const PosetElement& b) {
              if (a.rank != b.rank) return a.rank < b.rank;
              return mat_key(a.basis) < mat_key(b.basis);
            });
  // Moebius bottom-up over reverse inclusion of subspaces: y below x exactly
  // when y's covector rowspace is strictly contained in x's.
  for (std::size_t xi = 0; xi < poset.elements.size(); ++xi) {
    PosetElement& x = poset.elements[xi];
    if (x.rank == 0) {
      x.moebius = 1;
      continue;
    }
    Int acc = 0;
    for (std::size_t yi = 0; yi < poset.elements.size(); ++yi) {
      if (yi == xi) continue;
      const PosetElement& y = poset.elements[yi];
      if (y.rank >= x.rank) continue;
      if (rowspace_subset(y.basis, x.basis)) acc += y.moebius;
    }
    x.moebius = -acc;
  }
  return poset;
}

std::vector<Int> characteristic_polynomial(const std::vector<Hyperplane>& hs, int n) {
  IntersectionPoset poset = intersection_poset(hs, n);
  std::vector<Int> coeff(n + 1, 0);
  for (const PosetElement& e : poset.elements) coeff[n - e.rank] += e.moebius;
  return coeff;
}

Int region_count(const std::vector<Hyperplane>& hs, int n) {
  std::vector<Int> chi = characteristic_polynomial(hs, n);
  Int value = 0;
  Int sign = 1;  // (-1)^k at power k
  for (int k = 0; k <= n; ++k) {
    value += sign * chi[k];
    sign = -sign;
  }
  // r = (-1)^n chi(-1)
  return (n % 2 == 0) ? value : -value;
}

std::vector<Int> face_polynomial_A(const RootSystem& rs) {
  if (rs.family() != Family::A)
    fail(ErrorCode::WrongType, "face polynomial closed form covers type A only");
  const int n = rs.n();
  std::vector<Int> coeff(n + 1, 0);
  coeff[0] = 1;
  for (int i = 1; i <= n; ++i) coeff[i] = binomial(n + 1, i + 1) * ((Int{1} << (i + 1)) - 2);
  return coeff;
}

RegionsFacetsReport regions_vs_facets(const RootSystem& rs) {
  std::vector<Hyperplane> hs = build_arrangement(rs);
  // roots on each facet of conv(Phi)
  std::vector<std::vector<Root>> facet_roots;
  if (rs.family() == Family::A || rs.family() == Family::C) {
    std::vector<int> apexes;
    if (rs.family() == Family::A) {
      for (int i = 1; i <= rs.n(); ++i) apexes.push_back(i);
    } else {
      apexes.push_back(rs.n());
    }
    for (int i : apexes) {
      std::vector<Root> m = filter_roots(rs, max_member(rs, i));
      for (const WeylElement& w : minimal_coset_reps(rs, i)) {
        std::vector<Root> img;
        img.reserve(m.size());
        for (const Root& r : m) img.push_back(apply(rs, w, r));
        facet_roots.push_back(std::move(img));
      }
    }
  } else {
    std::vector<IntVec> all;
    for (const IntVec& r : rs.positive_roots()) {
      all.push_back(r);
      all.push_back(-r);
    }
    for (const HullFacet& f : brute_hull_facets(all)) {
      std::vector<Root> on;
      for (int idx : f.incident) on.push_back(rs.root(all[idx]));
      facet_roots.push_back(std::move(on));
    }
  }

  RegionsFacetsReport report;
  for (std::size_t fid = 0; fid < facet_roots.size(); ++fid) {
    for (const Hyperplane& h : hs) {
      const Root* pos = nullptr;
      const Root* neg = nullptr;
      for (const Root& r : facet_roots[fid]) {
        Int v = h.normal.values.dot(r.coords());
        if (v > 0 && !pos) pos = &r;
        if (v < 0 && !neg) neg = &r;
      }
      if (pos && neg) {
        report.coincide = false;
        report.witnesses.push_back({h.normal, static_cast<int>(fid), *pos, *neg});
      }
    }
  }
  return report;
}

SubsystemReport parabolic_closure(const RootSystem& rs, const std::vector<Root>& roots) {
  if (roots.empty()) fail(ErrorCode::NotPositiveRoot, "closure of an empty set");
  std::vector<IntVec> span;
  for (const Root& r : roots) span.push_back(r.coords());
  const int d = rank_exact(rows_from(span));

  SubsystemReport rep;
  for (int k = 0; k < rs.num_positive(); ++k) {
    std::vector<IntVec> ext = span;
    ext.push_back(rs.positive_roots()[k]);
    if (rank_exact(rows_from(ext)) == d) rep.positive_roots.push_back(rs.positive(k));
  }

  // simple system: members that are not sums of two members
  for (const Root& g : rep.positive_roots) {
    bool decomposable = false;
    for (const Root& a : rep.positive_roots) {
      IntVec diff = g.coords() - a.coords();
      if (diff.isZero()) continue;
      for (const Root& b : rep.positive_roots) {
        if (diff == b.coords()) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) break;
    }
    if (!decomposable) rep.simple_system.push_back(g);
  }

  // Dynkin classification of the simple system via bond multiplicities
  const int k = static_cast<int>(rep.simple_system.size());
  std::vector<std::vector<int>> bond(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      Int pab = rs.coroot_pair(rep.simple_system[a].coords(), rep.simple_system[b].coords());
      Int pba = rs.coroot_pair(rep.simple_system[b].coords(), rep.simple_system[a].coords());
      bond[a][b] = bond[b][a] = static_cast<int>(pab * pba);
    }
  }
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < k; ++u) {
        if (bond[v][u] > 0 && comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int s = 0; s < k; ++s) {
      if (comp[s] == c) nodes.push_back(s);
    }
    const int sz = static_cast<int>(nodes.size());
    int doubles = 0, triples = 0, maxdeg = 0, deg3 = 0, pendant_count = 0;
    std::pair<int, int> double_edge{-1, -1};
    std::vector<int> degree(sz, 0);
    for (int a = 0; a < sz; ++a) {
      for (int b = a + 1; b < sz; ++b) {
        int w = bond[nodes[a]][nodes[b]];
        if (w > 0) {
          ++degree[a];
          ++degree[b];
        }
        if (w == 2) {
          ++doubles;
          double_edge = {nodes[a], nodes[b]};
        }
        if (w >= 3) ++triples;
      }
    }
    int edge_count = 0;
    for (int a = 0; a < sz; ++a) {
      maxdeg = std::max(maxdeg, degree[a]);
      if (degree[a] == 3) ++deg3;
      if (degree[a] <= 1) ++pendant_count;
      edge_count += degree[a];
    }
    edge_count /= 2;
    std::string label = "unclassified";
    bool tree = (edge_count == sz - 1);
    if (triples == 0 && tree) {
      if (doubles == 0 && maxdeg <= 2) {
        label = "A" + std::to_string(sz);
      } else if (doubles == 1 && maxdeg <= 2) {
        // path with one double bond; B if it sits at a short end, C if long
        auto [x, y] = double_edge;
        int degx = 0, degy = 0;
        for (int s2 = 0; s2 < k; ++s2) {
          if (s2 != x && bond[x][s2] > 0) ++degx;
          if (s2 != y && bond[y][s2] > 0) ++degy;
        }
        if (sz == 2) {
          label = "B2";
        } else {
          int terminal = (degx == 1) ? x : y;
          int other = (terminal == x) ? y : x;
          bool ends_ok = (degx == 1) != (degy == 1) || sz == 2;
          Int lt = rs.inner(rep.simple_system[terminal].coords(), rep.simple_system[terminal].coords());
          Int lo = rs.inner(rep.simple_system[other].coords(), rep.simple_system[other].coords());
          if (ends_ok) label = (lt < lo ? "B" : "C") + std::to_string(sz);
        }
      } else if (doubles == 0 && maxdeg == 3 && deg3 == 1 && sz >= 4) {
        // one fork: D if at least two branches are single nodes
        if (pendant_count >= 3) {
          int leaves_adjacent_to_fork = 0;
          int fork = -1;
          for (int a = 0; a < sz; ++a) {
            if (degree[a] == 3) fork = a;
          }
          for (int a = 0; a < sz; ++a) {
            if (degree[a] == 1 && bond[nodes[a]][nodes[fork]] > 0) ++leaves_adjacent_to_fork;
          }
          if (leaves_adjacent_to_fork >= 2) label = "D" + std::to_string(sz);
        }
      }
    }
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  std::string type;
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    if (idx) type += "+";
    type += labels[idx];
  }
  rep.dynkin_type = type.empty() ? "empty" : type;
  return rep;
}

std::vector<Root> reflection_subsystem(const RootSystem& rs, const std::vector<Root>& roots) {
  std::set<std::vector<Int>> seen;
  std::vector<IntVec> work;
  auto key = [&](const IntVec& v) { return std::vector<Int>(v.data(), v.data() + rs.n()); };
  auto add = [&](const IntVec& v) {
    if (seen.insert(key(v)).second) work.push_back(v);
  };
  for (const Root& r : roots) {
    add(r.coords());
    add(-r.coords());
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = work.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        IntVec image = work[j] - rs.coroot_pair(work[j], work[i]) * work[i];
        if (seen.insert(key(image)).second) {
          work.push_back(image);
          grew = true;
        }
      }
    }
  }
  std::vector<Root> out;
  for (int kdx = 0; kdx < rs.num_positive(); ++kdx) {
    if (seen.count(key(rs.positive_roots()[kdx]))) out.push_back(rs.positive(kdx));
  }
  return out;
}

}  // namespace rootpoly
