#include "rootpoly/oracle.hpp"

#include "rootpoly/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootpoly {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("oracle: ") + what);
}

IntMat rows_from(const std::vector<IntVec>& points) {
  IntMat m(points.size(), points.empty() ? 0 : points[0].size());
  for (std::size_t i = 0; i < points.size(); ++i) m.row(i) = points[i].transpose();
  return m;
}

// Standard basis vectors completing the span of the point set to the whole
// space (non-pivot coordinates of the row basis).
std::vector<IntVec> span_completion(const std::vector<IntVec>& points) {
  const int dim = static_cast<int>(points[0].size());
  RowBasis rb = row_basis(rows_from(points));
  std::vector<bool> pivot(dim, false);
  for (int c : rb.pivots) pivot[c] = true;
  std::vector<IntVec> comp;
  for (int c = 0; c < dim; ++c) {
    if (!pivot[c]) {
      IntVec e = IntVec::Zero(dim);
      e[c] = 1;
      comp.push_back(e);
    }
  }
  return comp;
}

// Enumerate k-subsets of [0, m) calling f on each.
template <typename F>
void for_subsets(int m, int k, F&& f) {
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int v = from; v <= m - (k - pos); ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<std::vector<IntVec>> pulling_triangulation(const std::vector<IntVec>& points) {
  check(!points.empty(), "pulling triangulation of an empty set");
  const int dim = static_cast<int>(points[0].size());
  const int m = static_cast<int>(points.size());
  const int k = rank_exact(rows_from(points));
  if (m == k) return {points};

  // pulling vertex: lexicographically least point (always a vertex)
  int v0 = 0;
  for (int i = 1; i < m; ++i) {
    if (lex_less(points[i], points[v0])) v0 = i;
  }

  std::vector<IntVec> completion = span_completion(points);
  check(static_cast<int>(completion.size()) == dim - k, "completion size");

  // Facets of conv(points) inside its affine hull (which misses the origin):
  // zero sets of supporting linear functionals spanned by k-1 points.
  std::set<std::vector<int>> facets;
  for_subsets(m, k - 1, [&](const std::vector<int>& sub) {
    std::vector<IntVec> s;
    for (int i : sub) s.push_back(points[i]);
    if (rank_exact(rows_from(s)) != k - 1) return;
    // functional f(x) = det[s_1 ... s_{k-1}, x, completion]
    IntMat mat(dim, dim);
    for (int c = 0; c < k - 1; ++c) mat.col(c) = s[c];
    for (std::size_t c = 0; c < completion.size(); ++c) mat.col(k + c) = completion[c];
    bool pos = false, neg = false;
    std::vector<int> zero;
    for (int i = 0; i < m; ++i) {
      mat.col(k - 1) = points[i];
      Int d = det_exact(mat);
      if (d > 0) pos = true;
      else if (d < 0) neg = true;
      else zero.push_back(i);
    }
    if (pos && neg) return;  // not supporting
    facets.insert(zero);
  });

  std::vector<std::vector<IntVec>> out;
  for (const std::vector<int>& g : facets) {
    if (std::find(g.begin(), g.end(), v0) != g.end()) continue;
    std::vector<IntVec> gpts;
    for (int i : g) gpts.push_back(points[i]);
    for (std::vector<IntVec>& s : pulling_triangulation(gpts)) {
      s.insert(s.begin(), points[v0]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Int coned_volume(const std::vector<IntVec>& points) {
  check(!points.empty(), "coned volume of an empty set");
  const int dim = static_cast<int>(points[0].size());
  Int total = 0;
  for (const std::vector<IntVec>& s : pulling_triangulation(points)) {
    check(static_cast<int>(s.size()) == dim, "coned volume needs a full-rank point set");
    IntMat m(dim, dim);
    for (int c = 0; c < dim; ++c) m.col(c) = s[c];
    total += std::abs(det_exact(m));
  }
  return total;
}

std::vector<HullFacet> brute_hull_facets(const std::vector<IntVec>& points) {
  check(!points.empty(), "hull of an empty set");
  const int n = static_cast<int>(points[0].size());
  const int m = static_cast<int>(points.size());
  check(rank_exact(rows_from(points)) == n, "brute hull needs a full-dimensional point set");
  std::map<std::vector<Int>, HullFacet> found;
  for_subsets(m, n, [&](const std::vector<int>& sub) {
    IntMat sys(n, n + 1);
    for (int r = 0; r < n; ++r) {
      sys.row(r).head(n) = points[sub[r]].transpose();
      sys(r, n) = -1;
    }
    std::vector<IntVec> ker = kernel_basis(sys);
    if (ker.size() != 1) return;  // affinely dependent
    IntVec a = ker[0].head(n);
    Int b = ker[0][n];
    bool above = false, below = false;
    for (int i = 0; i < m && !(above && below); ++i) {
      Int v = a.dot(points[i]) - b;
      if (v > 0) above = true;
      else if (v < 0) below = true;
    }
    if (above && below) return;
    if (above) {
      a = -a;
      b = -b;
    }
    HullFacet f;
    f.normal = a;
    f.offset = b;
    for (int i = 0; i < m; ++i) {
      if (a.dot(points[i]) == b) f.incident.push_back(i);
    }
    std::vector<Int> key(a.data(), a.data() + n);
    key.push_back(b);
    found.emplace(std::move(key), std::move(f));
  });
  std::vector<HullFacet> out;
  for (auto& [key, f] : found) out.push_back(std::move(f));
  return out;
}

Location hull_location(const std::vector<HullFacet>& facets, const RatPoint& p) {
  bool boundary = false;
  for (const HullFacet& f : facets) {
    Int lhs = f.normal.dot(p.num);
    Int rhs = f.offset * p.den;
    if (lhs > rhs) return Location::Outside;
    if (lhs == rhs) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

std::vector<int> hull_vertices(const std::vector<IntVec>& points,
                               const std::vector<HullFacet>& facets) {
  const int n = static_cast<int>(points[0].size());
  std::vector<int> verts;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    std::vector<IntVec> normals;
    for (const HullFacet& f : facets) {
      if (f.normal.dot(points[i]) == f.offset) normals.push_back(f.normal);
    }
    if (static_cast<int>(normals.size()) >= n && rank_exact(rows_from(normals)) == n)
      verts.push_back(i);
  }
  return verts;
}

Int hull_volume_from_origin(const std::vector<IntVec>& points) {
  std::vector<HullFacet> facets = brute_hull_facets(points);
  {
    RatPoint origin{IntVec::Zero(points[0].size()), 1};
    check(hull_location(facets, origin) != Location::Outside,
          "volume from origin needs the origin inside the hull");
  }
  Int total = 0;
  for (const HullFacet& f : facets) {
    if (f.offset == 0) continue;  // cone over this facet is flat
    std::vector<IntVec> fp;
    for (int i : f.incident) fp.push_back(points[i]);
    total += coned_volume(fp);
  }
  return total;
}

namespace {

bool anti_standard(const std::vector<std::pair<int, int>>& arcs) {
  for (const auto& [s, t] : arcs) {
    for (const auto& [s2, t2] : arcs) {
      if (s == t2) return false;  // a vertex is both source and target
      if (s < s2 && t > t2) return false;
    }
  }
  return true;
}

long count_digraphs(int n, bool left_to_right_only) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      if (i == j) continue;
      if (left_to_right_only && i > j) continue;
      all.emplace_back(i, j);
    }
  }
  long count = 0;
  for_subsets(static_cast<int>(all.size()), n, [&](const std::vector<int>& sub) {
    std::vector<std::pair<int, int>> arcs;
    for (int i : sub) arcs.push_back(all[i]);
    if (anti_standard(arcs)) ++count;
  });
  return count;
}

}  // namespace

long count_anti_standard_digraphs(int n) { return count_digraphs(n, false); }

long count_left_to_right_anti_standard(int n) { return count_digraphs(n, true); }

Int fan_volume_of_root_polytope(const RootSystem& rs) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, "fan volume expects type A or C");
  std::vector<int> apexes;
  if (rs.family() == Family::A) {
    for (int i = 1; i <= rs.n(); ++i) apexes.push_back(i);
  } else {
    apexes.push_back(rs.n());
  }
  Int total = 0;
  for (int i : apexes) {
    std::vector<IntVec> base;
    for (const IntVec& r : rs.positive_roots()) {
      if (r[i - 1] == rs.mark(i)) base.push_back(r);
    }
    for (const WeylElement& w : minimal_coset_reps(rs, i)) {
      std::vector<IntVec> img;
      img.reserve(base.size());
      for (const IntVec& p : base) img.push_back(w.mat * p);
      total += coned_volume(img);
    }
  }
  return total;
}

}  // namespace rootpoly
