#include "rootpoly/triangulate.hpp"

#include "rootpoly/diagram.hpp"

#include <algorithm>

namespace rootpoly {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("triangulate: ") + what);
}

std::vector<int> facet_apexes(const RootSystem& rs) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, "root polytope triangulations cover types A and C");
  if (rs.family() == Family::A) {
    std::vector<int> all(rs.n());
    for (int i = 0; i < rs.n(); ++i) all[i] = i + 1;
    return all;
  }
  return {rs.n()};
}

}  // namespace

Int normalized_volume(const RootSystem& rs, const std::vector<Root>& vertices) {
  const int n = rs.n();
  if (static_cast<int>(vertices.size()) != n)
    throw std::invalid_argument("normalized_volume: a simplex has exactly n root vertices");
  IntMat m(n, n);
  for (int c = 0; c < n; ++c) m.col(c) = vertices[c].coords();
  return std::abs(det_exact(m));
}

Triangulation facet_triangulation(const RootSystem& rs, int i) {
  Triangulation t;
  t.tag = PolytopeTag::Facet;
  t.facet_index = i;
  for (const RootFilter& member : members_of_I_ab(rs, i)) {
    Simplex s;
    s.vertices = border(rs, member);
    s.apex = i;
    s.ideal = member;
    t.simplices.push_back(std::move(s));
  }
  return t;
}

Triangulation full_triangulation(const RootSystem& rs) {
  Triangulation t;
  t.tag = PolytopeTag::P;
  for (int i : facet_apexes(rs)) {
    std::vector<std::vector<Root>> borders;
    std::vector<RootFilter> members = members_of_I_ab(rs, i);
    borders.reserve(members.size());
    for (const RootFilter& member : members) borders.push_back(border(rs, member));
    for (const WeylElement& w : minimal_coset_reps(rs, i)) {
      for (std::size_t k = 0; k < members.size(); ++k) {
        Simplex s;
        s.vertices.reserve(rs.n());
        for (const Root& b : borders[k]) s.vertices.push_back(apply(rs, w, b));
        s.apex = i;
        s.coset_word = w.word;
        s.ideal = members[k];
        t.simplices.push_back(std::move(s));
      }
    }
  }
  return t;
}

Triangulation positive_restriction(const RootSystem& rs, const Triangulation& t) {
  (void)rs;
  Triangulation p;
  p.tag = PolytopeTag::PPlus;
  for (const Simplex& s : t.simplices) {
    bool all_positive = true;
    for (const Root& v : s.vertices) {
      if (!v.positive()) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) p.simplices.push_back(s);
  }
  return p;
}

Triangulation ideal_hull_triangulation(const RootSystem& rs, const RootFilter& ideal) {
  std::optional<int> apex = classify_ideal(rs, ideal);
  if (!apex) fail(ErrorCode::NoApex, "ideal belongs to no apex class");
  Triangulation t;
  t.tag = PolytopeTag::IdealHull;
  t.ideal = ideal;
  for (const RootFilter& member : members_of_I_ab(rs, *apex)) {
    if (!member.subset_of(ideal)) continue;
    Simplex s;
    s.vertices = border(rs, member);
    s.apex = *apex;
    s.ideal = member;
    t.simplices.push_back(std::move(s));
  }
  return t;
}

HalfspaceModel halfspace_model(const RootSystem& rs) {
  HalfspaceModel model;
  for (int i : facet_apexes(rs)) {
    Covector omega = fundamental_coweight(rs, i);
    for (const WeylElement& w : minimal_coset_reps(rs, i)) {
      model.inequalities.emplace_back(apply(rs, w, omega), rs.mark(i));
    }
  }
  std::sort(model.inequalities.begin(), model.inequalities.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first.values, b.first.values); });
  for (std::size_t k = 1; k < model.inequalities.size(); ++k) {
    check(!(model.inequalities[k - 1].first == model.inequalities[k].first),
          "facet inequalities must be pairwise distinct");
  }
  return model;
}

Location location(const HalfspaceModel& model, const RatPoint& p) {
  bool boundary = false;
  for (const auto& [g, bound] : model.inequalities) {
    Int lhs = g.values.dot(p.num);
    Int rhs = bound * p.den;
    if (lhs > rhs) return Location::Outside;
    if (lhs == rhs) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

Location positive_cone_location(const RatPoint& p) {
  bool boundary = false;
  for (int k = 0; k < p.num.size(); ++k) {
    if (p.num[k] < 0) return Location::Outside;
    if (p.num[k] == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

std::vector<Int> f_polynomial(const RootSystem& rs) {
  const int n = rs.n();
  std::vector<Int> f(n);
  if (rs.family() == Family::A) {
    for (int i = 0; i < n; ++i) f[i] = binomial(n + 1, i + 2) * ((Int{1} << (i + 2)) - 2);
  } else if (rs.family() == Family::C) {
    for (int i = 0; i < n; ++i) f[i] = (Int{1} << (i + 1)) * binomial(n, i + 1);
  } else {
    fail(ErrorCode::WrongType, "face numbers are closed-form for types A and C only");
  }
  return f;
}

AntiStandardGraph simplex_to_digraph(const RootSystem& rs, const Simplex& s) {
  if (rs.family() != Family::A) fail(ErrorCode::WrongType, "arc diagrams are a type A notion");
  const int n = rs.n();
  AntiStandardGraph g;
  g.vertices = n + 1;
  for (const Root& v : s.vertices) {
    IntVec c = v.positive() ? v.coords() : IntVec(-v.coords());
    int lo = 0, hi = 0;
    for (int k = 1; k <= n; ++k) {
      if (c[k - 1] == 1) {
        if (lo == 0) lo = k;
        hi = k;
      }
    }
    // alpha_{lo,hi} sends lo -> hi+1; the negative root reverses the arc
    if (v.positive()) g.edges.emplace_back(lo, hi + 1);
    else g.edges.emplace_back(hi + 1, lo);
  }
  std::sort(g.edges.begin(), g.edges.end());
  // validate: the digraph of a genuine simplex is anti-standard
  digraph_to_simplex(rs, g);
  return g;
}

std::vector<Root> digraph_to_simplex(const RootSystem& rs, const AntiStandardGraph& g) {
  if (rs.family() != Family::A) fail(ErrorCode::WrongType, "arc diagrams are a type A notion");
  const int n = rs.n();
  if (g.vertices != n + 1 || static_cast<int>(g.edges.size()) != n)
    fail(ErrorCode::NotAntiStandard, "need exactly n arcs on n+1 vertices");
  for (const auto& [s, t] : g.edges) {
    if (s < 1 || s > n + 1 || t < 1 || t > n + 1 || s == t)
      fail(ErrorCode::NotAntiStandard, "arc endpoints out of range");
  }
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    for (std::size_t b = 0; b < g.edges.size(); ++b) {
      if (a != b && g.edges[a] == g.edges[b])
        fail(ErrorCode::NotAntiStandard, "duplicate arc");
      if (g.edges[a].first == g.edges[b].second)
        fail(ErrorCode::NotAntiStandard, "a vertex is both a source and a target");
      if (g.edges[a].first < g.edges[b].first && g.edges[a].second > g.edges[b].second)
        fail(ErrorCode::NotAntiStandard, "arc targets not monotone in sources");
    }
  }
  std::vector<Root> verts;
  for (const auto& [s, t] : g.edges) {
    int lo = std::min(s, t), hi = std::max(s, t);
    IntVec c = IntVec::Zero(n);
    for (int k = lo; k <= hi - 1; ++k) c[k - 1] = 1;
    if (s > t) c = -c;
    verts.push_back(rs.root(c));
  }
  return verts;
}

WeylElement standard_antipode(const RootSystem& rs, int i) {
  if (rs.family() != Family::A) fail(ErrorCode::WrongType, "standard antipode is a type A notion");
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "apex out of range");
  WeylElement w = identity_element(rs);
  for (int k = 1; 2 * k <= i; ++k) {
    // reflection in alpha_k + ... + alpha_{i-k}; the factors commute
    IntVec c = IntVec::Zero(rs.n());
    for (int j = k; j <= i - k; ++j) c[j - 1] = 1;
    w = compose(w, root_reflection(rs, rs.root(c)));
  }
  w.word.clear();
  return w;
}

VolumeReport volume_report(const RootSystem& rs) {
  Triangulation t = full_triangulation(rs);
  Int vol_p = 0;
  for (const Simplex& s : t.simplices) vol_p += normalized_volume(rs, s.vertices);
  Int vol_plus = 0;
  for (const Simplex& s : positive_restriction(rs, t).simplices)
    vol_plus += normalized_volume(rs, s.vertices);
  Int prod = 1;
  for (int e : rs.exponents()) prod *= e;
  VolumeReport r;
  r.vol_P_over_vol_Pi = vol_p;
  r.vol_Pplus_over_vol_P = Rat(vol_plus, vol_p);
  r.exponents_ratio = Rat(prod, rs.weyl_order());
  check(r.vol_Pplus_over_vol_P == r.exponents_ratio,
        "positive volume fraction must equal the exponent product over |W|");
  return r;
}

}  // namespace rootpoly
