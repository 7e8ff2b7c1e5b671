#include "rootpoly/report.hpp"

#include "rootpoly/diagram.hpp"

#include <cstdlib>
#include <iostream>

namespace rootpoly {

namespace {

nlohmann::json vec_to_json(const IntVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

template <typename T>
nlohmann::json list_to_json(const std::vector<T>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const T& x : v) a.push_back(x);
  return a;
}

bool has_triangulation(const RootSystem& rs) {
  return rs.family() == Family::A || rs.family() == Family::C;
}

}  // namespace

nlohmann::json meta_block(const RootSystem& rs) {
  return {{"family", std::string(1, static_cast<char>(rs.family()))},
          {"rank", rs.n()},
          {"version", artifact_version}};
}

nlohmann::json simplex_to_json(const RootSystem& rs, const Simplex& s) {
  (void)rs;
  nlohmann::json verts = nlohmann::json::array();
  for (const Root& v : s.vertices) verts.push_back(vec_to_json(v.coords()));
  return {{"vertices", verts},
          {"apex", s.apex},
          {"coset_word", list_to_json(s.coset_word)},
          {"ideal_hex", to_hex(s.ideal)}};
}

nlohmann::json report_payload(const RootSystem& rs) {
  nlohmann::json p;
  p["positive_roots"] = rs.num_positive();
  p["abelian_ideals"] = enumerate_abelian_ideals(rs).size();

  if (has_triangulation(rs)) {
    nlohmann::json classes;
    for (int i : rs.long_simple_indices())
      classes[std::to_string(i)] = members_of_I_ab(rs, i).size();
    p["ideal_classes"] = classes;

    Triangulation t = full_triangulation(rs);
    Triangulation tp = positive_restriction(rs, t);
    HalfspaceModel model = halfspace_model(rs);
    p["facets"] = model.inequalities.size();
    p["triangulation"] = {{"simplices", t.simplices.size()},
                          {"positive_simplices", tp.simplices.size()}};
    p["f_vector"] = list_to_json(f_polynomial(rs));

    VolumeReport vr = volume_report(rs);
    p["volumes"] = {{"vol_P_over_vol_Pi", vr.vol_P_over_vol_Pi},
                    {"vol_Pplus_over_vol_P", to_string(vr.vol_Pplus_over_vol_P)},
                    {"exponents_ratio", to_string(vr.exponents_ratio)}};
  }

  if (rs.n() >= 2) {
    std::vector<Hyperplane> hs = build_arrangement(rs);
    p["arrangement"] = {{"hyperplanes", hs.size()},
                        {"regions", region_count(hs, rs.n())},
                        {"characteristic_polynomial",
                         list_to_json(characteristic_polynomial(hs, rs.n()))}};

    RegionsFacetsReport rf = regions_vs_facets(rs);
    nlohmann::json wit = nlohmann::json::array();
    for (const SeparationWitness& w : rf.witnesses) {
      wit.push_back({{"hyperplane", vec_to_json(w.hyperplane.values)},
                     {"facet", w.facet_id},
                     {"u", vec_to_json(w.u.coords())},
                     {"v", vec_to_json(w.v.coords())}});
    }
    p["regions_vs_facets"] = {{"coincide", rf.coincide}, {"witnesses", wit}};
  }
  return p;
}

nlohmann::json triangulation_payload(const RootSystem& rs, bool positive_only) {
  Triangulation t = full_triangulation(rs);
  if (positive_only) t = positive_restriction(rs, t);
  nlohmann::json simplices = nlohmann::json::array();
  for (const Simplex& s : t.simplices) simplices.push_back(simplex_to_json(rs, s));
  return {{"count", t.simplices.size()},
          {"polytope", positive_only ? "P_plus" : "P"},
          {"simplices", simplices}};
}

nlohmann::json arrangement_payload(const RootSystem& rs) {
  std::vector<Hyperplane> hs = build_arrangement(rs);
  nlohmann::json normals = nlohmann::json::array();
  for (const Hyperplane& h : hs) normals.push_back(vec_to_json(h.normal.values));
  IntersectionPoset poset = intersection_poset(hs, rs.n());
  return {{"hyperplanes", normals},
          {"characteristic_polynomial", list_to_json(characteristic_polynomial(hs, rs.n()))},
          {"regions", region_count(hs, rs.n())},
          {"poset_elements", poset.elements.size()}};
}

std::string render_diagram(const RootSystem& rs, const RootFilter& ideal) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, "diagrams are drawn for types A and C only");
  RootFilter border_cells;
  if (!ideal.empty()) {
    if (!is_abelian_ideal(rs, ideal))
      fail(ErrorCode::BadSpec, "diagram needs an abelian ideal");
    if (classify_ideal(rs, ideal).has_value()) {
      for (const Root& b : border(rs, ideal)) border_cells.set(*rs.index_of(b.coords()));
    }
  }
  std::string out;
  for (int r = 1; r <= rs.n(); ++r) {
    auto [lo, hi] = diagram_row_span(rs, r);
    std::string line(lo - 1, ' ');
    for (int c = lo; c <= hi; ++c) {
      Root cell = diagram_position(rs, r, c);
      int idx = *rs.index_of(cell.coords());
      if (border_cells.test(idx)) line += '@';
      else if (ideal.test(idx)) line += '#';
      else line += '.';
    }
    out += line;
    out += '\n';
  }
  return out;
}

void log_line(const std::string& msg) {
  static const char* env = std::getenv("ROOTPOLY_LOG");
  if (env && *env) std::cerr << "[rootpoly] " << msg << "\n";
}

}  // namespace rootpoly
