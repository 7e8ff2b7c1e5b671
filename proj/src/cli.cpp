#include "rootpoly/cli.hpp"

#include "rootpoly/report.hpp"
#include "rootpoly/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rootpoly {

namespace {

struct CommonOpts {
  std::string family = "A";
  int rank = 1;
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--family", o.family, "Root system family")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D"}));
  cmd->add_option("--rank", o.rank, "Rank of the root system")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
  cmd->add_option("--jobs", o.jobs,
                  "Accepted for interface stability; execution is single "
                  "threaded so output stays byte-identical")
      ->check(CLI::PositiveNumber);
}

std::string label_of(const CommonOpts& o) { return o.family + std::to_string(o.rank); }

RootSystem build_system(const CommonOpts& o) {
  return build_root_system(family_from_char(o.family[0]), o.rank);
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorCode::BadSpec, "cannot open output file " + o.out);
  f << text;
}

std::string json_doc(const RootSystem& rs, nlohmann::json payload) {
  nlohmann::json doc;
  doc["meta"] = meta_block(rs);
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

int cmd_report(const CommonOpts& o) {
  log_line("report " + label_of(o));
  RootSystem rs = build_system(o);
  emit(o, json_doc(rs, report_payload(rs)));
  return 0;
}

int cmd_triangulate(const CommonOpts& o, bool positive) {
  log_line("triangulate " + label_of(o) + (positive ? " (positive part)" : ""));
  RootSystem rs = build_system(o);
  emit(o, json_doc(rs, triangulation_payload(rs, positive)));
  return 0;
}

int cmd_arrangement(const CommonOpts& o) {
  log_line("arrangement " + label_of(o));
  RootSystem rs = build_system(o);
  emit(o, json_doc(rs, arrangement_payload(rs)));
  return 0;
}

int cmd_diagram(const CommonOpts& o, const std::string& spec) {
  log_line("diagram " + label_of(o) + " " + spec);
  RootSystem rs = build_system(o);
  RootFilter ideal;
  if (spec.size() > 2 && spec[0] == '0' && (spec[1] == 'x' || spec[1] == 'X')) {
    ideal = filter_from_hex(spec);
  } else {
    int apex = 0;
    std::size_t pos = 0;
    try {
      apex = std::stoi(spec, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::BadSpec, "ideal must be a 0x-prefixed bitset or an apex index");
    }
    if (pos != spec.size())
      fail(ErrorCode::BadSpec, "ideal must be a 0x-prefixed bitset or an apex index");
    if (apex < 1 || apex > rs.n())
      fail(ErrorCode::BadSpec, "apex " + std::to_string(apex) + " out of range 1.." +
                                   std::to_string(rs.n()));
    ideal = max_member(rs, apex);
  }
  emit(o, render_diagram(rs, ideal));
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  log_line("verify " + label_of(o));
  RootSystem rs = build_system(o);  // validates family and rank up front
  std::vector<verify::Item> items = verify::run_for(rs.type());
  std::ostringstream text;
  int failed = 0;
  for (const verify::Item& it : items) {
    if (it.pass) {
      text << "[PASS] " << it.name << "\n";
    } else {
      ++failed;
      text << "[FAIL] " << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
    }
  }
  if (items.empty()) {
    text << "no checks apply to " << label_of(o) << "\n";
  } else if (failed == 0) {
    text << "all " << items.size() << " checks passed for " << label_of(o) << "\n";
  } else {
    text << failed << " of " << items.size() << " checks failed for " << label_of(o) << "\n";
  }
  emit(o, text.str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact root polytopes: triangulations, abelian ideals, arrangements"};
  app.require_subcommand(1);

  int result = 0;
  CommonOpts report_opts, tri_opts, arr_opts, dia_opts, ver_opts;
  bool positive = false;
  std::string ideal_spec;

  CLI::App* report_cmd =
      app.add_subcommand("report", "Counts, volumes, face numbers and region data as JSON");
  add_common(report_cmd, report_opts);
  report_cmd->callback([&] { result = cmd_report(report_opts); });

  CLI::App* tri_cmd =
      app.add_subcommand("triangulate", "Simplices of the root polytope triangulation as JSON");
  add_common(tri_cmd, tri_opts);
  tri_cmd->add_flag("--positive", positive, "Restrict to the positive part");
  tri_cmd->callback([&] { result = cmd_triangulate(tri_opts, positive); });

  CLI::App* arr_cmd = app.add_subcommand(
      "arrangement", "Hyperplanes, characteristic polynomial and regions as JSON");
  add_common(arr_cmd, arr_opts);
  arr_cmd->callback([&] { result = cmd_arrangement(arr_opts); });

  CLI::App* dia_cmd = app.add_subcommand("diagram", "ASCII diagram of an abelian ideal");
  add_common(dia_cmd, dia_opts);
  dia_cmd
      ->add_option("ideal", ideal_spec,
                   "0x-prefixed member bitset, or an apex index i for the maximal ideal M_i")
      ->required();
  dia_cmd->callback([&] { result = cmd_diagram(dia_opts, ideal_spec); });

  CLI::App* ver_cmd =
      app.add_subcommand("verify", "Run every acceptance check that applies to one system");
  add_common(ver_cmd, ver_opts);
  ver_cmd->callback([&] { result = cmd_verify(ver_opts); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the help text or the parse error
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace rootpoly
