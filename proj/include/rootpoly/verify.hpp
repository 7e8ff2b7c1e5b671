#pragma once

#include "rootpoly/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

// The acceptance checklist: eleven numbered criteria, each a grid of exact
// checks over pinned families and ranks.  The acceptance binary prints one
// line per criterion; the CLI verify subcommand prints the per-check items
// scoped to one (family, rank).

namespace rootpoly::verify {

struct Item {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // populated on failure
};

inline constexpr int num_criteria = 11;

const char* criterion_label(int k);

// All checks of criterion k; scope restricts to one root system where the
// grid allows it.
std::vector<Item> run_criterion(int k, std::optional<RootSystemType> scope = std::nullopt);

// Full grid, criteria 1..11.
std::vector<Item> run_all();

// Every check applicable to the given system.
std::vector<Item> run_for(RootSystemType t);

}  // namespace rootpoly::verify
