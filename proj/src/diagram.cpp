#include "rootpoly/diagram.hpp"

namespace rootpoly {

namespace {

void require_ac(const RootSystem& rs, const char* what) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    fail(ErrorCode::WrongType, std::string(what) + " is defined for types A and C only");
}

IntVec interval_root(int n, int s, int t) {  // alpha_s + ... + alpha_t, 1-based
  IntVec v = IntVec::Zero(n);
  for (int k = s; k <= t; ++k) v[k - 1] = 1;
  return v;
}

}  // namespace

std::pair<int, int> diagram_row_span(const RootSystem& rs, int row) {
  require_ac(rs, "diagram row span");
  const int n = rs.n();
  if (row < 1 || row > n) fail(ErrorCode::OutOfShape, "row out of range");
  if (rs.family() == Family::A) return {1, n + 1 - row};
  return {row, 2 * n - row};
}

bool diagram_in_shape(const RootSystem& rs, int row, int col) {
  require_ac(rs, "diagram shape test");
  if (row < 1 || row > rs.n()) return false;
  auto [lo, hi] = diagram_row_span(rs, row);
  return lo <= col && col <= hi;
}

Root diagram_position(const RootSystem& rs, int row, int col) {
  require_ac(rs, "diagram_position");
  if (!diagram_in_shape(rs, row, col)) fail(ErrorCode::OutOfShape, "cell outside the staircase");
  const int n = rs.n();
  if (rs.family() == Family::A) {
    return rs.root(interval_root(n, col, n + 1 - row));
  }
  if (col < n) {
    // alpha_{col, n-1} + alpha_{row, n}
    return rs.root(interval_root(n, col, n - 1) + interval_root(n, row, n));
  }
  if (col == n) return rs.root(interval_root(n, row, n));
  return rs.root(interval_root(n, row, 2 * n - col));
}

std::pair<int, int> diagram_of(const RootSystem& rs, const Root& beta) {
  require_ac(rs, "diagram_of");
  if (!beta.positive()) fail(ErrorCode::NotPositiveRoot, "diagram cells hold positive roots");
  const int n = rs.n();
  const IntVec& c = beta.coords();
  if (rs.family() == Family::A) {
    int s = 0, t = 0;
    for (int k = 1; k <= n; ++k) {
      if (c[k - 1] == 1) {
        if (s == 0) s = k;
        t = k;
      }
    }
    return {n + 1 - t, s};
  }
  // type C: read off the unique decomposition from the coefficient profile
  if (c[n - 1] == 0) {
    // interval root alpha_s + ... + alpha_t with t <= n-1: right wing
    int s = 0, t = 0;
    for (int k = 1; k <= n; ++k) {
      if (c[k - 1] == 1) {
        if (s == 0) s = k;
        t = k;
      }
    }
    return {s, 2 * n - t};
  }
  // c_n = 1: row = first support index; col = first index with coefficient 2,
  // or n when no coefficient reaches 2 (the middle column).
  int row = 0, col = n;
  for (int k = 1; k <= n; ++k) {
    if (row == 0 && c[k - 1] > 0) row = k;
    if (c[k - 1] == 2 && col == n) col = k;
  }
  return {row, col};
}

}  // namespace rootpoly
