#pragma once

#include "rootpoly/rootsys.hpp"

#include <utility>

// Staircase diagrams for types A and C: a bijection between positive roots
// and cells (row, col), 1-based, arranged so that beta >= gamma in the root
// poset exactly when beta's cell is weakly northwest of gamma's.
//
// Type A_n: row r has columns 1 .. n+1-r; cell (r,c) holds the interval root
// alpha_c + ... + alpha_{n+1-r}.
//
// Type C_n: row r has columns r .. 2n-r.  Cells left of the middle column
// (c < n) hold alpha_{c,n-1} + alpha_{r,n}; the middle column (c = n) holds
// alpha_{r,n}; cells right of it hold the interval root alpha_{r,2n-c}.
// The diagonal cells (r,r) are the long roots lambda_r.

namespace rootpoly {

// Inclusive column range of a diagram row, or OutOfShape.
std::pair<int, int> diagram_row_span(const RootSystem& rs, int row);

bool diagram_in_shape(const RootSystem& rs, int row, int col);

// Cell -> positive root (OutOfShape / WrongType).
Root diagram_position(const RootSystem& rs, int row, int col);

// Positive root -> cell (inverse of diagram_position).
std::pair<int, int> diagram_of(const RootSystem& rs, const Root& beta);

}  // namespace rootpoly
