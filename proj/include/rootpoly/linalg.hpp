#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer linear algebra on top of Eigen storage.  Eigen's own
// decompositions go through floating point, so rank, determinant and kernel
// computations are reimplemented here fraction-free.  Everything in this
// project lives at desk scale (n <= 10, entries bounded by small constants),
// so int64 intermediates are safe by a wide margin.

namespace rootpoly {

using Int = std::int64_t;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Strict lexicographic comparison of equally sized vectors.
bool lex_less(const IntVec& a, const IntVec& b);

// gcd of all entries (non-negative; 0 for the zero vector).
Int content(const IntVec& v);

// v divided by its content; the zero vector stays zero.
IntVec primitive(IntVec v);

// primitive(v) with the first nonzero entry made positive.
IntVec primitive_signed(IntVec v);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det_exact(IntMat m);

// Result of fraction-free Gauss-Jordan elimination.  `rows` holds the
// canonical reduced basis of the row space: each row primitive with positive
// pivot, zeros above and below every pivot, rows ordered by pivot column.
// Two matrices have equal row spaces iff their canonical `rows` agree.
struct RowBasis {
  IntMat rows;              // rank x cols
  std::vector<int> pivots;  // pivot column per row, increasing
  int rank = 0;
};

RowBasis row_basis(IntMat m);

int rank_exact(const IntMat& m);

// Primitive integer basis of the right kernel {x : m x = 0}, one vector per
// free column of m, each scaled to primitive integers.
std::vector<IntVec> kernel_basis(const IntMat& m);

// Rational point as integer numerators over one positive denominator, so
// every membership test stays in integer arithmetic.
struct RatPoint {
  IntVec num;
  Int den = 1;
};

enum class Location { Interior, Boundary, Outside };

// Reduced fraction with positive denominator.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n, Int d);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend bool operator==(const Rat& a, const Rat& b);
  friend bool operator<(const Rat& a, const Rat& b);
};

std::string to_string(const Rat& r);

// binomial(n, k) as exact Int; 0 outside the triangle.
Int binomial(int n, int k);

// n-th Catalan number.
Int catalan(int n);

}  // namespace rootpoly
