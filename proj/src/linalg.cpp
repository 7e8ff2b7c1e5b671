#include "rootpoly/linalg.hpp"

#include <cstdlib>

namespace rootpoly {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Int content(const IntVec& v) {
  Int g = 0;
  for (int i = 0; i < v.size(); ++i) g = std::gcd(g, std::abs(v[i]));
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1) v /= g;
  return v;
}

IntVec primitive_signed(IntVec v) {
  v = primitive(std::move(v));
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

Int det_exact(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          p = r;
          break;
        }
      }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RowBasis row_basis(IntMat m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    m.row(r).swap(m.row(p));
    // clear the column everywhere else by cross-multiplication
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Int a = m(r, c);
      Int b = m(i, c);
      Int g = std::gcd(std::abs(a), std::abs(b));
      m.row(i) = m.row(i) * (a / g) - m.row(r) * (b / g);
    }
    pivots.push_back(c);
    ++r;
  }
  IntMat out(r, cols);
  for (int i = 0; i < r; ++i) {
    IntVec row = m.row(i).transpose();
    row = primitive(std::move(row));
    if (row[pivots[i]] < 0) row = -row;
    out.row(i) = row.transpose();
  }
  RowBasis rb;
  rb.rows = std::move(out);
  rb.pivots = std::move(pivots);
  rb.rank = r;
  return rb;
}

int rank_exact(const IntMat& m) { return row_basis(m).rank; }

std::vector<IntVec> kernel_basis(const IntMat& m) {
  const int cols = static_cast<int>(m.cols());
  RowBasis rb = row_basis(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : rb.pivots) is_pivot[c] = true;
  std::vector<IntVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // x_f = L, x_{pivot_i} = -L * rows(i, f) / rows(i, pivot_i)
    Int lcm = 1;
    for (int i = 0; i < rb.rank; ++i) {
      Int p = rb.rows(i, rb.pivots[i]);
      lcm = lcm / std::gcd(lcm, p) * p;
    }
    IntVec x = IntVec::Zero(cols);
    x[f] = lcm;
    for (int i = 0; i < rb.rank; ++i) {
      x[rb.pivots[i]] = -lcm * rb.rows(i, f) / rb.rows(i, rb.pivots[i]);
    }
    basis.push_back(primitive(std::move(x)));
  }
  return basis;
}

Rat::Rat(Int n, Int d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace rootpoly
