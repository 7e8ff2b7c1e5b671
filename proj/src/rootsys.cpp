#include "rootpoly/rootsys.hpp"

#include <algorithm>
#include <cassert>

namespace rootpoly {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("root system construction: ") + what);
}

IntMat cartan_matrix(Family f, int n) {
  IntMat a = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) {  // 0-based single bond
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short: s_{n-1}(alpha_n) = alpha_n + alpha_{n-1} (single) while
      // s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      a(n - 2, n - 1) = -1;
      break;
    case Family::C:
      // alpha_n long: transpose of the B pattern.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -1;
      a(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);  // fork: alpha_{n-2} adjacent to both alpha_{n-1} and alpha_n
      break;
  }
  return a;
}

// Diagonal making diag(d) * A symmetric, minimal positive integers.
IntVec symmetrizer(Family f, int n) {
  IntVec d = IntVec::Ones(n);
  if (f == Family::B) {
    for (int i = 0; i + 1 < n; ++i) d[i] = 2;
  } else if (f == Family::C) {
    d[n - 1] = 2;
  }
  return d;
}

int expected_positive_count(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

std::vector<int> family_exponents(Family f, int n) {
  std::vector<int> e;
  switch (f) {
    case Family::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      break;
  }
  return e;
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
  }
  fail(ErrorCode::UnsupportedType, std::string("unknown family '") + c + "'");
}

Root::Root(const RootSystem& rs, IntVec coords) : coords_(std::move(coords)) {
  if (coords_.size() != rs.n()) fail(ErrorCode::NotPositiveRoot, "root has wrong dimension");
  if (rs.is_positive_root(coords_)) {
    positive_ = true;
  } else if (rs.is_positive_root(-coords_)) {
    positive_ = false;
  } else {
    fail(ErrorCode::NotPositiveRoot, "coordinates are not a root");
  }
}

RootSystem::RootSystem(RootSystemType t) : type_(t) {
  const int n = t.rank;
  const int min_rank = t.family == Family::A ? 1 : (t.family == Family::D ? 3 : 2);
  if (n < min_rank)
    fail(ErrorCode::InvalidRank, std::string(1, static_cast<char>(t.family)) +
                                     " requires rank >= " + std::to_string(min_rank));
  const int npos = expected_positive_count(t.family, n);
  if (npos > 64)
    fail(ErrorCode::InvalidRank, "rank above supported range (more than 64 positive roots)");

  cartan_ = cartan_matrix(t.family, n);
  IntVec d = symmetrizer(t.family, n);
  gram_ = d.asDiagonal() * cartan_;
  check(gram_ == IntMat(gram_.transpose()), "gram matrix not symmetric");

  // Positive roots by closure along root strings, height layer by layer:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> >= 1, where p is the
  // largest k with beta - k alpha_i already generated (lower height).
  std::map<std::vector<Int>, int> seen;
  auto key = [n](const IntVec& v) { return std::vector<Int>(v.data(), v.data() + n); };
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e[i] = 1;
    layer.push_back(e);
    seen.emplace(key(e), 0);
  }
  positive_ = layer;
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& beta : layer) {
      for (int i = 0; i < n; ++i) {
        Int pairing = cartan_.row(i).dot(beta);
        Int p = 0;
        IntVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(key(down))) break;
          ++p;
        }
        if (p - pairing >= 1) {
          IntVec up = beta;
          up[i] += 1;
          if (seen.emplace(key(up), 0).second) {
            next.push_back(up);
            positive_.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  check(static_cast<int>(positive_.size()) == npos, "positive root count mismatch");

  std::sort(positive_.begin(), positive_.end(), [this](const IntVec& x, const IntVec& y) {
    Int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return lex_less(x, y);
  });
  index_.clear();
  for (int i = 0; i < npos; ++i) index_.emplace(key(positive_[i]), i);

  // highest root: the unique maximal element (last in height order)
  check(npos == 1 || positive_[npos - 1].sum() > positive_[npos - 2].sum(),
        "highest root not unique by height");
  marks_ = positive_[npos - 1];

  // long/short by relative squared length
  Int maxlen = 0;
  std::vector<Int> len(npos);
  for (int i = 0; i < npos; ++i) {
    len[i] = inner(positive_[i], positive_[i]);
    maxlen = std::max(maxlen, len[i]);
  }
  long_flag_.resize(npos);
  for (int i = 0; i < npos; ++i) long_flag_[i] = (len[i] == maxlen);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cartan_(i, j) != 0) extended_edges_.emplace_back(i + 1, j + 1);
    }
  }
  for (int i = 0; i < n; ++i) {
    IntVec alpha = IntVec::Zero(n);
    alpha[i] = 1;
    if (inner(marks_, alpha) != 0) extended_edges_.emplace_back(0, i + 1);
  }
  std::sort(extended_edges_.begin(), extended_edges_.end());

  exponents_ = family_exponents(t.family, n);
  Int expsum = 0;
  for (int e : exponents_) expsum += e;
  check(expsum == npos, "exponent sum must equal number of positive roots");
  coxeter_number_ = static_cast<int>(marks_.sum()) + 1;
  check(coxeter_number_ == exponents_.back() + 1, "coxeter number vs largest exponent");

  up_bits_.assign(npos, 0);
  for (int i = 0; i < npos; ++i) {
    for (int j = 0; j < npos; ++j) {
      if (leq(i, j)) up_bits_[i] |= (std::uint64_t{1} << j);
    }
  }
  sum_index_.assign(npos, std::vector<int>(npos, -1));
  for (int i = 0; i < npos; ++i) {
    for (int j = 0; j < npos; ++j) {
      auto opt = index_of(positive_[i] + positive_[j]);
      sum_index_[i][j] = opt ? *opt : -1;
    }
  }
}

bool RootSystem::is_long_simple(int i) const {
  if (i < 1 || i > n()) fail(ErrorCode::OutOfShape, "simple root index out of range");
  IntVec alpha = IntVec::Zero(n());
  alpha[i - 1] = 1;
  return long_flag_[*index_of(alpha)];
}

std::vector<int> RootSystem::long_simple_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i) {
    if (is_long_simple(i)) out.push_back(i);
  }
  return out;
}

Int RootSystem::weyl_order() const {
  Int f = 1;
  for (int i = 2; i <= n(); ++i) f *= i;
  switch (family()) {
    case Family::A: return f * (n() + 1);
    case Family::B:
    case Family::C: return f << n();
    case Family::D: return f << (n() - 1);
  }
  return 0;
}

std::optional<int> RootSystem::index_of(const IntVec& coords) const {
  if (coords.size() != n()) return std::nullopt;
  auto it = index_.find(std::vector<Int>(coords.data(), coords.data() + n()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const IntVec& coords) const {
  return is_positive_root(coords) || is_positive_root(-coords);
}

Root RootSystem::root(IntVec coords) const { return Root(*this, std::move(coords)); }

Root RootSystem::positive(int idx) const {
  return Root(positive_[idx], true, Root::Checked{});
}

Root RootSystem::negative(int idx) const {
  return Root(-positive_[idx], false, Root::Checked{});
}

Root RootSystem::simple(int i) const {
  if (i < 1 || i > n()) fail(ErrorCode::OutOfShape, "simple root index out of range");
  IntVec e = IntVec::Zero(n());
  e[i - 1] = 1;
  return Root(e, true, Root::Checked{});
}

bool RootSystem::leq(int i, int j) const {
  const IntVec& x = positive_[i];
  const IntVec& y = positive_[j];
  for (int k = 0; k < n(); ++k) {
    if (x[k] > y[k]) return false;
  }
  return true;
}

Int RootSystem::coroot_pair(const IntVec& x, const IntVec& beta) const {
  Int num = 2 * inner(x, beta);
  Int den = inner(beta, beta);
  check(num % den == 0, "coroot pairing must be integral");
  return num / den;
}

RootSystem build_root_system(RootSystemType t) { return RootSystem(t); }

RootSystem build_root_system(Family f, int rank) { return RootSystem({f, rank}); }

std::vector<CoverRelation> cover_relations(const RootSystem& rs) {
  std::vector<CoverRelation> covers;
  for (int u = 0; u < rs.num_positive(); ++u) {
    for (int i = 1; i <= rs.n(); ++i) {
      IntVec low = rs.positive_roots()[u];
      low[i - 1] -= 1;
      if (low[i - 1] < 0) continue;
      if (auto l = rs.index_of(low)) covers.push_back({*l, u, i});
    }
  }
  return covers;
}

}  // namespace rootpoly
