#include "rootpoly/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace rootpoly {

namespace {

std::vector<Int> mat_key(const IntMat& m) {
  return std::vector<Int>(m.data(), m.data() + m.size());
}

bool mat_lex_less(const IntMat& a, const IntMat& b) { return mat_key(a) < mat_key(b); }

// sign of a root image: every root has all coordinates of one sign
bool image_negative(const IntVec& v) { return v.sum() < 0; }

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  IntMat id = IntMat::Identity(rs.n(), rs.n());
  return {id, id, {}};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "simple reflection index out of range");
  IntMat m = IntMat::Identity(rs.n(), rs.n());
  m.row(i - 1) -= rs.cartan().row(i - 1);
  return {m, m, {i}};
}

WeylElement root_reflection(const RootSystem& rs, const Root& beta) {
  // s_beta(x) = x - <x, beta^vee> beta; column j is s_beta(alpha_j)
  const int n = rs.n();
  const IntVec& b = beta.coords();
  IntMat m = IntMat::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    IntVec e = IntVec::Zero(n);
    e[j] = 1;
    m.col(j) = e - rs.coroot_pair(e, b) * b;
  }
  return {m, m, {}};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.mat = a.mat * b.mat;
  w.inv = b.inv * a.inv;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement v;
  v.mat = w.inv;
  v.inv = w.mat;
  v.word.assign(w.word.rbegin(), w.word.rend());
  return v;
}

bool same_element(const WeylElement& a, const WeylElement& b) { return a.mat == b.mat; }

Root apply(const RootSystem& rs, const WeylElement& w, const Root& r) {
  return rs.root(w.mat * r.coords());
}

Covector apply(const RootSystem& rs, const WeylElement& w, const Covector& f) {
  (void)rs;
  return {w.inv.transpose() * f.values};
}

Covector fundamental_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "coweight index out of range");
  IntVec v = IntVec::Zero(rs.n());
  v[i - 1] = 1;
  return {v};
}

std::uint64_t inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::uint64_t bits = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (image_negative(w.inv * rs.positive_roots()[k])) bits |= (std::uint64_t{1} << k);
  }
  return bits;
}

std::uint64_t co_inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::uint64_t bits = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (image_negative(w.mat * rs.positive_roots()[k])) bits |= (std::uint64_t{1} << k);
  }
  return bits;
}

int length(const RootSystem& rs, const WeylElement& w) {
  return std::popcount(inversion_set(rs, w));
}

std::vector<int> right_descents(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= rs.n(); ++i) {
    if (image_negative(w.mat * rs.simple(i).coords())) out.push_back(i);
  }
  return out;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n()) fail(ErrorCode::OutOfShape, "coset index out of range");
  const int n = rs.n();
  // Membership in W^i: w maps every simple root except alpha_i to a positive root.
  auto in_wi = [&](const WeylElement& w) {
    for (int k = 1; k <= n; ++k) {
      if (k == i) continue;
      if (image_negative(w.mat * rs.simple(k).coords())) return false;
    }
    return true;
  };
  std::map<std::vector<Int>, bool> seen;
  std::vector<WeylElement> reps;
  std::vector<WeylElement> layer{identity_element(rs)};
  seen.emplace(mat_key(layer[0].mat), true);
  reps.push_back(layer[0]);
  while (!layer.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : layer) {
      for (int j = 1; j <= n; ++j) {
        // length grows under left multiplication by s_j iff w^{-1}(alpha_j) > 0
        if (image_negative(w.inv * rs.simple(j).coords())) continue;
        WeylElement u = compose(simple_reflection(rs, j), w);
        if (!in_wi(u)) continue;
        if (!seen.emplace(mat_key(u.mat), true).second) continue;
        next.push_back(u);
        reps.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(reps.begin(), reps.end(),
            [](const WeylElement& a, const WeylElement& b) { return mat_lex_less(a.mat, b.mat); });
  return reps;
}

std::vector<WeylElement> full_group(const RootSystem& rs) {
  std::map<std::vector<Int>, bool> seen;
  std::vector<WeylElement> all;
  std::vector<WeylElement> layer{identity_element(rs)};
  seen.emplace(mat_key(layer[0].mat), true);
  all.push_back(layer[0]);
  while (!layer.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : layer) {
      for (int j = 1; j <= rs.n(); ++j) {
        WeylElement u = compose(w, simple_reflection(rs, j));
        if (!seen.emplace(mat_key(u.mat), true).second) continue;
        next.push_back(u);
        all.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [](const WeylElement& a, const WeylElement& b) { return mat_lex_less(a.mat, b.mat); });
  return all;
}

std::vector<Covector> orbit_covector(const RootSystem& rs, const Covector& f, bool dedup_sign) {
  const int n = rs.n();
  std::map<std::vector<Int>, bool> seen;
  auto key = [n](const IntVec& v) { return std::vector<Int>(v.data(), v.data() + n); };
  std::vector<IntVec> orbit{f.values};
  seen.emplace(key(f.values), true);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    IntVec cur = orbit[head];
    for (int i = 1; i <= n; ++i) {
      // (s_i . f)_j = f_j - cartan(i,j) f_i
      IntVec nxt = cur;
      for (int j = 0; j < n; ++j) nxt[j] -= rs.cartan()(i - 1, j) * cur[i - 1];
      if (seen.emplace(key(nxt), true).second) orbit.push_back(nxt);
    }
  }
  if (dedup_sign) {
    std::map<std::vector<Int>, bool> classes;
    std::vector<IntVec> reduced;
    for (IntVec& v : orbit) {
      IntVec canon = v;
      for (int k = 0; k < n; ++k) {
        if (canon[k] != 0) {
          if (canon[k] < 0) canon = -canon;
          break;
        }
      }
      if (classes.emplace(key(canon), true).second) reduced.push_back(canon);
    }
    orbit = std::move(reduced);
  }
  std::sort(orbit.begin(), orbit.end(), lex_less);
  std::vector<Covector> out;
  out.reserve(orbit.size());
  for (IntVec& v : orbit) out.push_back({std::move(v)});
  return out;
}

}  // namespace rootpoly
