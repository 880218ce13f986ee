#pragma once

// Oracles shared by the unit tests. They only use the field tables through
// plain integer arithmetic, so they do not depend on the log tables, RREF or
// the subspace operations they are used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "subcode/linalg.hpp"

namespace oracle {

std::uint64_t seed();
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

/// GF(p^e) by polynomial arithmetic on digit vectors, from a monic modulus
/// (low coefficient first).
struct PolyField {
  int p = 2, e = 1;
  std::vector<int> modulus;  // size e + 1

  int q() const {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  }
  std::vector<int> digits(int a) const {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  int code(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return code(x);
  }
  int neg(int a) const {
    auto x = digits(a);
    for (int i = 0; i < e; ++i) x[i] = (p - x[i]) % p;
    return code(x);
  }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * e - 1; k >= e; --k) {
      const int c = prod[k];
      if (!c) continue;
      for (int i = 0; i <= e; ++i) prod[k - e + i] = ((prod[k - e + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(e);
    return code(prod);
  }
  int inv(int a) const {
    for (int b = 1; b < q(); ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
};

inline PolyField poly_field(const subcode::GaloisField& f) {
  PolyField o;
  o.p = f.characteristic();
  o.e = f.degree();
  o.modulus.assign(f.modulus().begin(), f.modulus().end());
  if (o.e == 1) o.modulus = {0, 1};
  return o;
}

using Vec = std::vector<int>;

/// Every vector of the row space, by enumerating all combinations.
inline std::set<Vec> row_space(const PolyField& f, const std::vector<Vec>& rows, int cols) {
  std::set<Vec> out{Vec(cols, 0)};
  for (const Vec& r : rows) {
    std::set<Vec> next;
    for (const Vec& v : out)
      for (int s = 0; s < f.q(); ++s) {
        Vec w = v;
        for (int j = 0; j < cols; ++j) w[j] = f.add(w[j], f.mul(s, r[j]));
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

inline int log_q(std::size_t n, int q) {
  int d = 0;
  while (n > 1) {
    n /= static_cast<std::size_t>(q);
    ++d;
  }
  return d;
}

inline std::vector<Vec> rows_of(const subcode::Matrix& m) {
  std::vector<Vec> out;
  for (int r = 0; r < m.rows(); ++r) {
    Vec v;
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    out.push_back(v);
  }
  return out;
}

/// Rank by counting the row space.
inline int brute_rank(const subcode::Matrix& m) {
  const PolyField f = poly_field(m.field());
  return log_q(row_space(f, rows_of(m), m.cols()).size(), f.q());
}

inline subcode::Matrix random_matrix(const subcode::GaloisField& f, int rows, int cols, std::mt19937_64& g) {
  subcode::Matrix m(f, rows, cols);
  std::uniform_int_distribution<int> d(0, f.order() - 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<subcode::Fq>(d(g));
  return m;
}

/// Random subspace of dimension <= rows, as the span of random rows.
inline subcode::Subspace random_subspace(const subcode::GaloisField& f, int rows, int v, std::mt19937_64& g) {
  return subcode::Subspace::span(random_matrix(f, rows, v, g));
}

/// Random subspace of exactly dimension k.
inline subcode::Subspace random_subspace_exact(const subcode::GaloisField& f, int k, int v, std::mt19937_64& g) {
  while (true) {
    auto s = random_subspace(f, k, v, g);
    if (s.dim() == k) return s;
  }
}

}  // namespace oracle
