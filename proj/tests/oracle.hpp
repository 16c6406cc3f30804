#pragma once

// Independent reference computations for tests. Nothing here touches the
// library's echelon code: plain Gaussian elimination on int64 matrices,
// brute-force enumeration of small spaces, naive fixpoint loops.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (md(a * x, p) == 1) return x;
  }
  return 0;
}

inline std::size_t rank(std::vector<Row> m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && md(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t iv = inv(md(m[r][c], p), p);
    for (auto& x : m[r]) x = md(x * iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = md(m[i][c], p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = md(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

/// All vectors of F_p^n (only for tiny p^n).
inline std::vector<Row> all_vectors(std::size_t n, std::int64_t p) {
  std::vector<Row> out{Row(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Row> next;
    for (const auto& v : out) {
      for (std::int64_t x = 0; x < p; ++x) {
        Row w = v;
        w[i] = x;
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// The set of all elements of span(gens), by repeated addition.
inline std::set<Row> span_set(const std::vector<Row>& gens, std::size_t n, std::int64_t p) {
  std::set<Row> s{Row(n, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Row> cur(s.begin(), s.end());
    for (const auto& v : cur) {
      for (const auto& g : gens) {
        Row w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = md(v[i] + g[i], p);
        grew |= s.insert(w).second;
      }
    }
  }
  return s;
}

/// Structure constants as c[i][j] = product vector.
using Table = std::vector<std::vector<Row>>;

inline Row mul(const Table& t, const Row& x, const Row& y, std::int64_t p) {
  const std::size_t n = x.size();
  Row out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[k] = md(out[k] + x[i] * y[j] % p * t[i][j][k], p);
    }
  }
  return out;
}

/// Dimension of the two-sided ideal generated by gens: keep multiplying the
/// whole current spanning list by all basis vectors until the rank stops growing.
inline std::size_t ideal_dim(const Table& t, std::vector<Row> gens, std::int64_t p) {
  const std::size_t n = t.size();
  std::size_t r = rank(gens, p);
  while (true) {
    std::vector<Row> more = gens;
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < n; ++i) {
        Row b(n, 0);
        b[i] = 1;
        more.push_back(mul(t, b, g, p));
        more.push_back(mul(t, g, b, p));
      }
    }
    const std::size_t r2 = rank(more, p);
    gens = std::move(more);
    if (r2 == r) return r;
    r = r2;
  }
}

}  // namespace oracle
