#include "pact/subspace.hpp"

#include <algorithm>

#include "pact/error.hpp"
#include "pact/kernels.hpp"

namespace pact {

Subspace::Subspace(PrimeModulus p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {}

Subspace Subspace::span(PrimeModulus p, std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(p, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(PrimeModulus p, std::size_t ambient_dim) {
  Subspace s(p, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::coordinates(PrimeModulus p, std::size_t ambient_dim, std::span<const std::size_t> indices) {
  Subspace s(p, ambient_dim);
  for (std::size_t i : indices) {
    if (i >= ambient_dim) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
    s.insert(unit_vector(ambient_dim, i));
  }
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue c = r[pivots_[i]];
    if (c != 0) kernels::axpy_mod(r, rows_[i], p_.neg(c), p_);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return pact::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || !(other.p_ == p_)) throw Error(ErrorCode::AmbientMismatch, "subspaces live in different spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates_of(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::combine(std::span<const Residue> coeffs) const {
  if (coeffs.size() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count does not match subspace dimension");
  Vector out(n_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) kernels::axpy_mod(out, rows_[i], coeffs[i], p_);
  return out;
}

bool Subspace::insert(Vector v) {
  v = reduce(v);
  const std::size_t k = kernels::first_nonzero(v);
  if (k == n_) return false;
  kernels::scale_mod(v, p_.inv(v[k]), p_);
  for (auto& row : rows_) {
    const Residue c = row[k];
    if (c != 0) kernels::axpy_mod(row, v, p_.neg(c), p_);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), k) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, k);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.modulus() == v.modulus())) {
    throw Error(ErrorCode::AmbientMismatch, "sum of subspaces in different spaces");
  }
  Subspace s = u;
  for (const auto& row : v.basis()) s.insert(row);
  return s;
}

// Zassenhaus: rows (u|u) and (v|0); rows of the echelon form with zero left
// half carry a basis of the intersection in their right half.
Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.modulus() == v.modulus())) {
    throw Error(ErrorCode::AmbientMismatch, "intersection of subspaces in different spaces");
  }
  const std::size_t n = u.ambient_dim();
  const auto& p = u.modulus();
  if (u.is_zero() || v.is_zero()) return Subspace(p, n);
  Subspace big(p, 2 * n);
  for (const auto& row : u.basis()) {
    Vector w(2 * n);
    std::copy(row.begin(), row.end(), w.begin());
    std::copy(row.begin(), row.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    big.insert(std::move(w));
  }
  for (const auto& row : v.basis()) {
    Vector w(2 * n, 0);
    std::copy(row.begin(), row.end(), w.begin());
    big.insert(std::move(w));
  }
  Subspace out(p, n);
  for (std::size_t i = 0; i < big.dim(); ++i) {
    if (big.pivots()[i] >= n) out.insert(Vector(big.basis()[i].begin() + static_cast<std::ptrdiff_t>(n), big.basis()[i].end()));
  }
  return out;
}

std::vector<Vector> left_kernel(std::span<const Vector> rows, std::size_t row_length, const PrimeModulus& p) {
  const std::size_t k = rows.size();
  Subspace aug(p, row_length + k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != row_length) throw Error(ErrorCode::DimensionMismatch, "ragged rows in kernel computation");
    Vector w(row_length + k, 0);
    std::copy(rows[i].begin(), rows[i].end(), w.begin());
    w[row_length + i] = 1;
    aug.insert(std::move(w));
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < aug.dim(); ++i) {
    if (aug.pivots()[i] >= row_length) {
      out.emplace_back(aug.basis()[i].begin() + static_cast<std::ptrdiff_t>(row_length), aug.basis()[i].end());
    }
  }
  return out;
}

std::optional<Vector> solve(std::span<const Vector> columns, const Vector& target, const PrimeModulus& p) {
  std::vector<Vector> rows(columns.begin(), columns.end());
  rows.push_back(target);
  const auto ker = left_kernel(rows, target.size(), p);
  const std::size_t k = columns.size();
  for (const auto& c : ker) {
    if (c[k] != 0) {
      const Residue factor = p.neg(p.inv(c[k]));
      Vector sol(k);
      for (std::size_t i = 0; i < k; ++i) sol[i] = p.mul(c[i], factor);
      return sol;
    }
  }
  return std::nullopt;
}

std::size_t rank(std::span<const Vector> rows, std::size_t row_length, const PrimeModulus& p) {
  return Subspace::span(p, row_length, rows).dim();
}

Vector zero_vector(std::size_t n) { return Vector(n, 0); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b, const PrimeModulus& p) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add length mismatch");
  Vector r = a;
  kernels::axpy_mod(r, b, 1, p);
  return r;
}

Vector sub(const Vector& a, const Vector& b, const PrimeModulus& p) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sub length mismatch");
  Vector r = a;
  kernels::axpy_mod(r, b, p.neg(1), p);
  return r;
}

Vector scale(const Vector& a, Residue c, const PrimeModulus& p) {
  Vector r = a;
  kernels::scale_mod(r, c, p);
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace pact
