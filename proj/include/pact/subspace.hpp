#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pact/modular.hpp"

namespace pact {

/// A linear subspace of F_p^n held in reduced row echelon form. The canonical
/// form makes subspace equality plain matrix equality.
class Subspace {
 public:
  /// The zero subspace of F_p^n.
  Subspace(PrimeModulus p, std::size_t ambient_dim);

  static Subspace span(PrimeModulus p, std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace full(PrimeModulus p, std::size_t ambient_dim);
  /// Span of the standard basis vectors e_i, i in `indices`.
  static Subspace coordinates(PrimeModulus p, std::size_t ambient_dim, std::span<const std::size_t> indices);

  const PrimeModulus& modulus() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == n_; }

  /// Canonical basis rows; row i has leading 1 in column pivots()[i].
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical representative of v + U: v with every pivot coordinate cleared.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, if v lies in the subspace.
  std::optional<Vector> coordinates_of(const Vector& v) const;
  /// Sum of coeffs[i] * basis()[i].
  Vector combine(std::span<const Residue> coeffs) const;

  /// Adds v to the spanning set; returns true when the dimension grew.
  bool insert(Vector v);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Basis of {c : sum_i c_i rows_i = 0}. Rows must share one length.
std::vector<Vector> left_kernel(std::span<const Vector> rows, std::size_t row_length, const PrimeModulus& p);

/// Some c with sum_i c_i columns_i = target, if the system is consistent.
std::optional<Vector> solve(std::span<const Vector> columns, const Vector& target, const PrimeModulus& p);

std::size_t rank(std::span<const Vector> rows, std::size_t row_length, const PrimeModulus& p);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b, const PrimeModulus& p);
Vector sub(const Vector& a, const Vector& b, const PrimeModulus& p);
Vector scale(const Vector& a, Residue c, const PrimeModulus& p);
bool is_zero(const Vector& v);

}  // namespace pact
