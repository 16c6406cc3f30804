#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pact/linmap.hpp"
#include "pact/modular.hpp"
#include "pact/report.hpp"
#include "pact/subspace.hpp"

namespace pact {

/// Finite-dimensional algebra over F_p given by structure constants
/// b_i * b_j = sum_k c[i][j][k] b_k. Elements are coefficient vectors.
///
/// Construction always runs the associativity scan; the result is kept in
/// validation(). Skew rings of non-unital actions may fail it, so the
/// constructor records rather than throws. Use Algebra::checked for a
/// constructor that rejects invalid tables.
class Algebra {
 public:
  /// `structure` is flat, index (i * dim + j) * dim + k.
  Algebra(PrimeModulus p, std::size_t dim, std::vector<Residue> structure, std::optional<Vector> unit = std::nullopt);
  /// Construct from basis products: products[i * dim + j] = b_i * b_j.
  static Algebra from_products(PrimeModulus p, std::size_t dim, std::vector<Vector> products,
                               std::optional<Vector> unit = std::nullopt);
  /// Throws NotAssociative / InvalidStructure when validation fails.
  static Algebra checked(PrimeModulus p, std::size_t dim, std::vector<Residue> structure,
                         std::optional<Vector> unit = std::nullopt);

  /// F_p^n with componentwise product.
  static Algebra pointwise(PrimeModulus p, std::size_t n);
  /// m x m matrices over F_p; basis E_ab at index a * m + b.
  static Algebra matrix_units(PrimeModulus p, std::size_t m);

  const PrimeModulus& modulus() const { return p_; }
  std::size_t dim() const { return n_; }
  const std::optional<Vector>& unit() const { return unit_; }
  Residue constant(std::size_t i, std::size_t j, std::size_t k) const { return products_[i * n_ + j][k]; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
  std::vector<Residue> structure() const;

  Vector mul(const Vector& x, const Vector& y) const;
  Vector basis(std::size_t i) const { return unit_vector(n_, i); }
  Vector zero() const { return zero_vector(n_); }
  Subspace full_space() const { return Subspace::full(p_, n_); }
  Subspace zero_space() const { return Subspace(p_, n_); }

  const Report& validation() const { return report_; }
  bool is_associative() const { return report_.passed(Clause::Associativity); }
  bool is_commutative() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.products_ == b.products_ && a.unit_ == b.unit_;
  }

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<Vector> products_;
  std::optional<Vector> unit_;
  Report report_;
  std::vector<std::uint8_t> nonzero_;
};

/// Associator scan on all basis triples, plus the unit check.
Report validate_algebra(const Algebra& alg);

/// Throws DimensionMismatch on wrong element length.
Vector mul(const Algebra& alg, const Vector& x, const Vector& y);

bool is_central(const Algebra& alg, const Vector& x);
bool is_idempotent(const Algebra& alg, const Vector& x);
bool is_multiplicatively_closed(const Algebra& alg, const Subspace& s);

/// Two-sided ideal generated by `gens`.
Subspace ideal_closure(const Algebra& alg, std::span<const Vector> gens);
Subspace ideal_closure(const Algebra& alg, const Subspace& gens);
/// Smallest multiplicatively closed subspace containing every part.
Subspace subring_closure(const Algebra& alg, std::span<const Subspace> parts);

struct IdentityInfo {
  Vector element;
  bool central = false;
  bool idempotent = false;
};

/// Identity element of the subring `sub`, if any. The zero subspace has
/// identity 0. Throws NotMultiplicativelyClosed.
std::optional<IdentityInfo> identity_of(const Algebra& alg, const Subspace& sub);

/// inner is a two-sided ideal of outer. Throws NotContained unless inner <= outer.
bool is_ideal(const Algebra& alg, const Subspace& inner, const Subspace& outer);
bool is_ideal(const Algebra& alg, const Subspace& inner);

struct Quotient {
  Algebra algebra;
  /// Surjection from the full space of the parent onto the quotient space.
  LinMap projection;
  /// Parent coordinates used as the quotient basis.
  std::vector<std::size_t> complement;

  /// Representative in the parent with support on `complement`.
  Vector lift(const Vector& q) const;
};

/// Throws NotAnIdeal.
Quotient quotient(const Algebra& alg, const Subspace& ideal);

struct Subalgebra {
  /// Coordinates are taken in the canonical basis of the subspace.
  Algebra algebra;
  /// From the full space of `algebra` onto the subspace of the parent.
  LinMap inclusion;
};

/// Throws NotMultiplicativelyClosed.
Subalgebra subalgebra(const Algebra& alg, const Subspace& sub);

bool is_multiplicative(const LinMap& m, const Algebra& dom_alg, const Algebra& cod_alg);
bool is_ring_iso(const LinMap& m, const Algebra& dom_alg, const Algebra& cod_alg);

/// A^k with componentwise product; copy c occupies coordinates [c*n, (c+1)*n).
Algebra product_ring(const Algebra& alg, std::size_t copies);
Vector inject(const Vector& x, std::size_t copy, std::size_t copies);
Vector project(const Vector& x, std::size_t copy, std::size_t block);

/// Closes the central idempotents under e v f = e + f - ef and checks that
/// every basis vector of sub is absorbed by one of them. Throws
/// NotCentralIdempotent.
bool local_units_witness(const Algebra& alg, const Subspace& sub, std::span<const Vector> candidates);

}  // namespace pact
