#include "pact/algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pact/error.hpp"
#include "pact/kernels.hpp"

namespace pact {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require_length(const Algebra& alg, const Vector& x) {
  if (x.size() != alg.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "element of length " + std::to_string(x.size()) + " in algebra of dim " + std::to_string(alg.dim()));
  }
}

void require_space(const Algebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim() || !(s.modulus() == alg.modulus())) {
    throw Error(ErrorCode::AmbientMismatch, "subspace does not live in the algebra");
  }
}

// b_i * v
Vector left_basis_mul(const Algebra& alg, std::size_t i, const Vector& v) {
  Vector out(alg.dim(), 0);
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    if (v[j] != 0) kernels::axpy_mod(out, alg.basis_product(i, j), v[j], alg.modulus());
  }
  return out;
}

// v * b_i
Vector right_basis_mul(const Algebra& alg, const Vector& v, std::size_t i) {
  Vector out(alg.dim(), 0);
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    if (v[j] != 0) kernels::axpy_mod(out, alg.basis_product(j, i), v[j], alg.modulus());
  }
  return out;
}

}  // namespace

Algebra::Algebra(PrimeModulus p, std::size_t dim, std::vector<Residue> structure, std::optional<Vector> unit)
    : p_(p), n_(dim), unit_(std::move(unit)) {
  if (structure.size() != dim * dim * dim) {
    throw Error(ErrorCode::InvalidStructure, "structure table needs dim^3 = " + std::to_string(dim * dim * dim) + " entries");
  }
  products_.resize(dim * dim);
  for (std::size_t ij = 0; ij < dim * dim; ++ij) {
    products_[ij].assign(structure.begin() + static_cast<std::ptrdiff_t>(ij * dim),
                         structure.begin() + static_cast<std::ptrdiff_t>((ij + 1) * dim));
    for (auto& c : products_[ij]) {
      if (c >= p.value()) throw Error(ErrorCode::InvalidStructure, "structure constant not reduced mod p");
    }
  }
  if (unit_) {
    if (unit_->size() != dim) throw Error(ErrorCode::DimensionMismatch, "unit has wrong length");
    for (auto c : *unit_) {
      if (c >= p.value()) throw Error(ErrorCode::InvalidStructure, "unit coefficient not reduced mod p");
    }
  }
  nonzero_.resize(dim * dim);
  for (std::size_t ij = 0; ij < dim * dim; ++ij) nonzero_[ij] = !is_zero(products_[ij]);
  report_ = validate_algebra(*this);
}

Algebra Algebra::from_products(PrimeModulus p, std::size_t dim, std::vector<Vector> products, std::optional<Vector> unit) {
  if (products.size() != dim * dim) throw Error(ErrorCode::InvalidStructure, "need dim^2 basis products");
  std::vector<Residue> flat;
  flat.reserve(dim * dim * dim);
  for (const auto& v : products) {
    if (v.size() != dim) throw Error(ErrorCode::InvalidStructure, "basis product has wrong length");
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return Algebra(p, dim, std::move(flat), std::move(unit));
}

Algebra Algebra::checked(PrimeModulus p, std::size_t dim, std::vector<Residue> structure, std::optional<Vector> unit) {
  Algebra a(p, dim, std::move(structure), std::move(unit));
  if (!a.report_.passed(Clause::Associativity)) {
    throw Error(ErrorCode::NotAssociative, a.report_.failures(Clause::Associativity).front());
  }
  if (!a.report_.ok()) throw Error(ErrorCode::InvalidStructure, a.report_.summary());
  return a;
}

Algebra Algebra::pointwise(PrimeModulus p, std::size_t n) {
  std::vector<Residue> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = 1;
  return Algebra(p, n, std::move(c), Vector(n, 1));
}

Algebra Algebra::matrix_units(PrimeModulus p, std::size_t m) {
  const std::size_t n = m * m;
  std::vector<Residue> c(n * n * n, 0);
  Vector unit(n, 0);
  for (std::size_t a = 0; a < m; ++a) {
    unit[a * m + a] = 1;
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t d = 0; d < m; ++d) c[((a * m + b) * n + (b * m + d)) * n + (a * m + d)] = 1;
    }
  }
  return Algebra(p, n, std::move(c), std::move(unit));
}

std::vector<Residue> Algebra::structure() const {
  std::vector<Residue> flat;
  flat.reserve(n_ * n_ * n_);
  for (const auto& v : products_) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

Vector Algebra::mul(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw Error(ErrorCode::DimensionMismatch, "product of elements of wrong length");
  Vector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0 || !nonzero_[i * n_ + j]) continue;
      kernels::axpy_mod(out, products_[i * n_ + j], p_.mul(x[i], y[j]), p_);
    }
  }
  return out;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (products_[i * n_ + j] != products_[j * n_ + i]) return false;
    }
  }
  return true;
}

Report validate_algebra(const Algebra& alg) {
  Report r;
  const std::size_t n = alg.dim();
  const auto& p = alg.modulus();
  r.check(Clause::Associativity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector left(n, 0);
        Vector right(n, 0);
        const Vector& jk = alg.basis_product(j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (ij[l] != 0) kernels::axpy_mod(left, alg.basis_product(l, k), ij[l], p);
          if (jk[l] != 0) kernels::axpy_mod(right, alg.basis_product(i, l), jk[l], p);
        }
        if (left != right) r.fail(Clause::Associativity, "basis triple " + triple(i, j, k));
      }
    }
  }
  if (alg.unit()) {
    r.check(Clause::Unit);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector b = unit_vector(n, i);
      if (alg.mul(*alg.unit(), b) != b || alg.mul(b, *alg.unit()) != b) {
        r.fail(Clause::Unit, "unit fails on basis element " + std::to_string(i));
      }
    }
  }
  return r;
}

Vector mul(const Algebra& alg, const Vector& x, const Vector& y) { return alg.mul(x, y); }

bool is_central(const Algebra& alg, const Vector& x) {
  require_length(alg, x);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (left_basis_mul(alg, i, x) != right_basis_mul(alg, x, i)) return false;
  }
  return true;
}

bool is_idempotent(const Algebra& alg, const Vector& x) { return alg.mul(x, x) == x; }

bool is_multiplicatively_closed(const Algebra& alg, const Subspace& s) {
  require_space(alg, s);
  for (const auto& x : s.basis()) {
    for (const auto& y : s.basis()) {
      if (!s.contains(alg.mul(x, y))) return false;
    }
  }
  return true;
}

Subspace ideal_closure(const Algebra& alg, std::span<const Vector> gens) {
  Subspace s(alg.modulus(), alg.dim());
  std::vector<Vector> frontier;
  for (const auto& g : gens) {
    require_length(alg, g);
    if (s.insert(g)) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < alg.dim() && !s.is_full(); ++i) {
        Vector l = left_basis_mul(alg, i, v);
        if (s.insert(l)) next.push_back(std::move(l));
        Vector r = right_basis_mul(alg, v, i);
        if (s.insert(r)) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

Subspace ideal_closure(const Algebra& alg, const Subspace& gens) {
  require_space(alg, gens);
  return ideal_closure(alg, std::span<const Vector>(gens.basis()));
}

Subspace subring_closure(const Algebra& alg, std::span<const Subspace> parts) {
  Subspace s(alg.modulus(), alg.dim());
  std::vector<Vector> spanning;
  for (const auto& part : parts) {
    require_space(alg, part);
    for (const auto& v : part.basis()) {
      if (s.insert(v)) spanning.push_back(v);
    }
  }
  std::size_t done = 0;
  while (done < spanning.size()) {
    const std::size_t end = spanning.size();
    for (std::size_t a = done; a < end; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        const Vector x = spanning[a];
        const Vector y = spanning[b];
        Vector xy = alg.mul(x, y);
        if (s.insert(xy)) spanning.push_back(std::move(xy));
        if (a != b) {
          Vector yx = alg.mul(y, x);
          if (s.insert(yx)) spanning.push_back(std::move(yx));
        }
      }
    }
    done = end;
  }
  return s;
}

std::optional<IdentityInfo> identity_of(const Algebra& alg, const Subspace& sub) {
  if (!is_multiplicatively_closed(alg, sub)) throw Error(ErrorCode::NotMultiplicativelyClosed, "identity_of on a non-subring");
  const std::size_t n = alg.dim();
  const std::size_t d = sub.dim();
  if (d == 0) return IdentityInfo{zero_vector(n), true, true};
  const auto& s = sub.basis();
  std::vector<Vector> columns(d, Vector(2 * d * n, 0));
  Vector target(2 * d * n, 0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector l = alg.mul(s[k], s[j]);
      const Vector r = alg.mul(s[j], s[k]);
      std::copy(l.begin(), l.end(), columns[k].begin() + static_cast<std::ptrdiff_t>(2 * j * n));
      std::copy(r.begin(), r.end(), columns[k].begin() + static_cast<std::ptrdiff_t>((2 * j + 1) * n));
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::copy(s[j].begin(), s[j].end(), target.begin() + static_cast<std::ptrdiff_t>(2 * j * n));
    std::copy(s[j].begin(), s[j].end(), target.begin() + static_cast<std::ptrdiff_t>((2 * j + 1) * n));
  }
  const auto c = solve(columns, target, alg.modulus());
  if (!c) return std::nullopt;
  IdentityInfo info;
  info.element = sub.combine(*c);
  info.central = is_central(alg, info.element);
  info.idempotent = is_idempotent(alg, info.element);
  return info;
}

bool is_ideal(const Algebra& alg, const Subspace& inner, const Subspace& outer) {
  require_space(alg, inner);
  require_space(alg, outer);
  if (!outer.contains(inner)) throw Error(ErrorCode::NotContained, "is_ideal: inner subspace not inside outer");
  for (const auto& b : outer.basis()) {
    for (const auto& x : inner.basis()) {
      if (!inner.contains(alg.mul(b, x)) || !inner.contains(alg.mul(x, b))) return false;
    }
  }
  return true;
}

bool is_ideal(const Algebra& alg, const Subspace& inner) {
  require_space(alg, inner);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (const auto& x : inner.basis()) {
      if (!inner.contains(left_basis_mul(alg, i, x)) || !inner.contains(right_basis_mul(alg, x, i))) return false;
    }
  }
  return true;
}

Vector Quotient::lift(const Vector& q) const {
  Vector out(projection.domain().ambient_dim(), 0);
  for (std::size_t i = 0; i < complement.size(); ++i) out[complement[i]] = q.at(i);
  return out;
}

Quotient quotient(const Algebra& alg, const Subspace& ideal) {
  if (!is_ideal(alg, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not a two-sided ideal");
  const std::size_t n = alg.dim();
  std::vector<std::size_t> complement;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (k < ideal.pivots().size() && ideal.pivots()[k] == c) {
        ++k;
      } else {
        complement.push_back(c);
      }
    }
  }
  const std::size_t m = complement.size();
  auto down = [&](const Vector& v) {
    const Vector r = ideal.reduce(v);
    Vector q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = r[complement[i]];
    return q;
  };
  std::vector<Vector> products(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) products[a * m + b] = down(alg.basis_product(complement[a], complement[b]));
  }
  std::optional<Vector> unit;
  if (alg.unit()) unit = down(*alg.unit());
  Algebra q = Algebra::from_products(alg.modulus(), m, std::move(products), std::move(unit));
  std::vector<Vector> images;
  for (std::size_t t = 0; t < n; ++t) images.push_back(down(unit_vector(n, t)));
  LinMap proj(alg.full_space(), q.full_space(), std::move(images));
  return Quotient{std::move(q), std::move(proj), std::move(complement)};
}

Subalgebra subalgebra(const Algebra& alg, const Subspace& sub) {
  const auto id = identity_of(alg, sub);
  const std::size_t d = sub.dim();
  std::vector<Vector> products(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) products[a * d + b] = *sub.coordinates_of(alg.mul(sub.basis()[a], sub.basis()[b]));
  }
  std::optional<Vector> unit;
  if (id) unit = *sub.coordinates_of(id->element);
  Algebra s = Algebra::from_products(alg.modulus(), d, std::move(products), std::move(unit));
  LinMap inclusion(s.full_space(), sub, sub.basis());
  return Subalgebra{std::move(s), std::move(inclusion)};
}

bool is_multiplicative(const LinMap& m, const Algebra& dom_alg, const Algebra& cod_alg) {
  const auto& b = m.domain().basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vector xy = dom_alg.mul(b[i], b[j]);
      if (!m.domain().contains(xy)) return false;
      if (m.apply(xy) != cod_alg.mul(m.images()[i], m.images()[j])) return false;
    }
  }
  return true;
}

bool is_ring_iso(const LinMap& m, const Algebra& dom_alg, const Algebra& cod_alg) {
  if (m.domain().ambient_dim() != dom_alg.dim() || m.codomain().ambient_dim() != cod_alg.dim()) return false;
  return m.is_iso() && is_multiplicative(m, dom_alg, cod_alg);
}

Algebra product_ring(const Algebra& alg, std::size_t copies) {
  if (copies == 0) throw Error(ErrorCode::InvalidArgument, "product_ring needs at least one copy");
  const std::size_t n = alg.dim();
  const std::size_t big = n * copies;
  std::vector<Vector> products(big * big, Vector(big, 0));
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector& v = alg.basis_product(i, j);
        std::copy(v.begin(), v.end(), products[(c * n + i) * big + (c * n + j)].begin() + static_cast<std::ptrdiff_t>(c * n));
      }
    }
  }
  std::optional<Vector> unit;
  if (alg.unit()) {
    unit = Vector(big, 0);
    for (std::size_t c = 0; c < copies; ++c) std::copy(alg.unit()->begin(), alg.unit()->end(), unit->begin() + static_cast<std::ptrdiff_t>(c * n));
  }
  return Algebra::from_products(alg.modulus(), big, std::move(products), std::move(unit));
}

Vector inject(const Vector& x, std::size_t copy, std::size_t copies) {
  const std::size_t n = x.size();
  if (copy >= copies) throw Error(ErrorCode::InvalidArgument, "copy index out of range");
  Vector out(n * copies, 0);
  std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(copy * n));
  return out;
}

Vector project(const Vector& x, std::size_t copy, std::size_t block) {
  if ((copy + 1) * block > x.size()) throw Error(ErrorCode::InvalidArgument, "copy index out of range");
  return Vector(x.begin() + static_cast<std::ptrdiff_t>(copy * block), x.begin() + static_cast<std::ptrdiff_t>((copy + 1) * block));
}

bool local_units_witness(const Algebra& alg, const Subspace& sub, std::span<const Vector> candidates) {
  require_space(alg, sub);
  const auto& p = alg.modulus();
  std::set<Vector> closed;
  for (const auto& c : candidates) {
    require_length(alg, c);
    if (!is_central(alg, c) || !is_idempotent(alg, c)) {
      throw Error(ErrorCode::NotCentralIdempotent, "candidate " + to_string(c) + " is not a central idempotent");
    }
    closed.insert(c);
  }
  std::vector<Vector> list(closed.begin(), closed.end());
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      Vector join = pact::sub(add(list[a], list[b], p), alg.mul(list[a], list[b]), p);
      if (closed.insert(join).second) list.push_back(std::move(join));
    }
  }
  for (const auto& v : sub.basis()) {
    const bool absorbed = std::any_of(list.begin(), list.end(), [&](const Vector& e) { return alg.mul(e, v) == v; });
    if (!absorbed) return false;
  }
  return true;
}

}  // namespace pact
