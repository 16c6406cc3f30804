#include "pact/linmap.hpp"

#include "pact/error.hpp"
#include "pact/kernels.hpp"

namespace pact {

LinMap::LinMap(Subspace domain, Subspace codomain, std::vector<Vector> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!(domain_.modulus() == codomain_.modulus())) throw Error(ErrorCode::AmbientMismatch, "map between different fields");
  if (images_.size() != domain_.dim()) throw Error(ErrorCode::DimensionMismatch, "one image per domain basis vector required");
  for (const auto& im : images_) {
    if (im.size() != codomain_.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "image has wrong ambient length");
    if (!codomain_.contains(im)) throw Error(ErrorCode::NotContained, "image " + to_string(im) + " outside codomain");
  }
}

LinMap LinMap::from_matrix(Subspace domain, Subspace codomain, const std::vector<Vector>& matrix) {
  if (matrix.size() != domain.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix needs one row per domain basis vector");
  std::vector<Vector> images;
  for (const auto& row : matrix) images.push_back(codomain.combine(row));
  return LinMap(std::move(domain), std::move(codomain), std::move(images));
}

LinMap LinMap::identity(const Subspace& s) { return LinMap(s, s, s.basis()); }

std::vector<Vector> LinMap::matrix() const {
  std::vector<Vector> out;
  for (const auto& im : images_) out.push_back(*codomain_.coordinates_of(im));
  return out;
}

Vector LinMap::apply(const Vector& v) const {
  const auto coeffs = domain_.coordinates_of(v);
  if (!coeffs) throw Error(ErrorCode::NotContained, "vector " + to_string(v) + " outside map domain");
  Vector out(codomain_.ambient_dim(), 0);
  const auto& p = domain_.modulus();
  for (std::size_t i = 0; i < images_.size(); ++i) kernels::axpy_mod(out, images_[i], (*coeffs)[i], p);
  return out;
}

Subspace LinMap::image() const { return Subspace::span(domain_.modulus(), codomain_.ambient_dim(), images_); }

Subspace LinMap::image_of(const Subspace& s) const {
  Subspace out(domain_.modulus(), codomain_.ambient_dim());
  for (const auto& b : s.basis()) out.insert(apply(b));
  return out;
}

Subspace LinMap::preimage(const Subspace& w) const {
  const auto& p = domain_.modulus();
  std::vector<Vector> residuals;
  residuals.reserve(images_.size());
  for (const auto& im : images_) residuals.push_back(w.reduce(im));
  Subspace out(p, domain_.ambient_dim());
  for (const auto& c : left_kernel(residuals, codomain_.ambient_dim(), p)) out.insert(domain_.combine(c));
  return out;
}

std::size_t LinMap::rank() const { return pact::rank(images_, codomain_.ambient_dim(), domain_.modulus()); }

LinMap LinMap::restrict(const Subspace& new_domain) const { return restrict(new_domain, codomain_); }

LinMap LinMap::restrict(const Subspace& new_domain, const Subspace& new_codomain) const {
  if (!domain_.contains(new_domain)) throw Error(ErrorCode::NotContained, "restriction domain outside map domain");
  return from_function(new_domain, new_codomain, [&](const Vector& v) { return apply(v); });
}

LinMap LinMap::inverse() const {
  if (!is_iso()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-bijective map");
  const auto& p = domain_.modulus();
  std::vector<Vector> images;
  for (const auto& c : codomain_.basis()) {
    const auto coeffs = solve(images_, c, p);
    images.push_back(domain_.combine(*coeffs));
  }
  return LinMap(codomain_, domain_, std::move(images));
}

LinMap compose(const LinMap& f, const LinMap& g) {
  return LinMap::from_function(g.domain(), f.codomain(), [&](const Vector& v) { return f.apply(g.apply(v)); });
}

LinMap compose_partial(const LinMap& f, const LinMap& g) {
  const Subspace dom = g.preimage(f.domain());
  return LinMap::from_function(dom, f.codomain(), [&](const Vector& v) { return f.apply(g.apply(v)); });
}

bool agree_on(const LinMap& f, const LinMap& g, const Subspace& s) {
  for (const auto& b : s.basis()) {
    if (f.apply(b) != g.apply(b)) return false;
  }
  return true;
}

bool same_partial_map(const LinMap& f, const LinMap& g) {
  return f.domain() == g.domain() && agree_on(f, g, f.domain());
}

bool is_restriction_of(const LinMap& f, const LinMap& g) {
  return g.domain().contains(f.domain()) && agree_on(f, g, f.domain());
}

}  // namespace pact
