#pragma once

#include <vector>

#include "pact/subspace.hpp"

namespace pact {

/// A linear map between subspaces, possibly of different ambient spaces.
/// Stored as the images of the domain's canonical basis vectors, written in
/// the codomain's ambient coordinates.
class LinMap {
 public:
  /// images[i] is the image of domain.basis()[i]; each must lie in codomain.
  LinMap(Subspace domain, Subspace codomain, std::vector<Vector> images);

  /// Row i of `matrix` holds the codomain-basis coordinates of the image of
  /// domain.basis()[i].
  static LinMap from_matrix(Subspace domain, Subspace codomain, const std::vector<Vector>& matrix);
  static LinMap identity(const Subspace& s);
  /// Map defined by evaluating `f` on each domain basis vector.
  template <class F>
  static LinMap from_function(Subspace domain, Subspace codomain, F&& f) {
    std::vector<Vector> images;
    images.reserve(domain.dim());
    for (const auto& b : domain.basis()) images.push_back(f(b));
    return LinMap(std::move(domain), std::move(codomain), std::move(images));
  }

  const Subspace& domain() const { return domain_; }
  const Subspace& codomain() const { return codomain_; }
  const std::vector<Vector>& images() const { return images_; }
  std::vector<Vector> matrix() const;

  /// Throws NotContained when v is outside the domain.
  Vector apply(const Vector& v) const;
  Subspace image() const;
  /// Image of a subspace of the domain.
  Subspace image_of(const Subspace& s) const;
  /// {x in domain : f(x) in w}.
  Subspace preimage(const Subspace& w) const;

  std::size_t rank() const;
  bool is_injective() const { return rank() == domain_.dim(); }
  /// Bijective onto the stated codomain.
  bool is_iso() const { return domain_.dim() == codomain_.dim() && is_injective(); }

  /// Restriction to a subspace of the domain; the codomain is kept.
  LinMap restrict(const Subspace& new_domain) const;
  /// Restriction with a new codomain that must contain the image.
  LinMap restrict(const Subspace& new_domain, const Subspace& new_codomain) const;
  LinMap inverse() const;

 private:
  Subspace domain_;
  Subspace codomain_;
  std::vector<Vector> images_;
};

/// f o g. The image of g must lie in the domain of f.
LinMap compose(const LinMap& f, const LinMap& g);
/// Composition of partial bijections: f o g restricted to g^{-1}(dom f).
LinMap compose_partial(const LinMap& f, const LinMap& g);
/// True iff f and g take equal values on a basis of s (s within both domains).
bool agree_on(const LinMap& f, const LinMap& g, const Subspace& s);
/// Equal domains and equal values: equality of partial maps.
bool same_partial_map(const LinMap& f, const LinMap& g);
/// f is a restriction of g: dom f within dom g and values agree.
bool is_restriction_of(const LinMap& f, const LinMap& g);

}  // namespace pact
