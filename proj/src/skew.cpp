#include "pact/skew.hpp"

#include "pact/error.hpp"

namespace pact {

namespace {

Vector unit_of(const Algebra& alg, const Subspace& ideal) {
  auto id = identity_of(alg, ideal);
  if (!id || !id->central || !id->idempotent) throw Error(ErrorCode::NotPreunital, "ideal has no central identity");
  return id->element;
}

std::optional<std::pair<std::size_t, Vector>> skew_product(const Algebra& A, const LinMap& alpha_x, const LinMap& alpha_x_inv,
                                                           std::size_t xy, const Vector& a, const Vector& b) {
  const Vector t = A.mul(alpha_x_inv.apply(a), b);
  return std::make_pair(xy, alpha_x.apply(t));
}

// Join of commuting idempotents: u v x = u + x - ux. Over a groupoid the
// 1_e delta_e are orthogonal and this is their sum; over an inverse semigroup
// comparable idempotents are identified in the quotient and the plain sum
// overcounts.
Vector join_all(const Algebra& alg, const std::vector<Vector>& xs) {
  const auto& p = alg.modulus();
  Vector u = alg.zero();
  for (const auto& x : xs) u = sub(add(u, x, p), alg.mul(u, x), p);
  return u;
}

std::string dim_detail(const char* what, const Subspace& got, const Subspace& want) {
  return std::string(what) + ": dim " + std::to_string(got.dim()) + " vs expected dim " + std::to_string(want.dim());
}

Subspace span_of(const PrimeModulus& p, std::size_t n, const std::vector<Vector>& vs) { return Subspace::span(p, n, vs); }

// Shared part of both Morita checks. Labels x run over arrows or elements.
struct MoritaInput {
  std::size_t labels;
  std::function<bool(std::size_t)> is_unit_label;
  std::function<std::size_t(std::size_t)> ran;
  std::function<std::size_t(std::size_t)> dom;
  const Algebra* a_carrier;
  const std::vector<Subspace>* a_ideals;
  const std::vector<LinMap>* beta;
  const std::vector<std::optional<LinMap>>* phi;
};

MoritaReport morita_core(OrderedSkewRing r_ring, OrderedSkewRing t_ring, const MoritaInput& in) {
  MoritaReport out{std::move(r_ring), std::move(t_ring), {}, {PrimeModulus(2), 0}, {PrimeModulus(2), 0},
                   {PrimeModulus(2), 0}, {PrimeModulus(2), 0}, {PrimeModulus(2), 0}, {}};
  const OrderedSkewRing& R = out.R;
  const OrderedSkewRing& T = out.T;
  const Algebra& Tq = T.algebra();
  const auto& p = Tq.modulus();
  const std::size_t n = Tq.dim();
  const auto& A = *in.a_carrier;
  const auto& ideals = *in.a_ideals;
  const auto& phi = *in.phi;

  std::vector<Vector> r_parts, t_parts;
  bool coherent = true;
  for (std::size_t e = 0; e < in.labels; ++e) {
    if (!in.is_unit_label(e)) continue;
    const Vector u = unit_of(A, ideals[e]);
    r_parts.push_back(R.element(e, u));
    t_parts.push_back(T.element(e, phi[e]->apply(u)));
    for (std::size_t f = 0; f < in.labels; ++f) {
      if (in.is_unit_label(f) && f != e && ideals[f].contains(ideals[e]) && !agree_on(*phi[e], *phi[f], ideals[e]))
        coherent = false;
    }
  }
  const Vector r_unit = join_all(R.algebra(), r_parts);
  const Vector one = join_all(Tq, t_parts);

  std::vector<Vector> r_gens, t1r_gens, one_rt_gens;
  for (std::size_t x = 0; x < in.labels; ++x) {
    const LinMap& phi_r = *phi[in.ran(x)];
    const LinMap& phi_d = *phi[in.dom(x)];
    for (const auto& b : ideals[x].basis()) r_gens.push_back(T.element(x, phi_r.apply(b)));
    for (const auto& b : ideals[in.dom(x)].basis()) t1r_gens.push_back(T.element(x, (*in.beta)[x].apply(phi_d.apply(b))));
    for (const auto& b : ideals[in.ran(x)].basis()) one_rt_gens.push_back(T.element(x, phi_r.apply(b)));
  }
  const Subspace r_image = span_of(p, n, r_gens);
  const Subspace expected_t1r = span_of(p, n, t1r_gens);
  const Subspace expected_1rt = span_of(p, n, one_rt_gens);

  std::vector<Vector> t1r, one_rt, one_rt_one_r, t_one_r_t;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector b = Tq.basis(i);
    t1r.push_back(Tq.mul(b, one));
    one_rt.push_back(Tq.mul(one, b));
    one_rt_one_r.push_back(Tq.mul(Tq.mul(one, b), one));
    const Vector left = Tq.mul(b, one);
    for (std::size_t j = 0; j < n; ++j) t_one_r_t.push_back(Tq.mul(left, Tq.basis(j)));
  }
  out.one_R = one;
  out.r_image = r_image;
  out.t_one_r = span_of(p, n, t1r);
  out.one_r_t = span_of(p, n, one_rt);
  out.one_r_t_one_r = span_of(p, n, one_rt_one_r);
  out.t_one_r_t = span_of(p, n, t_one_r_t);
  Report& rep = out.report;
  const Subspace full = Subspace::full(p, n);
  const Subspace& M = out.one_r_t;
  const Subspace& Mp = out.t_one_r;

  rep.expect(Clause::SkewUnit, is_two_sided_identity(out.R.algebra(), r_unit) && Tq.mul(one, one) == one,
             "1_R is not an identity of R or not idempotent in T");
  rep.expect(Clause::Prop51i, Mp == expected_t1r, dim_detail("T1_R", Mp, expected_t1r));
  rep.expect(Clause::Prop51ii, M == expected_1rt, dim_detail("1_RT", M, expected_1rt));
  rep.expect(Clause::Prop51iii, out.one_r_t_one_r == r_image && r_image.dim() == out.R.dim(),
             dim_detail("1_RT1_R", out.one_r_t_one_r, r_image) + ", dim R " + std::to_string(out.R.dim()) +
                 (coherent ? "" : "; the embeddings are not restrictions of one map A -> B"));
  rep.expect(Clause::Prop51iv, out.t_one_r_t == full, dim_detail("T1_RT", out.t_one_r_t, full));

  auto context_fails = [&](const Subspace& u, const Subspace& v, const Subspace& w) {
    for (const auto& x : u.basis())
      for (const auto& y : v.basis())
        for (const auto& z : w.basis())
          if (Tq.mul(Tq.mul(x, y), z) != Tq.mul(x, Tq.mul(y, z))) return true;
    return false;
  };
  rep.expect(Clause::ContextI, !context_fails(M, Mp, M), "phi(x (x) x')y != x phi'(x' (x) y)");
  rep.expect(Clause::ContextII, !context_fails(Mp, M, Mp), "x' phi(x (x) y') != phi'(x' (x) x) y'");
  const Subspace mm = product_span(Tq, M, Mp);
  const Subspace mpm = product_span(Tq, Mp, M);
  rep.expect(Clause::Surjective, mm == r_image, dim_detail("M M'", mm, r_image));
  rep.expect(Clause::Surjective, mpm == full, dim_detail("M' M", mpm, full));
  const Subspace r_full = out.R.algebra().full_space();
  rep.expect(Clause::Idempotent, product_span(out.R.algebra(), r_full, r_full) == r_full, "R^2 != R");
  rep.expect(Clause::Idempotent, product_span(Tq, full, full) == full, "T^2 != T");
  rep.expect(Clause::UnitalModules, product_span(Tq, r_image, M) == M, "R M != M");
  rep.expect(Clause::UnitalModules, product_span(Tq, M, full) == M, "M T != M");
  rep.expect(Clause::UnitalModules, product_span(Tq, full, Mp) == Mp, "T M' != M'");
  rep.expect(Clause::UnitalModules, product_span(Tq, Mp, r_image) == Mp, "M' R != M'");
  return out;
}

}  // namespace

Vector SkewRing::element(std::size_t x, const Vector& a) const {
  auto c = system.pieces.at(x).coordinates_of(a);
  if (!c) throw Error(ErrorCode::NotContained, "element outside A_" + system.names.at(x), system.names.at(x));
  Vector out(dim(), 0);
  std::copy(c->begin(), c->end(), out.begin() + static_cast<long>(offset[x]));
  return out;
}

std::optional<std::size_t> SkewRing::degree(const Vector& v) const {
  std::optional<std::size_t> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (d && *d != grading[i]) return std::nullopt;
    d = grading[i];
  }
  return d;
}

GradedSystem graded_system(const POAction& a) {
  auto act = std::make_shared<const POAction>(a);
  GradedSystem s;
  s.carrier = a.carrier;
  s.pieces = a.ideals;
  s.names = a.G().data().names;
  s.product = [act](std::size_t x, const Vector& u, std::size_t y, const Vector& v)
      -> std::optional<std::pair<std::size_t, Vector>> {
    const auto xy = act->G().comp(x, y);
    if (!xy) return std::nullopt;
    return skew_product(act->A(), act->map(x), act->map(act->G().inv(x)), *xy, u, v);
  };
  for (Arrow g = 0; g < a.size(); ++g)
    for (Arrow h = 0; h < a.size(); ++h)
      if (g != h && a.G().leq(g, h)) s.order.emplace_back(g, h);
  return s;
}

GradedSystem graded_system(const InvSgpAction& a) {
  auto act = std::make_shared<const InvSgpAction>(a);
  GradedSystem s;
  s.carrier = a.carrier;
  s.pieces = a.ideals;
  s.names = a.S().data().names;
  s.product = [act](std::size_t x, const Vector& u, std::size_t y, const Vector& v)
      -> std::optional<std::pair<std::size_t, Vector>> {
    const auto& S = act->S();
    return skew_product(act->A(), act->maps[x], act->maps[S.inv(x)], S.mul(x, y), u, v);
  };
  for (Element x = 0; x < a.S().size(); ++x)
    for (Element y = 0; y < a.S().size(); ++y)
      if (x != y && a.S().leq(x, y)) s.order.emplace_back(x, y);
  return s;
}

SkewRing build_skew(const GradedSystem& s) {
  const auto& A = *s.carrier;
  const auto& p = A.modulus();
  std::vector<std::size_t> offset, grading;
  std::size_t total = 0;
  for (std::size_t x = 0; x < s.pieces.size(); ++x) {
    offset.push_back(total);
    for (std::size_t i = 0; i < s.pieces[x].dim(); ++i) grading.push_back(x);
    total += s.pieces[x].dim();
  }
  std::vector<Vector> products(total * total, Vector(total, 0));
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t x = grading[i];
    const Vector& a = s.pieces[x].basis()[i - offset[x]];
    for (std::size_t j = 0; j < total; ++j) {
      const std::size_t y = grading[j];
      const Vector& b = s.pieces[y].basis()[j - offset[y]];
      const auto r = s.product(x, a, y, b);
      if (!r) continue;
      const auto c = s.pieces[r->first].coordinates_of(r->second);
      if (!c) {
        throw Error(ErrorCode::InvalidStructure,
                    "product of pieces " + s.names[x] + ", " + s.names[y] + " leaves A_" + s.names[r->first]);
      }
      std::copy(c->begin(), c->end(), products[i * total + j].begin() + static_cast<long>(offset[r->first]));
    }
  }
  return SkewRing{s, Algebra::from_products(p, total, std::move(products)), std::move(grading), std::move(offset)};
}

SkewRing build_skew(const POAction& a) {
  const Report r = validate_po_action(a);
  if (!r.ok()) throw Error(ErrorCode::InvalidStructure, "action is not valid: " + r.summary());
  return build_skew(graded_system(a));
}

Report check_skew_associative(const SkewRing& s) {
  Report out;
  out.check(Clause::Associativity);
  for (const auto& v : s.algebra.validation().violations())
    if (v.clause == Clause::Associativity) out.fail(Clause::Associativity, v.detail);
  return out;
}

bool check_grading(const SkewRing& s) {
  const auto& sys = s.system;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const std::size_t x = s.grading[i], y = s.grading[j];
      const auto r = sys.product(x, sys.pieces[x].basis()[i - s.offset[x]], y, sys.pieces[y].basis()[j - s.offset[y]]);
      const Vector& v = s.algebra.basis_product(i, j);
      if (is_zero(v)) continue;
      if (!r) return false;
      const auto d = s.degree(v);
      if (!d || *d != r->first) return false;
    }
  }
  return true;
}

Vector OrderedSkewRing::element(std::size_t x, const Vector& a) const {
  return quotient.projection.apply(skew.element(x, a));
}

OrderedSkewRing build_ordered_skew(SkewRing s) {
  const Report assoc = check_skew_associative(s);
  if (!assoc.ok()) throw Error(ErrorCode::NotAssociative, assoc.failures(Clause::Associativity).front());
  const auto& p = s.algebra.modulus();
  std::vector<Vector> gens;
  for (const auto& [x, y] : s.system.order) {
    for (const auto& b : s.system.pieces[x].basis()) {
      if (!s.system.pieces[y].contains(b)) {
        throw Error(ErrorCode::InvalidStructure, "A_" + s.system.names[x] + " is not inside A_" + s.system.names[y],
                    s.system.names[x]);
      }
      gens.push_back(sub(s.element(x, b), s.element(y, b), p));
    }
  }
  Subspace n = ideal_closure(s.algebra, gens);
  Quotient q = quotient(s.algebra, n);
  return OrderedSkewRing{std::move(s), std::move(n), std::move(q)};
}

bool is_two_sided_identity(const Algebra& alg, const Vector& u) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vector b = alg.basis(i);
    if (alg.mul(u, b) != b || alg.mul(b, u) != b) return false;
  }
  return true;
}

Vector skew_unit(const OrderedSkewRing& o, const POAction& a) {
  const auto us = units(a);
  Vector out = o.algebra().zero();
  for (Arrow e : a.G().objects()) {
    if (!us[e]) throw Error(ErrorCode::NotPreunital, "A_" + a.G().name(e) + " has no central identity", a.G().name(e));
    out = add(out, o.element(e, *us[e]), o.algebra().modulus());
  }
  return out;
}

Vector skew_unit(const OrderedSkewRing& o, const InvSgpAction& a) {
  std::vector<Vector> parts;
  for (Element e : a.S().idempotents()) {
    Vector u;
    try {
      u = unit_of(a.A(), a.ideals[e]);
    } catch (const Error&) {
      throw Error(ErrorCode::NotPreunital, "A_" + a.S().name(e) + " has no central identity", a.S().name(e));
    }
    parts.push_back(o.element(e, u));
  }
  return join_all(o.algebra(), parts);
}

OrderedSkewRing build_inv_sgp_skew(const InvSgpAction& a) {
  const Report r = validate_inv_sgp_action(a);
  if (!r.ok()) throw Error(ErrorCode::InvalidStructure, "action is not valid: " + r.summary());
  if (auto s = first_non_unital(a)) {
    throw Error(ErrorCode::NotUnital, "A_" + a.S().name(*s) + " has no central identity", a.S().name(*s));
  }
  return build_ordered_skew(build_skew(graded_system(a)));
}

Subspace product_span(const Algebra& alg, const Subspace& u, const Subspace& v) {
  Subspace out(alg.modulus(), alg.dim());
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) out.insert(alg.mul(x, y));
  return out;
}

MoritaReport morita_context(const POAction& a, const Globalization& g) {
  if (auto e = first_non_unital(a)) {
    throw Error(ErrorCode::NotUnital, "A_" + a.G().name(*e) + " has no central identity", a.G().name(*e));
  }
  if (!g.report.ok()) throw Error(ErrorCode::NotAGlobalization, g.report.summary());
  if (!(g.base.A() == a.A()) || g.base.ideals != a.ideals || !same_groupoid(g.base.G(), a.G())) {
    throw Error(ErrorCode::NotAGlobalization, "globalization was built for a different action");
  }
  const auto& G = a.G();
  MoritaInput in{a.size(),
                 [&](std::size_t x) { return G.is_object(x); },
                 [&](std::size_t x) { return G.ran(x); },
                 [&](std::size_t x) { return G.dom(x); },
                 &a.A(),
                 &a.ideals,
                 &g.global.maps,
                 &g.embeddings};
  return morita_core(build_ordered_skew(build_skew(a)), build_ordered_skew(build_skew(g.global)), in);
}

MoritaReport morita_context(const InvSgpAction& a, const InvSgpGlobalization& g) {
  if (auto s = first_non_unital(a)) {
    throw Error(ErrorCode::NotUnital, "A_" + a.S().name(*s) + " has no central identity", a.S().name(*s));
  }
  if (!g.report.ok()) throw Error(ErrorCode::NotAGlobalization, g.report.summary());
  const auto& S = a.S();
  MoritaInput in{S.size(),
                 [&](std::size_t x) { return S.is_idempotent(x); },
                 [&](std::size_t x) { return S.mul(x, S.inv(x)); },
                 [&](std::size_t x) { return S.mul(S.inv(x), x); },
                 &a.A(),
                 &a.ideals,
                 &g.global.maps,
                 &g.embeddings};
  return morita_core(build_inv_sgp_skew(a), build_inv_sgp_skew(g.global), in);
}

}  // namespace pact
