#include "pact/fixtures.hpp"

#include <string>

namespace pact::fixtures {

GroupoidData groupoid_3_2() {
  GroupoidBuilder b;
  b.arrow("s", "s^-1");
  b.object("r(s)");
  b.object("d(s)");
  b.object("e");
  b.compose("s", "s^-1", "r(s)").compose("s^-1", "s", "d(s)");
  b.below("e", "s").below("e", "s^-1").below("e", "r(s)").below("e", "d(s)");
  return b.build();
}

GroupoidData groupoid_3_3() {
  GroupoidBuilder b;
  b.object("m_0");
  b.arrow("m_1", "m_1");
  b.object("n_0");
  b.arrow("n_1", "n_1");
  b.compose("m_1", "m_1", "m_0").compose("n_1", "n_1", "n_0");
  b.below("m_0", "n_0").below("m_1", "n_1");
  return b.build();
}

GroupoidData cyclic_group(std::size_t k) {
  GroupoidData d;
  for (std::size_t i = 0; i < k; ++i) {
    d.names.push_back(i == 0 ? "1" : "c" + std::to_string(i));
    d.is_object.push_back(i == 0);
    d.inv.push_back((k - i) % k);
  }
  d.comp.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) d.comp[i * k + j] = (i + j) % k;
  }
  return d;
}

GroupoidData two_incomparable_objects() {
  GroupoidBuilder b;
  b.object("x");
  b.object("y");
  return b.build();
}

SemigroupData brandt_b2() {
  // matrix units: a = E12, a^-1 = E21, aa^-1 = E11, a^-1a = E22, 0
  const std::size_t row[] = {0, 1, 0, 1};
  const std::size_t col[] = {1, 0, 0, 1};
  SemigroupData d;
  d.names = {"a", "a^-1", "aa^-1", "a^-1a", "0"};
  d.mult.assign(25, 4);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      if (col[x] != row[y]) continue;
      for (std::size_t z = 0; z < 4; ++z) {
        if (row[z] == row[x] && col[z] == col[y]) d.mult[x * 5 + y] = z;
      }
    }
  }
  return d;
}

SemigroupData semilattice() { return SemigroupData{{"1", "e"}, {0, 1, 1, 1}}; }

SemigroupData symmetric_inverse_monoid_1() { return SemigroupData{{"1", "0"}, {0, 1, 1, 1}}; }

SemigroupData left_zero_band() { return SemigroupData{{"x", "y"}, {0, 0, 1, 1}}; }

}  // namespace pact::fixtures

namespace pact::fixtures {

namespace {

const PrimeModulus kF5(5);

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> coords) {
  const std::vector<std::size_t> c(coords);
  return Subspace::coordinates(kF5, n, c);
}

Vector vec(std::initializer_list<Residue> xs) { return Vector(xs); }

}  // namespace

POAction action_3_2_beta() {
  auto g = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(groupoid_3_2()));
  auto b = std::make_shared<const Algebra>(Algebra::pointwise(kF5, 3));
  const Subspace rs = span_of(3, {1, 2});
  const Subspace ds = span_of(3, {0, 1});
  const Subspace e = span_of(3, {1});
  std::vector<std::optional<LinMap>> maps(5);
  maps[0] = LinMap(ds, rs, {vec({0, 0, 1}), vec({0, 1, 0})});
  maps[1] = LinMap(rs, ds, {vec({0, 1, 0}), vec({1, 0, 0})});
  return make_action(std::move(g), std::move(b), {rs, ds, rs, ds, e}, std::move(maps));
}

RestrictedAction action_3_2_alpha() { return standard_restriction(action_3_2_beta(), span_of(3, {1, 2})); }

POAction action_3_3() {
  auto g = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(groupoid_3_3()));
  auto a = std::make_shared<const Algebra>(Algebra::pointwise(kF5, 4));
  const Subspace full = a->full_space();
  const Subspace m1 = span_of(4, {0, 2});
  std::vector<std::optional<LinMap>> maps(4);
  maps[1] = LinMap(m1, m1, {vec({0, 0, 1, 0}), vec({1, 0, 0, 0})});
  maps[3] = LinMap(full, full, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
  return make_action(std::move(g), std::move(a), {full, m1, full, full}, std::move(maps));
}

POAction non_unital_action() {
  auto g = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(cyclic_group(2)));
  // basis 1, x with x^2 = 0
  auto a = std::make_shared<const Algebra>(
      Algebra::from_products(kF5, 2, {vec({1, 0}), vec({0, 1}), vec({0, 1}), vec({0, 0})}, vec({1, 0})));
  const Subspace x = span_of(2, {1});
  std::vector<std::optional<LinMap>> maps(2);
  maps[1] = LinMap::identity(x);
  return make_action(std::move(g), std::move(a), {a->full_space(), x}, std::move(maps));
}

POAction non_associative_action() {
  const PrimeModulus f2(2);
  auto g = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(cyclic_group(2)));
  std::vector<Vector> products(9, Vector(3, 0));
  products[0] = vec({1, 1, 0});
  products[1] = vec({0, 1, 0});
  products[3] = vec({0, 1, 0});
  auto a = std::make_shared<const Algebra>(Algebra::from_products(f2, 3, std::move(products)));
  const std::vector<std::size_t> idx{1, 2};
  const Subspace ideal = Subspace::coordinates(f2, 3, idx);
  std::vector<std::optional<LinMap>> maps(2);
  maps[1] = LinMap(ideal, ideal, {vec({0, 1, 0}), vec({0, 1, 1})});
  return make_action(std::move(g), std::move(a), {a->full_space(), ideal}, std::move(maps));
}

InvSgpAction b2_global_action() {
  auto s = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(brandt_b2()));
  auto a = std::make_shared<const Algebra>(Algebra::pointwise(kF5, 2));
  const Subspace e1 = span_of(2, {0});
  const Subspace e2 = span_of(2, {1});
  const Subspace zero = a->zero_space();
  std::vector<LinMap> maps = {LinMap(e2, e1, {vec({1, 0})}), LinMap(e1, e2, {vec({0, 1})}), LinMap::identity(e1),
                              LinMap::identity(e2), LinMap::identity(zero)};
  return InvSgpAction(std::move(s), std::move(a), {e1, e2, e1, e2, zero}, std::move(maps));
}

InvSgpAction b2_non_unital_action() {
  auto s = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(brandt_b2()));
  std::vector<Vector> products(16, Vector(4, 0));
  for (std::size_t f : {0, 2}) {
    products[f * 4 + f] = unit_vector(4, f);
    products[f * 4 + f + 1] = unit_vector(4, f + 1);
    products[(f + 1) * 4 + f] = unit_vector(4, f + 1);
  }
  auto a = std::make_shared<const Algebra>(Algebra::from_products(kF5, 4, std::move(products), vec({1, 0, 1, 0})));
  const Subspace left = span_of(4, {0, 1});
  const Subspace right = span_of(4, {2, 3});
  const Subspace x = span_of(4, {1});
  const Subspace y = span_of(4, {3});
  const Subspace zero = a->zero_space();
  std::vector<LinMap> maps = {LinMap(y, x, {vec({0, 1, 0, 0})}), LinMap(x, y, {vec({0, 0, 0, 1})}), LinMap::identity(left),
                              LinMap::identity(right), LinMap::identity(zero)};
  return InvSgpAction(std::move(s), std::move(a), {x, y, left, right, zero}, std::move(maps));
}

InvSgpAction b2_partial_action() {
  auto s = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(brandt_b2()));
  auto a = std::make_shared<const Algebra>(Algebra::pointwise(kF5, 3));
  const Subspace top = span_of(3, {0, 1});
  const Subspace bottom = span_of(3, {1, 2});
  const Subspace mid = span_of(3, {1});
  std::vector<LinMap> maps = {LinMap::identity(mid), LinMap::identity(mid), LinMap::identity(top), LinMap::identity(bottom),
                              LinMap::identity(mid)};
  return InvSgpAction(std::move(s), std::move(a), {mid, mid, top, bottom, mid}, std::move(maps));
}

InvSgpAction semilattice_trivial_action() {
  auto s = std::make_shared<const InverseSemigroup>(InverseSemigroup::validated(semilattice()));
  auto a = std::make_shared<const Algebra>(Algebra::pointwise(kF5, 1));
  const Subspace full = a->full_space();
  return InvSgpAction(std::move(s), std::move(a), {full, full}, {LinMap::identity(full), LinMap::identity(full)});
}

}  // namespace pact::fixtures
