#include "doctest.h"
#include "pact/error.hpp"
#include "pact/fixtures.hpp"
#include "pact/groupoid.hpp"

using namespace pact;

namespace {

std::vector<std::string> names(const OrderedGroupoid& g, const std::vector<Arrow>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(g.name(x));
  return out;
}

void check_invariants(const OrderedGroupoid& G) {
  REQUIRE(G.valid());
  for (Arrow g = 0; g < G.size(); ++g) {
    CHECK(G.down_range_set(g) == G.down_range_set(G.ran(g)));
    for (Arrow e : G.objects()) {
      if (G.leq(e, G.dom(g))) {
        const Arrow f = G.restriction(g, e);
        CHECK(G.leq(f, g));
        CHECK(G.dom(f) == e);
      }
      if (G.leq(e, G.ran(g))) CHECK(G.corestriction(e, g) == G.inv(G.restriction(G.inv(g), e)));
    }
    for (Arrow h = 0; h < G.size(); ++h) {
      if (G.dom(g) == G.ran(h)) CHECK(G.pseudoproduct(g, h) == G.comp(g, h));
    }
  }
  if (G.is_inductive()) CHECK(G.is_pseudoassociative());
}

}  // namespace

TEST_CASE("validate_groupoid examples") {
  GroupoidBuilder one;
  one.object("e");
  CHECK(OrderedGroupoid(one.build()).valid());
  const OrderedGroupoid g32(fixtures::groupoid_3_2());
  CHECK(validate_groupoid(g32).ok());
  CHECK(g32.objects().size() == 3);
  CHECK(g32.dom(g32.index("s")) == g32.index("d(s)"));
  CHECK(g32.ran(g32.index("s")) == g32.index("r(s)"));

  auto bad = fixtures::groupoid_3_2();
  const std::size_t n = bad.size();
  const Arrow s = bad.index("s"), si = bad.index("s^-1");
  bad.comp.assign(n * n, kNoArrow);
  bad.comp[s * n + si] = bad.index("d(s)");
  bad.comp[si * n + s] = bad.index("d(s)");
  complete_identities(bad);
  const OrderedGroupoid broken(bad);
  CHECK_FALSE(broken.valid());
  CHECK_FALSE(validate_groupoid(broken).passed(Clause::Category));
  CHECK_THROWS_AS(broken.require_valid(), Error);
}

TEST_CASE("validate_order examples") {
  CHECK(validate_order(OrderedGroupoid(fixtures::groupoid_3_2())).ok());
  CHECK(validate_order(OrderedGroupoid(fixtures::groupoid_3_3())).ok());
  auto d = fixtures::groupoid_3_2();
  const Arrow e = d.index("e"), rs = d.index("r(s)");
  std::erase(d.order, std::pair<Arrow, Arrow>{e, rs});
  const OrderedGroupoid g(d);
  const auto r = validate_order(g);
  CHECK_FALSE(r.passed(Clause::OG2));
  CHECK(r.failures(Clause::OG2).front() == "(e,e) <= (s,s^-1) but e is not <= r(s)");
}

TEST_CASE("restrictions and corestrictions") {
  const OrderedGroupoid g33(fixtures::groupoid_3_3());
  CHECK(g33.corestriction(g33.index("m_0"), g33.index("n_1")) == g33.index("m_1"));
  const OrderedGroupoid g32(fixtures::groupoid_3_2());
  const Arrow s = g32.index("s");
  CHECK(g32.restriction(s, g32.dom(s)) == s);
  CHECK(g32.restriction(s, g32.index("e")) == g32.index("e"));
  CHECK_THROWS_AS(g32.restriction(s, g32.index("r(s)")), Error);
  try {
    g32.corestriction(g32.index("d(s)"), s);
    FAIL("expected NotBelowRange");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotBelowRange);
  }
}

TEST_CASE("meets and pseudoproducts") {
  const OrderedGroupoid g32(fixtures::groupoid_3_2());
  const Arrow s = g32.index("s"), si = g32.index("s^-1"), e = g32.index("e");
  CHECK(g32.meet(e, e) == e);
  CHECK(g32.meet(g32.index("r(s)"), g32.index("d(s)")) == e);
  const OrderedGroupoid two(fixtures::two_incomparable_objects());
  CHECK_FALSE(two.meet(0, 1));
  CHECK(g32.pseudoproduct(s, si) == g32.index("r(s)"));
  CHECK(g32.pseudoproduct(s, e) == e);
  const OrderedGroupoid g33(fixtures::groupoid_3_3());
  CHECK(g33.pseudoproduct(g33.index("n_1"), g33.index("m_1")) == g33.index("m_0"));
}

TEST_CASE("inductive and pseudoassociative") {
  const OrderedGroupoid z3(fixtures::cyclic_group(3));
  CHECK(z3.valid());
  CHECK(z3.is_trivially_ordered());
  CHECK(z3.is_pseudoassociative());
  CHECK(OrderedGroupoid(fixtures::groupoid_3_2()).is_inductive());
  CHECK(OrderedGroupoid(fixtures::groupoid_3_2()).is_pseudoassociative());
  CHECK(OrderedGroupoid(fixtures::groupoid_3_3()).is_inductive());
  CHECK(OrderedGroupoid(fixtures::groupoid_3_3()).is_pseudoassociative());
  CHECK_FALSE(OrderedGroupoid(fixtures::two_incomparable_objects()).is_inductive());
}

TEST_CASE("down-range and pseudo-composable sets") {
  const OrderedGroupoid g32(fixtures::groupoid_3_2());
  CHECK(names(g32, g32.down_range_set(g32.index("s"))) == std::vector<std::string>{"s", "r(s)", "e"});
  CHECK(names(g32, g32.down_range_set(g32.index("e"))) == std::vector<std::string>{"e"});
  for (Arrow g = 0; g < g32.size(); ++g) CHECK(g32.pseudo_composable_set(g).size() == 5);
  const OrderedGroupoid z3(fixtures::cyclic_group(3));
  CHECK(z3.down_range_set(1).size() == 3);
  CHECK(z3.pseudo_composable_set(1).size() == 3);
  const OrderedGroupoid g33(fixtures::groupoid_3_3());
  CHECK(g33.pseudo_composable_set(g33.index("n_1")).size() == 4);
}

TEST_CASE("groupoid invariants on fixtures") {
  check_invariants(OrderedGroupoid(fixtures::groupoid_3_2()));
  check_invariants(OrderedGroupoid(fixtures::groupoid_3_3()));
  check_invariants(OrderedGroupoid(fixtures::cyclic_group(4)));
}

TEST_CASE("relabel preserves structure") {
  const OrderedGroupoid g(fixtures::groupoid_3_2());
  const std::vector<Arrow> perm{3, 0, 4, 1, 2};
  const auto h = g.relabel(perm);
  REQUIRE(h.valid());
  for (Arrow a = 0; a < g.size(); ++a) {
    CHECK(h.name(perm[a]) == g.name(a));
    CHECK(h.dom(perm[a]) == perm[g.dom(a)]);
    for (Arrow b = 0; b < g.size(); ++b) CHECK(h.leq(perm[a], perm[b]) == g.leq(a, b));
  }
}
