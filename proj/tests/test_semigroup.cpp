#include "doctest.h"
#include "pact/error.hpp"
#include "pact/fixtures.hpp"
#include "pact/semigroup.hpp"

using namespace pact;

TEST_CASE("validate_inverse_semigroup examples") {
  CHECK(InverseSemigroup(fixtures::semilattice()).valid());
  const InverseSemigroup b2(fixtures::brandt_b2());
  CHECK(b2.valid());
  CHECK(b2.idempotents().size() == 3);
  CHECK(b2.inv(b2.index("a")) == b2.index("a^-1"));
  CHECK(b2.mul(b2.index("a"), b2.index("a^-1")) == b2.index("aa^-1"));
  const InverseSemigroup lz(fixtures::left_zero_band());
  CHECK_FALSE(lz.valid());
  CHECK_FALSE(lz.validation().passed(Clause::CommutingIdempotents));
}

TEST_CASE("natural order") {
  const InverseSemigroup b2(fixtures::brandt_b2());
  CHECK(natural_order(b2, b2.index("0"), b2.index("a")));
  const InverseSemigroup sl(fixtures::semilattice());
  CHECK(natural_order(sl, sl.index("e"), sl.index("1")));
  CHECK_FALSE(natural_order(b2, b2.index("a"), b2.index("a^-1")));
}

TEST_CASE("semigroup to groupoid") {
  const auto gs = esn_to_groupoid(InverseSemigroup(fixtures::semilattice()));
  CHECK(gs.objects().size() == 2);
  CHECK(gs.leq(1, 0));
  const InverseSemigroup b2(fixtures::brandt_b2());
  const auto g = esn_to_groupoid(b2);
  CHECK(g.size() == 5);
  CHECK(g.comp(g.index("a"), g.index("a^-1")) == g.index("aa^-1"));
  const Arrow zero = g.index("0");
  CHECK(g.is_object(zero));
  for (Arrow x = 0; x < 5; ++x) CHECK(g.leq(zero, x));
  const auto i1 = esn_to_groupoid(InverseSemigroup(fixtures::symmetric_inverse_monoid_1()));
  CHECK(i1.objects().size() == 2);
  CHECK(i1.leq(i1.index("0"), i1.index("1")));
}

TEST_CASE("groupoid to semigroup") {
  for (const auto& data : {fixtures::brandt_b2(), fixtures::semilattice(), fixtures::symmetric_inverse_monoid_1()}) {
    const InverseSemigroup s(data);
    const auto g = esn_to_groupoid(s);
    const auto back = esn_to_semigroup(g);
    CHECK(back == s);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(g.pseudoproduct(a, b) == s.mul(a, b));
        CHECK(back.leq(a, b) == g.leq(a, b));
      }
    }
  }
  for (const auto& data : {fixtures::groupoid_3_2(), fixtures::groupoid_3_3()}) {
    const OrderedGroupoid g(data);
    const auto s = esn_to_semigroup(g);
    CHECK(s.valid());
    for (Arrow a = 0; a < g.size(); ++a) {
      for (Arrow b = 0; b < g.size(); ++b) {
        CHECK(s.mul(a, b) == *g.pseudoproduct(a, b));
        CHECK(s.leq(a, b) == g.leq(a, b));
      }
    }
    const auto g2 = esn_to_groupoid(s);
    CHECK(g2.data().comp == g.data().comp);
    CHECK(g2.data().is_object == g.data().is_object);
    for (Arrow a = 0; a < g.size(); ++a)
      for (Arrow b = 0; b < g.size(); ++b) CHECK(g2.leq(a, b) == g.leq(a, b));
  }
  const OrderedGroupoid g32(fixtures::groupoid_3_2());
  const auto s32 = esn_to_semigroup(g32);
  CHECK(s32.mul(g32.index("s"), g32.index("s")) == g32.index("e"));
  const auto trivial = esn_to_semigroup(OrderedGroupoid(fixtures::cyclic_group(1)));
  CHECK(trivial.size() == 1);
  CHECK_THROWS_AS(esn_to_semigroup(OrderedGroupoid(fixtures::two_incomparable_objects())), Error);
}

TEST_CASE("premorphisms between semigroups and groupoids") {
  const InverseSemigroup b2(fixtures::brandt_b2());
  std::vector<Element> id(5);
  for (Element i = 0; i < 5; ++i) id[i] = i;
  CHECK(verify_premorphism(SemigroupPremorphism{&b2, &b2, id}).ok());
  const std::vector<Element> to_zero(5, b2.index("0"));
  CHECK(verify_premorphism(SemigroupPremorphism{&b2, &b2, to_zero}).ok());
  const std::vector<Element> to_a(5, b2.index("a"));
  const auto r = verify_premorphism(SemigroupPremorphism{&b2, &b2, to_a});
  CHECK_FALSE(r.passed(Clause::PremorphismII));
  const auto g = esn_to_groupoid(b2);
  const auto rg = verify_premorphism(GroupoidPremorphism{&g, &g, id});
  CHECK(rg.ok());
  CHECK(rg.checked(Clause::PremorphismRange));
  const std::vector<Arrow> g_to_a(5, g.index("a"));
  CHECK_FALSE(verify_premorphism(GroupoidPremorphism{&g, &g, g_to_a}).passed(Clause::PremorphismII));
}
