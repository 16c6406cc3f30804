#pragma once

// Worked examples and small reference structures, all over F_5 unless noted.
// Arrow order in the five-arrow groupoid is (s, s^-1, r(s), d(s), e), so
// product rings over it match the coordinate order (f(s), f(s^-1), ...).

#include "pact/action.hpp"
#include "pact/groupoid.hpp"
#include "pact/semigroup.hpp"

namespace pact::fixtures {

/// Five arrows s, s^-1, r(s), d(s), e with e below everything.
GroupoidData groupoid_3_2();
/// Objects m_0 <= n_0, self-inverse loops m_1 <= n_1.
GroupoidData groupoid_3_3();
/// A group viewed as a one-object, trivially ordered groupoid (cyclic of order k).
GroupoidData cyclic_group(std::size_t k);
/// Two objects with no common lower bound.
GroupoidData two_incomparable_objects();

/// Brandt semigroup B_2 = {a, a^-1, aa^-1, a^-1a, 0}.
SemigroupData brandt_b2();
/// {1, e} with e below 1.
SemigroupData semilattice();
/// Symmetric inverse monoid on one point: {1, 0}.
SemigroupData symmetric_inverse_monoid_1();
/// Two-element left-zero band (not inverse).
SemigroupData left_zero_band();

/// Global action on F_5^3 over groupoid_3_2: B_{r(s)} = B_s = <e2,e3>,
/// B_{d(s)} = B_{s^-1} = <e1,e2>, B_e = <e2>, beta_s(a e1 + b e2) = b e2 + a e3.
POAction action_3_2_beta();
/// Standard restriction of action_3_2_beta to <e2,e3> (carrier coordinates e2, e3).
RestrictedAction action_3_2_alpha();
/// Unital, non-strong action of groupoid_3_3 on F_5^4.
POAction action_3_3();
/// F_5[x]/(x^2) with the cyclic group of order 2 acting partially on <x>;
/// preunital, not unital.
POAction non_unital_action();
/// Partial action of C_2 over F_2 whose skew ring is not associative.
/// Carrier basis b0, b1, b2 with b0^2 = b0 + b1, b0 b1 = b1 b0 = b1, other
/// products zero; A_c = <b1, b2> with alpha_c(b1) = b1, alpha_c(b2) = b1 + b2.
POAction non_associative_action();

/// B_2 on F_5^2: A_a = A_{aa^-1} = <e1>, A_{a^-1} = A_{a^-1a} = <e2>, A_0 = 0.
InvSgpAction b2_global_action();
/// B_2 on F_5^3: A_{aa^-1} = <e1,e2>, A_{a^-1a} = <e2,e3>, A_a = A_{a^-1} = A_0 = <e2>.
InvSgpAction b2_partial_action();
/// B_2 on F_5[x]/(x^2) x F_5[y]/(y^2) (basis 1_x, x, 1_y, y): A_{aa^-1}, A_{a^-1a}
/// are the two factors, A_a = <x>, A_{a^-1} = <y>, A_0 = 0. Preunital, not unital.
InvSgpAction b2_non_unital_action();
/// Every ideal is F_5, every map the identity.
InvSgpAction semilattice_trivial_action();

}  // namespace pact::fixtures
