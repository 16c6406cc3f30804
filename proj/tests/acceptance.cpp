// Acceptance run: one line per criterion with its outcome, time and budget.
// Exit status 0 iff every criterion passes, or, with --expect-fail, iff the
// failing criteria are exactly the listed ones.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "pact/error.hpp"
#include "pact/fixtures.hpp"
#include "pact/globalization.hpp"
#include "pact/semigroup.hpp"
#include "pact/skew.hpp"
#include "random_global.hpp"

using namespace pact;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed sub-checks; the first few go into the detail line.
struct Checks {
  std::vector<std::string> failed;
  std::vector<std::string> info;

  void operator()(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  void note(const std::string& s) { info.push_back(s); }

  Outcome outcome() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < info.size(); ++i) os << (i ? "; " : "") << info[i];
    if (!failed.empty()) {
      os << (info.empty() ? "" : "; ") << failed.size() << " check(s) failed: ";
      for (std::size_t i = 0; i < failed.size() && i < 3; ++i) os << (i ? " | " : "") << failed[i];
    }
    return {failed.empty(), os.str()};
  }
};

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

bool passes(const Report& r, std::initializer_list<Clause> cs) {
  return std::all_of(cs.begin(), cs.end(), [&](Clause c) { return r.passed(c); });
}

std::vector<Arrow> inverse_perm(const std::vector<Arrow>& p) {
  std::vector<Arrow> inv(p.size());
  for (Arrow x = 0; x < p.size(); ++x) inv[p[x]] = x;
  return inv;
}

struct Fixture {
  std::string name;
  POAction action;
};

// Every groupoid-level action fixture, including the transported semigroup ones.
std::vector<Fixture> action_fixtures() {
  return {
      {"five-arrow beta", fixtures::action_3_2_beta()},
      {"five-arrow alpha", fixtures::action_3_2_alpha().action},
      {"loops", fixtures::action_3_3()},
      {"non-unital", fixtures::non_unital_action()},
      {"non-associative", fixtures::non_associative_action()},
      {"B2 global", semigroup_action_to_groupoid_action(fixtures::b2_global_action())},
      {"B2 partial", semigroup_action_to_groupoid_action(fixtures::b2_partial_action())},
      {"B2 non-unital", semigroup_action_to_groupoid_action(fixtures::b2_non_unital_action())},
      {"semilattice", semigroup_action_to_groupoid_action(fixtures::semilattice_trivial_action())},
  };
}

Arrow arrow(const POAction& a, const char* name) { return a.G().index(name); }

Outcome ac1() {
  Checks c;
  const auto beta = fixtures::action_3_2_beta();
  const std::vector<std::size_t> e23 = {1, 2};
  const auto r = standard_restriction(beta, Subspace::coordinates(beta.A().modulus(), 3, e23));
  const auto& a = r.action;
  std::vector<std::size_t> dims;
  for (const char* n : {"r(s)", "d(s)", "s", "s^-1", "e"}) dims.push_back(a.ideal(arrow(a, n)).dim());
  c(dims == std::vector<std::size_t>{2, 1, 1, 1, 1}, "ideal dimensions");
  bool identities = true;
  for (Arrow g = 0; g < a.size(); ++g)
    identities = identities && a.ideal(g) == a.ideal(a.G().inv(g)) && same_partial_map(a.map(g), LinMap::identity(a.ideal(g)));
  c(identities, "maps are identities");
  c(validate_po_action(a).ok(), "restriction is a P.O. action");
  std::ostringstream os;
  os << "dims (r(s),d(s),s,s^-1,e) = (" << dims[0] << "," << dims[1] << "," << dims[2] << "," << dims[3] << "," << dims[4]
     << "), identity maps " << (identities ? "yes" : "no");
  c.note(os.str());
  return c.outcome();
}

Outcome ac2() {
  Checks c;
  const auto beta = fixtures::action_3_2_beta();
  const auto alpha = fixtures::action_3_2_alpha();
  const auto g = build_globalization(alpha.action);
  const auto s = arrow(g.global, "s");
  c(g.global.ideal(s).dim() == 3, "dim B'_s = 3");
  c(g.global.A().dim() == 5, "dim B' = 5");
  c(g.report.ok() && passes(g.report, {Clause::Def35i, Clause::Def35ii, Clause::Def35iii, Clause::Def35iv}),
    "constructed globalization: " + g.report.summary());
  const auto ext = external_globalization(alpha.action, beta, inclusion_embeddings(alpha, beta));
  c(ext.report.ok() && passes(ext.report, {Clause::Def35i, Clause::Def35ii, Clause::Def35iii, Clause::Def35iv}),
    "beta with inclusions: " + ext.report.summary());
  const auto search = search_equivalence(beta, g.global);
  c(search.outcome == EquivalenceSearch::Outcome::DisprovedByInvariant, "equivalence search is not a definitive negative");
  c(beta.ideal(s).dim() == 2, "dim B_s = 2");
  c.note("dim B'_s = " + std::to_string(g.global.ideal(s).dim()) + ", dim B' = " + std::to_string(g.global.A().dim()) +
         ", search: " + std::string(to_string(search.outcome)) + " (" + search.reason + ")");
  return c.outcome();
}

Outcome ac3() {
  Checks c;
  const auto beta = fixtures::action_3_2_beta();
  const auto alpha = fixtures::action_3_2_alpha();
  const auto m = build_minimal_globalization(alpha.action);
  const auto s = arrow(m.global, "s");
  c(m.global.ideal(s).dim() == 2, "dim B'_s = 2");
  c(m.global.A().dim() == 3, "dim B' = 3");
  c(m.report.ok() && m.report.passed(Clause::Def35ivPrime), "minimal globalization: " + m.report.summary());
  const auto search = search_equivalence(m.global, beta);
  c(search.outcome == EquivalenceSearch::Outcome::Found, "no equivalence witness");
  if (search.witness) c(verify_equivalence(m.global, beta, *search.witness).ok(), "witness does not verify");
  c.note("dim B'_s = " + std::to_string(m.global.ideal(s).dim()) + ", dim B' = " + std::to_string(m.global.A().dim()) +
         ", search: " + std::string(to_string(search.outcome)));
  return c.outcome();
}

Outcome ac4() {
  Checks c;
  for (const auto& f : action_fixtures())
    c(is_strong(f.action) == satisfies_ps(f.action), "fixture " + f.name + ": strong and (PS) disagree");

  const auto loops = fixtures::action_3_3();
  c(!is_strong(loops), "loop example is strong");
  const auto g = build_globalization(loops);
  c(g.report.ok(), "loop example does not globalize: " + g.report.summary());
  c(error_of([&] { build_minimal_globalization(loops); }) == ErrorCode::NotStrong, "minimal globalization not rejected with NotStrong");

  std::mt19937 rng(4242);
  std::size_t runs = 0, strong = 0, ps = 0, disagree = 0, disagree_meets = 0;
  std::set<std::size_t> primes;
  std::string first;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto in = randglobal::random_instance(rng, trial % 2 == 1);
    const auto& beta = *in.beta;
    c(validate_po_action(beta).ok() && is_global(beta), "random global action invalid: " + in.describe);
    const auto r = standard_restriction(beta, randglobal::random_ideal(in, rng));
    const auto& a = r.action;
    c(validate_po_action(a).ok(), "restriction invalid: " + in.describe);
    ++runs;
    primes.insert(beta.A().modulus().value());
    const bool st = is_strong(a), p = satisfies_ps(a);
    strong += st;
    ps += p;
    if (st != p) {
      ++disagree;
      const auto meet = meet_intersection_witness(a);
      disagree_meets += meet.has_value();
      if (first.empty()) first = in.describe + ", strong = " + (st ? "true" : "false") + ", " + meet.value_or("no meet witness");
    }
  }
  c(disagree == 0, std::to_string(disagree) + " of " + std::to_string(runs) +
                       " random restrictions are strong without (PS), all lacking the meet equalities: " +
                       std::to_string(disagree_meets) + "; first: " + first);
  c.note(std::to_string(runs) + " random restrictions over p in {" + [&] {
    std::string s;
    for (auto q : primes) s += (s.empty() ? "" : ",") + std::to_string(q);
    return s;
  }() + "}: " + std::to_string(strong) + " strong, " + std::to_string(ps) + " (PS)");
  return c.outcome();
}

Outcome ac5() {
  Checks c;
  std::size_t checked = 0;
  for (const auto& f : action_fixtures()) {
    const auto& a = f.action;
    if (!validate_po_action(a).ok() || !is_strong(a)) continue;
    ++checked;
    const auto& G = a.G();
    for (Arrow g = 0; g < G.size(); ++g)
      for (Arrow e : G.objects()) {
        if (!G.leq(e, G.dom(g))) continue;
        const Arrow ge = G.restriction(g, e);
        c(a.ideal(ge) == intersect(a.ideal(g), a.ideal(G.ran(ge))), f.name + ": A_(g|e) at " + G.name(g) + ", " + G.name(e));
      }
    for (Arrow e : G.objects())
      for (Arrow x : G.objects())
        if (const auto m = G.meet(e, x))
          c(a.ideal(*m) == intersect(a.ideal(e), a.ideal(x)), f.name + ": A_(e^f) at " + G.name(e) + ", " + G.name(x));
  }
  c.note(std::to_string(checked) + " strong fixtures");
  return c.outcome();
}

Outcome ac6() {
  Checks c;
  for (const auto& [name, data] : {std::pair<std::string, SemigroupData>{"semilattice", fixtures::semilattice()},
                                   {"I_1", fixtures::symmetric_inverse_monoid_1()},
                                   {"B_2", fixtures::brandt_b2()}}) {
    const InverseSemigroup S = InverseSemigroup::validated(data);
    c(esn_to_semigroup(esn_to_groupoid(S)) == S, name + " roundtrip");
  }
  for (const auto& [name, data] : {std::pair<std::string, GroupoidData>{"five-arrow", fixtures::groupoid_3_2()},
                                   {"loops", fixtures::groupoid_3_3()}}) {
    const auto G = OrderedGroupoid::validated(data);
    const auto back = esn_to_groupoid(esn_to_semigroup(G));
    c(same_groupoid(back, G) && back.data().names == G.data().names, name + " roundtrip");
  }
  c.note("3 semigroups, 2 groupoids");
  return c.outcome();
}

Outcome ac7() {
  Checks c;
  for (const auto& [name, a] : {std::pair<std::string, InvSgpAction>{"B2 partial", fixtures::b2_partial_action()},
                                {"B2 global", fixtures::b2_global_action()}}) {
    c(is_preunital(a) && is_unital(a), name + " is not unital");
    const auto g = globalize_inverse_semigroup_action(a);
    c(g.report.ok() && passes(g.report, {Clause::Def58i, Clause::Def58ii, Clause::Def58iii, Clause::Def58iv}),
      name + ": " + g.report.summary());
  }
  const auto nu = fixtures::b2_non_unital_action();
  c(is_preunital(nu) && !is_unital(nu), "non-unital fixture is not preunital-only");
  c(error_of([&] { globalize_inverse_semigroup_action(nu); }) == ErrorCode::NotUnital, "non-unital action not rejected");
  return c.outcome();
}

Outcome ac8() {
  Checks c;
  const auto alpha = fixtures::action_3_2_alpha().action;
  for (const auto& [name, g] : {std::pair<std::string, Globalization>{"function-ring", build_globalization(alpha)},
                                {"minimal", build_minimal_globalization(alpha)}}) {
    const auto m = morita_context(alpha, g);
    const bool all = m.report.ok() &&
                     passes(m.report, {Clause::Prop51i, Clause::Prop51ii, Clause::Prop51iii, Clause::Prop51iv, Clause::ContextI,
                                       Clause::ContextII, Clause::Surjective, Clause::UnitalModules});
    std::string failing;
    for (const auto& v : m.report.violations()) failing += std::string(failing.empty() ? "" : ", ") + std::string(label(v.clause));
    c(all, name + " globalization fails " + failing + " (dim R = " + std::to_string(m.R.dim()) +
               ", dim 1_RT1_R = " + std::to_string(m.one_r_t_one_r.dim()) + ")");
    c.note(name + ": dim R " + std::to_string(m.R.dim()) + ", dim T " + std::to_string(m.T.dim()));
  }
  return c.outcome();
}

Outcome ac9() {
  Checks c;
  std::size_t scanned = 0, relabelings = 0;
  for (const auto& f : action_fixtures()) {
    const auto& a = f.action;
    if (!validate_po_action(a).ok() || !is_unital(a)) continue;
    const auto s = build_skew(a);
    c(check_skew_associative(s).ok(), f.name + ": associator witnesses");
    ++scanned;
    const auto dim = build_ordered_skew(s).dim();
    std::vector<Arrow> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      c(build_ordered_skew(build_skew(relabel(a, perm))).dim() == dim, f.name + ": quotient dimension changes under relabeling");
      ++relabelings;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& [name, a] : {std::pair<std::string, InvSgpAction>{"B2 global", fixtures::b2_global_action()},
                                {"B2 partial", fixtures::b2_partial_action()},
                                {"semilattice", fixtures::semilattice_trivial_action()}}) {
    c(check_skew_associative(build_inv_sgp_skew(a).skew).ok(), name + ": associator witnesses");
    ++scanned;
  }
  c.note(std::to_string(scanned) + " unital fixtures scanned, " + std::to_string(relabelings) + " relabelings");
  return c.outcome();
}

Outcome ac10() {
  Checks c;
  const auto alpha = fixtures::action_3_2_alpha().action;
  const auto m1 = build_minimal_globalization(alpha);
  std::vector<Arrow> perm(alpha.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t found = 0, tried = 0;
  do {
    const auto m2 = build_minimal_globalization(relabel(alpha, perm));
    const auto restored = relabel(m2.global, inverse_perm(perm));
    const auto search = search_equivalence(m1.global, restored);
    ++tried;
    if (search.outcome == EquivalenceSearch::Outcome::Found && verify_equivalence(m1.global, restored, *search.witness).ok())
      ++found;
    else
      c(false, "no verified witness for one relabeling");
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.note(std::to_string(found) + " of " + std::to_string(tried) + " relabelings related by a verified witness");
  return c.outcome();
}

struct Criterion {
  std::string id;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<std::string> expected_failures;
  app.add_option("--expect-fail", expected_failures, "Criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"AC1", 0.1, ac1}, {"AC2", 1, ac2}, {"AC3", 1, ac3}, {"AC4", 30, ac4}, {"AC5", 5, ac5},
      {"AC6", 0.1, ac6}, {"AC7", 1, ac7}, {"AC8", 5, ac8}, {"AC9", 5, ac9}, {"AC10", 2, ac10},
  };
  std::set<std::string> failed;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget) {
      o.pass = false;
      o.detail += "; over budget";
    }
    if (!o.pass) failed.insert(cr.id);
    std::printf("%-4s %s  %.3fs / %gs  %s\n", cr.id.c_str(), o.pass ? "PASS" : "FAIL", secs, cr.budget, o.detail.c_str());
  }
  std::fflush(stdout);
  if (app.count("--expect-fail")) {
    const std::set<std::string> expected(expected_failures.begin(), expected_failures.end());
    if (failed != expected) {
      std::cerr << "failing criteria differ from the expected set\n";
      return 1;
    }
    return 0;
  }
  return failed.empty() ? 0 : 1;
}
