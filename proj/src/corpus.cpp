#include "pact/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pact/error.hpp"
#include "pact/fixtures.hpp"

namespace pact {

namespace {

TaskSpec task(std::string id, const std::string& name, std::string subject, Json options = Json::object()) {
  TaskSpec t;
  t.id = std::move(id);
  std::istringstream words(name);
  words >> t.name;
  for (std::string f; words >> f;) t.flags.push_back(f);
  t.subject = std::move(subject);
  t.options = std::move(options);
  return t;
}

// Rebuilds an action on the workspace's own groupoid instance.
POAction on(std::shared_ptr<const OrderedGroupoid> g, const POAction& a) {
  return POAction(std::move(g), a.carrier, a.ideals, a.maps);
}

InvSgpAction on(std::shared_ptr<const InverseSemigroup> s, const InvSgpAction& a) {
  return InvSgpAction(std::move(s), a.carrier, a.ideals, a.maps);
}

// Groupoid of the five-arrow example with beta on F_5^3 and its restriction
// alpha to <e2, e3>.
Workspace five_arrow_base() {
  Workspace w;
  auto G = std::make_shared<const OrderedGroupoid>(fixtures::groupoid_3_2());
  const POAction beta = on(G, fixtures::action_3_2_beta());
  const POAction alpha = on(G, fixtures::action_3_2_alpha().action);
  w.add("G", G);
  w.add("B", beta.carrier);
  w.add("A", alpha.carrier);
  w.add("beta", beta);
  w.add("alpha", alpha);
  return w;
}

const Json five_arrow_dims = {{"s", 1}, {"s^-1", 1}, {"r(s)", 2}, {"d(s)", 1}, {"e", 1}};

Workspace example_3_2() {
  Workspace w = five_arrow_base();
  w.tasks = {
      task("groupoid", "validate-groupoid", "G", {{"expect", {{"inductive", true}, {"pseudoassociative", true}}}}),
      task("beta", "validate-action", "beta", {{"expect", {{"global", true}, {"unital", true}}}}),
      task("restriction", "restrict", "beta",
           {{"ideal", {{0, 1, 0}, {0, 0, 1}}}, {"expect", {{"carrier_dim", 2}, {"dims", five_arrow_dims}, {"identity_maps", true}}}}),
      task("alpha", "validate-action", "alpha",
           {{"expect", {{"dims", five_arrow_dims}, {"global", false}, {"unital", true}, {"strong", true}}}}),
      task("strength", "strong-check", "alpha", {{"expect", {{"strong", true}, {"ps", true}, {"meet_equalities", true}}}}),
      task("globalize", "globalize", "alpha",
           {{"compare", "beta"},
            {"expect", {{"dims", {{"s", 3}}}, {"B_dim", 5}, {"equivalence", {{"outcome", "disproved-by-invariant"}}}}}}),
      task("globalize-minimal", "globalize --minimal", "alpha",
           {{"compare", "beta"}, {"expect", {{"dims", {{"s", 2}}}, {"B_dim", 3}, {"equivalence", {{"outcome", "found"}}}}}}),
      task("skew", "skew --ordered", "alpha", {{"expect", {{"unit_is_identity", true}}}}),
      task("morita", "morita", "alpha"),
      task("esn", "esn --to-semigroup", "G", {{"expect", {{"roundtrip", true}}}}),
  };
  return w;
}

Workspace example_3_3() {
  Workspace w;
  const POAction a = fixtures::action_3_3();
  w.add("G", a.groupoid);
  w.add("A", a.carrier);
  w.add("alpha", a);
  w.tasks = {
      task("groupoid", "validate-groupoid", "G", {{"expect", {{"inductive", true}}}}),
      task("alpha", "validate-action", "alpha", {{"expect", {{"unital", true}, {"strong", false}}}}),
      task("strength", "strong-check", "alpha", {{"expect", {{"strong", false}, {"ps", false}}}}),
      task("globalize", "globalize", "alpha"),
      task("minimal", "globalize --minimal", "alpha", {{"expect", {{"error_code", "NotStrong"}}}}),
      task("skew", "skew --ordered", "alpha", {{"expect", {{"unit_is_identity", true}}}}),
      task("esn", "esn --to-semigroup", "G", {{"expect", {{"roundtrip", true}}}}),
  };
  return w;
}

Workspace example_3_7() {
  Workspace w = five_arrow_base();
  w.tasks = {
      task("globalize", "globalize", "alpha",
           {{"compare", "beta"},
            {"expect", {{"dims", {{"s", 3}}}, {"B_dim", 5}, {"equivalence", {{"outcome", "disproved-by-invariant"}}}}}}),
      task("inclusion", "verify-globalization", "alpha",
           {{"global", "beta"}, {"inclusion", {{0, 1, 0}, {0, 0, 1}}}, {"expect", {{"B_dim", 3}}}}),
      task("beta-beta", "equivalence", "beta", {{"other", "beta"}, {"expect", {{"outcome", "found"}}}}),
  };
  return w;
}

Workspace example_4_10() {
  Workspace w = five_arrow_base();
  w.tasks = {
      task("minimal", "globalize --minimal", "alpha",
           {{"compare", "beta"}, {"expect", {{"dims", {{"s", 2}}}, {"B_dim", 3}, {"equivalence", {{"outcome", "found"}}}}}}),
      task("inclusion", "verify-globalization", "alpha",
           {{"global", "beta"}, {"inclusion", {{0, 1, 0}, {0, 0, 1}}}, {"minimal", true}}),
      task("morita", "morita", "alpha", {{"globalization", "minimal"}, {"expect", {{"R_dim", 1}, {"T_dim", 4}}}}),
  };
  return w;
}

// Kept apart: the (iii) clause fails for the function-ring globalization.
Workspace morita_function_ring() {
  Workspace w = five_arrow_base();
  w.tasks = {task("morita", "morita", "alpha", {{"globalization", "function"}})};
  return w;
}

Workspace brandt_b2() {
  Workspace w;
  auto S = std::make_shared<const InverseSemigroup>(fixtures::brandt_b2());
  const InvSgpAction global = on(S, fixtures::b2_global_action());
  const InvSgpAction partial = on(S, fixtures::b2_partial_action());
  const InvSgpAction non_unital = on(S, fixtures::b2_non_unital_action());
  w.add("B2", S);
  w.add("F2", global.carrier);
  w.add("F3", partial.carrier);
  w.add("D", non_unital.carrier);
  w.add("global", global);
  w.add("partial", partial);
  w.add("non_unital", non_unital);
  w.tasks = {
      task("semigroup", "validate-groupoid", "B2", {{"expect", {{"elements", 5}, {"idempotents", 3}}}}),
      task("esn", "esn --to-groupoid", "B2", {{"expect", {{"inductive", true}, {"roundtrip", true}}}}),
      task("global", "validate-action", "global", {{"expect", {{"global", true}, {"unital", true}}}}),
      task("partial", "validate-action", "partial", {{"expect", {{"global", false}, {"unital", true}}}}),
      task("non-unital", "validate-action", "non_unital", {{"expect", {{"preunital", true}, {"unital", false}}}}),
      task("pipeline", "inv-action-pipeline", "partial"),
      task("pipeline-non-unital", "inv-action-pipeline", "non_unital", {{"expect", {{"error_code", "NotUnital"}}}}),
      task("skew", "skew", "partial"),
      task("morita", "morita", "partial"),
  };
  return w;
}

Workspace semilattices() {
  Workspace w;
  auto E = std::make_shared<const InverseSemigroup>(fixtures::semilattice());
  auto I1 = std::make_shared<const InverseSemigroup>(fixtures::symmetric_inverse_monoid_1());
  const InvSgpAction trivial = on(E, fixtures::semilattice_trivial_action());
  w.add("E", E);
  w.add("I1", I1);
  w.add("F", trivial.carrier);
  w.add("trivial", trivial);
  w.tasks = {
      task("semilattice", "esn --to-groupoid", "E", {{"expect", {{"inductive", true}, {"roundtrip", true}}}}),
      task("i1", "esn --to-groupoid", "I1", {{"expect", {{"inductive", true}, {"roundtrip", true}}}}),
      task("trivial", "validate-action", "trivial", {{"expect", {{"global", true}, {"unital", true}}}}),
      task("skew", "skew", "trivial", {{"expect", {{"ordered", {{"quotient_dim", 1}}}}}}),
      task("morita", "morita", "trivial"),
  };
  return w;
}

}  // namespace

std::vector<std::pair<std::string, Workspace>> fixture_workspaces() {
  std::vector<std::pair<std::string, Workspace>> out;
  out.emplace_back("example_3_2.json", example_3_2());
  out.emplace_back("example_3_3.json", example_3_3());
  out.emplace_back("example_3_7.json", example_3_7());
  out.emplace_back("example_4_10.json", example_4_10());
  out.emplace_back("morita_function_ring.json", morita_function_ring());
  out.emplace_back("brandt_b2.json", brandt_b2());
  out.emplace_back("semilattice.json", semilattices());
  return out;
}

std::vector<std::string> emit_fixture_corpus(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir + ": " + ec.message(), dir);
  std::vector<std::string> written;
  for (const auto& [name, w] : fixture_workspaces()) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    out << serialize(w);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace pact
