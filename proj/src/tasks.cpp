#include "pact/tasks.hpp"

#include <functional>
#include <sstream>

#include "pact/error.hpp"
#include "pact/globalization.hpp"
#include "pact/skew.hpp"

namespace pact {

namespace {

Json dims_by_name(const std::vector<Subspace>& ideals, const std::function<std::string(std::size_t)>& name) {
  Json j = Json::object();
  for (std::size_t x = 0; x < ideals.size(); ++x) j[name(x)] = ideals[x].dim();
  return j;
}

Json dims(const POAction& a) {
  return dims_by_name(a.ideals, [&](std::size_t x) { return a.G().name(x); });
}

Json dims(const InvSgpAction& a) {
  return dims_by_name(a.ideals, [&](std::size_t x) { return a.S().name(x); });
}

Json rows_json(const std::vector<Vector>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (auto x : r) row.push_back(x);
    j.push_back(row);
  }
  return j;
}

// Embedding phi_e as images of the canonical basis of A_e in B coordinates.
Json embeddings_json(const std::vector<std::optional<LinMap>>& phi, const std::function<std::string(std::size_t)>& name) {
  Json j = Json::object();
  for (std::size_t x = 0; x < phi.size(); ++x)
    if (phi[x]) j[name(x)] = rows_json(phi[x]->images());
  return j;
}

Json witness_json(const POAction& a, const EquivalenceWitness& w) {
  Json j = Json::object();
  for (Arrow e : a.G().objects()) j[a.G().name(e)] = rows_json(w.maps[e]->images());
  return j;
}

Json search_json(const POAction& a, const EquivalenceSearch& s) {
  Json j;
  j["outcome"] = to_string(s.outcome);
  j["reason"] = s.reason;
  j["nodes"] = s.nodes;
  if (s.witness) j["witness"] = witness_json(a, *s.witness);
  return j;
}

Json skew_json(const SkewRing& s) {
  Json j;
  j["dim"] = s.dim();
  const auto r = check_skew_associative(s);
  j["associative"] = r.ok();
  j["associator_witnesses"] = r.failures(Clause::Associativity);
  j["graded"] = check_grading(s);
  return j;
}

Json ordered_json_of(const OrderedSkewRing& o) {
  Json j;
  j["skew_dim"] = o.skew.dim();
  j["n_dim"] = o.n_ideal.dim();
  j["quotient_dim"] = o.dim();
  return j;
}

Json morita_json(const MoritaReport& m) {
  Json j;
  j["R_dim"] = m.R.dim();
  j["T_dim"] = m.T.dim();
  j["R_image_dim"] = m.r_image.dim();
  j["T1_R_dim"] = m.t_one_r.dim();
  j["1_RT_dim"] = m.one_r_t.dim();
  j["1_RT1_R_dim"] = m.one_r_t_one_r.dim();
  j["T1_RT_dim"] = m.t_one_r_t.dim();
  return j;
}

Globalization globalize(const POAction& a, bool minimal) {
  return minimal ? build_minimal_globalization(a) : build_globalization(a);
}

struct Context {
  const Workspace& w;
  const TaskSpec& t;
  TaskReport& out;

  const Json& opt(const char* key) const {
    if (!t.options.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("task needs option \"") + key + "\"");
    return t.options.at(key);
  }
  bool is_action() const { return w.actions.count(t.subject) != 0; }
  bool is_inv_action() const { return w.inv_actions.count(t.subject) != 0; }
};

void validate_groupoid_task(Context& c) {
  if (c.w.semigroups.count(c.t.subject)) {
    const auto S = c.w.semigroup(c.t.subject);
    c.out.clauses.merge(S->validation());
    c.out.data["elements"] = S->size();
    c.out.data["idempotents"] = S->idempotents().size();
    return;
  }
  const auto G = c.w.groupoid(c.t.subject);
  c.out.clauses.merge(G->validation());
  c.out.data["arrows"] = G->size();
  c.out.data["objects"] = G->objects().size();
  if (G->valid()) {
    c.out.data["inductive"] = G->is_inductive();
    c.out.data["pseudoassociative"] = G->is_pseudoassociative();
    c.out.data["trivially_ordered"] = G->is_trivially_ordered();
  }
}

void validate_action_task(Context& c) {
  if (c.is_inv_action()) {
    const auto& a = c.w.inv_action(c.t.subject);
    c.out.clauses.merge(validate_inv_sgp_action(a));
    c.out.data["dims"] = dims(a);
    if (c.out.clauses.ok()) {
      c.out.data["preunital"] = is_preunital(a);
      c.out.data["unital"] = is_unital(a);
      c.out.data["global"] = is_global(a);
    }
    return;
  }
  const auto& a = c.w.action(c.t.subject);
  c.out.clauses.merge(validate_po_action(a));
  c.out.data["dims"] = dims(a);
  if (c.out.clauses.ok()) {
    c.out.data["preunital"] = is_preunital(a);
    c.out.data["unital"] = is_unital(a);
    c.out.data["global"] = is_global(a);
    c.out.data["strong"] = is_strong(a);
  }
}

void restrict_task(Context& c) {
  const auto& beta = c.w.action(c.t.subject);
  const auto& B = beta.A();
  std::optional<RestrictedAction> r;
  if (c.t.options.contains("ideal")) {
    r = standard_restriction(beta, subspace_from_json(c.opt("ideal"), B.modulus(), B.dim(), "options.ideal"));
  } else {
    std::vector<Subspace> family(beta.size(), B.zero_space());
    const Json& f = c.opt("family");
    for (auto it = f.begin(); it != f.end(); ++it)
      family[beta.G().index(it.key())] = subspace_from_json(it.value(), B.modulus(), B.dim(), "options.family." + it.key());
    const bool strict = c.t.options.value("strict", true);
    r = general_restriction(beta, family, strict);
  }
  c.out.clauses.merge(validate_po_action(r->action));
  c.out.data["carrier_dim"] = r->action.A().dim();
  c.out.data["dims"] = dims(r->action);
  bool identities = true;
  for (Arrow g = 0; g < r->action.size(); ++g)
    identities = identities && r->action.map(g).domain() == r->action.map(g).codomain() &&
                 same_partial_map(r->action.map(g), LinMap::identity(r->action.ideal(g)));
  c.out.data["identity_maps"] = identities;
  c.out.data["inclusion"] = rows_json(r->inclusion.images());
}

void strong_check_task(Context& c) {
  const auto& a = c.w.action(c.t.subject);
  const Report v = validate_po_action(a);
  if (!v.ok()) {
    c.out.clauses.merge(v);
    return;
  }
  const bool strong = is_strong(a);
  const bool ps = satisfies_ps(a);
  const auto meet = meet_intersection_witness(a);
  c.out.data["strong"] = strong;
  c.out.data["ps"] = ps;
  c.out.data["meet_equalities"] = !meet.has_value();
  if (auto s = strength_witness(a)) c.out.data["strength_witness"] = *s;
  if (meet) c.out.data["meet_witness"] = *meet;
  if (ps && !strong) c.out.notes.push_back("(PS) holds but the action is not strong");
  if (ps != (strong && !meet)) c.out.notes.push_back("(PS) differs from strength plus the meet equalities");
}

void globalization_payload(Context& c, const Globalization& g) {
  const auto& G = g.base.G();
  auto name = [&](std::size_t x) { return G.name(x); };
  c.out.clauses.merge(g.report);
  c.out.data["minimal"] = g.minimal;
  c.out.data["dims"] = dims(g.global);
  c.out.data["B_dim"] = g.global.A().dim();
  c.out.data["embeddings"] = embeddings_json(g.embeddings, name);
}

void globalize_task(Context& c) {
  const auto& a = c.w.action(c.t.subject);
  const auto g = globalize(a, c.t.has_flag("--minimal"));
  globalization_payload(c, g);
  if (c.t.options.contains("compare")) {
    const auto& other = c.w.action(c.opt("compare").get<std::string>());
    const auto s = search_equivalence(g.global, other, c.t.options.value("budget", std::uint64_t{1'000'000}));
    c.out.data["equivalence"] = search_json(g.global, s);
    if (s.witness) c.out.clauses.merge(verify_equivalence(g.global, other, *s.witness));
  }
}

void verify_globalization_task(Context& c) {
  const auto& a = c.w.action(c.t.subject);
  const auto& beta = c.w.action(c.opt("global").get<std::string>());
  const auto& A = a.A();
  std::vector<Vector> images;
  const Json& inc = c.opt("inclusion");
  for (std::size_t i = 0; i < inc.size(); ++i) {
    images.push_back(inc[i].get<Vector>());
    if (images.back().size() != beta.A().dim() ||
        std::any_of(images.back().begin(), images.back().end(), [&](Residue x) { return x >= A.modulus().value(); }))
      throw Error(ErrorCode::InvalidArgument, "inclusion row " + std::to_string(i) + " is not a vector of B");
  }
  if (images.size() != A.dim()) throw Error(ErrorCode::InvalidArgument, "inclusion needs one row per carrier basis vector");
  const RestrictedAction r{a, LinMap(A.full_space(), beta.A().full_space(), images)};
  const auto g = external_globalization(a, beta, inclusion_embeddings(r, beta), c.t.options.value("minimal", false));
  globalization_payload(c, g);
}

void equivalence_task(Context& c) {
  const auto& a = c.w.action(c.t.subject);
  const auto& other = c.w.action(c.opt("other").get<std::string>());
  const auto s = search_equivalence(a, other, c.t.options.value("budget", std::uint64_t{1'000'000}));
  c.out.data = search_json(a, s);
  if (s.witness) c.out.clauses.merge(verify_equivalence(a, other, *s.witness));
}

void skew_task(Context& c) {
  const bool ordered = c.t.has_flag("--ordered");
  if (c.is_inv_action()) {
    const auto& a = c.w.inv_action(c.t.subject);
    const auto o = build_inv_sgp_skew(a);
    c.out.data["skew"] = skew_json(o.skew);
    c.out.clauses.merge(check_skew_associative(o.skew));
    c.out.data["ordered"] = ordered_json_of(o);
    c.out.clauses.expect(Clause::SkewUnit, is_two_sided_identity(o.algebra(), skew_unit(o, a)), "unit is not an identity");
    return;
  }
  const auto& a = c.w.action(c.t.subject);
  const auto s = build_skew(a);
  c.out.data["skew"] = skew_json(s);
  const Report assoc = check_skew_associative(s);
  c.out.clauses.merge(assoc);
  if (!ordered) return;
  if (!assoc.ok()) throw Error(ErrorCode::NotAssociative, assoc.failures(Clause::Associativity).front());
  const auto o = build_ordered_skew(s);
  c.out.data["ordered"] = ordered_json_of(o);
  if (is_preunital(a)) {
    const bool identity = is_two_sided_identity(o.algebra(), skew_unit(o, a));
    c.out.data["unit_is_identity"] = identity;
    if (is_unital(a)) c.out.clauses.expect(Clause::SkewUnit, identity, "sum of 1_e delta_e is not an identity");
  }
}

void morita_task(Context& c) {
  if (c.is_inv_action()) {
    const auto& a = c.w.inv_action(c.t.subject);
    const auto m = morita_context(a, globalize_inverse_semigroup_action(a));
    c.out.clauses.merge(m.report);
    c.out.data = morita_json(m);
    return;
  }
  const auto& a = c.w.action(c.t.subject);
  const std::string kind = c.t.options.value("globalization", std::string("minimal"));
  if (kind != "minimal" && kind != "function")
    throw Error(ErrorCode::InvalidArgument, "globalization must be \"minimal\" or \"function\"");
  const auto m = morita_context(a, globalize(a, kind == "minimal"));
  c.out.clauses.merge(m.report);
  c.out.data = morita_json(m);
}

void esn_task(Context& c) {
  if (c.t.has_flag("--to-semigroup") || (!c.t.has_flag("--to-groupoid") && c.w.groupoids.count(c.t.subject))) {
    const auto G = c.w.groupoid(c.t.subject);
    G->require_valid();
    const auto S = esn_to_semigroup(*G);
    c.out.clauses.merge(S.validation());
    const auto back = esn_to_groupoid(S);
    c.out.data["semigroup"] = to_json(S.data());
    c.out.data["roundtrip"] = same_groupoid(back, *G) && back.data().names == G->data().names;
  } else {
    const auto S = c.w.semigroup(c.t.subject);
    S->require_valid();
    const auto G = esn_to_groupoid(*S);
    c.out.clauses.merge(G.validation());
    c.out.data["groupoid"] = to_json(G.data());
    c.out.data["inductive"] = G.is_inductive();
    c.out.data["roundtrip"] = esn_to_semigroup(G) == *S;
  }
  if (!c.out.data["roundtrip"].get<bool>()) c.out.notes.push_back("ESN roundtrip is not the identity");
}

void inv_pipeline_task(Context& c) {
  const auto& a = c.w.inv_action(c.t.subject);
  c.out.clauses.merge(validate_inv_sgp_action(a));
  const auto groupoid_level = semigroup_action_to_groupoid_action(a);
  c.out.data["groupoid_action_strong"] = is_strong(groupoid_level);
  const auto g = globalize_inverse_semigroup_action(a);
  c.out.clauses.merge(g.report);
  c.out.data["dims"] = dims(g.global);
  c.out.data["B_dim"] = g.global.A().dim();
  c.out.data["embeddings"] = embeddings_json(g.embeddings, [&](std::size_t x) { return a.S().name(x); });
}

using Runner = void (*)(Context&);

struct Entry {
  TaskInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"validate-groupoid", "", "groupoid | semigroup", "groupoid, order and inverse semigroup axioms"}, validate_groupoid_task},
      {{"validate-action", "", "action | inv_action", "(P1)-(P3), (PO) or (P1')-(P3')"}, validate_action_task},
      {{"restrict", "", "action", "standard (options.ideal) or general (options.family) restriction"}, restrict_task},
      {{"strong-check", "", "action", "strength, (PS) and the meet equalities"}, strong_check_task},
      {{"globalize", "[--minimal]", "action", "function-ring or minimal globalization; options.compare"}, globalize_task},
      {{"verify-globalization", "", "action", "globalization axioms for options.global with options.inclusion"}, verify_globalization_task},
      {{"equivalence", "", "action", "equivalence search against options.other"}, equivalence_task},
      {{"skew", "[--ordered]", "action | inv_action", "skew ring, associator scan, ordered quotient"}, skew_task},
      {{"morita", "", "action | inv_action", "corner equalities and the Morita context; options.globalization"}, morita_task},
      {{"esn", "[--to-groupoid | --to-semigroup]", "semigroup | groupoid", "ESN transfer and roundtrip"}, esn_task},
      {{"inv-action-pipeline", "", "inv_action", "ESN transport, minimal globalization, globalization axioms"}, inv_pipeline_task},
  };
  return e;
}

const Entry& entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e;
  throw Error(ErrorCode::UnknownTask, "unknown task \"" + name + "\"", name);
}

std::string full_name(const TaskSpec& t) {
  std::string s = t.name;
  for (const auto& f : t.flags) s += " " + f;
  return s;
}

}  // namespace

const std::vector<TaskInfo>& task_catalog() {
  static const std::vector<TaskInfo> c = [] {
    std::vector<TaskInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return c;
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& t : task_catalog()) {
    std::string head = t.name + (t.flags.empty() ? "" : " " + t.flags);
    os << head << std::string(head.size() < 44 ? 44 - head.size() : 1, ' ') << t.subject << ": " << t.summary << "\n";
  }
  return os.str();
}

std::string_view to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::Pass:
      return "pass";
    case TaskStatus::Fail:
      return "fail";
    case TaskStatus::Error:
      return "error";
  }
  return "error";
}

void match_expectations(const Json& expected, const Json& actual, const std::string& path, std::vector<std::string>& out) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      out.push_back(path + ": expected an object");
      return;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string p = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key())) {
        out.push_back(p + ": missing");
        continue;
      }
      match_expectations(it.value(), actual.at(it.key()), p, out);
    }
    return;
  }
  if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

TaskReport run_task(const Workspace& w, const TaskSpec& t) {
  const Entry& e = entry(t.name);
  TaskReport out;
  out.id = t.id;
  out.task = full_name(t);
  out.subject = t.subject;
  Context c{w, t, out};
  try {
    e.run(c);
  } catch (const Error& err) {
    out.status = TaskStatus::Error;
    out.error = err.what();
    out.data["error_code"] = std::string(to_string(err.code()));
    if (!err.subject().empty()) out.data["error_subject"] = err.subject();
  } catch (const std::exception& err) {
    out.status = TaskStatus::Error;
    out.error = err.what();
  }
  if (t.options.contains("expect")) {
    std::vector<std::string> mismatches;
    match_expectations(t.options.at("expect"), out.data, "", mismatches);
    for (auto& m : mismatches) out.notes.push_back("expectation " + m);
  }
  if (out.status != TaskStatus::Error && (!out.clauses.ok() || !out.notes.empty())) out.status = TaskStatus::Fail;
  // an expected error counts as success
  if (out.status == TaskStatus::Error && t.options.contains("expect") && t.options.at("expect").contains("error_code") &&
      out.notes.empty())
    out.status = TaskStatus::Pass;
  return out;
}

std::vector<TaskSpec> select_tasks(const Workspace& w, const std::vector<std::string>& selectors) {
  if (selectors.empty()) return w.tasks;
  std::vector<TaskSpec> out;
  for (const auto& s : selectors) {
    bool found = false;
    for (const auto& t : w.tasks) {
      if (t.id == s || t.name == s || full_name(t) == s) {
        found = true;
        if (std::none_of(out.begin(), out.end(), [&](const TaskSpec& x) { return x.id == t.id; })) out.push_back(t);
      }
    }
    if (!found) {
      entry(s.substr(0, s.find(' ')));
      throw Error(ErrorCode::UnknownTask, "no task in the workspace matches \"" + s + "\"", s);
    }
  }
  return out;
}

Json to_json(const TaskReport& r) {
  Json j;
  j["id"] = r.id;
  j["task"] = r.task;
  j["subject"] = r.subject;
  j["status"] = std::string(to_string(r.status));
  Json clauses = Json::object();
  for (Clause c : r.clauses.clauses()) clauses[std::string(label(c))] = r.clauses.passed(c);
  j["clauses"] = clauses;
  Json violations = Json::array();
  for (const auto& v : r.clauses.violations()) violations.push_back({{"clause", std::string(label(v.clause))}, {"detail", v.detail}});
  j["violations"] = violations;
  j["data"] = r.data;
  j["notes"] = r.notes;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string to_text(const TaskReport& r) {
  std::ostringstream os;
  os << r.id << " [" << r.task << " " << r.subject << "]: " << to_string(r.status) << "\n";
  for (Clause c : r.clauses.clauses()) os << "  " << label(c) << ": " << (r.clauses.passed(c) ? "pass" : "FAIL") << "\n";
  for (const auto& v : r.clauses.violations()) os << "    " << label(v.clause) << " " << v.detail << "\n";
  for (auto it = r.data.begin(); it != r.data.end(); ++it) {
    if (it.value().is_structured() && it.value().dump().size() > 100) {
      os << "  " << it.key() << " = (omitted, see --json)\n";
      continue;
    }
    os << "  " << it.key() << " = " << it.value().dump() << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (!r.error.empty()) os << "  error: " << r.error << "\n";
  return os.str();
}

}  // namespace pact
