#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "pact/action.hpp"
#include "pact/algebra.hpp"
#include "pact/groupoid.hpp"
#include "pact/semigroup.hpp"

namespace pact {

using Json = nlohmann::ordered_json;

/// One requested task: `name` is the catalog entry, `flags` the words after
/// it (e.g. "--minimal"), `options` free-form task parameters.
struct TaskSpec {
  std::string id;
  std::string name;
  std::vector<std::string> flags;
  std::string subject;
  Json options = Json::object();

  bool has_flag(const std::string& f) const;
};

/// Named definitions. Maps keep definition order through `order_*`.
struct Workspace {
  std::vector<std::string> algebra_names, groupoid_names, semigroup_names, action_names, inv_action_names;
  std::map<std::string, std::shared_ptr<const Algebra>> algebras;
  std::map<std::string, std::shared_ptr<const OrderedGroupoid>> groupoids;
  std::map<std::string, std::shared_ptr<const InverseSemigroup>> semigroups;
  std::map<std::string, POAction> actions;
  std::map<std::string, InvSgpAction> inv_actions;
  std::vector<TaskSpec> tasks;

  void add(const std::string& name, std::shared_ptr<const Algebra> a);
  void add(const std::string& name, std::shared_ptr<const OrderedGroupoid> g);
  void add(const std::string& name, std::shared_ptr<const InverseSemigroup> s);
  /// The groupoid/algebra of the action must already be registered.
  void add(const std::string& name, const POAction& a);
  void add(const std::string& name, const InvSgpAction& a);

  /// Throws UnresolvedReference.
  const Algebra& algebra(const std::string& name) const;
  const POAction& action(const std::string& name) const;
  const InvSgpAction& inv_action(const std::string& name) const;
  std::shared_ptr<const OrderedGroupoid> groupoid(const std::string& name) const;
  std::shared_ptr<const InverseSemigroup> semigroup(const std::string& name) const;
  /// Registered name of a structure; throws UnresolvedReference.
  std::string name_of(const Algebra* a) const;
  std::string name_of(const OrderedGroupoid* g) const;
  std::string name_of(const InverseSemigroup* s) const;
};

/// Throws Parse with line and column for malformed JSON, Parse with a JSON
/// path for malformed content, UnresolvedReference for unknown names.
Workspace parse_workspace(const std::string& text, const std::string& source = "<input>");
/// Throws Io when the file cannot be read.
Workspace load_workspace(const std::string& path);
Json to_json(const Workspace& w);
std::string serialize(const Workspace& w);

Json to_json(const Algebra& a);
Json to_json(const GroupoidData& g);
Json to_json(const SemigroupData& s);
/// Structure references are written as the given names.
Json to_json(const POAction& a, const std::string& groupoid, const std::string& algebra);
Json to_json(const InvSgpAction& a, const std::string& semigroup, const std::string& algebra);
Json to_json(const Subspace& s);
/// Rows are images of the domain's canonical basis in codomain coordinates.
Json matrix_json(const LinMap& m);

Algebra algebra_from_json(const Json& j, const std::string& path = "algebra");
GroupoidData groupoid_from_json(const Json& j, const std::string& path = "groupoid");
SemigroupData semigroup_from_json(const Json& j, const std::string& path = "semigroup");
/// Rows span the subspace.
Subspace subspace_from_json(const Json& j, const PrimeModulus& p, std::size_t n, const std::string& path);

}  // namespace pact
