#include "pact/workspace.hpp"

#include <fstream>
#include <sstream>

#include "pact/error.hpp"

namespace pact {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Vector residues(const Json& j, const PrimeModulus& p, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) bad(path, "expected " + std::to_string(n) + " residues");
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = natural(j[i], path + "[" + std::to_string(i) + "]");
    if (x >= p.value()) bad(path + "[" + std::to_string(i) + "]", "residue out of range [0, p)");
    v.push_back(static_cast<Residue>(x));
  }
  return v;
}

std::vector<Vector> rows(const Json& j, const PrimeModulus& p, std::size_t n, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a matrix");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(residues(j[i], p, n, path + "[" + std::to_string(i) + "]"));
  return out;
}

Json vec_json(const Vector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Listed rows of an ideal and the subspace they span.
struct Listed {
  std::vector<Vector> rows;
  Subspace space;
};

Listed listed_ideal(const Json& j, const Algebra& A, const std::string& path) {
  auto r = rows(j, A.modulus(), A.dim(), path);
  Subspace s = Subspace::span(A.modulus(), A.dim(), r);
  if (s.dim() != r.size()) bad(path, "ideal rows are not linearly independent");
  return Listed{std::move(r), std::move(s)};
}

// Row i of `m` gives the image of dom.rows[i] in coordinates of cod.rows.
LinMap map_from_listed(const Listed& dom, const Listed& cod, const Json& m, const PrimeModulus& p, const std::string& path) {
  const auto coeffs = rows(m, p, cod.rows.size(), path);
  if (coeffs.size() != dom.rows.size()) bad(path, "expected one row per listed domain basis vector");
  std::vector<Vector> images;
  for (const auto& c : coeffs) {
    Vector img(cod.space.ambient_dim(), 0);
    for (std::size_t j = 0; j < c.size(); ++j) img = add(img, scale(cod.rows[j], c[j], p), p);
    images.push_back(img);
  }
  return LinMap::from_function(dom.space, cod.space, [&](const Vector& b) {
    const auto c = solve(dom.rows, b, p);
    Vector img(cod.space.ambient_dim(), 0);
    for (std::size_t i = 0; i < c->size(); ++i) img = add(img, scale(images[i], (*c)[i], p), p);
    return img;
  });
}

template <class Names, class Index, class Inv>
std::pair<std::vector<Subspace>, std::vector<LinMap>> read_action_data(const Json& j, const Algebra& A, const Names& names,
                                                                        Index index, Inv inv,
                                                                        std::function<bool(std::size_t)> default_identity,
                                                                        const std::string& path) {
  const std::size_t n = names.size();
  const Json& ideals_j = field(j, "ideals", path);
  const Json& maps_j = j.contains("maps") ? j.at("maps") : Json::object();
  if (!ideals_j.is_object()) bad(path + ".ideals", "expected an object keyed by name");
  if (!maps_j.is_object()) bad(path + ".maps", "expected an object keyed by name");
  std::vector<std::optional<Listed>> listed(n);
  for (auto it = ideals_j.begin(); it != ideals_j.end(); ++it) {
    const auto x = index(it.key(), path + ".ideals");
    listed[x] = listed_ideal(it.value(), A, path + ".ideals." + it.key());
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!listed[x]) bad(path + ".ideals", "no ideal for \"" + names[x] + "\"");
  std::vector<std::optional<LinMap>> maps(n);
  for (auto it = maps_j.begin(); it != maps_j.end(); ++it) {
    const auto x = index(it.key(), path + ".maps");
    maps[x] = map_from_listed(*listed[inv(x)], *listed[x], it.value(), A.modulus(), path + ".maps." + it.key());
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (maps[x]) continue;
    if (maps[inv(x)] && maps[inv(x)]->is_iso()) {
      maps[x] = maps[inv(x)]->inverse();
    } else if (default_identity(x) && inv(x) == x) {
      maps[x] = LinMap::identity(listed[x]->space);
    } else {
      bad(path + ".maps", "no map for \"" + names[x] + "\"");
    }
  }
  std::vector<Subspace> ideals;
  std::vector<LinMap> out;
  for (std::size_t x = 0; x < n; ++x) {
    ideals.push_back(listed[x]->space);
    out.push_back(*maps[x]);
  }
  return {std::move(ideals), std::move(out)};
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::UnresolvedReference, std::string("unknown ") + kind + " \"" + name + "\"", name);
  return it->second;
}

TaskSpec task_from_json(const Json& j, std::size_t position, const Workspace& w) {
  const std::string path = "tasks[" + std::to_string(position) + "]";
  TaskSpec t;
  t.id = j.contains("id") ? str(j.at("id"), path + ".id") : "task" + std::to_string(position + 1);
  std::istringstream words(str(field(j, "task", path), path + ".task"));
  words >> t.name;
  for (std::string f; words >> f;) t.flags.push_back(f);
  if (t.name.empty()) bad(path + ".task", "empty task name");
  t.subject = str(field(j, "subject", path), path + ".subject");
  if (j.contains("options")) {
    t.options = j.at("options");
    if (!t.options.is_object()) bad(path + ".options", "expected an object");
  }
  const bool known = w.algebras.count(t.subject) || w.groupoids.count(t.subject) || w.semigroups.count(t.subject) ||
                     w.actions.count(t.subject) || w.inv_actions.count(t.subject);
  if (!known) throw Error(ErrorCode::UnresolvedReference, path + ": unknown subject \"" + t.subject + "\"", t.subject);
  return t;
}

Json task_json(const TaskSpec& t) {
  Json j;
  j["id"] = t.id;
  std::string name = t.name;
  for (const auto& f : t.flags) name += " " + f;
  j["task"] = name;
  j["subject"] = t.subject;
  if (!t.options.empty()) j["options"] = t.options;
  return j;
}

}  // namespace

bool TaskSpec::has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }

void Workspace::add(const std::string& name, std::shared_ptr<const Algebra> a) {
  if (!algebras.count(name)) algebra_names.push_back(name);
  algebras[name] = std::move(a);
}

void Workspace::add(const std::string& name, std::shared_ptr<const OrderedGroupoid> g) {
  if (!groupoids.count(name)) groupoid_names.push_back(name);
  groupoids[name] = std::move(g);
}

void Workspace::add(const std::string& name, std::shared_ptr<const InverseSemigroup> s) {
  if (!semigroups.count(name)) semigroup_names.push_back(name);
  semigroups[name] = std::move(s);
}

void Workspace::add(const std::string& name, const POAction& a) {
  name_of(a.groupoid.get());
  name_of(a.carrier.get());
  if (!actions.count(name)) action_names.push_back(name);
  actions.insert_or_assign(name, a);
}

void Workspace::add(const std::string& name, const InvSgpAction& a) {
  name_of(a.semigroup.get());
  name_of(a.carrier.get());
  if (!inv_actions.count(name)) inv_action_names.push_back(name);
  inv_actions.insert_or_assign(name, a);
}

const Algebra& Workspace::algebra(const std::string& name) const { return *lookup(algebras, name, "algebra"); }
const POAction& Workspace::action(const std::string& name) const { return lookup(actions, name, "action"); }
const InvSgpAction& Workspace::inv_action(const std::string& name) const {
  return lookup(inv_actions, name, "inverse semigroup action");
}
std::shared_ptr<const OrderedGroupoid> Workspace::groupoid(const std::string& name) const {
  return lookup(groupoids, name, "groupoid");
}
std::shared_ptr<const InverseSemigroup> Workspace::semigroup(const std::string& name) const {
  return lookup(semigroups, name, "semigroup");
}

std::string Workspace::name_of(const Algebra* a) const {
  for (const auto& [n, x] : algebras)
    if (x.get() == a) return n;
  throw Error(ErrorCode::UnresolvedReference, "algebra is not registered");
}

std::string Workspace::name_of(const OrderedGroupoid* g) const {
  for (const auto& [n, x] : groupoids)
    if (x.get() == g) return n;
  throw Error(ErrorCode::UnresolvedReference, "groupoid is not registered");
}

std::string Workspace::name_of(const InverseSemigroup* s) const {
  for (const auto& [n, x] : semigroups)
    if (x.get() == s) return n;
  throw Error(ErrorCode::UnresolvedReference, "semigroup is not registered");
}

Json to_json(const Subspace& s) {
  Json j = Json::array();
  for (const auto& b : s.basis()) j.push_back(vec_json(b));
  return j;
}

Json matrix_json(const LinMap& m) {
  Json j = Json::array();
  for (const auto& r : m.matrix()) j.push_back(vec_json(r));
  return j;
}

Json to_json(const Algebra& a) {
  Json j;
  j["p"] = a.modulus().value();
  j["dim"] = a.dim();
  Json s = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vec_json(a.basis_product(i, k)));
    s.push_back(row);
  }
  j["structure"] = s;
  j["unit"] = a.unit() ? vec_json(*a.unit()) : Json(nullptr);
  return j;
}

Json to_json(const GroupoidData& g) {
  Json j;
  j["arrows"] = g.names;
  Json objects = Json::array();
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g.is_object[x]) objects.push_back(g.names[x]);
  j["objects"] = objects;
  Json inv = Json::object();
  for (std::size_t x = 0; x < g.size(); ++x) inv[g.names[x]] = g.names.at(g.inv[x]);
  j["inv"] = inv;
  Json comp = Json::array();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (const Arrow z = g.comp[x * g.size() + y]; z != kNoArrow) comp.push_back({g.names[x], g.names[y], g.names[z]});
  j["comp"] = comp;
  Json order = Json::array();
  for (auto [a, b] : g.order) order.push_back({g.names[a], g.names[b]});
  j["order"] = order;
  return j;
}

Json to_json(const SemigroupData& s) {
  Json j;
  j["elements"] = s.names;
  Json mult = Json::array();
  for (std::size_t x = 0; x < s.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < s.size(); ++y) row.push_back(s.names[s.mult[x * s.size() + y]]);
    mult.push_back(row);
  }
  j["mult"] = mult;
  return j;
}

Json to_json(const POAction& a, const std::string& groupoid, const std::string& algebra) {
  Json j;
  j["groupoid"] = groupoid;
  j["algebra"] = algebra;
  Json ideals = Json::object(), maps = Json::object();
  for (Arrow g = 0; g < a.size(); ++g) {
    ideals[a.G().name(g)] = to_json(a.ideal(g));
    maps[a.G().name(g)] = matrix_json(a.map(g));
  }
  j["ideals"] = ideals;
  j["maps"] = maps;
  return j;
}

Json to_json(const InvSgpAction& a, const std::string& semigroup, const std::string& algebra) {
  Json j;
  j["semigroup"] = semigroup;
  j["algebra"] = algebra;
  Json ideals = Json::object(), maps = Json::object();
  for (Element s = 0; s < a.S().size(); ++s) {
    ideals[a.S().name(s)] = to_json(a.ideals[s]);
    maps[a.S().name(s)] = matrix_json(a.maps[s]);
  }
  j["ideals"] = ideals;
  j["maps"] = maps;
  return j;
}

Algebra algebra_from_json(const Json& j, const std::string& path) {
  const auto pv = natural(field(j, "p", path), path + ".p");
  std::optional<PrimeModulus> p;
  try {
    p.emplace(pv);
  } catch (const Error& e) {
    bad(path + ".p", e.what());
  }
  const auto n = natural(field(j, "dim", path), path + ".dim");
  const Json& s = field(j, "structure", path);
  if (!s.is_array() || s.size() != n) bad(path + ".structure", "expected dim rows");
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rows(s[i], *p, n, path + ".structure[" + std::to_string(i) + "]");
    if (row.size() != n) bad(path + ".structure[" + std::to_string(i) + "]", "expected dim products");
    products.insert(products.end(), row.begin(), row.end());
  }
  std::optional<Vector> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = residues(j.at("unit"), *p, n, path + ".unit");
  return Algebra::from_products(*p, n, std::move(products), std::move(unit));
}

GroupoidData groupoid_from_json(const Json& j, const std::string& path) {
  GroupoidData d;
  const Json& arrows = field(j, "arrows", path);
  if (!arrows.is_array()) bad(path + ".arrows", "expected an array of names");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto name = str(arrows[i], path + ".arrows[" + std::to_string(i) + "]");
    if (std::find(d.names.begin(), d.names.end(), name) != d.names.end()) bad(path + ".arrows", "duplicate name \"" + name + "\"");
    d.names.push_back(name);
  }
  const std::size_t n = d.size();
  auto index = [&](const Json& x, const std::string& at) {
    const auto name = str(x, at);
    auto it = std::find(d.names.begin(), d.names.end(), name);
    if (it == d.names.end()) bad(at, "unknown arrow \"" + name + "\"");
    return static_cast<Arrow>(it - d.names.begin());
  };
  d.is_object.assign(n, false);
  const Json& objects = field(j, "objects", path);
  if (!objects.is_array()) bad(path + ".objects", "expected an array of names");
  for (std::size_t i = 0; i < objects.size(); ++i) d.is_object[index(objects[i], path + ".objects[" + std::to_string(i) + "]")] = true;
  d.inv.assign(n, kNoArrow);
  for (Arrow x = 0; x < n; ++x)
    if (d.is_object[x]) d.inv[x] = x;
  if (j.contains("inv")) {
    const Json& inv = j.at("inv");
    if (!inv.is_object()) bad(path + ".inv", "expected an object");
    for (auto it = inv.begin(); it != inv.end(); ++it) {
      const auto at = path + ".inv." + it.key();
      const Arrow a = index(Json(it.key()), at);
      const Arrow b = index(it.value(), at);
      d.inv[a] = b;
      d.inv[b] = a;
    }
  }
  for (Arrow x = 0; x < n; ++x)
    if (d.inv[x] == kNoArrow) bad(path + ".inv", "no inverse for \"" + d.names[x] + "\"");
  d.comp.assign(n * n, kNoArrow);
  const Json& comp = field(j, "comp", path);
  if (!comp.is_array()) bad(path + ".comp", "expected an array of [g, h, gh]");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const auto at = path + ".comp[" + std::to_string(i) + "]";
    if (!comp[i].is_array() || comp[i].size() != 3) bad(at, "expected [g, h, gh]");
    d.comp[index(comp[i][0], at) * n + index(comp[i][1], at)] = index(comp[i][2], at);
  }
  if (j.contains("order")) {
    const Json& order = j.at("order");
    if (!order.is_array()) bad(path + ".order", "expected an array of [lesser, greater]");
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto at = path + ".order[" + std::to_string(i) + "]";
      if (!order[i].is_array() || order[i].size() != 2) bad(at, "expected [lesser, greater]");
      d.order.emplace_back(index(order[i][0], at), index(order[i][1], at));
    }
  }
  complete_identities(d);
  return d;
}

SemigroupData semigroup_from_json(const Json& j, const std::string& path) {
  SemigroupData d;
  const Json& el = field(j, "elements", path);
  if (!el.is_array()) bad(path + ".elements", "expected an array of names");
  for (std::size_t i = 0; i < el.size(); ++i) {
    const auto name = str(el[i], path + ".elements[" + std::to_string(i) + "]");
    if (std::find(d.names.begin(), d.names.end(), name) != d.names.end()) bad(path + ".elements", "duplicate name \"" + name + "\"");
    d.names.push_back(name);
  }
  const std::size_t n = d.size();
  const Json& mult = field(j, "mult", path);
  if (!mult.is_array() || mult.size() != n) bad(path + ".mult", "expected a full table");
  for (std::size_t x = 0; x < n; ++x) {
    const auto at = path + ".mult[" + std::to_string(x) + "]";
    if (!mult[x].is_array() || mult[x].size() != n) bad(at, "expected a full row");
    for (std::size_t y = 0; y < n; ++y) {
      const auto name = str(mult[x][y], at);
      auto it = std::find(d.names.begin(), d.names.end(), name);
      if (it == d.names.end()) bad(at, "unknown element \"" + name + "\"");
      d.mult.push_back(static_cast<Element>(it - d.names.begin()));
    }
  }
  return d;
}

Subspace subspace_from_json(const Json& j, const PrimeModulus& p, std::size_t n, const std::string& path) {
  return Subspace::span(p, n, rows(j, p, n, path));
}

Workspace parse_workspace(const std::string& text, const std::string& source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  if (!root.is_object()) bad(source, "expected a top-level object");
  Workspace w;
  static const Json empty = Json::object();
  auto section = [&](const char* key) -> const Json& {
    if (!root.contains(key)) return empty;
    if (!root.at(key).is_object()) bad(key, "expected an object of named definitions");
    return root.at(key);
  };
  auto ref = [&](const Json& j, const char* key, const std::string& path) { return str(field(j, key, path), path + "." + key); };

  for (const auto& [name, j] : section("algebras").items())
    w.add(name, std::make_shared<const Algebra>(algebra_from_json(j, "algebras." + name)));
  for (const auto& [name, j] : section("groupoids").items())
    w.add(name, std::make_shared<const OrderedGroupoid>(groupoid_from_json(j, "groupoids." + name)));
  for (const auto& [name, j] : section("semigroups").items())
    w.add(name, std::make_shared<const InverseSemigroup>(semigroup_from_json(j, "semigroups." + name)));

  for (const auto& [name, j] : section("actions").items()) {
    const std::string path = "actions." + name;
    const auto G = w.groupoid(ref(j, "groupoid", path));
    const auto A = lookup(w.algebras, ref(j, "algebra", path), "algebra");
    const auto& names = G->data().names;
    auto index = [&](const std::string& n, const std::string& at) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) bad(at, "unknown arrow \"" + n + "\"");
      return static_cast<std::size_t>(it - names.begin());
    };
    auto [ideals, maps] = read_action_data(
        j, *A, names, index, [&](std::size_t x) { return G->data().inv.at(x); },
        [&](std::size_t x) { return G->is_object(x); }, path);
    try {
      w.add(name, POAction(G, A, std::move(ideals), std::move(maps)));
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  for (const auto& [name, j] : section("inv_actions").items()) {
    const std::string path = "inv_actions." + name;
    const auto S = w.semigroup(ref(j, "semigroup", path));
    const auto A = lookup(w.algebras, ref(j, "algebra", path), "algebra");
    const auto& names = S->data().names;
    auto index = [&](const std::string& n, const std::string& at) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) bad(at, "unknown element \"" + n + "\"");
      return static_cast<std::size_t>(it - names.begin());
    };
    auto inv = [&](std::size_t x) {
      const auto y = S->inv(x);
      if (y == kNoArrow) bad(path, "semigroup \"" + ref(j, "semigroup", path) + "\" is not inverse");
      return y;
    };
    auto [ideals, maps] = read_action_data(j, *A, names, index, inv, [&](std::size_t x) { return S->is_idempotent(x); }, path);
    try {
      w.add(name, InvSgpAction(S, A, std::move(ideals), std::move(maps)));
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (root.contains("tasks")) {
    const Json& tasks = root.at("tasks");
    if (!tasks.is_array()) bad("tasks", "expected an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) w.tasks.push_back(task_from_json(tasks[i], i, w));
  }
  return w;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path, path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str(), path);
}

Json to_json(const Workspace& w) {
  Json root;
  Json algebras = Json::object(), groupoids = Json::object(), semigroups = Json::object(), actions = Json::object(),
       inv_actions = Json::object(), tasks = Json::array();
  for (const auto& n : w.algebra_names) algebras[n] = to_json(*w.algebras.at(n));
  for (const auto& n : w.groupoid_names) groupoids[n] = to_json(w.groupoids.at(n)->data());
  for (const auto& n : w.semigroup_names) semigroups[n] = to_json(w.semigroups.at(n)->data());
  for (const auto& n : w.action_names) {
    const auto& a = w.actions.at(n);
    actions[n] = to_json(a, w.name_of(a.groupoid.get()), w.name_of(a.carrier.get()));
  }
  for (const auto& n : w.inv_action_names) {
    const auto& a = w.inv_actions.at(n);
    inv_actions[n] = to_json(a, w.name_of(a.semigroup.get()), w.name_of(a.carrier.get()));
  }
  for (const auto& t : w.tasks) tasks.push_back(task_json(t));
  root["algebras"] = algebras;
  root["groupoids"] = groupoids;
  root["semigroups"] = semigroups;
  root["actions"] = actions;
  root["inv_actions"] = inv_actions;
  root["tasks"] = tasks;
  return root;
}

std::string serialize(const Workspace& w) { return to_json(w).dump(2) + "\n"; }

}  // namespace pact
