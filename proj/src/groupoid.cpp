#include "pact/groupoid.hpp"

#include <algorithm>

#include "pact/error.hpp"

namespace pact {

Arrow GroupoidData::index(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::UnresolvedReference, "unknown arrow '" + std::string(name) + "'", std::string(name));
  return static_cast<Arrow>(it - names.begin());
}

Arrow GroupoidBuilder::add(std::string name, bool object) {
  if (std::find(data_.names.begin(), data_.names.end(), name) != data_.names.end()) {
    throw Error(ErrorCode::InvalidStructure, "duplicate arrow name '" + name + "'", name);
  }
  data_.names.push_back(std::move(name));
  data_.is_object.push_back(object);
  data_.inv.push_back(kNoArrow);
  return data_.names.size() - 1;
}

Arrow GroupoidBuilder::object(std::string name) {
  const Arrow e = add(std::move(name), true);
  data_.inv[e] = e;
  return e;
}

Arrow GroupoidBuilder::arrow(std::string name, std::string inverse_name) {
  if (name == inverse_name) {
    const Arrow g = add(std::move(name), false);
    data_.inv[g] = g;
    return g;
  }
  const Arrow g = add(std::move(name), false);
  const Arrow h = add(std::move(inverse_name), false);
  data_.inv[g] = h;
  data_.inv[h] = g;
  return g;
}

GroupoidBuilder& GroupoidBuilder::compose(std::string_view g, std::string_view h, std::string_view gh) {
  products_.push_back({data_.index(g), data_.index(h), data_.index(gh)});
  return *this;
}

GroupoidBuilder& GroupoidBuilder::below(std::string_view lesser, std::string_view greater) {
  data_.order.emplace_back(data_.index(lesser), data_.index(greater));
  return *this;
}

GroupoidData GroupoidBuilder::build() const {
  GroupoidData d = data_;
  const std::size_t n = d.size();
  d.comp.assign(n * n, kNoArrow);
  for (const auto& p : products_) d.comp[p.g * n + p.h] = p.gh;
  complete_identities(d);
  return d;
}

void complete_identities(GroupoidData& data) {
  const std::size_t n = data.size();
  if (data.comp.size() != n * n) throw Error(ErrorCode::InvalidStructure, "composition table has wrong size");
  for (Arrow e = 0; e < n; ++e) {
    if (data.is_object[e] && data.comp[e * n + e] == kNoArrow) data.comp[e * n + e] = e;
  }
  for (Arrow g = 0; g < n; ++g) {
    const Arrow gi = data.inv[g];
    if (data.is_object[g] || gi >= n) continue;
    const Arrow e = data.comp[g * n + gi];
    if (e >= n || !data.is_object[e]) continue;
    if (data.comp[e * n + g] == kNoArrow) data.comp[e * n + g] = g;
    if (data.comp[gi * n + e] == kNoArrow) data.comp[gi * n + e] = gi;
  }
}

OrderedGroupoid::OrderedGroupoid(GroupoidData data) : data_(std::move(data)) {
  const std::size_t n = data_.size();
  if (data_.is_object.size() != n || data_.inv.size() != n || data_.comp.size() != n * n) {
    throw Error(ErrorCode::InvalidStructure, "groupoid tables have inconsistent sizes");
  }
  for (Arrow g = 0; g < n; ++g) {
    if (data_.inv[g] >= n) throw Error(ErrorCode::InvalidStructure, "arrow '" + data_.names[g] + "' has no inverse", data_.names[g]);
    for (Arrow h = 0; h < n; ++h) {
      const Arrow gh = data_.comp[g * n + h];
      if (gh != kNoArrow && gh >= n) throw Error(ErrorCode::InvalidStructure, "composition result out of range");
    }
  }
  for (const auto& [a, b] : data_.order) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidStructure, "order pair out of range");
  }
  for (Arrow g = 0; g < n; ++g) {
    if (data_.is_object[g]) objects_.push_back(g);
  }
  dom_.assign(n, kNoArrow);
  ran_.assign(n, kNoArrow);
  for (Arrow g = 0; g < n; ++g) {
    std::size_t nd = 0, nr = 0;
    for (Arrow e : objects_) {
      if (data_.comp[g * n + e] == g) {
        dom_[g] = e;
        ++nd;
      }
      if (data_.comp[e * n + g] == g) {
        ran_[g] = e;
        ++nr;
      }
    }
    if (nd != 1) dom_[g] = kNoArrow;
    if (nr != 1) ran_[g] = kNoArrow;
  }
  leq_.assign(n * n, 0);
  for (Arrow g = 0; g < n; ++g) leq_[g * n + g] = 1;
  for (const auto& [a, b] : data_.order) leq_[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }
  report_ = validate_groupoid(*this);
  if (report_.ok()) report_.merge(validate_order(*this));
}

OrderedGroupoid OrderedGroupoid::validated(GroupoidData data) {
  OrderedGroupoid g(std::move(data));
  g.require_valid();
  return g;
}

void OrderedGroupoid::require_valid() const {
  if (!report_.ok()) throw Error(ErrorCode::InvalidStructure, "ordered groupoid fails validation: " + report_.summary());
}

std::optional<Arrow> OrderedGroupoid::comp(Arrow g, Arrow h) const {
  const Arrow gh = data_.comp.at(g * size() + h);
  if (gh == kNoArrow) return std::nullopt;
  return gh;
}

Arrow OrderedGroupoid::restriction(Arrow g, Arrow e) const {
  if (!is_object(e) || dom(g) == kNoArrow || !leq(e, dom(g))) {
    throw Error(ErrorCode::NotBelowDomain, name(e) + " is not an object below d(" + name(g) + ")", name(g));
  }
  Arrow found = kNoArrow;
  for (Arrow f = 0; f < size(); ++f) {
    if (leq(f, g) && dom(f) == e) {
      if (found != kNoArrow) throw Error(ErrorCode::InvalidStructure, "restriction (" + name(g) + "|" + name(e) + ") is not unique");
      found = f;
    }
  }
  if (found == kNoArrow) throw Error(ErrorCode::InvalidStructure, "restriction (" + name(g) + "|" + name(e) + ") does not exist");
  return found;
}

Arrow OrderedGroupoid::corestriction(Arrow e, Arrow g) const {
  if (!is_object(e) || ran(g) == kNoArrow || !leq(e, ran(g))) {
    throw Error(ErrorCode::NotBelowRange, name(e) + " is not an object below r(" + name(g) + ")", name(g));
  }
  Arrow found = kNoArrow;
  for (Arrow f = 0; f < size(); ++f) {
    if (leq(f, g) && ran(f) == e) {
      if (found != kNoArrow) throw Error(ErrorCode::InvalidStructure, "corestriction (" + name(e) + "|" + name(g) + ") is not unique");
      found = f;
    }
  }
  if (found == kNoArrow) throw Error(ErrorCode::InvalidStructure, "corestriction (" + name(e) + "|" + name(g) + ") does not exist");
  return found;
}

std::optional<Arrow> OrderedGroupoid::meet(Arrow e, Arrow f) const {
  std::vector<Arrow> lower;
  for (Arrow x : objects_) {
    if (leq(x, e) && leq(x, f)) lower.push_back(x);
  }
  for (Arrow m : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](Arrow x) { return leq(x, m); })) return m;
  }
  return std::nullopt;
}

std::optional<Arrow> OrderedGroupoid::pseudoproduct(Arrow g, Arrow h) const {
  const auto m = meet(dom(g), ran(h));
  if (!m) return std::nullopt;
  return comp(restriction(g, *m), corestriction(*m, h));
}

bool OrderedGroupoid::is_inductive() const {
  for (Arrow e : objects_) {
    for (Arrow f : objects_) {
      if (!meet(e, f)) return false;
    }
  }
  return true;
}

bool OrderedGroupoid::is_pseudoassociative() const {
  require_valid();
  const std::size_t n = size();
  std::vector<std::optional<Arrow>> pp(n * n);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) pp[g * n + h] = pseudoproduct(g, h);
  }
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      for (Arrow k = 0; k < n; ++k) {
        const auto gh = pp[g * n + h];
        const auto hk = pp[h * n + k];
        std::optional<Arrow> left, right;
        if (gh) left = pp[*gh * n + k];
        if (hk) right = pp[g * n + *hk];
        if (left.has_value() != right.has_value()) return false;
        if (left && *left != *right) return false;
      }
    }
  }
  return true;
}

bool OrderedGroupoid::is_trivially_ordered() const {
  for (Arrow g = 0; g < size(); ++g) {
    for (Arrow h = 0; h < size(); ++h) {
      if (g != h && leq(g, h)) return false;
    }
  }
  return true;
}

std::vector<Arrow> OrderedGroupoid::down_range_set(Arrow g) const {
  std::vector<Arrow> out;
  for (Arrow h = 0; h < size(); ++h) {
    if (leq(ran(h), ran(g))) out.push_back(h);
  }
  return out;
}

std::vector<Arrow> OrderedGroupoid::pseudo_composable_set(Arrow g) const {
  std::vector<Arrow> out;
  for (Arrow h = 0; h < size(); ++h) {
    if (meet(dom(inv(g)), ran(h))) out.push_back(h);
  }
  return out;
}

OrderedGroupoid OrderedGroupoid::relabel(const std::vector<Arrow>& perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw Error(ErrorCode::InvalidArgument, "relabeling permutation has wrong size");
  GroupoidData d;
  d.names.resize(n);
  d.is_object.resize(n);
  d.inv.resize(n);
  d.comp.assign(n * n, kNoArrow);
  for (Arrow g = 0; g < n; ++g) {
    d.names[perm[g]] = data_.names[g];
    d.is_object[perm[g]] = data_.is_object[g];
    d.inv[perm[g]] = perm[data_.inv[g]];
    for (Arrow h = 0; h < n; ++h) {
      const Arrow gh = data_.comp[g * n + h];
      if (gh != kNoArrow) d.comp[perm[g] * n + perm[h]] = perm[gh];
    }
  }
  for (const auto& [a, b] : data_.order) d.order.emplace_back(perm[a], perm[b]);
  return OrderedGroupoid(std::move(d));
}

Report validate_groupoid(const OrderedGroupoid& G) {
  Report r;
  const std::size_t n = G.size();
  const auto nm = [&](Arrow g) { return G.name(g); };
  r.check(Clause::Category);
  r.check(Clause::Inverses);
  for (Arrow e : G.objects()) {
    if (G.inv(e) != e) r.fail(Clause::Inverses, "object " + nm(e) + " is not its own inverse");
    if (G.comp(e, e) != e) r.fail(Clause::Category, "object " + nm(e) + " is not idempotent");
  }
  bool ends = true;
  for (Arrow g = 0; g < n; ++g) {
    if (G.dom(g) == kNoArrow) {
      r.fail(Clause::Category, "arrow " + nm(g) + " has no unique right identity");
      ends = false;
    }
    if (G.ran(g) == kNoArrow) {
      r.fail(Clause::Category, "arrow " + nm(g) + " has no unique left identity");
      ends = false;
    }
  }
  if (!ends) return r;
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      const auto gh = G.comp(g, h);
      const bool composable = G.dom(g) == G.ran(h);
      if (gh.has_value() != composable) {
        r.fail(Clause::Category, "composite " + nm(g) + nm(h) + (composable ? " missing although d = r" : " defined although d != r"));
        continue;
      }
      if (gh && (G.dom(*gh) != G.dom(h) || G.ran(*gh) != G.ran(g))) {
        r.fail(Clause::Category, "composite " + nm(g) + nm(h) + " has wrong domain or range");
      }
    }
  }
  if (!r.ok()) return r;
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      const auto gh = G.comp(g, h);
      if (!gh) continue;
      for (Arrow k = 0; k < n; ++k) {
        const auto hk = G.comp(h, k);
        if (!hk) continue;
        if (G.comp(*gh, k) != G.comp(g, *hk)) r.fail(Clause::Category, "associativity fails on (" + nm(g) + "," + nm(h) + "," + nm(k) + ")");
      }
    }
  }
  for (Arrow g = 0; g < n; ++g) {
    const Arrow gi = G.inv(g);
    if (G.inv(gi) != g) r.fail(Clause::Inverses, "inverse is not an involution at " + nm(g));
    if (G.comp(g, gi) != G.ran(g)) r.fail(Clause::Inverses, nm(g) + " " + nm(gi) + " is not r(" + nm(g) + ")");
    if (G.comp(gi, g) != G.dom(g)) r.fail(Clause::Inverses, nm(gi) + " " + nm(g) + " is not d(" + nm(g) + ")");
  }
  return r;
}

Report validate_order(const OrderedGroupoid& G) {
  Report r;
  const std::size_t n = G.size();
  const auto nm = [&](Arrow g) { return G.name(g); };
  r.check(Clause::PartialOrder);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = g + 1; h < n; ++h) {
      if (G.leq(g, h) && G.leq(h, g)) r.fail(Clause::PartialOrder, "antisymmetry fails for " + nm(g) + ", " + nm(h));
    }
  }
  std::vector<std::pair<Arrow, Arrow>> pairs;
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      if (G.leq(g, h)) pairs.emplace_back(g, h);
    }
  }
  r.check(Clause::OG1);
  for (const auto& [g, h] : pairs) {
    if (!G.leq(G.inv(g), G.inv(h))) r.fail(Clause::OG1, nm(g) + " <= " + nm(h) + " but inverses are not ordered");
  }
  r.check(Clause::OG2);
  for (const auto& [g, h] : pairs) {
    for (const auto& [g2, h2] : pairs) {
      const auto a = G.comp(g, g2);
      const auto b = G.comp(h, h2);
      if (a && b && !G.leq(*a, *b)) {
        r.fail(Clause::OG2, "(" + nm(g) + "," + nm(g2) + ") <= (" + nm(h) + "," + nm(h2) + ") but " + nm(*a) + " is not <= " + nm(*b));
      }
    }
  }
  r.check(Clause::OG3);
  r.check(Clause::OG3Star);
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow e : G.objects()) {
      if (G.leq(e, G.dom(g))) {
        std::size_t count = 0;
        for (Arrow f = 0; f < n; ++f) count += G.leq(f, g) && G.dom(f) == e;
        if (count != 1) r.fail(Clause::OG3, "(" + nm(g) + "|" + nm(e) + ") has " + std::to_string(count) + " candidates");
      }
      if (G.leq(e, G.ran(g))) {
        std::size_t count = 0;
        for (Arrow f = 0; f < n; ++f) count += G.leq(f, g) && G.ran(f) == e;
        if (count != 1) r.fail(Clause::OG3Star, "(" + nm(e) + "|" + nm(g) + ") has " + std::to_string(count) + " candidates");
      }
    }
  }
  return r;
}

}  // namespace pact
