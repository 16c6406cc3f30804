#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pact/report.hpp"

namespace pact {

using Arrow = std::size_t;
inline constexpr Arrow kNoArrow = static_cast<Arrow>(-1);

/// Raw description of a finite ordered groupoid, as read from a file.
/// `comp[g * n + h]` is gh or kNoArrow; `order` lists generating pairs
/// (lesser, greater) whose reflexive-transitive closure is the order.
struct GroupoidData {
  std::vector<std::string> names;
  std::vector<bool> is_object;
  std::vector<Arrow> inv;
  std::vector<Arrow> comp;
  std::vector<std::pair<Arrow, Arrow>> order;

  std::size_t size() const { return names.size(); }
  Arrow index(std::string_view name) const;
};

/// Incremental construction of GroupoidData by arrow name. Products with
/// identities are filled in by build() from the listed g g^{-1} products.
class GroupoidBuilder {
 public:
  Arrow object(std::string name);
  /// Adds g and g^{-1}; pass equal names for a self-inverse arrow.
  Arrow arrow(std::string name, std::string inverse_name);
  GroupoidBuilder& compose(std::string_view g, std::string_view h, std::string_view gh);
  GroupoidBuilder& below(std::string_view lesser, std::string_view greater);
  GroupoidData build() const;

 private:
  Arrow add(std::string name, bool object);
  GroupoidData data_;
  struct Product {
    Arrow g, h, gh;
  };
  std::vector<Product> products_;
};

/// Completes a composition table: for every listed product g g^{-1} = e
/// (e an object) sets e g = g and g^{-1} e = g^{-1}; sets e e = e for objects.
/// Listed entries are never overwritten.
void complete_identities(GroupoidData& data);

class OrderedGroupoid {
 public:
  /// Derives d, r and the order closure, then validates. Never throws on
  /// axiom failures; see validation().
  explicit OrderedGroupoid(GroupoidData data);
  /// Throws InvalidStructure when validation fails.
  static OrderedGroupoid validated(GroupoidData data);

  const GroupoidData& data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  const std::string& name(Arrow g) const { return data_.names.at(g); }
  Arrow index(std::string_view name) const { return data_.index(name); }
  bool is_object(Arrow g) const { return data_.is_object.at(g); }
  const std::vector<Arrow>& objects() const { return objects_; }
  Arrow inv(Arrow g) const { return data_.inv.at(g); }
  /// kNoArrow when undefined.
  Arrow dom(Arrow g) const { return dom_.at(g); }
  Arrow ran(Arrow g) const { return ran_.at(g); }
  std::optional<Arrow> comp(Arrow g, Arrow h) const;
  bool leq(Arrow g, Arrow h) const { return leq_[g * size() + h] != 0; }

  const Report& validation() const { return report_; }
  bool valid() const { return report_.ok(); }
  /// Throws InvalidStructure unless valid().
  void require_valid() const;

  /// (g|e): the unique arrow below g with domain e. Throws NotBelowDomain.
  Arrow restriction(Arrow g, Arrow e) const;
  /// (e|g): the unique arrow below g with range e. Throws NotBelowRange.
  Arrow corestriction(Arrow e, Arrow g) const;
  std::optional<Arrow> meet(Arrow e, Arrow f) const;
  std::optional<Arrow> pseudoproduct(Arrow g, Arrow h) const;

  bool is_inductive() const;
  bool is_pseudoassociative() const;
  bool is_trivially_ordered() const;

  /// G_g = {h : r(h) <= r(g)}.
  std::vector<Arrow> down_range_set(Arrow g) const;
  /// E_g = {h : g^{-1} * h exists}.
  std::vector<Arrow> pseudo_composable_set(Arrow g) const;

  /// Same structure with arrows renamed: arrow g becomes perm[g].
  OrderedGroupoid relabel(const std::vector<Arrow>& perm) const;

 private:
  GroupoidData data_;
  std::vector<Arrow> objects_;
  std::vector<Arrow> dom_;
  std::vector<Arrow> ran_;
  std::vector<std::uint8_t> leq_;
  Report report_;
};

/// Category and inverse axioms.
Report validate_groupoid(const OrderedGroupoid& g);
/// Partial order, (OG1), (OG2), (OG3), (OG3*).
Report validate_order(const OrderedGroupoid& g);

}  // namespace pact
