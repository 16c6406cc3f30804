#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "pact/action.hpp"
#include "pact/fixtures.hpp"

// Coordinate model of a global action on F_p^n with permutation maps, and an
// independent computation of its restrictions on coordinate sets.
namespace randact {

using namespace pact;

inline Subspace coords(std::size_t n, std::vector<std::size_t> c) { return Subspace::coordinates(PrimeModulus(5), n, c); }

using Set = std::set<std::size_t>;
using PMap = std::map<std::size_t, std::size_t>;

struct Model {
  std::shared_ptr<const OrderedGroupoid> G;
  std::size_t n = 0;
  std::vector<Set> B;
  std::vector<PMap> pi;
};

inline Set random_subset(const Set& from, std::mt19937& rng) {
  Set out;
  for (auto x : from) {
    if (rng() % 2) out.insert(x);
  }
  return out;
}

inline PMap identity_on(const Set& s) {
  PMap m;
  for (auto x : s) m[x] = x;
  return m;
}

inline PMap inverse_of(const PMap& m) {
  PMap out;
  for (auto [x, y] : m) out[y] = x;
  return out;
}

// arrows (s, s^-1, r(s), d(s), e)
inline Model random_five_arrow(std::mt19937& rng) {
  Model m;
  m.G = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(fixtures::groupoid_3_2()));
  m.n = 2 + rng() % 5;
  std::vector<std::size_t> order(m.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t size = (m.n + 1) / 2 + rng() % (m.n - (m.n + 1) / 2 + 1);
  const std::size_t shared = 2 * size - m.n;
  // order = [R only | shared | D only]
  Set R(order.begin(), order.begin() + static_cast<long>(size));
  Set D(order.begin() + static_cast<long>(size - shared), order.end());
  Set both(order.begin() + static_cast<long>(size - shared), order.begin() + static_cast<long>(size));
  Set fixed = random_subset(both, rng);
  std::vector<std::size_t> dom_rest, cod_rest;
  for (auto x : D)
    if (!fixed.count(x)) dom_rest.push_back(x);
  for (auto x : R)
    if (!fixed.count(x)) cod_rest.push_back(x);
  std::shuffle(cod_rest.begin(), cod_rest.end(), rng);
  PMap pi = identity_on(fixed);
  for (std::size_t i = 0; i < dom_rest.size(); ++i) pi[dom_rest[i]] = cod_rest[i];
  Set E = random_subset(fixed, rng);
  m.B = {R, D, R, D, E};
  m.pi = {pi, inverse_of(pi), identity_on(R), identity_on(D), identity_on(E)};
  return m;
}

// arrows (m_0, m_1, n_0, n_1)
inline Model random_loops(std::mt19937& rng) {
  Model m;
  m.G = std::make_shared<const OrderedGroupoid>(OrderedGroupoid::validated(fixtures::groupoid_3_3()));
  m.n = 2 + rng() % 5;
  std::vector<std::size_t> order(m.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  PMap tau;
  Set low;
  for (std::size_t i = 0; i < m.n;) {
    const bool pair = i + 1 < m.n && rng() % 2;
    const bool keep = rng() % 2;
    if (pair) {
      tau[order[i]] = order[i + 1];
      tau[order[i + 1]] = order[i];
      if (keep) low.insert({order[i], order[i + 1]});
      i += 2;
    } else {
      tau[order[i]] = order[i];
      if (keep) low.insert(order[i]);
      i += 1;
    }
  }
  Set all(order.begin(), order.end());
  PMap tau_low;
  for (auto x : low) tau_low[x] = tau[x];
  m.B = {low, low, all, all};
  m.pi = {identity_on(low), tau_low, identity_on(all), tau};
  return m;
}

inline POAction to_action(const Model& m) {
  auto a = std::make_shared<const Algebra>(Algebra::pointwise(PrimeModulus(5), m.n));
  std::vector<Subspace> ideals;
  for (const auto& s : m.B) ideals.push_back(coords(m.n, std::vector<std::size_t>(s.begin(), s.end())));
  std::vector<LinMap> maps;
  for (Arrow g = 0; g < m.B.size(); ++g) {
    const auto& d = ideals[m.G->inv(g)];
    maps.push_back(LinMap::from_function(d, ideals[g], [&](const Vector& v) {
      const auto x = static_cast<std::size_t>(std::find(v.begin(), v.end(), 1) - v.begin());
      return unit_vector(m.n, m.pi[g].at(x));
    }));
  }
  return POAction(m.G, std::move(a), std::move(ideals), std::move(maps));
}

inline std::vector<Set> random_family(const Model& m, std::mt19937& rng) {
  const auto& G = *m.G;
  std::vector<Set> f(G.size());
  for (Arrow e : G.objects()) f[e] = random_subset(m.B[e], rng);
  auto closed = f;
  for (Arrow e : G.objects())
    for (Arrow x : G.objects())
      if (G.leq(x, e)) closed[e].insert(f[x].begin(), f[x].end());
  return closed;
}

struct Restricted {
  std::vector<Set> A;
  std::vector<PMap> alpha;
};

inline Restricted oracle_restrict(const Model& m, const std::vector<Set>& f) {
  const auto& G = *m.G;
  Restricted r;
  for (Arrow g = 0; g < G.size(); ++g) {
    Set image;
    for (auto x : f[G.dom(g)]) image.insert(m.pi[g].at(x));
    Set a;
    std::set_intersection(image.begin(), image.end(), f[G.ran(g)].begin(), f[G.ran(g)].end(), std::inserter(a, a.end()));
    r.A.push_back(a);
  }
  for (Arrow g = 0; g < G.size(); ++g) {
    PMap al;
    for (auto x : r.A[G.inv(g)]) al[x] = m.pi[g].at(x);
    r.alpha.push_back(al);
  }
  return r;
}

inline Set meet_sets(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool oracle_strong(const OrderedGroupoid& G, const Restricted& r) {
  for (Arrow g = 0; g < G.size(); ++g)
    for (Arrow e : G.objects())
      if (G.leq(e, G.ran(g)) && r.A[G.corestriction(e, g)] != meet_sets(r.A[e], r.A[g])) return false;
  return true;
}

inline bool oracle_ps(const OrderedGroupoid& G, const Restricted& r) {
  for (Arrow g = 0; g < G.size(); ++g) {
    for (Arrow h = 0; h < G.size(); ++h) {
      const auto k = G.pseudoproduct(g, h);
      if (!k) continue;
      Set left;
      for (auto [x, y] : r.alpha[h])
        if (r.A[G.inv(g)].count(y)) left.insert(x);
      if (left != meet_sets(r.A[G.inv(*k)], r.A[G.inv(h)])) return false;
      for (auto x : left)
        if (r.alpha[g].at(r.alpha[h].at(x)) != r.alpha[*k].at(x)) return false;
    }
  }
  return true;
}

}  // namespace randact
