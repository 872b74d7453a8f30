#pragma once

// Structural invariants: center, centralizers, conjugacy classes, commutator
// sets [x,G], the commutator set K(G), the derived subgroup, the upper central
// series, exponents and generating sets for quotients.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cayley/kernel.hpp"

namespace cayley {

inline bool is_abelian(const GroupTable& g) {
  for (Element a : g.generators())
    for (Element b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

/// Z(G). Commuting with a generating set is enough.
inline Subgroup center(const GroupTable& g) {
  std::vector<Element> members;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(z, s) != g.mul(s, z)) {
        central = false;
        break;
      }
    if (central) members.push_back(z);
  }
  return subgroup_from_members(g, std::move(members));
}

inline Subgroup centralizer(const GroupTable& g, Element x) {
  g.require(x);
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) members.push_back(y);
  return subgroup_from_members(g, std::move(members));
}

inline Subgroup centralizer_of_subgroup(const GroupTable& g, const Subgroup& h) {
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Element x : h.generators())
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(y);
  }
  return subgroup_from_members(g, std::move(members));
}

/// [x,G] = { [x,g] : g in G }, sorted.
inline std::vector<Element> commutator_set(const GroupTable& g, Element x) {
  g.require(x);
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> out;
  const Element xi = g.inv(x);
  for (Element y = 0; y < g.order(); ++y) {
    Element c = g.mul(g.mul(xi, g.inv(y)), g.mul(x, y));
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes;  // each sorted; ordered by smallest member
  std::vector<std::size_t> class_of;
};

/// Orbits of G acting on itself by conjugation.
inline ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  ConjugacyClasses out;
  out.class_of.assign(g.order(), static_cast<std::size_t>(-1));
  for (Element x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = out.classes.size();
    std::vector<Element> orbit{x};
    out.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element s : g.generators()) {
        Element y = g.mul(g.mul(g.inv(s), orbit[i]), s);
        if (out.class_of[y] == static_cast<std::size_t>(-1)) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

/// Everything about commutators that the bound checks consume.
struct CommutatorData {
  GroupTable parent;
  ConjugacyClasses classes;
  std::vector<std::vector<Element>> commutator_sets;  // indexed by element
  std::vector<Element> k;                              // K(G), sorted
  Subgroup gamma2;
  std::size_t breadth = 1;
  bool k_equals_gamma2 = true;

  std::size_t class_size(Element x) const { return classes.classes[classes.class_of[x]].size(); }
};

inline CommutatorData commutator_data(const GroupTable& g) {
  auto classes = conjugacy_classes(g);
  std::vector<std::vector<Element>> sets(g.order());
  std::vector<char> in_k(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    sets[x] = commutator_set(g, x);
    for (Element c : sets[x]) in_k[c] = 1;
  }
  std::vector<Element> k;
  for (Element c = 0; c < g.order(); ++c)
    if (in_k[c]) k.push_back(c);
  auto closure = subgroup_closure(g, k);
  auto gamma2 = Subgroup(g, {closure.members().begin(), closure.members().end()}, k);
  std::size_t breadth = 1;
  for (const auto& c : classes.classes) breadth = std::max(breadth, c.size());
  const bool equal = gamma2.order() == k.size();
  return {g, std::move(classes), std::move(sets), std::move(k), std::move(gamma2), breadth, equal};
}

/// gamma_2(G) as the normal closure of the commutators [a, s], s a generator.
/// Cheaper than commutator_data() when K(G) itself is not needed.
inline Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<Element> seed;
  std::vector<char> in(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b : g.generators()) {
      Element c = commutator(g, a, b);
      if (!in[c]) {
        in[c] = 1;
        seed.push_back(c);
      }
    }
  // Close under conjugation by generators until normal.
  auto s = subgroup_closure(g, seed);
  for (;;) {
    std::vector<Element> extra;
    for (Element m : s.members())
      for (Element t : g.generators()) {
        Element c = g.mul(g.mul(g.inv(t), m), t);
        if (!s.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) break;
    seed.insert(seed.end(), extra.begin(), extra.end());
    s = subgroup_closure(g, seed);
  }
  return subgroup_from_members(g, {s.members().begin(), s.members().end()});
}

/// Upper central series 1 = Z_0 <= Z_1 <= ... .
///
/// Terms are appended until one equals its predecessor or the whole group.
/// A group is nilpotent of class terms.size()-1 when the last term is G,
/// so abelian groups, including the trivial group, have class 1.
struct CentralSeries {
  GroupTable parent;
  std::vector<Subgroup> terms;
  std::optional<std::size_t> nilpotency_class;

  const Subgroup& center() const { return terms[1]; }
  const Subgroup& second_center() const { return terms.size() > 2 ? terms[2] : terms.back(); }
  bool nilpotent() const { return nilpotency_class.has_value(); }
};

inline CentralSeries upper_central_series(const GroupTable& g) {
  CentralSeries s{g, {trivial_subgroup(g)}, std::nullopt};
  for (;;) {
    const auto& last = s.terms.back();
    auto q = quotient(g, last);
    auto next = preimage(q, center(q.table));
    const bool stalled = next.order() == last.order();
    s.terms.push_back(std::move(next));
    if (s.terms.back().order() == g.order()) {
      s.nilpotency_class = s.terms.size() - 1;
      break;
    }
    if (stalled) break;
  }
  return s;
}

inline std::uint64_t exponent(const GroupTable& g, const Subgroup& s) {
  std::uint64_t e = 1;
  for (Element x : s.members()) e = std::lcm(e, element_order(g, x));
  return e;
}

inline std::uint64_t exponent(const GroupTable& g) { return exponent(g, whole_group(g)); }

/// Least k >= 1 with x^k in `s`.
inline std::uint64_t order_modulo(const GroupTable& g, Element x, const Subgroup& s) {
  std::uint64_t k = 1;
  for (Element y = x; !s.contains(y); y = g.mul(y, x)) ++k;
  return k;
}

/// [x,G] as a subgroup. Requires [x,G] inside Z(G); the raw set is then
/// already closed and is returned without closing it.
inline Subgroup commutator_set_subgroup(const GroupTable& g, Element x, const Subgroup& z) {
  auto set = commutator_set(g, x);
  for (Element c : set)
    if (!z.contains(c))
      throw HypothesisError("[x,G] is not central: [" + std::to_string(x) + ", g] = " +
                            std::to_string(c) + " lies outside Z(G)");
  std::vector<char> in(g.order(), 0);
  for (Element c : set) in[c] = 1;
  for (Element a : set) {
    if (!in[g.inv(a)])
      throw InvariantError("central [x,G] not closed under inverses at " + std::to_string(a));
    for (Element b : set)
      if (!in[g.mul(a, b)])
        throw InvariantError("central [x,G] not closed under products at " + std::to_string(a) +
                             ", " + std::to_string(b));
  }
  return subgroup_from_members(g, std::move(set));
}

inline Subgroup commutator_set_subgroup(const GroupTable& g, Element x) {
  return commutator_set_subgroup(g, x, center(g));
}

/// Invariant-factor basis of an abelian quotient.
struct AbelianBasis {
  Quotient quotient;
  std::vector<Element> basis;         // coset representatives in the parent
  std::vector<Element> basis_cosets;  // the same, as quotient elements
  std::vector<std::uint64_t> orders;  // non-increasing; each divides the previous
};

/// Greedy invariant-factor extraction on an abelian group table.
///
/// Each round picks the element of largest order modulo the span of the
/// previous picks, then among its lifts one whose absolute order equals
/// that relative order. Such a lift exists because a cyclic subgroup of
/// maximal order is a direct factor, so the picks are independent and
/// their orders are the invariant factors.
inline std::vector<Element> invariant_factor_basis(const GroupTable& a) {
  if (!is_abelian(a)) throw InputError("abelian basis requested for a non-abelian group");
  std::vector<Element> basis;
  auto span = trivial_subgroup(a);
  while (span.order() < a.order()) {
    Element best = kNoElement;
    std::uint64_t best_order = 0;
    for (Element x = 0; x < a.order(); ++x) {
      if (span.contains(x)) continue;
      auto k = order_modulo(a, x, span);
      if (k > best_order) {
        best_order = k;
        best = x;
      }
    }
    Element lift = kNoElement;
    for (Element s : span.members()) {
      Element y = a.mul(best, s);
      if (element_order(a, y) == best_order && (lift == kNoElement || y < lift)) lift = y;
    }
    if (lift == kNoElement) throw InvariantError("no lift of maximal relative order exists");
    basis.push_back(lift);
    span = subgroup_closure(a, basis);
  }
  return basis;
}

inline AbelianBasis abelian_basis(const Quotient& q) {
  auto cosets = invariant_factor_basis(q.table);
  AbelianBasis out{q, {}, cosets, {}};
  for (Element c : cosets) {
    out.basis.push_back(q.rep(c));
    out.orders.push_back(element_order(q.table, c));
  }
  return out;
}

/// Greedy generating set of a table: each step adds the element that
/// enlarges the span most, ties to the smallest index. Not always minimum.
inline std::vector<Element> greedy_generating_set(const GroupTable& t) {
  std::vector<Element> picked;
  auto span = trivial_subgroup(t);
  while (span.order() < t.order()) {
    Element best = kNoElement;
    std::size_t best_size = 0;
    for (Element c = 1; c < t.order(); ++c) {
      if (span.contains(c)) continue;
      auto trial = picked;
      trial.push_back(c);
      auto s = subgroup_closure(t, trial).order();
      if (s > best_size) {
        best_size = s;
        best = c;
      }
      if (s == t.order()) break;
    }
    picked.push_back(best);
    span = subgroup_closure(t, picked);
  }
  return picked;
}

/// Generating cosets of a (possibly non-abelian) quotient, returned as
/// parent representatives.
inline std::vector<Element> generating_cosets(const Quotient& q) {
  std::vector<Element> reps;
  for (Element c : greedy_generating_set(q.table)) reps.push_back(q.rep(c));
  return reps;
}

}  // namespace cayley
