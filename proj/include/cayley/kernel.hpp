#pragma once

// Explicit finite groups as dense Cayley tables, plus the exact operations
// everything else is built on: closure, subgroups, quotients, products and
// morphism checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

using Element = std::uint32_t;
using Permutation = std::vector<Element>;

inline constexpr Element kIdentity = 0;
inline constexpr Element kNoElement = static_cast<Element>(-1);
inline constexpr std::size_t kDefaultOrderCap = 5000;
// Table entries are stored as 16-bit indices.
inline constexpr std::size_t kMaxRepresentableOrder = 65535;

struct VerificationReport {
  bool ok = true;
  std::string first_violation;
};

namespace detail {

inline VerificationReport fail(std::string msg) { return {false, std::move(msg)}; }

inline std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Structural checks short of associativity. Fills `inv` when it succeeds.
inline VerificationReport check_structure(std::size_t n, std::span<const std::uint16_t> mul,
                                          std::vector<Element>* inv) {
  if (n == 0) return fail("order must be positive");
  if (mul.size() != n * n) return fail("table has " + std::to_string(mul.size()) +
                                       " entries, expected " + std::to_string(n * n));
  for (std::size_t i = 0; i < n * n; ++i)
    if (mul[i] >= n) return fail("entry " + pair_str(i / n, i % n) + " out of range");
  for (std::size_t x = 0; x < n; ++x) {
    if (mul[x] != x) return fail("identity row broken at " + pair_str(0, x));
    if (mul[x * n] != x) return fail("identity column broken at " + pair_str(x, 0));
  }
  std::vector<Element> tmp(n, kNoElement);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul[x * n + y] == 0) {
        tmp[x] = static_cast<Element>(y);
        break;
      }
    }
    if (tmp[x] == kNoElement) return fail("element " + std::to_string(x) + " has no right inverse");
    if (mul[tmp[x] * n + x] != 0)
      return fail("right inverse of " + std::to_string(x) + " is not a left inverse");
  }
  if (inv) *inv = std::move(tmp);
  return {};
}

inline VerificationReport check_associativity(std::size_t n, std::span<const std::uint16_t> mul) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = mul[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (mul[ab * n + c] != mul[a * n + mul[b * n + c]])
          return fail("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
                      ", " + std::to_string(c) + ")");
    }
  return {};
}

}  // namespace detail

/// An explicit finite group on the indices 0..N-1 with identity 0.
///
/// Immutable after construction; copies share the underlying table, so
/// passing by value is cheap and safe across threads.
class GroupTable {
 public:
  GroupTable() : GroupTable(from_table(1, {0})) {}

  /// Builds a table after checking entry range, the identity row/column,
  /// two-sided inverses and generator closure. Associativity is left to
  /// verify_table(). When `generators` is empty a generating set is chosen.
  static GroupTable from_table(std::size_t order, std::vector<std::uint16_t> mul,
                               std::vector<Element> generators = {},
                               std::vector<std::string> labels = {}) {
    if (order > kMaxRepresentableOrder)
      throw SizeError("order " + std::to_string(order) + " exceeds representable maximum");
    auto d = std::make_shared<Data>();
    d->n = order;
    d->mul = std::move(mul);
    auto rep = detail::check_structure(order, d->mul, &d->inv);
    if (!rep.ok) throw InputError("invalid group table: " + rep.first_violation);
    if (!labels.empty() && labels.size() != order)
      throw InputError("labels must have one entry per element");
    d->labels = std::move(labels);
    for (Element g : generators)
      if (g >= order) throw InputError("generator " + std::to_string(g) + " out of range");
    GroupTable t(std::move(d));
    auto gens = std::move(generators);
    if (gens.empty() && order > 1) gens = t.greedy_generators();
    t.set_generators(std::move(gens));
    return t;
  }

  std::size_t order() const noexcept { return d_->n; }
  Element mul(Element a, Element b) const noexcept { return d_->mul[a * d_->n + b]; }
  Element inv(Element a) const noexcept { return d_->inv[a]; }
  std::span<const std::uint16_t> raw() const noexcept { return d_->mul; }
  std::span<const Element> generators() const noexcept { return d_->gens; }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }

  std::string label(Element x) const {
    return d_->labels.empty() ? std::to_string(x) : d_->labels[x];
  }

  bool contains(Element x) const noexcept { return x < d_->n; }

  void require(Element x) const {
    if (x >= d_->n)
      throw InputError("element " + std::to_string(x) + " out of range for group of order " +
                       std::to_string(d_->n));
  }

  bool shares_storage_with(const GroupTable& o) const noexcept { return d_ == o.d_; }

  /// Tables are equal when their multiplication tables agree entry by entry.
  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->mul == b.d_->mul);
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::uint16_t> mul;
    std::vector<Element> inv;
    std::vector<Element> gens;
    std::vector<std::string> labels;
  };

  explicit GroupTable(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  std::vector<Element> greedy_generators() const {
    std::vector<char> in(order(), 0);
    std::vector<Element> members{kIdentity}, gens;
    in[0] = 1;
    for (Element x = 1; x < order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (Element g : gens) {
          Element y = mul(members[i], g);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
    }
    return gens;
  }

  void set_generators(std::vector<Element> gens) {
    std::vector<char> in(order(), 0);
    std::vector<Element> members{kIdentity};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element g : gens) {
        Element y = mul(members[i], g);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    if (members.size() != order())
      throw InputError("generators span " + std::to_string(members.size()) + " of " +
                       std::to_string(order()) + " elements");
    d_->gens = std::move(gens);
  }

  std::shared_ptr<Data> d_;
};

/// Full invariant check, including the O(N^3) associativity scan.
inline VerificationReport verify_table(const GroupTable& g) {
  auto rep = detail::check_structure(g.order(), g.raw(), nullptr);
  if (!rep.ok) return rep;
  return detail::check_associativity(g.order(), g.raw());
}

/// Same checks on raw data that may not even form a GroupTable.
inline VerificationReport verify_table(std::size_t order, std::span<const std::uint16_t> mul) {
  auto rep = detail::check_structure(order, mul, nullptr);
  if (!rep.ok) return rep;
  return detail::check_associativity(order, mul);
}

inline Element multiply(const GroupTable& g, Element x, Element y) {
  g.require(x);
  g.require(y);
  return g.mul(x, y);
}

inline Element inverse(const GroupTable& g, Element x) {
  g.require(x);
  return g.inv(x);
}

/// [x,y] = x^-1 y^-1 x y.
inline Element commutator(const GroupTable& g, Element x, Element y) {
  g.require(x);
  g.require(y);
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

inline std::uint64_t element_order(const GroupTable& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

/// A closed subset of a parent table, kept sorted, with generator witnesses.
class Subgroup {
 public:
  Subgroup(GroupTable parent, std::vector<Element> members, std::vector<Element> generators)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        generators_(std::move(generators)),
        mask_(parent_.order(), 0) {
    std::sort(members_.begin(), members_.end());
    for (Element m : members_) mask_[m] = 1;
  }

  const GroupTable& parent() const noexcept { return parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return x < mask_.size() && mask_[x]; }

  bool is_subset_of(const Subgroup& o) const {
    return std::all_of(members_.begin(), members_.end(), [&](Element x) { return o.contains(x); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupTable parent_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
  std::vector<char> mask_;
};

/// Smallest subgroup containing `seed`. The seed is kept as the generator list.
inline Subgroup subgroup_closure(const GroupTable& g, std::span<const Element> seed) {
  for (Element s : seed) g.require(s);
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{kIdentity}, effective;
  in[0] = 1;
  for (Element s : seed) {
    if (in[s]) continue;
    effective.push_back(s);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element e : effective) {
        Element y = g.mul(members[i], e);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
  }
  return Subgroup(g, std::move(members), std::vector<Element>(seed.begin(), seed.end()));
}

inline Subgroup subgroup_closure(const GroupTable& g, std::initializer_list<Element> seed) {
  return subgroup_closure(g, std::span<const Element>(seed.begin(), seed.size()));
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup(g, {kIdentity}, {}); }
inline Subgroup whole_group(const GroupTable& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all), {g.generators().begin(), g.generators().end()});
}

/// Wraps a known-closed member set, choosing a small generating witness.
inline Subgroup subgroup_from_members(const GroupTable& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  std::vector<char> in(g.order(), 0);
  std::vector<Element> span{kIdentity}, gens;
  in[0] = 1;
  for (Element m : members) {
    if (in[m]) continue;
    gens.push_back(m);
    for (std::size_t i = 0; i < span.size(); ++i)
      for (Element e : gens) {
        Element y = g.mul(span[i], e);
        if (!in[y]) {
          in[y] = 1;
          span.push_back(y);
        }
      }
  }
  if (span.size() != members.size())
    throw InvariantError("member set of size " + std::to_string(members.size()) +
                         " is not closed (spans " + std::to_string(span.size()) + ")");
  return Subgroup(g, std::move(members), std::move(gens));
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  for (Element x : a.members())
    if (b.contains(x)) out.push_back(x);
  return subgroup_from_members(a.parent(), std::move(out));
}

/// Subgroup generated by the union of two subgroups.
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> seed(a.generators().begin(), a.generators().end());
  seed.insert(seed.end(), b.generators().begin(), b.generators().end());
  auto s = subgroup_closure(a.parent(), seed);
  return subgroup_from_members(a.parent(), {s.members().begin(), s.members().end()});
}

/// A map between two tables. Holds the table of images; checks are explicit.
struct Morphism {
  GroupTable domain;
  GroupTable codomain;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }

  bool is_homomorphism() const {
    if (map.size() != domain.order() || map[kIdentity] != kIdentity) return false;
    for (Element m : map)
      if (m >= codomain.order()) return false;
    for (Element a = 0; a < domain.order(); ++a)
      for (Element b = 0; b < domain.order(); ++b)
        if (map[domain.mul(a, b)] != codomain.mul(map[a], map[b])) return false;
    return true;
  }

  bool is_bijective() const {
    if (domain.order() != codomain.order()) return false;
    std::vector<char> hit(codomain.order(), 0);
    for (Element m : map) {
      if (m >= codomain.order() || hit[m]) return false;
      hit[m] = 1;
    }
    return true;
  }

  bool is_surjective() const {
    std::vector<char> hit(codomain.order(), 0);
    std::size_t count = 0;
    for (Element m : map)
      if (m < codomain.order() && !hit[m]) {
        hit[m] = 1;
        ++count;
      }
    return count == codomain.order();
  }

  Morphism inverse() const {
    std::vector<Element> back(map.size(), kNoElement);
    for (Element x = 0; x < map.size(); ++x) back[map[x]] = x;
    return {codomain, domain, std::move(back)};
  }

  static Morphism identity(const GroupTable& g) {
    std::vector<Element> m(g.order());
    std::iota(m.begin(), m.end(), Element{0});
    return {g, g, std::move(m)};
  }
};

/// second ∘ first. The tables at the seam must agree.
inline Morphism compose(const Morphism& second, const Morphism& first) {
  if (!(first.codomain == second.domain))
    throw InputError("cannot compose morphisms: codomain and domain differ");
  std::vector<Element> m(first.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = second.map[first.map[x]];
  return {first.domain, second.codomain, std::move(m)};
}

/// G/N with minimal-index coset representatives.
struct Quotient {
  GroupTable parent;
  Subgroup kernel;
  std::vector<Element> coset_reps;
  GroupTable table;
  Morphism projection;

  Element coset_of(Element x) const { return projection.map[x]; }
  Element rep(Element coset) const { return coset_reps[coset]; }
};

inline bool is_normal(const GroupTable& g, const Subgroup& n,
                      std::pair<Element, Element>* witness = nullptr) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : n.members()) {
      if (!n.contains(g.mul(g.mul(x, m), g.inv(x)))) {
        if (witness) *witness = {x, m};
        return false;
      }
    }
  return true;
}

inline Quotient quotient(const GroupTable& g, const Subgroup& n) {
  if (!(n.parent() == g)) throw InputError("subgroup does not belong to this group");
  std::pair<Element, Element> bad;
  if (!is_normal(g, n, &bad))
    throw NormalityError(bad.first, bad.second,
                         "subgroup is not normal: g = " + std::to_string(bad.first) +
                             " conjugates n = " + std::to_string(bad.second) + " outside it");
  const std::size_t order = g.order();
  std::vector<Element> coset(order, kNoElement), reps;
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != kNoElement) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n.members()) coset[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<std::uint16_t> mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      mul[i * q + j] = static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);
  std::vector<Element> gens;
  for (Element x : g.generators()) {
    Element c = coset[x];
    if (c != kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  auto table = GroupTable::from_table(q, std::move(mul), std::move(gens));
  Morphism proj{g, table, std::move(coset)};
  return {g, n, std::move(reps), table, std::move(proj)};
}

/// Preimage in the parent of a subgroup of the quotient table.
inline Subgroup preimage(const Quotient& q, const Subgroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < q.parent.order(); ++x)
    if (s.contains(q.coset_of(x))) out.push_back(x);
  return subgroup_from_members(q.parent, std::move(out));
}

/// Image of a parent subgroup in the quotient table.
inline Subgroup image(const Quotient& q, const Subgroup& s) {
  std::vector<char> seen(q.table.order(), 0);
  std::vector<Element> out;
  for (Element x : s.members()) {
    Element c = q.coset_of(x);
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  }
  return subgroup_from_members(q.table, std::move(out));
}

/// A subgroup re-indexed as a standalone table (members in sorted order).
struct InducedTable {
  GroupTable table;
  std::vector<Element> to_parent;
  std::vector<Element> from_parent;  // kNoElement outside the subgroup
};

inline InducedTable induced_table(const Subgroup& s) {
  const auto& g = s.parent();
  const std::size_t k = s.order();
  std::vector<Element> to(s.members().begin(), s.members().end());
  std::vector<Element> from(g.order(), kNoElement);
  for (Element i = 0; i < k; ++i) from[to[i]] = i;
  std::vector<std::uint16_t> mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Element p = from[g.mul(to[i], to[j])];
      if (p == kNoElement) throw InvariantError("subgroup member set is not closed");
      mul[i * k + j] = static_cast<std::uint16_t>(p);
    }
  std::vector<Element> gens;
  for (Element x : s.generators())
    if (from[x] != kIdentity && std::find(gens.begin(), gens.end(), from[x]) == gens.end())
      gens.push_back(from[x]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Element x : to) labels.push_back(g.label(x));
  auto t = GroupTable::from_table(k, std::move(mul), std::move(gens), std::move(labels));
  return {t, std::move(to), std::move(from)};
}

/// Elements (a,b) are encoded as a*|H| + b.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 std::size_t cap = kDefaultOrderCap) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > cap || n > kMaxRepresentableOrder)
    throw SizeError("direct product of order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mul[x * n + y] = static_cast<std::uint16_t>(
          g.mul(static_cast<Element>(x / nh), static_cast<Element>(y / nh)) * nh +
          h.mul(static_cast<Element>(x % nh), static_cast<Element>(y % nh)));
  std::vector<Element> gens;
  for (Element a : g.generators()) gens.push_back(static_cast<Element>(a * nh));
  for (Element b : h.generators()) gens.push_back(b);
  std::vector<std::string> labels;
  if (!g.labels().empty() || !h.labels().empty())
    for (std::size_t x = 0; x < n; ++x)
      labels.push_back("(" + g.label(static_cast<Element>(x / nh)) + "," +
                       h.label(static_cast<Element>(x % nh)) + ")");
  return GroupTable::from_table(n, std::move(mul), std::move(gens), std::move(labels));
}

/// Permutation in image form from disjoint cycles, e.g. {{0,1,2,3}}.
inline Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Element>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InputError("cycle point out of range");
      p[c[i]] = c[(i + 1) % c.size()];
    }
  return p;
}

/// Breadth-first closure of a permutation group into a Cayley table.
///
/// Products compose left to right: (x*y)(i) = y(x(i)). Element j > 0 is
/// reached in the BFS tree as parent(j) * gen(j); every row of the table is
/// filled by following that tree, so no permutation hashing happens after
/// the closure itself.
inline GroupTable close_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                     std::size_t cap = kDefaultOrderCap) {
  for (const auto& p : gens) {
    if (p.size() != degree) throw InputError("permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (Element x : p) {
      if (x >= degree || hit[x]) throw InputError("permutation is not a bijection");
      hit[x] = 1;
    }
  }
  const std::size_t limit = std::min(cap, kMaxRepresentableOrder);
  Permutation id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Element> tree_parent{kNoElement}, tree_gen{kNoElement};
  std::vector<std::vector<Element>> right;  // right[e][i] = e * gens[i]
  for (std::size_t e = 0; e < elems.size(); ++e) {
    right.emplace_back(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation prod(degree);
      for (std::size_t x = 0; x < degree; ++x) prod[x] = gens[i][elems[e][x]];
      auto [it, fresh] = index.emplace(prod, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() + 1 > limit)
          throw SizeError("permutation group order exceeds cap " + std::to_string(limit));
        elems.push_back(std::move(prod));
        tree_parent.push_back(static_cast<Element>(e));
        tree_gen.push_back(static_cast<Element>(i));
      }
      right[e][i] = it->second;
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = static_cast<std::uint16_t>(a);
    for (std::size_t j = 1; j < n; ++j)
      mul[a * n + j] = static_cast<std::uint16_t>(right[mul[a * n + tree_parent[j]]][tree_gen[j]]);
  }
  std::vector<Element> gen_idx;
  for (const auto& p : gens) {
    Element g = index.at(p);
    if (g != kIdentity && std::find(gen_idx.begin(), gen_idx.end(), g) == gen_idx.end())
      gen_idx.push_back(g);
  }
  return GroupTable::from_table(n, std::move(mul), std::move(gen_idx));
}

}  // namespace cayley
