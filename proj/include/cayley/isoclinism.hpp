#pragma once

// Hall isoclinism between finite groups: the commutator pairing
// G/Z x G/Z -> gamma2(G), an exhaustive search for isoclinisms, the stem
// condition Z(H) <= gamma2(H), and reduction of a group to a stem group in
// its isoclinism class.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/invariants.hpp"
#include "cayley/kernel.hpp"

namespace cayley {

inline constexpr std::size_t kDefaultSearchCap = 64;
inline constexpr std::size_t kDefaultSubgroupEnumerationCap = 4096;

/// a_G(xZ, yZ) = [x, y], tabulated over coset representatives.
struct CommutatorPairing {
  GroupTable parent;
  Quotient quotient;  // G/Z(G)
  Subgroup gamma2;
  std::vector<Element> table;  // row-major |Q| x |Q|, values are elements of G

  std::size_t size() const { return quotient.table.order(); }
  Element operator()(Element a, Element b) const { return table[a * size() + b]; }
};

inline CommutatorPairing commutator_pairing(const GroupTable& g) {
  auto q = quotient(g, center(g));
  auto gamma2 = derived_subgroup(g);
  const std::size_t n = q.table.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = commutator(g, q.rep(a), q.rep(b));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (commutator(g, x, y) != table[q.coset_of(x) * n + q.coset_of(y)])
        throw InvariantError("commutator pairing is not well defined at (" + std::to_string(x) +
                             ", " + std::to_string(y) + ")");
  if (subgroup_closure(g, table).order() != gamma2.order())
    throw InvariantError("commutator pairing image does not generate gamma2");
  return {g, std::move(q), std::move(gamma2), std::move(table)};
}

/// An isoclinism (phi, theta) from G to H.
///
/// phi maps G/Z(G) to H/Z(H); theta maps gamma2(G) to gamma2(H), both as
/// standalone tables. Elements of the derived tables correspond to parent
/// elements through `g_derived.to_parent` / `h_derived.to_parent`.
struct IsoclinismWitness {
  GroupTable g;
  GroupTable h;
  Quotient g_central;
  Quotient h_central;
  InducedTable g_derived;
  InducedTable h_derived;
  Morphism phi;
  Morphism theta;
  bool verified = false;
};

/// Re-checks a witness from the two groups alone: both maps are bijective
/// homomorphisms, the quotients and derived subgroups are the right ones,
/// and theta([x,y]) = [phi(x), phi(y)] for every pair of cosets.
inline bool verify_isoclinism(const IsoclinismWitness& w) {
  if (!(w.g_central.parent == w.g) || !(w.h_central.parent == w.h)) return false;
  if (!(w.g_central.kernel == center(w.g)) || !(w.h_central.kernel == center(w.h))) return false;
  auto dg = derived_subgroup(w.g), dh = derived_subgroup(w.h);
  if (w.g_derived.to_parent != std::vector<Element>(dg.members().begin(), dg.members().end()) ||
      w.h_derived.to_parent != std::vector<Element>(dh.members().begin(), dh.members().end()))
    return false;
  if (!(w.phi.domain == w.g_central.table) || !(w.phi.codomain == w.h_central.table)) return false;
  if (!(w.theta.domain == w.g_derived.table) || !(w.theta.codomain == w.h_derived.table))
    return false;
  if (!w.phi.is_homomorphism() || !w.phi.is_bijective()) return false;
  if (!w.theta.is_homomorphism() || !w.theta.is_bijective()) return false;
  const std::size_t n = w.g_central.table.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element cg = commutator(w.g, w.g_central.rep(a), w.g_central.rep(b));
      const Element ch =
          commutator(w.h, w.h_central.rep(w.phi(a)), w.h_central.rep(w.phi(b)));
      const Element mapped = w.h_derived.to_parent[w.theta(w.g_derived.from_parent[cg])];
      if (mapped != ch) return false;
    }
  return true;
}

inline IsoclinismWitness identity_witness(const GroupTable& g) {
  auto q = quotient(g, center(g));
  auto d = induced_table(derived_subgroup(g));
  IsoclinismWitness w{g, g, q, q, d, d, Morphism::identity(q.table), Morphism::identity(d.table), false};
  w.verified = verify_isoclinism(w);
  return w;
}

inline IsoclinismWitness invert(const IsoclinismWitness& w) {
  IsoclinismWitness r{w.h, w.g, w.h_central, w.g_central, w.h_derived, w.g_derived,
                      w.phi.inverse(), w.theta.inverse(), false};
  r.verified = verify_isoclinism(r);
  return r;
}

/// G -> H -> K from G -> H and H -> K.
inline IsoclinismWitness compose(const IsoclinismWitness& first, const IsoclinismWitness& second) {
  if (!(first.h == second.g)) throw InputError("witnesses do not share a middle group");
  IsoclinismWitness r{first.g, second.h, first.g_central, second.h_central, first.g_derived,
                      second.h_derived, compose(second.phi, first.phi),
                      compose(second.theta, first.theta), false};
  r.verified = verify_isoclinism(r);
  return r;
}

namespace detail {

// Per coset: (order in G/Z, number of distinct pairing values in its row).
inline std::vector<std::pair<std::uint64_t, std::size_t>> coset_signatures(
    const CommutatorPairing& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<std::uint64_t, std::size_t>> sig(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> row(p.table.begin() + a * n, p.table.begin() + (a + 1) * n);
    std::sort(row.begin(), row.end());
    sig[a] = {element_order(p.quotient.table, a),
              static_cast<std::size_t>(std::unique(row.begin(), row.end()) - row.begin())};
  }
  return sig;
}

class IsoclinismSearch {
 public:
  IsoclinismSearch(const CommutatorPairing& pg, const CommutatorPairing& ph)
      : pg_(pg), ph_(ph), qg_(pg.quotient.table), qh_(ph.quotient.table) {
    sig_g_ = coset_signatures(pg_);
    sig_h_ = coset_signatures(ph_);
    gens_ = greedy_generating_set(qg_);
    for (Element x : gens_) {
      std::vector<Element> c;
      for (Element y = 0; y < qh_.order(); ++y)
        if (sig_h_[y] == sig_g_[x]) c.push_back(y);
      candidates_.push_back(std::move(c));
    }
  }

  // Returns (phi map, theta map on G elements -> H elements) on success.
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> run() {
    images_.clear();
    if (search(0)) return std::make_pair(phi_, theta_);
    return std::nullopt;
  }

 private:
  bool search(std::size_t depth) {
    if (!extend_phi() || !check_theta()) return false;
    if (depth == gens_.size()) return complete_theta();
    for (Element y : candidates_[depth]) {
      images_.push_back(y);
      if (search(depth + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  // phi on <gens[0..k)>, required to be a well-defined injective map.
  bool extend_phi() {
    phi_.assign(qg_.order(), kNoElement);
    std::vector<char> used(qh_.order(), 0);
    domain_ = {kIdentity};
    phi_[0] = 0;
    used[0] = 1;
    for (std::size_t i = 0; i < domain_.size(); ++i)
      for (std::size_t k = 0; k < images_.size(); ++k) {
        const Element x = qg_.mul(domain_[i], gens_[k]);
        const Element im = qh_.mul(phi_[domain_[i]], images_[k]);
        if (phi_[x] == kNoElement) {
          if (used[im]) return false;
          used[im] = 1;
          phi_[x] = im;
          domain_.push_back(x);
        } else if (phi_[x] != im) {
          return false;
        }
      }
    for (Element x : domain_)
      if (sig_h_[phi_[x]] != sig_g_[x]) return false;
    return true;
  }

  // The forced theta on pairing values must be well defined and injective.
  bool check_theta() {
    theta_.assign(pg_.parent.order(), kNoElement);
    std::vector<Element> back(ph_.parent.order(), kNoElement);
    for (Element x : domain_)
      for (Element y : domain_) {
        const Element c = pg_(x, y), d = ph_(phi_[x], phi_[y]);
        if (theta_[c] == kNoElement) {
          if (back[d] != kNoElement) return false;
          theta_[c] = d;
          back[d] = c;
        } else if (theta_[c] != d) {
          return false;
        }
      }
    return true;
  }

  // Extends theta from commutators to all of gamma2(G) multiplicatively.
  bool complete_theta() {
    if (domain_.size() != qg_.order()) return false;
    std::vector<Element> k;
    for (Element c = 0; c < theta_.size(); ++c)
      if (theta_[c] != kNoElement) k.push_back(c);
    const auto& g = pg_.parent;
    const auto& h = ph_.parent;
    std::vector<Element> t = theta_;
    std::vector<Element> queue{kIdentity};
    if (t[0] != kIdentity) return false;
    std::vector<char> seen(g.order(), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Element c : k) {
        const Element d = g.mul(queue[i], c);
        const Element im = h.mul(t[queue[i]], t[c]);
        if (t[d] == kNoElement) t[d] = im;
        else if (t[d] != im) return false;
        if (!seen[d]) {
          seen[d] = 1;
          queue.push_back(d);
        }
      }
    if (queue.size() != pg_.gamma2.order()) return false;
    std::vector<char> hit(h.order(), 0);
    for (Element c : queue) {
      if (!ph_.gamma2.contains(t[c]) || hit[t[c]]) return false;
      hit[t[c]] = 1;
    }
    theta_ = std::move(t);
    return true;
  }

  const CommutatorPairing& pg_;
  const CommutatorPairing& ph_;
  const GroupTable& qg_;
  const GroupTable& qh_;
  std::vector<std::pair<std::uint64_t, std::size_t>> sig_g_, sig_h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> domain_;
  std::vector<Element> phi_;
  std::vector<Element> theta_;
};

}  // namespace detail

/// Exhaustive isoclinism test.
///
/// Cheap invariants (quotient order, |gamma2|, the multiset of per-coset
/// order and pairing-row sizes) settle most negative cases without search.
/// Otherwise phi is built by backtracking over images of a generating set
/// of G/Z(G), and theta is the map forced by the commutative diagram. A
/// `nullopt` is only returned once every candidate phi has been tried.
/// Throws FeasibilityError when a search over more than `search_cap`
/// cosets would be needed.
inline std::optional<IsoclinismWitness> are_isoclinic(const GroupTable& g, const GroupTable& h,
                                                      std::size_t search_cap = kDefaultSearchCap) {
  auto pg = commutator_pairing(g);
  auto ph = commutator_pairing(h);
  if (pg.size() != ph.size() || pg.gamma2.order() != ph.gamma2.order()) return std::nullopt;
  auto sg = detail::coset_signatures(pg), sh = detail::coset_signatures(ph);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  if (pg.size() > search_cap)
    throw FeasibilityError("isoclinism search over " + std::to_string(pg.size()) +
                           " cosets exceeds search cap " + std::to_string(search_cap));

  detail::IsoclinismSearch search(pg, ph);
  auto found = search.run();
  if (!found) return std::nullopt;

  auto dg = induced_table(pg.gamma2);
  auto dh = induced_table(ph.gamma2);
  std::vector<Element> theta(dg.table.order());
  for (Element i = 0; i < theta.size(); ++i)
    theta[i] = dh.from_parent[found->second[dg.to_parent[i]]];
  IsoclinismWitness w{g,
                      h,
                      pg.quotient,
                      ph.quotient,
                      dg,
                      dh,
                      Morphism{pg.quotient.table, ph.quotient.table, std::move(found->first)},
                      Morphism{dg.table, dh.table, std::move(theta)},
                      false};
  w.verified = verify_isoclinism(w);
  if (!w.verified) throw InvariantError("isoclinism search produced an unverifiable witness");
  return w;
}

/// Z(G) <= gamma2(G).
inline bool is_stem(const GroupTable& g) { return center(g).is_subset_of(derived_subgroup(g)); }

/// Subgroups A <= Z(G) with A ∩ gamma2(G) = 1, as sorted member sets.
inline std::vector<std::vector<Element>> central_complements(const GroupTable& g,
                                                             std::size_t enumeration_cap =
                                                                 kDefaultSubgroupEnumerationCap) {
  const auto z = center(g);
  const auto d = derived_subgroup(g);
  auto meets_trivially = [&](const Subgroup& a) {
    return std::none_of(a.members().begin() + 1, a.members().end(),
                        [&](Element x) { return d.contains(x); });
  };
  std::vector<Subgroup> cyclic;
  std::set<std::vector<Element>> seen;
  for (Element x : z.members()) {
    if (x == kIdentity) continue;
    auto c = subgroup_closure(g, {x});
    std::vector<Element> key(c.members().begin(), c.members().end());
    if (meets_trivially(c) && seen.insert(key).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      auto j = subgroup_closure(g, [&] {
        std::vector<Element> s(all[i].members().begin(), all[i].members().end());
        s.push_back(c.generators()[0]);
        return s;
      }());
      std::vector<Element> key(j.members().begin(), j.members().end());
      if (meets_trivially(j) && seen.insert(key).second) {
        all.push_back(j);
        if (all.size() > enumeration_cap)
          throw FeasibilityError("more than " + std::to_string(enumeration_cap) +
                                 " central subgroups to enumerate");
      }
    }
  std::vector<std::vector<Element>> out;
  for (const auto& a : all) out.emplace_back(a.members().begin(), a.members().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

struct StemReduction {
  GroupTable input;
  std::vector<Quotient> steps;  // each step quotients the previous result
  GroupTable result;
  IsoclinismWitness witness;  // input -> result
  bool stem_reached = false;
};

/// Repeatedly quotients by the largest central A with A ∩ gamma2 = 1
/// (ties to the lexicographically smallest member set) until the group is
/// stem or no such A remains. A stem input comes back as G/1 with the
/// identity witness.
inline StemReduction stem_reduce(const GroupTable& g, std::size_t search_cap = kDefaultSearchCap) {
  StemReduction out{g, {}, g, identity_witness(g), false};
  GroupTable current = g;
  while (!is_stem(current)) {
    auto candidates = central_complements(current);
    if (candidates.empty()) break;
    auto a = subgroup_from_members(current, candidates.front());
    auto q = quotient(current, a);
    auto w = are_isoclinic(current, q.table, search_cap);
    if (!w) throw InvariantError("quotient by a central subgroup meeting gamma2 trivially is not isoclinic");
    out.witness = compose(out.witness, *w);
    out.steps.push_back(q);
    current = q.table;
  }
  if (out.steps.empty()) out.steps.push_back(quotient(g, trivial_subgroup(g)));
  out.result = out.steps.back().table;
  out.stem_reached = is_stem(out.result);
  if (!out.witness.verified) throw InvariantError("stem reduction witness chain failed to verify");
  return out;
}

}  // namespace cayley
