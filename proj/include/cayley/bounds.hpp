#pragma once

// Executable versions of the inequalities relating |G/Z(G)|, |G/Z_2(G)| and
// the derived subgroup. Each check returns a BoundReport that carries every
// ingredient needed to recompute its verdict.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayley/catalog.hpp"
#include "cayley/invariants.hpp"
#include "cayley/kernel.hpp"

namespace cayley {

enum class TheoremId {
  SchurWitness,
  Neumann,
  PodoskiSzegedy,
  TheoremB,
  Proposition2,
  Lemma1,
  ClassBreadth,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::SchurWitness, TheoremId::Neumann,      TheoremId::PodoskiSzegedy,
    TheoremId::TheoremB,     TheoremId::Proposition2, TheoremId::Lemma1,
    TheoremId::ClassBreadth,
};

inline std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::SchurWitness: return "SCHUR_WITNESS";
    case TheoremId::Neumann: return "NEUMANN";
    case TheoremId::PodoskiSzegedy: return "PODOSKI_SZEGEDY";
    case TheoremId::TheoremB: return "THEOREM_B";
    case TheoremId::Proposition2: return "PROPOSITION_2";
    case TheoremId::Lemma1: return "LEMMA_1";
    case TheoremId::ClassBreadth: return "CLASS_BREADTH";
  }
  return "?";
}

inline std::optional<TheoremId> theorem_from_string(std::string_view s) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

struct Hypothesis {
  std::string name;
  bool satisfied = true;
  std::string witness;
};

using Ingredient = std::variant<std::uint64_t, double, std::string, std::vector<std::uint64_t>>;

/// One verdict. `rhs_log2` is absent for qualitative reports, which always
/// hold. When `rhs_exact` is present the verdict is the exact integer
/// comparison; when `rhs_exceeds_u64` is set the right-hand side is an
/// integer known to be at least 2^64.
struct BoundReport {
  TheoremId theorem = TheoremId::SchurWitness;
  std::uint64_t lhs = 1;
  std::optional<double> rhs_log2;
  std::optional<std::uint64_t> rhs_exact;
  bool rhs_exceeds_u64 = false;
  bool holds = true;
  std::vector<Hypothesis> hypotheses;
  std::map<std::string, Ingredient> ingredients;

  bool tight() const { return rhs_exact && lhs == *rhs_exact; }
};

inline constexpr double kDefaultTolerance = 1e-9;

struct CheckOptions {
  double tolerance = kDefaultTolerance;
};

/// Recomputes `holds` from the numeric fields alone.
inline bool decide(const BoundReport& r, double tolerance = kDefaultTolerance) {
  if (r.rhs_exact) return r.lhs <= *r.rhs_exact;
  if (r.rhs_exceeds_u64) return true;
  if (!r.rhs_log2) return true;
  return std::log2(static_cast<double>(r.lhs)) <= *r.rhs_log2 + tolerance;
}

namespace detail {

inline std::optional<std::uint64_t> checked_mul(std::optional<std::uint64_t> a, std::uint64_t b) {
  std::uint64_t out;
  if (!a || __builtin_mul_overflow(*a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<unsigned> exact_log2(std::uint64_t n) {
  if (n == 0 || (n & (n - 1))) return std::nullopt;
  unsigned a = 0;
  while ((std::uint64_t{1} << a) != n) ++a;
  return a;
}

inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::vector<std::uint64_t> widen(std::span<const Element> v) {
  return {v.begin(), v.end()};
}

// n^(2 log2 n) as an exact integer when n is a power of two.
struct PowerTerm {
  double log2 = 0;
  std::optional<std::uint64_t> exact;
  bool exact_exceeds_u64 = false;
};

inline PowerTerm ps_term(std::uint64_t n) {
  PowerTerm t;
  const double l = std::log2(static_cast<double>(n));
  t.log2 = 2 * l * l;
  if (auto a = exact_log2(n)) {
    const std::uint64_t e = 2ull * *a * *a;
    if (e < 64)
      t.exact = std::uint64_t{1} << e;
    else
      t.exact_exceeds_u64 = true;
  }
  return t;
}

}  // namespace detail

/// The shared invariants every check consumes, computed once per group.
struct GroupAnalysis {
  GroupTable group;
  CentralSeries series;
  CommutatorData commutators;
  Quotient central_quotient;  // G/Z(G)

  const Subgroup& center() const { return series.center(); }
  const Subgroup& second_center() const { return series.second_center(); }
  const Subgroup& gamma2() const { return commutators.gamma2; }
};

inline GroupAnalysis analyze(const GroupTable& g) {
  auto series = upper_central_series(g);
  auto comm = commutator_data(g);
  auto q = quotient(g, series.center());
  return {g, std::move(series), std::move(comm), std::move(q)};
}

inline BoundReport schur_witness(const GroupAnalysis& a) {
  BoundReport r;
  r.theorem = TheoremId::SchurWitness;
  r.lhs = a.central_quotient.table.order();
  r.ingredients["central_quotient_order"] = std::uint64_t{r.lhs};
  r.ingredients["gamma2_order"] = std::uint64_t{a.gamma2().order()};
  r.hypotheses.push_back({"G/Z(G) finite", true, std::to_string(r.lhs)});
  r.hypotheses.push_back({"gamma2(G) finite", true, std::to_string(a.gamma2().order())});
  r.holds = true;
  return r;
}

/// |G/Z(G)| <= |gamma2(G)|^k for a generating set of size k.
inline BoundReport neumann_check(const GroupAnalysis& a,
                                 std::optional<std::vector<Element>> gens = std::nullopt,
                                 const CheckOptions& opt = {}) {
  const auto& g = a.group;
  std::vector<Element> used = gens ? *gens : std::vector<Element>(g.generators().begin(), g.generators().end());
  auto span = subgroup_closure(g, used);
  if (span.order() != g.order())
    throw HypothesisError("supplied elements generate a subgroup of order " +
                          std::to_string(span.order()) + ", not all of G (order " +
                          std::to_string(g.order()) + ")");
  const std::uint64_t gamma = a.gamma2().order(), k = used.size();
  BoundReport r;
  r.theorem = TheoremId::Neumann;
  r.lhs = a.central_quotient.table.order();
  std::optional<std::uint64_t> rhs = 1;
  for (std::uint64_t i = 0; i < k; ++i) rhs = detail::checked_mul(rhs, gamma);
  r.rhs_exact = rhs;
  r.rhs_exceeds_u64 = !rhs;
  r.rhs_log2 = static_cast<double>(k) * std::log2(static_cast<double>(gamma));
  r.hypotheses.push_back({"generators generate G", true, "k=" + std::to_string(k)});
  r.ingredients["k"] = k;
  r.ingredients["gamma2_order"] = gamma;
  r.ingredients["generators"] = detail::widen(used);
  r.holds = decide(r, opt.tolerance);
  return r;
}

/// |G/Z_2(G)| <= n^(2 log2 n), n = |gamma2 / (gamma2 ∩ Z)|.
inline BoundReport podoski_szegedy_check(const GroupAnalysis& a, const CheckOptions& opt = {}) {
  const auto meet = intersect(a.gamma2(), a.center());
  const std::uint64_t n = a.gamma2().order() / meet.order();
  BoundReport r;
  r.theorem = TheoremId::PodoskiSzegedy;
  r.lhs = a.group.order() / a.second_center().order();
  auto term = detail::ps_term(n);
  r.rhs_log2 = term.log2;
  r.rhs_exact = term.exact;
  r.rhs_exceeds_u64 = term.exact_exceeds_u64;
  r.ingredients["n"] = n;
  r.ingredients["c"] = std::uint64_t{2};
  r.ingredients["gamma2_order"] = std::uint64_t{a.gamma2().order()};
  r.ingredients["gamma2_meet_center_order"] = std::uint64_t{meet.order()};
  r.ingredients["second_center_order"] = std::uint64_t{a.second_center().order()};
  r.holds = decide(r, opt.tolerance);
  return r;
}

/// For x in Z_2(G): the order of xZ in G/Z equals exp([x,G]).
inline Hypothesis second_center_orders(const GroupAnalysis& a) {
  for (Element x : a.second_center().members()) {
    auto cs = commutator_set_subgroup(a.group, x, a.center());
    const auto e = exponent(a.group, cs);
    const auto o = element_order(a.central_quotient.table, a.central_quotient.coset_of(x));
    if (e != o)
      return {"ord(xZ) = exp([x,G]) on Z2", false,
              "x=" + std::to_string(x) + " ord=" + std::to_string(o) + " exp=" + std::to_string(e)};
  }
  return {"ord(xZ) = exp([x,G]) on Z2", true, std::to_string(a.second_center().order()) + " elements"};
}

/// |G/Z| <= n^(2 log2 n) * prod exp([x_i, G]) with n = |gamma2 Z / Z| and
/// x_i Z generating Z_2/Z.
///
/// Without `z2_generators` the x_i are an invariant-factor basis of Z_2/Z,
/// which makes t minimal. The intermediate steps of the argument are
/// recorded as hypotheses (a)..(e); any failure raises InvariantError.
inline BoundReport theorem_b_check(const GroupAnalysis& a,
                                   std::optional<std::vector<Element>> z2_generators = std::nullopt,
                                   const CheckOptions& opt = {}) {
  const auto& g = a.group;
  const auto& z = a.center();
  const auto& z2 = a.second_center();
  const auto& q = a.central_quotient;

  const auto gz = join(a.gamma2(), z);
  const std::uint64_t n = gz.order() / z.order();

  std::vector<Element> basis;
  std::string mode;
  if (z2_generators) {
    mode = "caller-supplied";
    basis = *z2_generators;
    for (Element x : basis) {
      g.require(x);
      if (!z2.contains(x))
        throw HypothesisError("element " + std::to_string(x) + " is not in Z2(G)");
    }
    std::vector<Element> cosets;
    for (Element x : basis) cosets.push_back(q.coset_of(x));
    if (subgroup_closure(q.table, cosets).order() != z2.order() / z.order())
      throw HypothesisError("supplied cosets do not generate Z2(G)/Z(G)");
  } else {
    mode = "invariant-factor";
    auto induced = induced_table(z2);
    std::vector<Element> z_in;
    for (Element x : z.members()) z_in.push_back(induced.from_parent[x]);
    auto ab = abelian_basis(quotient(induced.table, subgroup_from_members(induced.table, z_in)));
    for (Element x : ab.basis) basis.push_back(induced.to_parent[x]);
  }

  BoundReport r;
  r.theorem = TheoremId::TheoremB;
  r.lhs = q.table.order();
  std::vector<std::uint64_t> exps, coset_orders;
  std::optional<std::uint64_t> prod = 1;
  double prod_log2 = 0;
  auto step = [&](std::string name, bool ok, std::string witness) {
    r.hypotheses.push_back({name, ok, witness});
    if (!ok) throw InvariantError("Theorem B step failed: " + name + " (" + witness + ")");
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Element x = basis[i];
    const auto tag = "x" + std::to_string(i + 1) + "=" + std::to_string(x);
    auto set = commutator_set(g, x);
    bool central = std::all_of(set.begin(), set.end(), [&](Element c) { return z.contains(c); });
    step("(a) [x_i,G] in Z(G)", central, tag);
    std::optional<Subgroup> sub;
    try {
      sub = commutator_set_subgroup(g, x, z);
    } catch (const Error& e) {
      step("(b) [x_i,G] is a subgroup", false, tag + ": " + e.what());
    }
    step("(b) [x_i,G] is a subgroup", true, tag + " |[x_i,G]|=" + std::to_string(sub->order()));
    const auto ni = exponent(g, *sub);
    const auto ord = element_order(q.table, q.coset_of(x));
    step("(c) ord(x_i Z) = exp([x_i,G])", ord == ni,
         tag + " ord=" + std::to_string(ord) + " n_i=" + std::to_string(ni));
    exps.push_back(ni);
    coset_orders.push_back(ord);
    prod = detail::checked_mul(prod, ni);
    prod_log2 += std::log2(static_cast<double>(ni));
  }
  const std::uint64_t z2z = z2.order() / z.order();
  step("(d) |Z2/Z| <= prod n_i", !prod || z2z <= *prod,
       std::to_string(z2z) + " <= " + (prod ? std::to_string(*prod) : std::string(">2^64")));
  const std::uint64_t gz2 = g.order() / z2.order();
  step("(e) |G/Z| = |G/Z2| |Z2/Z|", r.lhs == gz2 * z2z,
       std::to_string(r.lhs) + " = " + std::to_string(gz2) + " * " + std::to_string(z2z));

  auto term = detail::ps_term(n);
  r.rhs_log2 = term.log2 + prod_log2;
  if (term.exact && prod) {
    r.rhs_exact = detail::checked_mul(term.exact, *prod);
    r.rhs_exceeds_u64 = !r.rhs_exact;
  } else if (term.exact_exceeds_u64 || (term.exact && !prod)) {
    r.rhs_exceeds_u64 = true;
  }
  r.ingredients["n"] = n;
  r.ingredients["t"] = std::uint64_t{basis.size()};
  r.ingredients["basis"] = detail::widen(basis);
  r.ingredients["basis_mode"] = mode;
  r.ingredients["n_i"] = exps;
  r.ingredients["coset_orders"] = coset_orders;
  r.ingredients["center_order"] = std::uint64_t{z.order()};
  r.ingredients["second_center_order"] = std::uint64_t{z2.order()};
  r.holds = decide(r, opt.tolerance);
  return r;
}

/// |G/Z| <= prod |[x_i,G]| for x_i Z generating G/Z.
inline BoundReport proposition2_check(const GroupAnalysis& a,
                                      std::optional<std::vector<Element>> coset_generators = std::nullopt,
                                      const CheckOptions& opt = {}) {
  const auto& g = a.group;
  const auto& q = a.central_quotient;
  std::vector<Element> reps = coset_generators ? *coset_generators : generating_cosets(q);
  std::vector<Element> cosets;
  for (Element x : reps) {
    g.require(x);
    cosets.push_back(q.coset_of(x));
  }
  if (subgroup_closure(q.table, cosets).order() != q.table.order())
    throw HypothesisError("supplied cosets do not generate G/Z(G)");
  BoundReport r;
  r.theorem = TheoremId::Proposition2;
  r.lhs = q.table.order();
  std::vector<std::uint64_t> sizes;
  std::optional<std::uint64_t> prod = 1;
  double log2 = 0;
  for (Element x : reps) {
    const auto s = a.commutators.commutator_sets[x].size();
    sizes.push_back(s);
    prod = detail::checked_mul(prod, s);
    log2 += std::log2(static_cast<double>(s));
  }
  r.rhs_exact = prod;
  r.rhs_exceeds_u64 = !prod;
  r.rhs_log2 = log2;
  r.hypotheses.push_back({"cosets generate G/Z(G)", true, "t=" + std::to_string(reps.size())});
  r.ingredients["t"] = std::uint64_t{reps.size()};
  r.ingredients["coset_generators"] = detail::widen(reps);
  r.ingredients["commutator_set_sizes"] = sizes;
  r.holds = decide(r, opt.tolerance);
  return r;
}

/// |G : C_G(H)| <= prod |[h_i,G]| with H = <h_1..h_t, Z(G)>.
inline BoundReport lemma1_check(const GroupAnalysis& a, const std::vector<Element>& h_gens,
                                const CheckOptions& opt = {}) {
  const auto& g = a.group;
  for (Element h : h_gens) g.require(h);
  std::vector<Element> seed = h_gens;
  for (Element z : a.center().members()) seed.push_back(z);
  auto h = subgroup_closure(g, seed);
  auto c = centralizer_of_subgroup(g, h);

  BoundReport r;
  r.theorem = TheoremId::Lemma1;
  r.lhs = g.order() / c.order();
  std::vector<std::uint64_t> sizes, indices;
  std::optional<std::uint64_t> prod = 1, index_prod = 1;
  double log2 = 0;
  bool chain = true;
  std::string bad;
  for (Element x : h_gens) {
    const std::uint64_t idx = g.order() / centralizer(g, x).order();
    const std::uint64_t cls = a.commutators.class_size(x);
    const std::uint64_t set = a.commutators.commutator_sets[x].size();
    if (idx != cls || cls != set) {
      chain = false;
      bad = "h=" + std::to_string(x);
    }
    sizes.push_back(set);
    indices.push_back(idx);
    prod = detail::checked_mul(prod, set);
    index_prod = detail::checked_mul(index_prod, idx);
    log2 += std::log2(static_cast<double>(set));
  }
  const bool poincare = !index_prod || r.lhs <= *index_prod;
  r.hypotheses.push_back({"|G:C_G(H)| <= prod |G:C_G(h_i)|", poincare,
                          std::to_string(r.lhs) + " <= " +
                              (index_prod ? std::to_string(*index_prod) : std::string(">2^64"))});
  r.hypotheses.push_back({"|G:C_G(h_i)| = |h_i^G| = |[h_i,G]|", chain, chain ? "all" : bad});
  if (!poincare || !chain) throw InvariantError("Lemma 1 chain failed");
  r.rhs_exact = prod;
  r.rhs_exceeds_u64 = !prod;
  r.rhs_log2 = log2;
  r.ingredients["t"] = std::uint64_t{h_gens.size()};
  r.ingredients["h_generators"] = std::vector<std::uint64_t>(h_gens.begin(), h_gens.end());
  r.ingredients["H_order"] = std::uint64_t{h.order()};
  r.ingredients["centralizer_order"] = std::uint64_t{c.order()};
  r.ingredients["commutator_set_sizes"] = sizes;
  r.ingredients["centralizer_indices"] = indices;
  r.holds = decide(r, opt.tolerance);
  return r;
}

/// Maximum class length alongside |gamma2|. Qualitative.
inline BoundReport bfc_report(const GroupAnalysis& a) {
  BoundReport r;
  r.theorem = TheoremId::ClassBreadth;
  r.lhs = a.commutators.breadth;
  r.ingredients["breadth"] = std::uint64_t{a.commutators.breadth};
  r.ingredients["gamma2_order"] = std::uint64_t{a.gamma2().order()};
  std::vector<std::uint64_t> sizes;
  for (const auto& c : a.commutators.classes.classes) sizes.push_back(c.size());
  r.ingredients["class_sizes"] = sizes;
  r.holds = true;
  return r;
}

inline BoundReport run_check(TheoremId id, const GroupAnalysis& a, const CheckOptions& opt = {}) {
  switch (id) {
    case TheoremId::SchurWitness: return schur_witness(a);
    case TheoremId::Neumann: return neumann_check(a, std::nullopt, opt);
    case TheoremId::PodoskiSzegedy: return podoski_szegedy_check(a, opt);
    case TheoremId::TheoremB: return theorem_b_check(a, std::nullopt, opt);
    case TheoremId::Proposition2: return proposition2_check(a, std::nullopt, opt);
    case TheoremId::Lemma1:
      return lemma1_check(a, {a.group.generators().begin(), a.group.generators().end()}, opt);
    case TheoremId::ClassBreadth: return bfc_report(a);
  }
  throw InputError("unknown theorem id");
}

/// One line of a survey table.
struct SurveyRow {
  std::string descriptor;
  std::uint64_t order = 1;
  std::uint64_t center = 1;
  std::uint64_t second_center = 1;
  std::uint64_t central_quotient = 1;
  std::uint64_t gamma2 = 1;
  std::uint64_t commutators = 1;  // |K(G)|
  std::uint64_t breadth = 1;
  std::optional<std::uint64_t> nilpotency_class;
  std::vector<BoundReport> reports;  // kAllTheorems order

  const BoundReport& report(TheoremId id) const {
    for (const auto& r : reports)
      if (r.theorem == id) return r;
    throw InputError("report not present");
  }
  bool all_hold() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
  }
};

inline SurveyRow survey_row(const std::string& descriptor, const GroupTable& g,
                            const CheckOptions& opt = {}) {
  auto a = analyze(g);
  SurveyRow row;
  row.descriptor = descriptor;
  row.order = g.order();
  row.center = a.center().order();
  row.second_center = a.second_center().order();
  row.central_quotient = a.central_quotient.table.order();
  row.gamma2 = a.gamma2().order();
  row.commutators = a.commutators.k.size();
  row.breadth = a.commutators.breadth;
  row.nilpotency_class = a.series.nilpotency_class;
  for (TheoremId id : kAllTheorems) row.reports.push_back(run_check(id, a, opt));
  return row;
}

/// ES(p,m,+) for m = 1..m_max: |gamma2| stays p while |G/Z| = p^(2m) grows.
inline std::vector<SurveyRow> extraspecial_gap_survey(std::size_t p, std::size_t m_max,
                                                      std::size_t cap = kDefaultOrderCap,
                                                      const CheckOptions& opt = {}) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::vector<SurveyRow> rows;
  for (std::size_t m = 1; m <= m_max; ++m) {
    Atom at{Family::Extraspecial, p, m, '+', {}};
    GroupDescriptor d{{at}};
    rows.push_back(survey_row(to_string(d), build(d, cap), opt));
  }
  return rows;
}

}  // namespace cayley
