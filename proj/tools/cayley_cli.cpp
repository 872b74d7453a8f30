// cayley: analyze finite groups, check the central-quotient bounds, test
// isoclinism, reduce to stem groups and run surveys.
//
// Exit codes: 0 success, 1 a bound failed to hold, 2 input error,
// 3 an order or search cap was hit.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/cayley.hpp"

namespace {

using namespace cayley;

enum class Format { Human, Json, Csv };

struct RunConfig {
  Format format = Format::Human;
  std::size_t order_cap = kDefaultOrderCap;
  bool order_cap_given = false;
  std::size_t search_cap = kDefaultSearchCap;
  double tolerance = kDefaultTolerance;
};

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string series_string(const CentralSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += " <= ";
    out += std::to_string(s.terms[i].order());
  }
  return out;
}

int cmd_analyze(const RunConfig& cfg, const std::string& desc) {
  auto g = build(desc, cfg.order_cap);
  auto a = analyze(g);
  const auto exp = exponent(g);
  const std::string cls =
      a.series.nilpotency_class ? std::to_string(*a.series.nilpotency_class) : "not nilpotent";
  switch (cfg.format) {
    case Format::Json: {
      Json j;
      j["schemaVersion"] = kSchemaVersion;
      j["descriptor"] = desc;
      j["order"] = g.order();
      j["center"] = a.center().order();
      j["secondCenter"] = a.second_center().order();
      auto terms = Json::array();
      for (const auto& t : a.series.terms) terms.push_back(t.order());
      j["upperCentralSeries"] = std::move(terms);
      j["nilpotencyClass"] = a.series.nilpotency_class ? Json(*a.series.nilpotency_class) : Json(nullptr);
      j["gamma2"] = a.gamma2().order();
      j["commutators"] = a.commutators.k.size();
      j["kEqualsGamma2"] = a.commutators.k_equals_gamma2;
      j["breadth"] = a.commutators.breadth;
      j["exponent"] = exp;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "descriptor,order,center,second_center,series_length,class,gamma2,commutators,"
                   "k_equals_gamma2,breadth,exponent\n";
      std::cout << desc << ',' << g.order() << ',' << a.center().order() << ','
                << a.second_center().order() << ',' << a.series.terms.size() << ','
                << (a.series.nilpotency_class ? std::to_string(*a.series.nilpotency_class) : "-")
                << ',' << a.gamma2().order() << ',' << a.commutators.k.size() << ','
                << (a.commutators.k_equals_gamma2 ? 1 : 0) << ',' << a.commutators.breadth << ','
                << exp << '\n';
      break;
    case Format::Human:
      std::cout << "group            " << desc << '\n'
                << "order            " << g.order() << '\n'
                << "|Z|              " << a.center().order() << '\n'
                << "|Z2|             " << a.second_center().order() << '\n'
                << "upper central    " << series_string(a.series) << '\n'
                << "class            " << cls << '\n'
                << "|gamma2|         " << a.gamma2().order() << '\n'
                << "|K|              " << a.commutators.k.size() << '\n'
                << "K = gamma2       " << yes_no(a.commutators.k_equals_gamma2) << '\n'
                << "breadth          " << a.commutators.breadth << '\n'
                << "exponent         " << exp << '\n';
      break;
  }
  return kExitOk;
}

std::string human_line(const BoundReport& r) {
  std::string s;
  if (!r.rhs_log2) {
    if (r.theorem == TheoremId::SchurWitness)
      s = "|G/Z| = " + std::to_string(r.lhs) + ", |gamma2| = " +
          std::to_string(std::get<std::uint64_t>(r.ingredients.at("gamma2_order")));
    else
      s = "breadth = " + std::to_string(r.lhs) + ", |gamma2| = " +
          std::to_string(std::get<std::uint64_t>(r.ingredients.at("gamma2_order")));
    return s + " (qualitative)";
  }
  s = std::to_string(r.lhs) + " <= ";
  if (r.rhs_exact)
    s += std::to_string(*r.rhs_exact) + (r.tight() ? " (tight)" : "");
  else
    s += "2^" + fixed(*r.rhs_log2) + (r.rhs_exceeds_u64 ? " (exact)" : "");
  return s;
}

std::string ingredient_string(const Ingredient& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::uint64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return fixed(x);
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else {
          std::string s = "[";
          for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
          return s + "]";
        }
      },
      v);
}

int cmd_verify(const RunConfig& cfg, const std::string& desc, const std::vector<std::string>& which) {
  std::vector<TheoremId> ids;
  for (const auto& w : which) {
    std::stringstream ss(w);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto id = theorem_from_string(tok);
      if (!id) throw InputError("unknown check '" + tok + "'");
      ids.push_back(*id);
    }
  }
  if (ids.empty()) ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));

  auto g = build(desc, cfg.order_cap);
  auto a = analyze(g);
  CheckOptions opt{cfg.tolerance};
  std::vector<BoundReport> reports;
  for (TheoremId id : ids) reports.push_back(run_check(id, a, opt));
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });

  switch (cfg.format) {
    case Format::Json: std::cout << verify_document(desc, g, reports).dump(2) << '\n'; break;
    case Format::Csv:
      std::cout << "descriptor,theorem,lhs,rhs_exact,rhs_log2,holds,tight\n";
      for (const auto& r : reports)
        std::cout << desc << ',' << to_string(r.theorem) << ',' << r.lhs << ','
                  << (r.rhs_exact ? std::to_string(*r.rhs_exact) : "") << ','
                  << (r.rhs_log2 ? fixed(*r.rhs_log2) : "") << ',' << (r.holds ? 1 : 0) << ','
                  << (r.tight() ? 1 : 0) << '\n';
      break;
    case Format::Human:
      std::cout << desc << " (order " << g.order() << ")\n";
      for (const auto& r : reports) {
        std::string name(to_string(r.theorem));
        name.resize(17, ' ');
        std::cout << "  " << name << (r.holds ? "holds   " : "FAILS   ") << human_line(r) << '\n';
        for (const auto& [k, v] : r.ingredients)
          if (k == "n" || k == "k" || k == "t" || k == "n_i" || k == "basis_mode")
            std::cout << "      " << k << " = " << ingredient_string(v) << '\n';
      }
      break;
  }
  return all ? kExitOk : kExitViolation;
}

int cmd_isoclinic(const RunConfig& cfg, const std::string& da, const std::string& db, bool emit) {
  auto g = build(da, cfg.order_cap);
  auto h = build(db, cfg.order_cap);
  std::optional<IsoclinismWitness> w;
  try {
    w = are_isoclinic(g, h, cfg.search_cap);
  } catch (const FeasibilityError& e) {
    if (cfg.format == Format::Json)
      std::cout << Json{{"schemaVersion", kSchemaVersion}, {"verdict", "INFEASIBLE"}}.dump(2) << '\n';
    else
      std::cout << "INFEASIBLE\n";
    std::cerr << e.what() << '\n';
    return kExitCap;
  }
  const char* verdict = w ? "ISOCLINIC" : "NOT_ISOCLINIC";
  if (cfg.format == Format::Json) {
    Json j{{"schemaVersion", kSchemaVersion}, {"g", da}, {"h", db}, {"verdict", verdict}};
    if (w && emit) j["witness"] = to_json(*w, da, db);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << verdict << '\n';
    if (w && emit) std::cout << to_json(*w, da, db).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_stem(const RunConfig& cfg, const std::string& desc) {
  auto g = build(desc, cfg.order_cap);
  auto s = stem_reduce(g, cfg.search_cap);
  std::vector<std::uint64_t> killed;
  for (const auto& q : s.steps) killed.push_back(q.kernel.order());
  if (cfg.format == Format::Json) {
    Json j{{"schemaVersion", kSchemaVersion},
           {"descriptor", desc},
           {"order", g.order()},
           {"quotientedOrders", killed},
           {"resultOrder", s.result.order()},
           {"stemReached", s.stem_reached},
           {"witnessVerified", s.witness.verified},
           {"result", table_to_json(s.result)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "input order      " << g.order() << '\n' << "quotiented by    ";
    for (std::size_t i = 0; i < killed.size(); ++i) std::cout << (i ? ", " : "") << "|A|=" << killed[i];
    std::cout << '\n'
              << "result order     " << s.result.order() << '\n'
              << "stem reached     " << yes_no(s.stem_reached) << '\n'
              << "witness verified " << yes_no(s.witness.verified) << '\n';
  }
  return kExitOk;
}

int cmd_survey(const RunConfig& cfg, const std::string& family, std::size_t p, std::size_t m_max) {
  CheckOptions opt{cfg.tolerance};
  std::vector<SurveyRow> rows;
  if (family == "ES" || family == "es") {
    rows = extraspecial_gap_survey(p, m_max, cfg.order_cap, opt);
  } else if (family == "catalog") {
    const std::size_t bound = cfg.order_cap_given ? cfg.order_cap : 64;
    for (const auto& d : catalog_suite(bound))
      rows.push_back(survey_row(to_string(d), build(d, cfg.order_cap), opt));
  } else {
    throw InputError("unknown survey family '" + family + "' (expected ES or catalog)");
  }
  switch (cfg.format) {
    case Format::Json: std::cout << survey_document(rows).dump(2) << '\n'; break;
    case Format::Csv:
      std::cout << survey_csv_header() << '\n';
      for (const auto& r : rows) std::cout << survey_csv_row(r) << '\n';
      break;
    case Format::Human: {
      std::printf("%-18s %6s %5s %6s %7s %7s %5s %8s %6s  %s\n", "group", "order", "|Z|", "|Z2|",
                  "|G/Z|", "|gam2|", "|K|", "breadth", "class", "all hold");
      for (const auto& r : rows)
        std::printf("%-18s %6llu %5llu %6llu %7llu %7llu %5llu %8llu %6s  %s\n", r.descriptor.c_str(),
                    static_cast<unsigned long long>(r.order), static_cast<unsigned long long>(r.center),
                    static_cast<unsigned long long>(r.second_center),
                    static_cast<unsigned long long>(r.central_quotient),
                    static_cast<unsigned long long>(r.gamma2),
                    static_cast<unsigned long long>(r.commutators),
                    static_cast<unsigned long long>(r.breadth),
                    r.nilpotency_class ? std::to_string(*r.nilpotency_class).c_str() : "-",
                    r.all_hold() ? "yes" : "NO");
      std::fflush(stdout);
      break;
    }
  }
  bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.all_hold(); });
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group invariants, central-quotient bounds and isoclinism"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "human";
  std::size_t max_order = 0;
  app.add_option("--format", format, "human, json (structured-text) or csv")
      ->check(CLI::IsMember({"human", "json", "structured-text", "csv"}));
  auto* max_order_opt =
      app.add_option("--max-order", max_order, "order cap for constructed groups (default 5000)")
          ->check(CLI::PositiveNumber);
  app.add_option("--search-cap", cfg.search_cap, "largest |G/Z| searched for isoclinisms")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "log2-domain tolerance for inexact bounds (expert)")
      ->check(CLI::NonNegativeNumber);

  std::string desc, desc_b, family;
  std::vector<std::string> which;
  bool emit_witness = false;
  std::size_t p = 3, m_max = 2;

  auto* analyze = app.add_subcommand("analyze", "print the structural invariants of a group");
  analyze->add_option("group", desc, "descriptor, e.g. D8, 'C2 x Q8', ES(3,2,+), table:file.json")->required();

  auto* verify = app.add_subcommand("verify", "check every bound on a group");
  verify->add_option("group", desc)->required();
  verify->add_option("--check", which, "comma-separated theorem ids (default: all)");

  auto* iso = app.add_subcommand("isoclinic", "decide whether two groups are isoclinic");
  iso->add_option("a", desc)->required();
  iso->add_option("b", desc_b)->required();
  iso->add_flag("--witness", emit_witness, "serialize the isoclinism when one exists");

  auto* stem = app.add_subcommand("stem", "reduce a group to a stem group in its isoclinism class");
  stem->add_option("group", desc)->required();

  auto* survey = app.add_subcommand("survey", "tabulate invariants and bound verdicts over a family");
  survey->add_option("--family", family, "ES or catalog")->required();
  survey->add_option("--p", p, "prime for the ES family");
  survey->add_option("--m-max", m_max, "largest rank for the ES family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  cfg.format = format == "csv" ? Format::Csv : format == "human" ? Format::Human : Format::Json;
  if (*max_order_opt) {
    cfg.order_cap = max_order;
    cfg.order_cap_given = true;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, desc);
    if (*verify) return cmd_verify(cfg, desc, which);
    if (*iso) return cmd_isoclinic(cfg, desc, desc_b, emit_witness);
    if (*stem) return cmd_stem(cfg, desc);
    if (*survey) return cmd_survey(cfg, family, p, m_max);
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const FeasibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
