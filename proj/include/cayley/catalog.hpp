#pragma once

// Named group families and the descriptor mini-language:
//
//   descriptor := atom ( "x" atom )*
//   atom       := "C" n | "D" n | "Q" n | "S" n | "A" n | "H" p
//               | "ES(" p "," m [ "," ("+"|"-") ] ")" | "table:" path
//
// D n and Q n are indexed by group order. Atoms are case-insensitive and
// whitespace is ignored everywhere except inside a table path.

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/invariants.hpp"
#include "cayley/kernel.hpp"
#include "cayley/table_io.hpp"

namespace cayley {

inline GroupTable cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group needs n >= 1");
  if (n > kMaxRepresentableOrder) throw SizeError("cyclic order too large");
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  return GroupTable::from_table(n, std::move(mul), n > 1 ? std::vector<Element>{1} : std::vector<Element>{});
}

/// Dihedral group of order n = 2k. Element r^i s^j has index i + k*j, so
/// r = 1 and s = k are the recorded generators.
inline GroupTable dihedral(std::size_t n) {
  if (n < 2 || n % 2) throw InputError("dihedral order must be even and >= 2");
  const std::size_t k = n / 2;
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % k, j1 = x / k, i2 = y % k, j2 = y / k;
      const std::size_t i = j1 ? (i1 + k - i2) % k : (i1 + i2) % k;
      mul[x * n + y] = static_cast<std::uint16_t>(i + k * ((j1 + j2) % 2));
    }
  std::vector<Element> gens;
  if (k > 1) gens.push_back(1);
  gens.push_back(static_cast<Element>(k));
  return GroupTable::from_table(n, std::move(mul), std::move(gens));
}

/// Generalised quaternion group of order n = 2^k >= 8: a^i b^j at i + h*j
/// with h = n/2, a of order h, b^2 = a^(h/2), b a b^-1 = a^-1.
inline GroupTable quaternion(std::size_t n) {
  if (n < 8 || (n & (n - 1))) throw InputError("quaternion order must be a power of 2, at least 8");
  const std::size_t h = n / 2;
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % h, j1 = x / h, i2 = y % h, j2 = y / h;
      std::size_t i, j;
      if (!j1) {
        i = (i1 + i2) % h;
        j = j2;
      } else if (!j2) {
        i = (i1 + h - i2) % h;
        j = 1;
      } else {
        i = (i1 + h - i2 + h / 2) % h;
        j = 0;
      }
      mul[x * n + y] = static_cast<std::uint16_t>(i + h * j);
    }
  return GroupTable::from_table(n, std::move(mul), {1, static_cast<Element>(h)});
}

inline GroupTable symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n == 0) throw InputError("symmetric group needs n >= 1");
  if (n == 1) return GroupTable{};
  std::vector<Element> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Element{0});
  return close_permutations(n, {from_cycles(n, {{0, 1}}), from_cycles(n, {cycle})}, cap);
}

inline GroupTable alternating(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n == 0) throw InputError("alternating group needs n >= 1");
  if (n <= 2) return GroupTable{};
  std::vector<Permutation> gens{from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Element> cycle;
    for (Element i = (n % 2 ? 0 : 1); i < n; ++i) cycle.push_back(i);
    gens.push_back(from_cycles(n, {cycle}));
  }
  return close_permutations(n, gens, cap);
}

/// Upper unitriangular 3x3 matrices over F_p: (a,b,c) at a + p*b + p^2*c
/// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'). Exponent p for odd p;
/// for p = 2 this is D8.
inline GroupTable heisenberg(std::size_t p) {
  const std::size_t n = p * p * p;
  if (n > kMaxRepresentableOrder) throw SizeError("Heisenberg group too large");
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a1 = x % p, b1 = x / p % p, c1 = x / (p * p);
      const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      mul[x * n + y] = static_cast<std::uint16_t>((a1 + a2) % p + p * ((b1 + b2) % p) +
                                                  p * p * ((c1 + c2 + a1 * b2) % p));
    }
  return GroupTable::from_table(n, std::move(mul), {1, static_cast<Element>(p)});
}

/// C_{p^2} semidirect C_p with b a b^-1 = a^(1+p): the extraspecial group of
/// order p^3 and exponent p^2. a^i b^j sits at i + p^2*j.
inline GroupTable metacyclic_extraspecial(std::size_t p) {
  const std::size_t q = p * p, n = q * p;
  if (n > kMaxRepresentableOrder) throw SizeError("extraspecial factor too large");
  std::vector<std::size_t> twist(p, 1);  // (1+p)^j mod p^2
  for (std::size_t j = 1; j < p; ++j) twist[j] = twist[j - 1] * (1 + p) % q;
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % q, j1 = x / q, i2 = y % q, j2 = y / q;
      mul[x * n + y] =
          static_cast<std::uint16_t>((i1 + i2 * twist[j1]) % q + q * ((j1 + j2) % p));
    }
  return GroupTable::from_table(n, std::move(mul), {1, static_cast<Element>(q)});
}

struct CentralProduct {
  GroupTable table;
  Element identified;  // image of the identified central generator
};

/// (A x B) / <(zA, zB^-1)>, built directly on normal forms (a, r) where r
/// runs over the minimal coset representatives of <zB> in B; the pair is
/// encoded as a*R + index(r). The direct product is never tabulated.
inline CentralProduct central_product(const GroupTable& a, Element za, const GroupTable& b,
                                      Element zb, std::size_t cap = kDefaultOrderCap) {
  a.require(za);
  b.require(zb);
  const auto za_center = center(a), zb_center = center(b);
  if (!za_center.contains(za) || !zb_center.contains(zb))
    throw InputError("central product needs central elements");
  const auto k = element_order(a, za);
  if (k != element_order(b, zb)) throw InputError("identified central elements differ in order");

  std::vector<Element> rep_of(b.order(), kNoElement), power(b.order(), 0), reps;
  for (Element x = 0; x < b.order(); ++x) {
    if (rep_of[x] != kNoElement) continue;
    const auto ri = static_cast<Element>(reps.size());
    reps.push_back(x);
    Element y = x;
    for (Element t = 0; t < k; ++t, y = b.mul(y, zb)) {
      rep_of[y] = ri;
      power[y] = t;
    }
  }
  const std::size_t r = reps.size(), n = a.order() * r;
  if (n > cap || n > kMaxRepresentableOrder)
    throw SizeError("central product of order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  std::vector<Element> za_pow(k, kIdentity);
  for (std::size_t t = 1; t < k; ++t) za_pow[t] = a.mul(za_pow[t - 1], za);

  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a1 = static_cast<Element>(x / r);
    const Element r1 = reps[x % r];
    for (std::size_t y = 0; y < n; ++y) {
      const Element bb = b.mul(r1, reps[y % r]);
      const Element aa = a.mul(a.mul(a1, static_cast<Element>(y / r)), za_pow[power[bb]]);
      mul[x * n + y] = static_cast<std::uint16_t>(aa * r + rep_of[bb]);
    }
  }
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(static_cast<Element>(g * r));
  for (Element g : b.generators())
    gens.push_back(static_cast<Element>(za_pow[power[g]] * r + rep_of[g]));
  return {GroupTable::from_table(n, std::move(mul), std::move(gens)),
          static_cast<Element>(za * r)};
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Extraspecial group of order p^(1+2m).
///
/// '+' is the central product of m copies of the Heisenberg group (D8 for
/// p = 2); '-' swaps the first factor for the exponent-p^2 group (Q8 for
/// p = 2). Factors are glued along z = [x, y] of their two recorded
/// generators, so the result carries the standard 2m generators.
inline GroupTable extraspecial(std::size_t p, std::size_t m, char sign,
                               std::size_t cap = kDefaultOrderCap) {
  if (!is_prime(p)) throw InputError("extraspecial prime " + std::to_string(p) + " is not prime");
  if (m == 0) throw InputError("extraspecial rank m must be >= 1");
  if (sign != '+' && sign != '-') throw InputError("extraspecial sign must be + or -");
  std::size_t order = p;
  for (std::size_t i = 0; i < m; ++i) {
    order *= p * p;
    if (order > cap || order > kMaxRepresentableOrder)
      throw SizeError("extraspecial group exceeds order cap " + std::to_string(cap));
  }
  auto plus_factor = [&] { return p == 2 ? dihedral(8) : heisenberg(p); };
  auto factor_center = [](const GroupTable& f) {
    return commutator(f, f.generators()[0], f.generators()[1]);
  };
  GroupTable acc = sign == '+' ? plus_factor() : (p == 2 ? quaternion(8) : metacyclic_extraspecial(p));
  Element z = factor_center(acc);
  for (std::size_t i = 1; i < m; ++i) {
    auto f = plus_factor();
    auto cp = central_product(acc, z, f, factor_center(f), cap);
    acc = cp.table;
    z = cp.identified;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Descriptors

enum class Family { Cyclic, Dihedral, Quaternion, Symmetric, Alternating, Extraspecial, Heisenberg, Table };

struct Atom {
  Family family = Family::Cyclic;
  std::uint64_t n = 1;  // order parameter, degree, or prime
  std::uint64_t m = 0;  // extraspecial rank
  char sign = '+';
  std::string path;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct GroupDescriptor {
  std::vector<Atom> factors;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline std::string to_string(const Atom& a) {
  switch (a.family) {
    case Family::Cyclic: return "C" + std::to_string(a.n);
    case Family::Dihedral: return "D" + std::to_string(a.n);
    case Family::Quaternion: return "Q" + std::to_string(a.n);
    case Family::Symmetric: return "S" + std::to_string(a.n);
    case Family::Alternating: return "A" + std::to_string(a.n);
    case Family::Heisenberg: return "H" + std::to_string(a.n);
    case Family::Extraspecial:
      return "ES(" + std::to_string(a.n) + "," + std::to_string(a.m) + "," + a.sign + ")";
    case Family::Table: return "table:" + a.path;
  }
  return {};
}

inline std::string to_string(const GroupDescriptor& d) {
  std::string out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (i) out += " x ";
    out += to_string(d.factors[i]);
  }
  return out;
}

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : s_(text) {}

  GroupDescriptor parse() {
    GroupDescriptor d;
    d.factors.push_back(atom());
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) break;
      if (lower(s_[pos_]) != 'x') throw ParseError(pos_, "expected 'x' between factors");
      ++pos_;
      d.factors.push_back(atom());
    }
    return d;
  }

 private:
  static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && lower(s_[pos_]) == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
        throw ParseError(start, "number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a number");
    return v;
  }

  Atom atom() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "expected a group atom");
    const std::size_t start = pos_;
    Atom a;
    if (s_.size() - pos_ >= 6) {
      std::string head;
      for (std::size_t i = 0; i < 6; ++i) head += lower(s_[pos_ + i]);
      if (head == "table:") {
        pos_ += 6;
        const std::size_t p0 = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == p0) throw ParseError(pos_, "empty table path");
        a.family = Family::Table;
        a.path = std::string(s_.substr(p0, pos_ - p0));
        return a;
      }
    }
    const char c = lower(s_[pos_++]);
    if (c == 'e') {
      if (pos_ >= s_.size() || lower(s_[pos_]) != 's') throw ParseError(pos_, "expected 'ES('");
      ++pos_;
      expect('(');
      a.family = Family::Extraspecial;
      a.n = number();
      expect(',');
      a.m = number();
      if (accept(',')) {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
          a.sign = s_[pos_++];
        else
          throw ParseError(pos_, "expected '+' or '-'");
      }
      expect(')');
    } else {
      switch (c) {
        case 'c': a.family = Family::Cyclic; break;
        case 'd': a.family = Family::Dihedral; break;
        case 'q': a.family = Family::Quaternion; break;
        case 's': a.family = Family::Symmetric; break;
        case 'a': a.family = Family::Alternating; break;
        case 'h': a.family = Family::Heisenberg; break;
        default: throw ParseError(start, std::string("unknown group family '") + s_[start] + "'");
      }
      a.n = number();
    }
    validate(a, start);
    return a;
  }

  static void validate(const Atom& a, std::size_t at) {
    auto bad = [&](const std::string& msg) {
      throw InputError(msg + " in '" + to_string(a) + "' at offset " + std::to_string(at));
    };
    switch (a.family) {
      case Family::Cyclic:
      case Family::Symmetric:
      case Family::Alternating:
        if (a.n < 1) bad("parameter must be >= 1");
        break;
      case Family::Dihedral:
        if (a.n < 2 || a.n % 2) bad("dihedral order must be even and >= 2");
        break;
      case Family::Quaternion:
        if (a.n < 8 || (a.n & (a.n - 1))) bad("quaternion order must be 2^k with k >= 3");
        break;
      case Family::Heisenberg:
        if (!is_prime(a.n)) bad(std::to_string(a.n) + " is not prime");
        break;
      case Family::Extraspecial:
        if (!is_prime(a.n)) bad(std::to_string(a.n) + " is not prime");
        if (a.m < 1) bad("extraspecial rank must be >= 1");
        break;
      case Family::Table: break;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Order predicted from parameters, saturating at `limit + 1`.
inline std::uint64_t predicted_order(const Atom& a, std::uint64_t limit) {
  auto sat_mul = [&](std::uint64_t x, std::uint64_t y) {
    return (y != 0 && x > (limit + 1) / y) ? limit + 1 : std::min(x * y, limit + 1);
  };
  switch (a.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Quaternion: return std::min<std::uint64_t>(a.n, limit + 1);
    case Family::Symmetric:
    case Family::Alternating: {
      // Alternating orders are halved afterwards, so saturate at twice the limit.
      const std::uint64_t bound = a.family == Family::Alternating ? 2 * limit + 1 : limit;
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= a.n && f <= bound; ++i) f *= i;
      if (a.family == Family::Alternating && a.n >= 2) f /= 2;
      return std::min(f, limit + 1);
    }
    case Family::Heisenberg: return sat_mul(sat_mul(a.n, a.n), a.n);
    case Family::Extraspecial: {
      std::uint64_t o = std::min<std::uint64_t>(a.n, limit + 1);
      for (std::uint64_t i = 0; i < a.m && o <= limit; ++i) o = sat_mul(o, sat_mul(a.n, a.n));
      return o;
    }
    case Family::Table: return 1;
  }
  return 1;
}

}  // namespace detail

inline GroupDescriptor parse_descriptor(std::string_view text) {
  return detail::DescriptorParser(text).parse();
}

inline GroupTable build(const Atom& a, std::size_t cap = kDefaultOrderCap) {
  if (a.family != Family::Table && detail::predicted_order(a, cap) > cap)
    throw SizeError("'" + to_string(a) + "' exceeds order cap " + std::to_string(cap));
  switch (a.family) {
    case Family::Cyclic: return cyclic(a.n);
    case Family::Dihedral: return dihedral(a.n);
    case Family::Quaternion: return quaternion(a.n);
    case Family::Symmetric: return symmetric(a.n, cap);
    case Family::Alternating: return alternating(a.n, cap);
    case Family::Heisenberg: return heisenberg(a.n);
    case Family::Extraspecial: return extraspecial(a.n, a.m, a.sign, cap);
    case Family::Table: {
      auto g = load_table(a.path);
      if (g.order() > cap)
        throw SizeError("table of order " + std::to_string(g.order()) + " exceeds cap");
      return g;
    }
  }
  throw InputError("unknown family");
}

inline GroupTable build(const GroupDescriptor& d, std::size_t cap = kDefaultOrderCap) {
  if (d.factors.empty()) throw InputError("empty descriptor");
  std::uint64_t predicted = 1;
  for (const auto& a : d.factors) {
    predicted *= detail::predicted_order(a, cap);
    if (predicted > cap)
      throw SizeError("'" + to_string(d) + "' exceeds order cap " + std::to_string(cap));
  }
  GroupTable g = build(d.factors.front(), cap);
  for (std::size_t i = 1; i < d.factors.size(); ++i)
    g = direct_product(g, build(d.factors[i], cap), cap);
  return g;
}

inline GroupTable build(std::string_view text, std::size_t cap = kDefaultOrderCap) {
  return build(parse_descriptor(text), cap);
}

/// Built-in test corpus with order <= max_order, in a fixed order.
inline std::vector<GroupDescriptor> catalog_suite(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= 16; ++n) names.push_back("C" + std::to_string(n));
  for (std::size_t n = 6; n <= max_order; n += 2) names.push_back("D" + std::to_string(n));
  for (std::size_t n = 8; n <= max_order; n *= 2) names.push_back("Q" + std::to_string(n));
  for (std::size_t n = 3; n <= 5; ++n) names.push_back("S" + std::to_string(n));
  for (std::size_t n = 4; n <= 5; ++n) names.push_back("A" + std::to_string(n));
  for (std::size_t p : {2, 3, 5})
    for (std::size_t m = 1;; ++m) {
      std::size_t order = p;
      for (std::size_t i = 0; i < m; ++i) order *= p * p;
      if (order > max_order) break;
      names.push_back("ES(" + std::to_string(p) + "," + std::to_string(m) + ",+)");
      names.push_back("ES(" + std::to_string(p) + "," + std::to_string(m) + ",-)");
    }
  for (const char* prod : {"C2 x C2", "C2 x C4", "C2 x C2 x C2", "C2 x S3", "C2 x D8", "C2 x Q8",
                           "C3 x S3", "C2 x A4", "C3 x Q8", "S3 x S3", "D8 x D8", "C3 x ES(3,1,+)",
                           "C2 x S4"})
    names.push_back(prod);

  std::vector<GroupDescriptor> out;
  for (const auto& name : names) {
    auto d = parse_descriptor(name);
    std::uint64_t order = 1;
    for (const auto& a : d.factors) order *= detail::predicted_order(a, max_order);
    if (order <= max_order) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace cayley
