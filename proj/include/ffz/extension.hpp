#pragma once

// Geometric extensions K/F_q(T) given by a defining polynomial f in A[X],
// their discriminants, and splitting types of finite primes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "parse.hpp"

namespace ffz {

/// One prime above p: ramification index e and inertia degree f.
struct PrimeAbove {
  int e = 1;
  int f = 1;
  friend bool operator==(const PrimeAbove&, const PrimeAbove&) = default;
};

/// Multiset of (e_i, f_i), kept sorted ascending by (f_i, e_i).
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<PrimeAbove> pairs) : pairs_(std::move(pairs)) {
    for (const auto& pr : pairs_)
      if (pr.e < 1 || pr.f < 1) throw DomainError("extension", "splitting type entries must be >= 1");
    std::sort(pairs_.begin(), pairs_.end(),
              [](const PrimeAbove& a, const PrimeAbove& b) { return std::pair(a.f, a.e) < std::pair(b.f, b.e); });
  }

  /// Parses "(2,1)" or "(1,1)(1,2)" / "(1,1),(1,2)", optionally in brackets.
  static SplittingType parse(const std::string& text) {
    static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::vector<PrimeAbove> pairs;
    for (std::sregex_iterator it(text.begin(), text.end(), pair_re), end; it != end; ++it)
      pairs.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    const std::string stripped = std::regex_replace(text, pair_re, "");
    if (pairs.empty() || stripped.find_first_not_of(" \t,[]") != std::string::npos)
      throw ParseError("extension", "bad splitting type \"" + text + "\"");
    return SplittingType(std::move(pairs));
  }

  const std::vector<PrimeAbove>& pairs() const { return pairs_; }
  /// sum e_i f_i
  int degree() const {
    int n = 0;
    for (const auto& pr : pairs_) n += pr.e * pr.f;
    return n;
  }
  std::vector<int> inertia_degrees() const {
    std::vector<int> out;
    for (const auto& pr : pairs_) out.push_back(pr.f);
    std::sort(out.begin(), out.end());
    return out;
  }
  bool unramified() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const PrimeAbove& pr) { return pr.e == 1; });
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(pairs_[i].e) + "," + std::to_string(pairs_[i].f) + ")";
    }
    return out + "]";
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<PrimeAbove> pairs_;
};

/// A finite extension K/F given by f in A[X], monic in X, plus the data the
/// Kummer computation cannot supply: splitting types at ramified primes.
struct ExtensionSpec {
  std::string name;
  FieldSpec base;
  BiPoly defining;  // coefficient of X^i in A
  std::vector<MonicPoly> bad_primes;
  std::map<std::uint64_t, std::pair<MonicPoly, SplittingType>> overrides;  // keyed by monic_index
  Poly disc;  // monic discriminant, filled by validate_extension

  int degree() const { return static_cast<int>(defining.size()) - 1; }
  const SplittingType* override_at(const MonicPoly& prime) const {
    auto it = overrides.find(monic_index(prime));
    return it == overrides.end() ? nullptr : &it->second.second;
  }
  std::string poly_string() const { return format_bipoly(defining); }
};

namespace detail {

/// Exact division in A; throws if there is a remainder.
inline Poly exact_div(const Poly& a, const Poly& b) {
  auto [qt, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("extension", "inexact division in fraction-free elimination");
  return qt;
}

/// Determinant of a square matrix over A by Bareiss fraction-free elimination.
inline Poly determinant(std::vector<std::vector<Poly>> m, const FieldSpec& f) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::one(f);
  Poly prev = Poly::one(f);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly(f);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly(f);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace detail

/// Res_X(a, b) for a, b in A[X], via the Sylvester determinant.
inline Poly resultant(const FieldSpec& f, const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return Poly(f);
  const std::size_t n = a.size() - 1;
  const std::size_t k = b.size() - 1;
  const std::size_t size = n + k;
  if (size == 0) return Poly::one(f);
  std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly(f)));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i <= n; ++i) m[r][r + i] = a[n - i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= k; ++i) m[k + r][r + i] = b[k - i];
  return detail::determinant(std::move(m), f);
}

inline BiPoly derivative_x(const FieldSpec& f, const BiPoly& a) {
  BiPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i].scaled(f.from_int(static_cast<std::int64_t>(i))));
  detail::bi_trim(r);
  return r;
}

/// Monic discriminant of the defining polynomial (unit factors dropped). The
/// zero polynomial means f is inseparable.
inline Poly discriminant(const ExtensionSpec& ext) {
  const auto res = resultant(ext.base, ext.defining, derivative_x(ext.base, ext.defining));
  return res.is_zero() ? res : res.monic();
}

/// Checks the structural invariants and fills ext.disc.
inline void validate_extension(ExtensionSpec& ext) {
  const auto& f = ext.base;
  if (ext.degree() < 1) throw DomainError("extension", "defining polynomial must have X-degree >= 1");
  if (!(ext.defining.back() == Poly::one(f))) throw DomainError("extension", "defining polynomial must be monic in X");
  ext.disc = discriminant(ext);
  if (ext.disc.is_zero()) throw DomainError("extension", "defining polynomial " + ext.poly_string() + " is inseparable");
  for (const auto& [idx, entry] : ext.overrides) {
    const auto& [prime, type] = entry;
    if (!is_irreducible(prime.poly()))
      throw DomainError("extension", "override prime " + prime.to_string() + " is not irreducible");
    if (type.degree() != ext.degree())
      throw DomainError("extension", "override at " + prime.to_string() + " has sum e*f = " + std::to_string(type.degree()) +
                                         ", expected " + std::to_string(ext.degree()));
  }
  Poly rest = ext.disc;
  auto strip = [&](const MonicPoly& pr) {
    for (;;) {
      auto [qt, r] = divmod(rest, pr.poly());
      if (!r.is_zero()) break;
      rest = qt;
    }
  };
  for (const auto& pr : ext.bad_primes) {
    if (!is_irreducible(pr.poly())) throw DomainError("extension", "bad prime " + pr.to_string() + " is not irreducible");
    strip(pr);
  }
  for (const auto& [idx, entry] : ext.overrides) strip(entry.first);
  if (rest.degree() > 0)
    throw DomainError("extension", "discriminant " + ext.disc.to_string() + " has prime factors of " + rest.monic().to_string() +
                                       " with no bad-prime or override entry");
}

inline void add_override(ExtensionSpec& ext, const MonicPoly& prime, SplittingType type) {
  ext.overrides.insert_or_assign(monic_index(prime), std::pair{prime, std::move(type)});
}

struct ArtinSchreier {
  int m = 1;
};
struct KummerSqrt {
  Poly c;
};
using BuiltinKind = std::variant<ArtinSchreier, KummerSqrt>;

/// Monic prime factors of a squarefree nonconstant c, by trial division.
inline std::vector<MonicPoly> squarefree_prime_factors(const Poly& c) {
  const auto& f = c.field();
  for (const auto& fd : poly_factor_degrees(f, c.coeffs()))
    if (fd.multiplicity > 1) throw DomainError("extension", c.to_string() + " is not squarefree");
  std::vector<MonicPoly> out;
  Poly rest = c.monic();
  for (int d = 1; rest.degree() > 0; ++d) {
    // No factor of degree < d remains, so a cofactor of degree < 2d is prime.
    if (2 * d > rest.degree()) {
      out.emplace_back(rest);
      break;
    }
    for (const auto& pr : enumerate_monic_irreducibles(f, d)) {
      auto [qt, r] = divmod(rest, pr.poly());
      if (r.is_zero()) {
        out.push_back(pr);
        rest = qt;
      }
    }
  }
  return out;
}

/// X^p - X - T^m (unramified at every finite prime), or X^2 - c with each prime
/// factor of c overridden to (e=2, f=1).
inline ExtensionSpec builtin_extension(const BuiltinKind& kind, const FieldSpec& f) {
  ExtensionSpec ext;
  ext.base = f;
  if (const auto* as = std::get_if<ArtinSchreier>(&kind)) {
    if (as->m < 1) throw DomainError("extension", "artin_schreier needs m >= 1");
    const int p = static_cast<int>(f.p());
    ext.name = "artin_schreier(m=" + std::to_string(as->m) + ")";
    ext.defining.assign(static_cast<std::size_t>(p) + 1, Poly(f));
    ext.defining[0] = -Poly::monomial(f, as->m, f.one());
    ext.defining[1] = -Poly::one(f);
    ext.defining[static_cast<std::size_t>(p)] = Poly::one(f);
  } else {
    const auto& c = std::get<KummerSqrt>(kind).c;
    if (f.p() == 2) throw DomainError("extension", "kummer_sqrt needs odd characteristic");
    if (c.degree() < 1) throw DomainError("extension", "kummer_sqrt needs a nonconstant c");
    ext.name = "kummer_sqrt(" + c.to_string() + ")";
    ext.defining = {-c, Poly(f), Poly::one(f)};
    for (const auto& pr : squarefree_prime_factors(c)) {
      ext.bad_primes.push_back(pr);
      add_override(ext, pr, SplittingType({{2, 1}}));
    }
  }
  validate_extension(ext);
  return ext;
}

/// F itself, defined by X.
inline ExtensionSpec trivial_extension(const FieldSpec& f) {
  ExtensionSpec ext;
  ext.name = "trivial";
  ext.base = f;
  ext.defining = {Poly(f), Poly::one(f)};
  validate_extension(ext);
  return ext;
}

namespace detail {

inline std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct ConfigSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  const std::string* get(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

/// Sectioned key=value text. A key starts at line start or after whitespace;
/// its value runs to the next key, so values may contain spaces.
inline std::vector<ConfigSection> parse_sections(const std::string& text) {
  static const std::regex key_re(R"((^|\s)([A-Za-z_][A-Za-z0-9_]*)\s*=)");
  std::vector<ConfigSection> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim_ws(line);
    if (line.empty()) continue;
    if (line[0] == '[') {
      const auto close = line.find(']');
      if (close == std::string::npos) throw ParseError("extension", "line " + std::to_string(lineno) + ": unterminated section");
      out.push_back({trim_ws(line.substr(1, close - 1)), {}});
      line = trim_ws(line.substr(close + 1));
      if (line.empty()) continue;
    }
    if (out.empty()) throw ParseError("extension", "line " + std::to_string(lineno) + ": key outside of a section");
    std::vector<std::pair<std::size_t, std::smatch>> keys;
    for (std::sregex_iterator it(line.begin(), line.end(), key_re), end; it != end; ++it)
      keys.emplace_back(static_cast<std::size_t>(it->position(0)), *it);
    if (keys.empty() || trim_ws(line.substr(0, keys[0].first)) != "")
      throw ParseError("extension", "line " + std::to_string(lineno) + ": expected key=value");
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto& mt = keys[i].second;
      const std::size_t vstart = keys[i].first + static_cast<std::size_t>(mt.length(0));
      const std::size_t vend = i + 1 < keys.size() ? keys[i + 1].first : line.size();
      out.back().entries.emplace_back(mt[2].str(), trim_ws(line.substr(vstart, vend - vstart)));
    }
  }
  return out;
}

inline int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("extension", "expected integer for " + what + ", got \"" + s + "\"");
  }
}

}  // namespace detail

/// Parses an extension config:
///
///   [field]      p=3  m=1
///   [extension]  name=K  poly=X^2 - T
///   [override]   prime=T  type=(2,1)
///
/// `builtin=artin_schreier:m=5` or `builtin=kummer_sqrt:c=T+1` may replace
/// `poly`; `[bad] prime=P` declares a bad prime without an override.
inline ExtensionSpec parse_extension(const std::string& text) {
  const auto sections = detail::parse_sections(text);
  const detail::ConfigSection* field_sec = nullptr;
  const detail::ConfigSection* ext_sec = nullptr;
  for (const auto& s : sections) {
    if (s.name == "field") field_sec = &s;
    else if (s.name == "extension") ext_sec = &s;
    else if (s.name != "override" && s.name != "bad") throw ParseError("extension", "unknown section [" + s.name + "]");
  }
  if (!field_sec) throw ParseError("extension", "missing [field] section");
  if (!ext_sec) throw ParseError("extension", "missing [extension] section");
  const auto* p = field_sec->get("p");
  if (!p) throw ParseError("extension", "[field] needs p");
  const auto* m = field_sec->get("m");
  const FieldSpec f = gf_create(detail::to_int(*p, "p"), m ? detail::to_int(*m, "m") : 1);

  ExtensionSpec ext;
  const auto* builtin = ext_sec->get("builtin");
  const auto* poly = ext_sec->get("poly");
  if ((builtin == nullptr) == (poly == nullptr)) throw ParseError("extension", "[extension] needs exactly one of poly or builtin");
  if (builtin) {
    static const std::regex as_re(R"(artin_schreier\s*:\s*m\s*=\s*(\d+))");
    static const std::regex ks_re(R"(kummer_sqrt\s*:\s*c\s*=\s*(.+))");
    std::smatch mt;
    if (std::regex_match(*builtin, mt, as_re)) ext = builtin_extension(ArtinSchreier{detail::to_int(mt[1], "m")}, f);
    else if (std::regex_match(*builtin, mt, ks_re)) ext = builtin_extension(KummerSqrt{parse_poly(f, mt[1].str())}, f);
    else throw ParseError("extension", "unknown builtin \"" + *builtin + "\"");
  } else {
    ext.base = f;
    ext.defining = parse_bipoly(f, *poly);
  }
  if (const auto* name = ext_sec->get("name")) ext.name = *name;
  if (ext.name.empty()) ext.name = ext.poly_string();

  for (const auto& s : sections) {
    if (s.name != "override" && s.name != "bad") continue;
    const auto* prime = s.get("prime");
    if (!prime) throw ParseError("extension", "[" + s.name + "] needs prime");
    const auto pr = parse_monic(f, *prime);
    if (s.name == "bad") {
      ext.bad_primes.push_back(pr);
      continue;
    }
    const auto* type = s.get("type");
    if (!type) throw ParseError("extension", "[override] needs type");
    add_override(ext, pr, SplittingType::parse(*type));
  }
  validate_extension(ext);
  return ext;
}

/// Renders an extension back into config text accepted by parse_extension.
inline std::string format_extension(const ExtensionSpec& ext) {
  std::string out = "[field] p=" + std::to_string(ext.base.p()) + " m=" + std::to_string(ext.base.m()) + "\n";
  out += "[extension] name=" + ext.name + " poly=" + ext.poly_string() + "\n";
  for (const auto& pr : ext.bad_primes)
    if (!ext.override_at(pr)) out += "[bad] prime=" + pr.to_string() + "\n";
  for (const auto& [idx, entry] : ext.overrides)
    out += "[override] prime=" + entry.first.to_string() + " type=" + entry.second.to_string() + "\n";
  return out;
}

/// Splitting type of a prime whose irreducibility the caller guarantees.
inline SplittingType splitting_type_unchecked(const ExtensionSpec& ext, const MonicPoly& prime) {
  if (const auto* ov = ext.override_at(prime)) return *ov;
  const ResidueField k(prime);
  upoly::Poly<ResidueField> g;
  for (const auto& c : ext.defining) g.push_back(k.reduce(c));
  upoly::trim(k, g);
  std::vector<PrimeAbove> pairs;
  for (const auto& fd : poly_factor_degrees(k, g)) {
    if (fd.multiplicity > 1)
      throw DomainError("extension", "uncovered ramified prime " + prime.to_string() + " in " + ext.name +
                                         ": f mod p is not squarefree and no override is given");
    pairs.push_back({1, fd.degree});
  }
  return SplittingType(std::move(pairs));
}

/// Splitting type of a monic irreducible prime: the override if present,
/// otherwise the factor degrees of f mod p over A/(p) (Kummer).
inline SplittingType splitting_type(const ExtensionSpec& ext, const MonicPoly& prime) {
  if (!(prime.field() == ext.base)) throw DomainError("extension", "prime over a different base field");
  if (!is_irreducible(prime.poly())) throw DomainError("extension", prime.to_string() + " is not irreducible");
  return splitting_type_unchecked(ext, prime);
}

}  // namespace ffz
