#pragma once

// Ideal-count Dirichlet tables B(n) and the zeta functions read off them:
// the Weil series, the Goss zeta function in characteristic p, comparisons,
// and recovery of splitting types from Goss coefficients.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "fq.hpp"
#include "laurent.hpp"
#include "parse.hpp"

namespace ffz {

/// c_k = number of ideals of norm p^k, i.e. nonnegative solutions of
/// sum a_i f_i = k with one variable per prime above p. Ramification indices
/// play no role.
inline std::vector<std::int64_t> local_counts(const SplittingType& st, int kmax) {
  if (kmax < 0) throw DomainError("zeta", "kmax must be >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(kmax) + 1, 0);
  c[0] = 1;
  for (const auto& pr : st.pairs())
    for (int k = pr.f; k <= kmax; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - pr.f)];
  return c;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline std::int64_t g2_rec(const std::vector<std::int64_t>& c, int remaining, int part, bool omit_top, int top,
                           std::int64_t acc) {
  if (remaining == 0) return acc;
  if (part > remaining) return 0;
  std::int64_t total = g2_rec(c, remaining, part + 1, omit_top, top, acc);
  for (int r = 1; r * part <= remaining; ++r) {
    if (omit_top && part == top && r == 1) continue;
    const std::int64_t w = binomial(c[static_cast<std::size_t>(part)] + r - 1, r);
    if (w == 0) continue;
    total += g2_rec(c, remaining - r * part, part + 1, omit_top, top, acc * w);
  }
  return total;
}

}  // namespace detail

/// B(p^f) from the prime counts C(p^1..p^f): the sum over distinct parts
/// f_1 < ... < f_s with multiplicities r_i (sum r_i f_i = f) of
/// prod binom(C(p^f_i) + r_i - 1, r_i). With omit_top the single term C(p^f)
/// itself is left out, which is what remains once C(p^f) is peeled off.
inline std::int64_t ideal_count_from_prime_counts(const std::vector<std::int64_t>& prime_counts, int f, bool omit_top = false) {
  if (f == 0) return omit_top ? 0 : 1;
  if (static_cast<int>(prime_counts.size()) <= f) throw DomainError("zeta", "prime counts too short");
  return detail::g2_rec(prime_counts, f, 1, omit_top, f, 1);
}

/// B(n) for every monic n of degree <= D, stored densely in enumeration order.
class DirichletTable {
 public:
  DirichletTable(std::string ext_name, FieldSpec f, int max_degree, std::vector<std::int64_t> values)
      : ext_name_(std::move(ext_name)), f_(std::move(f)), max_degree_(max_degree), b_(std::move(values)) {
    if (b_.size() != monic_count_upto(f_, max_degree_)) throw InternalError("zeta", "table size mismatch");
  }

  const std::string& ext_name() const { return ext_name_; }
  const FieldSpec& field() const { return f_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return b_.size(); }
  const std::vector<std::int64_t>& values() const { return b_; }
  std::int64_t at_index(std::uint64_t i) const { return b_.at(i); }
  std::int64_t at(const MonicPoly& n) const {
    if (n.degree() > max_degree_) throw DomainError("zeta", "degree of " + n.to_string() + " exceeds table bound");
    return b_[monic_index(n)];
  }
  /// B(n) reduced into [0, p): the Goss coefficient.
  std::int64_t residue_at_index(std::uint64_t i) const {
    const auto p = static_cast<std::int64_t>(f_.p());
    return ((b_.at(i) % p) + p) % p;
  }
  /// Copy with one entry replaced.
  DirichletTable with_value(const MonicPoly& n, std::int64_t v) const {
    DirichletTable t = *this;
    t.b_.at(monic_index(n)) = v;
    return t;
  }

 private:
  std::string ext_name_;
  FieldSpec f_;
  int max_degree_;
  std::vector<std::int64_t> b_;
};

/// Multiplies the Euler factors sum_k c_k(p) p^k over all primes of degree <= D.
inline DirichletTable dirichlet_table(const ExtensionSpec& ext, int max_degree) {
  if (max_degree < 0) throw DomainError("zeta", "degree bound must be >= 0");
  const auto& f = ext.base;
  std::vector<std::int64_t> b(monic_count_upto(f, max_degree), 0);
  b[0] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    const std::uint64_t limit = monic_count_upto(f, max_degree - d);
    for (const auto& prime : enumerate_monic_irreducibles(f, d)) {
      const auto c = local_counts(splitting_type_unchecked(ext, prime), max_degree / d);
      // Descending order reads every old value before it can be overwritten:
      // writes land on strictly higher degrees.
      for (std::uint64_t idx = limit; idx-- > 0;) {
        const std::int64_t base = b[idx];
        if (base == 0) continue;
        Poly m = monic_from_index(f, idx).poly();
        for (int k = 1;; ++k) {
          m = m * prime.poly();
          if (m.degree() > max_degree) break;
          b[monic_index(m)] += c[static_cast<std::size_t>(k)] * base;
        }
      }
    }
  }
  return DirichletTable(ext.name, f, max_degree, std::move(b));
}

/// Coefficients a_d = sum_{deg n = d} B(n) of Z_K(u) relative to A.
struct WeilSeries {
  int max_degree = 0;
  std::vector<std::int64_t> a;

  std::string to_string() const {
    std::string out;
    for (std::size_t d = 0; d < a.size(); ++d) out += (d ? " " : "") + std::to_string(a[d]);
    return out;
  }
};

inline WeilSeries weil_series(const DirichletTable& t) {
  WeilSeries w{t.max_degree(), std::vector<std::int64_t>(static_cast<std::size_t>(t.max_degree()) + 1, 0)};
  std::uint64_t idx = 0;
  for (int d = 0; d <= t.max_degree(); ++d)
    for (std::uint64_t i = 0, n = checked_pow(t.field().q(), d); i < n; ++i) w.a[static_cast<std::size_t>(d)] += t.at_index(idx++);
  return w;
}

/// Degree-block sums of the Goss coefficients, sum_{deg n = d} B(n) mod p:
/// the coefficients of the Goss zeta function on the line s = (x, 0).
inline std::vector<std::int64_t> goss_block_sums(const DirichletTable& t) {
  const auto p = static_cast<std::int64_t>(t.field().p());
  std::vector<std::int64_t> out(static_cast<std::size_t>(t.max_degree()) + 1, 0);
  std::uint64_t idx = 0;
  for (int d = 0; d <= t.max_degree(); ++d)
    for (std::uint64_t i = 0, n = checked_pow(t.field().q(), d); i < n; ++i)
      out[static_cast<std::size_t>(d)] = (out[static_cast<std::size_t>(d)] + t.residue_at_index(idx++)) % p;
  return out;
}

/// Value of the Goss zeta function sum_n B(n) n^-s at an integer s, in
/// F_q((T^-1)) to precision prec.
///
/// For s >= 1 a monic of degree d contributes valuation >= d*s, so a table
/// complete to degree ceil(prec/s) certifies the result. For s <= 0 the degree
/// blocks sum_{deg n = d} B(n) n^|s| are polynomials; blocks 0..|s| are added
/// and the three following blocks must vanish, otherwise the evaluation is
/// rejected as non-terminating.
inline LaurentSeries goss_eval(const DirichletTable& t, int s, std::int64_t prec) {
  const auto& f = t.field();
  if (s >= 1) {
    const std::int64_t need = (prec + s - 1) / s;
    if (t.max_degree() < need)
      throw DomainError("zeta", "table bound " + std::to_string(t.max_degree()) + " too small for precision " +
                                    std::to_string(prec) + " at s=" + std::to_string(s) + " (need " + std::to_string(need) + ")");
    LaurentSeries sum = LaurentSeries::zero(f, prec);
    for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
      const auto r = t.residue_at_index(idx);
      if (r == 0) continue;
      const auto n = monic_from_index(f, idx);
      if (static_cast<std::int64_t>(n.degree()) * s > prec) continue;  // zero to this precision
      sum = sum + laurent_inv_pow(n, s, prec).scaled(f.from_int(r));
    }
    return sum;
  }
  const int e = -s;
  if (t.max_degree() < e + 3)
    throw DomainError("zeta", "evaluation at s=" + std::to_string(s) + " needs table bound >= " + std::to_string(e + 3));
  Poly total(f);
  std::uint64_t idx = 0;
  for (int d = 0; d <= e + 3; ++d) {
    Poly block(f);
    for (std::uint64_t i = 0, n = checked_pow(f.q(), d); i < n; ++i, ++idx) {
      const auto r = t.residue_at_index(idx);
      if (r == 0) continue;
      block = block + pow(monic_from_index(f, idx).poly(), static_cast<std::uint64_t>(e)).scaled(f.from_int(r));
    }
    if (d <= e) total = total + block;
    else if (!block.is_zero())
      throw DomainError("zeta", "non-terminating evaluation at s=" + std::to_string(s) + ": degree block " + std::to_string(d) +
                                    " is nonzero");
  }
  return LaurentSeries::from_poly(total, prec);
}

enum class ZetaKind { weil, goss, lifted };

inline std::string to_string(ZetaKind k) {
  switch (k) {
    case ZetaKind::weil: return "weil";
    case ZetaKind::goss: return "goss";
    case ZetaKind::lifted: return "lifted";
  }
  return "?";
}

inline ZetaKind parse_zeta_kind(const std::string& s) {
  if (s == "weil") return ZetaKind::weil;
  if (s == "goss") return ZetaKind::goss;
  if (s == "lifted") return ZetaKind::lifted;
  throw ParseError("zeta", "unknown zeta kind \"" + s + "\"");
}

/// Outcome of a coefficientwise comparison, valid up to the table bound only.
struct ZetaVerdict {
  ZetaKind kind = ZetaKind::weil;
  int bound = 0;
  bool equal = true;
  std::optional<MonicPoly> witness;  // goss / lifted
  int witness_degree = -1;           // weil
  std::int64_t left = 0;
  std::int64_t right = 0;

  /// "EQUAL bound=D", "DIFFER n=<poly> left=<int> right=<int>" or, for the
  /// Weil series, "DIFFER d=<degree> left=<int> right=<int>".
  std::string to_string() const {
    if (equal) return "EQUAL bound=" + std::to_string(bound);
    const std::string where = witness ? "n=" + witness->to_string() : "d=" + std::to_string(witness_degree);
    return "DIFFER " + where + " left=" + std::to_string(left) + " right=" + std::to_string(right);
  }
};

/// weil: a_d for d <= D; goss: B(n) mod p; lifted: B(n) as integers, or their
/// images in W_N(F_p) = Z/p^N when witt_length N > 0. Reports the first
/// difference in enumeration order.
inline ZetaVerdict compare_zeta(const DirichletTable& k, const DirichletTable& l, ZetaKind kind, int witt_length = 0) {
  if (!(k.field() == l.field())) throw DomainError("zeta", "tables over different base fields");
  if (k.max_degree() != l.max_degree()) throw DomainError("zeta", "tables with different degree bounds");
  ZetaVerdict v;
  v.kind = kind;
  v.bound = k.max_degree();
  if (kind == ZetaKind::weil) {
    const auto wk = weil_series(k);
    const auto wl = weil_series(l);
    for (std::size_t d = 0; d < wk.a.size(); ++d) {
      if (wk.a[d] != wl.a[d]) {
        v.equal = false;
        v.witness_degree = static_cast<int>(d);
        v.left = wk.a[d];
        v.right = wl.a[d];
        return v;
      }
    }
    return v;
  }
  if (witt_length < 0) throw DomainError("zeta", "Witt length must be >= 0");
  std::int64_t modulus = 0;
  if (kind == ZetaKind::goss) modulus = static_cast<std::int64_t>(k.field().p());
  else if (witt_length > 0) modulus = static_cast<std::int64_t>(checked_pow(k.field().p(), witt_length));
  auto read = [&](const DirichletTable& t, std::uint64_t idx) {
    return modulus ? ((t.at_index(idx) % modulus) + modulus) % modulus : t.at_index(idx);
  };
  for (std::uint64_t idx = 0; idx < k.size(); ++idx) {
    const auto a = read(k, idx);
    const auto b = read(l, idx);
    if (a != b) {
      v.equal = false;
      v.witness = monic_from_index(k.field(), idx);
      v.left = a;
      v.right = b;
      return v;
    }
  }
  return v;
}

/// Goss coefficients B(p^k) mod p for k = 0..kmax, read from the Euler factor
/// at p.
inline std::vector<std::int64_t> goss_prime_power_residues(const ExtensionSpec& ext, const MonicPoly& prime, int kmax) {
  auto c = local_counts(splitting_type(ext, prime), kmax);
  for (auto& x : c) x %= static_cast<std::int64_t>(ext.base.p());
  return c;
}

/// Inertia degrees at p (ramification indices reported as 1) recovered from the residues B(p^f) mod p, f = 0..n_ext.
/// Requires n_ext < p: then every prime count C(p^f) <= n_ext is known exactly
/// from its residue and the combinatorial identity can be peeled degree by
/// degree.
inline SplittingType reconstruct_splitting(const std::vector<std::int64_t>& residues, int n_ext, std::int64_t p,
                                              const MonicPoly& prime) {
  if (n_ext < 1) throw DomainError("zeta", "extension degree must be >= 1");
  if (n_ext >= p)
    throw DomainError("zeta", "reconstruction needs [K:F] < p, got [K:F]=" + std::to_string(n_ext) + ", p=" + std::to_string(p));
  if (static_cast<int>(residues.size()) <= n_ext)
    throw DomainError("zeta", "need residues B(p^f) for f = 0.." + std::to_string(n_ext));
  std::vector<std::int64_t> prime_counts(static_cast<std::size_t>(n_ext) + 1, 0);
  int weight = 0;
  std::vector<PrimeAbove> inertia;
  for (int f = 1; f <= n_ext; ++f) {
    const std::int64_t rest = ideal_count_from_prime_counts(prime_counts, f, true);
    const std::int64_t cf = (((residues[static_cast<std::size_t>(f)] - rest) % p) + p) % p;
    prime_counts[static_cast<std::size_t>(f)] = cf;
    weight += static_cast<int>(cf) * f;
    for (std::int64_t i = 0; i < cf; ++i) inertia.push_back({1, f});
  }
  // Ramified primes contribute e_i f_i > f_i, so only an upper bound holds.
  if (weight > n_ext || weight == 0)
    throw DomainError("zeta", "inconsistent Goss coefficients at " + prime.to_string() + ": sum f*C(p^f) = " +
                                  std::to_string(weight) + " for [K:F] = " + std::to_string(n_ext));
  return SplittingType(std::move(inertia));
}

struct PGaloisResult {
  bool holds = true;
  std::optional<MonicPoly> witness;
  std::int64_t residue = 0;
};

/// Checks B(n) = 1 mod p when n is an order_g-th power of a monic and
/// B(n) = 0 mod p otherwise, for every n in the table; i.e. that the Goss zeta
/// function agrees with that of F at order_g * s.
inline PGaloisResult pgalois_check(const DirichletTable& t, int order_g) {
  if (order_g < 1) throw DomainError("zeta", "group order must be >= 1");
  const auto& f = t.field();
  std::vector<bool> is_power(t.size(), false);
  for (std::uint64_t idx = 0; idx < monic_count_upto(f, t.max_degree() / order_g); ++idx)
    is_power[monic_index(pow(monic_from_index(f, idx).poly(), static_cast<std::uint64_t>(order_g)))] = true;
  for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
    const auto r = t.residue_at_index(idx);
    if (r != (is_power[idx] ? 1 : 0)) return {false, monic_from_index(f, idx), r};
  }
  return {};
}

/// Writes "# dirichlet-table p=.. m=.. D=.. ext=<name>" followed by one
/// "<poly> <B(n)>" line per monic in enumeration order.
inline void dump_table(const DirichletTable& t, std::ostream& out) {
  out << "# dirichlet-table p=" << t.field().p() << " m=" << t.field().m() << " D=" << t.max_degree() << " ext=" << t.ext_name()
      << "\n";
  for (std::uint64_t idx = 0; idx < t.size(); ++idx)
    out << monic_from_index(t.field(), idx).to_string() << " " << t.at_index(idx) << "\n";
}

inline DirichletTable load_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("zeta", "empty table dump");
  static const std::regex header_re(R"(# dirichlet-table p=(\d+) m=(\d+) D=(\d+) ext=(.*))");
  std::smatch mt;
  if (!std::regex_match(header, mt, header_re)) throw ParseError("zeta", "bad table header \"" + header + "\"");
  const auto f = gf_create(std::stoll(mt[1]), std::stoi(mt[2]));
  const int d = std::stoi(mt[3]);
  const std::string name = mt[4];
  std::vector<std::int64_t> b;
  const auto total = monic_count_upto(f, d);
  std::string line;
  while (b.size() < total && std::getline(in, line)) {
    const auto sp = line.find_last_of(' ');
    if (sp == std::string::npos) throw ParseError("zeta", "bad table line \"" + line + "\"");
    const auto n = parse_monic(f, line.substr(0, sp));
    if (monic_index(n) != b.size()) throw ParseError("zeta", "table line out of order: \"" + line + "\"");
    try {
      b.push_back(std::stoll(line.substr(sp + 1)));
    } catch (const std::exception&) {
      throw ParseError("zeta", "bad count in \"" + line + "\"");
    }
  }
  if (b.size() != total) throw ParseError("zeta", "truncated table dump");
  return DirichletTable(name, f, d, std::move(b));
}

}  // namespace ffz
