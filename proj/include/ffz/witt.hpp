#pragma once

// Truncated p-typical Witt vectors over characteristic-p coefficient rings,
// Teichmuller lifts, and the lifted Goss zeta function.

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "laurent.hpp"
#include "zeta.hpp"

namespace ffz {

/// Polynomial with integer coefficients in X_0..X_{N-1}, Y_0..Y_{N-1}. An
/// exponent vector lists the X exponents first, then the Y exponents.
class IntMPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using Coeff = __int128;

  IntMPoly() = default;
  explicit IntMPoly(int vars) : vars_(vars) {}

  static IntMPoly constant(int vars, Coeff c) {
    IntMPoly r(vars);
    if (c != 0) r.terms_[Exponents(static_cast<std::size_t>(vars), 0)] = c;
    return r;
  }
  static IntMPoly variable(int vars, int index) {
    IntMPoly r(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    r.terms_[e] = 1;
    return r;
  }

  int vars() const { return vars_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  friend IntMPoly operator+(const IntMPoly& a, const IntMPoly& b) { return a.combine(b, 1); }
  friend IntMPoly operator-(const IntMPoly& a, const IntMPoly& b) { return a.combine(b, -1); }
  friend IntMPoly operator*(const IntMPoly& a, const IntMPoly& b) {
    IntMPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.accumulate(e, checked_mul(ca, cb));
      }
    }
    return r;
  }
  IntMPoly scaled(Coeff k) const {
    IntMPoly r(vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = checked_mul(c, k);
    return r;
  }
  IntMPoly pow(std::uint64_t e) const {
    IntMPoly result = constant(vars_, 1);
    IntMPoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }
  /// Exact division by an integer; throws if some coefficient is not divisible.
  IntMPoly divided_exactly(Coeff k) const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (c % k != 0) throw InternalError("witt", "inexact division in structure polynomial recursion");
      r.terms_[e] = c / k;
    }
    return r;
  }

  friend bool operator==(const IntMPoly&, const IntMPoly&) = default;

 private:
  static Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("witt", "structure polynomial coefficients overflow");
    return r;
  }
  void accumulate(const Exponents& e, Coeff c) {
    auto [it, fresh] = terms_.try_emplace(e, 0);
    if (__builtin_add_overflow(it->second, c, &it->second))
      throw DomainError("witt", "structure polynomial coefficients overflow");
    if (it->second == 0) terms_.erase(it);
  }
  IntMPoly combine(const IntMPoly& b, int sign) const {
    IntMPoly r = *this;
    for (const auto& [e, c] : b.terms_) r.accumulate(e, sign > 0 ? c : -c);
    return r;
  }

  int vars_ = 0;
  std::map<Exponents, Coeff> terms_;
};

/// The universal addition and multiplication polynomials S_n, P_n of W_N.
struct StructurePolys {
  int p = 0;
  int length = 0;
  std::vector<IntMPoly> sum;
  std::vector<IntMPoly> product;

  /// Ghost component w_n(Z_0..Z_n) = sum_i p^i Z_i^(p^(n-i)) of the given
  /// components.
  static IntMPoly ghost(const std::vector<IntMPoly>& z, int p, int n) {
    IntMPoly w(z.front().vars());
    IntMPoly::Coeff pi = 1;
    for (int i = 0; i <= n; ++i, pi *= p) {
      std::uint64_t e = 1;
      for (int k = 0; k < n - i; ++k) e *= static_cast<std::uint64_t>(p);
      w = w + z[static_cast<std::size_t>(i)].pow(e).scaled(pi);
    }
    return w;
  }
};

inline constexpr int kMaxWittLength = 4;
inline constexpr std::int64_t kMaxWittTopExponent = 27;  // bound on p^(N-1)

namespace detail {

inline StructurePolys build_structure_polys(int p, int n_len) {
  const int vars = 2 * n_len;
  std::vector<IntMPoly> x, y;
  for (int i = 0; i < n_len; ++i) {
    x.push_back(IntMPoly::variable(vars, i));
    y.push_back(IntMPoly::variable(vars, n_len + i));
  }
  StructurePolys sp{p, n_len, {}, {}};
  IntMPoly::Coeff pn = 1;
  for (int n = 0; n < n_len; ++n, pn *= p) {
    const auto wx = StructurePolys::ghost(x, p, n);
    const auto wy = StructurePolys::ghost(y, p, n);
    // Ghost of the partial result without its last component.
    sp.sum.push_back(IntMPoly(vars));
    sp.product.push_back(IntMPoly(vars));
    const auto lower_s = StructurePolys::ghost(sp.sum, p, n);
    const auto lower_p = StructurePolys::ghost(sp.product, p, n);
    sp.sum.back() = (wx + wy - lower_s).divided_exactly(pn);
    sp.product.back() = (wx * wy - lower_p).divided_exactly(pn);
  }
  return sp;
}

}  // namespace detail

/// Cached structure polynomials. Feasible for N <= 4 with p^(N-1) <= 27.
inline std::shared_ptr<const StructurePolys> witt_structure_polys(int p, int length) {
  if (!is_prime(p)) throw DomainError("witt", "p = " + std::to_string(p) + " is not prime");
  if (length < 1) throw DomainError("witt", "Witt length must be >= 1");
  std::int64_t top = 1;
  for (int i = 1; i < length && top <= kMaxWittTopExponent; ++i) top *= p;
  if (length > kMaxWittLength || top > kMaxWittTopExponent)
    throw DomainError("witt", "structure polynomials for p=" + std::to_string(p) + ", N=" + std::to_string(length) +
                                  " are out of range (need N <= " + std::to_string(kMaxWittLength) + " and p^(N-1) <= " +
                                  std::to_string(kMaxWittTopExponent) + ")");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const StructurePolys>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, length}];
  if (!slot) slot = std::make_shared<const StructurePolys>(detail::build_structure_polys(p, length));
  return slot;
}

/// Commutative coefficient ring of characteristic p.
template <class R>
concept WittCoefficientRing = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.from_int(std::int64_t{}) } -> std::convertible_to<typename R::Element>;
  { r.characteristic() } -> std::convertible_to<int>;
  { r.format(a) } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

/// F_q((T^-1)) truncated at a fixed precision.
struct LaurentRing {
  using Element = LaurentSeries;
  FieldSpec field;
  std::int64_t prec = 0;

  Element zero() const { return LaurentSeries::zero(field, prec); }
  Element one() const { return LaurentSeries::one(field, prec); }
  Element add(const Element& a, const Element& b) const { return (a + b).truncated(prec); }
  Element mul(const Element& a, const Element& b) const { return (a * b).truncated(prec); }
  Element from_int(std::int64_t k) const { return LaurentSeries::constant(field, field.from_int(k), prec); }
  int characteristic() const { return field.characteristic(); }
  std::string format(const Element& a) const { return a.to_string(); }
  friend bool operator==(const LaurentRing& a, const LaurentRing& b) { return a.field == b.field && a.prec == b.prec; }
};

template <WittCoefficientRing R>
struct WittVector {
  R ring;
  int length = 0;
  std::vector<typename R::Element> c;

  int p() const { return ring.characteristic(); }
  friend bool operator==(const WittVector& a, const WittVector& b) { return a.length == b.length && a.c == b.c; }

  /// "(c_0; c_1; ...; c_{N-1})"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "; " : "") + ring.format(c[i]);
    return out + ")";
  }
};

namespace detail {

template <WittCoefficientRing R>
typename R::Element eval_structure(const R& ring, const IntMPoly& poly, const std::vector<typename R::Element>& args) {
  using E = typename R::Element;
  const auto p = static_cast<IntMPoly::Coeff>(ring.characteristic());
  // powers[v][e] = args[v]^e, filled on demand
  std::vector<std::map<int, E>> powers(args.size());
  auto power = [&](std::size_t v, int e) -> E {
    auto& cache = powers[v];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    E r = ring.one();
    E base = args[v];
    for (int k = e; k > 0; k >>= 1) {
      if (k & 1) r = ring.mul(r, base);
      if (k > 1) base = ring.mul(base, base);
    }
    cache.emplace(e, r);
    return r;
  };
  E total = ring.zero();
  for (const auto& [exps, coeff] : poly.terms()) {
    const auto c = static_cast<std::int64_t>(((coeff % p) + p) % p);
    if (c == 0) continue;
    E term = ring.from_int(c);
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v]) term = ring.mul(term, power(v, exps[v]));
    total = ring.add(total, term);
  }
  return total;
}

template <WittCoefficientRing R>
void check_compatible(const WittVector<R>& a, const WittVector<R>& b) {
  if (a.length != b.length || !(a.ring == b.ring)) throw DomainError("witt", "Witt vectors with mismatched parameters");
}

template <WittCoefficientRing R>
WittVector<R> apply_structure(const WittVector<R>& a, const WittVector<R>& b, bool multiply) {
  check_compatible(a, b);
  const auto sp = witt_structure_polys(a.p(), a.length);
  std::vector<typename R::Element> args = a.c;
  args.insert(args.end(), b.c.begin(), b.c.end());
  WittVector<R> r{a.ring, a.length, {}};
  for (const auto& poly : multiply ? sp->product : sp->sum) r.c.push_back(eval_structure(a.ring, poly, args));
  return r;
}

}  // namespace detail

template <WittCoefficientRing R>
WittVector<R> witt_zero(const R& ring, int length) {
  witt_structure_polys(ring.characteristic(), length);
  return {ring, length, std::vector<typename R::Element>(static_cast<std::size_t>(length), ring.zero())};
}

/// chi(x) = (x, 0, ..., 0)
template <WittCoefficientRing R>
WittVector<R> teichmuller(const R& ring, const typename R::Element& x, int length) {
  auto r = witt_zero(ring, length);
  r.c[0] = x;
  return r;
}

template <WittCoefficientRing R>
WittVector<R> witt_one(const R& ring, int length) {
  return teichmuller(ring, ring.one(), length);
}

template <WittCoefficientRing R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
  return detail::apply_structure(a, b, false);
}

template <WittCoefficientRing R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b) {
  return detail::apply_structure(a, b, true);
}

/// Image of k under Z -> W_N(R). The ring has characteristic p, so p^N = 0 and
/// k is first reduced mod p^N; then double-and-add on the unit vector.
template <WittCoefficientRing R>
WittVector<R> int_to_witt(std::int64_t k, const R& ring, int length) {
  const std::int64_t p = ring.characteristic();
  std::int64_t pn = 1;
  for (int i = 0; i < length; ++i) pn *= p;
  std::int64_t r = ((k % pn) + pn) % pn;
  auto result = witt_zero(ring, length);
  auto base = witt_one(ring, length);
  while (r > 0) {
    if (r & 1) result = witt_add(result, base);
    r >>= 1;
    if (r > 0) base = witt_add(base, base);
  }
  return result;
}

/// sum_n B(n) chi(n^-s) in W_N(F_q((T^-1))) to precision prec.
///
/// For s >= 1 the table must reach degree ceil(prec/s). For s = 0 every term
/// is chi(1), so the value is the image of sum_d a_d with a_d the degree-d
/// block count; blocks from degree N*m on are required to vanish in
/// W_N = Z/p^N, with three of them inside the table as a guard.
inline WittVector<LaurentRing> lifted_goss_eval(const DirichletTable& t, int s, int length, std::int64_t prec) {
  const auto& f = t.field();
  const LaurentRing ring{f, prec};
  if (s < 0) throw DomainError("witt", "lifted Goss zeta is not evaluated at negative s");
  auto sum = witt_zero(ring, length);
  if (s == 0) {
    const int from = length * f.m();
    if (t.max_degree() < from + 2)
      throw DomainError("witt", "lifted evaluation at s=0 needs table bound >= " + std::to_string(from + 2));
    std::int64_t pn = 1;
    for (int i = 0; i < length; ++i) pn *= f.p();
    const auto a = weil_series(t).a;
    std::int64_t total = 0;
    for (std::size_t d = 0; d < a.size(); ++d) {
      if (static_cast<int>(d) >= from && a[d] % pn != 0)
        throw DomainError("witt", "non-terminating lifted evaluation at s=0: degree block " + std::to_string(d) +
                                      " is nonzero in W_" + std::to_string(length));
      total = (total + a[d]) % pn;
    }
    return int_to_witt(total, ring, length);
  }
  const std::int64_t need = (prec + s - 1) / s;
  if (t.max_degree() < need)
    throw DomainError("witt", "table bound " + std::to_string(t.max_degree()) + " too small for precision " +
                                  std::to_string(prec) + " at s=" + std::to_string(s) + " (need " + std::to_string(need) + ")");
  std::map<std::int64_t, WittVector<LaurentRing>> lifts;
  std::int64_t pn = 1;
  for (int i = 0; i < length; ++i) pn *= f.p();
  for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
    const auto b = ((t.at_index(idx) % pn) + pn) % pn;
    if (b == 0) continue;
    const auto n = monic_from_index(f, idx);
    if (static_cast<std::int64_t>(n.degree()) * s > prec) continue;
    auto it = lifts.find(b);
    if (it == lifts.end()) it = lifts.emplace(b, int_to_witt(b, ring, length)).first;
    sum = witt_add(sum, witt_mul(it->second, teichmuller(ring, laurent_inv_pow(n, s, prec), length)));
  }
  return sum;
}

}  // namespace ffz
