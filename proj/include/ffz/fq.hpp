#pragma once

// Finite fields F_q, the polynomial ring A = F_q[T], and residue fields A/(p).

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "upoly.hpp"

namespace ffz {

/// An element of F_q. The value encodes the coordinates over F_p in base p:
/// digit i is the coefficient of g^i, g the class of the modulus variable.
struct FqElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FqElement&, const FqElement&) = default;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// F_p on its own, used to search for the modulus of F_{p^m}.
struct PrimeFieldCtx {
  using Element = std::uint32_t;
  std::uint32_t p;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const { return (a + b) % p; }
  Element sub(Element a, Element b) const { return (a + p - b) % p; }
  Element neg(Element a) const { return (p - a) % p; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
  }
  Element inv(Element a) const {
    if (a == 0) throw DomainError("fq-arith", "inverse of zero");
    return field_pow(*this, a, p - 2);
  }
  bool is_zero(Element a) const { return a == 0; }
  std::uint64_t order() const { return p; }
  int characteristic() const { return static_cast<int>(p); }
};

struct FieldData {
  std::uint32_t p = 0;
  int m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // low-to-high, monic, degree m
  // m > 1 only: discrete log tables relative to a primitive element.
  std::vector<std::uint32_t> exp;  // exp[k] = w^k, k in [0, q-1)
  std::vector<std::uint32_t> log;  // log[x] for x != 0
  std::vector<std::uint32_t> pow_p;  // p^i
};

}  // namespace detail

/// Largest field size accepted by gf_create.
inline constexpr std::uint32_t kMaxFieldOrder = 1U << 20;

/// F_q with q = p^m, built on the lexicographically smallest monic irreducible
/// of degree m over F_p. Cheap to copy; elements are plain FqElement values.
class FieldSpec {
 public:
  using Element = FqElement;

  FieldSpec() = default;

  std::uint32_t p() const { return d_->p; }
  int m() const { return d_->m; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  bool valid() const { return d_ != nullptr; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Element from_int(std::int64_t k) const {
    const auto p = static_cast<std::int64_t>(d_->p);
    return {static_cast<std::uint32_t>(((k % p) + p) % p)};
  }
  /// The class g of the modulus variable (only meaningful for m > 1).
  Element generator() const {
    if (d_->m == 1) throw DomainError("fq-arith", "no generator symbol g in a prime field");
    return {d_->p};
  }

  Element add(Element a, Element b) const {
    if (d_->m == 1) return {(a.value + b.value) % d_->p};
    std::uint32_t r = 0;
    for (int i = d_->m; i-- > 0;) {
      const auto pi = d_->pow_p[static_cast<std::size_t>(i)];
      const auto da = (a.value / pi) % d_->p;
      const auto db = (b.value / pi) % d_->p;
      r = r * d_->p + (da + db) % d_->p;
    }
    return {r};
  }
  Element neg(Element a) const {
    if (d_->m == 1) return {(d_->p - a.value) % d_->p};
    std::uint32_t r = 0;
    for (int i = d_->m; i-- > 0;) {
      const auto da = (a.value / d_->pow_p[static_cast<std::size_t>(i)]) % d_->p;
      r = r * d_->p + (d_->p - da) % d_->p;
    }
    return {r};
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (d_->m == 1)
      return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % d_->p)};
    if (a.value == 0 || b.value == 0) return {0};
    const auto k = (d_->log[a.value] + d_->log[b.value]) % (d_->q - 1);
    return {d_->exp[k]};
  }
  Element inv(Element a) const {
    if (a.value == 0) throw DomainError("fq-arith", "inverse of zero");
    if (d_->m == 1) return field_pow(*this, a, d_->p - 2);
    return {d_->exp[(d_->q - 1 - d_->log[a.value]) % (d_->q - 1)]};
  }
  bool is_zero(Element a) const { return a.value == 0; }
  std::uint64_t order() const { return d_->q; }
  int characteristic() const { return static_cast<int>(d_->p); }

  /// F_p-coordinate of g^i in a.
  std::uint32_t digit(Element a, int i) const {
    return (a.value / d_->pow_p[static_cast<std::size_t>(i)]) % d_->p;
  }

  /// Integer for prime-field elements, otherwise "(c*g^i + ...)".
  std::string format(Element a) const {
    if (a.value < d_->p) return std::to_string(a.value);
    std::string out = "(";
    bool first = true;
    for (int i = d_->m; i-- > 0;) {
      const auto c = digit(a, i);
      if (c == 0) continue;
      if (!first) out += " + ";
      first = false;
      if (i == 0) {
        out += std::to_string(c);
        continue;
      }
      if (c != 1) out += std::to_string(c) + "*";
      out += "g";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out + ")";
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->m == b.d_->m;
  }

  friend FieldSpec gf_create(std::int64_t p, int m);

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Builds F_{p^m}. The modulus is the smallest monic irreducible of degree m
/// when coefficient vectors are compared low-to-high; for m = 1 it is X.
inline FieldSpec gf_create(std::int64_t p, int m) {
  if (!is_prime(p)) throw DomainError("fq-arith", "p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw DomainError("fq-arith", "m must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) throw DomainError("fq-arith", "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  auto d = std::make_shared<detail::FieldData>();
  d->p = static_cast<std::uint32_t>(p);
  d->m = m;
  d->q = static_cast<std::uint32_t>(q);
  d->pow_p.assign(static_cast<std::size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i) d->pow_p[static_cast<std::size_t>(i)] = d->pow_p[static_cast<std::size_t>(i) - 1] * d->p;

  const detail::PrimeFieldCtx fp{d->p};
  if (m == 1) {
    d->modulus = {0, 1};
    return FieldSpec(std::move(d));
  }

  // Candidates in lexicographic order with c_0 most significant.
  std::vector<std::uint32_t> low(static_cast<std::size_t>(m), 0);
  for (;;) {
    upoly::Poly<detail::PrimeFieldCtx> cand(low.begin(), low.end());
    cand.push_back(1);
    if (is_irreducible(fp, cand)) {
      d->modulus = std::move(cand);
      break;
    }
    int pos = m - 1;
    while (pos >= 0 && ++low[static_cast<std::size_t>(pos)] == d->p) low[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) throw InternalError("fq-arith", "no irreducible polynomial found");
  }

  // Multiplication through polynomial arithmetic, only while building tables.
  const auto to_poly = [&](std::uint32_t v) {
    upoly::Poly<detail::PrimeFieldCtx> r;
    for (int i = 0; i < m; ++i, v /= d->p) r.push_back(v % d->p);
    upoly::trim(fp, r);
    return r;
  };
  const auto from_poly = [&](const upoly::Poly<detail::PrimeFieldCtx>& a) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * d->p + a[i];
    return v;
  };
  const auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return from_poly(upoly::rem(fp, upoly::mul(fp, to_poly(a), to_poly(b)), d->modulus));
  };
  for (std::uint32_t w = 2; w < d->q; ++w) {
    std::vector<std::uint32_t> powers{1};
    std::uint32_t x = w;
    while (x != 1 && powers.size() < d->q) {
      powers.push_back(x);
      x = slow_mul(x, w);
    }
    if (powers.size() == d->q - 1) {
      d->exp = std::move(powers);
      break;
    }
  }
  if (d->exp.empty()) throw InternalError("fq-arith", "no primitive element found");
  d->log.assign(d->q, 0);
  for (std::uint32_t k = 0; k + 1 < d->q; ++k) d->log[d->exp[k]] = k;
  return FieldSpec(std::move(d));
}

/// An element of A = F_q[T] (or of F_q[X] when used as a fiber polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldSpec field) : field_(std::move(field)) {}
  Poly(FieldSpec field, std::vector<FqElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    upoly::trim(field_, c_);
  }

  static Poly constant(const FieldSpec& f, FqElement c) { return Poly(f, {c}); }
  static Poly one(const FieldSpec& f) { return constant(f, f.one()); }
  /// c * T^k
  static Poly monomial(const FieldSpec& f, int k, FqElement c) {
    std::vector<FqElement> v(static_cast<std::size_t>(k) + 1, f.zero());
    v.back() = c;
    return Poly(f, std::move(v));
  }
  static Poly t(const FieldSpec& f) { return monomial(f, 1, f.one()); }

  const FieldSpec& field() const { return field_; }
  const std::vector<FqElement>& coeffs() const { return c_; }
  int degree() const { return upoly::degree(c_); }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }
  FqElement coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : field_.zero();
  }
  FqElement leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Poly monic() const { return Poly(field_, upoly::make_monic(field_, c_)); }

  friend Poly operator+(const Poly& a, const Poly& b) { return {a.field_, upoly::add(a.field_, a.c_, b.c_)}; }
  friend Poly operator-(const Poly& a, const Poly& b) { return {a.field_, upoly::sub(a.field_, a.c_, b.c_)}; }
  friend Poly operator*(const Poly& a, const Poly& b) { return {a.field_, upoly::mul(a.field_, a.c_, b.c_)}; }
  Poly operator-() const { return Poly(field_) - *this; }
  Poly scaled(FqElement k) const { return {field_, upoly::scale(field_, c_, k)}; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Rendered as "T^2 + 2*T + 1" (the variable name is a parameter).
  std::string to_string(const std::string& var = "T") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto c = c_[static_cast<std::size_t>(i)];
      if (field_.is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      const bool unit = c == field_.one();
      if (i == 0) {
        out += field_.format(c);
        continue;
      }
      if (!unit) out += field_.format(c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  FieldSpec field_;
  std::vector<FqElement> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  auto [qt, r] = upoly::divmod(a.field(), a.coeffs(), b.coeffs());
  return {Poly(a.field(), std::move(qt)), Poly(a.field(), std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return {a.field(), upoly::rem(a.field(), a.coeffs(), b.coeffs())}; }

inline Poly gcd(const Poly& a, const Poly& b) { return {a.field(), upoly::gcd(a.field(), a.coeffs(), b.coeffs())}; }

inline Poly pow(Poly base, std::uint64_t e) {
  Poly result = Poly::one(base.field());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// A monic element of A. Degree 0 means the constant 1 (the unit ideal).
class MonicPoly {
 public:
  explicit MonicPoly(Poly p) : p_(std::move(p)) {
    if (!p_.is_monic()) throw DomainError("fq-arith", "polynomial " + p_.to_string() + " is not monic");
  }
  static MonicPoly one(const FieldSpec& f) { return MonicPoly(Poly::one(f)); }

  const Poly& poly() const { return p_; }
  operator const Poly&() const { return p_; }  // NOLINT(google-explicit-constructor)
  const FieldSpec& field() const { return p_.field(); }
  int degree() const { return p_.degree(); }
  std::string to_string() const { return p_.to_string(); }

  friend MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) { return MonicPoly(a.p_ * b.p_); }
  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.p_ == b.p_; }

 private:
  Poly p_;
};

/// q^d with an overflow check.
inline std::uint64_t checked_pow(std::uint64_t q, int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) throw DomainError("fq-arith", "size overflow in q^d");
    r *= q;
  }
  return r;
}

/// Number of monic polynomials of degree <= d.
inline std::uint64_t monic_count_upto(const FieldSpec& f, int d) {
  std::uint64_t total = 0;
  for (int k = 0; k <= d; ++k) total += checked_pow(f.q(), k);
  return total;
}

/// Position of a monic polynomial in enumeration order: by degree, then by the
/// non-leading coefficients read as base-q digits with the highest one most
/// significant.
inline std::uint64_t monic_index(const Poly& n) {
  const int d = n.degree();
  std::uint64_t idx = 0;
  for (int i = d - 1; i >= 0; --i) idx = idx * n.field().q() + n.coeff(i).value;
  return (d == 0 ? 0 : monic_count_upto(n.field(), d - 1)) + idx;
}

inline MonicPoly monic_from_index(const FieldSpec& f, std::uint64_t idx) {
  int d = 0;
  for (std::uint64_t block = 1; idx >= block; block *= f.q(), ++d) idx -= block;
  std::vector<FqElement> c(static_cast<std::size_t>(d) + 1, f.zero());
  for (int i = 0; i < d; ++i, idx /= f.q()) c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(idx % f.q())};
  c.back() = f.one();
  return MonicPoly(Poly(f, std::move(c)));
}

/// All q^d monic polynomials of degree d in enumeration order.
inline std::vector<MonicPoly> enumerate_monic(const FieldSpec& f, int d) {
  if (d < 0) throw DomainError("fq-arith", "negative degree");
  const std::uint64_t start = d == 0 ? 0 : monic_count_upto(f, d - 1);
  const std::uint64_t count = checked_pow(f.q(), d);
  std::vector<MonicPoly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(monic_from_index(f, start + i));
  return out;
}

inline bool is_irreducible(const Poly& g) { return is_irreducible(g.field(), g.coeffs()); }

inline std::vector<MonicPoly> enumerate_monic_irreducibles(const FieldSpec& f, int d) {
  if (d < 1) throw DomainError("fq-arith", "irreducibles need degree >= 1");
  std::vector<MonicPoly> out;
  for (auto& n : enumerate_monic(f, d))
    if (d == 1 || is_irreducible(n.poly())) out.push_back(std::move(n));
  return out;
}

/// The residue field A/(p) = F_{q^deg p} for a monic irreducible p.
class ResidueField {
 public:
  using Element = std::vector<FqElement>;

  explicit ResidueField(const MonicPoly& prime)
      : f_(prime.field()), mod_(prime.poly().coeffs()), order_(checked_pow(f_.q(), prime.degree())) {}

  const FieldSpec& base() const { return f_; }
  Element reduce(const Poly& a) const { return upoly::rem(f_, a.coeffs(), mod_); }

  Element zero() const { return {}; }
  Element one() const { return {f_.one()}; }
  Element add(const Element& a, const Element& b) const { return upoly::add(f_, a, b); }
  Element sub(const Element& a, const Element& b) const { return upoly::sub(f_, a, b); }
  Element neg(const Element& a) const { return upoly::sub(f_, Element{}, a); }
  Element mul(const Element& a, const Element& b) const { return upoly::rem(f_, upoly::mul(f_, a, b), mod_); }
  Element inv(const Element& a) const {
    if (a.empty()) throw DomainError("fq-arith", "inverse of zero");
    // Extended Euclid: track s with s*a == r mod p.
    Element r0 = mod_, r1 = a, s0{}, s1 = one();
    while (!r1.empty()) {
      auto [qt, r2] = upoly::divmod(f_, r0, r1);
      auto s2 = upoly::sub(f_, s0, upoly::mul(f_, qt, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    return upoly::rem(f_, upoly::scale(f_, s0, f_.inv(r0.back())), mod_);
  }
  bool is_zero(const Element& a) const { return a.empty(); }
  std::uint64_t order() const { return order_; }
  int characteristic() const { return f_.characteristic(); }

 private:
  FieldSpec f_;
  std::vector<FqElement> mod_;
  std::uint64_t order_;
};

}  // namespace ffz
