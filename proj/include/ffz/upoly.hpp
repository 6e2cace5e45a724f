#pragma once

// Dense univariate polynomials over a runtime field context.
//
// A polynomial is a std::vector of coefficients, lowest degree first, with no
// trailing zeros; the zero polynomial is the empty vector. Every routine takes
// the field context explicitly so the same code serves F_q, residue fields
// F_q[T]/(p), and anything else modelling FieldContext.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ffz {

template <class F>
concept FieldContext = requires(const F& f, const typename F::Element& a,
                                const typename F::Element& b) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.add(a, b) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.characteristic() } -> std::convertible_to<int>;
  { a == b } -> std::convertible_to<bool>;
};

/// Exponentiation in a field context by square-and-multiply.
template <FieldContext F>
typename F::Element field_pow(const F& f, typename F::Element base, std::uint64_t e) {
  auto result = f.one();
  while (e > 0) {
    if (e & 1U) result = f.mul(result, base);
    e >>= 1U;
    if (e > 0) base = f.mul(base, base);
  }
  return result;
}

namespace upoly {

template <FieldContext F>
using Poly = std::vector<typename F::Element>;

template <FieldContext F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class P>
int degree(const P& a) {
  return static_cast<int>(a.size()) - 1;
}

template <FieldContext F>
Poly<F> constant(const F& f, const typename F::Element& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

/// The monomial X^k.
template <FieldContext F>
Poly<F> monomial(const F& f, int k) {
  Poly<F> r(static_cast<std::size_t>(k) + 1, f.zero());
  r.back() = f.one();
  return r;
}

template <FieldContext F>
bool is_one(const F& f, const Poly<F>& a) {
  return a.size() == 1 && a[0] == f.one();
}

template <FieldContext F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldContext F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldContext F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Element& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(f, r);
  return r;
}

template <FieldContext F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

/// Quotient and remainder; the divisor must be nonzero.
template <FieldContext F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw DomainError("fq-arith", "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> rem = a;
  Poly<F> quot(a.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (f.is_zero(rem[i])) continue;
    const auto c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b[j]));
  }
  trim(f, quot);
  trim(f, rem);
  return {std::move(quot), std::move(rem)};
}

template <FieldContext F>
Poly<F> rem(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw DomainError("fq-arith", "polynomial division by zero");
  if (a.size() < b.size()) return a;
  Poly<F> r = a;
  const auto lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    const auto c = f.mul(r[i], lead_inv);
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b[j]));
  }
  r.resize(db);
  trim(f, r);
  return r;
}

template <FieldContext F>
Poly<F> make_monic(const F& f, const Poly<F>& a) {
  if (a.empty() || a.back() == f.one()) return a;
  return scale(f, a, f.inv(a.back()));
}

/// Monic gcd (zero if both inputs are zero).
template <FieldContext F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

template <FieldContext F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> r(a.size() - 1, f.zero());
  const int p = f.characteristic();
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto k = static_cast<int>(i % static_cast<std::size_t>(p));
    auto c = f.zero();
    for (int t = 0; t < k; ++t) c = f.add(c, a[i]);
    r[i - 1] = c;
  }
  trim(f, r);
  return r;
}

/// base^e mod modulus.
template <FieldContext F>
Poly<F> powmod(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& modulus) {
  Poly<F> result = rem(f, constant(f, f.one()), modulus);
  base = rem(f, base, modulus);
  while (e > 0) {
    if (e & 1U) result = rem(f, mul(f, result, base), modulus);
    e >>= 1U;
    if (e > 0) base = rem(f, mul(f, base, base), modulus);
  }
  return result;
}

/// For a polynomial in X^p only, returns its p-th root (the inverse of Frobenius
/// on the coefficients is x -> x^(Q/p)).
template <FieldContext F>
Poly<F> pth_root(const F& f, const Poly<F>& a) {
  const auto p = static_cast<std::size_t>(f.characteristic());
  const std::uint64_t root_exp = f.order() / static_cast<std::uint64_t>(p);
  Poly<F> r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % p != 0) {
      if (!f.is_zero(a[i])) throw InternalError("fq-arith", "pth_root of a non-p-th power");
      continue;
    }
    r.push_back(field_pow(f, a[i], root_exp));
  }
  trim(f, r);
  return r;
}

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// a = prod g_i^i, each g_i squarefree and pairwise coprime.
template <FieldContext F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const F& f, const Poly<F>& a) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (degree(a) < 1) return out;
  auto c = gcd(f, a, derivative(f, a));
  auto w = divmod(f, a, c).first;
  int i = 1;
  while (degree(w) > 0) {
    auto y = gcd(f, w, c);
    auto factor = divmod(f, w, y).first;
    if (degree(factor) > 0) out.emplace_back(std::move(factor), i);
    w = std::move(y);
    c = divmod(f, c, w).first;
    ++i;
  }
  if (degree(c) > 0) {
    const int p = f.characteristic();
    for (auto& [g, j] : squarefree_decomposition(f, pth_root(f, c))) out.emplace_back(std::move(g), j * p);
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: the degree of
/// each irreducible factor, ascending.
template <FieldContext F>
std::vector<int> distinct_degrees(const F& f, Poly<F> a) {
  std::vector<int> degrees;
  const Poly<F> x = monomial(f, 1);
  Poly<F> h = rem(f, x, a);
  for (int d = 1; 2 * d <= degree(a); ++d) {
    h = powmod(f, h, f.order(), a);
    auto g = gcd(f, a, sub(f, h, x));
    if (degree(g) > 0) {
      for (int k = 0; k < degree(g) / d; ++k) degrees.push_back(d);
      a = divmod(f, a, g).first;
      h = rem(f, h, a);
    }
  }
  if (degree(a) > 0) degrees.push_back(degree(a));
  return degrees;
}

}  // namespace upoly

/// One irreducible factor, recorded by degree and multiplicity.
struct FactorDegree {
  int degree = 0;
  int multiplicity = 0;
  friend auto operator<=>(const FactorDegree&, const FactorDegree&) = default;
};

/// Degrees (with multiplicities) of the irreducible factors of a nonzero
/// polynomial, one entry per irreducible factor, sorted ascending. Computed by
/// squarefree decomposition followed by distinct-degree factorization; the
/// factors themselves are never split.
template <FieldContext F>
std::vector<FactorDegree> poly_factor_degrees(const F& f, const upoly::Poly<F>& g) {
  if (g.empty()) throw DomainError("fq-arith", "poly_factor_degrees of the zero polynomial");
  std::vector<FactorDegree> out;
  for (const auto& [part, mult] : upoly::squarefree_decomposition(f, upoly::make_monic(f, g))) {
    for (int d : upoly::distinct_degrees(f, part)) out.push_back({d, mult});
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <FieldContext F>
bool is_irreducible(const F& f, const upoly::Poly<F>& g) {
  if (upoly::degree(g) < 1) return false;
  const auto fd = poly_factor_degrees(f, g);
  return fd.size() == 1 && fd[0].multiplicity == 1;
}

}  // namespace ffz
