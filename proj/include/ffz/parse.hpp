#pragma once

// Text grammar for polynomials over F_q in T (and optionally X).
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' integer]
//   primary := integer | 'T' | 'X' | 'g' | '(' expr ')'
//
// Integers are reduced mod p; g is the class of the modulus variable of F_q
// (m > 1 only). Whitespace is ignored.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"

namespace ffz {

/// Polynomial in A[X]: entry i is the coefficient of X^i.
using BiPoly = std::vector<Poly>;

namespace detail {

inline void bi_trim(BiPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline BiPoly bi_add(const FieldSpec& f, const BiPoly& a, const BiPoly& b, bool subtract) {
  BiPoly r(std::max(a.size(), b.size()), Poly(f));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = subtract ? r[i] - b[i] : r[i] + b[i];
  bi_trim(r);
  return r;
}

inline BiPoly bi_mul(const FieldSpec& f, const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  BiPoly r(a.size() + b.size() - 1, Poly(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  bi_trim(r);
  return r;
}

class PolyParser {
 public:
  PolyParser(const FieldSpec& f, std::string_view text) : f_(f) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  BiPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    auto r = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("fq-arith", msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool starts_primary() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'T' || c == 'X' || c == 'g' || c == '(';
  }

  BiPoly expr() {
    bool negate = false;
    if (at('+') || at('-')) negate = s_[pos_++] == '-';
    BiPoly acc = term();
    if (negate) acc = bi_add(f_, {}, acc, true);
    while (at('+') || at('-')) {
      const bool sub = s_[pos_++] == '-';
      acc = bi_add(f_, acc, term(), sub);
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = bi_mul(f_, acc, factor());
      } else if (starts_primary()) {
        acc = bi_mul(f_, acc, factor());
      } else {
        return acc;
      }
    }
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (!at('^')) return base;
    ++pos_;
    const auto e = integer();
    BiPoly r{Poly::one(f_)};
    for (std::int64_t i = 0; i < e; ++i) r = bi_mul(f_, r, base);
    return r;
  }

  std::int64_t integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::int64_t{1} << 50)) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  BiPoly primary() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = f_.from_int(integer());
      if (f_.is_zero(v)) return {};
      return {Poly::constant(f_, v)};
    }
    if (c == 'T') {
      ++pos_;
      return {Poly::t(f_)};
    }
    if (c == 'X') {
      ++pos_;
      return {Poly(f_), Poly::one(f_)};
    }
    if (c == 'g') {
      ++pos_;
      if (f_.m() == 1) fail("g is only defined for m > 1");
      return {Poly::constant(f_, f_.generator())};
    }
    if (c == '(') {
      ++pos_;
      auto r = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const FieldSpec& f_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in T and X.
inline BiPoly parse_bipoly(const FieldSpec& f, std::string_view text) {
  return detail::PolyParser(f, text).parse();
}

/// Parses an element of A = F_q[T]; X is rejected.
inline Poly parse_poly(const FieldSpec& f, std::string_view text) {
  auto bi = parse_bipoly(f, text);
  if (bi.size() > 1) throw ParseError("fq-arith", "unexpected X in \"" + std::string(text) + "\"");
  return bi.empty() ? Poly(f) : bi[0];
}

inline MonicPoly parse_monic(const FieldSpec& f, std::string_view text) { return MonicPoly(parse_poly(f, text)); }

/// Renders a polynomial in A[X], e.g. "X^3 + 2*X + 2*T".
inline std::string format_bipoly(const BiPoly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const Poly& c = a[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool single_term =
        std::count_if(c.coeffs().begin(), c.coeffs().end(), [&](FqElement e) { return !c.field().is_zero(e); }) == 1;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!(c.degree() == 0 && c.leading() == c.field().one())) out += (single_term ? cs : "(" + cs + ")") + "*";
    out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ffz
