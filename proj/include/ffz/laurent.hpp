#pragma once

// Truncated Laurent series in T^-1, i.e. elements of F_q((T^-1)) known to a
// finite precision.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"

namespace ffz {

/// sum_k c_k T^-k, known modulo T^-(prec+1). Exponents are written as powers
/// of T^-1, so the polynomial T^2 has valuation -2.
///
/// Every operation propagates precision conservatively: sums keep the minimum
/// of the operand precisions; a product a*b is known to
/// min(prec(a) + val(b), prec(b) + val(a)). A series that is zero to its
/// precision has valuation prec+1.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries zero(const FieldSpec& f, std::int64_t prec) {
    LaurentSeries s;
    s.f_ = f;
    s.prec_ = prec;
    s.start_ = prec + 1;
    return s;
  }
  /// c * T^-k
  static LaurentSeries monomial(const FieldSpec& f, FqElement c, std::int64_t k, std::int64_t prec) {
    LaurentSeries s = zero(f, prec);
    if (k > prec || f.is_zero(c)) return s;
    s.start_ = k;
    s.c_.assign(static_cast<std::size_t>(prec - k + 1), f.zero());
    s.c_[0] = c;
    return s;
  }
  static LaurentSeries constant(const FieldSpec& f, FqElement c, std::int64_t prec) { return monomial(f, c, 0, prec); }
  static LaurentSeries one(const FieldSpec& f, std::int64_t prec) { return constant(f, f.one(), prec); }
  /// A polynomial of A viewed in F_infinity, truncated to precision prec.
  static LaurentSeries from_poly(const Poly& a, std::int64_t prec) {
    LaurentSeries s = zero(a.field(), prec);
    if (a.is_zero()) return s;
    const std::int64_t v = -a.degree();
    if (v > prec) return s;
    s.start_ = v;
    s.c_.assign(static_cast<std::size_t>(prec - v + 1), a.field().zero());
    for (std::int64_t k = v; k <= std::min<std::int64_t>(prec, 0); ++k) s.c_[static_cast<std::size_t>(k - v)] = a.coeff(static_cast<int>(-k));
    return s;
  }

  const FieldSpec& field() const { return f_; }
  std::int64_t precision() const { return prec_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t valuation() const { return start_; }
  /// Coefficient of T^-k; k must not exceed the precision.
  FqElement coeff(std::int64_t k) const {
    if (k > prec_) throw DomainError("fq-arith", "coefficient beyond known precision");
    if (k < start_) return f_.zero();
    return c_[static_cast<std::size_t>(k - start_)];
  }

  LaurentSeries truncated(std::int64_t prec) const {
    if (prec >= prec_) return *this;
    LaurentSeries s = zero(f_, prec);
    for (std::int64_t k = start_; k <= prec; ++k) s.set(k, coeff(k));
    s.normalize();
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a.combine(b, true); }
  LaurentSeries operator-() const { return zero(f_, prec_) - *this; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const std::int64_t prec = std::min(a.prec_ + b.valuation(), b.prec_ + a.valuation());
    LaurentSeries r = zero(a.f_, prec);
    if (a.is_zero() || b.is_zero()) return r;
    const std::int64_t v = a.start_ + b.start_;
    if (v > prec) return r;
    const auto& f = a.f_;
    r.start_ = v;
    r.c_.assign(static_cast<std::size_t>(prec - v + 1), f.zero());
    for (std::size_t i = 0; i < a.c_.size() && i < r.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      const std::size_t jmax = std::min(b.c_.size(), r.c_.size() - i);
      for (std::size_t j = 0; j < jmax; ++j)
        r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    r.normalize();
    return r;
  }

  LaurentSeries scaled(FqElement k) const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = f_.mul(c, k);
    r.normalize();
    return r;
  }

  /// Multiplicative inverse; keeps the relative precision prec - val.
  LaurentSeries inverse() const {
    if (is_zero()) throw DomainError("fq-arith", "inverse of a series that is zero to precision");
    const std::int64_t rel = prec_ - start_;
    LaurentSeries r = zero(f_, -start_ + rel);
    r.start_ = -start_;
    r.c_.assign(static_cast<std::size_t>(rel + 1), f_.zero());
    const auto lead_inv = f_.inv(c_[0]);
    r.c_[0] = lead_inv;
    for (std::size_t k = 1; k < r.c_.size(); ++k) {
      FqElement acc = f_.zero();
      for (std::size_t i = 1; i <= k && i < c_.size(); ++i) acc = f_.add(acc, f_.mul(c_[i], r.c_[k - i]));
      r.c_[k] = f_.neg(f_.mul(acc, lead_inv));
    }
    return r;
  }

  LaurentSeries pow(std::uint64_t e) const {
    if (e == 0) return one(f_, prec_ - start_);
    std::optional<LaurentSeries> result;
    LaurentSeries base = *this;
    while (e > 0) {
      if (e & 1U) result = result ? *result * base : base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return *result;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.prec_ == b.prec_ && a.start_ == b.start_ && a.c_ == b.c_;
  }

  /// "a_v*T^-v + ... [prec M]"; the zero series prints as "0 [prec M]".
  std::string to_string() const {
    std::string out;
    for (std::int64_t k = start_; k <= prec_ && !c_.empty(); ++k) {
      const auto c = coeff(k);
      if (f_.is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += f_.format(c);
        continue;
      }
      if (c != f_.one()) out += f_.format(c) + "*";
      out += "T";
      if (k != -1) out += "^" + std::to_string(-k);
    }
    if (out.empty()) out = "0";
    return out + " [prec " + std::to_string(prec_) + "]";
  }

 private:
  void set(std::int64_t k, FqElement v) {
    if (c_.empty()) {
      start_ = k;
      c_.assign(static_cast<std::size_t>(prec_ - k + 1), f_.zero());
    } else if (k < start_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(start_ - k), f_.zero());
      start_ = k;
    }
    c_[static_cast<std::size_t>(k - start_)] = v;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && f_.is_zero(c_[lead])) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      start_ = prec_ + 1;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<std::int64_t>(lead);
  }

  LaurentSeries combine(const LaurentSeries& b, bool subtract) const {
    const std::int64_t prec = std::min(prec_, b.prec_);
    LaurentSeries r = zero(f_, prec);
    const std::int64_t lo = std::min(start_, b.start_);
    if (lo > prec) return r;
    r.start_ = lo;
    r.c_.assign(static_cast<std::size_t>(prec - lo + 1), f_.zero());
    for (std::int64_t k = lo; k <= prec; ++k) {
      const auto x = k >= start_ && k <= prec_ && !c_.empty() ? c_[static_cast<std::size_t>(k - start_)] : f_.zero();
      const auto y = k >= b.start_ && k <= b.prec_ && !b.c_.empty() ? b.c_[static_cast<std::size_t>(k - b.start_)] : f_.zero();
      r.c_[static_cast<std::size_t>(k - lo)] = subtract ? f_.sub(x, y) : f_.add(x, y);
    }
    r.normalize();
    return r;
  }

  FieldSpec f_;
  std::int64_t start_ = 1;
  std::int64_t prec_ = 0;
  std::vector<FqElement> c_;
};

/// n^-j for a monic n in A, as a series of valuation deg(n)*j known to
/// precision prec.
inline LaurentSeries laurent_inv_pow(const MonicPoly& n, int j, std::int64_t prec) {
  if (j < 1) throw DomainError("fq-arith", "laurent_inv_pow needs j >= 1");
  const std::int64_t d = n.degree();
  if (prec < d * j)
    throw DomainError("fq-arith", "precision " + std::to_string(prec) + " cannot hold T^-" + std::to_string(d * j));
  const std::int64_t rel = prec - d * j;
  const auto base = LaurentSeries::from_poly(n.poly(), -d + rel).inverse();
  LaurentSeries r = base;
  for (int i = 1; i < j; ++i) r = r * base;
  return r;
}

}  // namespace ffz
