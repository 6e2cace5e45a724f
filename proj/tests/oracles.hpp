#pragma once

// Independent reference computations used to freeze expected values in tests.
// Nothing here calls into the library's algorithms; everything is brute force
// over plain integer vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using IntPoly = std::vector<std::int64_t>;  // low-to-high, coefficients mod p

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b, std::int64_t p) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] + b[i], p);
  trim(r);
  return r;
}

/// All monic polynomials of degree d over F_p (prime p).
inline std::vector<IntPoly> monics(std::int64_t p, int d) {
  std::vector<IntPoly> out;
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    IntPoly c(static_cast<std::size_t>(d) + 1, 0);
    std::int64_t t = idx;
    for (int i = 0; i < d; ++i, t /= p) c[static_cast<std::size_t>(i)] = t % p;
    c.back() = 1;
    out.push_back(c);
  }
  return out;
}

/// Irreducible over prime F_p iff it is not a product of two monics of
/// positive degree (checked by multiplying all pairs).
inline bool irreducible_brute(const IntPoly& f, std::int64_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int a = 1; a <= d / 2; ++a)
    for (const auto& u : monics(p, a))
      for (const auto& v : monics(p, d - a))
        if (mul(u, v, p) == f) return false;
  return true;
}

/// Smallest monic irreducible of degree m over F_p with coefficient vectors
/// compared low-to-high.
inline std::vector<std::uint32_t> smallest_irreducible_by_roots_or_brute(std::int64_t p, int m) {
  if (m == 1) return {0, 1};
  std::vector<IntPoly> all = monics(p, m);
  std::sort(all.begin(), all.end());  // lexicographic on c_0, c_1, ...
  for (const auto& f : all)
    if (irreducible_brute(f, p)) return {f.begin(), f.end()};
  return {};
}

inline int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Number of monic irreducibles of degree d over F_q.
inline std::size_t necklace(std::uint64_t q, int d) {
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= static_cast<std::int64_t>(q);
    total += mobius(e) * pw;
  }
  return static_cast<std::size_t>(total / d);
}

/// Number of solutions a_i >= 0 of sum a_i f_i = k, by direct enumeration.
inline std::int64_t count_solutions(const std::vector<int>& f, int k, std::size_t i = 0) {
  if (i == f.size()) return k == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (int a = 0; a * f[i] <= k; ++a) total += count_solutions(f, k - a * f[i], i + 1);
  return total;
}

/// Laurent expansion coefficients of 1/n in T^-1 over prime F_p for a monic n
/// of degree d: returns c[k] for T^-(d+k), k = 0..terms-1, by long division.
inline std::vector<std::int64_t> inverse_series(const IntPoly& n, std::int64_t p, int terms) {
  const int d = static_cast<int>(n.size()) - 1;
  // n = T^d (1 + a_1 T^-1 + ... + a_d T^-d), a_i = n[d-i].
  std::vector<std::int64_t> out(static_cast<std::size_t>(terms), 0);
  out[0] = 1;
  for (int k = 1; k < terms; ++k) {
    std::int64_t acc = 0;
    for (int i = 1; i <= std::min(k, d); ++i) acc += n[static_cast<std::size_t>(d - i)] * out[static_cast<std::size_t>(k - i)];
    out[static_cast<std::size_t>(k)] = mod(-acc, p);
  }
  return out;
}

/// Remainder of a modulo a monic b over prime F_p.
inline IntPoly rem(IntPoly a, const IntPoly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::int64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

inline IntPoly powmod(IntPoly a, std::uint64_t e, const IntPoly& m, std::int64_t p) {
  IntPoly r{1};
  a = rem(a, m, p);
  while (e > 0) {
    if (e & 1U) r = rem(mul(r, a, p), m, p);
    a = rem(mul(a, a, p), m, p);
    e >>= 1U;
  }
  return rem(r, m, p);
}

/// Evaluates a at the integer point x over F_p.
inline std::int64_t eval(const IntPoly& a, std::int64_t x, std::int64_t p) {
  std::int64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = mod(r * x + a[i], p);
  return r;
}

/// Brute-force irreducibles of degree d, memoized.
inline const std::vector<IntPoly>& irreducibles(std::int64_t p, int d) {
  static std::map<std::pair<std::int64_t, int>, std::vector<IntPoly>> cache;
  auto [it, fresh] = cache.try_emplace({p, d});
  if (fresh)
    for (const auto& f : monics(p, d))
      if (irreducible_brute(f, p)) it->second.push_back(f);
  return it->second;
}

/// Prime factorization of a monic n over prime F_p by trial division with
/// brute-force irreducibles: pairs (prime, exponent).
inline std::vector<std::pair<IntPoly, int>> factor(IntPoly n, std::int64_t p) {
  std::vector<std::pair<IntPoly, int>> out;
  for (int d = 1; static_cast<int>(n.size()) - 1 >= d; ++d) {
    for (const auto& pr : irreducibles(p, d)) {
      int e = 0;
      while (static_cast<int>(n.size()) - 1 >= d && rem(n, pr, p).empty()) {
        // exact division by repeated subtraction of shifted multiples
        IntPoly q(n.size() - pr.size() + 1, 0), r = n;
        for (std::size_t k = q.size(); k-- > 0;) {
          const std::int64_t c = r[k + pr.size() - 1];
          q[k] = c;
          for (std::size_t i = 0; i < pr.size(); ++i) r[k + i] = mod(r[k + i] - c * pr[i], p);
        }
        n = q;
        ++e;
      }
      if (e) out.push_back({pr, e});
    }
  }
  return out;
}

/// Inertia degrees of X^2 - c at a prime pr of degree d (p odd): Euler's
/// criterion in F_{p^d}. Empty when pr divides c (ramified).
inline std::vector<int> kummer_inertia(const IntPoly& c, const IntPoly& pr, std::int64_t p) {
  if (rem(c, pr, p).empty()) return {};
  std::uint64_t order = 1;
  for (std::size_t i = 1; i < pr.size(); ++i) order *= static_cast<std::uint64_t>(p);
  const auto e = powmod(c, (order - 1) / 2, pr, p);
  return e == IntPoly{1} ? std::vector<int>{1, 1} : std::vector<int>{2};
}

/// Inertia degrees of X^p - X - a at pr: p split primes if the absolute trace
/// of a mod pr vanishes, one inert prime of degree p otherwise.
inline std::vector<int> artin_schreier_inertia(const IntPoly& a, const IntPoly& pr, std::int64_t p) {
  const int d = static_cast<int>(pr.size()) - 1;
  IntPoly tr, x = rem(a, pr, p);
  for (int i = 0; i < d; ++i) {
    tr = add(tr, x, p);
    x = powmod(x, static_cast<std::uint64_t>(p), pr, p);
  }
  tr = rem(tr, pr, p);
  if (tr.empty()) return std::vector<int>(static_cast<std::size_t>(p), 1);
  return {static_cast<int>(p)};
}

/// Number of ideals of norm n: product over p^k || n of the number of
/// solutions of sum a_i f_i = k. `inertia(pr)` lists f_i at pr; an empty list
/// means a single totally ramified prime with f = 1.
template <class Inertia>
std::int64_t ideal_count(const IntPoly& n, std::int64_t p, Inertia inertia) {
  std::int64_t b = 1;
  for (const auto& [pr, k] : factor(n, p)) {
    auto fs = inertia(pr);
    if (fs.empty()) fs = {1};
    b *= count_solutions(fs, k);
  }
  return b;
}

/// Determinant of a matrix of polynomials by the Leibniz formula.
inline IntPoly leibniz_det(const std::vector<std::vector<IntPoly>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    IntPoly term{inversions % 2 ? p - 1 : 1};
    for (std::size_t i = 0; i < n && !term.empty(); ++i) term = mul(term, m[i][perm[i]], p);
    total = add(total, term, p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Sylvester matrix of a and b, both given as coefficient lists in X (low to
/// high) with entries in F_p[T].
inline std::vector<std::vector<IntPoly>> sylvester(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
  return m;
}

/// Witt components of the integer k in W_N(F_p): integers a_i with ghost
/// components w_n(a) = k for every n, solved one at a time and reduced mod p.
inline std::vector<std::int64_t> witt_digits_of_integer(std::int64_t k, std::int64_t p, int length) {
  std::vector<__int128> a;
  __int128 pn = 1;
  for (int n = 0; n < length; ++n, pn *= p) {
    __int128 w = 0, pi = 1;
    for (int i = 0; i < n; ++i, pi *= p) {
      __int128 term = 1;
      std::int64_t e = 1;
      for (int j = 0; j < n - i; ++j) e *= p;
      for (std::int64_t j = 0; j < e; ++j) term *= a[static_cast<std::size_t>(i)];
      w += pi * term;
    }
    a.push_back((k - w) / pn);
  }
  std::vector<std::int64_t> out;
  for (auto x : a) out.push_back(static_cast<std::int64_t>(((x % p) + p) % p));
  return out;
}

}  // namespace oracle
