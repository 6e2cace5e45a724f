#pragma once

// Scripted scenarios with fixed parameters. Each returns a report of named
// checks; the command-line tool prints them and the acceptance run asserts on
// them.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "extension.hpp"
#include "fq.hpp"
#include "gassmann.hpp"
#include "witt.hpp"
#include "zeta.hpp"

namespace ffz {

struct DemoCheck {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct DemoReport {
  std::string name;
  std::vector<DemoCheck> checks;

  void check(std::string label, bool pass, std::string detail = {}) {
    checks.push_back({std::move(label), pass, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  std::string to_string() const {
    std::string out = "demo " + name + "\n";
    std::size_t ok = 0;
    for (const auto& c : checks) {
      ok += c.pass;
      out += std::string(c.pass ? "PASS" : "FAIL") + ": " + c.label;
      if (!c.detail.empty()) out += " -- " + c.detail;
      out += "\n";
    }
    out += "RESULT: " + std::string(passed() ? "PASS" : "FAIL") + " (" + std::to_string(ok) + "/" +
           std::to_string(checks.size()) + ")\n";
    return out;
  }
};

namespace demo_detail {

inline ExtensionSpec kummer(const FieldSpec& f, const std::string& c) { return builtin_extension(KummerSqrt{parse_poly(f, c)}, f); }
inline ExtensionSpec artin_schreier(const FieldSpec& f, int m) { return builtin_extension(ArtinSchreier{m}, f); }

/// trivial, two Kummer and two Artin-Schreier extensions
inline std::vector<ExtensionSpec> test_set() {
  const auto f3 = gf_create(3, 1);
  const auto f5 = gf_create(5, 1);
  return {trivial_extension(f3), kummer(f3, "T"), kummer(f5, "T*(T+1)"), artin_schreier(f3, 1), artin_schreier(f3, 2)};
}

inline std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

/// Inertia degrees with multiplicity agree at every prime of degree <= d.
inline bool same_inertia_to_degree(const ExtensionSpec& a, const ExtensionSpec& b, int d) {
  for (int k = 1; k <= d; ++k)
    for (const auto& pr : enumerate_monic_irreducibles(a.base, k))
      if (splitting_type(a, pr).inertia_degrees() != splitting_type(b, pr).inertia_degrees()) return false;
  return true;
}

}  // namespace demo_detail

inline DemoReport demo_malakie() {
  using namespace demo_detail;
  DemoReport r{"malakie", {}};
  const auto f3 = gf_create(3, 1);
  const auto k = kummer(f3, "T");
  const auto l = kummer(f3, "T+1");
  const auto tk = dirichlet_table(k, 6);
  const auto tl = dirichlet_table(l, 6);
  const auto weil = compare_zeta(tk, tl, ZetaKind::weil);
  r.check("Weil series of X^2 - T and X^2 - (T+1) agree for d <= 6", weil.equal, weil.to_string());
  const auto goss = compare_zeta(tk, tl, ZetaKind::goss);
  r.check("Goss tables differ at n = T (1 vs 2 mod 3)", goss.to_string() == "DIFFER n=T left=1 right=2", goss.to_string());
  const auto lifted = compare_zeta(tk, tl, ZetaKind::lifted);
  r.check("lifted tables differ at n = T (1 vs 2)", lifted.to_string() == "DIFFER n=T left=1 right=2", lifted.to_string());
  const auto g = klein4();
  const auto h1 = subgroup_generated(g, {Permutation::parse("(1 2)", 4)});
  const auto h2 = subgroup_generated(g, {Permutation::parse("(3 4)", 4)});
  const auto rep = gassmann_check(g, h1, h2);
  r.check("Klein four subgroups <(1 2)> and <(3 4)> are not Gassmann equivalent", !rep.equivalent,
          rep.equivalent ? "GASSMANN: yes" : "GASSMANN: no");
  return r;
}

inline DemoReport demo_pgalois() {
  using namespace demo_detail;
  DemoReport r{"pgalois", {}};
  const auto f3 = gf_create(3, 1);
  const auto t = dirichlet_table(artin_schreier(f3, 1), 6);
  const auto res = pgalois_check(t, 3);
  r.check("B(n) mod 3 is the cube indicator for all " + std::to_string(t.size()) + " monic n of degree <= 6", res.holds,
          res.holds ? "holds" : "witness " + res.witness->to_string());
  // The table of zeta_F(3s): one ideal of norm m^3 for every monic m.
  std::vector<std::int64_t> cubes(t.size(), 0);
  for (std::uint64_t i = 0; i < monic_count_upto(f3, 2); ++i) cubes[monic_index(pow(monic_from_index(f3, i).poly(), 3))] = 1;
  const DirichletTable sub("zeta_F(3s)", f3, 6, cubes);
  const auto v = compare_zeta(t, sub, ZetaKind::goss);
  r.check("Goss table equals the substituted table of zeta_F(3s)", v.equal, v.to_string());
  return r;
}

inline DemoReport demo_genus() {
  using namespace demo_detail;
  DemoReport r{"genus", {}};
  const auto f3 = gf_create(3, 1);
  const auto a = dirichlet_table(artin_schreier(f3, 1), 8);
  const auto b = dirichlet_table(artin_schreier(f3, 5), 8);
  const auto goss = compare_zeta(a, b, ZetaKind::goss);
  r.check("X^3 - X - T and X^3 - X - T^5: Goss tables equal for deg n <= 8", goss.equal, goss.to_string());
  const auto weil = compare_zeta(a, b, ZetaKind::weil);
  r.check("Weil coefficients differ at some d <= 8", !weil.equal, weil.to_string());
  return r;
}

inline DemoReport demo_gossrem() {
  using namespace demo_detail;
  DemoReport r{"gossrem", {}};
  for (const auto& ext : test_set()) {
    const auto t = dirichlet_table(ext, 6);
    const auto w = weil_series(t);
    const auto g = goss_block_sums(t);
    bool ok = true;
    std::string detail;
    for (std::size_t d = 0; d < w.a.size(); ++d) {
      const auto wd = w.a[d] % static_cast<std::int64_t>(ext.base.p());
      ok = ok && wd == g[d];
      detail += (d ? " " : "") + std::to_string(wd);
    }
    r.check(ext.name + " over F_" + std::to_string(ext.base.q()) + ": a_d mod p equals Goss block sums for d <= 6", ok,
            "a_d mod p = " + detail);
  }
  return r;
}

inline DemoReport demo_reconstruct() {
  using namespace demo_detail;
  DemoReport r{"reconstruct", {}};
  const auto f5 = gf_create(5, 1);
  auto cubic = parse_extension("[field] p=5\n[extension] name=cubic poly=X^3 - T\n[override] prime=T type=(3,1)\n");
  for (const auto& ext : {kummer(f5, "T*(T+1)"), cubic}) {
    const int n = ext.degree();
    const auto t = dirichlet_table(ext, 6);
    std::size_t primes = 0, agree = 0, cross = 0, cross_ok = 0;
    std::string first_bad;
    for (int d = 1; d <= 3; ++d) {
      for (const auto& pr : enumerate_monic_irreducibles(f5, d)) {
        ++primes;
        const auto res = goss_prime_power_residues(ext, pr, n);
        Poly pk = Poly::one(f5);
        for (int k = 0; k <= n && pk.degree() <= t.max_degree(); ++k, pk = pk * pr.poly()) {
          ++cross;
          cross_ok += res[static_cast<std::size_t>(k)] == t.residue_at_index(monic_index(pk));
        }
        const auto rec = reconstruct_splitting(res, n, 5, pr).inertia_degrees();
        const auto actual = splitting_type(ext, pr).inertia_degrees();
        if (rec == actual) ++agree;
        else if (first_bad.empty()) first_bad = pr.to_string() + ": " + join(rec) + " vs " + join(actual);
      }
    }
    r.check(ext.name + ": reconstructed inertia degrees match at all " + std::to_string(primes) + " primes of degree <= 3",
            agree == primes, first_bad.empty() ? std::to_string(agree) + "/" + std::to_string(primes) : first_bad);
    r.check(ext.name + ": Euler-factor residues agree with the table where it reaches", cross == cross_ok,
            std::to_string(cross_ok) + "/" + std::to_string(cross));
  }
  return r;
}

inline DemoReport demo_brr() {
  using namespace demo_detail;
  DemoReport r{"brr", {}};
  const auto f3 = gf_create(3, 1);
  const auto f5 = gf_create(5, 1);
  std::mt19937 rng(20240607);

  // Perturbations by p: invisible mod p, visible in W_2.
  const std::vector<ExtensionSpec> bases = {kummer(f3, "T"), artin_schreier(f3, 2), kummer(f5, "T*(T+1)"), trivial_extension(f5)};
  int perturb_ok = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& ext = bases[static_cast<std::size_t>(i) % bases.size()];
    const auto t = dirichlet_table(ext, 4);
    const auto n = monic_from_index(ext.base, 1 + rng() % (t.size() - 1));
    const auto bumped = t.with_value(n, t.at(n) + static_cast<std::int64_t>(ext.base.p()));
    const bool lifted_differ = !compare_zeta(t, bumped, ZetaKind::lifted, 2).equal;
    const bool goss_equal = compare_zeta(t, bumped, ZetaKind::goss).equal;
    perturb_ok += lifted_differ && goss_equal;
  }
  r.check("20 tables perturbed by +p at one n: lifted (N=2) DIFFER, Goss EQUAL", perturb_ok == 20,
          std::to_string(perturb_ok) + "/20");

  // Random extension pairs over a common base.
  const std::vector<ExtensionSpec> pool3 = {kummer(f3, "T"),          kummer(f3, "2*T"),         kummer(f3, "T+1"),
                                            kummer(f3, "T^2+1"),      kummer(f3, "2*T*(T+2)"),   kummer(f3, "T*(T+2)"),
                                            artin_schreier(f3, 1),   artin_schreier(f3, 2),     artin_schreier(f3, 3),
                                            artin_schreier(f3, 5)};
  const std::vector<ExtensionSpec> pool5 = {kummer(f5, "T"), kummer(f5, "4*T"), kummer(f5, "2*T"), kummer(f5, "T*(T+1)"),
                                            kummer(f5, "T^2+2"), kummer(f5, "T^2+T+1")};
  int agree = 0, equal_count = 0;
  std::string first_bad;
  for (int i = 0; i < 20; ++i) {
    const auto& pool = i % 2 ? pool5 : pool3;
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto v = compare_zeta(dirichlet_table(a, 4), dirichlet_table(b, 4), ZetaKind::lifted);
    const bool same = same_inertia_to_degree(a, b, 4);
    equal_count += v.equal;
    if (v.equal == same) ++agree;
    else if (first_bad.empty()) first_bad = a.name + " vs " + b.name + ": " + v.to_string();
  }
  r.check("20 random pairs: lifted EQUAL iff inertia degrees agree at all primes of degree <= 4", agree == 20,
          first_bad.empty() ? std::to_string(equal_count) + " equal, " + std::to_string(20 - equal_count) + " different"
                            : first_bad);
  return r;
}

inline DemoReport demo_psl27() {
  DemoReport r{"psl27", {}};
  const auto g = psl27();
  r.check("PSL(2,7) on 8 points has order 168", g->order() == 168, std::to_string(g->order()));
  std::multiset<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(*g)) sizes.insert(c.size());
  std::string sz;
  for (auto s : sizes) sz += (sz.empty() ? "" : ",") + std::to_string(s);
  r.check("class sizes {1,21,42,56,24,24}", sizes == std::multiset<std::size_t>{1, 21, 42, 56, 24, 24}, "{" + sz + "}");
  const auto reps = subgroups_of_order(g, 24);
  r.check("subgroups of order 24 form exactly 2 conjugacy classes", reps.size() == 2, std::to_string(reps.size()));
  if (reps.size() != 2) return r;
  const auto& h1 = reps[0];
  const auto& h2 = reps[1];
  r.check("the two classes are Gassmann equivalent", gassmann_check(g, h1, h2).equivalent);
  r.check("and not conjugate", !are_conjugate(g, h1, h2));
  std::size_t cyclic = 0, same = 0;
  for (const auto& cls : conjugacy_classes(*g)) {
    const auto c = subgroup_generated(g, {g->element(cls.front())});
    ++cyclic;
    same += coset_types(g, h1, c) == coset_types(g, h2, c);
  }
  r.check("coset types agree for every cyclic subgroup", same == cyclic,
          std::to_string(same) + "/" + std::to_string(cyclic) + " element classes");
  return r;
}

inline DemoReport demo_komatsu() {
  DemoReport r{"komatsu", {}};
  const auto k = cayley_komatsu(3);
  auto stats = [](const std::map<std::vector<int>, std::size_t>& m) {
    std::string out;
    for (const auto& [type, count] : m) {
      const int ord = type.front();
      out += (out.empty() ? "" : " + ") + std::to_string(count) + " of order " + std::to_string(ord);
    }
    return out;
  };
  const std::vector<int> identity(27, 1), three(9, 3);
  const std::map<std::vector<int>, std::size_t> expected{{identity, 1}, {three, 26}};
  r.check("(Z/3)^3 in S_27: 1 identity and 26 elements of cycle type 3^9", k.stats1 == expected, stats(k.stats1));
  r.check("Heisenberg(3) in S_27: 1 identity and 26 elements of cycle type 3^9", k.stats2 == expected, stats(k.stats2));
  r.check("the two regular embeddings are Gassmann equivalent", k.gassmann);
  r.check("(Z/3)^3 is abelian and Heisenberg(3) is not", k.h1_abelian && !k.h2_abelian);
  return r;
}

inline DemoReport demo_witt() {
  using namespace demo_detail;
  DemoReport r{"witt", {}};
  // Ghost identities, symbolically over Z.
  bool ghost_ok = true;
  for (int p : {2, 3}) {
    for (int n_len = 1; n_len <= 3; ++n_len) {
      const auto sp = witt_structure_polys(p, n_len);
      std::vector<IntMPoly> x, y;
      for (int i = 0; i < n_len; ++i) {
        x.push_back(IntMPoly::variable(2 * n_len, i));
        y.push_back(IntMPoly::variable(2 * n_len, n_len + i));
      }
      for (int n = 0; n < n_len; ++n) {
        const auto wx = StructurePolys::ghost(x, p, n);
        const auto wy = StructurePolys::ghost(y, p, n);
        ghost_ok = ghost_ok && StructurePolys::ghost(sp->sum, p, n) == wx + wy && StructurePolys::ghost(sp->product, p, n) == wx * wy;
      }
    }
  }
  r.check("ghost identities for S_n and P_n hold over Z for p in {2,3}, N <= 3", ghost_ok);

  // Ring axioms on random triples over F_9 and over F_3((1/T)).
  std::mt19937 rng(77);
  const auto f9 = gf_create(3, 2);
  const auto f3 = gf_create(3, 1);
  const LaurentRing lring{f3, 6};
  auto axioms = [](const auto& a, const auto& b, const auto& c) {
    return witt_add(a, b) == witt_add(b, a) && witt_mul(a, b) == witt_mul(b, a) &&
           witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)) &&
           witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)) &&
           witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c));
  };
  auto rand_f9 = [&] {
    WittVector<FieldSpec> v{f9, 2, {}};
    for (int i = 0; i < 2; ++i) v.c.push_back(FqElement{static_cast<std::uint32_t>(rng() % 9)});
    return v;
  };
  auto rand_series = [&] {
    WittVector<LaurentRing> v{lring, 2, {}};
    for (int i = 0; i < 2; ++i) {
      auto s = LaurentSeries::zero(f3, 6);
      for (int k = 0; k <= 6; ++k) s = s + LaurentSeries::monomial(f3, f3.from_int(static_cast<std::int64_t>(rng() % 3)), k, 6);
      v.c.push_back(s);
    }
    return v;
  };
  int ok9 = 0, okl = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = rand_f9(), b = rand_f9(), c = rand_f9();
    ok9 += axioms(a, b, c);
    const auto u = rand_series(), v = rand_series(), w = rand_series();
    okl += axioms(u, v, w);
  }
  r.check("ring axioms on 100 random triples in W_2(F_9)", ok9 == 100, std::to_string(ok9) + "/100");
  r.check("ring axioms on 100 random triples in W_2(F_3((1/T)))", okl == 100, std::to_string(okl) + "/100");

  // Teichmuller multiplicativity, exhaustive over small fields.
  bool chi_ok = true;
  std::size_t pairs = 0;
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto f = gf_create(p, m);
    for (std::uint32_t x = 0; x < f.q(); ++x)
      for (std::uint32_t y = 0; y < f.q(); ++y, ++pairs)
        chi_ok = chi_ok && witt_mul(teichmuller(f, FqElement{x}, 2), teichmuller(f, FqElement{y}, 2)) ==
                               teichmuller(f, f.mul(FqElement{x}, FqElement{y}), 2);
  }
  r.check("chi(x) chi(y) = chi(xy) for all pairs in F_q, q <= 9", chi_ok, std::to_string(pairs) + " pairs");

  // Reduction of the lifted zeta function.
  bool red_ok = true;
  std::string red_detail;
  for (const auto& ext : test_set()) {
    const auto t = dirichlet_table(ext, 6);
    for (int s : {1, 2}) {
      const std::int64_t prec = 6 * s;
      const bool same = lifted_goss_eval(t, s, 2, prec).c[0] == goss_eval(t, s, prec);
      red_ok = red_ok && same;
      if (!same && red_detail.empty()) red_detail = ext.name + " s=" + std::to_string(s);
    }
  }
  r.check("component 0 of the lifted value equals the Goss value (test set, s = 1, 2)", red_ok,
          red_detail.empty() ? "5 extensions" : red_detail);

  // Trivial zero at s = -2, against power sums computed directly.
  const auto triv = dirichlet_table(trivial_extension(f3), 6);
  Poly power_sum(f3);
  bool blocks_vanish = true;
  for (int d = 0; d <= 5; ++d) {
    Poly block(f3);
    for (const auto& n : enumerate_monic(f3, d)) block = block + n.poly() * n.poly();
    if (d >= 2) blocks_vanish = blocks_vanish && block.is_zero();
    power_sum = power_sum + block;
  }
  const auto z = goss_eval(triv, -2, 12);
  r.check("zeta_F(-2) = 0 over F_3, matching the power sums of n^2", z.is_zero() && power_sum.is_zero() && blocks_vanish,
          z.to_string());
  const auto lifted0 = lifted_goss_eval(triv, 0, 2, 12);
  r.check("lifted zeta_F(0) in W_2 over F_3 is (1, 1)", lifted0 == int_to_witt(4, LaurentRing{f3, 12}, 2) &&
                                                            lifted0.c[0] == LaurentSeries::one(f3, 12) &&
                                                            lifted0.c[1] == LaurentSeries::one(f3, 12),
          lifted0.to_string());
  return r;
}

struct DemoEntry {
  std::string name;
  std::function<DemoReport()> run;
};

inline const std::vector<DemoEntry>& demo_registry() {
  static const std::vector<DemoEntry> demos = {
      {"malakie", demo_malakie}, {"pgalois", demo_pgalois}, {"genus", demo_genus},
      {"gossrem", demo_gossrem}, {"reconstruct", demo_reconstruct}, {"brr", demo_brr},
      {"psl27", demo_psl27},     {"komatsu", demo_komatsu}, {"witt", demo_witt},
  };
  return demos;
}

inline DemoReport run_demo(const std::string& name) {
  for (const auto& d : demo_registry())
    if (d.name == name) return d.run();
  std::string known;
  for (const auto& d : demo_registry()) known += (known.empty() ? "" : ", ") + d.name;
  throw DomainError("cli", "unknown demo \"" + name + "\" (known: " + known + ")");
}

}  // namespace ffz
