#include <gtest/gtest.h>

#include <random>

#include "ffz/witt.hpp"
#include "oracles.hpp"

using namespace ffz;

namespace {

using Exps = IntMPoly::Exponents;

/// Exponent vector for N = 2: X_0, X_1, Y_0, Y_1.
Exps e2(int x0, int x1, int y0, int y1) {
  return {static_cast<std::uint16_t>(x0), static_cast<std::uint16_t>(x1), static_cast<std::uint16_t>(y0),
          static_cast<std::uint16_t>(y1)};
}

template <class R>
WittVector<R> random_vector(const R& ring, int length, std::mt19937& rng, auto random_element) {
  WittVector<R> v{ring, length, {}};
  for (int i = 0; i < length; ++i) v.c.push_back(random_element(rng));
  return v;
}

LaurentSeries random_series(const FieldSpec& f, std::int64_t prec, std::mt19937& rng) {
  LaurentSeries s = LaurentSeries::zero(f, prec);
  for (std::int64_t k = 0; k <= prec; ++k)
    s = s + LaurentSeries::monomial(f, FqElement{static_cast<std::uint32_t>(rng() % f.q())}, k, prec);
  return s;
}

ExtensionSpec trivial(const FieldSpec& f) {
  ExtensionSpec e;
  e.name = "trivial";
  e.base = f;
  e.defining = {Poly(f), Poly::one(f)};
  validate_extension(e);
  return e;
}

std::vector<ExtensionSpec> test_set() {
  const auto f3 = gf_create(3, 1);
  const auto f5 = gf_create(5, 1);
  return {trivial(f3), builtin_extension(KummerSqrt{parse_poly(f3, "T")}, f3),
          builtin_extension(KummerSqrt{parse_poly(f5, "T*(T+1)")}, f5), builtin_extension(ArtinSchreier{1}, f3),
          builtin_extension(ArtinSchreier{2}, f3)};
}

}  // namespace

TEST(StructurePolys, SmallExamples) {
  const auto s2 = witt_structure_polys(2, 2);
  IntMPoly expected(4);
  expected = IntMPoly::variable(4, 1) + IntMPoly::variable(4, 3) - IntMPoly::variable(4, 0) * IntMPoly::variable(4, 2);
  EXPECT_EQ(s2->sum[1], expected);

  const auto s3 = witt_structure_polys(3, 2);
  EXPECT_EQ(s3->sum[1].terms().size(), 4U);
  EXPECT_EQ(s3->sum[1].coeff(e2(0, 1, 0, 0)), 1);
  EXPECT_EQ(s3->sum[1].coeff(e2(0, 0, 0, 1)), 1);
  EXPECT_EQ(s3->sum[1].coeff(e2(2, 0, 1, 0)), -1);
  EXPECT_EQ(s3->sum[1].coeff(e2(1, 0, 2, 0)), -1);

  for (int p : {2, 3, 5, 7}) {
    const auto s1 = witt_structure_polys(p, 1);
    EXPECT_EQ(s1->sum[0], IntMPoly::variable(2, 0) + IntMPoly::variable(2, 1));
    EXPECT_EQ(s1->product[0], IntMPoly::variable(2, 0) * IntMPoly::variable(2, 1));
  }
}

TEST(StructurePolys, GhostIdentitiesSymbolic) {
  for (int p : {2, 3}) {
    for (int n_len = 1; n_len <= 3; ++n_len) {
      const auto sp = witt_structure_polys(p, n_len);
      const int vars = 2 * n_len;
      std::vector<IntMPoly> x, y;
      for (int i = 0; i < n_len; ++i) {
        x.push_back(IntMPoly::variable(vars, i));
        y.push_back(IntMPoly::variable(vars, n_len + i));
      }
      for (int n = 0; n < n_len; ++n) {
        const auto wx = StructurePolys::ghost(x, p, n);
        const auto wy = StructurePolys::ghost(y, p, n);
        EXPECT_EQ(StructurePolys::ghost(sp->sum, p, n), wx + wy) << "p=" << p << " n=" << n;
        EXPECT_EQ(StructurePolys::ghost(sp->product, p, n), wx * wy) << "p=" << p << " n=" << n;
      }
    }
  }
}

TEST(StructurePolys, FeasibilityLimits) {
  EXPECT_NO_THROW(witt_structure_polys(3, 4));
  EXPECT_NO_THROW(witt_structure_polys(5, 3));
  EXPECT_THROW(witt_structure_polys(7, 3), DomainError);
  EXPECT_THROW(witt_structure_polys(2, 5), DomainError);
  EXPECT_THROW(witt_structure_polys(4, 2), DomainError);
  EXPECT_THROW(witt_structure_polys(3, 0), DomainError);
}

TEST(WittArithmetic, Examples) {
  const auto f3 = gf_create(3, 1);
  const auto one = teichmuller(f3, f3.one(), 2);
  EXPECT_EQ(witt_add(one, one).to_string(), "(2; 1)");
  EXPECT_EQ(int_to_witt(4, f3, 2).to_string(), "(1; 1)");
  EXPECT_EQ(int_to_witt(0, f3, 2), witt_zero(f3, 2));
  EXPECT_EQ(int_to_witt(9, f3, 2), witt_zero(f3, 2));
  const auto three = int_to_witt(3, f3, 2);
  EXPECT_EQ(witt_mul(three, three), witt_zero(f3, 2));
  EXPECT_EQ(witt_mul(one, three), three);
  EXPECT_EQ(witt_add(three, witt_zero(f3, 2)), three);
  EXPECT_THROW(witt_add(one, teichmuller(f3, f3.one(), 3)), DomainError);
}

TEST(WittArithmetic, IntegersMatchGhostLifting) {
  for (int p : {2, 3}) {
    const auto f = gf_create(p, 1);
    for (int n_len = 1; n_len <= 3; ++n_len) {
      auto acc = witt_zero(f, n_len);
      for (std::int64_t k = 0; k <= 30; ++k) {
        const auto v = int_to_witt(k, f, n_len);
        EXPECT_EQ(v, acc) << "k=" << k;  // repeated addition of 1
        const auto digits = oracle::witt_digits_of_integer(k, p, n_len);
        for (int i = 0; i < n_len; ++i) EXPECT_EQ(v.c[static_cast<std::size_t>(i)].value, digits[static_cast<std::size_t>(i)]) << "k=" << k;
        acc = witt_add(acc, witt_one(f, n_len));
      }
      std::int64_t pn = 1;
      for (int i = 0; i < n_len; ++i) pn *= p;
      EXPECT_EQ(int_to_witt(pn, f, n_len), witt_zero(f, n_len));
      EXPECT_EQ(witt_add(int_to_witt(-1, f, n_len), witt_one(f, n_len)), witt_zero(f, n_len));
    }
  }
}

TEST(WittArithmetic, RingAxiomsOverF9) {
  const auto f9 = gf_create(3, 2);
  std::mt19937 rng(5);
  auto elem = [&](std::mt19937& r) { return FqElement{static_cast<std::uint32_t>(r() % 9)}; };
  for (int n_len : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_vector(f9, n_len, rng, elem);
      const auto b = random_vector(f9, n_len, rng, elem);
      const auto c = random_vector(f9, n_len, rng, elem);
      EXPECT_EQ(witt_add(a, b), witt_add(b, a));
      EXPECT_EQ(witt_mul(a, b), witt_mul(b, a));
      EXPECT_EQ(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)));
      EXPECT_EQ(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c)));
      EXPECT_EQ(witt_mul(a, witt_add(b, c)), witt_add(witt_mul(a, b), witt_mul(a, c)));
      EXPECT_EQ(witt_mul(a, witt_one(f9, n_len)), a);
      EXPECT_EQ(witt_add(a, witt_zero(f9, n_len)), a);
    }
  }
}

TEST(WittArithmetic, RingAxiomsOverLaurentSeries) {
  const auto f3 = gf_create(3, 1);
  const LaurentRing ring{f3, 6};
  std::mt19937 rng(9);
  auto elem = [&](std::mt19937& r) { return random_series(f3, 6, r); };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_vector(ring, 2, rng, elem);
    const auto b = random_vector(ring, 2, rng, elem);
    const auto c = random_vector(ring, 2, rng, elem);
    EXPECT_EQ(witt_add(a, b), witt_add(b, a));
    EXPECT_EQ(witt_mul(a, b), witt_mul(b, a));
    EXPECT_EQ(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)));
    EXPECT_EQ(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c)));
    EXPECT_EQ(witt_mul(a, witt_add(b, c)), witt_add(witt_mul(a, b), witt_mul(a, c)));
    EXPECT_EQ(witt_mul(a, witt_one(ring, 2)), a);
  }
  EXPECT_EQ(int_to_witt(9, ring, 2), witt_zero(ring, 2));
}

TEST(Teichmuller, MultiplicativeExhaustiveSmallFields) {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto f = gf_create(p, m);
    for (std::uint32_t x = 0; x < f.q(); ++x)
      for (std::uint32_t y = 0; y < f.q(); ++y)
        EXPECT_EQ(witt_mul(teichmuller(f, FqElement{x}, 2), teichmuller(f, FqElement{y}, 2)),
                  teichmuller(f, f.mul(FqElement{x}, FqElement{y}), 2));
  }
}

TEST(Teichmuller, MultiplicativeOnLaurentSeries) {
  const auto f3 = gf_create(3, 1);
  const LaurentRing ring{f3, 8};
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_series(f3, 8, rng);
    const auto y = random_series(f3, 8, rng);
    EXPECT_EQ(witt_mul(teichmuller(ring, x, 2), teichmuller(ring, y, 2)), teichmuller(ring, ring.mul(x, y), 2));
  }
  const auto tinv = LaurentSeries::monomial(f3, f3.one(), 1, 8);
  const auto chi = teichmuller(ring, tinv, 2);
  EXPECT_EQ(witt_mul(witt_mul(chi, chi), chi), teichmuller(ring, LaurentSeries::monomial(f3, f3.one(), 3, 8), 2));
}

TEST(LiftedGoss, TrivialAtZero) {
  const auto f3 = gf_create(3, 1);
  const auto t = dirichlet_table(trivial(f3), 6);
  EXPECT_EQ(lifted_goss_eval(t, 0, 2, 12).to_string(), "(1 [prec 12]; 1 [prec 12])");
  EXPECT_THROW(lifted_goss_eval(dirichlet_table(trivial(f3), 3), 0, 2, 12), DomainError);
  EXPECT_THROW(lifted_goss_eval(t, -1, 2, 12), DomainError);
  EXPECT_THROW(lifted_goss_eval(t, 1, 2, 12), DomainError);  // needs D >= 12
  const auto as = dirichlet_table(builtin_extension(ArtinSchreier{2}, f3), 6);
  EXPECT_THROW(lifted_goss_eval(as, 0, 2, 12), DomainError);  // genus 1: blocks do not die mod 9
}

TEST(LiftedGoss, ComponentZeroIsGoss) {
  for (const auto& ext : test_set()) {
    const auto t = dirichlet_table(ext, 4);
    for (int s : {1, 2}) {
      const std::int64_t prec = 4 * s;
      EXPECT_EQ(lifted_goss_eval(t, s, 2, prec).c[0], goss_eval(t, s, prec)) << ext.name << " s=" << s;
    }
  }
}

TEST(LiftedGoss, KummerPairOverF3Differs) {
  const auto f3 = gf_create(3, 1);
  const auto k = dirichlet_table(builtin_extension(KummerSqrt{parse_poly(f3, "T")}, f3), 6);
  const auto l = dirichlet_table(builtin_extension(KummerSqrt{parse_poly(f3, "T+1")}, f3), 6);
  EXPECT_NE(lifted_goss_eval(k, 1, 2, 6), lifted_goss_eval(l, 1, 2, 6));
}

TEST(LiftedGoss, PerturbationByPSeenAtLengthTwoOnly) {
  // Component 1 of B(n) chi(n^-s) carries n^(-p s), so a change of B(n) by p
  // shows up at valuation p * deg(n) * s.
  const auto f3 = gf_create(3, 1);
  const auto t = dirichlet_table(builtin_extension(KummerSqrt{parse_poly(f3, "T")}, f3), 6);
  for (const char* n : {"T", "T+1", "T^2 + 1", "T^2 + T + 2"}) {
    const auto nm = parse_monic(f3, n);
    const auto bumped = t.with_value(nm, t.at(nm) + 3);
    for (int s = 1; s <= 3; ++s) {
      const std::int64_t prec = 3 * nm.degree() * s;
      EXPECT_EQ(lifted_goss_eval(t, s, 1, prec), lifted_goss_eval(bumped, s, 1, prec)) << n << " s=" << s;
      EXPECT_NE(lifted_goss_eval(t, s, 2, prec), lifted_goss_eval(bumped, s, 2, prec)) << n << " s=" << s;
      EXPECT_EQ(lifted_goss_eval(t, s, 2, prec - 1), lifted_goss_eval(bumped, s, 2, prec - 1)) << n << " s=" << s;
    }
  }
}

TEST(LiftedGoss, StableUnderLargerTable) {
  const auto f3 = gf_create(3, 1);
  const auto ext = builtin_extension(ArtinSchreier{2}, f3);
  const auto small = dirichlet_table(ext, 4);
  const auto large = dirichlet_table(ext, 5);
  for (int s : {1, 2}) EXPECT_EQ(lifted_goss_eval(small, s, 2, 4 * s), lifted_goss_eval(large, s, 2, 4 * s)) << s;
}
