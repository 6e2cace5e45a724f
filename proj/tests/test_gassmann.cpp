#include <gtest/gtest.h>

#include <random>

#include "ffz/gassmann.hpp"

using namespace ffz;

namespace {

std::multiset<std::size_t> class_sizes(const PermGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.insert(c.size());
  return out;
}

/// Classes by conjugating with every element, directly on permutations.
std::set<std::set<Permutation>> naive_classes(const PermGroup& g) {
  std::set<std::set<Permutation>> out;
  for (const auto& x : g.elements()) {
    std::set<Permutation> cls;
    for (const auto& y : g.elements()) cls.insert(y * x * y.inverse());
    out.insert(cls);
  }
  return out;
}

std::pair<Subgroup, Subgroup> psl27_pair(const GroupPtr& g) {
  const auto reps = subgroups_of_order(g, 24);
  EXPECT_EQ(reps.size(), 2U);
  return {reps.at(0), reps.at(1)};
}

std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (const auto& cls : conjugacy_classes(*g)) out.push_back(subgroup_generated(g, {g->element(cls.front())}));
  return out;
}

}  // namespace

TEST(PermutationText, ParseFormatCompose) {
  const auto a = Permutation::parse("(1 2 3)(4 5)");
  EXPECT_EQ(a.degree(), 5);
  EXPECT_EQ(a.to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(a.order(), 6);
  EXPECT_EQ(a.cycle_type(), (std::vector<int>{3, 2}));
  EXPECT_EQ((a * a.inverse()).to_string(), "()");
  const auto s = Permutation::parse("(1 2)", 3);
  const auto t = Permutation::parse("(2 3)", 3);
  EXPECT_EQ((s * t).to_string(), "(1 2 3)");  // t first: 1->1->2, 2->3->3, 3->2->1
  EXPECT_EQ(Permutation::parse("()", 4).fixed_points(), 4);
  EXPECT_THROW(Permutation::parse("(1 2"), ParseError);
  EXPECT_THROW(Permutation::parse("(1 2)(2 3)"), ParseError);
  EXPECT_THROW(Permutation::parse("1 2"), ParseError);
  EXPECT_THROW(Permutation::parse("(0 1)"), ParseError);
  EXPECT_THROW(Permutation::parse("(1 5)", 4), DomainError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), DomainError);
}

TEST(Closure, Examples) {
  EXPECT_EQ(group_closure(3, {Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)})->order(), 6U);
  EXPECT_EQ(group_closure(3, {Permutation::parse("(1 2 3)", 3)})->order(), 3U);
  EXPECT_EQ(psl27()->order(), 168U);
  EXPECT_EQ(symmetric_group(5)->order(), 120U);
  EXPECT_THROW(group_closure(8, psl27()->generators(), 100), DomainError);
  EXPECT_THROW(group_closure(4, {Permutation::parse("(1 2)", 3)}), DomainError);
  const auto g = symmetric_group(4);
  EXPECT_EQ(g->element(0).to_string(), "()");
  for (std::size_t i = 0; i < g->order(); ++i) EXPECT_EQ(g->mul(i, g->inv(i)), 0U);
}

TEST(Classes, Examples) {
  EXPECT_EQ(class_sizes(*symmetric_group(3)), (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(class_sizes(*klein4()), (std::multiset<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(class_sizes(*psl27()), (std::multiset<std::size_t>{1, 21, 42, 56, 24, 24}));
}

TEST(Classes, MatchNaiveConjugation) {
  for (const auto& g : {symmetric_group(4), symmetric_group(5), psl27(), klein4()}) {
    std::set<std::set<Permutation>> ours;
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(*g)) {
      std::set<Permutation> s;
      for (auto i : cls) s.insert(g->element(i));
      ours.insert(s);
      total += cls.size();
    }
    EXPECT_EQ(ours, naive_classes(*g));
    EXPECT_EQ(total, g->order());
  }
}

TEST(Gassmann, KleinFourPairIsNotEquivalent) {
  const auto g = klein4();
  const auto h1 = subgroup_generated(g, {Permutation::parse("(1 2)", 4)});
  const auto h2 = subgroup_generated(g, {Permutation::parse("(3 4)", 4)});
  const auto rep = gassmann_check(g, h1, h2);
  EXPECT_FALSE(rep.equivalent);
  EXPECT_TRUE(rep.to_string().ends_with("GASSMANN: no\n"));
  EXPECT_TRUE(gassmann_check(g, h1, h1).equivalent);
  EXPECT_FALSE(are_conjugate(g, h1, h2));
}

TEST(Gassmann, ColumnSumsAreSubgroupOrders) {
  const auto g = symmetric_group(5);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h1 = subgroup_generated(g, {g->element(rng() % g->order())});
    const auto h2 = subgroup_generated(g, {g->element(rng() % g->order()), g->element(rng() % g->order())});
    const auto rep = gassmann_check(g, h1, h2);
    std::size_t s1 = 0, s2 = 0;
    for (const auto& r : rep.rows) {
      s1 += r.meet_h1;
      s2 += r.meet_h2;
    }
    EXPECT_EQ(s1, h1.order());
    EXPECT_EQ(s2, h2.order());
  }
}

TEST(Gassmann, RejectsForeignSubgroups) {
  const auto g = symmetric_group(3);
  const auto other = symmetric_group(3);
  const auto h = subgroup_generated(other, {Permutation::parse("(1 2)", 3)});
  EXPECT_THROW(gassmann_check(g, h, h), DomainError);
  EXPECT_THROW(gassmann_check(g, Subgroup{g, {0, *g->index_of(Permutation::parse("(1 2 3)"))}}, whole_group(g)), DomainError);
  EXPECT_THROW(subgroup_generated(g, {Permutation::parse("(1 2)", 4)}), DomainError);
}

TEST(Conjugacy, Examples) {
  const auto g = symmetric_group(3);
  const auto a = subgroup_generated(g, {Permutation::parse("(1 2)", 3)});
  const auto b = subgroup_generated(g, {Permutation::parse("(1 3)", 3)});
  EXPECT_TRUE(are_conjugate(g, a, a));
  EXPECT_TRUE(are_conjugate(g, a, b));
}

TEST(Conjugacy, ConjugatePairsAreGassmann) {
  std::mt19937 rng(4);
  for (const auto& g : {symmetric_group(5), symmetric_group(6)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Permutation> gens{g->element(rng() % g->order())};
      if (trial % 2) gens.push_back(g->element(rng() % g->order()));
      const auto h1 = subgroup_generated(g, gens);
      const auto& z = g->element(rng() % g->order());
      std::vector<Permutation> conj;
      for (const auto& x : gens) conj.push_back(z * x * z.inverse());
      const auto h2 = subgroup_generated(g, conj);
      EXPECT_TRUE(are_conjugate(g, h1, h2));
      EXPECT_TRUE(gassmann_check(g, h1, h2).equivalent);
    }
  }
}

TEST(CosetTypes, Examples) {
  const auto g = symmetric_group(3);
  const auto h = subgroup_generated(g, {Permutation::parse("(1 2)", 3)});
  const auto c = subgroup_generated(g, {Permutation::parse("(1 2 3)", 3)});
  EXPECT_EQ(coset_types(g, h, c), (std::vector<int>{3}));
  EXPECT_EQ(coset_types(g, h, subgroup_generated(g, {})), (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(coset_types(g, h, whole_group(g)), DomainError);
}

TEST(CosetTypes, SumToIndex) {
  const auto g = symmetric_group(5);
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = subgroup_generated(g, {g->element(rng() % g->order()), g->element(rng() % g->order())});
    const auto c = subgroup_generated(g, {g->element(rng() % g->order())});
    const auto types = coset_types(g, h, c);
    EXPECT_EQ(std::accumulate(types.begin(), types.end(), 0), static_cast<int>(g->order() / h.order()));
  }
}

TEST(Subgroups, Examples) {
  EXPECT_EQ(subgroups_of_order(symmetric_group(3), 2).size(), 1U);
  EXPECT_EQ(subgroups_of_order(klein4(), 2).size(), 3U);
  EXPECT_EQ(subgroups_of_order(symmetric_group(4), 4).size(), 3U);  // Z/4, normal V4, <(1 2),(3 4)>
  EXPECT_THROW(subgroups_of_order(symmetric_group(3), 4), DomainError);
}

TEST(Psl27, GassmannPairNotConjugate) {
  const auto g = psl27();
  const auto [h1, h2] = psl27_pair(g);
  EXPECT_EQ(h1.order(), 24U);
  EXPECT_TRUE(gassmann_check(g, h1, h2).equivalent);
  EXPECT_FALSE(are_conjugate(g, h1, h2));
  const auto cyclics = cyclic_subgroups_up_to_conjugacy(g);
  EXPECT_EQ(cyclics.size(), 6U);
  for (const auto& c : cyclics) EXPECT_EQ(coset_types(g, h1, c), coset_types(g, h2, c)) << c.generators_text();
  for (std::size_t x = 0; x < g->order(); ++x) EXPECT_EQ(coset_fixed_points(g, h1, x), coset_fixed_points(g, h2, x));
}

namespace {

/// Looks for a non-conjugate Gassmann pair among all subgroup classes of S_n.
std::optional<std::pair<Subgroup, Subgroup>> find_gassmann_pair(int n) {
  const auto g = symmetric_group(n);
  for (std::size_t k = 1; k <= g->order(); ++k) {
    if (g->order() % k) continue;
    const auto reps = subgroups_of_order(g, k);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (gassmann_check(g, reps[i], reps[j]).equivalent) return std::pair{reps[i], reps[j]};
  }
  return std::nullopt;
}

}  // namespace

TEST(SmallSymmetric, NoNonConjugateGassmannPairsUpToFive) {
  for (int n = 2; n <= 5; ++n) EXPECT_FALSE(find_gassmann_pair(n).has_value()) << "S_" << n;
}

// In S_6 subgroups of large index can already be Gassmann equivalent without
// being conjugate: two Klein four groups of double transpositions.
TEST(SmallSymmetric, S6HasNonConjugatePairOfIndex180) {
  const auto g = symmetric_group(6);
  const auto h1 = subgroup_generated(g, {Permutation::parse("(1 2)(3 4)", 6), Permutation::parse("(1 2)(5 6)", 6)});
  const auto h2 = subgroup_generated(g, {Permutation::parse("(1 2)(5 6)", 6), Permutation::parse("(1 5)(2 6)", 6)});
  EXPECT_EQ(h1.order(), 4U);
  EXPECT_TRUE(gassmann_check(g, h1, h2).equivalent);
  EXPECT_FALSE(are_conjugate(g, h1, h2));
  const auto found = find_gassmann_pair(6);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->first.order(), 4U);
}

TEST(Komatsu, RegularEmbeddingsOfOrder27) {
  const auto r = cayley_komatsu(3);
  EXPECT_EQ(r.h1->order(), 27U);
  EXPECT_EQ(r.h2->order(), 27U);
  const std::vector<int> identity(27, 1), order3(9, 3);
  EXPECT_EQ(r.stats1, (std::map<std::vector<int>, std::size_t>{{order3, 26}, {identity, 1}}));
  EXPECT_EQ(r.stats2, r.stats1);
  EXPECT_TRUE(r.gassmann);
  EXPECT_TRUE(r.h1_abelian);
  EXPECT_FALSE(r.h2_abelian);
  EXPECT_EQ(r.h1->element(0).fixed_points(), 27);
  EXPECT_EQ(r.h2->element(0).fixed_points(), 27);
  EXPECT_THROW(cayley_komatsu(5), DomainError);
}

TEST(GeneratorFile, Parse) {
  const auto [n, gens] = parse_generators("# S_4\ndegree=4\n(1 2)\n(1 2 3 4)\n");
  EXPECT_EQ(n, 4);
  EXPECT_EQ(gens.size(), 2U);
  EXPECT_EQ(group_closure(n, gens)->order(), 24U);
  EXPECT_EQ(parse_generators("(1 2 3)\n").first, 3);
  EXPECT_THROW(parse_generators("# nothing\n"), ParseError);
  EXPECT_THROW(parse_generators("degree=x\n"), ParseError);
}
