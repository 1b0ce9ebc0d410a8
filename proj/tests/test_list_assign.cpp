#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "oracles.hpp"
#include "rlc/list_assignment.hpp"
#include "rlc/random.hpp"

using namespace rlc;

namespace {

std::size_t subset_rank(const std::vector<Colour>& s, const std::vector<std::vector<Colour>>& all) {
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

}  // namespace

TEST(Random, SplitMixReferenceValues) {
  // first outputs of SplitMix64 seeded with 0 (reference implementation)
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng(), 0x06c45d188009454fULL);
}

TEST(Random, BelowStaysInRange) {
  SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.below(7), 7u);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Random, SeedIsPureFunction) {
  const Seed a{42, 7}, b{42, 7}, c{42, 8}, d{43, 7};
  EXPECT_EQ(a.generator().state(), b.generator().state());
  EXPECT_NE(a.generator().state(), c.generator().state());
  EXPECT_NE(a.generator().state(), d.generator().state());
}

TEST(ListAssignment, ValidatesLists) {
  EXPECT_THROW(ListAssignment::from_lists({{1, 2}, {3}}), InvalidArgument);
  EXPECT_THROW(ListAssignment::from_lists({{1, 1}}), InvalidArgument);
  EXPECT_THROW(ListAssignment::from_lists({{0, 1}}), InvalidArgument);
  EXPECT_THROW(ListAssignment::from_lists({{1, 5}}, 4), InvalidArgument);
  const auto l = ListAssignment::from_lists({{3, 1}, {2, 4}});
  EXPECT_EQ(l.k(), 2u);
  EXPECT_EQ(l.list(0)[0], 1u);  // stored sorted
  EXPECT_TRUE(l.contains(1, 4));
  EXPECT_FALSE(l.contains(1, 1));
}

TEST(ListAssignment, Intersect) {
  const std::vector<Colour> a{1, 3, 5}, b{2, 4, 6}, c{5, 7, 9};
  EXPECT_FALSE(lists_intersect(a, b));
  EXPECT_TRUE(lists_intersect(a, c));
  SplitMix64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto x = sample_k_subset(3, 8, rng), y = sample_k_subset(3, 8, rng);
    bool brute = false;
    for (Colour p : x)
      for (Colour q : y) brute = brute || p == q;
    EXPECT_EQ(lists_intersect(x, y), brute);
  }
}

TEST(SampleSubset, TrivialCases) {
  SplitMix64 rng(9);
  EXPECT_EQ(sample_k_subset(1, 1, rng), (std::vector<Colour>{1}));
  EXPECT_EQ(sample_k_subset(3, 3, rng), (std::vector<Colour>{1, 2, 3}));
  EXPECT_THROW(sample_k_subset(4, 3, rng), InvalidArgument);
  EXPECT_THROW(sample_k_subset(0, 3, rng), InvalidArgument);
}

TEST(SampleSubset, SortedAndDistinct) {
  SplitMix64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto s = sample_k_subset(4, 9, rng);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    EXPECT_GE(s.front(), 1u);
    EXPECT_LE(s.back(), 9u);
  }
}

TEST(SampleSubset, FrequenciesTwoOfFour) {
  SplitMix64 rng(123);
  const auto all = oracle::k_subsets(2, 4);
  std::vector<int> counts(all.size(), 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[subset_rank(sample_k_subset(2, 4, rng), all)];
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / 6.0, 0.01);
}

TEST(SampleSubset, ChiSquareUniformity) {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{1, 3}, {2, 4}, {2, 5}, {3, 5}};
  SplitMix64 rng(2718);
  for (const auto& [k, m] : cases) {
    const auto all = oracle::k_subsets(k, m);
    std::vector<double> counts(all.size(), 0);
    const int draws = 100000;
    SubsetSampler sampler(m);
    std::vector<Colour> out(k);
    for (int i = 0; i < draws; ++i) {
      sampler.draw(out, rng);
      counts[subset_rank(out, all)] += 1;
    }
    const double expected = static_cast<double>(draws) / static_cast<double>(all.size());
    double stat = 0;
    for (double c : counts) stat += (c - expected) * (c - expected) / expected;
    const boost::math::chi_squared dist(static_cast<double>(all.size() - 1));
    const double p_value = boost::math::cdf(boost::math::complement(dist, stat));
    EXPECT_GT(p_value, 1e-3) << "k=" << k << " m=" << m << " chi2=" << stat;
  }
}

TEST(SampleAssignment, TrivialAndDeterministic) {
  const auto full = sample_assignment(5, 4, 4, Seed{1, 0});
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(std::vector<Colour>(full.list(v).begin(), full.list(v).end()),
                                           (std::vector<Colour>{1, 2, 3, 4}));
  const auto a = sample_assignment(50, 3, 11, Seed{99, 4});
  const auto b = sample_assignment(50, 3, 11, Seed{99, 4});
  const auto c = sample_assignment(50, 3, 11, Seed{99, 5});
  EXPECT_EQ(a.flat(), b.flat());
  EXPECT_NE(a.flat(), c.flat());
  EXPECT_THROW(sample_assignment(3, 4, 3, Seed{}), InvalidArgument);
}

TEST(SampleAssignment, DrawsVerticesInOrder) {
  // vertex v's list is the (v+1)-th draw from the trial generator
  const Seed seed{5, 2};
  const auto l = sample_assignment(6, 2, 7, seed);
  SplitMix64 rng = seed.generator();
  for (Vertex v = 0; v < 6; ++v) {
    const auto s = sample_k_subset(2, 7, rng);
    EXPECT_EQ(std::vector<Colour>(l.list(v).begin(), l.list(v).end()), s);
  }
}

TEST(SampleAssignment, DisjointProbabilityOneSixth) {
  // C(2,2)/C(4,2) = 1/6; confirm by enumerating all 36 pairs, then sample
  const auto all = oracle::k_subsets(2, 4);
  int disjoint_pairs = 0;
  for (const auto& x : all)
    for (const auto& y : all) disjoint_pairs += lists_intersect(x, y) ? 0 : 1;
  EXPECT_EQ(disjoint_pairs, 6);
  int hits = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const auto l = sample_assignment(2, 2, 4, Seed{777, static_cast<std::uint64_t>(t)});
    hits += lists_intersect(l.list(0), l.list(1)) ? 0 : 1;
  }
  EXPECT_NEAR(static_cast<double>(hits) / trials, 1.0 / 6.0, 0.01);
}

TEST(SampleAssignment, IndependenceAcrossVertices) {
  const int trials = 40000;
  const std::uint32_t k = 2, m = 5;
  double sx = 0, sy = 0, sxy = 0;
  for (int t = 0; t < trials; ++t) {
    const auto l = sample_assignment(4, k, m, Seed{31, static_cast<std::uint64_t>(t)});
    const double x = l.contains(0, 1) ? 1 : 0, y = l.contains(3, 1) ? 1 : 0;
    sx += x;
    sy += y;
    sxy += x * y;
  }
  const double px = sx / trials, py = sy / trials;
  const double cov = sxy / trials - px * py;
  const double corr = cov / std::sqrt(px * (1 - px) * py * (1 - py));
  // under independence the sample correlation has standard error ~ 1/sqrt(trials)
  EXPECT_LT(std::abs(corr), 3.0 / std::sqrt(static_cast<double>(trials)));
  EXPECT_NEAR(px, static_cast<double>(k) / m, 0.02);
}

TEST(SampleAssignment, IndependenceAcrossTrials) {
  // adjacent streams must not be correlated either
  const int trials = 40000;
  double sx = 0, sy = 0, sxy = 0;
  for (int t = 0; t < trials; ++t) {
    const double x = sample_assignment(1, 2, 5, Seed{8, 2 * static_cast<std::uint64_t>(t)}).contains(0, 1) ? 1 : 0;
    const double y = sample_assignment(1, 2, 5, Seed{8, 2 * static_cast<std::uint64_t>(t) + 1}).contains(0, 1) ? 1 : 0;
    sx += x;
    sy += y;
    sxy += x * y;
  }
  const double px = sx / trials, py = sy / trials;
  const double corr = (sxy / trials - px * py) / std::sqrt(px * (1 - px) * py * (1 - py));
  EXPECT_LT(std::abs(corr), 3.0 / std::sqrt(static_cast<double>(trials)));
}

TEST(AssignmentFormat, RoundTrip) {
  const auto l = sample_assignment(20, 3, 9, Seed{4, 4});
  const std::string text = dump_assignment(l);
  EXPECT_EQ(text.substr(0, 3), "0: ");
  std::istringstream in(text);
  const auto back = read_assignment(in, 9);
  EXPECT_EQ(back.flat(), l.flat());
  EXPECT_EQ(back.m(), 9u);
}

TEST(AssignmentFormat, Errors) {
  std::istringstream skipped("0: 1 2\n2: 1 2\n");
  EXPECT_THROW(read_assignment(skipped), ParseError);
  std::istringstream ragged("0: 1 2\n1: 3\n");
  EXPECT_THROW(read_assignment(ragged), ParseError);
  std::istringstream junk("0: 1 x\n");
  EXPECT_THROW(read_assignment(junk), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_assignment(empty), ParseError);
}
