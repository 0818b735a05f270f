#include <thread>

#include <gtest/gtest.h>

#include "../oracles/oracles.hpp"
#include "rank2cc/rank2.hpp"

namespace rank2cc {
namespace {

std::string var(int b, int c, std::int64_t k) { return to_string(cluster_variable(ExchangeType(b, c), k)); }

TEST(ExchangeType, Validates) {
  EXPECT_THROW(ExchangeType(0, 1), InvalidArgument);
  EXPECT_THROW(ExchangeType(2, -1), InvalidArgument);
  ExchangeType t(2, 3);
  EXPECT_EQ(t.exponent_at(1), 2);
  EXPECT_EQ(t.exponent_at(2), 3);
  EXPECT_EQ(t.exponent_at(-1), 2);
  EXPECT_EQ(t.exponent_at(0), 3);
}

TEST(ClusterVariable, WorkedExampleForTwoThree) {
  EXPECT_EQ(var(2, 3, 1), "x1");
  EXPECT_EQ(var(2, 3, 2), "x2");
  EXPECT_EQ(var(2, 3, 3), "(1 + x2^3) / x1");
  EXPECT_EQ(var(2, 3, 4), "(1 + x1^2 + 2*x2^3 + x2^6) / (x1^2*x2)");
  EXPECT_EQ(var(2, 3, 0), "(1 + x1^2) / x2");
  EXPECT_EQ(var(2, 3, -1), "(1 + 3*x1^2 + 3*x1^4 + x1^6 + x2^3) / (x1*x2^3)");
}

TEST(ClusterVariable, SatisfiesTheRecurrence) {
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) {
      ExchangeType t(b, c);
      auto one = LaurentPolynomial::constant(initial_context(), 1);
      for (std::int64_t m = -3; m <= 5; ++m)
        EXPECT_EQ(cluster_variable(t, m + 1) * cluster_variable(t, m - 1),
                  pow(cluster_variable(t, m), t.exponent_at(m)) + one)
            << "b=" << b << " c=" << c << " m=" << m;
    }
}

TEST(ClusterVariable, SwapSymmetry) {
  // x_k of A(b,c) is x_{3-k} of A(c,b) with x1 and x2 exchanged.
  std::vector<std::size_t> swap{1, 0};
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c)
      for (std::int64_t k = -4; k <= 6; ++k)
        EXPECT_EQ(cluster_variable(ExchangeType(b, c), k),
                  permute_variables(cluster_variable(ExchangeType(c, b), 3 - k), swap))
            << "b=" << b << " c=" << c << " k=" << k;
}

TEST(ExpandInCluster, MatchesDirectRecurrence) {
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c)
      for (std::int64_t m = -2; m <= 2; ++m)
        for (std::int64_t k = m - 4; k <= m + 5; ++k)
          EXPECT_EQ(expand_in_cluster(ExchangeType(b, c), k, m), oracle::direct_expand(b, c, k, m))
              << "b=" << b << " c=" << c << " k=" << k << " m=" << m;
}

TEST(ExpandInCluster, InitialClusterIsIdentity) {
  for (std::int64_t k = -3; k <= 5; ++k)
    EXPECT_EQ(expand_in_cluster(ExchangeType(2, 3), k, 1),
              cluster_variable(ExchangeType(2, 3), k).with_context(shifted_context()));
}

TEST(ExpandInCluster, ConsistentUnderEvaluation) {
  std::vector<Rational> point{Rational(2, 5), Rational(7, 3)};
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) {
      ExchangeType t(b, c);
      for (std::int64_t m = -2; m <= 2; ++m) {
        std::vector<Rational> at_m{evaluate(cluster_variable(t, m), point),
                                   evaluate(cluster_variable(t, m + 1), point)};
        for (std::int64_t k = -3; k <= 5; ++k)
          EXPECT_EQ(evaluate(expand_in_cluster(t, k, m), at_m), evaluate(cluster_variable(t, k), point))
              << "b=" << b << " c=" << c << " k=" << k << " m=" << m;
      }
    }
}

TEST(ExpandInCluster, ContextIsShifted) {
  auto p = expand_in_cluster(ExchangeType(1, 1), 4, 2);
  EXPECT_EQ(p.context(), shifted_context());
  EXPECT_EQ(to_string(p), "(1 + y2) / y1");
}

TEST(DVector, GrowsForAffineAndWildTypes) {
  ExchangeType t(2, 2);
  EXPECT_EQ(d_vector(t, 1), std::make_pair(std::int64_t{0}, std::int64_t{0}));
  EXPECT_EQ(d_vector(t, 3), std::make_pair(std::int64_t{1}, std::int64_t{0}));
  EXPECT_EQ(d_vector(t, 4), std::make_pair(std::int64_t{2}, std::int64_t{1}));
  EXPECT_EQ(d_vector(t, 5), std::make_pair(std::int64_t{3}, std::int64_t{2}));
  EXPECT_EQ(d_vector(ExchangeType(2, 3), -1), std::make_pair(std::int64_t{1}, std::int64_t{3}));
}

TEST(Period, FiniteTypes) {
  EXPECT_EQ(detect_period(ExchangeType(1, 1), 10), 5);
  EXPECT_EQ(detect_period(ExchangeType(1, 2), 10), 6);
  EXPECT_EQ(detect_period(ExchangeType(2, 1), 10), 6);
  EXPECT_EQ(detect_period(ExchangeType(1, 3), 10), 8);
  EXPECT_EQ(detect_period(ExchangeType(3, 1), 10), 8);
  EXPECT_FALSE(detect_period(ExchangeType(2, 2), 50));
  EXPECT_FALSE(detect_period(ExchangeType(1, 1), 4));
}

TEST(Period, AgreesWithRationalIteration) {
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 4; ++c) {
      if (b * c > 4) continue;  // rational heights explode for wild types
      EXPECT_EQ(detect_period(ExchangeType(b, c), 30), oracle::rational_period(b, c, 30))
          << "b=" << b << " c=" << c;
    }
}

TEST(Sweep, PositivityAtSmallScale) {
  for (auto [b, c] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    auto r = check_positivity_range(ExchangeType(b, c), -3, 5, -2, 2);
    EXPECT_TRUE(r.passed()) << r.to_string();
    EXPECT_EQ(r.items.size(), 9u * 5u);
  }
}

TEST(Sweep, DenominatorLaw) {
  SweepOptions opts;
  opts.positivity = opts.laurent = false;
  opts.denominator = true;
  for (auto [b, c] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}, {1, 4}, {4, 1}, {2, 5}}) {
    auto r = check_positivity_range(ExchangeType(b, c), -3, 6, 0, 0, opts);
    EXPECT_TRUE(r.passed()) << r.to_string();
  }
}

TEST(Sweep, ExpiredBudgetIsInconclusive) {
  SweepOptions opts;
  opts.deadline = Deadline::after(std::chrono::milliseconds(-1));
  auto r = check_positivity_range(ExchangeType(3, 3), 40, 41, 0, 0, opts);
  EXPECT_EQ(r.status(), Status::Inconclusive);
  EXPECT_FALSE(r.witness);
}

TEST(Sweep, RejectsEmptyRange) {
  EXPECT_THROW(check_positivity_range(ExchangeType(1, 1), 3, 2, 0, 0), InvalidArgument);
}

TEST(ClusterSequence, ConcurrentAccessIsConsistent) {
  ClusterSequence seq(ExchangeType(2, 3));
  std::vector<LaurentPolynomial> got(8, LaurentPolynomial(initial_context()));
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { got[i] = seq.at(i % 2 ? 7 : -4); });
  for (auto& th : threads) th.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], cluster_variable(ExchangeType(2, 3), i % 2 ? 7 : -4));
}

}  // namespace
}  // namespace rank2cc
