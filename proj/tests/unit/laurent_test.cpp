#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "rank2cc/laurent.hpp"
#include "rank2cc/serialize.hpp"

namespace rank2cc {
namespace {

const VariableContext& xy() {
  static const VariableContext ctx({"x1", "x2"});
  return ctx;
}

LaurentPolynomial X() { return LaurentPolynomial::variable(xy(), std::size_t{0}); }
LaurentPolynomial Y() { return LaurentPolynomial::variable(xy(), std::size_t{1}); }
LaurentPolynomial C(int c) { return LaurentPolynomial::constant(xy(), c); }

LaurentPolynomial random_poly(std::mt19937_64& rng, const VariableContext& ctx, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> exp(lo, hi), coef(-9, 9);
  LaurentPolynomial p(ctx);
  for (int t = 0; t < terms; ++t) {
    Exponents e(ctx.arity(), 0);
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

TEST(VariableContext, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(VariableContext({"a", "a"}), InvalidArgument);
  EXPECT_THROW(VariableContext(std::vector<std::string>{}), InvalidArgument);
  EXPECT_THROW(VariableContext({""}), InvalidArgument);
  VariableContext ctx({"a", "b"});
  EXPECT_EQ(ctx.index_of("b"), 1u);
  EXPECT_FALSE(ctx.index_of("c"));
}

TEST(Laurent, CanonicalFormDropsZeroCoefficients) {
  auto p = X() + Y() - X();
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p, Y());
  EXPECT_TRUE((X() - X()).is_zero());
  EXPECT_EQ(to_string(LaurentPolynomial(xy())), "0");
}

TEST(Laurent, MixingContextsThrows) {
  VariableContext other({"y1", "y2"});
  auto q = LaurentPolynomial::variable(other, std::size_t{0});
  EXPECT_THROW(X() + q, ContextMismatch);
  EXPECT_THROW(X() * q, ContextMismatch);
}

TEST(Laurent, PrintsFractionForm) {
  auto p = (C(1) + pow(X(), 2)) * LaurentPolynomial::variable(xy(), std::size_t{1}, -1);
  EXPECT_EQ(to_string(p), "(1 + x1^2) / x2");
  auto q = C(1) + pow(X(), 6) + C(3) * pow(X(), 4) + C(3) * pow(X(), 2) + pow(Y(), 3);
  q = q * LaurentPolynomial::monomial(xy(), Exponents{-1, -3});
  EXPECT_EQ(to_string(q), "(1 + 3*x1^2 + 3*x1^4 + x1^6 + x2^3) / (x1*x2^3)");
  EXPECT_EQ(to_string(C(-2) * X() + C(5)), "5 - 2*x1");
  EXPECT_EQ(to_string(LaurentPolynomial::monomial(xy(), Exponents{2, -1}, 7)), "7*x1^2 / x2");
}

TEST(Laurent, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    auto a = random_poly(rng, xy(), 6, -3, 3);
    auto b = random_poly(rng, xy(), 5, -3, 3);
    auto c = random_poly(rng, xy(), 4, -2, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * C(1), a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Laurent, DenseAndSparseMultiplyAgree) {
  // Large enough operands take the dense path; compare against a naive product.
  std::mt19937_64 rng(11);
  auto a = random_poly(rng, xy(), 120, -5, 20);
  auto b = random_poly(rng, xy(), 120, -4, 15);
  LaurentPolynomial naive(xy());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) naive.add_term(Exponents{ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  EXPECT_EQ(a * b, naive);
}

TEST(Laurent, ExactDivisionRecoversFactors) {
  std::mt19937_64 rng(3);
  VariableContext three({"a", "b", "c"});
  for (int round = 0; round < 30; ++round) {
    for (const VariableContext* ctx : {&xy(), static_cast<const VariableContext*>(&three)}) {
      auto a = random_poly(rng, *ctx, 7, -3, 4);
      auto b = random_poly(rng, *ctx, 5, -2, 3);
      if (a.is_zero() || b.is_zero()) continue;
      EXPECT_EQ(exact_div(a * b, b), a);
      EXPECT_EQ(exact_div(a * b, a), b);
    }
  }
}

TEST(Laurent, ExactDivisionLargeOperands) {
  std::mt19937_64 rng(5);
  auto a = random_poly(rng, xy(), 400, 0, 40);
  auto b = random_poly(rng, xy(), 300, -10, 30);
  EXPECT_EQ(exact_div(a * b, b), a);
}

TEST(Laurent, InexactDivisionThrows) {
  EXPECT_THROW(exact_div(C(1) + X(), C(1) + Y()), NotDivisible);
  EXPECT_THROW(exact_div(C(1) + X(), C(2)), NotDivisible);
  EXPECT_THROW(exact_div(X(), LaurentPolynomial(xy())), InvalidArgument);
  EXPECT_EQ(exact_div(C(1) + X(), X()), C(1) * LaurentPolynomial::variable(xy(), std::size_t{0}, -1) + C(1));
}

TEST(Laurent, PowMatchesRepeatedProduct) {
  auto p = C(1) + X() + LaurentPolynomial::variable(xy(), std::size_t{1}, -1);
  auto r = C(1);
  for (unsigned n = 0; n < 7; ++n) {
    EXPECT_EQ(pow(p, n), r);
    r = r * p;
  }
}

TEST(Laurent, DenominatorExponents) {
  auto p = LaurentPolynomial::monomial(xy(), Exponents{-2, 1}) + LaurentPolynomial::monomial(xy(), Exponents{1, -3});
  EXPECT_EQ(denominator_exponents(p), (Exponents{2, 3}));
  EXPECT_EQ(denominator_exponents(C(4) + X()), (Exponents{0, 0}));
  EXPECT_THROW(denominator_exponents(LaurentPolynomial(xy())), InvalidArgument);
}

TEST(Laurent, SpecializeIsARingHomomorphism) {
  VariableContext u({"u1", "u2", "u3"});
  std::map<std::string, LaurentPolynomial> images{{"u1", X()}, {"u2", Y()}, {"u3", Y()}};
  std::mt19937_64 rng(13);
  for (int round = 0; round < 20; ++round) {
    auto a = random_poly(rng, u, 5, -2, 2);
    auto b = random_poly(rng, u, 5, -2, 2);
    EXPECT_EQ(specialize(a * b, xy(), images), specialize(a, xy(), images) * specialize(b, xy(), images));
    EXPECT_EQ(specialize(a + b, xy(), images), specialize(a, xy(), images) + specialize(b, xy(), images));
    // u2 <-> u3 is invisible after specialization
    std::vector<std::size_t> swap{0, 2, 1};
    EXPECT_EQ(specialize(permute_variables(a, swap), xy(), images), specialize(a, xy(), images));
  }
  EXPECT_THROW(specialize(LaurentPolynomial::variable(u, std::size_t{0}), xy(), {{"u1", C(1) + X()}}),
               InvalidArgument);
}

TEST(Laurent, PermuteVariables) {
  auto p = X() * X() + C(3) * Y();
  std::vector<std::size_t> swap{1, 0};
  EXPECT_EQ(permute_variables(p, swap), Y() * Y() + C(3) * X());
  EXPECT_EQ(permute_variables(p, std::map<std::string, std::string>{{"x1", "x2"}, {"x2", "x1"}}),
            Y() * Y() + C(3) * X());
  std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(permute_variables(p, bad), InvalidArgument);
}

TEST(Laurent, EvaluateAgreesWithArithmetic) {
  std::mt19937_64 rng(17);
  std::vector<Rational> point{Rational(2, 3), Rational(-5, 4)};
  for (int round = 0; round < 20; ++round) {
    auto a = random_poly(rng, xy(), 5, -3, 3);
    auto b = random_poly(rng, xy(), 5, -3, 3);
    EXPECT_EQ(evaluate(a * b, point), evaluate(a, point) * evaluate(b, point));
    EXPECT_EQ(evaluate(a + b, point), evaluate(a, point) + evaluate(b, point));
  }
  std::vector<Rational> zero{Rational(0), Rational(1)};
  EXPECT_THROW(evaluate(X(), zero), InvalidArgument);
}

TEST(Laurent, IsPositive) {
  EXPECT_TRUE(is_positive(C(1) + X()));
  EXPECT_FALSE(is_positive(C(1) - X()));
  EXPECT_TRUE(is_positive(LaurentPolynomial(xy())));
}

TEST(Laurent, BigCoefficientsAreExact) {
  auto p = pow(C(1) + X(), 200);
  EXPECT_EQ(p.coefficient(Exponents{100, 0}),
            Coefficient("90548514656103281165404177077484163874504589675413336841320"));
}

TEST(Laurent, ExpiredDeadlineAbortsLongProducts) {
  std::mt19937_64 rng(19);
  auto a = random_poly(rng, xy(), 3000, 0, 200);
  auto b = random_poly(rng, xy(), 3000, 0, 200);
  Deadline gone = Deadline::after(std::chrono::milliseconds(-1));
  EXPECT_THROW(multiply(a, b, gone), BudgetExceeded);
}

TEST(LaurentJson, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 10; ++round) {
    auto a = random_poly(rng, xy(), 8, -4, 4) * pow(C(1) + X(), 90);
    auto j = to_json(a);
    auto back = polynomial_from_json(j);
    EXPECT_EQ(back, a);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(LaurentJson, RejectsMalformedInput) {
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"variables":["x"]})")), InvalidArgument);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(
                   R"({"variables":["x"],"terms":[{"exponents":[1,2],"coefficient":"3"}]})")),
               InvalidArgument);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(
                   R"({"variables":["x"],"terms":[{"exponents":[1],"coefficient":"3z"}]})")),
               InvalidArgument);
}

}  // namespace
}  // namespace rank2cc
