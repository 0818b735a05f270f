// Acceptance run: one PASS/FAIL line per criterion, with wall-clock timings.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rank2cc/rank2cc.hpp"

using namespace rank2cc;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Euler characteristics gathered while running criteria 1-4.
std::vector<ChiRecord> g_chi_log;
// Indices resolved in criterion 4, by type.
std::vector<std::tuple<int, int, std::int64_t>> g_resolved;

CCOptions logged() {
  CCOptions o;
  o.seed = kSeed;
  o.chi_log = &g_chi_log;
  return o;
}

std::string summary(const CheckReport& r) {
  return std::to_string(r.count(Status::Pass)) + " passed, " + std::to_string(r.count(Status::Fail)) + " failed, " +
         std::to_string(r.count(Status::Inconclusive)) + " inconclusive" + (r.witness ? "; witness: " + *r.witness : "");
}

LaurentPolynomial u(const VariableContext& ctx, std::size_t i, int power = 1) {
  return LaurentPolynomial::variable(ctx, i, power);
}

// The four displayed characters for K_{2,3}, as functions of the vertex.
std::vector<std::pair<ModuleSpec, LaurentPolynomial>> worked_example() {
  Quiver q = kronecker_quiver(2, 3);
  VariableContext ctx = u_context(q);
  auto one = LaurentPolynomial::constant(ctx, 1);
  auto vv = u(ctx, 0) * u(ctx, 1);
  auto www = u(ctx, 2) * u(ctx, 3) * u(ctx, 4);
  std::vector<std::pair<ModuleSpec, LaurentPolynomial>> out;
  for (std::size_t j = 2; j < 5; ++j) {
    out.emplace_back(ModuleSpec::projective(j), (one + vv) * u(ctx, j, -1));
    out.emplace_back(ModuleSpec::injective(j), (one + vv + LaurentPolynomial::constant(ctx, 2) * www + www * www) *
                                                   u(ctx, j, -1) * u(ctx, 0, -1) * u(ctx, 1, -1));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    out.emplace_back(ModuleSpec::projective(i),
                     (pow(one + vv, 3) + www) * u(ctx, i, -1) * u(ctx, 2, -1) * u(ctx, 3, -1) * u(ctx, 4, -1));
    out.emplace_back(ModuleSpec::injective(i), (one + www) * u(ctx, i, -1));
  }
  return out;
}

Outcome criterion1() {
  Quiver q = kronecker_quiver(2, 3);
  for (const auto& [spec, expected] : worked_example()) {
    auto got = cc_polynomial(q, spec, logged());
    if (!(got == expected)) return {false, describe(q, spec) + ": got " + to_string(got)};
  }
  return {true, "10 characters match"};
}

Outcome criterion2() {
  const VariableContext& x = initial_context();
  auto X1 = u(x, 0), X2 = u(x, 1), one = LaurentPolynomial::constant(x, 1);
  auto den = [&](int a, int b) { return LaurentPolynomial::monomial(x, Exponents{-a, -b}); };
  struct Case {
    ModuleSpec spec;
    std::int64_t k;
    LaurentPolynomial expected;
  };
  std::vector<Case> cases{
      {ModuleSpec::projective(0), -1,
       (one + pow(X1, 6) + LaurentPolynomial::constant(x, 3) * pow(X1, 4) + LaurentPolynomial::constant(x, 3) * pow(X1, 2) +
        pow(X2, 3)) * den(1, 3)},
      {ModuleSpec::projective(2), 0, (one + pow(X1, 2)) * den(0, 1)},
      {ModuleSpec::injective(0), 3, (one + pow(X2, 3)) * den(1, 0)},
      {ModuleSpec::injective(2), 4,
       (one + pow(X1, 2) + LaurentPolynomial::constant(x, 2) * pow(X2, 3) + pow(X2, 6)) * den(2, 1)},
  };
  Quiver q = kronecker_quiver(2, 3);
  for (const auto& c : cases) {
    auto folded = fold(cc_polynomial(q, c.spec, logged()), 2, 3);
    if (!(folded == c.expected)) return {false, "fold X_" + describe(q, c.spec) + " = " + to_string(folded)};
    if (!(folded == cluster_variable(ExchangeType(2, 3), c.k)))
      return {false, "x_" + std::to_string(c.k) + " differs from the folded character"};
  }
  return {true, "x_-1, x_0, x_3, x_4 reproduced"};
}

Outcome criterion3() {
  const auto deadline = Deadline::after(std::chrono::minutes(2));
  SweepOptions opts;
  opts.deadline = deadline;
  CheckReport total;
  std::string per_type;
  // cheapest types first so the budget covers as much as possible
  const std::vector<std::pair<int, int>> types{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (auto [b, c] : types) {
    auto r = check_positivity_range(ExchangeType(b, c), -6, 8, -3, 3, opts);
    total.merge(r);
    per_type += " (" + std::to_string(b) + "," + std::to_string(c) + "):" + status_name(r.status());
  }
  return {total.passed(), summary(total) + ";" + per_type};
}

Outcome criterion4() {
  CheckReport total;
  auto run = [&](int b, int c, std::int64_t k) {
    auto r = verify_folding(b, c, k, logged());
    total.merge(r);
    if (r.passed()) g_resolved.emplace_back(b, c, k);
  };
  for (auto [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})
    for (std::int64_t k = -1; k <= 4; ++k) run(b, c, k);
  for (auto [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
    for (std::int64_t k : {-3, -2, 5, 6}) run(b, c, k);
  return {total.passed(), summary(total)};
}

Outcome criterion5() {
  if (g_chi_log.empty()) return {false, "no Euler characteristics were recorded"};
  for (const auto& r : g_chi_log) {
    if (r.value.chi < 0) return {false, "negative chi for " + r.module + " e=" + r.value.e.to_string()};
    if (r.value.counts.empty() || r.value.holdout_predicted != r.value.counts.back().second)
      return {false, "holdout prime disagrees for " + r.module + " e=" + r.value.e.to_string()};
  }
  return {true, std::to_string(g_chi_log.size()) + " characteristics, all >= 0 with exact holdout agreement"};
}

Outcome criterion6() {
  CheckReport total;
  total.merge(verify_exchange_relation(2, 3, VertexClass::W, 0, CCOptions{.seed = kSeed}));
  total.merge(verify_exchange_relation(2, 3, VertexClass::W, 1, CCOptions{.seed = kSeed}));
  total.merge(verify_exchange_relation(2, 3, VertexClass::V, 0, CCOptions{.seed = kSeed}));
  for (auto [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}})
    for (auto cls : {VertexClass::V, VertexClass::W})
      for (std::int64_t s = -1; s <= 1; ++s) total.merge(verify_exchange_relation(b, c, cls, s, CCOptions{.seed = kSeed}));
  return {total.passed(), summary(total)};
}

Outcome criterion7() {
  Quiver q = kronecker_quiver(2, 3);
  std::vector<std::vector<std::size_t>> transpositions{
      {1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}, {0, 1, 4, 3, 2}, {0, 1, 2, 4, 3}};
  CheckReport total;
  for (const auto& g : transpositions)
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto spec : {ModuleSpec::projective(i), ModuleSpec::injective(i)}) {
        auto obj = CCObject::of_module(spec);
        total.merge(g_equivariance_check(q, obj, g));
        auto x = cc_polynomial(q, obj);
        bool same = fold(permute_variables(x, g), 2, 3) == fold(x, 2, 3);
        total.add("fold g X_" + describe(q, obj), same ? Status::Pass : Status::Fail);
      }
  return {total.passed(), summary(total)};
}

Outcome criterion8() {
  struct Case {
    int b, c;
    std::optional<int> expected;
  };
  std::vector<Case> cases{{1, 1, 5}, {1, 2, 6}, {2, 1, 6}, {1, 3, 8}, {3, 1, 8}, {2, 2, std::nullopt}};
  std::string detail;
  for (const auto& cs : cases) {
    auto got = detect_period(ExchangeType(cs.b, cs.c), 50);
    detail += " (" + std::to_string(cs.b) + "," + std::to_string(cs.c) + "):" + (got ? std::to_string(*got) : "none");
    if (got != cs.expected) return {false, "mismatch:" + detail};
  }
  return {true, "periods" + detail};
}

Outcome criterion9() {
  if (g_resolved.empty()) return {false, "no indices were resolved in criterion 4"};
  CheckReport total;
  for (auto [b, c, k] : g_resolved) total.merge(verify_denominator_law(b, c, k, CCOptions{.seed = kSeed}));
  return {total.passed(), summary(total)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{{1, 5, criterion1},   {2, 5, criterion2},  {3, 120, criterion3},
                                  {4, 180, criterion4}, {5, 0, criterion5},  {6, 0, criterion6},
                                  {7, 0, criterion7},   {8, 10, criterion8}, {9, 0, criterion9}};
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s (%.2f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
