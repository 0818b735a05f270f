#pragma once

// Cluster variables of the coefficient-free rank-two cluster algebra A(b,c):
//
//   x_{m+1} x_{m-1} = x_m^b + 1   (m odd)
//   x_{m+1} x_{m-1} = x_m^c + 1   (m even)

#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "rank2cc/check_report.hpp"
#include "rank2cc/deadline.hpp"
#include "rank2cc/laurent.hpp"

namespace rank2cc {

/// Exchange type (b, c) of A(b,c); exchange matrix [[0, b], [-c, 0]].
class ExchangeType {
 public:
  ExchangeType(int b, int c) : b_(b), c_(c) {
    if (b < 1 || c < 1) throw InvalidArgument("exchange type requires b, c >= 1");
  }
  int b() const { return b_; }
  int c() const { return c_; }
  /// Exponent used when stepping away from x_m.
  int exponent_at(std::int64_t m) const { return (m % 2 != 0) ? b_ : c_; }
  friend bool operator==(const ExchangeType&, const ExchangeType&) = default;

 private:
  int b_;
  int c_;
};

inline const VariableContext& initial_context() {
  static const VariableContext ctx({"x1", "x2"});
  return ctx;
}

inline const VariableContext& shifted_context() {
  static const VariableContext ctx({"y1", "y2"});
  return ctx;
}

/// Memoized two-sided sequence x_k of A(b,c) in the initial cluster (x_1, x_2).
/// Extension is serialized per sequence; lookups of cached entries are cheap.
class ClusterSequence {
 public:
  explicit ClusterSequence(ExchangeType t) : type_(t) {
    const auto& ctx = initial_context();
    memo_.emplace(1, LaurentPolynomial::variable(ctx, std::size_t{0}));
    memo_.emplace(2, LaurentPolynomial::variable(ctx, std::size_t{1}));
  }

  const ExchangeType& type() const { return type_; }

  /// x_k; throws NotDivisible if a recurrence division is inexact and
  /// BudgetExceeded if `deadline` expires mid-computation.
  LaurentPolynomial at(std::int64_t k, const Deadline& deadline = {}) {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    const auto one = LaurentPolynomial::constant(initial_context(), 1);
    if (k > 2) {
      for (std::int64_t j = memo_.rbegin()->first; j < k; ++j) {
        deadline.check();
        const auto& cur = memo_.at(j);
        const auto& prev = memo_.at(j - 1);
        auto next = exact_div(pow(cur, type_.exponent_at(j), deadline) + one, prev, deadline);
        memo_.emplace(j + 1, std::move(next));
      }
    } else {
      for (std::int64_t j = memo_.begin()->first; j > k; --j) {
        deadline.check();
        const auto& cur = memo_.at(j);
        const auto& after = memo_.at(j + 1);
        auto next = exact_div(pow(cur, type_.exponent_at(j), deadline) + one, after, deadline);
        memo_.emplace(j - 1, std::move(next));
      }
    }
    return memo_.at(k);
  }

  /// True if x_k is already cached.
  bool cached(std::int64_t k) const {
    std::lock_guard lock(mutex_);
    return memo_.count(k) != 0;
  }

 private:
  ExchangeType type_;
  mutable std::mutex mutex_;
  std::map<std::int64_t, LaurentPolynomial> memo_;
};

/// Process-wide cache of sequences, one per exchange type.
inline ClusterSequence& sequence_for(const ExchangeType& t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ClusterSequence>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[{t.b(), t.c()}];
  if (!slot) slot = std::make_unique<ClusterSequence>(t);
  return *slot;
}

/// x_k of A(b,c) as a Laurent polynomial in (x1, x2).
inline LaurentPolynomial cluster_variable(const ExchangeType& t, std::int64_t k,
                                          const Deadline& deadline = {}) {
  return sequence_for(t).at(k, deadline);
}

/// x_k of A(b,c) as a Laurent polynomial in (y1, y2) = (x_m, x_{m+1}).
///
/// Parity is keyed off the absolute index: seen from the cluster at m, the
/// relative sequence x_{m-1+r} obeys the recurrence of A(b,c) when m is odd
/// and of A(c,b) when m is even.
inline LaurentPolynomial expand_in_cluster(const ExchangeType& t, std::int64_t k, std::int64_t m,
                                           const Deadline& deadline = {}) {
  ExchangeType relative = (m % 2 != 0) ? t : ExchangeType(t.c(), t.b());
  return sequence_for(relative).at(k - m + 1, deadline).with_context(shifted_context());
}

/// Denominator vector of x_k in the initial cluster, with the max(0, .) convention.
inline std::pair<std::int64_t, std::int64_t> d_vector(const ExchangeType& t, std::int64_t k) {
  auto d = denominator_exponents(cluster_variable(t, k));
  return {d[0], d[1]};
}

namespace detail {

// Values of x_k at a fixed point modulo 2^61 - 1; used only to rule out
// periodicity cheaply before a symbolic confirmation.
class ModularOrbit {
 public:
  explicit ModularOrbit(const ExchangeType& t) : type_(t) {
    values_ = {123456789ULL, 987654321ULL};
  }

  /// x_{k} for k >= 1, or nullopt if a division by zero mod P occurred.
  std::optional<std::uint64_t> at(std::int64_t k) {
    while (ok_ && static_cast<std::int64_t>(values_.size()) < k) {
      std::int64_t j = static_cast<std::int64_t>(values_.size());  // index of the last value
      std::uint64_t cur = values_[j - 1], prev = values_[j - 2];
      if (prev == 0) {
        ok_ = false;
        break;
      }
      values_.push_back(mulmod(addmod(powmod(cur, type_.exponent_at(j)), 1), inverse(prev)));
    }
    if (!ok_) return std::nullopt;
    return values_[k - 1];
  }

 private:
  static constexpr std::uint64_t kP = (1ULL << 61) - 1;
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kP);
  }
  static std::uint64_t addmod(std::uint64_t a, std::uint64_t b) { return (a + b) % kP; }
  static std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inverse(std::uint64_t a) { return powmod(a, kP - 2); }

  ExchangeType type_;
  std::vector<std::uint64_t> values_;
  bool ok_ = true;
};

}  // namespace detail

/// Smallest p <= max_period with x_{k+p} = x_k for k in {1, 2}.
inline std::optional<int> detect_period(const ExchangeType& t, int max_period) {
  if (max_period < 1) throw InvalidArgument("max_period must be >= 1");
  detail::ModularOrbit orbit(t);
  const auto x1 = LaurentPolynomial::variable(initial_context(), std::size_t{0});
  const auto x2 = LaurentPolynomial::variable(initial_context(), std::size_t{1});
  for (int p = 1; p <= max_period; ++p) {
    auto a = orbit.at(1 + p), b = orbit.at(2 + p);
    bool candidate = !a || !b || (*a == *orbit.at(1) && *b == *orbit.at(2));
    if (!candidate) continue;
    if (cluster_variable(t, 1 + p) == x1 && cluster_variable(t, 2 + p) == x2) return p;
  }
  return std::nullopt;
}

struct SweepOptions {
  bool positivity = true;
  bool laurent = true;
  bool denominator = false;
  Deadline deadline;
};

/// Checks x_k in every cluster (x_m, x_{m+1}) over the given ranges.
inline CheckReport check_positivity_range(const ExchangeType& t, std::int64_t k_min, std::int64_t k_max,
                                          std::int64_t m_min, std::int64_t m_max,
                                          const SweepOptions& opts = {}) {
  if (k_min > k_max || m_min > m_max) throw InvalidArgument("empty sweep range");
  CheckReport report;
  report.check = "sweep A(" + std::to_string(t.b()) + "," + std::to_string(t.c()) + ")";
  report.scope = "k in [" + std::to_string(k_min) + "," + std::to_string(k_max) + "], m in [" +
                 std::to_string(m_min) + "," + std::to_string(m_max) + "]";

  if (opts.positivity || opts.laurent) {
    for (std::int64_t m = m_min; m <= m_max; ++m) {
      for (std::int64_t k = k_min; k <= k_max; ++k) {
        std::string label = "x_" + std::to_string(k) + " in cluster m=" + std::to_string(m);
        try {
          auto p = expand_in_cluster(t, k, m, opts.deadline);
          if (opts.positivity && !is_positive(p))
            report.add(label, Status::Fail, "negative coefficient in " + to_string(p));
          else
            report.add(label, Status::Pass, std::to_string(p.size()) + " terms");
        } catch (const NotDivisible& e) {
          report.add(label, opts.laurent ? Status::Fail : Status::Inconclusive,
                     std::string("inexact recurrence division: ") + e.what());
        } catch (const BudgetExceeded& e) {
          report.add(label, Status::Inconclusive, e.what());
        }
      }
    }
  }

  if (opts.denominator) {
    // For bc >= 4 the max-norm grows along each parity class once past the
    // seed. Consecutive terms need not grow when b != c: for (1,4) the
    // d-vectors of x_5, x_6 are (3,4), (2,3).
    const bool growing = static_cast<long>(t.b()) * t.c() >= 4;
    std::map<std::int64_t, std::int64_t> norms;
    auto check_direction = [&](std::int64_t from, std::int64_t to, std::int64_t step) {
      for (std::int64_t k = from; step > 0 ? k <= to : k >= to; k += step) {
        std::string label = "d-vector of x_" + std::to_string(k);
        try {
          auto d = denominator_exponents(cluster_variable(t, k, opts.deadline));
          std::int64_t norm = std::max<std::int64_t>(d[0], d[1]);
          norms[k] = norm;
          std::string detail = "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + ")";
          auto before = norms.find(k - 2 * step);
          bool past_seed = step > 0 ? k - 2 * step >= 3 : k - 2 * step <= 0;
          if (d[0] < 0 || d[1] < 0)
            report.add(label, Status::Fail, "negative entry " + detail);
          else if (growing && past_seed && before != norms.end() && norm <= before->second)
            report.add(label, Status::Fail, "max-norm did not grow past x_" + std::to_string(k - 2 * step) + " " + detail);
          else
            report.add(label, Status::Pass, detail);
        } catch (const NotDivisible& e) {
          report.add(label, Status::Fail, e.what());
        } catch (const BudgetExceeded& e) {
          report.add(label, Status::Inconclusive, e.what());
        }
      }
    };
    if (k_max >= 1) check_direction(std::max<std::int64_t>(k_min, 1), k_max, 1);
    if (k_min <= 0) check_direction(std::min<std::int64_t>(k_max, 0), k_min, -1);
  }
  return report;
}

}  // namespace rank2cc
