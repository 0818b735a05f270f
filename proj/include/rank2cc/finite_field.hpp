#pragma once

// Dense linear algebra over prime fields F_p and enumeration of subspaces.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "rank2cc/errors.hpp"
#include "rank2cc/laurent.hpp"

namespace rank2cc {

using Fp = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

inline Fp mul_mod(Fp a, Fp b, Fp p) {
  return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p);
}

inline Fp inv_mod(Fp a, Fp p) {
  std::uint64_t r = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Fp>(r);
}

/// Row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  /// Appends the rows of `other` (same column count).
  void append_rows(const FpMatrix& other) {
    if (other.cols_ != cols_ && rows_ != 0) throw InvalidArgument("row stacking with mismatched widths");
    if (rows_ == 0) cols_ = other.cols_;
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

/// a * b over F_p.
inline FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, Fp p) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not compose");
  FpMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Fp x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) = static_cast<Fp>((r(i, j) + static_cast<std::uint64_t>(x) * b(k, j)) % p);
    }
  return r;
}

inline FpMatrix transpose(const FpMatrix& a) {
  FpMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// In-place reduced row echelon form; returns the rank.
inline std::size_t row_reduce(FpMatrix& m, Fp p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    Fp inv = inv_mod(m(rank, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = mul_mod(m(rank, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      Fp f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = static_cast<Fp>((m(i, j) + static_cast<std::uint64_t>(p - f) * m(rank, j)) % p);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(FpMatrix m, Fp p) { return row_reduce(m, p); }

/// [n choose k]_q, the number of k-dimensional subspaces of F_q^n.
inline Coefficient gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (k < 0 || k > n) return 0;
  Coefficient num = 1, den = 1;
  if (q == 1) {  // the classical limit: an ordinary binomial coefficient
    for (std::int64_t i = 0; i < k; ++i) {
      num *= n - i;
      den *= i + 1;
    }
    return num / den;
  }
  for (std::int64_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Coefficient(q), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(Coefficient(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

/// Calls `visit(basis)` once for every k-dimensional subspace of F_p^n, where
/// `basis` is the k x n reduced row echelon basis. Returning false stops early.
inline void for_each_subspace(std::size_t n, std::size_t k, Fp p,
                              const std::function<bool(const FpMatrix&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> pivots(k);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  FpMatrix basis(k, n);
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);

    basis = FpMatrix(k, n);
    for (std::size_t r = 0; r < k; ++r) basis(r, pivots[r]) = 1;
    std::vector<Fp> digits(free.size(), 0);
    while (true) {
      if (!visit(basis)) return;
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        auto [r, c] = free[i];
        if (++digits[i] < p) {
          basis(r, c) = digits[i];
          break;
        }
        digits[i] = 0;
        basis(r, c) = 0;
      }
      if (i == digits.size()) break;
    }

    // next pivot combination
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace rank2cc
