#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rank2cc/errors.hpp"
#include "rank2cc/laurent.hpp"

namespace rank2cc {

struct Sample {
  Rational x;
  Rational y;
};

/// Value at `x` of the unique polynomial of degree < samples.size() through
/// the samples. Abscissae must be distinct.
inline Rational lagrange_evaluate(std::span<const Sample> samples, const Rational& x) {
  if (samples.empty()) throw InvalidArgument("interpolation needs at least one sample");
  Rational sum = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rational basis = 1;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (i == j) continue;
      Rational gap = samples[i].x - samples[j].x;
      if (gap == 0) throw InvalidArgument("interpolation abscissae must be distinct");
      basis *= (x - samples[j].x) / gap;
    }
    sum += samples[i].y * basis;
  }
  return sum;
}

/// Monomial coefficients c_0..c_{n-1} of the interpolating polynomial.
inline std::vector<Rational> lagrange_coefficients(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  std::vector<Rational> coeffs(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // prod_{j != i} (x - x_j) / (x_i - x_j), expanded
    std::vector<Rational> basis{1};
    Rational scale = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational gap = samples[i].x - samples[j].x;
      if (gap == 0) throw InvalidArgument("interpolation abscissae must be distinct");
      scale *= gap;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * samples[j].x;
      }
      basis = std::move(next);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += samples[i].y * basis[k] / scale;
  }
  return coeffs;
}

}  // namespace rank2cc
