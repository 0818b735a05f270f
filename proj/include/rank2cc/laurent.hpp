#pragma once

// Exact arithmetic in Z[z_1^{±1}, ..., z_n^{±1}] with arbitrary-precision
// integer coefficients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "rank2cc/deadline.hpp"
#include "rank2cc/errors.hpp"

namespace rank2cc {

using Coefficient = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Signed exponent vector of a Laurent monomial, one entry per context variable.
using Exponents = boost::container::small_vector<std::int32_t, 6>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int32_t x : e) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Lexicographic order, first variable most significant.
inline bool lex_less(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Colexicographic order, last variable most significant.
inline bool colex_less(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

inline std::int64_t total_degree(const Exponents& e) {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

/// Graded lexicographic order, descending (leading term first).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return lex_less(b, a);
  }
};

/// Ordered list of distinct variable names. Copies share storage.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->empty()) throw InvalidArgument("variable context must have at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : *names_) {
      if (n.empty()) throw InvalidArgument("variable names must be nonempty");
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
    }
  }

  std::size_t arity() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class LaurentPolynomial;
LaurentPolynomial multiply(const LaurentPolynomial& p, const LaurentPolynomial& q, const Deadline& deadline);

/// A Laurent polynomial in canonical form: no stored coefficient is zero.
class LaurentPolynomial {
 public:
  using TermMap = std::unordered_map<Exponents, Coefficient, ExponentsHash>;
  using Term = std::pair<Exponents, Coefficient>;

  explicit LaurentPolynomial(VariableContext ctx) : ctx_(std::move(ctx)) {}

  static LaurentPolynomial constant(const VariableContext& ctx, const Coefficient& c) {
    LaurentPolynomial p(ctx);
    p.add_term(Exponents(ctx.arity(), 0), c);
    return p;
  }

  static LaurentPolynomial monomial(const VariableContext& ctx, const Exponents& e,
                                    const Coefficient& c = 1) {
    if (e.size() != ctx.arity()) throw InvalidArgument("exponent vector length does not match context");
    LaurentPolynomial p(ctx);
    p.add_term(e, c);
    return p;
  }

  static LaurentPolynomial variable(const VariableContext& ctx, std::size_t index,
                                    std::int32_t power = 1) {
    if (index >= ctx.arity()) throw InvalidArgument("variable index out of range");
    Exponents e(ctx.arity(), 0);
    e[index] = power;
    return monomial(ctx, e);
  }

  static LaurentPolynomial variable(const VariableContext& ctx, std::string_view name,
                                    std::int32_t power = 1) {
    auto i = ctx.index_of(name);
    if (!i) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
    return variable(ctx, *i, power);
  }

  const VariableContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds c * z^e, keeping canonical form.
  void add_term(const Exponents& e, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Terms sorted lexicographically by exponent vector.
  std::vector<Term> sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return lex_less(a.first, b.first); });
    return out;
  }

  /// Same terms, reinterpreted over another context of the same arity.
  LaurentPolynomial with_context(const VariableContext& ctx) const {
    if (ctx.arity() != ctx_.arity()) throw ContextMismatch("arity differs");
    LaurentPolynomial p(ctx);
    p.terms_ = terms_;
    return p;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& q) {
    require_same_context(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& q) {
    require_same_context(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial p, const LaurentPolynomial& q) { return p += q; }
  friend LaurentPolynomial operator-(LaurentPolynomial p, const LaurentPolynomial& q) { return p -= q; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return multiply(p, q, Deadline{});
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& q) { return *this = *this * q; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  void require_same_context(const LaurentPolynomial& q) const {
    if (!(ctx_ == q.ctx_)) throw ContextMismatch("operands live in different rings");
  }

  void reserve(std::size_t n) { terms_.reserve(n); }

 private:
  VariableContext ctx_;
  TermMap terms_;
};


namespace detail {

// Dense coefficient arrays over the bounding box of a set of exponent vectors,
// laid out row-major with the first variable most significant, so that
// descending linear index is descending lexicographic order.
struct Box {
  Exponents lo;
  std::vector<std::int64_t> extent;
  std::vector<std::uint64_t> stride;
  std::uint64_t cells = 0;

  Box(Exponents low, std::vector<std::int64_t> ext) : lo(std::move(low)), extent(std::move(ext)) {
    const std::size_t n = extent.size();
    stride.assign(n, 1);
    cells = 1;
    for (std::size_t i = n; i-- > 0;) {
      stride[i] = cells;
      cells = extent[i] > 0 && cells > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(extent[i])
                  ? (std::uint64_t{1} << 40)
                  : cells * static_cast<std::uint64_t>(extent[i]);
    }
  }

  static Box of(const LaurentPolynomial& p) {
    const std::size_t n = p.context().arity();
    Exponents lo = p.terms().begin()->first, hi = lo;
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    std::vector<std::int64_t> ext(n);
    for (std::size_t i = 0; i < n; ++i) ext[i] = static_cast<std::int64_t>(hi[i]) - lo[i] + 1;
    return Box(std::move(lo), std::move(ext));
  }

  /// Linear index of e - origin in this box's strides.
  std::uint64_t index(const Exponents& e, const Exponents& origin) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < stride.size(); ++i) idx += static_cast<std::uint64_t>(e[i] - origin[i]) * stride[i];
    return idx;
  }

  Exponents coords(std::uint64_t idx) const {
    Exponents e(stride.size(), 0);
    for (std::size_t i = 0; i < stride.size(); ++i) {
      e[i] = static_cast<std::int32_t>(idx / stride[i]);
      idx %= stride[i];
    }
    return e;
  }
};

constexpr std::uint64_t kDenseCellLimit = std::uint64_t{1} << 24;

inline void add_product(Coefficient& acc, const Coefficient& a, const Coefficient& b) {
  mpz_addmul(acc.backend().data(), a.backend().data(), b.backend().data());
}

inline void sub_product(Coefficient& acc, const Coefficient& a, const Coefficient& b) {
  mpz_submul(acc.backend().data(), a.backend().data(), b.backend().data());
}

}  // namespace detail

inline LaurentPolynomial multiply(const LaurentPolynomial& p, const LaurentPolynomial& q, const Deadline& deadline) {
  p.require_same_context(q);
  LaurentPolynomial r(p.context());
  if (p.is_zero() || q.is_zero()) return r;
  const std::size_t n = p.context().arity();
  const std::uint64_t pairs = static_cast<std::uint64_t>(p.size()) * q.size();
  std::uint64_t ticks = 0;
  const bool wide = q.size() > 64;

  if (pairs >= 4096) {
    detail::Box bp = detail::Box::of(p), bq = detail::Box::of(q);
    Exponents lo(n, 0);
    std::vector<std::int64_t> ext(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = bp.lo[i] + bq.lo[i];
      ext[i] = bp.extent[i] + bq.extent[i] - 1;
    }
    detail::Box box(lo, ext);
    if (box.cells <= detail::kDenseCellLimit && box.cells <= 4 * pairs) {
      std::vector<std::pair<std::uint64_t, const Coefficient*>> qi;
      qi.reserve(q.size());
      for (const auto& [e, c] : q.terms()) qi.emplace_back(box.index(e, bq.lo), &c);
      std::vector<Coefficient> acc(box.cells);
      Coefficient prod;
      for (const auto& [e, c] : p.terms()) {
        if (wide) deadline.check(); else deadline.poll(ticks);
        const std::uint64_t base = box.index(e, bp.lo);
        for (const auto& [off, cq] : qi) {
          detail::add_product(acc[base + off], c, *cq);
        }
      }
      for (std::uint64_t idx = 0; idx < box.cells; ++idx) {
        if (acc[idx] == 0) continue;
        Exponents e = box.coords(idx);
        for (std::size_t i = 0; i < n; ++i) e[i] += lo[i];
        r.add_term(e, acc[idx]);
      }
      return r;
    }
  }

  r.reserve(p.size() * q.size() / 2 + 1);
  Exponents e(n, 0);
  Coefficient prod;
  for (const auto& [ea, ca] : p.terms()) {
    if (wide) deadline.check(); else deadline.poll(ticks);
    for (const auto& [eb, cb] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca;
      prod *= cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

inline LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
inline LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }

inline LaurentPolynomial pow(const LaurentPolynomial& p, unsigned n, const Deadline& deadline = {}) {
  auto result = LaurentPolynomial::constant(p.context(), 1);
  if (n == 0) return result;
  LaurentPolynomial base = p;
  while (true) {
    if (n & 1U) result = multiply(result, base, deadline);
    n >>= 1U;
    if (n == 0) break;
    base = multiply(base, base, deadline);
  }
  return result;
}

/// Multiplies by the monomial z^shift.
inline LaurentPolynomial shift(const LaurentPolynomial& p, const Exponents& by) {
  LaurentPolynomial r(p.context());
  Exponents e;
  for (const auto& [ex, c] : p.terms()) {
    e = ex;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += by[i];
    r.add_term(e, c);
  }
  return r;
}

/// Componentwise minimum exponent over all terms. Requires p != 0.
inline Exponents min_exponents(const LaurentPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no exponents");
  Exponents m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

/// Denominator of p written as N / z^d with N a polynomial: d_i = max(0, -min_i).
inline Exponents denominator_exponents(const LaurentPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("denominator_exponents of the zero polynomial");
  Exponents d = min_exponents(p);
  for (auto& x : d) x = x < 0 ? -x : 0;
  return d;
}

/// Exact quotient p / q in the Laurent ring, or NotDivisible.
///
/// Both operands are shifted to polynomials not divisible by any variable;
/// a Laurent quotient exists iff the polynomial quotient does. The latter is
/// found by lexicographic division on a dense box when the dividend is small
/// enough, else graded-lexicographic division; any nonzero remainder is rejected.
inline LaurentPolynomial exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                   const Deadline& deadline = {}) {
  p.require_same_context(q);
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.is_zero()) return LaurentPolynomial(p.context());

  const std::size_t n = p.context().arity();
  Exponents pmin = min_exponents(p), qmin = min_exponents(q);

  if (q.size() == 1) {
    const auto& [qe, qc] = *q.terms().begin();
    LaurentPolynomial r(p.context());
    Exponents e(n, 0);
    for (const auto& [pe, pc] : p.terms()) {
      if (pc % qc != 0) throw NotDivisible("coefficient not divisible by monomial coefficient");
      for (std::size_t i = 0; i < n; ++i) e[i] = pe[i] - qe[i];
      r.add_term(e, pc / qc);
    }
    return r;
  }

  if (auto box = detail::Box::of(p); box.cells <= detail::kDenseCellLimit) {
    // Lexicographic division on a dense array; the scan visits the remainder's
    // leading term in descending linear index.
    detail::Box dbox = detail::Box::of(q);
    std::vector<std::int64_t> qext(n);
    for (std::size_t i = 0; i < n; ++i) {
      qext[i] = box.extent[i] - dbox.extent[i] + 1;
      if (qext[i] < 1) throw NotDivisible("divisor is wider than the dividend");
    }
    std::vector<Coefficient> rem(box.cells);
    for (const auto& [e, c] : p.terms()) rem[box.index(e, pmin)] = c;
    std::vector<std::pair<std::uint64_t, const Coefficient*>> divisor;
    divisor.reserve(q.size());
    for (const auto& [e, c] : q.terms()) divisor.emplace_back(box.index(e, qmin), &c);
    std::sort(divisor.begin(), divisor.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::uint64_t lead_off = divisor.front().first;
    const Coefficient& lead_c = *divisor.front().second;
    const Exponents lead_e = box.coords(lead_off);

    LaurentPolynomial quotient(p.context());
    Coefficient tc, prod;
    std::uint64_t ticks = 0;
    for (std::uint64_t idx = box.cells; idx-- > 0;) {
      deadline.poll(ticks);
      if (rem[idx] == 0) continue;
      Exponents t = box.coords(idx);
      for (std::size_t i = 0; i < n; ++i) {
        t[i] -= lead_e[i];
        if (t[i] < 0 || t[i] >= qext[i]) throw NotDivisible("nonzero remainder in Laurent division");
      }
      if (rem[idx] % lead_c != 0) throw NotDivisible("nonzero remainder in Laurent division");
      tc = rem[idx] / lead_c;
      const std::uint64_t toff = idx - lead_off;
      for (const auto& [off, dc] : divisor) {
        detail::sub_product(rem[toff + off], tc, *dc);
      }
      for (std::size_t i = 0; i < n; ++i) t[i] += pmin[i] - qmin[i];
      quotient.add_term(t, tc);
    }
    return quotient;
  }

  using Ordered = std::map<Exponents, Coefficient, GrlexGreater>;
  Ordered rem;
  for (const auto& [e, c] : p.terms()) {
    Exponents s = e;
    for (std::size_t i = 0; i < n; ++i) s[i] -= pmin[i];
    rem.emplace(std::move(s), c);
  }
  std::vector<LaurentPolynomial::Term> divisor;
  divisor.reserve(q.size());
  for (const auto& [e, c] : q.terms()) {
    Exponents s = e;
    for (std::size_t i = 0; i < n; ++i) s[i] -= qmin[i];
    divisor.emplace_back(std::move(s), c);
  }
  std::sort(divisor.begin(), divisor.end(),
            [](const auto& a, const auto& b) { return GrlexGreater{}(a.first, b.first); });
  const Exponents& lead_e = divisor.front().first;
  const Coefficient& lead_c = divisor.front().second;

  LaurentPolynomial quotient(p.context());
  Exponents t(n, 0), e(n, 0);
  Coefficient tc, prod;
  std::uint64_t ticks = 0;
  while (!rem.empty()) {
    deadline.poll(ticks);
    auto it = rem.begin();
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = it->first[i] - lead_e[i];
      if (t[i] < 0) throw NotDivisible("nonzero remainder in Laurent division");
    }
    if (it->second % lead_c != 0) throw NotDivisible("nonzero remainder in Laurent division");
    tc = it->second / lead_c;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.size(); ++k) {
      const auto& [de, dc] = divisor[k];
      for (std::size_t i = 0; i < n; ++i) e[i] = de[i] + t[i];
      prod = tc;
      prod *= dc;
      auto [slot, inserted] = rem.try_emplace(e);
      slot->second -= prod;
      if (slot->second == 0) rem.erase(slot);
    }
    Exponents qe = t;
    for (std::size_t i = 0; i < n; ++i) qe[i] += pmin[i] - qmin[i];
    quotient.add_term(qe, tc);
  }
  return quotient;
}

/// Ring homomorphism sending each source variable to a unit monomial of `target`.
/// `images` is keyed by source variable name.
inline LaurentPolynomial specialize(const LaurentPolynomial& p, const VariableContext& target,
                                    const std::map<std::string, LaurentPolynomial>& images) {
  const auto& src = p.context();
  std::vector<std::optional<Exponents>> image_of(src.arity());
  for (const auto& [name, img] : images) {
    auto i = src.index_of(name);
    if (!i) continue;
    if (!(img.context() == target)) throw ContextMismatch("image of '" + name + "' is not in the target ring");
    if (img.size() != 1 || img.terms().begin()->second != 1)
      throw InvalidArgument("image of '" + name + "' must be a unit-coefficient monomial");
    image_of[*i] = img.terms().begin()->first;
  }
  std::vector<bool> used(src.arity(), false);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < src.arity(); ++i)
    if (used[i] && !image_of[i]) throw InvalidArgument("no image given for variable '" + src.name(i) + "'");

  LaurentPolynomial r(target);
  Exponents out(target.arity(), 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const Exponents& img = *image_of[i];
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += e[i] * img[j];
    }
    r.add_term(out, c);
  }
  return r;
}

/// Applies the variable permutation z_i -> z_{image[i]}.
inline LaurentPolynomial permute_variables(const LaurentPolynomial& p, std::span<const std::size_t> image) {
  const std::size_t n = p.context().arity();
  if (image.size() != n) throw InvalidArgument("permutation size does not match context arity");
  std::vector<bool> hit(n, false);
  for (auto j : image) {
    if (j >= n || hit[j]) throw InvalidArgument("not a permutation of the context variables");
    hit[j] = true;
  }
  LaurentPolynomial r(p.context());
  Exponents out(n, 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) out[image[i]] = e[i];
    r.add_term(out, c);
  }
  return r;
}

/// Name-based overload; variables absent from `g` are fixed.
inline LaurentPolynomial permute_variables(const LaurentPolynomial& p,
                                           const std::map<std::string, std::string>& g) {
  const auto& ctx = p.context();
  std::vector<std::size_t> image(ctx.arity());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  for (const auto& [from, to] : g) {
    auto a = ctx.index_of(from), b = ctx.index_of(to);
    if (!a || !b) throw InvalidArgument("permutation mentions unknown variable");
    image[*a] = *b;
  }
  return permute_variables(p, image);
}

/// Subtraction-free check. The zero polynomial is positive by convention.
inline bool is_positive(const LaurentPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second > 0; });
}

/// Exact value at a point with all coordinates nonzero.
inline Rational evaluate(const LaurentPolynomial& p, std::span<const Rational> point) {
  const std::size_t n = p.context().arity();
  if (point.size() != n) throw InvalidArgument("evaluation point has wrong dimension");
  for (const auto& a : point)
    if (a == 0) throw InvalidArgument("evaluation point has a zero coordinate");

  std::vector<std::map<std::int32_t, Rational>> powers(n);
  auto power = [&](std::size_t i, std::int32_t k) -> const Rational& {
    auto it = powers[i].find(k);
    if (it != powers[i].end()) return it->second;
    Rational base = k < 0 ? Rational(1) / point[i] : point[i];
    Rational v = 1;
    for (std::int32_t j = 0; j < (k < 0 ? -k : k); ++j) v *= base;
    return powers[i].emplace(k, std::move(v)).first->second;
  };
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    sum += t;
  }
  return sum;
}

namespace detail {

inline std::string format_monomial(const VariableContext& ctx, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ctx.name(i);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace detail

/// Single-line fraction form "N / D" with D the monomial denominator.
/// Numerator terms are ordered colexicographically (last variable most significant).
inline std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = p.context();
  Exponents den = denominator_exponents(p);

  std::vector<LaurentPolynomial::Term> num;
  num.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Exponents s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += den[i];
    num.emplace_back(std::move(s), c);
  }
  std::sort(num.begin(), num.end(),
            [](const auto& a, const auto& b) { return colex_less(a.first, b.first); });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : num) {
    Coefficient mag = c < 0 ? Coefficient(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = detail::format_monomial(ctx, e);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  std::string numerator = os.str();

  std::string denominator = detail::format_monomial(ctx, den);
  if (denominator.empty()) return numerator;
  std::size_t factors = std::count_if(den.begin(), den.end(), [](auto x) { return x != 0; });
  if (num.size() > 1) numerator = "(" + numerator + ")";
  if (factors > 1) denominator = "(" + denominator + ")";
  return numerator + " / " + denominator;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << to_string(p); }

}  // namespace rank2cc
