#pragma once

// Acyclic quivers (chiefly the generalized Kronecker quiver K_{b,c}), their
// Euler form and Coxeter transformation, representations over F_p, and
// Euler characteristics of quiver Grassmannians via point counting.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rank2cc/errors.hpp"
#include "rank2cc/finite_field.hpp"
#include "rank2cc/interpolation.hpp"
#include "rank2cc/laurent.hpp"

namespace rank2cc {

/// Nonnegative integer vector indexed by the vertices of a quiver.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int d : dims_)
      if (d < 0) throw InvalidArgument("dimension vectors are nonnegative");
  }
  DimensionVector(std::initializer_list<int> dims) : DimensionVector(std::vector<int>(dims)) {}

  static DimensionVector zero(std::size_t n) { return DimensionVector(std::vector<int>(n, 0)); }
  static DimensionVector unit(std::size_t n, std::size_t i) {
    DimensionVector d = zero(n);
    d.dims_.at(i) = 1;
    return d;
  }

  std::size_t size() const { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_[i]; }
  const std::vector<int>& values() const { return dims_; }
  int total() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }

  /// Componentwise <=.
  bool fits_in(const DimensionVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (dims_[i] > other.dims_[i]) return false;
    return true;
  }

  DimensionVector operator-(const DimensionVector& o) const {
    std::vector<int> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = dims_[i] - o.dims_.at(i);
    return DimensionVector(std::move(r));
  }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
    return s + ")";
  }

 private:
  std::vector<int> dims_;
};

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    if (vertices_.empty()) throw InvalidArgument("quiver needs at least one vertex");
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    if (names.size() != vertices_.size()) throw InvalidArgument("duplicate vertex name");
    for (const auto& a : arrows_)
      if (a.source >= vertices_.size() || a.target >= vertices_.size())
        throw InvalidArgument("arrow endpoint out of range");
    order_ = compute_topological_order();
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& topological_order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == name) return i;
    return std::nullopt;
  }

  bool is_sink(std::size_t i) const {
    return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.source == i; });
  }

  std::int64_t arrow_count(std::size_t i, std::size_t j) const {
    return std::count_if(arrows_.begin(), arrows_.end(),
                         [&](const Arrow& a) { return a.source == i && a.target == j; });
  }

  void require_vertex(std::size_t i) const {
    if (i >= size()) throw InvalidArgument("invalid vertex index " + std::to_string(i));
  }

  void require_sized(const DimensionVector& d) const {
    if (d.size() != size()) throw InvalidArgument("dimension vector has wrong length");
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::size_t> compute_topological_order() const {
    std::vector<int> indegree(size(), 0);
    for (const auto& a : arrows_) ++indegree[a.target];
    std::vector<std::size_t> order, ready;
    for (std::size_t i = size(); i-- > 0;)
      if (indegree[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (const auto& a : arrows_)
        if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
    if (order.size() != size()) throw InvalidArgument("quiver has an oriented cycle");
    return order;
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> order_;
};

/// K_{b,c}: sources v1..vb, sinks w1..wc, one arrow v_i -> w_j for every pair.
inline Quiver kronecker_quiver(int b, int c) {
  if (b < 1 || c < 1) throw InvalidArgument("K_{b,c} requires b, c >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= b; ++i) names.push_back("v" + std::to_string(i));
  for (int j = 1; j <= c; ++j) names.push_back("w" + std::to_string(j));
  std::vector<Arrow> arrows;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) arrows.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(b + j)});
  return Quiver(std::move(names), std::move(arrows));
}

/// b_ij = #arrows i->j - #arrows j->i.
inline IntMatrix exchange_matrix(const Quiver& q) {
  const std::size_t n = q.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) throw InvalidArgument("exchange matrix undefined for loops");
    m[a.source][a.target] += 1;
    m[a.target][a.source] -= 1;
  }
  return m;
}

/// C_ij = delta_ij - #arrows i->j, so that <d,e> = d^T C e.
inline IntMatrix euler_matrix(const Quiver& q) {
  const std::size_t n = q.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  for (const auto& a : q.arrows()) c[a.source][a.target] -= 1;
  return c;
}

/// Euler form <d,e> = sum_i d_i e_i - sum_{i->j} d_i e_j.
inline std::int64_t euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
  q.require_sized(d);
  q.require_sized(e);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) s += static_cast<std::int64_t>(d[i]) * e[i];
  for (const auto& a : q.arrows()) s -= static_cast<std::int64_t>(d[a.source]) * e[a.target];
  return s;
}

namespace detail {

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.front().size(), k = b.size();
  IntMatrix r(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix t(a.front().size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace detail

/// Path-count matrix N with N_ij = number of paths i -> j; equals C^{-1}.
inline IntMatrix path_counts(const Quiver& q) {
  const std::size_t n = q.size();
  IntMatrix np(n, std::vector<std::int64_t>(n, 0));
  const auto& order = q.topological_order();
  for (std::size_t i = 0; i < n; ++i) np[i][i] = 1;
  // process targets in reverse topological order so that N[j][*] is final
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t i = *it;
    for (const auto& a : q.arrows())
      if (a.source == i)
        for (std::size_t k = 0; k < n; ++k) np[i][k] += np[a.target][k];
  }
  return np;
}

inline DimensionVector projective_dimension(const Quiver& q, std::size_t i) {
  q.require_vertex(i);
  auto np = path_counts(q);
  std::vector<int> d(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) d[j] = static_cast<int>(np[i][j]);
  return DimensionVector(std::move(d));
}

inline DimensionVector injective_dimension(const Quiver& q, std::size_t i) {
  q.require_vertex(i);
  auto np = path_counts(q);
  std::vector<int> d(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) d[j] = static_cast<int>(np[j][i]);
  return DimensionVector(std::move(d));
}

/// Forward is the Auslander-Reiten translate tau, backward its inverse.
enum class CoxeterDirection { Forward, Backward };

/// Coxeter matrix acting on column dimension vectors:
/// forward = -C^{-1} C^T, backward = -C^{-T} C.
inline IntMatrix coxeter_matrix(const Quiver& q, CoxeterDirection dir) {
  IntMatrix c = euler_matrix(q), cinv = path_counts(q);
  IntMatrix m = dir == CoxeterDirection::Forward
                    ? detail::int_multiply(cinv, detail::int_transpose(c))
                    : detail::int_multiply(detail::int_transpose(cinv), c);
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

/// Signed image of d under the Coxeter transformation (no orthant check).
inline std::vector<std::int64_t> coxeter_apply(const Quiver& q, const DimensionVector& d, CoxeterDirection dir) {
  q.require_sized(d);
  IntMatrix m = coxeter_matrix(q, dir);
  std::vector<std::int64_t> r(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i] += m[i][j] * d[j];
  return r;
}

/// dim tau M (forward) or dim tau^{-1} M (backward) for transjective M.
/// Throws if the image leaves the positive orthant, i.e. M was projective
/// (forward) or injective (backward).
inline DimensionVector coxeter_translate(const Quiver& q, const DimensionVector& d, CoxeterDirection dir) {
  auto r = coxeter_apply(q, d, dir);
  std::vector<int> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0)
      throw InvalidArgument("Coxeter image of " + d.to_string() + " leaves the positive orthant");
    out[i] = static_cast<int>(r[i]);
  }
  return DimensionVector(std::move(out));
}

/// A representation of a quiver over F_p: one matrix of shape
/// dims[target] x dims[source] per arrow.
class Representation {
 public:
  Representation(Quiver quiver, Fp prime, DimensionVector dims, std::vector<FpMatrix> maps)
      : quiver_(std::move(quiver)), prime_(prime), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!is_prime(prime_)) throw InvalidArgument("field characteristic must be prime");
    quiver_.require_sized(dims_);
    if (maps_.size() != quiver_.arrows().size()) throw InvalidArgument("one matrix per arrow required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const auto& arrow = quiver_.arrows()[a];
      if (maps_[a].rows() != static_cast<std::size_t>(dims_[arrow.target]) ||
          maps_[a].cols() != static_cast<std::size_t>(dims_[arrow.source]))
        throw InvalidArgument("matrix shape does not match the dimension vector");
      for (std::size_t r = 0; r < maps_[a].rows(); ++r)
        for (std::size_t c = 0; c < maps_[a].cols(); ++c)
          if (maps_[a](r, c) >= prime_) throw InvalidArgument("matrix entry not reduced mod p");
    }
  }

  const Quiver& quiver() const { return quiver_; }
  Fp prime() const { return prime_; }
  const DimensionVector& dims() const { return dims_; }
  const std::vector<FpMatrix>& maps() const { return maps_; }
  const FpMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }

 private:
  Quiver quiver_;
  Fp prime_;
  DimensionVector dims_;
  std::vector<FpMatrix> maps_;
};

namespace detail {

using Path = std::vector<std::size_t>;  // arrow indices, composed left to right

inline void collect_paths_from(const Quiver& q, std::size_t v, Path& cur, std::vector<std::vector<Path>>& out) {
  out[v].push_back(cur);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    if (q.arrows()[a].source != v) continue;
    cur.push_back(a);
    collect_paths_from(q, q.arrows()[a].target, cur, out);
    cur.pop_back();
  }
}

inline std::size_t path_index(const std::vector<Path>& basis, const Path& p) {
  auto it = std::find(basis.begin(), basis.end(), p);
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace detail

/// Indecomposable projective at vertex i; basis of P_i(j) = paths i -> j.
inline Representation projective_module(const Quiver& q, std::size_t i, Fp p) {
  q.require_vertex(i);
  std::vector<std::vector<detail::Path>> basis(q.size());
  detail::Path cur;
  detail::collect_paths_from(q, i, cur, basis);
  std::vector<int> dims(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) dims[j] = static_cast<int>(basis[j].size());
  std::vector<FpMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arrow = q.arrows()[a];
    FpMatrix m(basis[arrow.target].size(), basis[arrow.source].size());
    for (std::size_t col = 0; col < basis[arrow.source].size(); ++col) {
      detail::Path extended = basis[arrow.source][col];
      extended.push_back(a);
      m(detail::path_index(basis[arrow.target], extended), col) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, p, DimensionVector(std::move(dims)), std::move(maps));
}

/// Indecomposable injective at vertex i; I_i(j) is dual to the paths j -> i.
inline Representation injective_module(const Quiver& q, std::size_t i, Fp p) {
  q.require_vertex(i);
  std::vector<std::vector<detail::Path>> basis(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    std::vector<std::vector<detail::Path>> from_j(q.size());
    detail::Path cur;
    detail::collect_paths_from(q, j, cur, from_j);
    basis[j] = std::move(from_j[i]);
  }
  std::vector<int> dims(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) dims[j] = static_cast<int>(basis[j].size());
  std::vector<FpMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arrow = q.arrows()[a];
    FpMatrix m(basis[arrow.target].size(), basis[arrow.source].size());
    // dual basis vector of sigma (at source) goes to the dual of rho (at target)
    // whenever sigma = a followed by rho
    for (std::size_t row = 0; row < basis[arrow.target].size(); ++row) {
      detail::Path sigma{a};
      const auto& rho = basis[arrow.target][row];
      sigma.insert(sigma.end(), rho.begin(), rho.end());
      m(row, detail::path_index(basis[arrow.source], sigma)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, p, DimensionVector(std::move(dims)), std::move(maps));
}

inline Representation simple_module(const Quiver& q, std::size_t i, Fp p) {
  q.require_vertex(i);
  DimensionVector d = DimensionVector::unit(q.size(), i);
  std::vector<FpMatrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(d[a.target], d[a.source]);
  return Representation(q, p, d, std::move(maps));
}

/// dim_{F_p} Hom(M, N): nullity of f_t M(a) = N(a) f_s over all arrows a: s -> t.
inline std::size_t hom_dimension(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver()) || m.prime() != n.prime())
    throw InvalidArgument("hom_dimension needs representations of the same quiver over the same field");
  const Quiver& q = m.quiver();
  const Fp p = m.prime();
  std::vector<std::size_t> offset(q.size() + 1, 0);
  for (std::size_t i = 0; i < q.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<std::size_t>(n.dims()[i]) * m.dims()[i];
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return 0;

  // f_i is dims_N[i] x dims_M[i], entry (r,c) at offset[i] + r * dims_M[i] + c
  FpMatrix system(0, unknowns);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto [s, t] = q.arrows()[a];
    const std::size_t ms = m.dims()[s], mt = m.dims()[t], ns = n.dims()[s], nt = n.dims()[t];
    FpMatrix rows(nt * ms, unknowns);
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        std::size_t eq = r * ms + c;
        for (std::size_t k = 0; k < mt; ++k) {
          Fp v = m.map(a)(k, c);
          if (v) rows(eq, offset[t] + r * mt + k) = static_cast<Fp>((rows(eq, offset[t] + r * mt + k) + v) % p);
        }
        for (std::size_t k = 0; k < ns; ++k) {
          Fp v = n.map(a)(r, k);
          if (v) {
            Fp& slot = rows(eq, offset[s] + k * ms + c);
            slot = static_cast<Fp>((slot + p - v) % p);
          }
        }
      }
    system.append_rows(rows);
  }
  return unknowns - rank(system, p);
}

/// Uniformly random representation of dimension d, accepted once its
/// endomorphism ring is one-dimensional. With <d,d> = 1 this makes it the
/// rigid module of that dimension.
template <class Rng>
Representation generic_module(const Quiver& q, const DimensionVector& d, Fp p, int trials, Rng& rng) {
  q.require_sized(d);
  if (euler_form(q, d, d) != 1)
    throw InvalidArgument("generic_module expects <d,d> = 1, got " + std::to_string(euler_form(q, d, d)) +
                          " for " + d.to_string());
  std::uniform_int_distribution<Fp> entry(0, p - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<FpMatrix> maps;
    for (const auto& a : q.arrows()) {
      FpMatrix m(d[a.target], d[a.source]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
      maps.push_back(std::move(m));
    }
    Representation rep(q, p, d, std::move(maps));
    if (hom_dimension(rep, rep) == 1) return rep;
  }
  throw NotRigid("no module with trivial endomorphisms found at dimension " + d.to_string() + " over F_" +
                 std::to_string(p) + " after " + std::to_string(trials) + " trials");
}

struct GrassmannianCount {
  DimensionVector e;
  Fp prime = 0;
  Coefficient count;
};

/// Product over vertices of [d_i choose e_i]_p.
inline Coefficient grassmannian_bound(const DimensionVector& d, const DimensionVector& e, Fp p) {
  Coefficient b = 1;
  for (std::size_t i = 0; i < d.size(); ++i) b *= gaussian_binomial(d[i], e[i], p);
  return b;
}

/// Number of F_p-points of Gr_e(M).
///
/// Vertices are visited in topological order. At each vertex the images of the
/// already chosen subspaces span W; sinks contribute the number of e_i-spaces
/// containing W in closed form, other vertices enumerate them.
inline GrassmannianCount count_submodules(const Representation& m, const DimensionVector& e) {
  const Quiver& q = m.quiver();
  q.require_sized(e);
  if (!e.fits_in(m.dims())) throw InvalidArgument("submodule dimension " + e.to_string() + " exceeds " + m.dims().to_string());
  const Fp p = m.prime();
  const auto& order = q.topological_order();
  std::vector<FpMatrix> chosen(q.size());

  std::function<Coefficient(std::size_t)> count_from = [&](std::size_t pos) -> Coefficient {
    if (pos == order.size()) return 1;
    const std::size_t v = order[pos];
    const std::size_t dv = m.dims()[v], ev = e[v];
    FpMatrix span(0, dv);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arrow = q.arrows()[a];
      if (arrow.target != v || chosen[arrow.source].rows() == 0) continue;
      span.append_rows(transpose(multiply(m.map(a), transpose(chosen[arrow.source]), p)));
    }
    FpMatrix reduced = span;
    std::size_t r = span.rows() ? row_reduce(reduced, p) : 0;
    if (r > ev) return 0;
    if (q.is_sink(v)) {
      chosen[v] = FpMatrix(0, dv);
      return gaussian_binomial(dv - r, ev - r, p) * count_from(pos + 1);
    }
    Coefficient total = 0;
    for_each_subspace(dv, ev, p, [&](const FpMatrix& basis) {
      if (r > 0) {
        FpMatrix stacked(0, dv);
        for (std::size_t i = 0; i < r; ++i) {
          FpMatrix row(1, dv);
          for (std::size_t j = 0; j < dv; ++j) row(0, j) = reduced(i, j);
          stacked.append_rows(row);
        }
        stacked.append_rows(basis);
        if (rank(stacked, p) != ev) return true;
      }
      chosen[v] = basis;
      total += count_from(pos + 1);
      return true;
    });
    chosen[v] = FpMatrix();
    return total;
  };
  return {e, p, count_from(0)};
}

enum class ModuleKind { Projective, Injective, Simple, Generic };

/// Names a rigid module: an explicit P/I/S at a vertex, or the rigid module
/// of a given dimension vector realized by generic sampling.
struct ModuleSpec {
  ModuleKind kind = ModuleKind::Projective;
  std::size_t vertex = 0;
  DimensionVector dims;

  static ModuleSpec projective(std::size_t v) { return {ModuleKind::Projective, v, {}}; }
  static ModuleSpec injective(std::size_t v) { return {ModuleKind::Injective, v, {}}; }
  static ModuleSpec simple(std::size_t v) { return {ModuleKind::Simple, v, {}}; }
  static ModuleSpec generic(DimensionVector d) { return {ModuleKind::Generic, 0, std::move(d)}; }

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

inline DimensionVector dimension_vector(const Quiver& q, const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleKind::Projective: return projective_dimension(q, spec.vertex);
    case ModuleKind::Injective: return injective_dimension(q, spec.vertex);
    case ModuleKind::Simple: q.require_vertex(spec.vertex); return DimensionVector::unit(q.size(), spec.vertex);
    case ModuleKind::Generic: q.require_sized(spec.dims); return spec.dims;
  }
  return {};
}

inline std::string describe(const Quiver& q, const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleKind::Projective: return "P_" + q.vertex(spec.vertex);
    case ModuleKind::Injective: return "I_" + q.vertex(spec.vertex);
    case ModuleKind::Simple: return "S_" + q.vertex(spec.vertex);
    case ModuleKind::Generic: return "M" + spec.dims.to_string();
  }
  return "?";
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Realizes one rigid module over successive primes, caching each realization.
/// Generic samples draw from a stream derived from (seed, dimension vector, p).
class ModuleRealizer {
 public:
  ModuleRealizer(Quiver q, ModuleSpec spec, std::uint64_t seed = 0, int trials = 200)
      : quiver_(std::move(q)), spec_(std::move(spec)), seed_(seed), trials_(trials) {
    dims_ = dimension_vector(quiver_, spec_);
    if (spec_.kind == ModuleKind::Generic && euler_form(quiver_, dims_, dims_) != 1)
      throw InvalidArgument("generic module " + dims_.to_string() + " is not a real root (<d,d> != 1)");
  }

  const Quiver& quiver() const { return quiver_; }
  const ModuleSpec& spec() const { return spec_; }
  const DimensionVector& dims() const { return dims_; }

  /// The module over F_p; throws NotRigid if sampling fails at this prime.
  const Representation& at(Fp p) {
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;
    if (failed_.count(p)) throw NotRigid("sampling previously failed over F_" + std::to_string(p));
    try {
      return cache_.emplace(p, build(p)).first->second;
    } catch (const NotRigid&) {
      failed_.insert(p);
      throw;
    }
  }

  /// The first `count` primes at which the module could be realized.
  std::vector<Fp> usable_primes(std::size_t count) {
    std::vector<Fp> out;
    std::size_t skipped = 0;
    for (Fp p = 2; out.size() < count; p = static_cast<Fp>(next_prime(p + 1))) {
      try {
        at(p);
        out.push_back(p);
      } catch (const NotRigid&) {
        if (++skipped > 16) throw;
      }
    }
    return out;
  }

 private:
  Representation build(Fp p) const {
    switch (spec_.kind) {
      case ModuleKind::Projective: return projective_module(quiver_, spec_.vertex, p);
      case ModuleKind::Injective: return injective_module(quiver_, spec_.vertex, p);
      case ModuleKind::Simple: return simple_module(quiver_, spec_.vertex, p);
      case ModuleKind::Generic: {
        std::uint64_t s = detail::splitmix64(seed_);
        for (int d : dims_.values()) s = detail::splitmix64(s ^ static_cast<std::uint64_t>(d));
        std::mt19937_64 rng(detail::splitmix64(s ^ p));
        return generic_module(quiver_, dims_, p, trials_, rng);
      }
    }
    throw InvalidArgument("unknown module kind");
  }

  Quiver quiver_;
  ModuleSpec spec_;
  DimensionVector dims_;
  std::uint64_t seed_;
  int trials_;
  std::map<Fp, Representation> cache_;
  std::set<Fp> failed_;
};

struct EulerCharacteristic {
  DimensionVector e;
  Coefficient chi;
  int degree_bound = 0;
  std::vector<std::pair<Fp, Coefficient>> counts;  // last entry is the held-out prime
  Coefficient holdout_predicted;
};

/// chi(Gr_e(M)) as the value at q = 1 of the counting polynomial, which is
/// interpolated through D+1 prime point counts (D = sum e_i (d_i - e_i)) and
/// confirmed at one more prime.
inline EulerCharacteristic euler_characteristic(ModuleRealizer& module, const DimensionVector& e) {
  const auto& d = module.dims();
  module.quiver().require_sized(e);
  if (!e.fits_in(d)) throw InvalidArgument("submodule dimension " + e.to_string() + " exceeds " + d.to_string());
  int degree = 0;
  for (std::size_t i = 0; i < d.size(); ++i) degree += e[i] * (d[i] - e[i]);

  EulerCharacteristic out;
  out.e = e;
  out.degree_bound = degree;
  auto primes = module.usable_primes(static_cast<std::size_t>(degree) + 2);
  std::vector<Sample> samples;
  for (Fp p : primes) {
    auto c = count_submodules(module.at(p), e).count;
    out.counts.emplace_back(p, c);
    samples.push_back({Rational(p), Rational(c)});
  }
  std::span<const Sample> fit(samples.data(), samples.size() - 1);
  Rational predicted = lagrange_evaluate(fit, samples.back().x);
  if (predicted != samples.back().y) {
    std::ostringstream os;
    os << "point counts of Gr_" << e.to_string() << " are not a polynomial of degree <= " << degree
       << ": predicted " << predicted << " at p=" << primes.back() << ", counted " << samples.back().y;
    throw NotPolynomial(os.str());
  }
  out.holdout_predicted = boost::multiprecision::numerator(predicted);
  Rational at_one = lagrange_evaluate(fit, Rational(1));
  if (boost::multiprecision::denominator(at_one) != 1)
    throw NotIntegral("counting polynomial of Gr_" + e.to_string() + " is not integral at q = 1");
  out.chi = boost::multiprecision::numerator(at_one);
  return out;
}

}  // namespace rank2cc
