#pragma once

/**
 * @file convex.hpp
 * @brief Finitely generated tropical convex sets (spans).
 *
 * Membership is decided exactly through principal coefficients: for any
 * generators r_i and target a, the combination (+)_i <r_i|a> r_i is the
 * greatest combination below a, and it equals a precisely when a lies in
 * the span.
 */

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

class ConvexSpan {
 public:
  /// Span of a nonempty generator list. With no declared domain the span
  /// lives in the smallest domain containing every generator.
  explicit ConvexSpan(std::vector<Vector> generators, std::optional<Domain> domain = std::nullopt)
      : generators_(std::move(generators)), cache_(std::make_shared<BasisCache>()) {
    if (generators_.empty()) throw ShapeError("span needs at least one generator (use the zero-span constructor)");
    dim_ = generators_[0].dim();
    orientation_ = generators_[0].orientation();
    Domain joined = Domain::FT;
    for (const auto& g : generators_) {
      if (g.dim() != dim_) throw ShapeError("span generators of unequal dimension");
      if (g.orientation() != orientation_) throw ShapeError("span generators of mixed orientation");
      joined = join(joined, g.domain());
    }
    domain_ = domain.value_or(joined);
    if (!within(joined, domain_)) {
      throw DomainError("span generator outside declared domain " + std::string(to_string(domain_)));
    }
  }

  /// The zero span {(-inf, ..., -inf)}.
  ConvexSpan(std::size_t dim, Orientation orientation, Domain domain)
      : dim_(dim), orientation_(orientation), domain_(domain), cache_(std::make_shared<BasisCache>()) {
    if (dim == 0) throw ShapeError("span dimension must be positive");
  }

  static ConvexSpan rows_of(const Matrix& m, std::optional<Domain> domain = std::nullopt) {
    return ConvexSpan(m.row_vectors(), domain);
  }
  static ConvexSpan columns_of(const Matrix& m, std::optional<Domain> domain = std::nullopt) {
    return ConvexSpan(m.column_vectors(), domain);
  }

  std::size_t dim() const noexcept { return dim_; }
  Orientation orientation() const noexcept { return orientation_; }
  Domain domain() const noexcept { return domain_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  /// Generators laid out as matrix rows or columns according to orientation.
  Matrix as_matrix() const {
    if (generators_.empty()) throw ShapeError("zero span has no generator matrix");
    return orientation_ == Orientation::Row ? Matrix::from_rows(generators_) : Matrix::from_columns(generators_);
  }

  /// Indices of the weak basis, computed once and shared between copies.
  const std::vector<std::size_t>& weak_basis_indices() const {
    std::call_once(cache_->once, [this] { cache_->indices = compute_weak_basis(generators_); });
    return cache_->indices;
  }

 private:
  struct BasisCache {
    std::once_flag once;
    std::vector<std::size_t> indices;
  };

  static std::vector<std::size_t> compute_weak_basis(const std::vector<Vector>& gens);

  std::vector<Vector> generators_;
  std::size_t dim_ = 0;
  Orientation orientation_ = Orientation::Column;
  Domain domain_ = Domain::TBar;
  std::shared_ptr<BasisCache> cache_;
};

namespace detail {

inline void require_dim(const ConvexSpan& s, const Vector& a, const char* op) {
  if (a.dim() != s.dim()) {
    throw ShapeError(std::string(op) + ": vector of dimension " + std::to_string(a.dim()) +
                     " against span of dimension " + std::to_string(s.dim()));
  }
}

// Principal combination of a over a subset of generators; true iff it equals a.
inline bool reproduces(std::span<const Vector* const> gens, const Vector& a) {
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Scalar acc;
    for (const Vector* g : gens) {
      if (acc == a[j]) break;
      acc = oplus(acc, otimes(bracket(*g, a), (*g)[j]));
    }
    if (acc != a[j]) return false;
  }
  return true;
}

}  // namespace detail

/// (<r_1|a>, ..., <r_k|a>) for the generators r_i of s.
inline std::vector<Scalar> principal_coeffs(const ConvexSpan& s, const Vector& a) {
  detail::require_dim(s, a, "principal_coeffs");
  std::vector<Scalar> out;
  out.reserve(s.size());
  for (const auto& r : s.generators()) out.push_back(bracket(r, a));
  return out;
}

/// (+)_i c_i r_i, in the orientation of the span.
inline Vector combine(const ConvexSpan& s, std::span<const Scalar> coeffs) {
  if (coeffs.size() != s.size()) throw ShapeError("combine: coefficient count does not match generator count");
  Vector acc = Vector::zero(s.dim(), s.orientation());
  for (std::size_t i = 0; i < s.size(); ++i) acc = oplus(acc, scale(coeffs[i], s.generators()[i]));
  return acc;
}

/// Principal coefficients of a when a lies in s, nothing otherwise. A vector
/// outside the span's domain is never a member.
inline std::optional<std::vector<Scalar>> member(const ConvexSpan& s, const Vector& a) {
  detail::require_dim(s, a, "member");
  if (!within(a.domain(), s.domain())) return std::nullopt;
  auto coeffs = principal_coeffs(s, a);
  const Vector back = combine(s, coeffs);
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (back[j] != a[j]) return std::nullopt;
  return coeffs;
}

inline bool contains(const ConvexSpan& s, const Vector& a) { return member(s, a).has_value(); }

/// Greatest x with b (x) x <= c, i.e. x_k = <col_k(b) | c>.
inline Vector principal_solution(const Matrix& b, const Vector& c) {
  if (b.rows() != c.dim()) {
    throw ShapeError("principal_solution: " + std::to_string(b.rows()) + " rows against right-hand side of dimension " +
                     std::to_string(c.dim()));
  }
  std::vector<Scalar> x;
  x.reserve(b.cols());
  for (std::size_t k = 0; k < b.cols(); ++k) x.push_back(bracket(b.col(k), c));
  return Vector(std::move(x), Orientation::Column);
}

inline std::vector<std::size_t> ConvexSpan::compute_weak_basis(const std::vector<Vector>& gens) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) kept.push_back(i);
  // Ascending scan: drop a generator when the others still retained span it.
  std::size_t pos = 0;
  while (pos < kept.size()) {
    std::vector<const Vector*> others;
    for (std::size_t q = 0; q < kept.size(); ++q)
      if (q != pos) others.push_back(&gens[kept[q]]);
    if (detail::reproduces(others, gens[kept[pos]])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  return kept;
}

/// Minimal generating sublist of s, in original order; empty for the zero span.
inline ConvexSpan weak_basis(const ConvexSpan& s) {
  const auto& idx = s.weak_basis_indices();
  if (idx.empty()) return ConvexSpan(s.dim(), s.orientation(), s.domain());
  std::vector<Vector> gens;
  gens.reserve(idx.size());
  for (std::size_t i : idx) gens.push_back(s.generators()[i]);
  return ConvexSpan(std::move(gens), s.domain());
}

/// True when every generator of `inner` lies in `outer`.
inline bool span_contains(const ConvexSpan& outer, const ConvexSpan& inner) {
  if (outer.dim() != inner.dim()) throw ShapeError("span_contains: dimension mismatch");
  for (const auto& g : inner.generators())
    if (!contains(outer, g)) return false;
  return true;
}

inline bool span_equal(const ConvexSpan& a, const ConvexSpan& b) {
  if (a.dim() != b.dim() || a.orientation() != b.orientation()) {
    throw ShapeError("span_equal: spans differ in dimension or orientation");
  }
  return span_contains(a, b) && span_contains(b, a);
}

// --- the (+inf) a (+) b calculus over spans in T^n -------------------------

/// Canonical form of the TBar vector (+inf) a (+) b for a, b over T.
/// Coordinates in `support` (where a is finite) read +inf; elsewhere the
/// value is b. `b` is stored with -inf on the support so equality of
/// canonical forms is equality of the denoted vectors. The representatives
/// the pair was built from are kept for evaluating maps on it.
struct ExtendedPair {
  std::vector<bool> support;
  Vector b;
  Vector a_rep;
  Vector b_rep;

  std::size_t dim() const noexcept { return b.dim(); }

  /// The denoted vector in TBar^n.
  Vector value() const {
    Vector v = b;
    for (std::size_t i = 0; i < dim(); ++i)
      if (support[i]) v[i] = Scalar::pos_inf();
    return v;
  }

  bool support_empty() const {
    return std::none_of(support.begin(), support.end(), [](bool s) { return s; });
  }
};

inline ExtendedPair extended_pair(const Vector& a, const Vector& b) {
  detail::require_same_dim(a, b, "extended_pair");
  if (!within(a.domain(), Domain::T) || !within(b.domain(), Domain::T)) {
    throw DomainError("extended_pair: a and b must have entries in T (no +inf)");
  }
  std::vector<bool> support(a.dim());
  Vector canon = b;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    support[i] = a[i].is_finite();
    if (support[i]) canon[i] = Scalar::neg_inf();
  }
  return ExtendedPair{std::move(support), std::move(canon), a, b};
}

inline bool extended_equal(const ExtendedPair& p, const ExtendedPair& q) {
  if (p.dim() != q.dim()) throw ShapeError("extended_equal: dimension mismatch");
  if (p.support != q.support) return false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.b[i] != q.b[i]) return false;
  return true;
}

/// ((+inf) a (+) b) (+) ((+inf) a' (+) b') = (+inf)(a (+) a') (+) (b (+) b').
inline ExtendedPair extended_oplus(const ExtendedPair& p, const ExtendedPair& q) {
  return extended_pair(oplus(p.a_rep, q.a_rep), oplus(p.b_rep, q.b_rep));
}

/// l ((+inf) a (+) b) for any l in TBar.
inline ExtendedPair extended_scale(const Scalar& lambda, const ExtendedPair& p) {
  if (lambda.is_neg_inf()) {
    const Vector z = Vector::zero(p.dim(), p.b_rep.orientation());
    return extended_pair(z, z);
  }
  if (lambda.is_pos_inf()) {
    return extended_pair(oplus(p.a_rep, p.b_rep), Vector::zero(p.dim(), p.b_rep.orientation()));
  }
  return extended_pair(scale(lambda, p.a_rep), scale(lambda, p.b_rep));
}

}  // namespace tropical
