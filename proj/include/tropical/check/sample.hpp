#pragma once

// Random scalars, vectors, matrices and span members for property trials.

#include <numeric>
#include <vector>

#include "tropical/check/rng.hpp"
#include "tropical/convex.hpp"

namespace tropical::check {

/// Small exact values maximise ties, which is where max-plus degeneracies
/// live. Probabilities are in percent.
struct EntryPool {
  long max_num = 8;
  std::vector<long> dens{1, 2, 3};
  unsigned neg_inf_pct = 20;  // used in T and TBar
  unsigned pos_inf_pct = 10;  // used in TBar only
};

inline Scalar sample_rational(Rng& rng, const EntryPool& pool) {
  const long num = rng.between(-pool.max_num, pool.max_num);
  return Scalar::rational(num, rng.pick(pool.dens));
}

inline Scalar sample_scalar(Rng& rng, const EntryPool& pool, Domain d) {
  if (d != Domain::FT) {
    const auto roll = rng.below(100);
    if (roll < pool.neg_inf_pct) return Scalar::neg_inf();
    if (d == Domain::TBar && roll < pool.neg_inf_pct + pool.pos_inf_pct) return Scalar::pos_inf();
  }
  return sample_rational(rng, pool);
}

inline Vector sample_vector(Rng& rng, const EntryPool& pool, Domain d, std::size_t dim,
                            Orientation o = Orientation::Column) {
  std::vector<Scalar> v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(sample_scalar(rng, pool, d));
  return Vector(std::move(v), o);
}

inline Matrix sample_matrix(Rng& rng, const EntryPool& pool, Domain d, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = sample_scalar(rng, pool, d);
  return m;
}

inline std::size_t sample_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.between(static_cast<long>(lo), static_cast<long>(hi)));
}

/// A random combination of the generators with coefficients drawn from d.
inline Vector sample_member(Rng& rng, const EntryPool& pool, const ConvexSpan& s, Domain d) {
  Vector acc = Vector::zero(s.dim(), s.orientation());
  for (const auto& g : s.generators()) acc = oplus(acc, scale(sample_scalar(rng, pool, d), g));
  return acc;
}

inline std::vector<std::size_t> sample_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  rng.shuffle(p);
  return p;
}

/// A monomial matrix: a permutation matrix with finite entries in place of 0.
inline Matrix sample_monomial(Rng& rng, const EntryPool& pool, std::size_t n) {
  const auto p = sample_permutation(rng, n);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, p[i]) = sample_rational(rng, pool);
  return m;
}

}  // namespace tropical::check
