#pragma once

// Reference deciders used to cross-examine the library. They trade speed for
// directness and share as little logic with the code under test as possible.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tropical/convex.hpp"
#include "tropical/text_io.hpp"

namespace tropical::check {

namespace detail {

// Difference constraints l[j] - l[i] = d; consistent iff no cycle disagrees.
struct Constraint {
  std::size_t i;
  std::size_t j;
  mpq_class d;
};

inline bool consistent(std::size_t k, const std::vector<Constraint>& cons) {
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> adj(k);
  for (const auto& c : cons) {
    adj[c.i].emplace_back(c.j, c.d);
    adj[c.j].emplace_back(c.i, mpq_class(-c.d));
  }
  std::vector<std::optional<mpq_class>> l(k);
  for (std::size_t s = 0; s < k; ++s) {
    if (l[s]) continue;
    l[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (const auto& [j, d] : adj[i]) {
        mpq_class want = *l[i] + d;
        if (!l[j]) {
          l[j] = want;
          stack.push_back(j);
        } else if (cmp(*l[j], want) != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Whether span(e) and span(f) are isomorphic, for weak bases e and f over T.
/// Tries every bijection of the bases and, for each, every matching of the
/// extremal rows of the basis matrices; a map e_i -> l_i f_s(i) is an
/// isomorphism iff brackets are preserved and the row spaces of the two basis
/// matrices agree up to the diagonal scaling by l.
inline bool brute_force_isomorphic(const std::vector<Vector>& e, const std::vector<Vector>& f) {
  if (e.size() != f.size()) return false;
  const std::size_t k = e.size();
  if (k == 0) return true;
  std::vector<Vector> ec;
  for (const auto& v : e) ec.push_back(v.as(Orientation::Column));
  const auto p_rows = weak_basis(ConvexSpan::rows_of(Matrix::from_columns(ec))).generators();

  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  do {
    std::vector<detail::Constraint> cons;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Scalar b1 = bracket(e[i], e[j]);
        const Scalar b2 = bracket(f[s[i]], f[s[j]]);
        if (b1.is_finite() != b2.is_finite()) ok = false;
        else if (b1.is_finite()) cons.push_back({i, j, b1.value() - b2.value()});
      }
    }
    if (!ok || !detail::consistent(k, cons)) continue;

    std::vector<Vector> fc;
    for (std::size_t i = 0; i < k; ++i) fc.push_back(f[s[i]].as(Orientation::Column));
    const auto q_rows = weak_basis(ConvexSpan::rows_of(Matrix::from_columns(fc))).generators();
    if (q_rows.size() != p_rows.size()) continue;

    const std::size_t m = p_rows.size();
    std::vector<std::size_t> pi(m);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    do {
      auto all = cons;
      bool match = true;
      for (std::size_t r = 0; r < m && match; ++r) {
        const Vector& p = p_rows[r];
        const Vector& q = q_rows[pi[r]];
        std::optional<std::size_t> anchor;
        for (std::size_t i = 0; i < k; ++i) {
          if (p[i].is_finite() != q[i].is_finite()) {
            match = false;
            break;
          }
          if (!p[i].is_finite()) continue;
          if (!anchor) {
            anchor = i;
          } else {
            all.push_back({*anchor, i,
                           (p[i].value() - q[i].value()) - (p[*anchor].value() - q[*anchor].value())});
          }
        }
      }
      if (match && detail::consistent(k, all)) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

/// Weak-basis-free obstruction: true when no bijection of the given extremal
/// generators preserves pairwise Hilbert distances and the pattern of finite
/// brackets. Either is preserved by every isomorphism, so `true` certifies
/// that the spans are not isomorphic.
inline bool distance_obstruction(const std::vector<Vector>& e, const std::vector<Vector>& f) {
  if (e.size() != f.size()) return true;
  const std::size_t k = e.size();
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = hilbert(e[i], e[j]) == hilbert(f[s[i]], f[s[j]]) &&
             bracket(e[i], e[j]).is_finite() == bracket(f[s[i]], f[s[j]]).is_finite();
    if (ok) return false;
  } while (std::next_permutation(s.begin(), s.end()));
  return true;
}

/// A D B for 2x2 matrices by exhaustive bridge search: is there D with
/// entries in {-4..4, -inf} such that R(D) = R(A) and C(D) = C(B)? The row
/// and column spaces of every grid matrix are sorted into span-equality
/// classes once; a query then only has to classify R(A) and C(B).
class BridgeOracle {
 public:
  BridgeOracle() {
    std::vector<Scalar> grid{Scalar::neg_inf()};
    for (long v = -4; v <= 4; ++v) grid.emplace_back(v);
    for (const auto& a : grid)
      for (const auto& b : grid)
        for (const auto& c : grid)
          for (const auto& d : grid) {
            const Matrix m{{a, b}, {c, d}};
            const std::size_t rc = classify(row_space(m));
            const std::size_t cc = classify(column_space(m));
            realized_.emplace(rc, cc);
          }
  }

  bool d_related(const Matrix& a, const Matrix& b) const {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
      throw ShapeError("bridge oracle handles 2x2 matrices only");
    }
    const auto rc = find(row_space(a));
    const auto cc = find(column_space(b));
    return rc && cc && realized_.count({*rc, *cc}) > 0;
  }

  std::size_t class_count() const noexcept { return classes_.size(); }

 private:
  // Both kinds of space are held as column spans so they share one registry.
  static ConvexSpan row_space(const Matrix& m) { return ConvexSpan::columns_of(transpose(m), Domain::T); }
  static ConvexSpan column_space(const Matrix& m) { return ConvexSpan::columns_of(m, Domain::T); }

  // The greatest element of the span below each probe depends on the span
  // alone, so equal spans always share a key.
  static std::string key(const ConvexSpan& s) {
    static const std::vector<Vector> probes{
        Vector{Scalar(0), Scalar(0)},          Vector{Scalar(0), Scalar(5)},
        Vector{Scalar(5), Scalar(0)},          Vector{Scalar(0), Scalar::neg_inf()},
        Vector{Scalar::neg_inf(), Scalar(0)},  Vector{Scalar(0), Scalar(1)},
        Vector{Scalar(1), Scalar(0)},
    };
    std::string out;
    for (const auto& p : probes) out += inline_string(combine(s, principal_coeffs(s, p))) + ";";
    return out;
  }

  std::optional<std::size_t> find(const ConvexSpan& s, const std::string& k) const {
    const auto it = buckets_.find(k);
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t id : it->second)
      if (span_equal(classes_[id], s)) return id;
    return std::nullopt;
  }
  std::optional<std::size_t> find(const ConvexSpan& s) const { return find(s, key(s)); }

  std::size_t classify(const ConvexSpan& s) {
    const std::string k = key(s);
    if (const auto id = find(s, k)) return *id;
    classes_.push_back(s);
    buckets_[k].push_back(classes_.size() - 1);
    return classes_.size() - 1;
  }

  std::vector<ConvexSpan> classes_;
  std::map<std::string, std::vector<std::size_t>> buckets_;
  std::set<std::pair<std::size_t, std::size_t>> realized_;
};

/// Shared instance; construction takes a moment, so it is built on first use.
inline const BridgeOracle& bridge_oracle() {
  static const BridgeOracle oracle;
  return oracle;
}

}  // namespace tropical::check
