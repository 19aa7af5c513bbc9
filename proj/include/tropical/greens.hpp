#pragma once

/**
 * @file greens.hpp
 * @brief Green's pre-orders and relations on square max-plus matrices.
 *
 * A <=_R B iff C(A) is contained in C(B); A <=_L B iff R(A) is contained
 * in R(B). R, L and H follow. D holds iff C(A) and C(B) are isomorphic,
 * which rel_D decides by searching for an isomorphism between weak bases
 * and certifies with a bridge matrix D satisfying R(D) = R(A), C(D) = C(B).
 *
 * Every positive verdict is re-verified by direct computation before it is
 * returned; a failed re-verification throws InternalError.
 */

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "tropical/convex.hpp"
#include "tropical/duality.hpp"
#include "tropical/text_io.hpp"

namespace tropical {

enum class Relation : std::uint8_t { LeqR, LeqL, R, L, H, D };

inline std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::LeqR: return "leq-r";
    case Relation::LeqL: return "leq-l";
    case Relation::R: return "r";
    case Relation::L: return "l";
    case Relation::H: return "h";
    case Relation::D: return "d";
  }
  return "?";
}

inline Relation parse_relation(std::string_view s) {
  for (Relation r : {Relation::LeqR, Relation::LeqL, Relation::R, Relation::L, Relation::H, Relation::D})
    if (to_string(r) == s) return r;
  throw ParseError("unknown relation '" + std::string(s) + "' (expected leq-r, leq-l, r, l, h or d)");
}

/// A witness matrix together with the equation it satisfies, e.g. "B*X=A".
struct Witness {
  std::string equation;
  Matrix matrix;
};

struct GreenVerdict {
  Relation relation = Relation::LeqR;
  bool holds = false;
  Domain domain = Domain::TBar;
  std::vector<Witness> witnesses;
  std::optional<IsoDescriptor> iso;  // D only
  std::optional<Matrix> bridge;      // D only
  std::vector<std::string> reasons;  // refutation, or notes

  static GreenVerdict make(Relation r, bool holds, Domain d) {
    GreenVerdict v;
    v.relation = r;
    v.holds = holds;
    v.domain = d;
    return v;
  }
};

namespace detail {

inline void validate_square_pair(const Matrix& a, const Matrix& b, Domain domain, const char* op) {
  if (!a.is_square() || !b.is_square()) throw ShapeError(std::string(op) + ": matrices must be square");
  if (a.rows() != b.rows()) {
    throw ShapeError(std::string(op) + ": matrices differ in size (" + std::to_string(a.rows()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  if (!within(a.domain(), domain) || !within(b.domain(), domain)) {
    throw DomainError(std::string(op) + ": entries outside declared domain " + std::string(to_string(domain)));
  }
}

inline std::string one_based(std::size_t i) { return std::to_string(i + 1); }

}  // namespace detail

/// Replaces -inf entries of P by a finite delta small enough that B P' = A
/// still holds. B and A must be finite, P over T, and B P = A.
inline Matrix finitize_witness_ft(const Matrix& b, const Matrix& a, const Matrix& p) {
  if (!within(b.domain(), Domain::FT) || !within(a.domain(), Domain::FT)) {
    throw PreconditionError("finitize_witness_ft: A and B must be finite");
  }
  if (!within(p.domain(), Domain::T)) throw PreconditionError("finitize_witness_ft: P must have entries in T");
  if (mul(b, p) != a) throw PreconditionError("finitize_witness_ft: B P != A");

  std::optional<mpq_class> min_p;
  for (const auto& s : p.entries())
    if (s.is_finite() && (!min_p || s.value() < *min_p)) min_p = s.value();
  if (!min_p) throw PreconditionError("finitize_witness_ft: P has no finite entry");
  mpq_class min_b = b(0, 0).value();
  mpq_class max_b = b(0, 0).value();
  for (const auto& s : b.entries()) {
    if (s.value() < min_b) min_b = s.value();
    if (s.value() > max_b) max_b = s.value();
  }
  // delta = min over b, b' in B and finite p in P of (b + p - b'), minus 1.
  const Scalar delta(mpq_class(min_b + *min_p - max_b - 1));

  Matrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (out(i, j).is_neg_inf()) out(i, j) = delta;
  if (mul(b, out) != a) throw InternalError("finitize_witness_ft: B P' != A");
  return out;
}

/// Replaces +inf entries of P by 0. B and A must be over T and B P = A.
inline Matrix definitize_witness_t(const Matrix& b, const Matrix& a, const Matrix& p) {
  if (!within(b.domain(), Domain::T) || !within(a.domain(), Domain::T)) {
    throw PreconditionError("definitize_witness_t: A and B must have entries in T");
  }
  if (mul(b, p) != a) throw PreconditionError("definitize_witness_t: B P != A");
  Matrix out = p;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (out(i, j).is_pos_inf()) out(i, j) = Scalar(0);
  if (mul(b, out) != a) throw InternalError("definitize_witness_t: B P' != A");
  return out;
}

namespace detail {

struct Division {
  std::optional<Matrix> x;
  std::size_t failed_column = 0;
};

// X over `domain` with B X = A, assembled from principal solutions.
inline Division right_divide(const Matrix& a, const Matrix& b, Domain domain) {
  const ConvexSpan cb = ConvexSpan::columns_of(b, domain);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!contains(cb, a.col(j))) return {std::nullopt, j};

  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(principal_solution(b, a.col(j)));
  Matrix x = Matrix::from_columns(cols);
  if (mul(b, x) != a) throw InternalError("leq_R: principal solution does not reproduce A");
  if (domain != Domain::TBar) x = definitize_witness_t(b, a, x);
  if (domain == Domain::FT) x = finitize_witness_ft(b, a, x);
  return {std::move(x), 0};
}

}  // namespace detail

/// A <=_R B over `domain`: every column of A lies in C(B). Witness X with B X = A.
inline GreenVerdict leq_R(const Matrix& a, const Matrix& b, Domain domain = Domain::TBar) {
  detail::validate_square_pair(a, b, domain, "leq_R");
  GreenVerdict v = GreenVerdict::make(Relation::LeqR, false, domain);
  auto div = detail::right_divide(a, b, domain);
  if (!div.x) {
    v.reasons.push_back("column " + detail::one_based(div.failed_column) + " of A " +
                        inline_string(a.col(div.failed_column)) + " is not in C(B)");
    return v;
  }
  v.holds = true;
  v.witnesses.push_back({"B*X=A", std::move(*div.x)});
  return v;
}

/// A <=_L B over `domain`: every row of A lies in R(B). Witness Y with Y B = A.
inline GreenVerdict leq_L(const Matrix& a, const Matrix& b, Domain domain = Domain::TBar) {
  detail::validate_square_pair(a, b, domain, "leq_L");
  GreenVerdict v = GreenVerdict::make(Relation::LeqL, false, domain);
  auto div = detail::right_divide(transpose(a), transpose(b), domain);
  if (!div.x) {
    v.reasons.push_back("row " + detail::one_based(div.failed_column) + " of A " +
                        inline_string(a.row(div.failed_column)) + " is not in R(B)");
    return v;
  }
  Matrix y = transpose(*div.x);
  if (mul(y, b) != a) throw InternalError("leq_L: Y B != A");
  v.holds = true;
  v.witnesses.push_back({"Y*B=A", std::move(y)});
  return v;
}

/// R, L or H, with witnesses in both directions when the relation holds.
inline GreenVerdict rel(const Matrix& a, const Matrix& b, Relation which, Domain domain = Domain::TBar) {
  if (which != Relation::R && which != Relation::L && which != Relation::H) {
    throw PreconditionError("rel: expected R, L or H");
  }
  detail::validate_square_pair(a, b, domain, "rel");
  GreenVerdict v = GreenVerdict::make(which, true, domain);
  const auto absorb = [&v](GreenVerdict part, const char* forward, const char* backward, bool reversed) {
    if (!part.holds) {
      v.holds = false;
      for (auto& r : part.reasons) {
        v.reasons.push_back(reversed ? "reverse direction: " + r : r);
      }
      return;
    }
    for (auto& w : part.witnesses) v.witnesses.push_back({reversed ? backward : forward, std::move(w.matrix)});
  };
  if (which == Relation::R || which == Relation::H) {
    absorb(leq_R(a, b, domain), "B*X=A", "A*X=B", false);
    absorb(leq_R(b, a, domain), "B*X=A", "A*X=B", true);
  }
  if (which == Relation::L || which == Relation::H) {
    absorb(leq_L(a, b, domain), "Y*B=A", "Y*A=B", false);
    absorb(leq_L(b, a, domain), "Y*B=A", "Y*A=B", true);
  }
  if (!v.holds) v.witnesses.clear();
  return v;
}

// --- the D relation -----------------------------------------------------------

struct DOptions {
  std::size_t max_n = 10;
  std::size_t max_basis = 8;
  bool override_guard = false;
  std::size_t max_reasons = 64;

  /// Defaults, with the size guard lifted when TROP_MAX_N is set.
  static DOptions from_env() {
    DOptions o;
    if (const char* env = std::getenv("TROP_MAX_N"); env && *env) {
      o.max_n = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
      o.max_basis = o.max_n;
    }
    return o;
  }
};

namespace detail {

// Union-find over variables with known differences: value(u) - value(v).
class DifferenceForest {
 public:
  explicit DifferenceForest(std::size_t n) : parent_(n), offset_(n, mpq_class(0)) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  /// Records value(u) - value(v) = w; false on contradiction.
  bool relate(std::size_t u, std::size_t v, const mpq_class& w) {
    const std::size_t ru = find(u);
    const std::size_t rv = find(v);
    if (ru == rv) return cmp(offset_[u] - offset_[v], w) == 0;
    parent_[ru] = rv;
    offset_[ru] = w - offset_[u] + offset_[v];
    return true;
  }

  /// value(u) when every root is pinned to 0.
  mpq_class value(std::size_t u) {
    find(u);
    return offset_[u];
  }

 private:
  std::size_t find(std::size_t u) {
    if (parent_[u] == u) return u;
    const std::size_t p = parent_[u];
    const std::size_t r = find(p);
    offset_[u] += offset_[p];
    parent_[u] = r;
    return r;
  }

  std::vector<std::size_t> parent_;
  std::vector<mpq_class> offset_;  // value(u) - value(parent)
};

inline std::string perm_string(const std::vector<std::size_t>& sigma) {
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? " " : "") + one_based(sigma[i]);
  return s + ")";
}

// Searches sigma and lambda such that e_i -> lambda_i f_sigma(i) extends to
// an isomorphism span(E) -> span(F).
//
// Linear isomorphisms preserve brackets, so for every pair with finite
// brackets lambda_j - lambda_i = <e_i|e_j> - <f_si|f_sj>; infinite brackets
// must match exactly. Beyond that, e_i -> lambda_i f_si is an isomorphism
// iff R(M) = R(N_sigma diag(lambda)) with M = [e_1 ... e_k] and
// N_sigma = [f_s1 ... f_sk]. Weak bases of row spaces are unique up to
// scaling, so that equality is a bijection pi between the weak bases P of
// R(M) and Q of R(N_sigma) with P_s = mu_s Q_pi(s) diag(lambda): a system
// of difference constraints lambda_i - nu_s = P_s[i] - Q_pi(s)[i].
class IsoSearch {
 public:
  IsoSearch(const Matrix& a, std::vector<Vector> e, std::vector<Vector> f, const DOptions& opts,
            std::vector<std::string>& reasons)
      : a_(a), e_(std::move(e)), f_(std::move(f)), k_(e_.size()), opts_(opts), reasons_(reasons) {
    be_.assign(k_, std::vector<Scalar>(k_));
    bf_.assign(k_, std::vector<Scalar>(k_));
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        be_[i][j] = bracket(e_[i], e_[j]);
        bf_[i][j] = bracket(f_[i], f_[j]);
      }
    p_ = weak_basis(ConvexSpan::rows_of(Matrix::from_columns(e_), Domain::TBar)).generators();
    q_ = weak_basis(ConvexSpan::rows_of(Matrix::from_columns(f_), Domain::TBar)).generators();
  }

  std::size_t row_basis_size_source() const { return p_.size(); }
  std::size_t row_basis_size_target() const { return q_.size(); }

  /// First sigma in lexicographic order admitting a verified bridge.
  std::optional<std::pair<IsoDescriptor, Bridge>> run() {
    std::vector<std::size_t> sigma;
    std::vector<bool> used(k_, false);
    DifferenceForest forest(k_ + p_.size());
    return extend(sigma, used, forest);
  }

  std::size_t suppressed_reasons() const { return suppressed_; }

 private:
  void note(std::string r) {
    if (reasons_.size() < opts_.max_reasons) {
      reasons_.push_back(std::move(r));
    } else {
      ++suppressed_;
    }
  }

  std::optional<std::pair<IsoDescriptor, Bridge>> extend(std::vector<std::size_t>& sigma, std::vector<bool>& used,
                                                         const DifferenceForest& forest) {
    const std::size_t i = sigma.size();
    if (i == k_) return match_rows(sigma, forest);
    for (std::size_t t = 0; t < k_; ++t) {
      if (used[t]) continue;
      sigma.push_back(t);
      DifferenceForest next = forest;
      if (auto why = constrain_brackets(sigma, next)) {
        note("sigma prefix " + perm_string(sigma) + ": " + *why);
      } else {
        used[t] = true;
        auto found = extend(sigma, used, next);
        used[t] = false;
        if (found) return found;
      }
      sigma.pop_back();
    }
    return std::nullopt;
  }

  // Bracket constraints between the newest position and all earlier ones.
  std::optional<std::string> constrain_brackets(const std::vector<std::size_t>& sigma, DifferenceForest& forest) const {
    const std::size_t j = sigma.size() - 1;
    for (std::size_t i = 0; i <= j; ++i) {
      for (const auto& [u, v] : {std::pair{i, j}, std::pair{j, i}}) {
        const Scalar& be = be_[u][v];
        const Scalar& bf = bf_[sigma[u]][sigma[v]];
        if (be.is_finite() != bf.is_finite() || (!be.is_finite() && be != bf)) {
          return "bracket <e" + one_based(u) + "|e" + one_based(v) + "> = " + to_string(be) + " but <f" +
                 one_based(sigma[u]) + "|f" + one_based(sigma[v]) + "> = " + to_string(bf);
        }
        if (be.is_finite() && !forest.relate(v, u, be.value() - bf.value())) {
          return "bracket offsets inconsistent at (e" + one_based(u) + ", e" + one_based(v) + ")";
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<IsoDescriptor, Bridge>> match_rows(const std::vector<std::size_t>& sigma,
                                                             const DifferenceForest& forest) {
    if (p_.size() != q_.size()) return std::nullopt;
    // Rows of the target basis in sigma-permuted coordinates.
    std::vector<Vector> qs;
    for (const auto& q : q_) {
      std::vector<Scalar> w;
      for (std::size_t i = 0; i < k_; ++i) w.push_back(q[sigma[i]]);
      qs.emplace_back(std::move(w), Orientation::Row);
    }
    std::vector<bool> used(qs.size(), false);
    std::size_t attempts = 0;
    auto found = match_row(0, sigma, qs, used, forest, attempts);
    if (!found && attempts == 0) note("sigma " + perm_string(sigma) + ": no consistent matching of row-space bases");
    return found;
  }

  std::optional<std::pair<IsoDescriptor, Bridge>> match_row(std::size_t s, const std::vector<std::size_t>& sigma,
                                                            const std::vector<Vector>& qs, std::vector<bool>& used,
                                                            const DifferenceForest& forest, std::size_t& attempts) {
    if (s == p_.size()) {
      ++attempts;
      return certify(sigma, forest);
    }
    for (std::size_t t = 0; t < qs.size(); ++t) {
      if (used[t]) continue;
      DifferenceForest next = forest;
      bool ok = true;
      for (std::size_t i = 0; i < k_ && ok; ++i) {
        const Scalar& ps = p_[s][i];
        const Scalar& qt = qs[t][i];
        if (ps.kind() != qt.kind()) {
          ok = false;
        } else if (ps.is_finite()) {
          ok = next.relate(i, k_ + s, ps.value() - qt.value());
        }
      }
      if (!ok) continue;
      used[t] = true;
      auto found = match_row(s + 1, sigma, qs, used, next, attempts);
      used[t] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<std::pair<IsoDescriptor, Bridge>> certify(const std::vector<std::size_t>& sigma,
                                                          DifferenceForest forest) {
    IsoDescriptor f;
    f.source = e_;
    f.target = f_;
    f.sigma = sigma;
    for (std::size_t i = 0; i < k_; ++i) f.lambdas.emplace_back(forest.value(i));
    f.orientation = Orientation::Column;
    f.source_dim = f.target_dim = a_.rows();
    Bridge bridge = matrix_from_iso(a_, f);
    if (!bridge.ok()) {
      note("sigma " + perm_string(sigma) + ": bridge verification failed: " + bridge.failure());
      return std::nullopt;
    }
    return std::pair{std::move(f), std::move(bridge)};
  }

  const Matrix& a_;
  std::vector<Vector> e_;
  std::vector<Vector> f_;
  std::size_t k_;
  const DOptions& opts_;
  std::vector<std::string>& reasons_;
  std::vector<std::vector<Scalar>> be_;
  std::vector<std::vector<Scalar>> bf_;
  std::vector<Vector> p_;
  std::vector<Vector> q_;
  std::size_t suppressed_ = 0;
};

}  // namespace detail

/// A D B for square matrices over T: C(A) and C(B) are isomorphic. On
/// success the verdict carries the isomorphism and a bridge D with
/// R(D) = R(A) and C(D) = C(B), both re-verified here.
inline GreenVerdict rel_D(const Matrix& a, const Matrix& b, Domain domain = Domain::T,
                          const DOptions& opts = DOptions{}) {
  if (!within(a.domain(), Domain::T) || !within(b.domain(), Domain::T)) {
    throw DomainError("relation D requires entries in T");
  }
  detail::validate_square_pair(a, b, domain, "rel_D");
  const std::size_t n = a.rows();
  if (n > opts.max_n && !opts.override_guard) {
    throw PreconditionError("rel_D: n = " + std::to_string(n) + " exceeds the size guard of " +
                            std::to_string(opts.max_n));
  }
  GreenVerdict v = GreenVerdict::make(Relation::D, false, domain);

  const ConvexSpan ca = ConvexSpan::columns_of(a, Domain::T);
  const ConvexSpan cb = ConvexSpan::columns_of(b, Domain::T);
  const auto& ei = ca.weak_basis_indices();
  const auto& fi = cb.weak_basis_indices();
  if (ei.size() != fi.size()) {
    v.reasons.push_back("column weak basis sizes differ: " + std::to_string(ei.size()) + " vs " +
                        std::to_string(fi.size()));
    return v;
  }
  const std::size_t k = ei.size();
  if (k > opts.max_basis && !opts.override_guard) {
    throw PreconditionError("rel_D: weak basis size " + std::to_string(k) + " exceeds the size guard of " +
                            std::to_string(opts.max_basis));
  }

  std::vector<Vector> e;
  std::vector<Vector> f;
  for (std::size_t i : ei) e.push_back(ca.generators()[i]);
  for (std::size_t i : fi) f.push_back(cb.generators()[i]);

  std::optional<std::pair<IsoDescriptor, Bridge>> found;
  if (k == 0) {
    // Zero matrices: the only member of their D-class.
    IsoDescriptor z = IsoDescriptor::identity({}, n);
    Bridge bridge = matrix_from_iso(a, z);
    if (bridge.ok()) found = std::pair{std::move(z), std::move(bridge)};
  } else {
    detail::IsoSearch search(a, std::move(e), std::move(f), opts, v.reasons);
    if (search.row_basis_size_source() != search.row_basis_size_target()) {
      v.reasons.push_back("row weak bases of the basis matrices differ in size: " +
                          std::to_string(search.row_basis_size_source()) + " vs " +
                          std::to_string(search.row_basis_size_target()));
      return v;
    }
    found = search.run();
    if (search.suppressed_reasons() > 0) {
      v.reasons.push_back("... " + std::to_string(search.suppressed_reasons()) + " further candidates rejected");
    }
  }
  if (!found) {
    if (v.reasons.empty()) v.reasons.push_back("no candidate isomorphism");
    return v;
  }
  // Independent re-check of the certificate against B itself.
  if (!span_equal(ConvexSpan::columns_of(found->second.d, Domain::TBar), ConvexSpan::columns_of(b, Domain::TBar)) ||
      !span_equal(ConvexSpan::rows_of(found->second.d, Domain::TBar), ConvexSpan::rows_of(a, Domain::TBar))) {
    throw InternalError("rel_D: bridge does not certify A D B");
  }
  v.holds = true;
  v.reasons.clear();
  v.iso = std::move(found->first);
  v.bridge = std::move(found->second.d);
  return v;
}

/// Dispatches on the relation.
inline GreenVerdict decide(const Matrix& a, const Matrix& b, Relation which, Domain domain,
                           const DOptions& opts = DOptions{}) {
  switch (which) {
    case Relation::LeqR: return leq_R(a, b, domain);
    case Relation::LeqL: return leq_L(a, b, domain);
    case Relation::R:
    case Relation::L:
    case Relation::H: return rel(a, b, which, domain);
    case Relation::D: return rel_D(a, b, domain, opts);
  }
  throw PreconditionError("decide: unknown relation");
}

// --- text form ---------------------------------------------------------------
//
//   <relation> <yes|no> <domain>
//   witness <equation>       followed by a matrix
//   <iso descriptor>          (D only)
//   bridge                    followed by a matrix (D only)
//   reason <text>

inline std::string to_string(const GreenVerdict& v) {
  std::string out = std::string(to_string(v.relation)) + (v.holds ? " yes " : " no ") +
                    std::string(to_string(v.domain)) + "\n";
  for (const auto& w : v.witnesses) out += "witness " + w.equation + "\n" + to_string(w.matrix);
  if (v.iso) out += to_string(*v.iso);
  if (v.bridge) out += "bridge\n" + to_string(*v.bridge);
  for (const auto& r : v.reasons) out += "reason " + r + "\n";
  return out;
}

inline GreenVerdict parse_verdict(const std::string& text) {
  TextReader r(text);
  const auto head = r.expect_line("verdict header");
  if (head.size() != 3 || (head[1].text != "yes" && head[1].text != "no")) {
    throw ParseError("expected '<relation> <yes|no> <domain>'", head[0].line, head[0].column);
  }
  GreenVerdict v;
  try {
    v.relation = parse_relation(head[0].text);
    v.domain = parse_domain(head[2].text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), head[0].line, head[0].column);
  }
  v.holds = head[1].text == "yes";
  while (!r.at_end()) {
    const auto toks = r.peek_line();
    const std::string& key = toks[0].text;
    if (key == "iso") {
      v.iso = read_iso(r);
      continue;
    }
    r.next_line();
    if (key == "witness" && toks.size() == 2) {
      v.witnesses.push_back({toks[1].text, r.read_matrix()});
    } else if (key == "bridge" && toks.size() == 1) {
      v.bridge = r.read_matrix();
    } else if (key == "reason") {
      std::string text;
      for (std::size_t i = 1; i < toks.size(); ++i) text += (i > 1 ? " " : "") + toks[i].text;
      v.reasons.push_back(std::move(text));
    } else {
      throw ParseError("unexpected line in verdict", toks[0].line, toks[0].column);
    }
  }
  return v;
}

}  // namespace tropical
