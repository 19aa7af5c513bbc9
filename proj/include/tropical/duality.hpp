#pragma once

/**
 * @file duality.hpp
 * @brief Row/column space duality and explicit isomorphisms between spans.
 *
 * For a matrix A, theta(A, x) = A (-x)^T maps the row space R(A) onto the
 * column space C(A), and theta_prime(A, y) = (-y)^T A is its inverse. Both
 * reverse the bracket: <x|y> = <theta(y)|theta(x)>.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tropical/convex.hpp"
#include "tropical/text_io.hpp"

namespace tropical {

/// Strict mode rejects inputs outside the relevant span; lenient mode
/// evaluates the formula regardless (no theorem applies there).
enum class Mode : std::uint8_t { Strict, Lenient };

/// theta_A(x) = A (-x)^T for a row vector x in R(A). Returns a column.
inline Vector theta(const Matrix& a, const Vector& x, Mode mode = Mode::Strict) {
  if (x.dim() != a.cols()) {
    throw ShapeError("theta: vector of dimension " + std::to_string(x.dim()) + " against " +
                     std::to_string(a.cols()) + " columns");
  }
  const Vector xr = x.as(Orientation::Row);
  if (mode == Mode::Strict && !contains(ConvexSpan::rows_of(a, Domain::TBar), xr)) {
    throw DomainError("theta: " + inline_string(xr) + " is not in the row space");
  }
  return mul(a, neg(xr).as(Orientation::Column));
}

/// theta'_A(y) = (-y)^T A for a column vector y in C(A). Returns a row.
inline Vector theta_prime(const Matrix& a, const Vector& y, Mode mode = Mode::Strict) {
  if (y.dim() != a.rows()) {
    throw ShapeError("theta_prime: vector of dimension " + std::to_string(y.dim()) + " against " +
                     std::to_string(a.rows()) + " rows");
  }
  const Vector yc = y.as(Orientation::Column);
  if (mode == Mode::Strict && !contains(ConvexSpan::columns_of(a, Domain::TBar), yc)) {
    throw DomainError("theta_prime: " + inline_string(yc) + " is not in the column space");
  }
  return mul(neg(yc).as(Orientation::Row), a);
}

struct KernelWitness {
  Vector x;
  Vector y;
};

/// For a row vector z outside R(B), column vectors x, y with B x = B y but
/// z x != z y. Both properties are checked before returning.
inline KernelWitness kernel_witness(const Matrix& b, const Vector& z) {
  if (z.dim() != b.cols()) throw ShapeError("kernel_witness: z has the wrong dimension");
  const Vector zr = z.as(Orientation::Row);
  if (contains(ConvexSpan::rows_of(b, Domain::TBar), zr)) {
    throw PreconditionError("kernel_witness: " + inline_string(zr) + " lies in the row space");
  }
  Vector x = neg(zr).as(Orientation::Column);
  const Vector bx = mul(b, x);
  const Vector v = theta_prime(b, bx, Mode::Lenient);
  Vector y = neg(v).as(Orientation::Column);
  if (mul(b, y) != bx) throw InternalError("kernel_witness: B x != B y");
  if (dot(zr, x) == dot(zr, y)) throw InternalError("kernel_witness: z x == z y");
  return {std::move(x), std::move(y)};
}

/// A candidate isomorphism between two spans given on weak bases: the i-th
/// source vector maps to lambdas[i] (x) target[sigma[i]], extended linearly.
/// Whether that extension is well defined is checked, never assumed.
struct IsoDescriptor {
  std::vector<Vector> source;
  std::vector<Vector> target;
  std::vector<std::size_t> sigma;
  std::vector<Scalar> lambdas;
  Orientation orientation = Orientation::Column;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  std::size_t size() const noexcept { return source.size(); }

  static IsoDescriptor identity(const std::vector<Vector>& basis, std::size_t dim,
                                Orientation orientation = Orientation::Column) {
    IsoDescriptor f;
    f.source = basis;
    f.target = basis;
    f.sigma.resize(basis.size());
    std::iota(f.sigma.begin(), f.sigma.end(), std::size_t{0});
    f.lambdas.assign(basis.size(), Scalar(0));
    f.orientation = orientation;
    f.source_dim = f.target_dim = dim;
    return f;
  }

  void validate() const {
    const std::size_t k = source.size();
    if (target.size() != k || sigma.size() != k || lambdas.size() != k) {
      throw ShapeError("iso descriptor: E, F, sigma and lambda must all have length k");
    }
    std::vector<bool> seen(k, false);
    for (std::size_t s : sigma) {
      if (s >= k || seen[s]) throw ShapeError("iso descriptor: sigma is not a permutation");
      seen[s] = true;
    }
    for (const auto& l : lambdas)
      if (!l.is_finite()) throw DomainError("iso descriptor: lambdas must be finite");
    for (const auto& e : source)
      if (e.dim() != source_dim) throw ShapeError("iso descriptor: source vector of wrong dimension");
    for (const auto& f : target)
      if (f.dim() != target_dim) throw ShapeError("iso descriptor: target vector of wrong dimension");
  }

  /// lambda_i (x) f_sigma(i).
  Vector image_of_basis(std::size_t i) const { return scale(lambdas[i], target[sigma[i]]); }

  ConvexSpan source_span() const {
    return source.empty() ? ConvexSpan(source_dim, orientation, Domain::TBar) : ConvexSpan(source, Domain::TBar);
  }
  ConvexSpan target_span() const {
    return target.empty() ? ConvexSpan(target_dim, orientation, Domain::TBar) : ConvexSpan(target, Domain::TBar);
  }
};

/// Linear extension of the descriptor evaluated at c, via the principal
/// coefficients of c over the source basis.
inline Vector apply_iso(const IsoDescriptor& f, const Vector& c) {
  f.validate();
  const ConvexSpan src = f.source_span();
  const auto coeffs = member(src, c.as(f.orientation));
  if (!coeffs) throw DomainError("apply_iso: " + inline_string(c) + " is not in the source span");
  Vector acc = Vector::zero(f.target_dim, f.orientation);
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc = oplus(acc, scale(otimes((*coeffs)[i], f.lambdas[i]), f.target[f.sigma[i]]));
  }
  return acc;
}

/// The descriptor extends to a linear isomorphism exactly when the matrix
/// with columns e_i and the matrix with columns lambda_i f_sigma(i) have the
/// same row space.
inline bool iso_is_valid(const IsoDescriptor& f) {
  f.validate();
  if (f.size() == 0) return true;
  std::vector<Vector> images;
  std::vector<Vector> src;
  for (std::size_t i = 0; i < f.size(); ++i) {
    images.push_back(f.image_of_basis(i).as(Orientation::Column));
    src.push_back(f.source[i].as(Orientation::Column));
  }
  return span_equal(ConvexSpan::rows_of(Matrix::from_columns(src), Domain::TBar),
                    ConvexSpan::rows_of(Matrix::from_columns(images), Domain::TBar));
}

struct Bridge {
  Matrix d;
  bool row_space_matches = false;     // R(D) = R(A)
  bool column_space_matches = false;  // C(D) = span of the target basis

  bool ok() const noexcept { return row_space_matches && column_space_matches; }

  std::string failure() const {
    if (ok()) return {};
    if (!row_space_matches && !column_space_matches) return "row and column spaces both differ";
    return row_space_matches ? "column space differs from the target span" : "row space differs from R(A)";
  }
};

/// Applies f (an isomorphism out of C(A)) to every column of A, then checks
/// R(D) = R(A) and C(D) = span(F).
inline Bridge matrix_from_iso(const Matrix& a, const IsoDescriptor& f) {
  if (f.orientation != Orientation::Column) throw ShapeError("matrix_from_iso: descriptor must act on columns");
  if (f.source_dim != a.rows()) throw ShapeError("matrix_from_iso: descriptor source dimension differs from A");
  std::vector<Vector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(apply_iso(f, a.col(j)));
  Bridge out{Matrix::from_columns(cols)};
  out.row_space_matches =
      span_equal(ConvexSpan::rows_of(out.d, Domain::TBar), ConvexSpan::rows_of(a, Domain::TBar));
  out.column_space_matches = span_equal(ConvexSpan::columns_of(out.d, Domain::TBar), f.target_span());
  return out;
}

// --- text form ---------------------------------------------------------------
//
//   iso <k> <row|col> <source_dim> <target_dim>
//   sigma <s_1> ... <s_k>        (1-based)
//   lambda <l_1> ... <l_k>
//   <E as a matrix, basis vectors in the stated orientation>   (k > 0 only)
//   <F likewise>

inline std::string to_string(const IsoDescriptor& f) {
  std::string out = "iso " + std::to_string(f.size()) + " " + std::string(to_string(f.orientation)) + " " +
                    std::to_string(f.source_dim) + " " + std::to_string(f.target_dim) + "\nsigma";
  for (std::size_t s : f.sigma) out += " " + std::to_string(s + 1);
  out += "\nlambda";
  for (const auto& l : f.lambdas) out += " " + to_string(l);
  out += "\n";
  if (f.size() > 0) {
    const auto as_matrix = [&](const std::vector<Vector>& vs) {
      return f.orientation == Orientation::Row ? Matrix::from_rows(vs) : Matrix::from_columns(vs);
    };
    out += to_string(as_matrix(f.source));
    out += to_string(as_matrix(f.target));
  }
  return out;
}

inline IsoDescriptor read_iso(TextReader& r) {
  const auto head = r.expect_line("iso descriptor header");
  if (head.size() != 5 || head[0].text != "iso") {
    throw ParseError("expected 'iso <k> <row|col> <source_dim> <target_dim>'", head[0].line, head[0].column);
  }
  IsoDescriptor f;
  const std::size_t k = TextReader::parse_count(head[1]);
  try {
    f.orientation = parse_orientation(head[2].text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), head[2].line, head[2].column);
  }
  f.source_dim = TextReader::parse_count(head[3]);
  f.target_dim = TextReader::parse_count(head[4]);

  const auto sig = r.expect_line("sigma line");
  if (sig[0].text != "sigma" || sig.size() != k + 1) {
    throw ParseError("expected 'sigma' followed by " + std::to_string(k) + " indices", sig[0].line, sig[0].column);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t s = TextReader::parse_count(sig[i]);
    if (s == 0) throw ParseError("sigma indices are 1-based", sig[i].line, sig[i].column);
    f.sigma.push_back(s - 1);
  }
  const auto lam = r.expect_line("lambda line");
  if (lam[0].text != "lambda" || lam.size() != k + 1) {
    throw ParseError("expected 'lambda' followed by " + std::to_string(k) + " scalars", lam[0].line, lam[0].column);
  }
  for (std::size_t i = 1; i <= k; ++i) f.lambdas.push_back(TextReader::parse_token(lam[i]));
  if (k > 0) {
    const auto vecs = [&](const Matrix& m) { return f.orientation == Orientation::Row ? m.row_vectors() : m.column_vectors(); };
    f.source = vecs(r.read_matrix());
    f.target = vecs(r.read_matrix());
  }
  try {
    f.validate();
  } catch (const Error& e) {
    throw ParseError(e.what(), r.line(), 1);
  }
  return f;
}

}  // namespace tropical
