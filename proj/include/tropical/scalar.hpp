#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars of the completed max-plus semiring.
 *
 * A Scalar is an exact rational, -inf or +inf. The three semirings of
 * interest are nested: FT (rationals only) inside T (adds -inf) inside
 * TBar (adds +inf). Addition is max, multiplication is +, and the one
 * irregular rule of TBar is that (-inf) + (+inf) = -inf.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tropical/errors.hpp"

namespace tropical {

enum class Domain : std::uint8_t { FT = 0, T = 1, TBar = 2 };

/// Smallest domain containing both arguments.
constexpr Domain join(Domain a, Domain b) noexcept { return a < b ? b : a; }

/// True when every element of `inner` lies in `outer`.
constexpr bool within(Domain inner, Domain outer) noexcept { return inner <= outer; }

inline std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::FT: return "ft";
    case Domain::T: return "t";
    case Domain::TBar: return "tbar";
  }
  return "?";
}

inline Domain parse_domain(std::string_view s) {
  if (s == "ft") return Domain::FT;
  if (s == "t") return Domain::T;
  if (s == "tbar") return Domain::TBar;
  throw ParseError("unknown domain '" + std::string(s) + "' (expected ft, t or tbar)");
}

class Scalar {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  /// The tropical zero, -inf.
  Scalar() noexcept : kind_(Kind::NegInf) {}

  Scalar(long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}      // NOLINT(implicit)

  explicit Scalar(mpq_class q) : kind_(Kind::Finite), value_(std::move(q)) { value_.canonicalize(); }

  static Scalar neg_inf() noexcept { return Scalar(); }
  static Scalar pos_inf() noexcept {
    Scalar s;
    s.kind_ = Kind::PosInf;
    return s;
  }
  static Scalar rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    return Scalar(mpq_class(num, den));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Rational value; only meaningful for finite scalars.
  const mpq_class& value() const {
    if (!is_finite()) throw DomainError("value() of an infinite scalar");
    return value_;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || cmp(a.value_, b.value_) == 0;
  }

  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Kind kind_;
  mpq_class value_;  // zero unless finite
};

inline Scalar neg_inf() { return Scalar::neg_inf(); }
inline Scalar pos_inf() { return Scalar::pos_inf(); }

/// a (+) b = max(a, b).
inline Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// a (x) b = a + b, with -inf absorbing (including against +inf).
inline Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return Scalar::pos_inf();
  return Scalar(mpq_class(a.value() + b.value()));
}

/// Order-reversing involution x -> -x, swapping the infinities.
inline Scalar neg(const Scalar& a) {
  switch (a.kind()) {
    case Scalar::Kind::NegInf: return Scalar::pos_inf();
    case Scalar::Kind::PosInf: return Scalar::neg_inf();
    case Scalar::Kind::Finite: break;
  }
  return Scalar(mpq_class(-a.value()));
}

inline bool leq(const Scalar& a, const Scalar& b) { return a <= b; }

inline Domain domain_of(const Scalar& a) noexcept {
  switch (a.kind()) {
    case Scalar::Kind::Finite: return Domain::FT;
    case Scalar::Kind::NegInf: return Domain::T;
    case Scalar::Kind::PosInf: return Domain::TBar;
  }
  return Domain::TBar;
}

inline bool in_domain(const Scalar& a, Domain d) noexcept { return within(domain_of(a), d); }

/// Canonical text token: `-inf`, `inf`, an integer, or `p/q` in lowest terms.
inline std::string to_string(const Scalar& a) {
  switch (a.kind()) {
    case Scalar::Kind::NegInf: return "-inf";
    case Scalar::Kind::PosInf: return "inf";
    case Scalar::Kind::Finite: break;
  }
  return a.value().get_str();
}

/// Parses a scalar token. On failure throws ParseError whose column is the
/// 0-based offset of the first offending character plus one.
inline Scalar parse_scalar(std::string_view tok) {
  if (tok == "-inf") return Scalar::neg_inf();
  if (tok == "inf" || tok == "+inf") return Scalar::pos_inf();
  if (tok.empty()) throw ParseError("empty scalar token");

  std::size_t pos = 0;
  if (tok[0] == '+' || tok[0] == '-') ++pos;
  const auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < tok.size() && tok[p] >= '0' && tok[p] <= '9') ++p;
    return p;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw ParseError("expected digits in scalar '" + std::string(tok) + "'", 0, pos + 1);
  std::string num(tok.substr(tok[0] == '+' ? 1 : 0, end - (tok[0] == '+' ? 1 : 0)));
  std::string den = "1";
  if (end < tok.size()) {
    if (tok[end] != '/') {
      throw ParseError("unexpected character in scalar '" + std::string(tok) + "'", 0, end + 1);
    }
    const std::size_t den_begin = end + 1;
    const std::size_t den_end = digits(den_begin);
    if (den_end == den_begin || den_end != tok.size()) {
      throw ParseError("malformed denominator in scalar '" + std::string(tok) + "'", 0, den_begin + 1);
    }
    den = std::string(tok.substr(den_begin, den_end - den_begin));
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(tok) + "'", 0, end + 2);
  return Scalar(mpq_class(n, d));
}

}  // namespace tropical
