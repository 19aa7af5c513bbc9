#pragma once

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "tropical/tropical.hpp"

namespace tropical {

// Readable gtest diagnostics.
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << to_string(s); }
inline void PrintTo(const Vector& v, std::ostream* os) { *os << inline_string(v); }
inline void PrintTo(const Matrix& m, std::ostream* os) { *os << "\n" << to_string(m); }

}  // namespace tropical

namespace tt {

using namespace tropical;

inline Scalar S(const char* tok) { return parse_scalar(tok); }

/// Rows separated by ';', entries by spaces: M("0 1; -inf 2").
inline Matrix M(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == ";") {
      rows.emplace_back();
      continue;
    }
    bool end = !tok.empty() && tok.back() == ';';
    if (end) tok.pop_back();
    if (!tok.empty()) rows.back().push_back(tok);
    if (end) rows.emplace_back();
  }
  if (rows.back().empty()) rows.pop_back();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ShapeError("ragged test matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_scalar(rows[i][j]);
  }
  return m;
}

/// Column vector from space-separated tokens.
inline Vector V(const std::string& text, Orientation o = Orientation::Column) {
  return M(text).to_vector().as(o);
}
inline Vector R(const std::string& text) { return V(text, Orientation::Row); }

}  // namespace tt
