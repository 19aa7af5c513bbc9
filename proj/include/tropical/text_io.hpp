#pragma once

// Plain-text matrix format shared by every tool:
//
//   rows cols
//   a11 a12 ...
//   ...
//
// Tokens are those of parse_scalar. Blank lines and lines starting with '#'
// are skipped when reading; printing emits neither.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

inline std::string to_string(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Vectors print as 1 x n (row) or n x 1 (column) matrices.
inline std::string to_string(const Vector& v) { return to_string(Matrix::from_vector(v)); }

/// Single-line form used inside diagnostics and reason lines.
inline std::string inline_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  if (v.orientation() == Orientation::Column) out += "^T";
  return out;
}

/// Line-oriented tokenizer that remembers positions for diagnostics.
class TextReader {
 public:
  struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
  };

  explicit TextReader(std::string text) : text_(std::move(text)) {}

  static TextReader from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return TextReader(ss.str());
  }

  /// Tokens of the next non-blank, non-comment line; empty at end of input.
  std::vector<Token> next_line() {
    while (pos_ < text_.size()) {
      const std::size_t eol = text_.find('\n', pos_);
      const std::size_t end = eol == std::string::npos ? text_.size() : eol;
      std::string_view line(text_.data() + pos_, end - pos_);
      ++line_no_;
      pos_ = eol == std::string::npos ? text_.size() : eol + 1;
      std::vector<Token> toks;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        toks.push_back({std::string(line.substr(start, i - start)), line_no_, start + 1});
      }
      if (toks.empty() || toks.front().text.front() == '#') continue;
      return toks;
    }
    return {};
  }

  /// Next line, which must exist.
  std::vector<Token> expect_line(const char* what) {
    auto toks = next_line();
    if (toks.empty()) throw ParseError(std::string("unexpected end of input, expected ") + what, line_no_ + 1, 1);
    return toks;
  }

  /// Next line's tokens without consuming it.
  std::vector<Token> peek_line() {
    const std::size_t save_pos = pos_;
    const std::size_t save_line = line_no_;
    auto toks = next_line();
    pos_ = save_pos;
    line_no_ = save_line;
    return toks;
  }

  bool at_end() { return peek_line().empty(); }

  static std::size_t parse_count(const Token& t) {
    if (t.text.empty() || t.text.size() > 9 ||
        !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("expected a non-negative integer, got '" + t.text + "'", t.line, t.column);
    }
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  static Scalar parse_token(const Token& t) {
    try {
      return parse_scalar(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.line, t.column + (e.column() ? e.column() - 1 : 0));
    }
  }

  Matrix read_matrix() {
    const auto header = expect_line("matrix header 'rows cols'");
    if (header.size() != 2) {
      throw ParseError("matrix header must be 'rows cols'", header.front().line, header.front().column);
    }
    const std::size_t rows = parse_count(header[0]);
    const std::size_t cols = parse_count(header[1]);
    if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", header[0].line, 1);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto toks = expect_line("matrix row");
      if (toks.size() != cols) {
        throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()),
                         toks.front().line, toks.size() > cols ? toks[cols].column : toks.back().column);
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_token(toks[j]);
    }
    return m;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

inline Matrix parse_matrix(const std::string& text) {
  TextReader r(text);
  Matrix m = r.read_matrix();
  if (!r.at_end()) throw ParseError("trailing content after matrix", r.line() + 1, 1);
  return m;
}

inline Vector parse_vector(const std::string& text) { return parse_matrix(text).to_vector(); }

/// A 1 x 1 matrix does not say which way it points; `hint` decides.
inline Vector parse_vector(const std::string& text, Orientation hint) {
  const Vector v = parse_vector(text);
  return v.dim() == 1 ? v.as(hint) : v;
}

inline Matrix read_matrix_file(const std::string& path) {
  TextReader r = TextReader::from_file(path);
  Matrix m = r.read_matrix();
  if (!r.at_end()) throw ParseError(path + ": trailing content after matrix", r.line() + 1, 1);
  return m;
}

}  // namespace tropical
