#pragma once

// A property trial's inputs: named matrices (vectors and scalars are stored
// as 1 x n / n x 1 / 1 x 1 matrices) plus string tags. Instances serialise
// to counterexample files so a failure can be replayed later:
//
//   # any comment lines, e.g. the failure message
//   property <id>
//   seed <s>
//   trial <t>
//   tag <key> <value>
//   matrix <name>
//   <matrix in the plain-text format>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropical/text_io.hpp"

namespace tropical::check {

class Instance {
 public:
  void put(const std::string& name, Matrix m) {
    for (auto& [n, existing] : items_) {
      if (n == name) {
        existing = std::move(m);
        return;
      }
    }
    items_.emplace_back(name, std::move(m));
  }
  void put(const std::string& name, const Vector& v) { put(name, Matrix::from_vector(v)); }
  void put_scalar(const std::string& name, const Scalar& s) {
    Matrix m(1, 1);
    m(0, 0) = s;
    put(name, std::move(m));
  }
  void tag(const std::string& key, std::string value) { tags_[key] = std::move(value); }

  const Matrix& mat(const std::string& name) const {
    for (const auto& [n, m] : items_)
      if (n == name) return m;
    throw PreconditionError("instance has no item '" + name + "'");
  }
  Vector vec(const std::string& name) const { return mat(name).to_vector(); }
  Scalar scalar(const std::string& name) const {
    const Matrix& m = mat(name);
    if (m.rows() != 1 || m.cols() != 1) throw ShapeError("item '" + name + "' is not a scalar");
    return m(0, 0);
  }
  bool has(const std::string& name) const {
    for (const auto& [n, m] : items_)
      if (n == name) return true;
    return false;
  }
  const std::string& tag(const std::string& key) const {
    const auto it = tags_.find(key);
    if (it == tags_.end()) throw PreconditionError("instance has no tag '" + key + "'");
    return it->second;
  }

  const std::vector<std::pair<std::string, Matrix>>& items() const noexcept { return items_; }
  const std::map<std::string, std::string>& tags() const noexcept { return tags_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::pair<std::string, Matrix>> items_;
  std::map<std::string, std::string> tags_;
};

struct Counterexample {
  std::string property;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::string message;  // written as comments; not read back
  Instance instance;
};

inline std::string to_string(const Counterexample& c) {
  std::string out = "# counterexample\n";
  if (!c.message.empty()) {
    std::size_t start = 0;
    while (start <= c.message.size()) {
      const std::size_t eol = c.message.find('\n', start);
      out += "# " + c.message.substr(start, eol == std::string::npos ? std::string::npos : eol - start) + "\n";
      if (eol == std::string::npos) break;
      start = eol + 1;
    }
  }
  out += "property " + c.property + "\nseed " + std::to_string(c.seed) + "\ntrial " + std::to_string(c.trial) + "\n";
  for (const auto& [k, v] : c.instance.tags()) out += "tag " + k + " " + v + "\n";
  for (const auto& [name, m] : c.instance.items()) out += "matrix " + name + "\n" + to_string(m);
  return out;
}

inline Counterexample parse_counterexample(const std::string& text) {
  TextReader r(text);
  Counterexample c;
  const auto field = [&r](const char* key) {
    const auto toks = r.expect_line(key);
    if (toks.size() != 2 || toks[0].text != key) {
      throw ParseError(std::string("expected '") + key + " <value>'", toks[0].line, toks[0].column);
    }
    return toks[1];
  };
  c.property = field("property").text;
  const auto to_u64 = [](const TextReader::Token& t) -> std::uint64_t {
    if (t.text.empty() || t.text.size() > 20 ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected an unsigned integer, got '" + t.text + "'", t.line, t.column);
    }
    try {
      return std::stoull(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range: '" + t.text + "'", t.line, t.column);
    }
  };
  c.seed = to_u64(field("seed"));
  c.trial = to_u64(field("trial"));
  while (!r.at_end()) {
    const auto toks = r.next_line();
    if (toks[0].text == "tag" && toks.size() == 3) {
      c.instance.tag(toks[1].text, toks[2].text);
    } else if (toks[0].text == "matrix" && toks.size() == 2) {
      c.instance.put(toks[1].text, r.read_matrix());
    } else {
      throw ParseError("expected 'tag <key> <value>' or 'matrix <name>'", toks[0].line, toks[0].column);
    }
  }
  return c;
}

}  // namespace tropical::check
