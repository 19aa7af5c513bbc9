#pragma once

// JSON renderings for `--format json`. Scalars are strings ("-inf", "3/2")
// so values stay exact.

#include "json.hpp"
#include "tropical/check/harness.hpp"
#include "tropical/greens.hpp"

namespace trop_cli {

using nlohmann::json;

inline json to_json(const tropical::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(tropical::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const tropical::IsoDescriptor& f) {
  json sigma = json::array();
  for (std::size_t s : f.sigma) sigma.push_back(s + 1);
  json lambdas = json::array();
  for (const auto& l : f.lambdas) lambdas.push_back(tropical::to_string(l));
  json out{{"k", f.size()},
           {"orientation", std::string(tropical::to_string(f.orientation))},
           {"source_dim", f.source_dim},
           {"target_dim", f.target_dim},
           {"sigma", sigma},
           {"lambda", lambdas}};
  if (f.size() > 0) {
    const auto as_matrix = [&f](const std::vector<tropical::Vector>& vs) {
      return f.orientation == tropical::Orientation::Row ? tropical::Matrix::from_rows(vs)
                                                         : tropical::Matrix::from_columns(vs);
    };
    out["source"] = to_json(as_matrix(f.source));
    out["target"] = to_json(as_matrix(f.target));
  }
  return out;
}

inline json to_json(const tropical::GreenVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"equation", w.equation}, {"matrix", to_json(w.matrix)}});
  json out{{"relation", std::string(tropical::to_string(v.relation))},
           {"holds", v.holds},
           {"domain", std::string(tropical::to_string(v.domain))},
           {"witnesses", witnesses},
           {"reasons", v.reasons}};
  if (v.iso) out["iso"] = to_json(*v.iso);
  if (v.bridge) out["bridge"] = to_json(*v.bridge);
  return out;
}

inline json to_json(const tropical::check::RunReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json j{{"trial", f.trial}, {"message", f.message}};
    if (!f.file.empty()) j["counterexample"] = f.file;
    failures.push_back(std::move(j));
  }
  return {{"property", r.property_id}, {"title", r.title},       {"seed", r.seed},
          {"trials", r.trials},        {"dims", {r.dims.first, r.dims.second}},
          {"failures", failures},      {"passed", r.passed()}};
}

}  // namespace trop_cli
