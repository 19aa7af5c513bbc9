#pragma once

// Runs a property for a number of seeded trials and reports the failures.
// Each trial draws from its own generator (see rng.hpp), so a failure is
// reproducible from (property, seed, trial) alone, and its inputs are also
// written out as a replayable counterexample file.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tropical/check/properties.hpp"

namespace tropical::check {

struct HarnessConfig {
  std::string property_id;
  std::size_t trials = 100;
  std::optional<std::pair<std::size_t, std::size_t>> dims;  // property default when unset
  EntryPool pool;
  std::uint64_t seed = 1;
  std::string out_dir;  // counterexample files are written here when set
};

struct Failure {
  std::uint64_t trial = 0;
  std::string message;
  std::string file;  // empty unless written
};

struct RunReport {
  std::string property_id;
  std::string title;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::pair<std::size_t, std::size_t> dims;
  std::vector<Failure> failures;
  double elapsed_seconds = 0;

  bool passed() const noexcept { return failures.empty(); }
};

inline std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
  const auto colon = s.find(':');
  const auto number = [&s](const std::string& part) -> std::size_t {
    if (part.empty() || part.size() > 6 || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("dims must look like 'lo:hi', got '" + s + "'");
    }
    return std::stoul(part);
  };
  if (colon == std::string::npos) {
    const std::size_t n = number(s);
    return {n, n};
  }
  const std::size_t lo = number(s.substr(0, colon)), hi = number(s.substr(colon + 1));
  if (lo == 0 || lo > hi) throw ParseError("dims must satisfy 1 <= lo <= hi, got '" + s + "'");
  return {lo, hi};
}

/// Runs one trial: generate, then check, turning any library error into a failure.
inline Verdict run_trial(const Property& p, const TrialContext& cx, std::uint64_t seed, Instance* out = nullptr) {
  Rng rng(trial_seed(seed, cx.trial));
  Instance in;
  try {
    in = p.generate(rng, cx);
  } catch (const std::exception& e) {
    return std::string("generator error: ") + e.what();
  }
  if (out) *out = in;
  try {
    return p.check(in);
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

inline Verdict check_instance(const Property& p, const Instance& in) {
  try {
    return p.check(in);
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

inline RunReport run(const Property& p, const HarnessConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.property_id = p.id;
  rep.title = p.title;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  rep.dims = cfg.dims.value_or(std::pair{p.default_lo, p.default_hi});
  if (rep.dims.first < p.min_dim || rep.dims.second > p.max_dim) {
    throw PreconditionError(p.id + " accepts dims within " + std::to_string(p.min_dim) + ":" +
                            std::to_string(p.max_dim));
  }
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);

  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    TrialContext cx{rep.dims.first, rep.dims.second, cfg.pool, t};
    Instance in;
    auto verdict = run_trial(p, cx, cfg.seed, &in);
    if (!verdict) continue;
    Failure f{t, *verdict, {}};
    if (!cfg.out_dir.empty() && !in.items().empty()) {
      const auto path = std::filesystem::path(cfg.out_dir) /
                        (p.id + "-seed" + std::to_string(cfg.seed) + "-trial" + std::to_string(t) + ".txt");
      std::ofstream(path) << to_string(Counterexample{p.id, cfg.seed, t, *verdict, in});
      f.file = path.string();
    }
    rep.failures.push_back(std::move(f));
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline RunReport run(const HarnessConfig& cfg) {
  const Property* p = find_property(cfg.property_id);
  if (!p) throw PreconditionError("unknown property '" + cfg.property_id + "'");
  return run(*p, cfg);
}

/// Text report; deliberately omits the elapsed time so reruns compare equal.
inline std::string to_string(const RunReport& r) {
  std::string out = "property " + r.property_id + " (" + r.title + ")\n";
  out += "seed " + std::to_string(r.seed) + "\n";
  out += "trials " + std::to_string(r.trials) + "\n";
  out += "dims " + std::to_string(r.dims.first) + ":" + std::to_string(r.dims.second) + "\n";
  out += "failures " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures) {
    out += "failure trial " + std::to_string(f.trial) + ": " + f.message + "\n";
    if (!f.file.empty()) out += "  counterexample " + f.file + "\n";
  }
  out += std::string("result ") + (r.passed() ? "pass" : "fail") + "\n";
  return out;
}

struct ReplayResult {
  Counterexample counterexample;
  Verdict verdict;  // nullopt: the stored instance now passes
};

inline ReplayResult replay(const std::string& text) {
  ReplayResult out{parse_counterexample(text), std::nullopt};
  const Property* p = find_property(out.counterexample.property);
  if (!p) throw PreconditionError("unknown property '" + out.counterexample.property + "'");
  out.verdict = check_instance(*p, out.counterexample.instance);
  return out;
}

}  // namespace tropical::check
