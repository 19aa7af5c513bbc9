// trop: command-line front end to the tropical library.
//
// Exit codes: 0 = success / affirmative, 1 = negative verdict or failed
// check, 2 = error (bad arguments, parse errors, shape or domain violations).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "tropical/check/harness.hpp"
#include "tropical/tropical.hpp"

namespace {

using namespace tropical;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

// Errors from reading a named file carry the file name in front.
struct FileError : Error {
  using Error::Error;
};

Matrix load_matrix(const std::string& path) {
  try {
    return read_matrix_file(path);
  } catch (const ParseError& e) {
    throw FileError(path + ": " + e.what());
  }
}

Vector load_vector(const std::string& path) {
  try {
    return load_matrix(path).to_vector();
  } catch (const ShapeError& e) {
    throw FileError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

ConvexSpan load_span(const std::string& path, Orientation o) {
  const Matrix m = load_matrix(path);
  return o == Orientation::Row ? ConvexSpan::rows_of(m) : ConvexSpan::columns_of(m);
}

std::string scalar_line(const std::vector<Scalar>& xs) {
  std::string out;
  for (const auto& x : xs) out += " " + to_string(x);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical (max-plus) linear algebra and Green's relations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  int status = kYes;
  std::string x_path, y_path, format = "text", orientation = "col";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // bracket / metric / mul -----------------------------------------------------
  auto* bracket_cmd = app.add_subcommand("bracket", "Print <x|y>, the largest l with l x <= y");
  bracket_cmd->add_option("x", x_path, "Vector file")->required();
  bracket_cmd->add_option("y", y_path, "Vector file")->required();
  bracket_cmd->callback([&] { std::cout << to_string(bracket(load_vector(x_path), load_vector(y_path))) << "\n"; });

  auto* metric_cmd = app.add_subcommand("metric", "Print the Hilbert projective distance d_H(x, y)");
  metric_cmd->add_option("x", x_path, "Vector file")->required();
  metric_cmd->add_option("y", y_path, "Vector file")->required();
  metric_cmd->callback([&] { std::cout << to_string(hilbert(load_vector(x_path), load_vector(y_path))) << "\n"; });

  auto* mul_cmd = app.add_subcommand("mul", "Print the product A B");
  mul_cmd->add_option("A", x_path, "Matrix file")->required();
  mul_cmd->add_option("B", y_path, "Matrix file")->required();
  mul_cmd->callback([&] { std::cout << to_string(mul(load_matrix(x_path), load_matrix(y_path))); });

  // dual -----------------------------------------------------------------------
  bool prime = false, strict = false;
  auto* dual_cmd = app.add_subcommand("dual", "Apply theta_A(x) = A(-x)^T, or theta'_A(y) = (-y)^T A with --prime");
  dual_cmd->add_option("A", x_path, "Matrix file")->required();
  dual_cmd->add_option("v", y_path, "Vector file")->required();
  dual_cmd->add_flag("--prime", prime, "Apply theta' instead of theta");
  dual_cmd->add_flag("--strict", strict, "Reject vectors outside the row (column) space");
  dual_cmd->callback([&] {
    const Matrix a = load_matrix(x_path);
    const Vector v = load_vector(y_path);
    const Mode mode = strict ? Mode::Strict : Mode::Lenient;
    std::cout << to_string(prime ? theta_prime(a, v, mode) : theta(a, v, mode));
  });

  // member / basis -------------------------------------------------------------
  auto* member_cmd = app.add_subcommand("member", "Decide whether v lies in the span of the generators in S");
  member_cmd->add_option("v", x_path, "Vector file")->required();
  member_cmd->add_option("S", y_path, "Matrix file of generators")->required();
  member_cmd->add_option("--orientation", orientation, "Generators are the rows or the columns of S")
      ->check(CLI::IsMember({"row", "col"}));
  member_cmd->callback([&] {
    const Orientation o = parse_orientation(orientation);
    const ConvexSpan s = load_span(y_path, o);
    const Vector v = load_vector(x_path);
    const auto coeffs = member(s, v.as(o));
    if (coeffs) {
      std::cout << "yes\ncoeffs" << scalar_line(*coeffs) << "\n";
    } else {
      std::cout << "no\n";
      status = kNo;
    }
  });

  auto* basis_cmd = app.add_subcommand("basis", "Print a weak (minimal) basis of the span of S");
  basis_cmd->add_option("S", x_path, "Matrix file of generators")->required();
  basis_cmd->add_option("--orientation", orientation, "Generators are the rows or the columns of S")
      ->check(CLI::IsMember({"row", "col"}));
  basis_cmd->callback([&] {
    const ConvexSpan s = load_span(x_path, parse_orientation(orientation));
    std::cout << "indices";
    for (std::size_t i : s.weak_basis_indices()) std::cout << " " << i + 1;
    std::cout << "\n";
    const ConvexSpan b = weak_basis(s);
    if (!b.empty()) std::cout << to_string(b.as_matrix());
  });

  // green ----------------------------------------------------------------------
  std::string relation = "h", domain = "tbar", witness_path;
  auto* green_cmd = app.add_subcommand("green", "Decide a Green's relation between square matrices A and B");
  green_cmd->add_option("A", x_path, "Matrix file")->required();
  green_cmd->add_option("B", y_path, "Matrix file")->required();
  green_cmd->add_option("--relation", relation, "leq-r, leq-l, r, l, h or d")
      ->check(CLI::IsMember({"leq-r", "leq-l", "r", "l", "h", "d"}));
  green_cmd->add_option("--domain", domain, "Semiring: ft, t or tbar (d defaults to t)")
      ->check(CLI::IsMember({"ft", "t", "tbar"}));
  green_cmd->add_option("--witness", witness_path, "Write the full verdict with witnesses here");
  add_format(green_cmd);
  green_cmd->callback([&] {
    const Relation r = parse_relation(relation);
    Domain d = parse_domain(domain);
    if (r == Relation::D && green_cmd->count("--domain") == 0) d = Domain::T;
    const GreenVerdict v = decide(load_matrix(x_path), load_matrix(y_path), r, d, DOptions::from_env());
    if (!witness_path.empty()) write_file(witness_path, to_string(v));
    if (format == "json") {
      std::cout << trop_cli::to_json(v).dump(2) << "\n";
    } else {
      std::cout << (v.holds ? "yes" : "no") << "\n";
    }
    status = v.holds ? kYes : kNo;
  });

  // check ----------------------------------------------------------------------
  check::HarnessConfig cfg;
  std::string dims, replay_path;
  bool list = false;
  auto* check_cmd = app.add_subcommand("check", "Run a property from the catalog on seeded random instances");
  check_cmd->add_option("--property", cfg.property_id, "Property id, e.g. P5");
  check_cmd->add_option("--trials", cfg.trials, "Number of trials")->check(CLI::PositiveNumber);
  check_cmd->add_option("--dims", dims, "Dimension range lo:hi (property default otherwise)");
  check_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  check_cmd->add_option("--out-dir", cfg.out_dir, "Write counterexample files here");
  check_cmd->add_option("--replay", replay_path, "Re-check a counterexample file");
  check_cmd->add_flag("--list", list, "List the catalog");
  add_format(check_cmd);
  check_cmd->callback([&] {
    if (list) {
      for (const auto& p : check::catalog())
        std::cout << p.id << "\t" << p.title << "\t(dims " << p.default_lo << ":" << p.default_hi << ")\n";
      return;
    }
    if (!replay_path.empty()) {
      std::ifstream in(replay_path);
      if (!in) throw Error("cannot open '" + replay_path + "'");
      std::ostringstream text;
      text << in.rdbuf();
      check::ReplayResult rr;
      try {
        rr = check::replay(text.str());
      } catch (const ParseError& e) {
        throw FileError(replay_path + ": " + e.what());
      }
      const auto& c = rr.counterexample;
      if (format == "json") {
        trop_cli::json j{{"property", c.property}, {"seed", c.seed}, {"trial", c.trial}, {"reproduced", bool(rr.verdict)}};
        if (rr.verdict) j["message"] = *rr.verdict;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "replay " << c.property << " seed " << c.seed << " trial " << c.trial << ": "
                  << (rr.verdict ? "fail: " + *rr.verdict : std::string("pass")) << "\n";
      }
      status = rr.verdict ? kNo : kYes;
      return;
    }
    if (cfg.property_id.empty()) throw Error("check needs --property, --replay or --list");
    if (!dims.empty()) cfg.dims = check::parse_dims(dims);
    const check::RunReport rep = check::run(cfg);
    std::cout << (format == "json" ? trop_cli::to_json(rep).dump(2) + "\n" : to_string(rep));
    std::cerr << "elapsed " << rep.elapsed_seconds << " s\n";
    status = rep.passed() ? kYes : kNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const FileError& e) {
    std::cerr << "trop: " << e.what() << "\n";
    return kError;
  } catch (const ParseError& e) {
    std::cerr << "trop: parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "trop: " << e.what() << "\n";
    return kError;
  }
  return status;
}
