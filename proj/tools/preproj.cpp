#include <CLI11.hpp>

#include <iostream>
#include <regex>

#include "preproj/algebra.hpp"
#include "preproj/report.hpp"

using namespace preproj;

namespace {

constexpr int kValidationError = 2;

Field parse_field(const std::string& s) {
  if (s == "Q") return Field{};
  std::smatch m;
  static const std::regex re(R"(F\s*:?\s*(\d+))");
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("field must be Q or F<prime>, got '" + s + "'");
  std::uint64_t p = std::stoull(m[1]);
  if (!is_prime(p) || p >= (1ULL << 31)) throw std::invalid_argument("field characteristic " + m[1].str() + " is not a prime below 2^31");
  return Field{p};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher preprojective algebras, superpotentials and homological certificates"};
  app.require_subcommand(1);
  std::string format = "text", field;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--field", field, "Override the input field: Q or F<prime>");

  std::string file;
  int bound = 8, order = 0, dim_cap = 20000, window = 3, steps = 6, d = 2, s = 3;
  bool expected = false, left = false, over_pi = false;
  std::string vertex;

  auto* compute = app.add_subcommand("compute", "Presentation of the preprojective algebra");
  auto* dual = app.add_subcommand("dual", "Quadratic dual presentation");
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi presentation of the associated superpotential");
  auto* vjac = app.add_subcommand("verify-jacobi", "Compare Jacobi ideals with the preprojective ideal");
  auto* classify = app.add_subcommand("classify", "RF / RI classification by the tau^- orbit");
  auto* certify = app.add_subcommand("certify", "Consolidated homological report");
  auto* typea = app.add_subcommand("typea", "Type A family presentations");
  auto* resolve = app.add_subcommand("resolve", "Minimal graded resolutions of simple modules");

  for (auto* sc : {compute, dual, jacobi, vjac, classify, certify, typea, resolve}) sc->fallthrough();
  for (auto* sc : {compute, dual, jacobi, vjac, classify, certify, resolve})
    sc->add_option("file", file, "Presentation file")->required()->check(CLI::ExistingFile);
  jacobi->add_option("--order", order, "Derivative order k")->required();
  vjac->add_option("--bound", bound, "Degree bound for ideal comparison")->check(CLI::PositiveNumber);
  classify->add_option("--bound", bound, "Orbit length bound")->check(CLI::PositiveNumber);
  classify->add_option("--dim-cap", dim_cap, "Largest orbit module dimension")->check(CLI::PositiveNumber);
  certify->add_option("--bound", bound, "Bound for Koszulity, classification and phi")->check(CLI::PositiveNumber);
  certify->add_option("--window", window, "Grades checked by the Ext pattern")->check(CLI::PositiveNumber);
  typea->add_option("--d", d, "d >= 1")->required()->check(CLI::PositiveNumber);
  typea->add_option("--s", s, "s >= 2")->required()->check(CLI::Range(2, 1000));
  typea->add_flag("--expected-pi", expected, "Emit the expected preprojective presentation");
  resolve->add_option("--steps", steps, "Number of stages")->check(CLI::NonNegativeNumber);
  resolve->add_option("--vertex", vertex, "Only this simple");
  resolve->add_flag("--left", left, "Left modules (resolve over the opposite algebra)");
  resolve->add_flag("--pi", over_pi, "Resolve over the preprojective algebra");
  resolve->add_option("--bound", bound, "Truncation degree for infinite algebras")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kValidationError;
  }

  try {
    Presentation p;
    if (!typea->parsed()) {
      p = load_presentation(file);
      if (!field.empty()) p = with_field(p, parse_field(field));
    }
    Report r;
    if (compute->parsed())
      r = compute_report(p);
    else if (dual->parsed())
      r = dual_report(p);
    else if (jacobi->parsed())
      r = jacobi_report(p, order);
    else if (vjac->parsed())
      r = verify_jacobi_report(p, bound);
    else if (classify->parsed())
      r = classify_report(p, bound, dim_cap);
    else if (certify->parsed())
      r = certify_report(p, bound, window);
    else if (typea->parsed())
      r = typea_report(d, s, expected);
    else
      r = resolve_report(p, steps, vertex.empty() ? std::nullopt : std::optional<std::string>(vertex), left, over_pi,
                         bound);
    std::cout << (format == "kv" ? r.kv() : r.text());
    return r.status;
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return kValidationError;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
