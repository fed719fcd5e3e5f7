// ainf-cli: certify the Hopf A-infinity structure, print polytope diagonals,
// list factor parameters, and sweep the binomial identity.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error,
// 3 internal error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ainf/ainf.h"

namespace {

int exit_code(ainf_status status) {
  switch (status) {
    case AINF_OK: return 0;
    case AINF_FAIL: return 1;
    case AINF_EINVAL:
    case AINF_ERANGE: return 2;
    default: return 3;
  }
}

int finish(ainf_status status, ainf_report* report, const std::string& format) {
  if (report) {
    std::fputs(format == "text" ? ainf_report_text(report) : ainf_report_json(report), stdout);
    ainf_report_destroy(report);
  }
  if (status != AINF_OK && status != AINF_FAIL) std::cerr << "error: " << ainf_last_error() << "\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of a Hopf A-infinity coalgebra over Z_p and of cellular "
               "diagonals on permutahedra and associahedra"};
  app.set_version_flag("--version", std::string(ainf_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::uint32_t threads = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.set_config("--config", "", "key=value file mirroring the command-line flags");

  std::uint32_t p = 3, m = 1, max_j = 0;
  auto* certify = app.add_subcommand("certify", "Check the Hopf axioms, A-infinity relations, cobar "
                                                "oracle and Hopf compatibility");
  certify->add_option("--p", p, "Odd prime")->capture_default_str();
  certify->add_option("--m", m, "Degree parameter, |v| = 2m+1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  certify->add_option("--max-j", max_j, "Bound on gamma indices (0 = default for p)")
      ->capture_default_str();

  std::string polytope;
  int n = 0;
  auto* diagonal = app.add_subcommand("diagonal", "Diagonal of the top cell of P_n or K_{n+1}");
  diagonal->add_option("polytope", polytope, "perm or assoc")
      ->required()
      ->check(CLI::IsMember({"perm", "assoc"}));
  diagonal->add_option("n", n, "Size, 1..7")->required()->check(CLI::Range(1, 7));

  std::uint32_t count = 1;
  bool run_certify = false;
  auto* factors = app.add_subcommand("factors", "Factor parameters m = p^i of H_*(K(Z,3); Z_p)");
  factors->add_option("--p", p, "Odd prime")->capture_default_str();
  factors->add_option("--count", count, "Number of factors")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  factors->add_flag("--certify", run_certify, "Certify each factor");
  factors->add_option("--max-j", max_j, "Bound on gamma indices (0 = default for p)")
      ->capture_default_str();

  std::uint64_t trials = 1000, seed = 0;
  auto* lemma = app.add_subcommand("lemma", "Random sweep of the binomial identity mod p");
  lemma->add_option("--p", p, "Odd prime")->capture_default_str();
  lemma->add_option("--trials", trials, "Number of random tuples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lemma->add_option("--seed", seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ainf_report* report = nullptr;
  ainf_status status = AINF_OK;
  if (*certify) {
    ainf_structure* s = nullptr;
    status = ainf_structure_create(p, m, &s);
    if (status == AINF_OK) {
      status = ainf_certify(s, max_j, threads, &report);
      ainf_structure_destroy(s);
    }
  } else if (*diagonal) {
    status = ainf_diagonal(polytope.c_str(), n, &report);
  } else if (*factors) {
    status = ainf_factors(p, count, run_certify ? 1 : 0, max_j, threads, &report);
  } else if (*lemma) {
    status = ainf_lemma(p, trials, seed, &report);
  }
  return finish(status, report, format);
}
