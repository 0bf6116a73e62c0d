#include <iostream>

#include "CLI11.hpp"
#include "lcmquad/cli.hpp"
#include "lcmquad/error.hpp"

using namespace lcmquad;

int main(int argc, char** argv) {
  CLI::App app{"lcm of consecutive quadratic polynomial values"};
  app.require_subcommand(1);

  std::string poly, ns, progression, format, out;
  unsigned long long x = 0;
  unsigned workers = 1;
  bool exact = false, oracle_check = false;

  const std::pair<const char*, const char*> commands[] = {
      {"constant", "B_f with its series breakdown"},
      {"lcm", "log L_n(f), exponent map or exact value"},
      {"table", "n, log L_n(f), E_f(n) for each requested n"},
      {"roots", "root samples (p, nu, nu/p)"},
      {"discrepancy", "star discrepancy of root samples and T-sums"},
      {"reducible", "log L_n(f) against the reducible-case constant"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--poly", poly, "coefficients a,b,c");
    sub->add_option("--n", ns, "N[,N...]");
    sub->add_option("--x", x, "prime bound for root samples");
    sub->add_option("--progression", progression, "restrict primes to p = r mod m, given as r,m");
    sub->add_option("--format", format, "csv, json or text");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_option("--out", out, "output path");
    sub->add_flag("--exact", exact, "exact decimal value (lcm)");
    sub->add_flag("--oracle-check", oracle_check, "verify against the big-integer lcm (lcm)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cli::RunConfig config;
  try {
    auto* sub = app.get_subcommands().front();
    config.command = *cli::parse_command(sub->get_name());
    if (!poly.empty()) {
      try {
        config.poly = parse_poly(poly);
      } catch (const Error& e) {
        throw cli::UsageError("--poly", std::string("--poly: ") + e.what());
      }
    }
    if (!ns.empty()) config.ns = cli::parse_n_list(ns);
    if (sub->count("--x") > 0) config.x = x;
    if (!progression.empty()) config.progression = cli::parse_progression(progression);
    if (!format.empty()) {
      config.format = cli::parse_format(format);
      if (!config.format) throw cli::UsageError("--format", "--format: expected csv, json or text");
    }
    config.workers = workers;
    config.out = out;
    config.exact = exact;
    config.oracle_check = oracle_check;
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }
  return cli::run(config, std::cout, std::cerr);
}
