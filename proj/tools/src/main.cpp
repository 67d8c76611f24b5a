// bsroots: exact nu-invariants and Bernstein-Sato roots of monomial ideals.
//
// Subcommands: nu, nu-set, bs-roots, char0-roots, compare, cartier, bracket.
// JSON (default) goes to stdout as a single object; diagnostics to stderr.
// Exit codes: 0 ok, 2 bad input or violated precondition, 3 budget exceeded.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  bsr::cli::CommandConfig cfg;
  bool no_cache = false;

  CLI::App app{"Exact nu-invariants and Bernstein-Sato roots of monomial ideals"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ideal", cfg.ideal_text,
                    "the ideal: \"(x1^2, x2^3)\", JSON {\"n\":..,\"gens\":[..]}, or - for stdin")
        ->required();
    sub->add_option("--vars", cfg.vars, "ambient variable count (default: highest index used)");
    sub->add_option("--format", cfg.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads for sweeps (default 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cache", cfg.cache_path,
                    "append-only result cache file (default: $BSROOTS_CACHE)");
    sub->add_flag("--no-cache", no_cache, "ignore $BSROOTS_CACHE");
    return sub;
  };

  CLI::App* nu = add_common(app.add_subcommand("nu", "nu_a^J(q) for one witness ideal J"));
  nu->add_option("--J", cfg.j_text, "witness ideal J (same grammar as --ideal)")->required();
  nu->add_option("--q", cfg.q_text, "evaluation point q >= 1 (any size)")->required();

  CLI::App* nu_set =
      add_common(app.add_subcommand("nu-set", "level-e set of nu-invariants below r*p^e"));
  nu_set->add_option("--p", cfg.p, "prime")->required();
  nu_set->add_option("--e", cfg.e, "level")->required()->check(CLI::PositiveNumber);
  nu_set->add_option("--method", cfg.method, "grid | chain | both (default grid)")
      ->check(CLI::IsMember({"grid", "chain", "both"}));
  nu_set->add_option("--grid-scale", cfg.grid_scale, "witness grid enlargement factor")
      ->check(CLI::PositiveNumber);

  CLI::App* bs = add_common(
      app.add_subcommand("bs-roots", "Bernstein-Sato roots in characteristic p"));
  bs->add_option("--p", cfg.p, "prime")->required();
  bs->add_option("--levels", cfg.levels, "digit depth E (default: auto)");
  bs->add_option("--samples", cfg.samples, "consecutive levels a certificate must match")
      ->check(CLI::PositiveNumber);
  bs->add_option("--grid-scale", cfg.grid_scale, "witness grid enlargement factor")
      ->check(CLI::PositiveNumber);
  bs->add_flag("--no-certify", cfg.no_certify, "skip certification (roots stay periodic-uncertified)");

  CLI::App* c0 = add_common(app.add_subcommand(
      "char0-roots", "roots of the characteristic-zero Bernstein-Sato polynomial"));
  c0->add_option("--m-max", cfg.m_max, "largest progression modulus tried (default 60)")
      ->check(CLI::PositiveNumber);
  c0->add_option("--grid-scale", cfg.grid_scale, "witness grid enlargement factor")
      ->check(CLI::PositiveNumber);
  c0->add_flag("--check-grid", cfg.check_grid,
               "also sweep an enlarged grid and flag if the root set changes");

  CLI::App* cmp = add_common(
      app.add_subcommand("compare", "char-p roots vs char-0 roots restricted to Z_(p)"));
  cmp->add_option("--primes", cfg.primes_csv, "comma-separated primes, e.g. 2,3,5,7")->required();
  cmp->add_option("--levels", cfg.levels, "digit depth E for the char-p side (default: auto)");
  cmp->add_option("--samples", cfg.samples, "certificate sample count")
      ->check(CLI::PositiveNumber);
  cmp->add_option("--m-max", cfg.m_max, "largest progression modulus tried (default 60)")
      ->check(CLI::PositiveNumber);
  cmp->add_option("--grid-scale", cfg.grid_scale, "witness grid enlargement factor")
      ->check(CLI::PositiveNumber);

  CLI::App* cart = add_common(app.add_subcommand("cartier", "Cartier image C^e of the ideal"));
  cart->add_option("--p", cfg.p, "prime")->required();
  cart->add_option("--e", cfg.e, "level")->required()->check(CLI::PositiveNumber);

  CLI::App* br = add_common(app.add_subcommand("bracket", "bracket power I^[q]"));
  br->add_option("--q", cfg.q_text, "scaling factor q >= 1 (any size)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sub : {nu, nu_set, bs, c0, cmp, cart, br})
    if (sub->parsed()) cfg.command = sub->get_name();

  if (cfg.ideal_text == "-") {
    cfg.ideal_text.assign(std::istreambuf_iterator<char>(std::cin),
                          std::istreambuf_iterator<char>());
  }
  if (cfg.cache_path.empty() && !no_cache) {
    if (const char* env = std::getenv("BSROOTS_CACHE")) cfg.cache_path = env;
  }

  return bsr::cli::run(cfg, std::cout, std::cerr);
}
