#include <cstdlib>
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "ordlat/cli.hpp"

namespace {

void common(CLI::App* sub, ordlat::RunConfig& cfg) {
  sub->add_option("--algebra,--field", cfg.algebra, "Q, Q(i), Q(sqrt-2), ..., Q(sqrt6), Q(zeta8), Q(zeta12), Hurwitz");
  sub->add_option("--alpha", cfg.alpha, "totally positive alpha as an element literal, e.g. \"[2, 0]\"");
  sub->add_option("--form", cfg.form, "trace or plain")->check(CLI::IsMember({"trace", "plain"}));
  sub->add_option("--kind", cfg.kind, "minkowski, hkz, bkz or size");
  sub->add_option("--beta", cfg.beta, "BKZ block size");
  sub->add_option("--d", cfg.d, "rank of generated lattices");
  sub->add_option("--D", cfg.D, "ambient dimension of generated lattices (default d)");
  sub->add_option("--coeff-bound", cfg.coeff_bound, "coordinate bound B for generated bases");
  sub->add_option("--seed", cfg.seed, "64-bit seed");
  sub->add_option("--count", cfg.count, "generated instances for check-bounds");
  sub->add_option("--limit", cfg.limit, "desk-scale limit on d*r");
  sub->add_option("--in", cfg.in, "lattice file");
  sub->add_option("--out", cfg.out, "report path (default stdout)");
  sub->add_option("--target", cfg.target, "cvp target row of element literals");
  sub->add_option("--v-bound", cfg.v_bound, "unit-red: coordinate bound for v");
  sub->add_option("--x-norm-bound", cfg.x_norm_bound, "unit-red: bound on |nrd(x)|");
  sub->add_option("--unit-bound", cfg.unit_bound, "unit-red: exponent range for the unit minimum");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction, enumeration and bound checks for lattices over orders in division algebras"};
  app.require_subcommand(1);
  ordlat::RunConfig cfg;
  const std::pair<const char*, const char*> commands[] = {
      {"reduce", "reduce a lattice file and replay the certificate"},
      {"minima", "successive minima and shortest vector"},
      {"dual", "dual lattice under the chosen form"},
      {"cvp", "closest vector and nearest-plane comparison"},
      {"check-bounds", "run the bound suites on generated instances"},
      {"unit-red", "bounded search for unit-reducibility counterexamples"},
      {"gen", "print a random lattice file"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, cfg);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ordlat::kExitParse;
  }
  return ordlat::run(cfg, std::cout, std::cerr);
}
