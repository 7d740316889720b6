#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "ordlat/lattice.hpp"

namespace ordlat {

struct RunConfig {
  std::string command;  // reduce, minima, dual, cvp, check-bounds, unit-red, gen
  std::string algebra = "Q(i)";
  std::string alpha;           // element literal; empty means 1
  std::string form = "trace";  // trace or plain
  std::string kind = "minkowski";
  int beta = 2;
  std::size_t d = 2;
  std::size_t D = 0;  // 0 means D = d
  long coeff_bound = 3;
  std::uint64_t seed = 1;
  std::size_t count = 1;  // generated instances for check-bounds
  std::optional<std::size_t> limit;
  std::string in;
  std::string out;
  std::string target;  // cvp target row; random from the seed when empty
  long v_bound = 10;
  long x_norm_bound = 10;
  long unit_bound = 6;
};

enum ExitCode { kExitOk = 0, kExitViolation = 1, kExitParse = 2, kExitScale = 3, kExitInternal = 4 };

// Writes the machine-readable report to `report` and a human summary to `summary`.
int run(const RunConfig& cfg, std::ostream& report, std::ostream& summary);

// Uniform integer in [lo, hi] from a 64-bit Mersenne twister; stable across platforms.
long uniform(std::mt19937_64& rng, long lo, long hi);
// Basis rows with Z-coordinates uniform in [-bound, bound], redrawn until K-independent.
ModuleLattice random_lattice(const AlgebraSpec& alg, std::size_t d, std::size_t D, long bound, std::mt19937_64& rng);
// Point of the K-span with coefficient coordinates in (1/den) Z, |numerator| <= 2 den.
Vector random_target(const ModuleLattice& lat, std::mt19937_64& rng, long den = 4);

// The lattice of the tightness construction: b_i = l e_i for i < d and b_d = (1, ..., 1), d = nrd(l) + 1.
ModuleLattice tightness_lattice(const AlgebraSpec& alg);

}  // namespace ordlat
