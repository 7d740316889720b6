#pragma once

#include <optional>
#include <vector>

#include "ordlat/lattice.hpp"

namespace ordlat {

// Desk-scale guardrail on d*r. Resolution order: explicit override, ORDLAT_LIMIT, 16.
std::size_t scale_limit();
void set_scale_limit(std::optional<std::size_t> limit);
void check_scale(const ModuleLattice& lat);

struct LatticeVector {
  Vector coeffs;  // O-coefficients w.r.t. the lattice basis
  Vector vec;
  Rational norm;
};

class LatticeEnumerator {
 public:
  LatticeEnumerator(const ModuleLattice& lat, const AlphaForm& form);

  const ModuleLattice& lattice() const { return lat_; }
  // Nonzero vectors with q <= bound, by (q, Z-coordinates lexicographic).
  std::vector<LatticeVector> below(const Rational& bound) const;
  LatticeVector shortest() const;
  // Exact CVP; norm is the squared distance.
  LatticeVector closest(const Vector& target) const;

 private:
  LatticeVector make(const zlat::Point& p) const;

  ModuleLattice lat_;
  AlphaForm form_;
  ZLatticeView view_;
  zlat::Enumerator enumerator_;
};

LatticeVector shortest_vector(const ModuleLattice& lat, const AlphaForm& form);
std::vector<LatticeVector> enumerate_below(const ModuleLattice& lat, const AlphaForm& form, const Rational& bound);
LatticeVector closest_vector(const ModuleLattice& lat, const AlphaForm& form, const Vector& target);

struct MinimaResult {
  std::vector<Rational> lambdas_sq;
  std::vector<LatticeVector> witnesses;
};
MinimaResult successive_minima(const ModuleLattice& lat, const AlphaForm& form);

}  // namespace ordlat
