#pragma once

#include <string>
#include <vector>

#include "ordlat/enumeration.hpp"

namespace ordlat {

enum class ReductionKind { SizeOnly, Minkowski, HKZ, BKZ };

std::string to_string(ReductionKind kind);

struct ReductionReport {
  ReductionKind kind = ReductionKind::SizeOnly;
  int beta = 0;
  ModuleLattice input;
  ModuleLattice basis;
  std::vector<ElementaryOp> log;
  std::vector<Rational> ratios;  // q(b_k) / lambda_k^2
  bool verdict = false;
};

ModuleLattice size_reduce(const ModuleLattice& lat, const AlphaForm& form, std::vector<ElementaryOp>* log = nullptr);
bool is_size_reduced(const ModuleLattice& lat, const AlphaForm& form);

// Basis b_i(k), i >= k, of the projection orthogonal to b_0, ..., b_{k-1}; optionally only up to index `last`.
ModuleLattice projected_lattice(const ModuleLattice& lat, const AlphaForm& form, std::size_t k, std::size_t last);

// Left gcd of x_k, ..., x_{d-1} is a unit.
bool tail_is_primitive(const Vector& coeffs, std::size_t k);

ReductionReport minkowski_reduce(const ModuleLattice& lat, const AlphaForm& form);
bool is_minkowski_reduced(const ModuleLattice& lat, const AlphaForm& form);

ReductionReport hkz_reduce(const ModuleLattice& lat, const AlphaForm& form);
bool is_hkz_reduced(const ModuleLattice& lat, const AlphaForm& form);

ReductionReport bkz_reduce(const ModuleLattice& lat, const AlphaForm& form, int beta);
bool is_bkz_reduced(const ModuleLattice& lat, const AlphaForm& form, int beta);

struct PlaneResult {
  LatticeVector vector;  // norm holds the squared distance to the target
  std::vector<Rational> defects;  // scalar q of each rounded GSO coordinate
};
PlaneResult nearest_plane(const ModuleLattice& lat, const AlphaForm& form, const Vector& target);

// q(b_k) / lambda_k^2 for every k.
std::vector<Rational> minima_ratios(const ModuleLattice& lat, const AlphaForm& form);

}  // namespace ordlat
