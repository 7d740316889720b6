#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordlat/enumeration.hpp"
#include "ordlat/real.hpp"
#include "ordlat/reduction.hpp"

namespace ordlat {

// Real Hermite constant gamma_k for 1 <= k <= 8, exact as a rational root.
Real hermite_gamma(int k);

// Upper bound gamma_{d n m^2} |disc|^{1/(n m^2)} on the algebraic Hermite constant; empty when d n m^2 > 8.
std::optional<Real> algebraic_hermite_upper(const AlgebraSpec& alg, int d);

// rho = (n m^3 / 4) |disc|^{2/(n m^2)} nrd(alpha)^{1/(n m)}; the plain form uses alpha = 1.
Real rho(const AlphaForm& form);

// Which family of bounds applies. The plain form over imaginary quadratic fields and the Hurwitz
// order uses M(K) and the sharper Minkowski recurrence.
struct BoundContext {
  const AlgebraSpec* alg = nullptr;
  bool special = false;
  Real rho;
  Real coeff;  // rho, or M(K) in the special case
  Rational euclid_min;
  Rational nrd_l;
  int g = 1;
  std::string describe() const;
};
BoundContext make_context(const AlphaForm& form);

struct ConstantsTable {
  std::string algebra;
  int n = 1, m = 1;
  long disc = 1;
  Real rho;
  Rational euclid_min;
  long nrd_l = 2;
  int g = 2;
  std::vector<Real> gammas;  // gamma_1 .. gamma_8
};
ConstantsTable constants(const AlphaForm& form);

// delta_k^2, 1-based k.
Real minkowski_delta_sq(int k, const BoundContext& ctx);
// (1 + rho)^{k-1}; general context only.
Real minkowski_delta_sq_closed(int k, const BoundContext& ctx);
// 1 + (k - 1) * coeff
Real hkz_bound(int k, const BoundContext& ctx);

struct BkzBounds {
  std::optional<Real> first;           // on q(b_1) / lambda_1^2
  std::optional<Real> second;          // on q(b_i) / lambda_i^2, summed form
  std::optional<Real> second_printed;  // the closed form with exponent (i-1)/(beta-1)
};
// i is 1-based; bounds are empty when beta n m^2 > 8.
BkzBounds bkz_bounds(int i, int beta, int d, const BoundContext& ctx);

enum class CvpBasis { Minkowski, HKZ, BKZ };
// Bound on distance^2 / lambda_d^2 for nearest_plane output on a reduced basis.
std::optional<Real> cvp_bound(CvpBasis basis, int d, int beta, const BoundContext& ctx);

// Bound on lambda_k(L)^2 lambda_{d-k+1}(L*)^2 from the summed recursion
// ((k-1)(2d-k)/2 c^2 + (d-1) c + 1) gamma^2 |disc|^{-2/(n m^2)}; empty when d n m^2 > 8.
std::optional<Real> transference_bound(int k, int d, const BoundContext& ctx);
// The closed form ((2d-k+1)k/2 c^2 - c + 1) gamma^2 |disc|^{-2/(n m^2)}. It exceeds the summed
// form by d c (c - 1) and so is only an upper bound when c >= 1.
std::optional<Real> transference_bound_printed(int k, int d, const BoundContext& ctx);
// Bound on mu(L)^2 lambda_1(L*)^2 with mu the covering radius.
std::optional<Real> covering_bound(int d, const BoundContext& ctx);
// gamma^d for the product prod lambda_i^2 <= gamma^d det^{1/(n m^2)} in trace units.
std::optional<Real> product_bound_factor(int d, const AlgebraSpec& alg);

// min q / det_alpha^{1/(d n m^2)}, with q in trace units.
Real hermite_invariant(const ModuleLattice& lat, const AlphaForm& form);

enum class Verdict { Pass, Fail, Skipped, Undecided };
std::string to_string(Verdict v);

struct BoundCheck {
  std::string quantity;
  Real value;
  std::optional<Real> bound;
  Verdict verdict = Verdict::Skipped;
  std::string note;
  bool informational = false;  // reported, but not part of all_pass
};
// value <= bound, exactly or by interval enclosure.
BoundCheck check_le(std::string quantity, const Real& value, const std::optional<Real>& bound, std::string note = "");
BoundCheck check_eq(std::string quantity, const Real& value, const Real& expected);

struct BoundReport {
  std::vector<BoundCheck> checks;
  void add(BoundCheck c) { checks.push_back(std::move(c)); }
  void append(const BoundReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  // No non-informational check failed or was undecided.
  bool all_pass() const;
  std::size_t count(Verdict v) const;
};

// Catalog algebras known to be unit reducible.
bool is_unit_reducible_known(const AlgebraSpec& alg);

BoundReport minkowski_suite(const ModuleLattice& lat, const AlphaForm& form);
BoundReport hkz_suite(const ModuleLattice& lat, const AlphaForm& form);
BoundReport bkz_suite(const ModuleLattice& lat, const AlphaForm& form, int beta);
BoundReport dual_suite(const ModuleLattice& lat, const AlphaForm& form);
BoundReport product_suite(const ModuleLattice& lat, const AlphaForm& form);
// Nearest-plane distances on Minkowski and HKZ bases against the exact oracle, for the given targets.
BoundReport cvp_suite(const ModuleLattice& lat, const AlphaForm& form, const std::vector<Vector>& targets);

struct UnitSearchOptions {
  long v_bound = 10;
  long x_norm_bound = 10;
  long unit_bound = 6;
  // v ranges over y y^* (the Gram values of D = 1, alpha = 1) when true, else over all
  // totally positive v with bounded coordinates.
  bool gram_values = true;
};

struct Counterexample {
  Element v;
  Element x;
  Rational trace_v;
  Rational trace_x;          // Trace(x v x^*)
  Rational best_unit_trace;  // min over units of Trace(u v u^*)
  Element unit;              // generator of the free part
  Rational trace_up;         // Trace(u v u^*)
  Rational trace_down;       // Trace(u^{-1} v u^{-*})
  Rational nrd_x;
};

struct UnitSearchResult {
  std::optional<Counterexample> counterexample;
  std::size_t v_classes = 0;
  std::size_t x_classes = 0;
  std::size_t uncertified = 0;  // v skipped because the unit minimum was not interior to the range
};

// Refuter for left unit reducibility over a real quadratic or cyclotomic catalog field.
UnitSearchResult unit_reducibility_search(const AlgebraSpec& alg, const UnitSearchOptions& opts = {});

// For Q(zeta8): 2 Trace(x v x^*) == Trace(v) + Trace(u v u^*) with x = 1 +- z, u = 1 +- z + z^2.
bool zeta8_trace_identity(const Element& v);

}  // namespace ordlat
