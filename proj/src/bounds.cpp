#include "ordlat/bounds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ordlat/errors.hpp"

namespace ordlat {

namespace {

long nm2(const AlgebraSpec& alg) { return static_cast<long>(alg.n()) * alg.m() * alg.m(); }

Real disc_root(const AlgebraSpec& alg, long num) {
  return Real::root(pow_of(Rational(alg.disc_abs()), num), static_cast<unsigned long>(nm2(alg)));
}

Rational trace_units(const Rational& q, const AlphaForm& form) { return q / form.scale(); }

std::string idx(const char* name, int k) { return std::string(name) + "[" + std::to_string(k) + "]"; }

}  // namespace

Real hermite_gamma(int k) {
  static const Rational powers[] = {1, Rational(4, 3), 2, 4, 8, Rational(64, 3), 64, 256};
  if (k < 1 || k > 8) throw IndexError("Hermite constant known exactly only for 1 <= k <= 8, got " + std::to_string(k));
  return Real::root(powers[k - 1], static_cast<unsigned long>(k));
}

std::optional<Real> algebraic_hermite_upper(const AlgebraSpec& alg, int d) {
  if (d < 1) throw IndexError("dimension must be positive");
  long dim = d * nm2(alg);
  if (dim > 8) return std::nullopt;
  return hermite_gamma(static_cast<int>(dim)) * disc_root(alg, 1);
}

Real rho(const AlphaForm& form) {
  const AlgebraSpec& alg = form.algebra();
  const long n = alg.n(), m = alg.m();
  Rational front(n * m * m * m, 4);
  front.canonicalize();
  Real r = Real(front) * disc_root(alg, 2);
  Rational a = form.is_plain() ? Rational(1) : reduced_norm(form.alpha());
  return r * Real::root(a, static_cast<unsigned long>(n * m));
}

std::string BoundContext::describe() const {
  if (special) return "M(K)=" + to_string(euclid_min) + " g=" + std::to_string(g) + " nrd(l)=" + to_string(nrd_l);
  return "rho=" + rho.to_string();
}

BoundContext make_context(const AlphaForm& form) {
  const AlgebraSpec& alg = form.algebra();
  BoundContext ctx;
  ctx.alg = &alg;
  ctx.special = form.is_plain();
  ctx.rho = rho(form);
  ctx.euclid_min = alg.euclidean_minimum();
  ctx.nrd_l = Rational(alg.smallest_nonunit_norm());
  Rational inv = 1 / ctx.euclid_min;
  ctx.g = std::max(2, static_cast<int>(floor_of(inv).get_si()));
  ctx.coeff = ctx.special ? Real(ctx.euclid_min) : ctx.rho;
  return ctx;
}

ConstantsTable constants(const AlphaForm& form) {
  const AlgebraSpec& alg = form.algebra();
  BoundContext ctx = make_context(form);
  ConstantsTable t;
  t.algebra = alg.name();
  t.n = alg.n();
  t.m = alg.m();
  t.disc = alg.disc_abs();
  t.rho = ctx.rho;
  t.euclid_min = ctx.euclid_min;
  t.nrd_l = alg.smallest_nonunit_norm();
  t.g = ctx.g;
  for (int k = 1; k <= 8; ++k) t.gammas.push_back(hermite_gamma(k));
  return t;
}

Real minkowski_delta_sq(int k, const BoundContext& ctx) {
  if (k < 1) throw IndexError("delta index must be >= 1");
  if (ctx.special) {
    std::vector<Rational> d;
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) {
      Rational v = 1;
      if (i > ctx.g) v = std::max(Rational(1), Rational(ctx.euclid_min * sum + 1 / ctx.nrd_l));
      d.push_back(v);
      sum += v;
    }
    return Real(d.back());
  }
  if (!ctx.rho.is_rational()) return minkowski_delta_sq_closed(k, ctx);
  Rational r = ctx.rho.rational();
  Rational sum = 0, v = 1;
  for (int i = 1; i <= k; ++i) {
    v = 1 + r * sum;
    sum += v;
  }
  return Real(v);
}

Real minkowski_delta_sq_closed(int k, const BoundContext& ctx) {
  if (k < 1) throw IndexError("delta index must be >= 1");
  return (Real(1) + ctx.rho).pow(k - 1);
}

Real hkz_bound(int k, const BoundContext& ctx) {
  if (k < 1) throw IndexError("HKZ index must be >= 1");
  return Real(1) + Real(k - 1) * ctx.coeff;
}

BkzBounds bkz_bounds(int i, int beta, int d, const BoundContext& ctx) {
  if (beta < 2 || beta > d) throw IndexError("block size must satisfy 2 <= beta <= d");
  if (i < 1 || i > d) throw IndexError("BKZ index out of range");
  BkzBounds out;
  auto gamma = algebraic_hermite_upper(*ctx.alg, beta);
  if (!gamma) return out;
  const AlgebraSpec& alg = *ctx.alg;
  Real x = *gamma / Real(Rational(alg.n() * alg.m()));
  const unsigned long b1 = static_cast<unsigned long>(beta - 1);
  Real y = x.pow(2, b1);
  out.first = x.pow(2 * (d - 1), b1);
  Real sum = 0;
  for (int j = 1; j < i; ++j) sum = sum + y.pow(i - j);
  Real lead = y.pow(d - i);
  out.second = lead * (Real(1) + ctx.coeff * sum);
  if (i == 1) {
    out.second_printed = lead;
  } else if (compare(y, Real(1)) != Cmp::Equal) {
    Real ratio = (Real(1) - y.pow(1 - i)) / (Real(1) - y.pow(-1));
    out.second_printed = lead * (Real(1) + ctx.coeff * x.pow(i - 1, b1) * ratio);
  }
  return out;
}

std::optional<Real> cvp_bound(CvpBasis basis, int d, int beta, const BoundContext& ctx) {
  if (d < 1) throw IndexError("dimension must be positive");
  switch (basis) {
    case CvpBasis::Minkowski:
      return (Real(1) + ctx.coeff) * minkowski_delta_sq(d, ctx);
    case CvpBasis::HKZ:
      return Real(d) * ctx.coeff;
    case CvpBasis::BKZ: {
      if (beta == d) return Real(d) * ctx.coeff;
      if (beta < 2 || beta > d) throw IndexError("block size must satisfy 2 <= beta <= d");
      auto gamma = algebraic_hermite_upper(*ctx.alg, beta);
      if (!gamma) return std::nullopt;
      Real x = *gamma / Real(Rational(ctx.alg->n() * ctx.alg->m()));
      Real y = x.pow(2, static_cast<unsigned long>(beta - 1));
      Real sum = 0;
      for (int i = 1; i <= d; ++i) sum = sum + y.pow(d - i);
      return ctx.coeff * sum;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<Real> gamma_nu(int d, const AlgebraSpec& alg) {
  std::optional<Real> best;
  for (int i = 1; i <= d; ++i) {
    auto g = algebraic_hermite_upper(alg, i);
    if (!g) return std::nullopt;
    best = best ? max(*best, *g) : *g;
  }
  return best;
}

}  // namespace

std::optional<Real> transference_bound(int k, int d, const BoundContext& ctx) {
  if (d < 1 || k < 1 || k > d) throw IndexError("transference index out of range");
  auto g = gamma_nu(d, *ctx.alg);
  if (!g) return std::nullopt;
  Rational lead(static_cast<long>((k - 1) * (2 * d - k)), 2);
  lead.canonicalize();
  const Real& c = ctx.coeff;
  Real front = Real(lead) * c * c + Real(d - 1) * c + Real(1);
  return front * (*g) * (*g) / disc_root(*ctx.alg, 2);
}

std::optional<Real> transference_bound_printed(int k, int d, const BoundContext& ctx) {
  if (d < 1 || k < 1 || k > d) throw IndexError("transference index out of range");
  auto g = gamma_nu(d, *ctx.alg);
  if (!g) return std::nullopt;
  Rational lead(static_cast<long>((2 * d - k + 1) * k), 2);
  lead.canonicalize();
  const Real& c = ctx.coeff;
  Real front = Real(lead) * c * c - c + Real(1);
  return front * (*g) * (*g) / disc_root(*ctx.alg, 2);
}

std::optional<Real> covering_bound(int d, const BoundContext& ctx) {
  if (d < 1) throw IndexError("dimension must be positive");
  Real sum = 0;
  for (int i = 1; i <= d; ++i) {
    auto g = gamma_nu(i, *ctx.alg);
    if (!g) return std::nullopt;
    sum = sum + (*g) * (*g);
  }
  return ctx.coeff * sum / disc_root(*ctx.alg, 2);
}

std::optional<Real> product_bound_factor(int d, const AlgebraSpec& alg) {
  auto g = algebraic_hermite_upper(alg, d);
  if (!g) return std::nullopt;
  return g->pow(d);
}

Real hermite_invariant(const ModuleLattice& lat, const AlphaForm& form) {
  check_scale(lat);
  const AlgebraSpec& alg = lat.algebra();
  Rational q = trace_units(shortest_vector(lat, form).norm, form);
  Rational det = det_alpha(lat, form);
  return Real(q) / Real::root(det, static_cast<unsigned long>(lat.rank() * nm2(alg)));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "skipped";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

BoundCheck check_le(std::string quantity, const Real& value, const std::optional<Real>& bound, std::string note) {
  BoundCheck c{std::move(quantity), value, bound, Verdict::Skipped, std::move(note)};
  if (!bound) {
    if (c.note.empty()) c.note = "no Hermite constant available";
    return c;
  }
  switch (compare(value, *bound)) {
    case Cmp::Less:
    case Cmp::Equal: c.verdict = Verdict::Pass; break;
    case Cmp::Greater: c.verdict = Verdict::Fail; break;
    case Cmp::Unknown: c.verdict = Verdict::Undecided; break;
  }
  return c;
}

BoundCheck check_eq(std::string quantity, const Real& value, const Real& expected) {
  BoundCheck c{std::move(quantity), value, expected, Verdict::Fail, "equality"};
  Cmp r = compare(value, expected);
  c.verdict = r == Cmp::Equal ? Verdict::Pass : (r == Cmp::Unknown ? Verdict::Undecided : Verdict::Fail);
  return c;
}

namespace {

BoundCheck check_true(std::string quantity, bool ok, std::string note = "") {
  return BoundCheck{std::move(quantity), Real(ok ? 1 : 0), Real(1), ok ? Verdict::Pass : Verdict::Fail, std::move(note)};
}

}  // namespace

bool BoundReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return !c.informational && (c.verdict == Verdict::Fail || c.verdict == Verdict::Undecided);
  });
}

std::size_t BoundReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const BoundCheck& c) { return c.verdict == v; }));
}

bool is_unit_reducible_known(const AlgebraSpec& alg) {
  switch (alg.kind()) {
    case AlgebraKind::Rational:
    case AlgebraKind::ImagQuadratic:
    case AlgebraKind::QuaternionHurwitz:
    case AlgebraKind::Cyclotomic8:
    case AlgebraKind::Cyclotomic12:
      return true;
    case AlgebraKind::RealQuadratic:
      return alg.d() == 2 || alg.d() == 3 || alg.d() == 5;
  }
  return false;
}

namespace {

const char* kNoUnitReducibility = "skipped: bound assumes left unit reducibility";

std::optional<Real> if_unit_reducible(const AlgebraSpec& alg, std::optional<Real> bound) {
  if (!is_unit_reducible_known(alg)) return std::nullopt;
  return bound;
}

std::string bound_note(const AlgebraSpec& alg, std::string note) {
  return is_unit_reducible_known(alg) ? note : kNoUnitReducibility;
}

BoundCheck no_basis(const std::string& tag, const NotUnitReducible& e) {
  return BoundCheck{tag + ".exists", Real(0), std::nullopt, Verdict::Skipped, e.what()};
}

void add_report_checks(BoundReport& rep, const ReductionReport& red, const std::string& tag) {
  rep.add(check_true(tag + ".replay", apply_log(red.input, red.log) == red.basis, "transform log reproduces the basis"));
  rep.add(check_true(tag + ".checker", red.verdict));
}

}  // namespace

BoundReport minkowski_suite(const ModuleLattice& lat, const AlphaForm& form) {
  check_scale(lat);
  BoundReport rep;
  BoundContext ctx = make_context(form);
  ReductionReport red = minkowski_reduce(lat, form);
  add_report_checks(rep, red, "minkowski");
  for (std::size_t k = 0; k < red.ratios.size(); ++k)
    rep.add(check_le(idx("minkowski.ratio", static_cast<int>(k + 1)), red.ratios[k],
                     if_unit_reducible(lat.algebra(), minkowski_delta_sq(static_cast<int>(k + 1), ctx)),
                     bound_note(lat.algebra(), "q(b_k)/lambda_k^2 <= delta_k^2")));
  if (is_unit_reducible_known(lat.algebra()) && !red.ratios.empty())
    rep.add(check_eq("minkowski.first_is_lambda1", red.ratios[0], Real(1)));
  return rep;
}

BoundReport hkz_suite(const ModuleLattice& lat, const AlphaForm& form) {
  check_scale(lat);
  BoundReport rep;
  BoundContext ctx = make_context(form);
  std::optional<ReductionReport> reduced;
  try {
    reduced = hkz_reduce(lat, form);
  } catch (const NotUnitReducible& e) {
    rep.add(no_basis("hkz", e));
    return rep;
  }
  const ReductionReport& red = *reduced;
  add_report_checks(rep, red, "hkz");
  for (std::size_t k = 0; k < red.ratios.size(); ++k)
    rep.add(check_le(idx("hkz.ratio", static_cast<int>(k + 1)), red.ratios[k],
                     if_unit_reducible(lat.algebra(), hkz_bound(static_cast<int>(k + 1), ctx)),
                     bound_note(lat.algebra(), "q(b_k)/lambda_k^2 <= 1+(k-1)c")));
  return rep;
}

BoundReport bkz_suite(const ModuleLattice& lat, const AlphaForm& form, int beta) {
  check_scale(lat);
  BoundReport rep;
  BoundContext ctx = make_context(form);
  const int d = static_cast<int>(lat.rank());
  std::optional<ReductionReport> reduced;
  try {
    reduced = bkz_reduce(lat, form, beta);
  } catch (const NotUnitReducible& e) {
    rep.add(no_basis("bkz", e));
    return rep;
  }
  const ReductionReport& red = *reduced;
  add_report_checks(rep, red, "bkz");
  const AlgebraSpec& alg = lat.algebra();
  for (int b = beta - 1; b >= 2; --b)
    rep.add(check_true("bkz.chain[" + std::to_string(b) + "]", is_bkz_reduced(red.basis, form, b)));
  if (beta == d) rep.add(check_true("bkz.is_hkz", is_hkz_reduced(red.basis, form)));
  for (int i = 1; i <= d; ++i) {
    BkzBounds b = bkz_bounds(i, beta, d, ctx);
    const Rational& r = red.ratios[static_cast<std::size_t>(i - 1)];
    if (i == 1) rep.add(check_le("bkz.first", r, if_unit_reducible(alg, b.first), bound_note(alg, "q(b_1)/lambda_1^2")));
    rep.add(check_le(idx("bkz.second", i), r, if_unit_reducible(alg, b.second),
                     bound_note(alg, "q(b_i)/lambda_i^2, summed form")));
    if (i > 1) {
      BoundCheck printed = check_le(idx("bkz.second_printed", i), r, if_unit_reducible(alg, b.second_printed),
                                    bound_note(alg, "q(b_i)/lambda_i^2, printed closed form, informational"));
      printed.informational = true;
      rep.add(printed);
    }
  }
  return rep;
}

BoundReport dual_suite(const ModuleLattice& lat, const AlphaForm& form) {
  check_scale(lat);
  BoundReport rep;
  const AlgebraSpec& alg = lat.algebra();
  BoundContext ctx = make_context(form);
  const int d = static_cast<int>(lat.rank());
  ModuleLattice dual = dual_alpha(lat, form).lattice;
  rep.add(check_true("dual.closed_form", same_lattice(dual, dual_alpha_closed_form(lat, form))));
  rep.add(check_true("dual.double_dual", same_lattice(dual_alpha(dual, form).lattice, lat)));
  bool integral = true;
  for (const auto& b : lat.basis())
    for (const auto& w : dual.basis()) integral = integral && is_integer(qpair(b, w, form));
  rep.add(check_true("dual.pairing_integral", integral));
  Rational expected = pow_of(Rational(alg.disc_abs()), -2 * d) * pow_of(1 / form.scale(), 2 * nm2(alg) * d);
  rep.add(check_eq("dual.det_product", Rational(det_alpha(lat, form) * det_alpha(dual, form)), expected));
  MinimaResult ml = successive_minima(lat, form);
  MinimaResult md = successive_minima(dual, form);
  for (int k = 1; k <= d; ++k) {
    Rational prod = ml.lambdas_sq[static_cast<std::size_t>(k - 1)] * md.lambdas_sq[static_cast<std::size_t>(d - k)];
    rep.add(check_le(idx("transference.lambda", k), prod, if_unit_reducible(alg, transference_bound(k, d, ctx)),
                     bound_note(alg, "lambda_k(L)^2 lambda_{d-k+1}(L*)^2, summed form")));
    BoundCheck printed = check_le(idx("transference.printed", k), prod, if_unit_reducible(alg, transference_bound_printed(k, d, ctx)),
                                  bound_note(alg, "printed closed form, informational"));
    printed.informational = true;
    rep.add(printed);
  }
  // Covering radius estimated from below by sampled targets.
  std::mt19937_64 rng(1);
  Rational mu_sq = 0;
  LatticeEnumerator en(lat, form);
  for (int s = 0; s < 16; ++s) {
    Vector coeffs;
    for (int i = 0; i < d; ++i) {
      Element e = alg.zero();
      for (std::size_t t = 0; t < alg.rank(); ++t) e[t] = Rational(static_cast<long>(rng() % 8), 8);
      coeffs.push_back(e);
    }
    mu_sq = std::max(mu_sq, en.closest(lat.combine(coeffs)).norm);
  }
  rep.add(check_le("transference.covering_sampled", Rational(mu_sq * md.lambdas_sq[0]),
                   if_unit_reducible(alg, covering_bound(d, ctx)),
                   bound_note(alg, "sampled mu(L)^2 lambda_1(L*)^2, mu estimated from below")));
  return rep;
}

BoundReport product_suite(const ModuleLattice& lat, const AlphaForm& form) {
  check_scale(lat);
  BoundReport rep;
  const AlgebraSpec& alg = lat.algebra();
  const int d = static_cast<int>(lat.rank());
  MinimaResult ml = successive_minima(lat, form);
  Rational prod = 1;
  for (const auto& l : ml.lambdas_sq) prod *= trace_units(l, form);
  Rational det = det_alpha(lat, form);
  auto factor = product_bound_factor(d, alg);
  std::optional<Real> bound;
  if (factor) bound = *factor * Real::root(det, static_cast<unsigned long>(nm2(alg)));
  rep.add(check_le("product.minima", prod, bound, "prod lambda_i^2 <= gamma^d det^{1/nm^2}"));
  rep.add(check_le("hermite.invariant", hermite_invariant(lat, form), algebraic_hermite_upper(alg, d),
                   "gamma(L) <= gamma_{dnm^2} |disc|^{1/nm^2}"));
  return rep;
}

BoundReport cvp_suite(const ModuleLattice& lat, const AlphaForm& form, const std::vector<Vector>& targets) {
  check_scale(lat);
  BoundReport rep;
  BoundContext ctx = make_context(form);
  const int d = static_cast<int>(lat.rank());
  MinimaResult ml = successive_minima(lat, form);
  const Rational& lam = ml.lambdas_sq.back();
  struct Case {
    const char* tag;
    ModuleLattice basis;
    CvpBasis kind;
  };
  std::vector<Case> cases = {{"cvp.minkowski", minkowski_reduce(lat, form).basis, CvpBasis::Minkowski}};
  try {
    cases.push_back({"cvp.hkz", hkz_reduce(lat, form).basis, CvpBasis::HKZ});
  } catch (const NotUnitReducible& e) {
    rep.add(no_basis("cvp.hkz", e));
  }
  for (const auto& c : cases) {
    LatticeEnumerator en(c.basis, form);
    Rational worst = 0, worst_defect = 0;
    bool oracle_ok = true;
    for (const auto& t : targets) {
      PlaneResult pr = nearest_plane(c.basis, form, t);
      LatticeVector exact = en.closest(t);
      oracle_ok = oracle_ok && exact.norm <= pr.vector.norm && c.basis.contains(pr.vector.vec);
      worst = std::max(worst, Rational(pr.vector.norm / lam));
      for (const auto& df : pr.defects) worst_defect = std::max(worst_defect, df);
    }
    std::string tag = c.tag;
    rep.add(check_true(tag + ".oracle", oracle_ok, "exact closest vector is no farther than nearest plane"));
    rep.add(check_le(tag + ".defect", worst_defect, ctx.coeff, "max rounding defect"));
    rep.add(check_le(tag + ".distance", worst, if_unit_reducible(lat.algebra(), cvp_bound(c.kind, d, d, ctx)),
                     bound_note(lat.algebra(), "max distance^2/lambda_d^2")));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Unit reducibility

namespace {

struct UnitMin {
  Rational value;
  int n = 0;
  Element rep;
  bool certified = false;
};

bool lex_greater(const Element& a, const Element& b) { return a.coords() > b.coords(); }

class UnitScan {
 public:
  UnitScan(const AlgebraSpec& alg, long bound) : bound_(bound) {
    const auto& eps = alg.fundamental_unit();
    if (!eps) throw UnsupportedForm("no fundamental unit for " + alg.name());
    eps_ = *eps;
    Element e = eps_ * conj(eps_);
    Element einv = inverse(e);
    powers_.assign(static_cast<std::size_t>(2 * bound + 3), alg.one());
    for (long n = 1; n <= bound + 1; ++n) {
      at(n) = at(n - 1) * e;
      at(-n) = at(-n + 1) * einv;
    }
  }
  const Element& eps() const { return eps_; }
  // Minimum of Trace(E^n w) over |n| <= bound + 1; certified when attained with |n| <= bound.
  UnitMin minimise(const Element& w) const {
    UnitMin best{0, 0, w, false};
    bool have = false;
    for (long n = -bound_ - 1; n <= bound_ + 1; ++n) {
      Element cand = power(n) * w;
      Rational t = reduced_trace(cand);
      if (!have || t < best.value || (t == best.value && lex_greater(cand, best.rep))) {
        best = {t, static_cast<int>(n), cand, false};
        have = true;
      }
    }
    best.certified = std::abs(best.n) <= bound_;
    return best;
  }
  const Element& power(long n) const { return powers_[static_cast<std::size_t>(n + bound_ + 1)]; }

 private:
  Element& at(long n) { return powers_[static_cast<std::size_t>(n + bound_ + 1)]; }
  long bound_;
  Element eps_;
  std::vector<Element> powers_;
};

// Integer tuples of [-B, B]^r, nonzero, by max-norm shell then lexicographically.
template <class F>
void shell_walk(std::size_t r, long bound, F&& visit) {
  std::vector<long> c(r);
  auto next = [&](long s) {
    for (std::size_t i = r; i-- > 0;) {
      if (c[i] < s) {
        ++c[i];
        return true;
      }
      c[i] = -s;
    }
    return false;
  };
  for (long s = 1; s <= bound; ++s) {
    std::fill(c.begin(), c.end(), -s);
    do {
      long mx = 0;
      for (long v : c) mx = std::max(mx, std::abs(v));
      if (mx == s && !visit(c)) return;
    } while (next(s));
  }
}

Element from_ints(const AlgebraSpec& alg, const std::vector<long>& c) {
  Element e = alg.zero();
  for (std::size_t t = 0; t < c.size(); ++t) e[t] = Rational(c[t]);
  return e;
}

Element eps_power(const Element& eps, long n) {
  Element base = n >= 0 ? eps : inverse(eps);
  Element out = eps.algebra().one();
  for (long i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

}  // namespace

UnitSearchResult unit_reducibility_search(const AlgebraSpec& alg, const UnitSearchOptions& opts) {
  if (alg.kind() != AlgebraKind::RealQuadratic && alg.kind() != AlgebraKind::Cyclotomic8 && alg.kind() != AlgebraKind::Cyclotomic12)
    throw UnsupportedForm("unit reducibility search needs a real quadratic or cyclotomic field, got " + alg.name());
  UnitScan scan(alg, opts.unit_bound);
  UnitSearchResult result;

  // Non-unit classes up to units, keyed by the unit-minimal representative of x x^*.
  struct XClass {
    Element x;
    Element w;
  };
  std::vector<XClass> xs;
  {
    std::set<std::string> seen;
    shell_walk(alg.rank(), opts.x_norm_bound, [&](const std::vector<long>& c) {
      Element x = from_ints(alg, c);
      Rational nr = abs_of(reduced_norm(x));
      if (nr < 2 || nr > opts.x_norm_bound) return true;
      UnitMin um = scan.minimise(x * conj(x));
      if (!um.certified) return true;
      if (seen.insert(to_string(um.rep)).second) xs.push_back({x * eps_power(scan.eps(), um.n), um.rep});
      return true;
    });
  }
  result.x_classes = xs.size();

  std::set<std::string> raw_seen, class_seen;
  shell_walk(alg.rank(), opts.v_bound, [&](const std::vector<long>& c) {
    Element y = from_ints(alg, c);
    Element v = opts.gram_values ? y * conj(y) : y;
    if (!opts.gram_values && !is_totally_positive(v)) return true;
    if (!raw_seen.insert(to_string(v)).second) return true;
    UnitMin um = scan.minimise(v);
    if (!um.certified) {
      ++result.uncertified;
      return true;
    }
    if (!class_seen.insert(to_string(um.rep)).second) return true;
    ++result.v_classes;
    const Element& vc = um.rep;
    std::optional<std::pair<UnitMin, const XClass*>> hit;
    for (const auto& xc : xs) {
      UnitMin xm = scan.minimise(xc.w * vc);
      if (xm.value < um.value && (!hit || xm.value < hit->first.value)) hit = std::make_pair(xm, &xc);
    }
    if (!hit) return true;
    Element x = hit->second->x * eps_power(scan.eps(), hit->first.n);
    Element best = x;
    for (const auto& t : alg.torsion_units())
      if (lex_greater(t * x, best)) best = t * x;
    Counterexample ce{vc, best, reduced_trace(vc), reduced_trace(best * vc * conj(best)), um.value, scan.eps(),
                      reduced_trace(scan.power(1) * vc), reduced_trace(scan.power(-1) * vc), reduced_norm(best)};
    result.counterexample = ce;
    return false;
  });
  return result;
}

bool zeta8_trace_identity(const Element& v) {
  const AlgebraSpec& alg = v.algebra();
  if (alg.kind() != AlgebraKind::Cyclotomic8) throw UnsupportedForm("trace identity is specific to Q(zeta8)");
  Element z = alg.basis(1);
  for (int s : {1, -1}) {
    Element sz = z * Rational(s);
    Element x = alg.one() + sz;
    Element u = alg.one() + sz + z * z;
    Rational lhs = 2 * reduced_trace(x * v * conj(x));
    Rational rhs = reduced_trace(v) + reduced_trace(u * v * conj(u));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace ordlat
