#include "ordlat/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ordlat/bounds.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/textio.hpp"

namespace ordlat {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

ModuleLattice random_lattice(const AlgebraSpec& alg, std::size_t d, std::size_t D, long bound, std::mt19937_64& rng) {
  if (d == 0 || D < d) throw DimensionMismatch("need 1 <= d <= D");
  while (true) {
    std::vector<Vector> rows(d, Vector(D, alg.zero()));
    for (auto& row : rows)
      for (auto& e : row)
        for (std::size_t t = 0; t < alg.rank(); ++t) e[t] = Rational(uniform(rng, -bound, bound));
    if (k_rank(rows) == d) return ModuleLattice(alg, std::move(rows));
  }
}

Vector random_target(const ModuleLattice& lat, std::mt19937_64& rng, long den) {
  const AlgebraSpec& alg = lat.algebra();
  Vector coeffs(lat.rank(), alg.zero());
  for (auto& c : coeffs)
    for (std::size_t t = 0; t < alg.rank(); ++t) c[t] = Rational(uniform(rng, -2 * den, 2 * den), den);
  return lat.combine(coeffs);
}

ModuleLattice tightness_lattice(const AlgebraSpec& alg) {
  const Element& l = alg.smallest_nonunit();
  const std::size_t d = static_cast<std::size_t>(alg.smallest_nonunit_norm()) + 1;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Vector v(d, alg.zero());
    v[i] = l;
    rows.push_back(v);
  }
  rows.push_back(Vector(d, alg.one()));
  return ModuleLattice(alg, rows);
}

namespace {

struct Instance {
  std::string name;
  ModuleLattice lattice;
  AlphaForm form;
};

AlphaForm form_from(const RunConfig& cfg, const AlgebraSpec& alg) {
  if (cfg.form == "plain") {
    if (!cfg.alpha.empty()) throw ParseError("--alpha does not apply to the plain form");
    return AlphaForm::plain(alg);
  }
  if (cfg.form != "trace") throw ParseError("--form must be 'trace' or 'plain'");
  return AlphaForm::trace(cfg.alpha.empty() ? alg.one() : parse_element(alg, cfg.alpha));
}

std::vector<Instance> instances(const RunConfig& cfg, std::mt19937_64& rng, std::size_t count) {
  std::vector<Instance> out;
  if (!cfg.in.empty()) {
    std::ifstream f(cfg.in);
    if (!f) throw ParseError("cannot open '" + cfg.in + "'");
    LatticeFile lf = read_lattice(f);
    out.push_back({cfg.in, lf.lattice, lf.form});
    return out;
  }
  const AlgebraSpec& alg = AlgebraSpec::by_name(cfg.algebra);
  AlphaForm form = form_from(cfg, alg);
  const std::size_t D = cfg.D ? cfg.D : cfg.d;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({"generated#" + std::to_string(i + 1), random_lattice(alg, cfg.d, D, cfg.coeff_bound, rng), form});
  return out;
}

ReductionKind parse_kind(const std::string& k) {
  if (k == "minkowski") return ReductionKind::Minkowski;
  if (k == "hkz") return ReductionKind::HKZ;
  if (k == "bkz") return ReductionKind::BKZ;
  if (k == "size") return ReductionKind::SizeOnly;
  throw ParseError("--kind must be minkowski, hkz, bkz or size");
}

ReductionReport reduce_with(const Instance& inst, ReductionKind kind, int beta) {
  switch (kind) {
    case ReductionKind::Minkowski: return minkowski_reduce(inst.lattice, inst.form);
    case ReductionKind::HKZ: return hkz_reduce(inst.lattice, inst.form);
    case ReductionKind::BKZ: return bkz_reduce(inst.lattice, inst.form, beta);
    case ReductionKind::SizeOnly: {
      ReductionReport rep{ReductionKind::SizeOnly, 0, inst.lattice, inst.lattice, {}, {}, false};
      rep.basis = size_reduce(inst.lattice, inst.form, &rep.log);
      rep.ratios = minima_ratios(rep.basis, inst.form);
      rep.verdict = is_size_reduced(rep.basis, inst.form);
      return rep;
    }
  }
  throw ParseError("unknown reduction kind");
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

void header(std::ostream& out, const RunConfig& cfg, const std::string& command) {
  out << "ordlat-report " << command << "\n";
  out << "seed " << cfg.seed << "\n";
  out << "scale_limit " << scale_limit() << "\n";
}

int cmd_gen(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto inst = instances(cfg, rng, 1).front();
  write_lattice(out, inst.lattice, inst.form);
  sum << "gen: " << inst.lattice.algebra().name() << " d=" << inst.lattice.rank() << " D=" << inst.lattice.ambient()
      << " seed=" << cfg.seed << "\n";
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto inst = instances(cfg, rng, 1).front();
  check_scale(inst.lattice);
  ReductionKind kind = parse_kind(cfg.kind);
  ReductionReport rep = reduce_with(inst, kind, cfg.beta);
  bool replay = apply_log(rep.input, rep.log) == rep.basis;
  write_reduction_report(out, rep, inst.form);
  out << "replay " << (replay ? "pass" : "FAIL") << "\n";
  sum << "reduce " << to_string(kind) << " on " << inst.name << ": checker " << (rep.verdict ? "pass" : "FAIL")
      << ", ratios " << join(rep.ratios) << ", " << rep.log.size() << " ops\n";
  return rep.verdict && replay ? kExitOk : kExitViolation;
}

int cmd_minima(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto inst = instances(cfg, rng, 1).front();
  check_scale(inst.lattice);
  MinimaResult m = successive_minima(inst.lattice, inst.form);
  header(out, cfg, "minima");
  write_lattice(out, inst.lattice, inst.form);
  write_minima(out, m);
  sum << "minima on " << inst.name << ": lambda^2 = " << join(m.lambdas_sq) << "\n";
  return kExitOk;
}

int cmd_dual(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto inst = instances(cfg, rng, 1).front();
  check_scale(inst.lattice);
  ModuleLattice dual = dual_alpha(inst.lattice, inst.form).lattice;
  BoundReport rep = dual_suite(inst.lattice, inst.form);
  header(out, cfg, "dual");
  out << "det_alpha " << to_string(det_alpha(inst.lattice, inst.form)) << "\n";
  out << "det_alpha_dual " << to_string(det_alpha(dual, inst.form)) << "\n";
  out << "dual-begin\n";
  write_lattice(out, dual, inst.form);
  out << "dual-end\n";
  write_bound_report(out, rep);
  sum << "dual on " << inst.name << ": " << rep.count(Verdict::Pass) << " checks pass, " << rep.count(Verdict::Fail)
      << " fail, " << rep.count(Verdict::Skipped) << " skipped\n";
  return rep.all_pass() ? kExitOk : kExitViolation;
}

int cmd_cvp(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto inst = instances(cfg, rng, 1).front();
  check_scale(inst.lattice);
  const AlgebraSpec& alg = inst.lattice.algebra();
  ReductionKind kind = parse_kind(cfg.kind);
  if (kind == ReductionKind::SizeOnly) throw ParseError("cvp needs --kind minkowski, hkz or bkz");
  ReductionReport red = reduce_with(inst, kind, cfg.beta);
  Vector target = cfg.target.empty() ? random_target(inst.lattice, rng) : parse_row(alg, cfg.target);
  if (target.size() != inst.lattice.ambient()) throw ParseError("target has the wrong length");
  PlaneResult pr = nearest_plane(red.basis, inst.form, target);
  LatticeVector exact = closest_vector(red.basis, inst.form, target);
  MinimaResult m = successive_minima(inst.lattice, inst.form);
  const int d = static_cast<int>(inst.lattice.rank());
  BoundContext ctx = make_context(inst.form);
  CvpBasis cb = kind == ReductionKind::Minkowski ? CvpBasis::Minkowski : (kind == ReductionKind::HKZ ? CvpBasis::HKZ : CvpBasis::BKZ);
  BoundReport rep;
  rep.add(check_le("cvp.distance_ratio", Rational(pr.vector.norm / m.lambdas_sq.back()), cvp_bound(cb, d, cfg.beta, ctx),
                   "distance^2/lambda_d^2"));
  Rational worst = 0;
  for (const auto& df : pr.defects) worst = std::max(worst, df);
  rep.add(check_le("cvp.defect", worst, ctx.coeff, "max rounding defect"));
  header(out, cfg, "cvp");
  out << "basis " << to_string(kind) << "\n";
  out << "target " << format_row(target) << "\n";
  out << "vector " << format_row(pr.vector.vec) << "\n";
  out << "coeffs " << format_row(pr.vector.coeffs) << "\n";
  out << "distance_sq " << to_string(pr.vector.norm) << "\n";
  out << "closest_distance_sq " << to_string(exact.norm) << "\n";
  out << "lambda_d_sq " << to_string(m.lambdas_sq.back()) << "\n";
  write_bound_report(out, rep);
  sum << "cvp on " << inst.name << " (" << to_string(kind) << " basis): distance^2 " << to_string(pr.vector.norm)
      << ", optimum " << to_string(exact.norm) << ", bound " << (rep.all_pass() ? "holds" : "VIOLATED") << "\n";
  return rep.all_pass() ? kExitOk : kExitViolation;
}

int cmd_check_bounds(const RunConfig& cfg, std::mt19937_64& rng, std::ostream& out, std::ostream& sum) {
  auto insts = instances(cfg, rng, cfg.count);
  header(out, cfg, "check-bounds");
  BoundReport all;
  for (const auto& inst : insts) {
    check_scale(inst.lattice);
    const int d = static_cast<int>(inst.lattice.rank());
    BoundReport rep;
    rep.add(check_le("constants.rho", rho(inst.form), rho(inst.form), make_context(inst.form).describe()));
    rep.append(minkowski_suite(inst.lattice, inst.form));
    rep.append(hkz_suite(inst.lattice, inst.form));
    if (d >= 2) rep.append(bkz_suite(inst.lattice, inst.form, std::min(std::max(cfg.beta, 2), d)));
    rep.append(dual_suite(inst.lattice, inst.form));
    rep.append(product_suite(inst.lattice, inst.form));
    std::vector<Vector> targets;
    for (int t = 0; t < 8; ++t) targets.push_back(random_target(inst.lattice, rng));
    rep.append(cvp_suite(inst.lattice, inst.form, targets));
    out << "instance " << inst.name << "\n";
    write_lattice(out, inst.lattice, inst.form);
    write_bound_report(out, rep);
    for (const auto& c : rep.checks)
      if (!c.informational && (c.verdict == Verdict::Fail || c.verdict == Verdict::Undecided))
        sum << "violation: " << c.quantity << " on " << inst.name << " value " << c.value.to_string() << " bound "
            << (c.bound ? c.bound->to_string() : "none") << "\n";
    all.append(rep);
  }
  out << "total pass " << all.count(Verdict::Pass) << " fail " << all.count(Verdict::Fail) << " skipped "
      << all.count(Verdict::Skipped) << " undecided " << all.count(Verdict::Undecided) << "\n";
  sum << "check-bounds: " << insts.size() << " instance(s), " << all.count(Verdict::Pass) << " pass, "
      << all.count(Verdict::Fail) << " fail, " << all.count(Verdict::Skipped) << " skipped, "
      << all.count(Verdict::Undecided) << " undecided\n";
  return all.all_pass() ? kExitOk : kExitViolation;
}

int cmd_unit_red(const RunConfig& cfg, std::ostream& out, std::ostream& sum) {
  const AlgebraSpec& alg = AlgebraSpec::by_name(cfg.algebra);
  UnitSearchOptions opts;
  opts.v_bound = cfg.v_bound;
  opts.x_norm_bound = cfg.x_norm_bound;
  opts.unit_bound = cfg.unit_bound;
  UnitSearchResult res = unit_reducibility_search(alg, opts);
  header(out, cfg, "unit-red");
  out << "algebra " << alg.name() << "\n";
  out << "v_bound " << opts.v_bound << "\nx_norm_bound " << opts.x_norm_bound << "\nunit_bound " << opts.unit_bound << "\n";
  out << "v_classes " << res.v_classes << "\nx_classes " << res.x_classes << "\nuncertified " << res.uncertified << "\n";
  if (alg.kind() == AlgebraKind::Cyclotomic8) {
    bool ok = true;
    std::size_t n = 0;
    std::vector<long> c(4);
    for (c[0] = -2; c[0] <= 2; ++c[0])
      for (c[1] = -2; c[1] <= 2; ++c[1])
        for (c[2] = -2; c[2] <= 2; ++c[2])
          for (c[3] = -2; c[3] <= 2; ++c[3]) {
            Element y(alg, {c[0], c[1], c[2], c[3]});
            if (y.is_zero()) continue;
            ok = ok && zeta8_trace_identity(y * conj(y));
            ++n;
          }
    out << "zeta8_trace_identity " << (ok ? "pass" : "FAIL") << " samples " << n << "\n";
    if (!ok) {
      sum << "unit-red " << alg.name() << ": trace identity FAILED\n";
      return kExitViolation;
    }
  }
  if (res.counterexample) {
    out << "result counterexample\n";
    write_counterexample(out, *res.counterexample);
    sum << "unit-red " << alg.name() << ": not unit reducible, v=" << to_string(res.counterexample->v)
        << " x=" << to_string(res.counterexample->x) << " traces " << to_string(res.counterexample->trace_v) << "/"
        << to_string(res.counterexample->trace_up) << "/" << to_string(res.counterexample->trace_x) << "\n";
    return kExitViolation;
  }
  out << "result none\n";
  sum << "unit-red " << alg.name() << ": no counterexample among " << res.v_classes << " v classes and " << res.x_classes
      << " x classes\n";
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& report, std::ostream& summary) {
  try {
    set_scale_limit(cfg.limit);
    std::mt19937_64 rng(cfg.seed);
    std::ostringstream buf;
    int code;
    if (cfg.command == "gen") code = cmd_gen(cfg, rng, buf, summary);
    else if (cfg.command == "reduce") code = cmd_reduce(cfg, rng, buf, summary);
    else if (cfg.command == "minima") code = cmd_minima(cfg, rng, buf, summary);
    else if (cfg.command == "dual") code = cmd_dual(cfg, rng, buf, summary);
    else if (cfg.command == "cvp") code = cmd_cvp(cfg, rng, buf, summary);
    else if (cfg.command == "check-bounds") code = cmd_check_bounds(cfg, rng, buf, summary);
    else if (cfg.command == "unit-red") code = cmd_unit_red(cfg, buf, summary);
    else throw ParseError("unknown command '" + cfg.command + "'");
    if (!cfg.out.empty()) {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw ParseError("cannot write '" + cfg.out + "'");
      f << buf.str();
    } else {
      report << buf.str();
    }
    return code;
  } catch (const ScaleLimitExceeded& e) {
    summary << "refused: " << e.what() << "\n";
    return kExitScale;
  } catch (const Error& e) {
    summary << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    summary << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ordlat
