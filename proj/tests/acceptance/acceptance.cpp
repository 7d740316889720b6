// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordlat/bounds.hpp"
#include "ordlat/cli.hpp"
#include "ordlat/textio.hpp"

using namespace ordlat;

namespace {

struct Instance {
  ModuleLattice lattice;
  AlphaForm form;
  std::string name;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Per algebra: d cycles through 1, 2, 3; odd instances use the plain form where it exists, and
// every fourth instance of the trace family uses alpha = 2.
std::vector<Instance> instance_set(const AlgebraSpec& alg, std::size_t count, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = 1 + i % 3;
    ModuleLattice lat = random_lattice(alg, d, d, bound, rng);
    AlphaForm form = AlphaForm::trace_one(alg);
    if (alg.has_plain_form() && i % 2 == 1) form = AlphaForm::plain(alg);
    else if (i % 4 == 2) form = AlphaForm::trace(alg.one() + alg.one());
    out.push_back({lat, form, alg.name() + "#" + std::to_string(i) + " " + form.describe()});
  }
  return out;
}

std::vector<Instance> suite_instances(std::size_t count, long bound) {
  std::vector<Instance> all;
  std::uint64_t seed = 1000;
  for (const auto* alg : AlgebraSpec::catalog()) {
    auto v = instance_set(*alg, count, bound, seed++);
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

// Collects failing checks of a report, keeping the first few for the detail line.
struct Tally {
  std::size_t checks = 0, failed = 0, skipped = 0;
  std::string first_failure;
  void take(const BoundReport& rep, const std::string& where, const std::function<bool(const BoundCheck&)>& counted) {
    for (const auto& c : rep.checks) {
      if (!counted(c)) continue;
      ++checks;
      if (c.verdict == Verdict::Skipped) ++skipped;
      if (c.verdict == Verdict::Fail || c.verdict == Verdict::Undecided) {
        ++failed;
        if (first_failure.empty())
          first_failure = c.quantity + " on " + where + " value " + c.value.to_string() + " bound " +
                          (c.bound ? c.bound->to_string() : "none");
      }
    }
  }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(failed) + " failed, " +
                    std::to_string(skipped) + " skipped";
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

bool any(const BoundCheck& c) { return !c.informational; }

Outcome criterion1() {
  Outcome o;
  std::size_t lattices = 0, pairs = 0, vectors = 0;
  std::uint64_t seed = 1;
  for (const auto* alg : AlgebraSpec::catalog()) {
    std::mt19937_64 rng(seed++);
    for (int i = 0; i < 100; ++i) {
      const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
      ModuleLattice lat = random_lattice(*alg, d, d, 5, rng);
      AlphaForm form = (alg->has_plain_form() && i % 2) ? AlphaForm::plain(*alg) : AlphaForm::trace_one(*alg);
      GSOData g = gso(lat.basis(), form);
      ++lattices;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          if (a == b) continue;
          ++pairs;
          if (!inner(g.gso_vectors[a], g.gso_vectors[b], form).is_zero()) {
            o.pass = false;
            o.detail = "nonzero GSO pairing on " + alg->name();
          }
        }
      std::vector<Vector> samples = lat.basis();
      Vector x;
      for (std::size_t j = 0; j < d; ++j) {
        Element c = alg->zero();
        for (std::size_t t = 0; t < alg->rank(); ++t) c[t] = Rational(uniform(rng, -3, 3));
        x.push_back(c);
      }
      samples.push_back(lat.combine(x));
      for (const auto& v : samples) {
        ++vectors;
        if (pythagoras(lat.coordinates(v), g, form) != qnorm(v, form)) {
          o.pass = false;
          o.detail = "Pythagoras mismatch on " + alg->name();
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(lattices) + " lattices, " + std::to_string(pairs) + " GSO pairs zero, " +
               std::to_string(vectors) + " Pythagoras identities exact";
  return o;
}

Outcome tightness(const std::string& algebra, const Rational& ratio, std::size_t d, const Rational& lambda) {
  Outcome o;
  const AlgebraSpec& alg = AlgebraSpec::by_name(algebra);
  AlphaForm form = AlphaForm::plain(alg);
  ModuleLattice lat = tightness_lattice(alg);
  bool reduced = is_minkowski_reduced(lat, form);
  std::vector<Rational> lam = successive_minima(lat, form).lambdas_sq;
  std::vector<Rational> ratios = minima_ratios(lat, form);
  Real delta = minkowski_delta_sq(static_cast<int>(d), make_context(form));
  bool lam_ok = lam.size() == d;
  for (const auto& l : lam) lam_ok = lam_ok && l == lambda;
  bool ratio_ok = !ratios.empty() && ratios.back() == ratio;
  bool delta_ok = delta.is_rational() && delta.rational() == ratio;
  o.pass = lat.rank() == d && reduced && lam_ok && ratio_ok && delta_ok;
  std::ostringstream s;
  s << alg.name() << " d=" << lat.rank() << " reduced=" << (reduced ? "yes" : "no") << " lambda^2=";
  for (const auto& l : lam) s << to_string(l) << " ";
  s << "ratio=" << (ratios.empty() ? "?" : to_string(ratios.back())) << " delta^2=" << delta.to_string();
  o.detail = s.str();
  return o;
}

Outcome criterion2() {
  Outcome a = tightness("Q(i)", Rational(3, 2), 3, 2);
  Outcome b = tightness("Q(sqrt-3)", Rational(4, 3), 4, 3);
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome criterion3(const std::vector<Instance>& insts) {
  Tally t;
  std::size_t first = 0;
  for (const auto& in : insts) {
    BoundReport rep = minkowski_suite(in.lattice, in.form);
    for (const auto& c : rep.checks) first += c.quantity == "minkowski.first_is_lambda1";
    t.take(rep, in.name, any);
  }
  return {t.failed == 0, std::to_string(insts.size()) + " instances, " + t.summary() + ", " + std::to_string(first) +
                             " exact q(b_1) = lambda_1^2 checks"};
}

Outcome criterion4(const std::vector<Instance>& insts) {
  Tally t;
  std::size_t kappa = 0, kappa_fail = 0;
  for (const auto& in : insts) {
    t.take(hkz_suite(in.lattice, in.form), in.name, any);
    if (in.lattice.algebra().name() == "Q(sqrt-3)" && in.form.is_plain()) {
      ReductionReport red = hkz_reduce(in.lattice, in.form);
      for (std::size_t i = 0; i < red.ratios.size(); ++i) {
        ++kappa;
        if (red.ratios[i] > Rational(static_cast<long>(i) + 3, 3)) ++kappa_fail;
      }
    }
  }
  return {t.failed == 0 && kappa_fail == 0 && kappa > 0,
          std::to_string(insts.size()) + " instances, " + t.summary() + "; Q(sqrt-3) kappa_i <= (i+2)/3: " +
              std::to_string(kappa - kappa_fail) + "/" + std::to_string(kappa)};
}

Outcome criterion5(const std::vector<Instance>& insts) {
  Tally t, printed;
  std::size_t hkz = 0;
  for (const auto& in : insts) {
    const int d = static_cast<int>(in.lattice.rank());
    for (int beta = 2; beta <= d; ++beta) {
      BoundReport rep = bkz_suite(in.lattice, in.form, beta);
      for (const auto& c : rep.checks) hkz += c.quantity == "bkz.is_hkz";
      t.take(rep, in.name + " beta=" + std::to_string(beta),
             [](const BoundCheck& c) { return !c.informational; });
      printed.take(rep, in.name, [](const BoundCheck& c) { return c.informational; });
    }
  }
  return {t.failed == 0 && hkz > 0, std::to_string(insts.size()) + " instances, " + t.summary() + ", " +
                                        std::to_string(hkz) + " beta=d outputs HKZ; printed closed form: " +
                                        std::to_string(printed.checks - printed.failed - printed.skipped) + "/" +
                                        std::to_string(printed.checks - printed.skipped) + " hold (informational)"};
}

Outcome criterion6(const std::vector<Instance>& insts) {
  Outcome o;
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  AlphaForm form = AlphaForm::trace_one(zi);
  ModuleLattice lat = identity_lattice(zi, 1);
  ModuleLattice dual = dual_alpha(lat, form).lattice;
  ModuleLattice half(zi, {{Element(zi, {Rational(1, 2), Rational(0)})}});
  bool dual_ok = same_lattice(dual, half);
  Rational prod = det_alpha(lat, form) * det_alpha(dual, form);
  bool det_ok = prod == Rational(1, 16);
  Tally t, printed;
  for (const auto& in : insts) {
    BoundReport rep = dual_suite(in.lattice, in.form);
    t.take(rep, in.name, any);
    printed.take(rep, in.name, [](const BoundCheck& c) { return c.informational; });
  }
  o.pass = dual_ok && det_ok && t.failed == 0;
  o.detail = std::string("Z[i] d=1 dual=(1/2)Z[i] ") + (dual_ok ? "yes" : "no") + ", det product " + to_string(prod) +
             "; " + std::to_string(insts.size()) + " instances, " + t.summary() + "; printed closed form: " +
             std::to_string(printed.checks - printed.failed - printed.skipped) + "/" +
             std::to_string(printed.checks - printed.skipped) + " hold (informational)";
  return o;
}

Outcome criterion7(const std::vector<Instance>& insts) {
  Tally t;
  std::mt19937_64 rng(7);
  for (const auto& in : insts) {
    std::vector<Vector> targets;
    for (int i = 0; i < 50; ++i) targets.push_back(random_target(in.lattice, rng));
    t.take(cvp_suite(in.lattice, in.form, targets), in.name, any);
  }
  return {t.failed == 0, std::to_string(insts.size()) + " bases x 50 targets, " + t.summary()};
}

Outcome criterion8() {
  Outcome o;
  UnitSearchOptions opts;
  UnitSearchResult r6 = unit_reducibility_search(AlgebraSpec::by_name("Q(sqrt6)"), opts);
  std::ostringstream s;
  if (!r6.counterexample) {
    o.pass = false;
    s << "Q(sqrt6): no counterexample";
  } else {
    const Counterexample& c = *r6.counterexample;
    bool ok = c.trace_v == 20 && c.trace_up == 1940 && c.trace_x == 8 && abs(c.nrd_x) == 2;
    o.pass = ok;
    s << "Q(sqrt6): v=" << to_string(c.v) << " x=" << to_string(c.x) << " traces " << to_string(c.trace_v) << ", "
      << to_string(c.trace_up) << ", " << to_string(c.trace_x) << " nrd(x)=" << to_string(c.nrd_x);
  }
  for (const char* name : {"Q(sqrt2)", "Q(sqrt3)", "Q(sqrt5)", "Q(zeta8)", "Q(zeta12)"}) {
    UnitSearchResult r = unit_reducibility_search(AlgebraSpec::by_name(name), opts);
    bool ok = !r.counterexample;
    o.pass = o.pass && ok;
    s << "; " << name << (ok ? " none" : " COUNTEREXAMPLE") << " (" << r.v_classes << " v classes)";
  }
  o.detail = s.str();
  return o;
}

Outcome criterion9(const std::vector<Instance>& insts) {
  Tally t;
  bool skips_ok = true;
  for (const auto& in : insts) {
    BoundReport rep = product_suite(in.lattice, in.form);
    const AlgebraSpec& alg = in.lattice.algebra();
    const bool large = in.lattice.rank() * alg.n() * alg.m() * alg.m() > 8;
    for (const auto& c : rep.checks)
      if (c.quantity == "product.minima" && ((c.verdict == Verdict::Skipped) != large)) skips_ok = false;
    t.take(rep, in.name, [](const BoundCheck& c) { return c.quantity == "product.minima"; });
  }
  return {t.failed == 0 && skips_ok,
          std::to_string(insts.size()) + " instances, " + t.summary() + (skips_ok ? "" : "; skip rule violated")};
}

std::string run_capture(const RunConfig& cfg, int& code) {
  std::ostringstream rep, sum;
  code = run(cfg, rep, sum);
  return rep.str();
}

Outcome criterion10() {
  Outcome o;
  std::vector<RunConfig> cfgs;
  auto base = [](const std::string& cmd, const std::string& alg, std::size_t d) {
    RunConfig c;
    c.command = cmd;
    c.algebra = alg;
    c.d = d;
    c.seed = 42;
    return c;
  };
  std::string tmp = "ordlat_acceptance_input.lat";
  {
    int code = 0;
    RunConfig g = base("gen", "Hurwitz", 2);
    g.out = tmp;
    run_capture(g, code);
  }
  cfgs.push_back(base("gen", "Q(zeta8)", 3));
  for (const char* kind : {"minkowski", "hkz", "bkz", "size"}) {
    RunConfig c = base("reduce", "Q(sqrt-7)", 3);
    c.kind = kind;
    cfgs.push_back(c);
  }
  RunConfig from_file = base("reduce", "", 0);
  from_file.in = tmp;
  from_file.kind = "hkz";
  cfgs.push_back(from_file);
  cfgs.push_back(base("minima", "Q(sqrt5)", 3));
  cfgs.push_back(base("dual", "Q(sqrt-2)", 3));
  cfgs.push_back(base("cvp", "Q(zeta12)", 2));
  RunConfig cb = base("check-bounds", "Q(sqrt-3)", 3);
  cb.form = "plain";
  cb.count = 3;
  cfgs.push_back(cb);
  cfgs.push_back(base("unit-red", "Q(sqrt6)", 1));
  cfgs.push_back(base("unit-red", "Q(zeta8)", 1));
  std::size_t same = 0;
  for (const auto& c : cfgs) {
    int c1 = 0, c2 = 0;
    std::string a = run_capture(c, c1), b = run_capture(c, c2);
    if (a == b && c1 == c2 && !a.empty()) ++same;
    else {
      o.pass = false;
      o.detail += "differs: " + c.command + " " + c.algebra + "; ";
    }
  }
  std::remove(tmp.c_str());
  o.detail += std::to_string(same) + "/" + std::to_string(cfgs.size()) + " command runs byte-identical";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, double limit, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = limit <= 0 || secs < limit;
    bool pass = o.pass && in_time;
    all = all && pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " (" << buf;
    if (limit > 0) std::cout << " of " << limit << "s";
    std::cout << ") " << o.detail << (in_time ? "" : " [time limit exceeded]") << std::endl;
  };

  const auto insts = suite_instances(20, 3);

  report(1, 10, criterion1);
  report(2, 5, criterion2);
  report(3, 60, [&] { return criterion3(insts); });
  report(4, 60, [&] { return criterion4(insts); });
  report(5, 60, [&] { return criterion5(insts); });
  report(6, 30, [&] { return criterion6(insts); });
  report(7, 60, [&] { return criterion7(insts); });
  report(8, 120, criterion8);
  report(9, 60, [&] { return criterion9(insts); });
  report(10, 0, criterion10);
  return all ? 0 : 1;
}
