#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ordlat/cli.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/textio.hpp"

using namespace ordlat;

namespace {

std::string data(const char* name) { return std::string(ORDLAT_TEST_DATA) + "/" + name; }

int run_cmd(RunConfig cfg, std::string* report = nullptr) {
  std::ostringstream r, s;
  int code = run(cfg, r, s);
  if (report) *report = r.str();
  return code;
}

}  // namespace

TEST(TextIO, LatticeRoundTripIsBitExact) {
  std::mt19937_64 rng(2);
  for (const auto* a : AlgebraSpec::catalog()) {
    ModuleLattice lat = random_lattice(*a, 2, 3, 4, rng);
    AlphaForm f = a->has_plain_form() ? AlphaForm::plain(*a) : AlphaForm::trace_one(*a);
    std::string text = format_lattice(lat, f);
    LatticeFile back = parse_lattice(text);
    EXPECT_EQ(back.lattice, lat);
    EXPECT_EQ(back.form.describe(), f.describe());
    EXPECT_EQ(format_lattice(back.lattice, back.form), text);
  }
}

TEST(TextIO, CommentsAndErrors) {
  LatticeFile f = parse_lattice("# c\nordlat-lattice 1\nalgebra Q\nform trace\nalpha [1]\nd 1\nD 2\n[1] [2] # row\n");
  EXPECT_EQ(f.lattice.rank(), 1u);
  EXPECT_EQ(f.lattice.ambient(), 2u);
  EXPECT_THROW(parse_lattice("ordlat-lattice 2\n"), ParseError);
  EXPECT_THROW(parse_lattice("ordlat-lattice 1\nalgebra Q\nd 1\nD 1\n"), ParseError);
  std::ifstream in(data("malformed.lat"));
  EXPECT_THROW(read_lattice(in), ParseError);
}

TEST(TextIO, ReductionReportReplays) {
  std::ifstream in(data("tightness_zi.lat"));
  LatticeFile lf = read_lattice(in);
  ModuleLattice scrambled = apply_log(lf.lattice, {ElementaryOp::swap(0, 2), ElementaryOp::add(0, lf.lattice.algebra().one(), 1)});
  ReductionReport rep = minkowski_reduce(scrambled, lf.form);
  std::stringstream ss;
  write_reduction_report(ss, rep, lf.form);
  ParsedReduction p = read_reduction_report(ss);
  EXPECT_EQ(p.input.lattice, scrambled);
  EXPECT_EQ(p.output.lattice, rep.basis);
  EXPECT_EQ(apply_log(p.input.lattice, p.log), p.output.lattice);
}

TEST(Cli, ExitCodes) {
  RunConfig c;
  c.command = "reduce";
  c.in = data("tightness_zi.lat");
  std::string report;
  EXPECT_EQ(run_cmd(c, &report), kExitOk);
  EXPECT_NE(report.find("ratios 1 1 3/2"), std::string::npos);

  c.in = data("malformed.lat");
  EXPECT_EQ(run_cmd(c), kExitParse);

  RunConfig u;
  u.command = "unit-red";
  u.algebra = "Q(sqrt6)";
  EXPECT_EQ(run_cmd(u, &report), kExitViolation);
  EXPECT_NE(report.find("trace_uvu 1940"), std::string::npos);
  u.algebra = "Q(sqrt5)";
  EXPECT_EQ(run_cmd(u), kExitOk);

  RunConfig big;
  big.command = "minima";
  big.algebra = "Hurwitz";
  big.d = 3;
  big.limit = 8;
  EXPECT_EQ(run_cmd(big), kExitScale);

  RunConfig bad;
  bad.command = "frobnicate";
  EXPECT_EQ(run_cmd(bad), kExitParse);
  bad.command = "gen";
  bad.algebra = "Q(sqrt99)";
  EXPECT_EQ(run_cmd(bad), kExitParse);
}

TEST(Cli, MinimaOnIdentityAreEqual) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  std::string path = ::testing::TempDir() + "identity.lat";
  {
    std::ofstream out(path);
    write_lattice(out, identity_lattice(zi, 3), AlphaForm::trace_one(zi));
  }
  RunConfig c;
  c.command = "minima";
  c.in = path;
  std::string report;
  EXPECT_EQ(run_cmd(c, &report), kExitOk);
  EXPECT_NE(report.find("lambda_sq 2 2 2"), std::string::npos);
}

TEST(Cli, DeterministicReports) {
  for (const char* cmd : {"gen", "reduce", "minima", "dual", "cvp", "check-bounds"}) {
    RunConfig c;
    c.command = cmd;
    c.algebra = "Q(sqrt-2)";
    c.d = 2;
    c.seed = 99;
    std::string a, b;
    int ca = run_cmd(c, &a), cb = run_cmd(c, &b);
    EXPECT_EQ(ca, cb) << cmd;
    EXPECT_EQ(a, b) << cmd;
    c.seed = 100;
    std::string other;
    run_cmd(c, &other);
    if (std::string(cmd) != "check-bounds") EXPECT_NE(a, other) << cmd;
  }
}

TEST(Cli, RandomGeneration) {
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 50; ++i) {
    long x = uniform(r1, -3, 3);
    EXPECT_EQ(x, uniform(r2, -3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
  const AlgebraSpec& a = AlgebraSpec::by_name("Q(zeta12)");
  ModuleLattice lat = random_lattice(a, 3, 4, 2, r1);
  EXPECT_EQ(lat.rank(), 3u);
  EXPECT_EQ(lat.ambient(), 4u);
  EXPECT_EQ(k_rank(lat.basis()), 3u);
}
