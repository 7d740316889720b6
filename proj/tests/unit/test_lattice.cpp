#include <gtest/gtest.h>

#include <random>

#include "ordlat/cli.hpp"
#include "ordlat/enumeration.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/lattice.hpp"

using namespace ordlat;

namespace {

Element el(const AlgebraSpec& a, const char* lit) { return parse_element(a, lit); }

Vector random_coeffs(const AlgebraSpec& a, std::size_t d, std::mt19937_64& rng) {
  Vector c;
  for (std::size_t i = 0; i < d; ++i) {
    Element e(a);
    for (std::size_t t = 0; t < a.rank(); ++t) e[t] = Rational(uniform(rng, -3, 3));
    c.push_back(e);
  }
  return c;
}

}  // namespace

TEST(Lattice, ElementaryOpsRoundTripAsText) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  for (const auto& op : {ElementaryOp::swap(0, 1), ElementaryOp::scale(1, el(zi, "[0, 1]")),
                         ElementaryOp::add(1, el(zi, "[1, 1]"), 0)}) {
    ElementaryOp back = ElementaryOp::parse(zi, op.to_string());
    EXPECT_EQ(back.to_string(), op.to_string());
  }
  EXPECT_EQ(ElementaryOp::add(1, el(zi, "[1, 1]"), 0).to_string(), "add 2 [1, 1] 1");
}

TEST(Lattice, ElementaryOpsPreserveInvariants) {
  std::mt19937_64 rng(3);
  for (const auto* a : AlgebraSpec::catalog()) {
    AlphaForm f = AlphaForm::trace_one(*a);
    ModuleLattice lat = random_lattice(*a, 2, 2, 3, rng);
    Element unit = a->torsion_units().back();
    ModuleLattice moved = apply_log(lat, {ElementaryOp::swap(0, 1), ElementaryOp::scale(0, unit),
                                          ElementaryOp::add(1, random_coeffs(*a, 1, rng)[0], 0)});
    EXPECT_TRUE(same_lattice(lat, moved)) << a->name();
    EXPECT_EQ(det_alpha(lat, f), det_alpha(moved, f)) << a->name();
    EXPECT_EQ(successive_minima(lat, f).lambdas_sq, successive_minima(moved, f).lambdas_sq) << a->name();
    for (int s = 0; s < 100; ++s) {
      EXPECT_TRUE(moved.contains(lat.combine(random_coeffs(*a, 2, rng))));
      EXPECT_TRUE(lat.contains(moved.combine(random_coeffs(*a, 2, rng))));
    }
  }
}

TEST(Lattice, NonUnitScalingRejected) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  ModuleLattice lat = identity_lattice(zi, 2);
  EXPECT_THROW(apply_elementary(lat, ElementaryOp::scale(0, el(zi, "[1, 1]"))), NonUnitScaling);
}

TEST(Lattice, PrimitiveSystems) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  ModuleLattice lat = identity_lattice(zi, 2);
  EXPECT_TRUE(is_primitive_system(lat, {{zi.one(), zi.zero()}}));
  EXPECT_FALSE(is_primitive_system(lat, {{el(zi, "[1, 1]"), zi.zero()}}));
  const AlgebraSpec& q = AlgebraSpec::by_name("Q");
  ModuleLattice z2 = identity_lattice(q, 2);
  EXPECT_TRUE(is_primitive_system(z2, {{el(q, "[2]"), el(q, "[3]")}}));
  EXPECT_THROW(is_primitive_system(z2, {{el(q, "[2]"), el(q, "[3]")}, {el(q, "[4]"), el(q, "[6]")}}), RankDeficient);
}

TEST(Lattice, CompleteToBasis) {
  const AlgebraSpec& q = AlgebraSpec::by_name("Q");
  ModuleLattice z2 = identity_lattice(q, 2);
  Completion c = complete_to_basis(z2, {{el(q, "[2]"), el(q, "[3]")}});
  EXPECT_EQ(c.lattice[0], (Vector{el(q, "[2]"), el(q, "[3]")}));
  EXPECT_TRUE(same_lattice(c.lattice, z2));
  EXPECT_EQ(complete_to_basis(z2, {{q.one(), q.zero()}}).lattice, z2);

  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  ModuleLattice l2 = identity_lattice(zi, 2);
  Completion ci = complete_to_basis(l2, {{zi.one(), el(zi, "[1, 1]")}});
  EXPECT_TRUE(same_lattice(ci.lattice, l2));
  EXPECT_EQ(apply_log(l2, ci.ops), ci.lattice);
  EXPECT_THROW(complete_to_basis(l2, {{el(zi, "[1, 1]"), zi.zero()}}), NotPrimitive);
}

TEST(Lattice, CompletionPrefixesArePrimitive) {
  std::mt19937_64 rng(11);
  for (const auto* a : AlgebraSpec::catalog()) {
    ModuleLattice lat = random_lattice(*a, 3, 3, 2, rng);
    Vector first = {a->one(), a->zero(), a->zero()};
    Vector v = {a->one() * Rational(2), a->one(), a->zero()};
    Completion c = complete_to_basis(lat, {first, v});
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < k; ++i) {
        Vector e = zero_vector(*a, 3);
        e[i] = a->one();
        rows.push_back(e);
      }
      EXPECT_TRUE(is_primitive_system(c.lattice, rows)) << a->name() << " k=" << k;
    }
    EXPECT_TRUE(same_lattice(c.lattice, lat));
  }
}

TEST(Lattice, DeterminantExamples) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  AlphaForm f = AlphaForm::trace_one(zi);
  EXPECT_EQ(det_alpha(identity_lattice(zi, 1), f), 1);
  EXPECT_EQ(det_alpha(scaled(identity_lattice(zi, 1), Rational(1, 2)), f), Rational(1, 16));
}

TEST(Lattice, DeterminantCrossCheck) {
  std::mt19937_64 rng(5);
  for (const auto* a : AlgebraSpec::catalog()) {
    for (std::size_t d = 1; d <= 3; ++d) {
      ModuleLattice lat = random_lattice(*a, d, d, 3, rng);
      AlphaForm f = AlphaForm::trace_one(*a);
      EXPECT_EQ(det_alpha(lat, f), det_alpha_crosscheck(lat, f)) << a->name();
      // Z-Gram determinant equals |disc|^d det_alpha.
      EXPECT_EQ(determinant(zview(lat, f).gram), pow_of(Rational(a->disc_abs()), static_cast<long>(d)) * det_alpha(lat, f))
          << a->name();
    }
  }
}

TEST(Lattice, DualExamples) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  AlphaForm f = AlphaForm::trace_one(zi);
  ModuleLattice lat = identity_lattice(zi, 1);
  ModuleLattice dual = dual_alpha(lat, f).lattice;
  EXPECT_TRUE(same_lattice(dual, scaled(lat, Rational(1, 2))));
  EXPECT_EQ(shortest_vector(dual, f).norm, Rational(1, 2));
  EXPECT_EQ(det_alpha(lat, f) * det_alpha(dual, f), Rational(1, 16));
}

TEST(Lattice, DualProperties) {
  std::mt19937_64 rng(9);
  for (const auto* a : AlgebraSpec::catalog()) {
    for (int s = 0; s < 20; ++s) {
      const std::size_t d = 1 + static_cast<std::size_t>(s % 3);
      ModuleLattice lat = random_lattice(*a, d, d, 3, rng);
      AlphaForm f = AlphaForm::trace_one(*a);
      ModuleLattice dual = dual_alpha(lat, f).lattice;
      EXPECT_TRUE(same_lattice(dual_alpha(dual, f).lattice, lat)) << a->name();
      EXPECT_TRUE(same_lattice(dual, dual_alpha_closed_form(lat, f))) << a->name();
      for (const auto& b : lat.basis())
        for (const auto& w : dual.basis()) EXPECT_TRUE(is_integer(qpair(b, w, f))) << a->name();
      EXPECT_EQ(det_alpha(lat, f) * det_alpha(dual, f), pow_of(Rational(a->disc_abs()), -2 * static_cast<long>(d)))
          << a->name();
    }
  }
}

TEST(Lattice, CoordinatesOutsideSpan) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  ModuleLattice lat(zi, {{zi.one(), zi.zero()}});
  EXPECT_THROW(lat.coordinates({zi.zero(), zi.one()}), OutsideSpan);
  EXPECT_FALSE(lat.contains({el(zi, "[1/2, 0]"), zi.zero()}));
}
