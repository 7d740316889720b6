#include <gtest/gtest.h>

#include <algorithm>

#include "ordlat/algebra.hpp"
#include "ordlat/errors.hpp"

using namespace ordlat;

namespace {

Element el(const char* alg, const char* lit) { return parse_element(AlgebraSpec::by_name(alg), lit); }

}  // namespace

TEST(Algebra, CatalogShapes) {
  auto cat = AlgebraSpec::catalog();
  EXPECT_EQ(cat.size(), 13u);
  for (const auto* a : cat) EXPECT_EQ(a->rank(), static_cast<std::size_t>(a->n() * a->m() * a->m()));
  EXPECT_EQ(AlgebraSpec::by_name("Q(i)").disc_abs(), 4);
  EXPECT_EQ(AlgebraSpec::by_name("Hurwitz").disc_abs(), 4);
  EXPECT_EQ(AlgebraSpec::by_name("Q(sqrt-3)").euclidean_minimum(), Rational(1, 3));
  EXPECT_EQ(&AlgebraSpec::by_name("Q(i)"), &AlgebraSpec::by_name("Q(sqrt-1)"));
  EXPECT_THROW(AlgebraSpec::by_name("Q(sqrt7)"), ParseError);
}

TEST(Algebra, Multiplication) {
  EXPECT_EQ(el("Q(i)", "[1, 1]") * el("Q(i)", "[1, -1]"), el("Q(i)", "[2, 0]"));
  Element i = el("Hurwitz", "[0, 1, 0, 0]"), j = el("Hurwitz", "[0, 0, 1, 0]");
  Element k = el("Hurwitz", "[-1, -1, -1, 2]");
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  Element z = el("Q(zeta8)", "[0, 1, 0, 0]"), z3 = el("Q(zeta8)", "[0, 0, 0, 1]");
  EXPECT_EQ(z * z3, -AlgebraSpec::by_name("Q(zeta8)").one());
  EXPECT_THROW(el("Q(i)", "[1, 0]") * el("Q(sqrt2)", "[1, 0]"), AlgebraMismatch);
}

TEST(Algebra, ConjugationTraceNorm) {
  EXPECT_EQ(conj(el("Q(i)", "[3, 2]")), el("Q(i)", "[3, -2]"));
  Element h = el("Hurwitz", "[0, 0, 0, 2]");  // 1+i+j+k
  EXPECT_EQ(conj(h), el("Hurwitz", "[2, 0, 0, -2]"));
  EXPECT_EQ(conj(el("Q(sqrt2)", "[1, 1]")), el("Q(sqrt2)", "[1, 1]"));
  EXPECT_EQ(reduced_trace(el("Q(i)", "[6, 0]")), 12);
  EXPECT_EQ(reduced_trace(h), 2);
  EXPECT_EQ(reduced_trace(el("Q(sqrt5)", "[0, 1]")), 1);
  EXPECT_EQ(reduced_norm(el("Q(i)", "[1, 1]")), 2);
  EXPECT_EQ(reduced_norm(el("Hurwitz", "[0, 0, 0, 1]")), 1);
  EXPECT_EQ(reduced_norm(el("Q(sqrt6)", "[2, -1]")), -2);
}

TEST(Algebra, NormIsMultiplicative) {
  for (const auto* a : AlgebraSpec::catalog()) {
    Element x(*a), y(*a);
    for (std::size_t t = 0; t < a->rank(); ++t) {
      x[t] = Rational(static_cast<long>(t) + 1);
      y[t] = Rational(2 - static_cast<long>(t), 3);
    }
    EXPECT_EQ(reduced_norm(x * y), reduced_norm(x) * reduced_norm(y)) << a->name();
    EXPECT_EQ(x * inverse(x), a->one()) << a->name();
    EXPECT_EQ(conj(x * y), conj(y) * conj(x)) << a->name();
  }
}

TEST(Algebra, EuclideanDivision) {
  auto r = euclidean_divide(el("Q(i)", "[5, 0]"), el("Q(i)", "[1, 2]"));
  EXPECT_EQ(r.q, el("Q(i)", "[1, -2]"));
  EXPECT_TRUE(r.r.is_zero());
  auto z = euclidean_divide(el("Q", "[7]"), el("Q", "[2]"));
  EXPECT_EQ(z.q, el("Q", "[4]"));
  EXPECT_EQ(z.r, el("Q", "[-1]"));
  auto h = euclidean_divide(el("Hurwitz", "[2, 0, 0, 0]"), el("Hurwitz", "[1, 1, 0, 0]"));
  EXPECT_EQ(h.q, el("Hurwitz", "[1, -1, 0, 0]"));
  EXPECT_TRUE(h.r.is_zero());
  EXPECT_THROW(euclidean_divide(el("Q(i)", "[1, 0]"), el("Q(i)", "[0, 0]")), DivisionByZero);
  for (const auto* a : AlgebraSpec::catalog()) {
    Element x(*a), y(*a);
    for (std::size_t t = 0; t < a->rank(); ++t) {
      x[t] = Rational(7 * static_cast<long>(t) - 3);
      y[t] = Rational(static_cast<long>(t % 2) + 1);
    }
    auto d = euclidean_divide(x, y);
    EXPECT_EQ(d.q * y + d.r, x) << a->name();
    EXPECT_LT(abs_of(reduced_norm(d.r)), abs_of(reduced_norm(y))) << a->name();
  }
}

TEST(Algebra, Gcd) {
  Element g = right_gcd(el("Q(i)", "[2, 0]"), el("Q(i)", "[1, 1]"));
  EXPECT_EQ(reduced_norm(g), 2);
  EXPECT_TRUE(is_unit(right_gcd(el("Q(sqrt2)", "[1, 1]"), el("Q(sqrt2)", "[3, 0]"))));
  EXPECT_EQ(right_gcd(el("Q", "[0]"), el("Q", "[5]")), el("Q", "[5]"));
  EXPECT_THROW(right_gcd(el("Q", "[0]"), el("Q", "[0]")), UndefinedGcd);
  Element a = el("Hurwitz", "[3, 1, 0, 0]"), b = el("Hurwitz", "[0, 1, 1, 0]");
  Element gh = right_gcd(a, b);
  EXPECT_TRUE(right_divides(gh, a));
  EXPECT_TRUE(right_divides(gh, b));
}

TEST(Algebra, Units) {
  EXPECT_TRUE(is_unit(el("Q(sqrt5)", "[0, 1]")));
  EXPECT_FALSE(is_unit(el("Q(i)", "[1, 1]")));
  EXPECT_TRUE(is_unit(el("Hurwitz", "[0, 0, 0, 1]")));
  EXPECT_EQ(unit_iter(AlgebraSpec::by_name("Q(i)"), 0).size(), 4u);
  auto u2 = unit_iter(AlgebraSpec::by_name("Q(sqrt2)"), 1);
  EXPECT_EQ(u2.size(), 6u);
  EXPECT_NE(std::find(u2.begin(), u2.end(), el("Q(sqrt2)", "[-1, 1]")), u2.end());
  EXPECT_EQ(unit_iter(AlgebraSpec::by_name("Q(zeta12)"), 1).size(), 36u);
  EXPECT_EQ(AlgebraSpec::by_name("Hurwitz").torsion_units().size(), 24u);
}

TEST(Algebra, RoundingDefectMatchesEuclideanMinimum) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  Element c(zi, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(reduced_norm(c - round_to_order(c)), Rational(1, 2));
  const AlgebraSpec& q = AlgebraSpec::by_name("Q");
  Element h(q, {Rational(1, 2)});
  EXPECT_EQ(abs_of(reduced_norm(h - round_to_order(h))), Rational(1, 2));
  const AlgebraSpec& w = AlgebraSpec::by_name("Q(sqrt-3)");
  // Centroid of the triangle 0, 1, omega in the basis 1, omega.
  Element centre(w, {Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(reduced_norm(centre - round_to_order(centre)), Rational(1, 3));
}

TEST(Algebra, ParseAndPrint) {
  const AlgebraSpec& h = AlgebraSpec::by_name("Hurwitz");
  Element x = parse_element(h, "[1/2, -3, 0, 7]");
  EXPECT_EQ(parse_element(h, to_string(x)), x);
  EXPECT_THROW(parse_element(h, "[1, 2]"), ParseError);
  EXPECT_THROW(parse_element(h, "1, 2, 3, 4"), ParseError);
}
