#include <gtest/gtest.h>

#include "ordlat/errors.hpp"
#include "ordlat/forms.hpp"

using namespace ordlat;

namespace {

Element el(const AlgebraSpec& a, const char* lit) { return parse_element(a, lit); }

}  // namespace

TEST(Forms, InnerProducts) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  AlphaForm f = AlphaForm::trace_one(zi);
  Vector e1 = {zi.one(), zi.zero()}, e2 = {zi.zero(), zi.one()};
  EXPECT_TRUE(inner(e1, e2, f).is_zero());
  Vector x = {el(zi, "[1, 1]"), el(zi, "[2, 0]")};
  EXPECT_EQ(inner(x, x, f), el(zi, "[6, 0]"));
  EXPECT_EQ(qnorm_trace(x, f), 12);
  EXPECT_EQ(qnorm_trace(zero_vector(zi, 3), f), 0);

  const AlgebraSpec& s2 = AlgebraSpec::by_name("Q(sqrt2)");
  Element alpha = el(s2, "[2, 1]");
  AlphaForm g = AlphaForm::trace(alpha);
  EXPECT_EQ(inner({s2.one()}, {s2.one()}, g), alpha);

  const AlgebraSpec& s5 = AlgebraSpec::by_name("Q(sqrt5)");
  EXPECT_EQ(qnorm_trace({el(s5, "[0, 1]")}, AlphaForm::trace_one(s5)), 3);
}

TEST(Forms, PlainForm) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  EXPECT_EQ(qnorm_plain({zi.one(), zi.one(), zi.one()}), 3);
  EXPECT_EQ(qnorm_plain({zi.zero(), zi.zero(), el(zi, "[1, 1]")}), 2);
  const AlgebraSpec& h = AlgebraSpec::by_name("Hurwitz");
  EXPECT_EQ(qnorm_plain({el(h, "[0, 0, 0, 1]")}), 1);
  AlphaForm p = AlphaForm::plain(zi);
  EXPECT_EQ(qnorm({el(zi, "[1, 1]")}, p), 2);
  const AlgebraSpec& s2 = AlgebraSpec::by_name("Q(sqrt2)");
  EXPECT_THROW(qnorm_plain({el(s2, "[0, 1]")}), UnsupportedForm);
  EXPECT_THROW(AlphaForm::plain(s2), UnsupportedForm);
}

TEST(Forms, TotalPositivity) {
  const AlgebraSpec& s2 = AlgebraSpec::by_name("Q(sqrt2)");
  EXPECT_TRUE(is_totally_positive(el(s2, "[2, 1]")));
  EXPECT_FALSE(is_totally_positive(el(s2, "[1, 1]")));
  EXPECT_FALSE(is_totally_positive(el(AlgebraSpec::by_name("Q"), "[-1]")));
  EXPECT_THROW(AlphaForm::trace(el(s2, "[1, 1]")), NotTotallyPositive);
}

TEST(Forms, GsoOrthogonalityAndPythagoras) {
  for (const auto* a : AlgebraSpec::catalog()) {
    AlphaForm f = AlphaForm::trace_one(*a);
    std::vector<Vector> basis(3, zero_vector(*a, 3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Element e(*a);
        for (std::size_t t = 0; t < a->rank(); ++t) e[t] = Rational(static_cast<long>((i * 7 + j * 3 + t * 5) % 5) - 2);
        if (i == j) e += a->one() * Rational(3);
        basis[i][j] = e;
      }
    GSOData g = gso(basis, f);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) EXPECT_TRUE(inner(g.gso_vectors[i], g.gso_vectors[j], f).is_zero()) << a->name();
    Vector x = {a->one(), -a->one(), a->one() * Rational(2)};
    Vector v = zero_vector(*a, 3);
    for (std::size_t i = 0; i < 3; ++i) v = add(v, lmul(x[i], basis[i]));
    EXPECT_EQ(pythagoras(x, g, f), qnorm(v, f)) << a->name();
  }
}

TEST(Forms, OrthogonalInputIsUnchanged) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  std::vector<Vector> basis = {{el(zi, "[1, 1]"), zi.zero()}, {zi.zero(), el(zi, "[0, 3]")}};
  GSOData g = gso(basis, AlphaForm::trace_one(zi));
  EXPECT_EQ(g.gso_vectors, basis);
  EXPECT_TRUE(g.mu[1][0].is_zero());
}

TEST(Forms, DependentBasisRejected) {
  const AlgebraSpec& zi = AlgebraSpec::by_name("Q(i)");
  Vector b = {el(zi, "[1, 1]"), el(zi, "[2, 0]")};
  EXPECT_THROW(gso({b, lmul(el(zi, "[0, 1]"), b)}, AlphaForm::trace_one(zi)), RankDeficient);
}

TEST(Forms, RoundingMinimisesTheScalarForm) {
  const AlgebraSpec& w = AlgebraSpec::by_name("Q(sqrt-3)");
  AlphaForm f = AlphaForm::plain(w);
  Element c(w, {Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(scalar_qnorm(c - f.round(c), f), Rational(1, 3));
}

TEST(Forms, SubmultiplicativityAtAlphaOne) {
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 7) - 3;
  };
  for (const auto* a : AlgebraSpec::catalog()) {
    AlphaForm f = AlphaForm::trace_one(*a);
    for (int s = 0; s < 50; ++s) {
      Element x(*a);
      Vector v(2, a->zero());
      for (std::size_t t = 0; t < a->rank(); ++t) {
        x[t] = Rational(next());
        v[0][t] = Rational(next());
        v[1][t] = Rational(next());
      }
      EXPECT_LE(qnorm(lmul(x, v), f), scalar_qnorm(x, f) * qnorm(v, f)) << a->name();
    }
  }
  // Fails once alpha has small embeddings.
  const AlgebraSpec& q = AlgebraSpec::by_name("Q");
  AlphaForm small = AlphaForm::trace(q.one() * Rational(1, 4));
  EXPECT_GT(qnorm({q.one()}, small), scalar_qnorm(q.one(), small) * qnorm({q.one()}, small));
}
