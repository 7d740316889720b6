#include "ordlat/forms.hpp"

#include "ordlat/errors.hpp"

namespace ordlat {

Vector zero_vector(const AlgebraSpec& alg, std::size_t dim) { return Vector(dim, alg.zero()); }

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector dimensions differ");
  Vector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector dimensions differ");
  Vector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

Vector lmul(const Element& c, const Vector& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(c * v);
  return out;
}

bool is_zero(const Vector& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

bool is_integral(const Vector& x) {
  for (const auto& v : x)
    if (!v.is_integral()) return false;
  return true;
}

std::string to_string(const Vector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ' ';
    s += to_string(x[i]);
  }
  return s;
}

bool is_totally_positive(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  if (a != conj(a) || a.is_zero()) return false;
  switch (alg.kind()) {
    case AlgebraKind::Rational:
    case AlgebraKind::ImagQuadratic:
    case AlgebraKind::QuaternionHurwitz:
      return a[0] > 0;
    case AlgebraKind::RealQuadratic:
      return reduced_trace(a) > 0 && reduced_norm(a) > 0;
    case AlgebraKind::Cyclotomic8:
    case AlgebraKind::Cyclotomic12: {
      Rational t = reduced_trace(a) / 2;
      Rational n = (t * t - reduced_trace(a * a) / 2) / 2;
      return t > 0 && n > 0;
    }
  }
  return false;
}

AlphaForm::AlphaForm(const Element& alpha, bool plain) : alg_(&alpha.algebra()), alpha_(alpha), plain_(plain) {
  scale_ = plain ? Rational(1, alg_->n() * alg_->m()) : Rational(1);
  scale_.canonicalize();
  const std::size_t r = alg_->rank();
  RatMatrix g(r, std::vector<Rational>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) g[s][t] = scale_ * reduced_trace(alg_->basis(s) * alpha_ * conj(alg_->basis(t)));
  state_ = std::make_shared<State>(State{g, zlat::Enumerator(g)});
}

AlphaForm AlphaForm::trace(const Element& alpha) {
  if (!is_totally_positive(alpha)) throw NotTotallyPositive("alpha " + to_string(alpha) + " is not totally positive");
  return AlphaForm(alpha, false);
}

AlphaForm AlphaForm::plain(const AlgebraSpec& alg) {
  if (!alg.has_plain_form()) throw UnsupportedForm("plain form q is not rational-valued over " + alg.name());
  return AlphaForm(alg.one(), true);
}

std::string AlphaForm::describe() const { return plain_ ? "plain" : "trace"; }

Element AlphaForm::round(const Element& x) const {
  if (x.algebra_ptr() != alg_) throw AlgebraMismatch("rounding target from another algebra");
  zlat::Point p = state_->enumerator.closest(x.coords());
  std::vector<Rational> c(p.x.begin(), p.x.end());
  return Element(*alg_, c);
}

Element inner(const Vector& x, const Vector& y, const AlphaForm& form) {
  if (x.size() != y.size()) throw DimensionMismatch("inner product of vectors of different dimensions");
  Element s = form.algebra().zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    s += x[i] * form.alpha() * conj(y[i]);
  }
  return s;
}

Rational qnorm_trace(const Vector& x, const AlphaForm& form) { return reduced_trace(inner(x, x, form)); }

Rational qnorm_plain(const Vector& x) {
  if (x.empty()) return 0;
  const AlgebraSpec& alg = x.front().algebra();
  if (!alg.has_plain_form()) throw UnsupportedForm("plain form q is not rational-valued over " + alg.name());
  Element s = alg.zero();
  for (const auto& v : x) s += v * conj(v);
  return s[0];
}

Rational qnorm(const Vector& x, const AlphaForm& form) { return form.scale() * qnorm_trace(x, form); }

Rational qpair(const Vector& x, const Vector& y, const AlphaForm& form) {
  return form.scale() * reduced_trace(inner(x, y, form));
}

Rational scalar_qnorm(const Element& a, const AlphaForm& form) {
  return form.scale() * reduced_trace(a * form.alpha() * conj(a));
}

GSOData gso(const std::vector<Vector>& basis, const AlphaForm& form) {
  const AlgebraSpec& alg = form.algebra();
  const std::size_t d = basis.size();
  GSOData g;
  g.mu.assign(d, std::vector<Element>(d, alg.zero()));
  std::vector<Element> g_inv;
  for (std::size_t i = 0; i < d; ++i) {
    Vector v = basis[i];
    for (std::size_t j = 0; j < i; ++j) {
      Element m = inner(basis[i], g.gso_vectors[j], form) * g_inv[j];
      g.mu[i][j] = m;
      if (!m.is_zero()) v = sub(v, lmul(m, g.gso_vectors[j]));
    }
    g.mu[i][i] = alg.one();
    Element self = inner(v, v, form);
    if (self.is_zero()) throw RankDeficient("basis vectors are linearly dependent over K");
    g.gso_sq.push_back(form.scale() * reduced_trace(self));
    g.gram_self.push_back(self);
    g_inv.push_back(inverse(self));
    g.gso_vectors.push_back(std::move(v));
  }
  return g;
}

Vector gso_coefficients(const Vector& x, const GSOData& g) {
  const std::size_t d = x.size();
  Vector c = x;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = j + 1; i < d; ++i)
      if (!x[i].is_zero() && !g.mu[i][j].is_zero()) c[j] += x[i] * g.mu[i][j];
  return c;
}

Rational pythagoras(const Vector& x, const GSOData& g, const AlphaForm& form) {
  Vector c = gso_coefficients(x, g);
  Rational s = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) s += form.scale() * reduced_trace(c[j] * g.gram_self[j] * conj(c[j]));
  return s;
}

}  // namespace ordlat
