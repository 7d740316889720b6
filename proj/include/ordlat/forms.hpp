#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordlat/algebra.hpp"
#include "ordlat/zlattice.hpp"

namespace ordlat {

using Vector = std::vector<Element>;

Vector zero_vector(const AlgebraSpec& alg, std::size_t dim);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
// c * x, scalar on the left
Vector lmul(const Element& c, const Vector& x);
bool is_zero(const Vector& x);
bool is_integral(const Vector& x);
std::string to_string(const Vector& x);

bool is_totally_positive(const Element& a);

// q_alpha(x) = scale * tr(sum x_i alpha x_i^*). The trace form has scale 1; the plain form
// uses alpha = 1 and scale 1/(n m), giving q(x) = sum x_i x_i^*.
class AlphaForm {
 public:
  static AlphaForm trace(const Element& alpha);
  static AlphaForm trace_one(const AlgebraSpec& alg) { return trace(alg.one()); }
  static AlphaForm plain(const AlgebraSpec& alg);

  const AlgebraSpec& algebra() const { return *alg_; }
  const Element& alpha() const { return alpha_; }
  bool is_plain() const { return plain_; }
  const Rational& scale() const { return scale_; }
  std::string describe() const;

  // Gram matrix of the scalar form on the Z-basis of O.
  const RatMatrix& scalar_gram() const { return state_->gram; }
  // Exact minimiser of the scalar form q(x - y) over y in O, ties lexicographic.
  Element round(const Element& x) const;

 private:
  struct State {
    RatMatrix gram;
    zlat::Enumerator enumerator;
  };
  AlphaForm(const Element& alpha, bool plain);

  const AlgebraSpec* alg_;
  Element alpha_;
  bool plain_;
  Rational scale_;
  std::shared_ptr<const State> state_;
};

// sum x_i alpha y_i^*
Element inner(const Vector& x, const Vector& y, const AlphaForm& form);
// tr(inner(x, x)) without the plain-form scale
Rational qnorm_trace(const Vector& x, const AlphaForm& form);
// sum x_i x_i^*, defined when it is always rational
Rational qnorm_plain(const Vector& x);
// The form's own value: scale * tr(inner(x, x))
Rational qnorm(const Vector& x, const AlphaForm& form);
Rational qpair(const Vector& x, const Vector& y, const AlphaForm& form);
Rational scalar_qnorm(const Element& a, const AlphaForm& form);

struct GSOData {
  std::vector<Vector> gso_vectors;
  std::vector<std::vector<Element>> mu;
  std::vector<Rational> gso_sq;
  std::vector<Element> gram_self;
};

GSOData gso(const std::vector<Vector>& basis, const AlphaForm& form);
// c_j = x_j + sum_{i>j} x_i mu_{i,j}
Vector gso_coefficients(const Vector& x, const GSOData& g);
// sum_j q(c_j b_j(j))
Rational pythagoras(const Vector& x, const GSOData& g, const AlphaForm& form);

}  // namespace ordlat
