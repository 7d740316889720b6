#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlat/rational.hpp"

namespace ordlat {

enum class AlgebraKind { Rational, ImagQuadratic, RealQuadratic, Cyclotomic8, Cyclotomic12, QuaternionHurwitz };

class AlgebraSpec;

// An element of K written in the Z-basis of the order O.
class Element {
 public:
  Element() = default;
  explicit Element(const AlgebraSpec& alg);
  Element(const AlgebraSpec& alg, std::vector<Rational> coords);

  const AlgebraSpec& algebra() const;
  const AlgebraSpec* algebra_ptr() const { return alg_; }
  std::size_t rank() const { return c_.size(); }
  const std::vector<Rational>& coords() const { return c_; }
  const Rational& operator[](std::size_t t) const { return c_[t]; }
  Rational& operator[](std::size_t t) { return c_[t]; }

  bool is_zero() const;
  bool is_integral() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  const AlgebraSpec* alg_ = nullptr;
  std::vector<Rational> c_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Element& a, const Element& b);
Element operator*(Element a, const Rational& s);
Element operator*(const Rational& s, Element a);

class AlgebraSpec {
 public:
  static const AlgebraSpec& get(AlgebraKind kind, int d = 0);
  // Names: Q, Q(i), Q(sqrt-1), Q(sqrt-2), ..., Q(sqrt6), Q(zeta8), Q(zeta12), Hurwitz.
  static const AlgebraSpec& by_name(std::string_view name);
  static std::vector<const AlgebraSpec*> catalog();

  AlgebraKind kind() const { return kind_; }
  int d() const { return d_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return r_; }
  int n() const { return n_; }
  int m() const { return m_; }
  long disc_abs() const { return disc_abs_; }
  const Rational& euclidean_minimum() const { return euclid_min_; }
  long smallest_nonunit_norm() const { return nrd_l_; }
  const Element& smallest_nonunit() const { return l_; }
  const std::vector<Element>& unit_generators() const { return unit_gens_; }
  const std::vector<Element>& torsion_units() const { return torsion_; }
  const std::optional<Element>& fundamental_unit() const { return fund_; }
  const Element& different() const { return different_; }
  bool is_commutative() const { return kind_ != AlgebraKind::QuaternionHurwitz; }
  // Sum v_i v_i^* is rational exactly for these kinds.
  bool has_plain_form() const;

  long structure(std::size_t s, std::size_t t, std::size_t u) const { return mult_[(s * r_ + t) * r_ + u]; }
  const std::vector<std::vector<long>>& involution_matrix() const { return invol_; }
  const Rational& basis_trace(std::size_t t) const { return basis_trace_[t]; }
  // Human-readable names of the Z-basis elements of O.
  const std::vector<std::string>& basis_labels() const { return labels_; }

  Element zero() const { return Element(*this); }
  Element one() const;
  Element basis(std::size_t t) const;
  Element scalar(const Rational& x) const;

 private:
  AlgebraSpec(AlgebraKind kind, int d);
  void build_number_field(const std::vector<long>& reduction, const std::vector<long>& conj_theta);
  void build_hurwitz();
  void finish();

  AlgebraKind kind_;
  int d_;
  std::string name_;
  std::size_t r_ = 1;
  int n_ = 1, m_ = 1;
  long disc_abs_ = 1;
  Rational euclid_min_;
  long nrd_l_ = 2;
  Element l_;
  std::vector<long> mult_;
  std::vector<std::vector<long>> invol_;
  std::vector<Rational> basis_trace_;
  std::vector<std::string> labels_;
  std::vector<Element> unit_gens_;
  std::vector<Element> torsion_;
  std::optional<Element> fund_;
  Element different_;
};

Element conj(const Element& a);
Rational reduced_trace(const Element& a);
// Field norm for number fields, a*a^* for the quaternion order.
Rational reduced_norm(const Element& a);
Element inverse(const Element& a);
bool is_unit(const Element& a);

// Value minimised by rounding and decreased by division: |nrd|.
Rational euclidean_value(const Element& a);
Element round_to_order(const Element& a);

struct DivResult {
  Element q;
  Element r;
};
// a = q*b + r
DivResult euclidean_divide(const Element& a, const Element& b);
// a = b*q + r
DivResult euclidean_divide_right(const Element& a, const Element& b);

// g with O*g = O*a + O*b, normalised up to left unit multiples.
Element right_gcd(const Element& a, const Element& b);
// g with g*O = a*O + b*O, normalised up to right unit multiples.
Element left_gcd(const Element& a, const Element& b);
// a = x*g for some x in O
bool right_divides(const Element& g, const Element& a);
// a = g*x for some x in O
bool left_divides(const Element& g, const Element& a);

std::vector<Element> unit_iter(const AlgebraSpec& alg, int bound);

std::string to_string(const Element& a);
Element parse_element(const AlgebraSpec& alg, std::string_view text);

}  // namespace ordlat
