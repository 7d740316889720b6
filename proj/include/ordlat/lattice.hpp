#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordlat/forms.hpp"
#include "ordlat/zlattice.hpp"

namespace ordlat {

struct ElementaryOp {
  enum class Kind { Swap, Scale, Add };
  Kind kind;
  std::size_t target;  // 0-based
  std::size_t source;  // swap partner or added vector index
  Element factor;      // unit for Scale, multiplier for Add

  static ElementaryOp swap(std::size_t i, std::size_t j);
  static ElementaryOp scale(std::size_t k, const Element& u);
  // b_k += x * b_i
  static ElementaryOp add(std::size_t k, const Element& x, std::size_t i);

  // One line, 1-based indices: "swap 1 2", "scale 1 [0, 1]", "add 2 [1, 1] 1".
  std::string to_string() const;
  static ElementaryOp parse(const AlgebraSpec& alg, const std::string& line);
};

class ModuleLattice {
 public:
  ModuleLattice(const AlgebraSpec& alg, std::vector<Vector> basis);

  const AlgebraSpec& algebra() const { return *alg_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient() const { return dim_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const Vector& operator[](std::size_t i) const { return basis_[i]; }

  // sum c_i b_i
  Vector combine(const Vector& coeffs) const;
  // K-coordinates x with v = sum x_i b_i; throws OutsideSpan.
  Vector coordinates(const Vector& v) const;
  bool contains(const Vector& v) const;

  friend bool operator==(const ModuleLattice& a, const ModuleLattice& b) { return a.basis_ == b.basis_; }

 private:
  const AlgebraSpec* alg_;
  std::vector<Vector> basis_;
  std::size_t dim_;
  std::shared_ptr<const GSOData> gso_;
};

ModuleLattice identity_lattice(const AlgebraSpec& alg, std::size_t d);
ModuleLattice scaled(const ModuleLattice& lat, const Rational& t);

// Apply the op to the lattice basis.
ModuleLattice apply_elementary(const ModuleLattice& lat, const ElementaryOp& op);
ModuleLattice apply_log(const ModuleLattice& lat, const std::vector<ElementaryOp>& ops);
// Update a coefficient row (w.r.t. the old basis) to the new basis.
void transform_coefficients(Vector& coeffs, const ElementaryOp& op);

// Same point set.
bool same_lattice(const ModuleLattice& a, const ModuleLattice& b);

// Rank over K of a set of vectors (left span).
std::size_t k_rank(const std::vector<Vector>& rows);

class KEchelon {
 public:
  // Returns false, leaving the echelon untouched, when v is in the left K-span of the rows so far.
  bool insert(const Vector& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// S given by O-coefficient rows with respect to the current basis.
bool is_primitive_system(const ModuleLattice& lat, const std::vector<Vector>& coeff_rows);

struct Completion {
  ModuleLattice lattice;
  std::vector<ElementaryOp> ops;
};
Completion complete_to_basis(const ModuleLattice& lat, const std::vector<Vector>& coeff_rows);

// prod_i nrd(<b_i(i), b_i(i)>_alpha)^m; the plain scale is not applied.
Rational det_alpha(const ModuleLattice& lat, const AlphaForm& form);
// Independent route: det over K then the norm (commutative), or the real Gram of {e b_i} (quaternions).
Rational det_alpha_crosscheck(const ModuleLattice& lat, const AlphaForm& form);

struct ZLatticeView {
  std::size_t d = 0;
  std::size_t r = 0;
  RatMatrix gram;
  zlat::IntVec to_z(const Vector& coeffs) const;
  Vector from_z(const AlgebraSpec& alg, const zlat::IntVec& z) const;
};
// Z-basis {e_t b_i} indexed i*r + t, Gram under the form.
ZLatticeView zview(const ModuleLattice& lat, const AlphaForm& form);

// Inner-product Gram matrix over K: G_ij = <b_i, b_j>_alpha.
std::vector<Vector> k_gram(const ModuleLattice& lat, const AlphaForm& form);
// Inverse of a square matrix over K.
std::vector<Vector> k_inverse(const std::vector<Vector>& m);

struct DualLattice {
  ModuleLattice lattice;
};
DualLattice dual_alpha(const ModuleLattice& lat, const AlphaForm& form);
ModuleLattice dual_alpha_closed_form(const ModuleLattice& lat, const AlphaForm& form);

}  // namespace ordlat
