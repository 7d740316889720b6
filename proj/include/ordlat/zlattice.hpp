#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ordlat/rational.hpp"

namespace ordlat::zlat {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

struct Point {
  IntVec x;
  Rational norm;
};

// Orders points by (norm, lexicographic coordinates).
bool point_less(const Point& a, const Point& b);

struct LLLResult {
  RatMatrix gram;  // U^T G U
  IntMatrix u;     // columns are the reduced basis in the input coordinates
  IntMatrix u_inv;
};

LLLResult lll_gram(const RatMatrix& gram, const Rational& delta = Rational(99, 100));

// Exact Gram-Schmidt data of a positive definite Gram matrix: mu[i][j] for j < i, b[i] > 0.
struct GramGSO {
  RatMatrix mu;
  std::vector<Rational> b;
};
GramGSO gram_gso(const RatMatrix& gram);

// Enumerates a positive definite integral quadratic form x^T G x (G rational).
// Pruning runs in double precision with a relative safety margin; every accepted point is
// re-evaluated exactly, so results are exact.
class Enumerator {
 public:
  explicit Enumerator(const RatMatrix& gram);

  std::size_t dim() const { return n_; }
  const RatMatrix& gram() const { return gram_; }
  Rational norm(const IntVec& x) const;

  // All nonzero x with x^T G x <= bound, sorted by point_less.
  std::vector<Point> below(const Rational& bound) const;
  Point shortest() const;
  // Minimises (x - t)^T G (x - t); ties broken lexicographically; norm holds the distance.
  Point closest(const std::vector<Rational>& target) const;

  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  enum class Mode { Collect, Shortest, Closest };
  void search(Mode mode, const std::vector<Rational>& target, Rational& bound, std::vector<Point>& out) const;
  IntVec to_original(const std::vector<std::int64_t>& y) const;

  std::size_t n_;
  RatMatrix gram_;
  LLLResult red_;
  std::vector<std::vector<Integer>> red_int_;
  Integer red_den_;
  std::vector<std::vector<double>> mu_;
  std::vector<double> b_;
  mutable std::uint64_t nodes_ = 0;
};

}  // namespace ordlat::zlat
