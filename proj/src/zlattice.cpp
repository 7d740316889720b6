#include "ordlat/zlattice.hpp"

#include <algorithm>
#include <cmath>

#include "ordlat/errors.hpp"

namespace ordlat::zlat {

bool point_less(const Point& a, const Point& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.x < b.x;
}

GramGSO gram_gso(const RatMatrix& g) {
  const std::size_t n = g.size();
  GramGSO out;
  out.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  out.b.assign(n, Rational(0));
  RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational v = g[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= out.mu[j][k] * r[i][k];
      r[i][j] = v;
      out.mu[i][j] = v / out.b[j];
    }
    Rational bi = g[i][i];
    for (std::size_t k = 0; k < i; ++k) bi -= out.mu[i][k] * r[i][k];
    if (bi <= 0) throw RankDeficient("Gram matrix is not positive definite");
    out.b[i] = bi;
    out.mu[i][i] = 1;
  }
  return out;
}

namespace {

class GramLLL {
 public:
  GramLLL(const RatMatrix& g, const Rational& delta)
      : n_(g.size()), delta_(delta), g_(g), mu_(n_, std::vector<Rational>(n_)), r_(n_, std::vector<Rational>(n_)), b_(n_) {
    u_.assign(n_, IntVec(n_, 0));
    ui_.assign(n_, IntVec(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) u_[i][i] = ui_[i][i] = 1;
  }

  LLLResult run() {
    if (n_ == 0) return {g_, u_, ui_};
    row(0);
    std::size_t k = 1;
    while (k < n_) {
      row(k);
      for (std::size_t jj = k; jj-- > 0;) size_reduce(k, jj);
      Rational lhs = b_[k];
      Rational rhs = (delta_ - mu_[k][k - 1] * mu_[k][k - 1]) * b_[k - 1];
      if (lhs < rhs) {
        swap(k);
        row(k - 1);
        k = std::max<std::size_t>(k - 1, 1);
      } else {
        ++k;
      }
    }
    return {g_, u_, ui_};
  }

 private:
  void row(std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational v = g_[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= mu_[j][k] * r_[i][k];
      r_[i][j] = v;
      mu_[i][j] = v / b_[j];
    }
    Rational bi = g_[i][i];
    for (std::size_t k = 0; k < i; ++k) bi -= mu_[i][k] * r_[i][k];
    if (bi <= 0) throw RankDeficient("Gram matrix is not positive definite");
    b_[i] = bi;
  }

  void size_reduce(std::size_t k, std::size_t j) {
    if (abs_of(mu_[k][j]) <= Rational(1, 2)) return;
    Integer qz = round_half_up(mu_[k][j]);
    if (!qz.fits_slong_p()) throw Error("LLL coefficient overflow");
    long q = qz.get_si();
    Rational qq(q);
    Rational gkj = g_[k][j];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      g_[k][i] -= qq * g_[j][i];
      g_[i][k] = g_[k][i];
    }
    g_[k][k] += qq * qq * g_[j][j] - 2 * qq * gkj;
    for (std::size_t i = 0; i < n_; ++i) {
      u_[i][k] -= q * u_[i][j];
      ui_[j][i] += q * ui_[k][i];
    }
    for (std::size_t l = 0; l < j; ++l) mu_[k][l] -= qq * mu_[j][l];
    mu_[k][j] -= qq;
    for (std::size_t l = 0; l < k; ++l) r_[k][l] = mu_[k][l] * b_[l];
  }

  void swap(std::size_t k) {
    std::swap(g_[k], g_[k - 1]);
    for (auto& rowv : g_) std::swap(rowv[k], rowv[k - 1]);
    for (auto& rowv : u_) std::swap(rowv[k], rowv[k - 1]);
    std::swap(ui_[k], ui_[k - 1]);
  }

  std::size_t n_;
  Rational delta_;
  RatMatrix g_, mu_, r_;
  std::vector<Rational> b_;
  IntMatrix u_, ui_;
};

Integer lcm_of_dens(const RatMatrix& m) {
  Integer l = 1;
  for (const auto& rowv : m)
    for (const auto& x : rowv) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace

LLLResult lll_gram(const RatMatrix& gram, const Rational& delta) { return GramLLL(gram, delta).run(); }

Enumerator::Enumerator(const RatMatrix& gram) : n_(gram.size()), gram_(gram), red_(lll_gram(gram)) {
  for (const auto& rowv : gram)
    if (rowv.size() != n_) throw DimensionMismatch("Gram matrix must be square");
  red_den_ = lcm_of_dens(red_.gram);
  red_int_.assign(n_, std::vector<Integer>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Rational v = red_.gram[i][j] * Rational(red_den_);
      red_int_[i][j] = v.get_num();
    }
  GramGSO gso = gram_gso(red_.gram);
  mu_.assign(n_, std::vector<double>(n_, 0.0));
  b_.assign(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    b_[i] = gso.b[i].get_d();
    for (std::size_t j = 0; j < i; ++j) mu_[i][j] = gso.mu[i][j].get_d();
  }
}

Rational Enumerator::norm(const IntVec& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != 0) s += gram_[i][j] * Rational(x[i]) * Rational(x[j]);
  }
  return s;
}

IntVec Enumerator::to_original(const std::vector<std::int64_t>& y) const {
  IntVec x(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) x[i] += red_.u[i][j] * y[j];
  return x;
}

namespace {

struct SearchState {
  std::size_t n;
  const std::vector<std::vector<double>>* mu;
  const std::vector<double>* b;
  const std::vector<std::vector<Integer>>* gint;
  std::vector<double> tc;
  std::vector<Integer> tscaled;  // T * t'
  Integer tden;                  // T
  Integer gden;
  bool shrink;
  bool allow_zero;
  Rational bound;
  double bound_d;
  std::vector<std::int64_t> y;
  std::vector<double> partial;
  std::vector<std::pair<std::vector<std::int64_t>, Rational>> hits;
  std::uint64_t nodes = 0;
  std::vector<Integer> z;

  double eff() const { return bound_d * (1.0 + 1e-9) + 1e-300; }

  Rational exact_norm() {
    for (std::size_t i = 0; i < n; ++i) z[i] = tden * y[i] - tscaled[i];
    Integer s = 0, t;
    for (std::size_t i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      t = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (z[j] != 0) t += (*gint)[i][j] * z[j];
      s += t * z[i];
    }
    Rational r(s, gden * tden * tden);
    r.canonicalize();
    return r;
  }

  void leaf() {
    if (!allow_zero && std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; })) return;
    Rational nv = exact_norm();
    if (nv > bound) return;
    if (shrink && nv < bound) {
      bound = nv;
      bound_d = nv.get_d();
      hits.clear();
    }
    hits.emplace_back(y, nv);
  }

  void recurse(std::size_t level) {
    ++nodes;
    double c = tc[level];
    for (std::size_t j = level + 1; j < n; ++j) c -= (*mu)[j][level] * (static_cast<double>(y[j]) - tc[j]);
    double above = level + 1 < n ? partial[level + 1] : 0.0;
    double bl = (*b)[level];
    double y0 = std::nearbyint(c);
    bool up = true, down = true;
    for (std::int64_t step = 0; up || down; ++step) {
      for (int side = 0; side < 2; ++side) {
        if (side == 1 && step == 0) continue;
        bool& ok = side == 0 ? up : down;
        if (!ok) continue;
        double yv = side == 0 ? y0 + static_cast<double>(step) : y0 - static_cast<double>(step);
        double d = yv - c;
        double p = above + bl * d * d;
        if (p > eff()) {
          ok = false;
          continue;
        }
        y[level] = static_cast<std::int64_t>(yv);
        partial[level] = p;
        if (level == 0) leaf();
        else recurse(level - 1);
      }
    }
    y[level] = 0;
  }
};

}  // namespace

void Enumerator::search(Mode mode, const std::vector<Rational>& target, Rational& bound, std::vector<Point>& out) const {
  SearchState st;
  st.n = n_;
  st.mu = &mu_;
  st.b = &b_;
  st.gint = &red_int_;
  st.gden = red_den_;
  st.shrink = mode != Mode::Collect;
  st.allow_zero = mode == Mode::Closest;
  st.y.assign(n_, 0);
  st.partial.assign(n_, 0.0);
  st.z.assign(n_, Integer(0));
  std::vector<Rational> tp(n_, Rational(0));
  if (mode == Mode::Closest) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (red_.u_inv[i][j] != 0) tp[i] += Rational(red_.u_inv[i][j]) * target[j];
  }
  st.tden = 1;
  for (const auto& v : tp) mpz_lcm(st.tden.get_mpz_t(), st.tden.get_mpz_t(), v.get_den_mpz_t());
  st.tscaled.resize(n_);
  st.tc.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    st.tscaled[i] = Rational(tp[i] * Rational(st.tden)).get_num();
    st.tc[i] = tp[i].get_d();
  }
  st.bound = bound;
  st.bound_d = bound.get_d();
  if (n_ > 0) st.recurse(n_ - 1);
  nodes_ += st.nodes;
  bound = st.bound;
  out.clear();
  for (auto& h : st.hits) out.push_back({to_original(h.first), h.second});
  std::sort(out.begin(), out.end(), point_less);
}

std::vector<Point> Enumerator::below(const Rational& bound) const {
  std::vector<Point> out;
  Rational b = bound;
  if (bound < 0) return out;
  search(Mode::Collect, {}, b, out);
  return out;
}

Point Enumerator::shortest() const {
  if (n_ == 0) throw RankDeficient("shortest vector of a zero-dimensional lattice");
  Rational b = red_.gram[0][0];
  for (std::size_t i = 1; i < n_; ++i) b = std::min(b, red_.gram[i][i]);
  std::vector<Point> out;
  search(Mode::Shortest, {}, b, out);
  return out.front();
}

Point Enumerator::closest(const std::vector<Rational>& target) const {
  if (target.size() != n_) throw DimensionMismatch("target dimension differs from lattice dimension");
  if (n_ == 0) return {{}, Rational(0)};
  // Babai rounding in the reduced coordinates gives the initial radius.
  std::vector<Rational> tp(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (red_.u_inv[i][j] != 0) tp[i] += Rational(red_.u_inv[i][j]) * target[j];
  std::vector<double> tc(n_);
  for (std::size_t i = 0; i < n_; ++i) tc[i] = tp[i].get_d();
  std::vector<std::int64_t> y(n_, 0);
  for (std::size_t level = n_; level-- > 0;) {
    double c = tc[level];
    for (std::size_t j = level + 1; j < n_; ++j) c -= mu_[j][level] * (static_cast<double>(y[j]) - tc[j]);
    y[level] = static_cast<std::int64_t>(std::nearbyint(c));
  }
  IntVec x0 = to_original(y);
  Rational b = 0;
  {
    std::vector<Rational> diff(n_);
    for (std::size_t i = 0; i < n_; ++i) diff[i] = Rational(x0[i]) - target[i];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) b += gram_[i][j] * diff[i] * diff[j];
  }
  std::vector<Point> out;
  search(Mode::Closest, target, b, out);
  return out.front();
}

}  // namespace ordlat::zlat
