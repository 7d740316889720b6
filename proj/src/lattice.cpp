#include "ordlat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "ordlat/errors.hpp"

namespace ordlat {

// ---------------------------------------------------------------------------
// Elementary operations

ElementaryOp ElementaryOp::swap(std::size_t i, std::size_t j) { return {Kind::Swap, i, j, Element()}; }
ElementaryOp ElementaryOp::scale(std::size_t k, const Element& u) { return {Kind::Scale, k, k, u}; }
ElementaryOp ElementaryOp::add(std::size_t k, const Element& x, std::size_t i) { return {Kind::Add, k, i, x}; }

std::string ElementaryOp::to_string() const {
  switch (kind) {
    case Kind::Swap:
      return "swap " + std::to_string(target + 1) + " " + std::to_string(source + 1);
    case Kind::Scale:
      return "scale " + std::to_string(target + 1) + " " + ordlat::to_string(factor);
    case Kind::Add:
      return "add " + std::to_string(target + 1) + " " + ordlat::to_string(factor) + " " + std::to_string(source + 1);
  }
  return {};
}

ElementaryOp ElementaryOp::parse(const AlgebraSpec& alg, const std::string& line) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  auto index = [&](const std::string& tok) -> std::size_t {
    try {
      long v = std::stol(tok);
      if (v < 1) throw ParseError("op index must be positive: " + line);
      return static_cast<std::size_t>(v - 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad op index in '" + line + "'");
    }
  };
  auto literal = [&]() {
    std::size_t b = line.find('['), e = line.find(']');
    if (b == std::string::npos || e == std::string::npos) throw ParseError("missing element literal in '" + line + "'");
    return std::make_pair(parse_element(alg, line.substr(b, e - b + 1)), line.substr(e + 1));
  };
  if (word == "swap") {
    std::string a, b;
    if (!(in >> a >> b)) throw ParseError("malformed swap '" + line + "'");
    return swap(index(a), index(b));
  }
  if (word == "scale" || word == "add") {
    std::string k;
    if (!(in >> k)) throw ParseError("malformed op '" + line + "'");
    auto [x, rest] = literal();
    if (word == "scale") return scale(index(k), x);
    std::istringstream tail(rest);
    std::string i;
    if (!(tail >> i)) throw ParseError("malformed add '" + line + "'");
    return add(index(k), x, index(i));
  }
  throw ParseError("unknown elementary op '" + line + "'");
}

// ---------------------------------------------------------------------------
// ModuleLattice

ModuleLattice::ModuleLattice(const AlgebraSpec& alg, std::vector<Vector> basis)
    : alg_(&alg), basis_(std::move(basis)), dim_(basis_.empty() ? 0 : basis_.front().size()) {
  if (basis_.empty()) throw RankDeficient("a lattice needs at least one basis vector");
  if (basis_.size() > dim_) throw RankDeficient("more basis vectors than the ambient dimension");
  for (const auto& v : basis_) {
    if (v.size() != dim_) throw DimensionMismatch("basis vectors have different lengths");
    for (const auto& x : v)
      if (x.algebra_ptr() != alg_) throw AlgebraMismatch("basis entry from another algebra");
  }
  gso_ = std::make_shared<GSOData>(gso(basis_, AlphaForm::trace_one(alg)));
}

Vector ModuleLattice::combine(const Vector& coeffs) const {
  if (coeffs.size() != rank()) throw DimensionMismatch("coefficient vector has wrong length");
  Vector v = zero_vector(*alg_, dim_);
  for (std::size_t i = 0; i < rank(); ++i)
    if (!coeffs[i].is_zero()) v = add(v, lmul(coeffs[i], basis_[i]));
  return v;
}

Vector ModuleLattice::coordinates(const Vector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector has wrong ambient dimension");
  AlphaForm one = AlphaForm::trace_one(*alg_);
  const GSOData& g = *gso_;
  const std::size_t d = rank();
  Vector c(d, alg_->zero());
  Vector residual = v;
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = inner(v, g.gso_vectors[j], one) * inverse(g.gram_self[j]);
    if (!c[j].is_zero()) residual = sub(residual, lmul(c[j], g.gso_vectors[j]));
  }
  if (!is_zero(residual)) throw OutsideSpan("vector is not in the K-span of the basis");
  Vector x(d, alg_->zero());
  for (std::size_t j = d; j-- > 0;) {
    Element s = c[j];
    for (std::size_t i = j + 1; i < d; ++i)
      if (!x[i].is_zero() && !g.mu[i][j].is_zero()) s -= x[i] * g.mu[i][j];
    x[j] = s;
  }
  return x;
}

bool ModuleLattice::contains(const Vector& v) const {
  try {
    return is_integral(coordinates(v));
  } catch (const OutsideSpan&) {
    return false;
  }
}

ModuleLattice identity_lattice(const AlgebraSpec& alg, std::size_t d) {
  std::vector<Vector> b(d, zero_vector(alg, d));
  for (std::size_t i = 0; i < d; ++i) b[i][i] = alg.one();
  return ModuleLattice(alg, b);
}

ModuleLattice scaled(const ModuleLattice& lat, const Rational& t) {
  std::vector<Vector> b = lat.basis();
  for (auto& v : b)
    for (auto& x : v) x *= t;
  return ModuleLattice(lat.algebra(), b);
}

ModuleLattice apply_elementary(const ModuleLattice& lat, const ElementaryOp& op) {
  const std::size_t d = lat.rank();
  if (op.target >= d || op.source >= d) throw IndexError("elementary op index out of range");
  std::vector<Vector> b = lat.basis();
  switch (op.kind) {
    case ElementaryOp::Kind::Swap:
      std::swap(b[op.target], b[op.source]);
      break;
    case ElementaryOp::Kind::Scale:
      if (op.factor.algebra_ptr() != &lat.algebra() || !is_unit(op.factor))
        throw NonUnitScaling("scaling factor " + to_string(op.factor) + " is not a unit of O");
      b[op.target] = lmul(op.factor, b[op.target]);
      break;
    case ElementaryOp::Kind::Add:
      if (op.target == op.source) throw IndexError("add op needs two distinct indices");
      if (op.factor.algebra_ptr() != &lat.algebra() || !op.factor.is_integral())
        throw Error("add op multiplier must lie in O");
      b[op.target] = add(b[op.target], lmul(op.factor, b[op.source]));
      break;
  }
  return ModuleLattice(lat.algebra(), b);
}

ModuleLattice apply_log(const ModuleLattice& lat, const std::vector<ElementaryOp>& ops) {
  ModuleLattice cur = lat;
  for (const auto& op : ops) cur = apply_elementary(cur, op);
  return cur;
}

void transform_coefficients(Vector& c, const ElementaryOp& op) {
  switch (op.kind) {
    case ElementaryOp::Kind::Swap:
      std::swap(c[op.target], c[op.source]);
      break;
    case ElementaryOp::Kind::Scale:
      c[op.target] = c[op.target] * inverse(op.factor);
      break;
    case ElementaryOp::Kind::Add:
      if (!c[op.target].is_zero()) c[op.source] -= c[op.target] * op.factor;
      break;
  }
}

bool same_lattice(const ModuleLattice& a, const ModuleLattice& b) {
  if (&a.algebra() != &b.algebra() || a.rank() != b.rank() || a.ambient() != b.ambient()) return false;
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  for (const auto& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

bool KEchelon::insert(const Vector& v0) {
  Vector v = v0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Element& x = v[pivots_[k]];
    if (!x.is_zero()) v = sub(v, lmul(x, rows_[k]));
  }
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    rows_.push_back(lmul(inverse(v[p]), v));
    pivots_.push_back(p);
    return true;
  }
  return false;
}

std::size_t k_rank(const std::vector<Vector>& rows) {
  KEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

// ---------------------------------------------------------------------------
// Primitive systems

namespace {

// Column reduction of row `row` over columns [from, d) by right division; returns the pivot column
// and records the basis operations. Throws when the tail is zero.
std::size_t reduce_tail(std::vector<Vector>& rows, std::size_t row, std::size_t from, std::vector<ElementaryOp>* ops) {
  const std::size_t d = rows[row].size();
  while (true) {
    std::size_t p = d;
    Rational best;
    for (std::size_t j = from; j < d; ++j) {
      const Element& x = rows[row][j];
      if (x.is_zero()) continue;
      Rational v = euclidean_value(x);
      if (p == d || v < best) {
        p = j;
        best = v;
      }
    }
    if (p == d) throw RankDeficient("system is linearly dependent over K");
    bool changed = false;
    for (std::size_t j = from; j < d; ++j) {
      if (j == p || rows[row][j].is_zero()) continue;
      DivResult qr = euclidean_divide_right(rows[row][j], rows[row][p]);
      ElementaryOp op = ElementaryOp::add(p, qr.q, j);
      for (auto& r : rows) transform_coefficients(r, op);
      if (ops) ops->push_back(op);
      changed = true;
    }
    if (!changed) return p;
  }
}

void check_rows(const ModuleLattice& lat, const std::vector<Vector>& rows) {
  for (const auto& r : rows) {
    if (r.size() != lat.rank()) throw DimensionMismatch("coefficient row has wrong length");
    if (!is_integral(r)) throw Error("system members must be lattice vectors (integral coefficients)");
  }
  if (k_rank(rows) != rows.size()) throw RankDeficient("system is linearly dependent over K");
}

}  // namespace

bool is_primitive_system(const ModuleLattice& lat, const std::vector<Vector>& coeff_rows) {
  check_rows(lat, coeff_rows);
  std::vector<Vector> rows = coeff_rows;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    std::size_t p = reduce_tail(rows, s, s, nullptr);
    if (!is_unit(rows[s][p])) return false;
    if (p != s) {
      ElementaryOp op = ElementaryOp::swap(s, p);
      for (auto& r : rows) transform_coefficients(r, op);
    }
  }
  return true;
}

Completion complete_to_basis(const ModuleLattice& lat, const std::vector<Vector>& coeff_rows) {
  check_rows(lat, coeff_rows);
  std::vector<Vector> rows = coeff_rows;
  std::vector<ElementaryOp> ops;
  auto apply = [&](const ElementaryOp& op) {
    for (auto& r : rows) transform_coefficients(r, op);
    ops.push_back(op);
  };
  for (std::size_t s = 0; s < rows.size(); ++s) {
    std::size_t p = reduce_tail(rows, s, s, &ops);
    Element m = rows[s][p];
    if (!is_unit(m)) throw NotPrimitive("system is not primitive: tail gcd " + to_string(m) + " is not a unit");
    if (p != s) apply(ElementaryOp::swap(s, p));
    if (m != lat.algebra().one()) apply(ElementaryOp::scale(s, m));
    for (std::size_t j = 0; j < s; ++j)
      if (!rows[s][j].is_zero()) apply(ElementaryOp::add(s, rows[s][j], j));
  }
  ModuleLattice out = apply_log(lat, ops);
  for (std::size_t s = 0; s < coeff_rows.size(); ++s)
    if (out[s] != lat.combine(coeff_rows[s])) throw std::logic_error("basis completion did not reproduce the system");
  return {out, ops};
}

// ---------------------------------------------------------------------------
// Determinants

Rational det_alpha(const ModuleLattice& lat, const AlphaForm& form) {
  GSOData g = gso(lat.basis(), form);
  Rational det = 1;
  for (const auto& s : g.gram_self) det *= pow_of(reduced_norm(s), lat.algebra().m());
  return det;
}

std::vector<Vector> k_gram(const ModuleLattice& lat, const AlphaForm& form) {
  const std::size_t d = lat.rank();
  std::vector<Vector> g(d, Vector(d, lat.algebra().zero()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g[i][j] = inner(lat[i], lat[j], form);
  return g;
}

std::vector<Vector> k_inverse(const std::vector<Vector>& m0) {
  const std::size_t n = m0.size();
  if (n == 0) return {};
  const AlgebraSpec& alg = m0[0][0].algebra();
  std::vector<Vector> m = m0;
  std::vector<Vector> inv(n, zero_vector(alg, n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = alg.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw RankDeficient("singular matrix over K");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Element piv = inverse(m[c][c]);
    m[c] = lmul(piv, m[c]);
    inv[c] = lmul(piv, inv[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Element f = m[r][c];
      m[r] = sub(m[r], lmul(f, m[c]));
      inv[r] = sub(inv[r], lmul(f, inv[c]));
    }
  }
  return inv;
}

Rational det_alpha_crosscheck(const ModuleLattice& lat, const AlphaForm& form) {
  const AlgebraSpec& alg = lat.algebra();
  if (alg.is_commutative()) {
    std::vector<Vector> m = k_gram(lat, form);
    const std::size_t n = m.size();
    Element det = alg.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m[p][c].is_zero()) ++p;
      if (p == n) return 0;
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det = det * m[c][c];
      Element piv = inverse(m[c][c]);
      for (std::size_t r = c + 1; r < n; ++r)
        if (!m[r][c].is_zero()) m[r] = sub(m[r], lmul(m[r][c] * piv, m[c]));
    }
    return reduced_norm(det);
  }
  // Quaternions: real Gram matrix of {e b_i : e in 1, i, j, k} under Re<x, y> = trd/2.
  std::vector<Element> units = {alg.one(), alg.basis(1), alg.basis(2), Element(alg, {-1, -1, -1, 2})};
  std::vector<Vector> vs;
  for (const auto& b : lat.basis())
    for (const auto& e : units) vs.push_back(lmul(e, b));
  RatMatrix g(vs.size(), std::vector<Rational>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) g[a][b] = reduced_trace(inner(vs[a], vs[b], form)) / 2;
  return determinant(g);
}

// ---------------------------------------------------------------------------
// Z-lattice view

zlat::IntVec ZLatticeView::to_z(const Vector& coeffs) const {
  if (coeffs.size() != d) throw DimensionMismatch("coefficient vector has wrong length");
  zlat::IntVec z(d * r, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < r; ++t) {
      if (!is_integer(coeffs[i][t])) throw Error("coefficients must lie in O");
      z[i * r + t] = coeffs[i][t].get_num().get_si();
    }
  return z;
}

Vector ZLatticeView::from_z(const AlgebraSpec& alg, const zlat::IntVec& z) const {
  Vector c(d, alg.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < r; ++t) c[i][t] = Rational(z[i * r + t]);
  return c;
}

ZLatticeView zview(const ModuleLattice& lat, const AlphaForm& form) {
  const AlgebraSpec& alg = lat.algebra();
  ZLatticeView zv;
  zv.d = lat.rank();
  zv.r = alg.rank();
  const std::size_t n = zv.d * zv.r;
  zv.gram.assign(n, std::vector<Rational>(n));
  std::vector<Vector> g = k_gram(lat, form);
  std::vector<Element> basis, basis_conj;
  for (std::size_t t = 0; t < zv.r; ++t) {
    basis.push_back(alg.basis(t));
    basis_conj.push_back(conj(alg.basis(t)));
  }
  for (std::size_t i = 0; i < zv.d; ++i)
    for (std::size_t j = 0; j < zv.d; ++j)
      for (std::size_t s = 0; s < zv.r; ++s) {
        Element left = basis[s] * g[i][j];
        for (std::size_t t = 0; t < zv.r; ++t)
          zv.gram[i * zv.r + s][j * zv.r + t] = form.scale() * reduced_trace(left * basis_conj[t]);
      }
  return zv;
}

// ---------------------------------------------------------------------------
// Duals

namespace {

// Left row echelon over O by Euclidean row operations; returns the nonzero rows.
std::vector<Vector> left_hermite(std::vector<Vector> rows) {
  if (rows.empty()) return rows;
  const std::size_t d = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < d && top < rows.size(); ++c) {
    while (true) {
      std::size_t p = rows.size();
      Rational best;
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        Rational v = euclidean_value(rows[i][c]);
        if (p == rows.size() || v < best) {
          p = i;
          best = v;
        }
      }
      if (p == rows.size()) break;
      bool changed = false;
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (i == p || rows[i][c].is_zero()) continue;
        DivResult qr = euclidean_divide(rows[i][c], rows[p][c]);
        rows[i] = sub(rows[i], lmul(qr.q, rows[p]));
        changed = true;
      }
      if (!changed) {
        std::swap(rows[p], rows[top]);
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

}  // namespace

DualLattice dual_alpha(const ModuleLattice& lat, const AlphaForm& form) {
  const AlgebraSpec& alg = lat.algebra();
  ZLatticeView zv = zview(lat, form);
  RatMatrix h = inverse(zv.gram);
  const std::size_t n = zv.d * zv.r;
  Integer den = 1;
  for (const auto& row : h)
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Vector> rows;
  for (std::size_t s = 0; s < n; ++s) {
    Vector c(zv.d, alg.zero());
    for (std::size_t i = 0; i < zv.d; ++i)
      for (std::size_t t = 0; t < zv.r; ++t) c[i] += alg.basis(t) * (h[s][i * zv.r + t] * Rational(den));
    rows.push_back(c);
  }
  std::vector<Vector> hnf = left_hermite(rows);
  if (hnf.size() != zv.d) throw std::logic_error("dual basis recovery lost rank");
  std::vector<Vector> basis;
  Rational inv_den = Rational(1) / Rational(den);
  for (const auto& c : hnf) {
    Vector v = lat.combine(c);
    for (auto& x : v) x *= inv_den;
    basis.push_back(v);
  }
  return {ModuleLattice(alg, basis)};
}

ModuleLattice dual_alpha_closed_form(const ModuleLattice& lat, const AlphaForm& form) {
  const AlgebraSpec& alg = lat.algebra();
  std::vector<Vector> ginv = k_inverse(k_gram(lat, form));
  Element c = inverse(alg.different()) * (Rational(1) / form.scale());
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < lat.rank(); ++i) basis.push_back(lmul(c, lat.combine(ginv[i])));
  return ModuleLattice(alg, basis);
}

}  // namespace ordlat
