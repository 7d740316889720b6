#include "ordlat/reduction.hpp"

#include "ordlat/errors.hpp"

namespace ordlat {

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::SizeOnly:
      return "size";
    case ReductionKind::Minkowski:
      return "minkowski";
    case ReductionKind::HKZ:
      return "hkz";
    case ReductionKind::BKZ:
      return "bkz";
  }
  return {};
}

ModuleLattice size_reduce(const ModuleLattice& lat, const AlphaForm& form, std::vector<ElementaryOp>* log) {
  GSOData g = gso(lat.basis(), form);
  std::vector<ElementaryOp> ops;
  const std::size_t d = lat.rank();
  for (std::size_t k = 1; k < d; ++k) {
    for (std::size_t i = k; i-- > 0;) {
      Element y = form.round(g.mu[k][i]);
      if (y.is_zero()) continue;
      ops.push_back(ElementaryOp::add(k, -y, i));
      for (std::size_t j = 0; j <= i; ++j) g.mu[k][j] -= y * g.mu[i][j];
    }
  }
  if (log) log->insert(log->end(), ops.begin(), ops.end());
  return apply_log(lat, ops);
}

bool is_size_reduced(const ModuleLattice& lat, const AlphaForm& form) {
  GSOData g = gso(lat.basis(), form);
  for (std::size_t k = 1; k < lat.rank(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      const Element& m = g.mu[k][i];
      if (scalar_qnorm(m - form.round(m), form) < scalar_qnorm(m, form)) return false;
    }
  return true;
}

ModuleLattice projected_lattice(const ModuleLattice& lat, const AlphaForm& form, std::size_t k, std::size_t last) {
  GSOData g = gso(lat.basis(), form);
  std::vector<Vector> out;
  for (std::size_t i = k; i <= last; ++i) {
    Vector v = lat[i];
    for (std::size_t j = 0; j < k; ++j)
      if (!g.mu[i][j].is_zero()) v = sub(v, lmul(g.mu[i][j], g.gso_vectors[j]));
    out.push_back(std::move(v));
  }
  return ModuleLattice(lat.algebra(), out);
}

bool tail_is_primitive(const Vector& coeffs, std::size_t k) {
  std::optional<Element> g;
  for (std::size_t i = k; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    g = g ? left_gcd(*g, coeffs[i]) : left_gcd(coeffs[i], coeffs[i].algebra().zero());
    if (is_unit(*g)) return true;
  }
  return g && is_unit(*g);
}

std::vector<Rational> minima_ratios(const ModuleLattice& lat, const AlphaForm& form) {
  MinimaResult mr = successive_minima(lat, form);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < lat.rank(); ++k) out.push_back(qnorm(lat[k], form) / mr.lambdas_sq[k]);
  return out;
}

namespace {

std::vector<Vector> unit_rows(const ModuleLattice& lat, std::size_t k) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Vector e = zero_vector(lat.algebra(), lat.rank());
    e[i] = lat.algebra().one();
    rows.push_back(e);
  }
  return rows;
}

// Put the lattice vector with the given coefficients at position k, keeping b_0..b_{k-1}.
void insert_at(ModuleLattice& cur, std::size_t k, const Vector& coeffs, std::vector<ElementaryOp>& log) {
  std::vector<Vector> rows = unit_rows(cur, k);
  rows.push_back(coeffs);
  Completion c = complete_to_basis(cur, rows);
  log.insert(log.end(), c.ops.begin(), c.ops.end());
  cur = c.lattice;
}

// Coefficients of a projected-lattice vector lifted to the full basis (block starts at k).
Vector lift(const ModuleLattice& lat, std::size_t k, const Vector& block) {
  Vector c = zero_vector(lat.algebra(), lat.rank());
  for (std::size_t i = 0; i < block.size(); ++i) c[k + i] = block[i];
  return c;
}

// Shortest primitive vector of the projected block [k, last]; nullopt when b_k(k) is already shortest.
std::optional<Vector> block_improvement(const ModuleLattice& cur, const AlphaForm& form, std::size_t k, std::size_t last) {
  ModuleLattice proj = projected_lattice(cur, form, k, last);
  LatticeEnumerator en(proj, form);
  Rational current = qnorm(proj[0], form);
  LatticeVector sv = en.shortest();
  if (sv.norm > current) throw std::logic_error("projected shortest vector longer than a basis vector");
  if (sv.norm == current) return std::nullopt;
  for (const auto& v : en.below(sv.norm))
    if (v.norm == sv.norm && tail_is_primitive(v.coeffs, 0)) return lift(cur, k, v.coeffs);
  throw NotUnitReducible("every shortest vector of the projected lattice is imprimitive over " + cur.algebra().name());
}

}  // namespace

ReductionReport minkowski_reduce(const ModuleLattice& lat, const AlphaForm& form) {
  ReductionReport rep{ReductionKind::Minkowski, 0, lat, lat, {}, {}, false};
  ModuleLattice cur = lat;
  const std::size_t d = lat.rank();
  for (std::size_t k = 0; k < d; ++k) {
    LatticeEnumerator en(cur, form);
    Rational current = qnorm(cur[k], form);
    Rational radius = std::min(en.shortest().norm, current);
    std::optional<LatticeVector> pick;
    while (!pick) {
      for (auto& v : en.below(radius)) {
        if (tail_is_primitive(v.coeffs, k)) {
          pick = std::move(v);
          break;
        }
      }
      if (radius >= current) break;
      radius = std::min(Rational(radius * 2), current);
    }
    if (!pick) throw std::logic_error("Minkowski search missed the current basis vector");
    if (pick->norm == current) continue;
    insert_at(cur, k, pick->coeffs, rep.log);
  }
  rep.basis = cur;
  rep.ratios = minima_ratios(cur, form);
  rep.verdict = is_minkowski_reduced(cur, form);
  return rep;
}

bool is_minkowski_reduced(const ModuleLattice& lat, const AlphaForm& form) {
  LatticeEnumerator en(lat, form);
  for (std::size_t k = 0; k < lat.rank(); ++k) {
    Rational current = qnorm(lat[k], form);
    for (const auto& v : en.below(current)) {
      if (v.norm >= current) break;
      if (tail_is_primitive(v.coeffs, k)) return false;
    }
  }
  return true;
}

ReductionReport hkz_reduce(const ModuleLattice& lat, const AlphaForm& form) {
  ReductionReport rep{ReductionKind::HKZ, 0, lat, lat, {}, {}, false};
  ModuleLattice cur = lat;
  const std::size_t d = lat.rank();
  for (std::size_t k = 0; k < d; ++k) {
    if (auto c = block_improvement(cur, form, k, d - 1)) insert_at(cur, k, *c, rep.log);
  }
  cur = size_reduce(cur, form, &rep.log);
  rep.basis = cur;
  rep.ratios = minima_ratios(cur, form);
  rep.verdict = is_hkz_reduced(cur, form);
  return rep;
}

bool is_hkz_reduced(const ModuleLattice& lat, const AlphaForm& form) {
  return is_bkz_reduced(lat, form, static_cast<int>(lat.rank()));
}

ReductionReport bkz_reduce(const ModuleLattice& lat, const AlphaForm& form, int beta) {
  const std::size_t d = lat.rank();
  if (beta < 2 || static_cast<std::size_t>(beta) > d)
    throw IndexError("block size beta=" + std::to_string(beta) + " must satisfy 2 <= beta <= d=" + std::to_string(d));
  ReductionReport rep{ReductionKind::BKZ, beta, lat, lat, {}, {}, false};
  ModuleLattice cur = lat;
  bool changed = true;
  for (int tour = 0; changed; ++tour) {
    if (tour > 10000) throw std::logic_error("BKZ did not converge");
    changed = false;
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t last = std::min(k + static_cast<std::size_t>(beta) - 1, d - 1);
      if (auto c = block_improvement(cur, form, k, last)) {
        insert_at(cur, k, *c, rep.log);
        changed = true;
      }
    }
  }
  cur = size_reduce(cur, form, &rep.log);
  rep.basis = cur;
  rep.ratios = minima_ratios(cur, form);
  rep.verdict = is_bkz_reduced(cur, form, beta);
  return rep;
}

bool is_bkz_reduced(const ModuleLattice& lat, const AlphaForm& form, int beta) {
  const std::size_t d = lat.rank();
  if (beta < 1) throw IndexError("block size must be positive");
  GSOData g = gso(lat.basis(), form);
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t last = std::min(k + static_cast<std::size_t>(beta) - 1, d - 1);
    ModuleLattice proj = projected_lattice(lat, form, k, last);
    if (LatticeEnumerator(proj, form).shortest().norm < g.gso_sq[k]) return false;
  }
  return is_size_reduced(lat, form);
}

PlaneResult nearest_plane(const ModuleLattice& lat, const AlphaForm& form, const Vector& target) {
  lat.coordinates(target);
  GSOData g = gso(lat.basis(), form);
  const std::size_t d = lat.rank();
  Vector x(d, lat.algebra().zero());
  for (std::size_t j = 0; j < d; ++j) x[j] = inner(target, g.gso_vectors[j], form) * inverse(g.gram_self[j]);
  Vector v(d, lat.algebra().zero());
  std::vector<Rational> defects(d);
  for (std::size_t j = d; j-- > 0;) {
    Element c = x[j];
    for (std::size_t i = j + 1; i < d; ++i)
      if (!v[i].is_zero() && !g.mu[i][j].is_zero()) c -= v[i] * g.mu[i][j];
    v[j] = form.round(c);
    defects[j] = scalar_qnorm(c - v[j], form);
  }
  PlaneResult res;
  res.vector.coeffs = v;
  res.vector.vec = lat.combine(v);
  res.vector.norm = qnorm(sub(target, res.vector.vec), form);
  res.defects = defects;
  return res;
}

}  // namespace ordlat
