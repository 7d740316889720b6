#include "ordlat/enumeration.hpp"

#include <cstdlib>
#include <mutex>

#include "ordlat/errors.hpp"

namespace ordlat {

namespace {

std::mutex limit_mu;
std::optional<std::size_t> limit_override;

}  // namespace

std::size_t scale_limit() {
  {
    std::lock_guard<std::mutex> lock(limit_mu);
    if (limit_override) return *limit_override;
  }
  if (const char* env = std::getenv("ORDLAT_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 16;
}

void set_scale_limit(std::optional<std::size_t> limit) {
  std::lock_guard<std::mutex> lock(limit_mu);
  limit_override = limit;
}

void check_scale(const ModuleLattice& lat) {
  std::size_t size = lat.rank() * lat.algebra().rank();
  std::size_t limit = scale_limit();
  if (size > limit)
    throw ScaleLimitExceeded("lattice needs a " + std::to_string(size) + "-dimensional enumeration; desk-scale limit d*r <= " +
                             std::to_string(limit));
}

LatticeEnumerator::LatticeEnumerator(const ModuleLattice& lat, const AlphaForm& form)
    : lat_((check_scale(lat), lat)), form_(form), view_(zview(lat, form)), enumerator_(view_.gram) {
  if (&form.algebra() != &lat.algebra()) throw AlgebraMismatch("form and lattice use different algebras");
}

LatticeVector LatticeEnumerator::make(const zlat::Point& p) const {
  LatticeVector v;
  v.coeffs = view_.from_z(lat_.algebra(), p.x);
  v.vec = lat_.combine(v.coeffs);
  v.norm = p.norm;
  return v;
}

std::vector<LatticeVector> LatticeEnumerator::below(const Rational& bound) const {
  std::vector<LatticeVector> out;
  for (const auto& p : enumerator_.below(bound)) out.push_back(make(p));
  return out;
}

LatticeVector LatticeEnumerator::shortest() const { return make(enumerator_.shortest()); }

LatticeVector LatticeEnumerator::closest(const Vector& target) const {
  Vector x = lat_.coordinates(target);
  std::vector<Rational> t(view_.d * view_.r);
  for (std::size_t i = 0; i < view_.d; ++i)
    for (std::size_t s = 0; s < view_.r; ++s) t[i * view_.r + s] = x[i][s];
  return make(enumerator_.closest(t));
}

LatticeVector shortest_vector(const ModuleLattice& lat, const AlphaForm& form) {
  return LatticeEnumerator(lat, form).shortest();
}

std::vector<LatticeVector> enumerate_below(const ModuleLattice& lat, const AlphaForm& form, const Rational& bound) {
  return LatticeEnumerator(lat, form).below(bound);
}

LatticeVector closest_vector(const ModuleLattice& lat, const AlphaForm& form, const Vector& target) {
  return LatticeEnumerator(lat, form).closest(target);
}

MinimaResult successive_minima(const ModuleLattice& lat, const AlphaForm& form) {
  LatticeEnumerator en(lat, form);
  Rational radius = en.shortest().norm;
  while (true) {
    MinimaResult res;
    KEchelon echelon;
    for (auto& v : en.below(radius)) {
      if (!echelon.insert(v.coeffs)) continue;
      res.lambdas_sq.push_back(v.norm);
      res.witnesses.push_back(std::move(v));
      if (res.witnesses.size() == lat.rank()) return res;
    }
    radius *= 2;
  }
}

}  // namespace ordlat
