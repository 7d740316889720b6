#include "ordlat/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ordlat/errors.hpp"

namespace ordlat {

namespace {

void require_same(const Element& a, const Element& b) {
  if (a.algebra_ptr() == nullptr || a.algebra_ptr() != b.algebra_ptr())
    throw AlgebraMismatch("operands belong to different algebras");
}

void require_integral(const Element& a, const char* what) {
  if (!a.is_integral()) throw Error(std::string(what) + " must lie in the order O");
}

}  // namespace

Element::Element(const AlgebraSpec& alg) : alg_(&alg), c_(alg.rank(), Rational(0)) {}

Element::Element(const AlgebraSpec& alg, std::vector<Rational> coords) : alg_(&alg), c_(std::move(coords)) {
  if (c_.size() != alg.rank()) throw DimensionMismatch("element has wrong number of coordinates");
}

const AlgebraSpec& Element::algebra() const {
  if (alg_ == nullptr) throw Error("element has no algebra");
  return *alg_;
}

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Element::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
}

Element& Element::operator+=(const Element& o) {
  require_same(*this, o);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(*this, o);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) { return a.alg_ == b.alg_ && a.c_ == b.c_; }

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Rational(-1); }
Element operator*(Element a, const Rational& s) { return a *= s; }
Element operator*(const Rational& s, Element a) { return a *= s; }

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  const AlgebraSpec& alg = a.algebra();
  const std::size_t r = alg.rank();
  std::vector<Rational> out(r, Rational(0));
  Rational prod;
  for (std::size_t s = 0; s < r; ++s) {
    if (a[s] == 0) continue;
    for (std::size_t t = 0; t < r; ++t) {
      if (b[t] == 0) continue;
      prod = a[s] * b[t];
      for (std::size_t u = 0; u < r; ++u) {
        long c = alg.structure(s, t, u);
        if (c != 0) out[u] += prod * c;
      }
    }
  }
  return Element(alg, std::move(out));
}

// ---------------------------------------------------------------------------
// Catalog construction

AlgebraSpec::AlgebraSpec(AlgebraKind kind, int d) : kind_(kind), d_(d) {
  switch (kind) {
    case AlgebraKind::Rational:
      name_ = "Q";
      r_ = 1;
      n_ = 1;
      build_number_field({1}, {1});
      labels_ = {"1"};
      break;
    case AlgebraKind::ImagQuadratic:
    case AlgebraKind::RealQuadratic: {
      bool imag = kind == AlgebraKind::ImagQuadratic;
      if (imag && d != -1 && d != -2 && d != -3 && d != -7 && d != -11)
        throw Error("imaginary quadratic field not in catalog: " + std::to_string(d));
      if (!imag && d != 2 && d != 3 && d != 5 && d != 6)
        throw Error("real quadratic field not in catalog: " + std::to_string(d));
      name_ = "Q(sqrt" + std::to_string(d) + ")";
      r_ = 2;
      n_ = 2;
      bool half = ((d % 4) + 4) % 4 == 1;
      if (half) {
        build_number_field({(d - 1) / 4, 1}, imag ? std::vector<long>{1, -1} : std::vector<long>{0, 1});
        labels_ = {"1", "(1+sqrt(" + std::to_string(d) + "))/2"};
      } else {
        build_number_field({d, 0}, imag ? std::vector<long>{0, -1} : std::vector<long>{0, 1});
        labels_ = {"1", "sqrt(" + std::to_string(d) + ")"};
      }
      break;
    }
    case AlgebraKind::Cyclotomic8:
      name_ = "Q(zeta8)";
      r_ = 4;
      n_ = 4;
      build_number_field({-1, 0, 0, 0}, {0, 0, 0, -1});
      labels_ = {"1", "z", "z^2", "z^3"};
      break;
    case AlgebraKind::Cyclotomic12:
      name_ = "Q(zeta12)";
      r_ = 4;
      n_ = 4;
      build_number_field({-1, 0, 1, 0}, {0, 1, 0, -1});
      labels_ = {"1", "z", "z^2", "z^3"};
      break;
    case AlgebraKind::QuaternionHurwitz:
      name_ = "Hurwitz";
      r_ = 4;
      n_ = 1;
      m_ = 2;
      build_hurwitz();
      labels_ = {"1", "i", "j", "(1+i+j+k)/2"};
      break;
  }
  finish();
}

void AlgebraSpec::build_number_field(const std::vector<long>& reduction, const std::vector<long>& conj_theta) {
  const std::size_t r = r_;
  std::vector<std::vector<long>> powers(2 * r - 1, std::vector<long>(r, 0));
  powers[0][0] = 1;
  for (std::size_t p = 1; p < powers.size(); ++p) {
    const auto& prev = powers[p - 1];
    std::vector<long> next(r, 0);
    for (std::size_t k = 0; k + 1 < r; ++k) next[k + 1] = prev[k];
    for (std::size_t k = 0; k < r; ++k) next[k] += prev[r - 1] * reduction[k];
    powers[p] = next;
  }
  mult_.assign(r * r * r, 0);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t u = 0; u < r; ++u) mult_[(s * r + t) * r + u] = powers[s + t][u];

  std::vector<Rational> ct(conj_theta.begin(), conj_theta.end());
  Element theta_bar(*this, ct);
  Element acc = basis(0);
  invol_.assign(r, std::vector<long>(r, 0));
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t u = 0; u < r; ++u) invol_[u][t] = acc[u].get_num().get_si();
    acc = acc * theta_bar;
  }
}

void AlgebraSpec::build_hurwitz() {
  using Q4 = std::array<Rational, 4>;
  auto qmul = [](const Q4& a, const Q4& b) {
    return Q4{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
              a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  RatMatrix basis_std = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
  RatMatrix to_basis = inverse(basis_std);
  auto coords_of = [&](const Q4& x) {
    std::vector<long> c(4, 0);
    for (std::size_t u = 0; u < 4; ++u) {
      Rational v = 0;
      for (std::size_t k = 0; k < 4; ++k) v += x[k] * to_basis[k][u];
      if (!is_integer(v)) throw std::logic_error("Hurwitz structure constant not integral");
      c[u] = v.get_num().get_si();
    }
    return c;
  };
  mult_.assign(64, 0);
  invol_.assign(4, std::vector<long>(4, 0));
  for (std::size_t s = 0; s < 4; ++s) {
    Q4 a{basis_std[s][0], basis_std[s][1], basis_std[s][2], basis_std[s][3]};
    for (std::size_t t = 0; t < 4; ++t) {
      Q4 b{basis_std[t][0], basis_std[t][1], basis_std[t][2], basis_std[t][3]};
      auto c = coords_of(qmul(a, b));
      for (std::size_t u = 0; u < 4; ++u) mult_[(s * 4 + t) * 4 + u] = c[u];
    }
    auto cc = coords_of(Q4{a[0], -a[1], -a[2], -a[3]});
    for (std::size_t u = 0; u < 4; ++u) invol_[u][s] = cc[u];
  }
}

void AlgebraSpec::finish() {
  const std::size_t r = r_;
  basis_trace_.assign(r, Rational(0));
  for (std::size_t t = 0; t < r; ++t) {
    long tr = 0;
    for (std::size_t s = 0; s < r; ++s) tr += structure(t, s, s);
    basis_trace_[t] = Rational(tr, m_);
    basis_trace_[t].canonicalize();
  }
  RatMatrix tg(r, std::vector<Rational>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) tg[s][t] = reduced_trace(basis(s) * basis(t));
  Rational disc = abs_of(determinant(tg));
  if (!is_integer(disc)) throw std::logic_error("non-integral discriminant");
  disc_abs_ = disc.get_num().get_si();

  auto el = [&](std::vector<long> c) { return Element(*this, std::vector<Rational>(c.begin(), c.end())); };
  std::vector<Element> torsion_gens;
  switch (kind_) {
    case AlgebraKind::Rational:
      euclid_min_ = Rational(1, 4);
      l_ = el({2});
      torsion_gens = {el({-1})};
      different_ = one();
      break;
    case AlgebraKind::ImagQuadratic: {
      static const std::map<int, std::pair<Rational, std::vector<long>>> table = {
          {-1, {Rational(1, 2), {1, 1}}}, {-2, {Rational(3, 4), {0, 1}}}, {-3, {Rational(1, 3), {-1, 2}}},
          {-7, {Rational(4, 7), {0, 1}}}, {-11, {Rational(9, 11), {0, 1}}}};
      euclid_min_ = table.at(d_).first;
      l_ = el(table.at(d_).second);
      if (d_ == -1) torsion_gens = {el({0, 1})};
      else if (d_ == -3) torsion_gens = {el({0, 1})};
      else torsion_gens = {el({-1, 0})};
      different_ = (d_ % 4 == -3 || d_ % 4 == 1) ? el({-1, 2}) : el({0, 2});
      break;
    }
    case AlgebraKind::RealQuadratic: {
      static const std::map<int, std::tuple<Rational, std::vector<long>, std::vector<long>>> table = {
          {2, {Rational(1, 2), {0, 1}, {1, 1}}},
          {3, {Rational(1, 2), {1, 1}, {2, 1}}},
          {5, {Rational(1, 4), {2, 0}, {0, 1}}},
          {6, {Rational(3, 4), {2, 1}, {5, 2}}}};
      const auto& row = table.at(d_);
      euclid_min_ = std::get<0>(row);
      l_ = el(std::get<1>(row));
      fund_ = el(std::get<2>(row));
      torsion_gens = {el({-1, 0})};
      different_ = d_ == 5 ? el({-1, 2}) : el({0, 2});
      break;
    }
    case AlgebraKind::Cyclotomic8:
      euclid_min_ = Rational(1, 2);
      l_ = el({1, -1, 0, 0});
      torsion_gens = {el({0, 1, 0, 0})};
      fund_ = el({1, 1, 1, 0});
      different_ = el({0, 0, 0, 4});
      break;
    case AlgebraKind::Cyclotomic12:
      euclid_min_ = Rational(1, 4);
      l_ = el({1, 0, 0, 1});
      torsion_gens = {el({0, 1, 0, 0})};
      fund_ = el({1, 1, 0, 0});
      different_ = el({0, -2, 0, 4});
      break;
    case AlgebraKind::QuaternionHurwitz:
      euclid_min_ = Rational(1, 2);
      l_ = el({1, 1, 0, 0});
      torsion_gens = {el({0, 1, 0, 0}), el({0, 0, 0, 1})};
      different_ = el({1, 1, 0, 0});
      break;
  }
  nrd_l_ = abs_of(reduced_norm(l_)).get_num().get_si();
  unit_gens_ = torsion_gens;
  if (fund_) unit_gens_.push_back(*fund_);

  torsion_ = {one()};
  for (std::size_t idx = 0; idx < torsion_.size(); ++idx) {
    for (const auto& g : torsion_gens) {
      Element y = torsion_[idx] * g;
      if (std::find(torsion_.begin(), torsion_.end(), y) == torsion_.end()) torsion_.push_back(y);
    }
  }
}

bool AlgebraSpec::has_plain_form() const {
  return kind_ == AlgebraKind::Rational || kind_ == AlgebraKind::ImagQuadratic || kind_ == AlgebraKind::QuaternionHurwitz;
}

Element AlgebraSpec::one() const { return basis(0); }

Element AlgebraSpec::basis(std::size_t t) const {
  Element e(*this);
  e[t] = 1;
  return e;
}

Element AlgebraSpec::scalar(const Rational& x) const {
  Element e(*this);
  e[0] = x;
  return e;
}

const AlgebraSpec& AlgebraSpec::get(AlgebraKind kind, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<AlgebraSpec>> cache;
  if (kind != AlgebraKind::ImagQuadratic && kind != AlgebraKind::RealQuadratic) d = 0;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<AlgebraSpec>(new AlgebraSpec(kind, d))).first;
  return *it->second;
}

const AlgebraSpec& AlgebraSpec::by_name(std::string_view raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "q" || name == "z" || name == "rational") return get(AlgebraKind::Rational);
  if (name == "q(i)") return get(AlgebraKind::ImagQuadratic, -1);
  if (name == "q(zeta8)" || name == "q(z8)") return get(AlgebraKind::Cyclotomic8);
  if (name == "q(zeta12)" || name == "q(z12)") return get(AlgebraKind::Cyclotomic12);
  if (name == "hurwitz" || name == "h") return get(AlgebraKind::QuaternionHurwitz);
  const std::string prefix = "q(sqrt";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    std::string num = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    try {
      std::size_t used = 0;
      int d = std::stoi(num, &used);
      if (used == num.size()) return get(d < 0 ? AlgebraKind::ImagQuadratic : AlgebraKind::RealQuadratic, d);
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    } catch (const Error&) {
    }
  }
  throw ParseError("unknown algebra '" + std::string(raw) + "'");
}

std::vector<const AlgebraSpec*> AlgebraSpec::catalog() {
  std::vector<const AlgebraSpec*> out;
  out.push_back(&get(AlgebraKind::Rational));
  for (int d : {-1, -2, -3, -7, -11}) out.push_back(&get(AlgebraKind::ImagQuadratic, d));
  for (int d : {2, 3, 5, 6}) out.push_back(&get(AlgebraKind::RealQuadratic, d));
  out.push_back(&get(AlgebraKind::Cyclotomic8));
  out.push_back(&get(AlgebraKind::Cyclotomic12));
  out.push_back(&get(AlgebraKind::QuaternionHurwitz));
  return out;
}

// ---------------------------------------------------------------------------
// Element functions

Element conj(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  const auto& inv = alg.involution_matrix();
  Element out(alg);
  for (std::size_t u = 0; u < alg.rank(); ++u)
    for (std::size_t t = 0; t < alg.rank(); ++t)
      if (inv[u][t] != 0 && a[t] != 0) out[u] += a[t] * inv[u][t];
  return out;
}

Rational reduced_trace(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  Rational tr = 0;
  for (std::size_t t = 0; t < alg.rank(); ++t)
    if (alg.basis_trace(t) != 0) tr += a[t] * alg.basis_trace(t);
  return tr;
}

namespace {

RatMatrix left_regular(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  const std::size_t r = alg.rank();
  RatMatrix m(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t t = 0; t < r; ++t) {
    if (a[t] == 0) continue;
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t u = 0; u < r; ++u) {
        long c = alg.structure(t, s, u);
        if (c != 0) m[u][s] += a[t] * c;
      }
  }
  return m;
}

}  // namespace

Rational reduced_norm(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  if (alg.kind() == AlgebraKind::QuaternionHurwitz) return (a * conj(a))[0];
  if (alg.rank() == 1) return a[0];
  if (alg.rank() == 2) {
    RatMatrix m = left_regular(a);
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  }
  return determinant(left_regular(a));
}

Element inverse(const Element& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  const AlgebraSpec& alg = a.algebra();
  if (alg.kind() == AlgebraKind::QuaternionHurwitz) return conj(a) * (1 / reduced_norm(a));
  RatMatrix inv = ordlat::inverse(left_regular(a));
  Element out(alg);
  for (std::size_t u = 0; u < alg.rank(); ++u) out[u] = inv[u][0];
  return out;
}

bool is_unit(const Element& a) { return a.is_integral() && abs_of(reduced_norm(a)) == 1; }

Rational euclidean_value(const Element& a) { return abs_of(reduced_norm(a)); }

namespace {

Element round_hurwitz(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  // standard quaternion coordinates: x = a0 + a3/2, i: a1 + a3/2, j: a2 + a3/2, k: a3/2
  Rational half(1, 2);
  std::array<Rational, 4> s{a[0] + a[3] * half, a[1] + a[3] * half, a[2] + a[3] * half, a[3] * half};
  auto from_std = [&](const std::array<Rational, 4>& x) {
    // inverse of the map above: a3 = 2k, a0 = x0 - k, a1 = x1 - k, a2 = x2 - k
    return Element(alg, {x[0] - x[3], x[1] - x[3], x[2] - x[3], 2 * x[3]});
  };
  std::array<Rational, 4> lip, hal;
  for (int t = 0; t < 4; ++t) {
    lip[t] = Rational(round_half_up(s[t]));
    hal[t] = Rational(floor_of(s[t])) + half;
  }
  Element y1 = from_std(lip), y2 = from_std(hal);
  return reduced_norm(a - y2) < reduced_norm(a - y1) ? y2 : y1;
}

Element round_search(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  const std::size_t r = alg.rank();
  Element base(alg);
  for (std::size_t t = 0; t < r; ++t) base[t] = Rational(round_half_up(a[t]));
  Element best = base;
  Rational best_val = euclidean_value(a - base);
  for (int radius = 1; radius <= 3 && best_val >= 1; ++radius) {
    std::vector<int> off(r, -radius);
    while (true) {
      bool zero = std::all_of(off.begin(), off.end(), [](int v) { return v == 0; });
      if (!zero) {
        Element y = base;
        for (std::size_t t = 0; t < r; ++t) y[t] += off[t];
        Rational v = euclidean_value(a - y);
        if (v < best_val) {
          best_val = v;
          best = y;
        }
      }
      std::size_t k = r;
      while (k > 0 && off[k - 1] == radius) off[--k] = -radius;
      if (k == 0) break;
      ++off[k - 1];
    }
  }
  return best;
}

}  // namespace

Element round_to_order(const Element& a) {
  const AlgebraSpec& alg = a.algebra();
  switch (alg.kind()) {
    case AlgebraKind::Rational:
      return alg.scalar(Rational(round_half_up(a[0])));
    case AlgebraKind::QuaternionHurwitz:
      return round_hurwitz(a);
    default:
      return round_search(a);
  }
}

DivResult euclidean_divide(const Element& a, const Element& b) {
  require_same(a, b);
  require_integral(a, "dividend");
  require_integral(b, "divisor");
  if (b.is_zero()) throw DivisionByZero("euclidean division by zero");
  Element q = round_to_order(a * inverse(b));
  Element r = a - q * b;
  if (!r.is_zero() && euclidean_value(r) >= euclidean_value(b))
    throw std::logic_error("euclidean division failed to decrease the norm");
  return {q, r};
}

DivResult euclidean_divide_right(const Element& a, const Element& b) {
  require_same(a, b);
  require_integral(a, "dividend");
  require_integral(b, "divisor");
  if (b.is_zero()) throw DivisionByZero("euclidean division by zero");
  Element q = round_to_order(inverse(b) * a);
  Element r = a - b * q;
  if (!r.is_zero() && euclidean_value(r) >= euclidean_value(b))
    throw std::logic_error("euclidean division failed to decrease the norm");
  return {q, r};
}

namespace {

bool lex_less(const Element& a, const Element& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

bool first_nonzero_positive(const Element& a) {
  for (const auto& x : a.coords())
    if (x != 0) return x > 0;
  return false;
}

Element normalize_gcd(const Element& g, bool unit_on_left) {
  std::optional<Element> best;
  for (const auto& u : unit_iter(g.algebra(), 1)) {
    Element c = unit_on_left ? u * g : g * u;
    if (!first_nonzero_positive(c)) continue;
    if (!best || lex_less(c, *best)) best = c;
  }
  return *best;
}

}  // namespace

Element right_gcd(const Element& a0, const Element& b0) {
  require_same(a0, b0);
  if (a0.is_zero() && b0.is_zero()) throw UndefinedGcd("gcd(0, 0) is undefined");
  Element a = a0, b = b0;
  while (!b.is_zero()) {
    DivResult qr = euclidean_divide(a, b);
    a = std::move(b);
    b = std::move(qr.r);
  }
  return normalize_gcd(a, true);
}

Element left_gcd(const Element& a0, const Element& b0) {
  require_same(a0, b0);
  if (a0.is_zero() && b0.is_zero()) throw UndefinedGcd("gcd(0, 0) is undefined");
  Element a = a0, b = b0;
  while (!b.is_zero()) {
    DivResult qr = euclidean_divide_right(a, b);
    a = std::move(b);
    b = std::move(qr.r);
  }
  return normalize_gcd(a, false);
}

bool right_divides(const Element& g, const Element& a) { return (a * inverse(g)).is_integral(); }

bool left_divides(const Element& g, const Element& a) { return (inverse(g) * a).is_integral(); }

std::vector<Element> unit_iter(const AlgebraSpec& alg, int bound) {
  if (bound < 0) throw Error("unit_iter bound must be non-negative");
  std::vector<Element> out;
  const auto& fund = alg.fundamental_unit();
  int max_n = fund ? bound : 0;
  Element eps_pos = alg.one(), eps_neg = alg.one();
  Element inv_fund = fund ? inverse(*fund) : alg.one();
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Element> powers = {eps_pos};
    if (n > 0) powers.push_back(eps_neg);
    for (const auto& p : powers)
      for (const auto& t : alg.torsion_units()) {
        Element u = t * p;
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
      }
    if (fund) {
      eps_pos = eps_pos * *fund;
      eps_neg = eps_neg * inv_fund;
    }
  }
  return out;
}

std::string to_string(const Element& a) {
  std::string s = "[";
  for (std::size_t t = 0; t < a.rank(); ++t) {
    if (t) s += ", ";
    s += to_string(a[t]);
  }
  return s + "]";
}

Element parse_element(const AlgebraSpec& alg, std::string_view text) {
  std::size_t b = text.find('['), e = text.rfind(']');
  if (b == std::string_view::npos || e == std::string_view::npos || e < b)
    throw ParseError("element literal must be bracketed: '" + std::string(text) + "'");
  for (std::size_t i = 0; i < text.size(); ++i)
    if ((i < b || i > e) && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("trailing characters around element literal '" + std::string(text) + "'");
  std::string_view body = text.substr(b + 1, e - b - 1);
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    coords.push_back(parse_rational(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != alg.rank())
    throw ParseError("element literal has " + std::to_string(coords.size()) + " coordinates, algebra " + alg.name() +
                     " needs " + std::to_string(alg.rank()));
  return Element(alg, std::move(coords));
}

}  // namespace ordlat
