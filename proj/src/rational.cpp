#include "ordlat/rational.hpp"

#include <cctype>

#include "ordlat/errors.hpp"

namespace ordlat {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer round_half_up(const Rational& x) { return floor_of(x + Rational(1, 2)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational pow_of(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw DivisionByZero("zero to a negative power");
    return pow_of(Rational(1) / x, -e);
  }
  Rational result(1), base(x);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t j = digits(i);
  if (j == i) throw ParseError("malformed rational literal '" + s + "'");
  Integer num(s.substr(i, j - i));
  Integer den(1);
  if (j < s.size() && s[j] == '/') {
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size()) throw ParseError("malformed rational literal '" + s + "'");
    den = Integer(s.substr(j + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  } else if (j < s.size() && s[j] == '.') {
    std::size_t k = digits(j + 1);
    if (k != s.size()) throw ParseError("malformed rational literal '" + s + "'");
    std::string frac = s.substr(j + 1);
    if (!frac.empty()) {
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      num = num * scale + Integer(frac);
      den = scale;
    }
  } else if (j != s.size()) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  Rational r(neg ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw RankDeficient("singular rational matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = 1 / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= piv;
      inv[c][k] *= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace ordlat
