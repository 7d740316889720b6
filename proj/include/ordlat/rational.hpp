#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ordlat {

using Rational = mpq_class;
using Integer = mpz_class;
using RatMatrix = std::vector<std::vector<Rational>>;

Rational make_rational(long num, long den = 1);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
// floor(x + 1/2)
Integer round_half_up(const Rational& x);
bool is_integer(const Rational& x);
Rational abs_of(const Rational& x);
Rational pow_of(const Rational& x, long e);

std::string to_string(const Rational& x);
// Accepts "a", "-a/b" and decimal forms such as "0.25".
Rational parse_rational(std::string_view text);

RatMatrix identity_matrix(std::size_t n);
// Exact inverse via Gauss-Jordan; throws RankDeficient when singular.
RatMatrix inverse(const RatMatrix& a);
Rational determinant(RatMatrix a);

}  // namespace ordlat
