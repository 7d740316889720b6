#include "ordlat/real.hpp"

#include <numeric>
#include <stdexcept>

#include "ordlat/errors.hpp"

namespace ordlat {

namespace {

constexpr std::size_t kMaxExactBits = 8192;

void set_min4(mpfr_t out, const mpfr_t a, const mpfr_t b, const mpfr_t c, const mpfr_t d) {
  mpfr_min(out, a, b, MPFR_RNDD);
  mpfr_min(out, out, c, MPFR_RNDD);
  mpfr_min(out, out, d, MPFR_RNDD);
}

void set_max4(mpfr_t out, const mpfr_t a, const mpfr_t b, const mpfr_t c, const mpfr_t d) {
  mpfr_max(out, a, b, MPFR_RNDU);
  mpfr_max(out, out, c, MPFR_RNDU);
  mpfr_max(out, out, d, MPFR_RNDU);
}

bool perfect_root(const Integer& x, unsigned long p, Integer& out) {
  if (x < 0) return false;
  return mpz_root(out.get_mpz_t(), x.get_mpz_t(), p) != 0;
}

std::size_t bits(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

Interval::Interval() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& x) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }

double Interval::midpoint() const {
  mpfr_t m;
  mpfr_init2(m, kPrecision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval d1, d2, d3, d4, u1, u2, u3, u4, r;
  mpfr_mul(d1.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(d2.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_mul(d3.lo_, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_mul(d4.lo_, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_mul(u1.lo_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(u2.lo_, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_mul(u3.lo_, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_mul(u4.lo_, a.hi_, b.hi_, MPFR_RNDU);
  set_min4(r.lo_, d1.lo_, d2.lo_, d3.lo_, d4.lo_);
  set_max4(r.hi_, u1.lo_, u2.lo_, u3.lo_, u4.lo_);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw DivisionByZero("interval division by an interval containing 0");
  Interval inv;
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::pow(long num, unsigned long den) const {
  if (mpfr_sgn(lo_) < 0) throw Error("fractional power of a possibly negative interval");
  unsigned long p = static_cast<unsigned long>(num < 0 ? -num : num);
  Interval r;
  mpfr_pow_ui(r.lo_, lo_, p, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, p, MPFR_RNDU);
  if (den != 1) {
    mpfr_rootn_ui(r.lo_, r.lo_, den, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, r.hi_, den, MPFR_RNDU);
  }
  if (num < 0) return Interval(Rational(1)) / r;
  return r;
}

// ---------------------------------------------------------------------------

Real::Real(const Rational& x) : exact_(x), root_(1), iv_(x) {}

Real Real::root(const Rational& base, unsigned long n) {
  if (n == 0) throw Error("zeroth root");
  if (n > 1 && base < 0) throw Error("even or fractional root of a negative number");
  Real r;
  r.exact_ = base;
  r.root_ = n;
  r.normalize();
  r.refresh_interval();
  return r;
}

Real Real::from_interval(const Interval& iv) {
  Real r;
  r.exact_.reset();
  r.root_ = 1;
  r.iv_ = iv;
  return r;
}

const Rational& Real::rational() const {
  if (!is_rational()) throw Error("real value is not rational");
  return *exact_;
}

void Real::normalize() {
  if (!exact_) return;
  if (root_ > 1 && (*exact_ == 0 || *exact_ == 1)) root_ = 1;
  for (unsigned long p = 2; p <= root_; ++p) {
    while (root_ % p == 0 && root_ > 1) {
      Integer nr, dr;
      if (!perfect_root(exact_->get_num(), p, nr) || !perfect_root(exact_->get_den(), p, dr)) break;
      *exact_ = Rational(nr, dr);
      root_ /= p;
    }
  }
  if (bits(*exact_) > kMaxExactBits) exact_.reset();
}

void Real::refresh_interval() {
  if (!exact_) return;
  Interval base(*exact_);
  iv_ = root_ == 1 ? base : base.pow(1, root_);
}

Real Real::pow(long p, unsigned long q) const {
  if (q == 0) throw Error("zero denominator in exponent");
  if (exact_) {
    if (*exact_ < 0 && (q > 1 || root_ > 1)) throw Error("fractional power of a negative number");
    if (*exact_ == 0 && p < 0) throw DivisionByZero("zero to a negative power");
    Real r;
    r.exact_ = pow_of(*exact_, p);
    r.root_ = root_ * q;
    r.normalize();
    if (r.exact_) {
      r.refresh_interval();
      return r;
    }
  }
  return from_interval(iv_.pow(p, q));
}

Real operator+(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return Real(*a.exact_ + *b.exact_);
  return Real::from_interval(a.iv_ + b.iv_);
}

Real operator-(const Real& a, const Real& b) {
  if (a.is_rational() && b.is_rational()) return Real(*a.exact_ - *b.exact_);
  return Real::from_interval(a.iv_ - b.iv_);
}

Real operator*(const Real& a, const Real& b) {
  if (a.exact_ && b.exact_) {
    if (a.root_ == 1 && b.root_ == 1) return Real(*a.exact_ * *b.exact_);
    if (*a.exact_ >= 0 && *b.exact_ >= 0) {
      unsigned long l = std::lcm(a.root_, b.root_);
      Real r;
      r.exact_ = pow_of(*a.exact_, static_cast<long>(l / a.root_)) * pow_of(*b.exact_, static_cast<long>(l / b.root_));
      r.root_ = l;
      r.normalize();
      if (r.exact_) {
        r.refresh_interval();
        return r;
      }
    }
  }
  return Real::from_interval(a.iv_ * b.iv_);
}

Real operator/(const Real& a, const Real& b) {
  if (b.exact_ && *b.exact_ == 0) throw DivisionByZero("real division by zero");
  if (b.exact_ && (b.root_ == 1 || *b.exact_ > 0)) return a * b.pow(-1);
  return Real::from_interval(a.iv_ / b.iv_);
}

std::optional<std::pair<Rational, unsigned long>> Real::exact_form() const {
  if (!exact_) return std::nullopt;
  return std::make_pair(*exact_, root_);
}

std::string Real::to_string() const {
  if (is_rational()) return ordlat::to_string(*exact_);
  char* buf = nullptr;
  mpfr_t m;
  mpfr_init2(m, Interval::kPrecision);
  mpfr_add(m, iv_.lo(), iv_.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_asprintf(&buf, "%.15Rg", m);
  std::string approx(buf);
  mpfr_free_str(buf);
  mpfr_clear(m);
  if (exact_) return "(" + ordlat::to_string(*exact_) + ")^(1/" + std::to_string(root_) + ")~" + approx;
  return "~" + approx;
}

Cmp compare(const Real& a, const Real& b) {
  auto ea = a.exact_form(), eb = b.exact_form();
  if (ea && eb) {
    auto order = [](const Rational& x, const Rational& y) {
      return x < y ? Cmp::Less : (x > y ? Cmp::Greater : Cmp::Equal);
    };
    int sa = sign_of(ea->first), sb = sign_of(eb->first);
    if (ea->second == 1 && eb->second == 1) return order(ea->first, eb->first);
    if (sa != sb) return sa < sb ? Cmp::Less : Cmp::Greater;
    if (sa == 0) return Cmp::Equal;
    unsigned long l = std::lcm(ea->second, eb->second);
    if (l <= 64 && bits(ea->first) * (l / ea->second) < 4 * kMaxExactBits &&
        bits(eb->first) * (l / eb->second) < 4 * kMaxExactBits) {
      Cmp c = order(pow_of(ea->first, static_cast<long>(l / ea->second)), pow_of(eb->first, static_cast<long>(l / eb->second)));
      if (sa < 0 && c != Cmp::Equal) c = c == Cmp::Less ? Cmp::Greater : Cmp::Less;
      return c;
    }
  }
  const Interval& x = a.interval();
  const Interval& y = b.interval();
  if (mpfr_less_p(x.hi(), y.lo())) return Cmp::Less;
  if (mpfr_greater_p(x.lo(), y.hi())) return Cmp::Greater;
  return Cmp::Unknown;
}

Real max(const Real& a, const Real& b) {
  Cmp c = compare(a, b);
  if (c == Cmp::Unknown) throw Error("cannot decide maximum of overlapping intervals");
  return c == Cmp::Less ? b : a;
}

}  // namespace ordlat
