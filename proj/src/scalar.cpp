#include "preproj/scalar.hpp"

#include <limits>
#include <numeric>

namespace preproj {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min() + 1;

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Scalar Field::make(const mpq_class& q) const {
  Scalar s = Scalar::from_mpq(q);
  if (p) s = s * Scalar::residue(1, p);
  return s;
}

Scalar Scalar::make_small_or_big(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (n <= kMax && n >= kMin && d <= kMax) {
    Scalar s;
    s.n_ = static_cast<std::int64_t>(n);
    s.d_ = static_cast<std::int64_t>(d);
    return s;
  }
  // does not fit: go through gmp via decimal-free split
  auto to_mpz = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  return make_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Scalar Scalar::make_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    Scalar s;
    s.n_ = q.get_num().get_si();
    s.d_ = q.get_den().get_si();
    if (s.n_ != std::numeric_limits<long>::min()) return s;
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return make_small_or_big(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) { return make_big(q); }

Scalar Scalar::residue(long v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  s.n_ = m;
  return s;
}

std::uint64_t Scalar::residue_mod(std::uint64_t p) const {
  if (p_) return static_cast<std::uint64_t>(n_);
  std::uint64_t num, den;
  if (big_) {
    num = mpz_mod(big_->get_num(), p);
    den = mpz_mod(big_->get_den(), p);
  } else {
    long m = n_ % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    num = static_cast<std::uint64_t>(m);
    den = static_cast<std::uint64_t>(d_ % static_cast<long>(p));
  }
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  return mulmod(num, powmod(den, p - 2, p), p);
}

bool Scalar::is_zero() const { return !big_ && n_ == 0; }
bool Scalar::is_one() const { return !big_ && n_ == 1 && d_ == 1; }

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  if (p_) return mpq_class(static_cast<long>(n_));
  return mpq_class(static_cast<long>(n_), static_cast<unsigned long>(d_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (p_ || o.p_) {
    std::uint64_t p = p_ ? p_ : o.p_;
    Scalar s;
    s.p_ = p;
    s.n_ = static_cast<std::int64_t>((residue_mod(p) + o.residue_mod(p)) % p);
    return s;
  }
  if (!big_ && !o.big_)
    return make_small_or_big(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                             static_cast<__int128>(d_) * o.d_);
  return make_big(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
  if (p_) {
    Scalar s = *this;
    s.n_ = n_ ? static_cast<std::int64_t>(p_) - n_ : 0;
    return s;
  }
  if (big_) return make_big(-*big_);
  Scalar s = *this;
  s.n_ = -n_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (p_ || o.p_) {
    std::uint64_t p = p_ ? p_ : o.p_;
    Scalar s;
    s.p_ = p;
    s.n_ = static_cast<std::int64_t>(mulmod(residue_mod(p), o.residue_mod(p), p));
    return s;
  }
  if (!big_ && !o.big_)
    return make_small_or_big(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
  return make_big(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) {
    Scalar s;
    s.p_ = p_;
    s.n_ = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(n_), p_ - 2, p_));
    return s;
  }
  if (big_) return make_big(1 / *big_);
  return make_small_or_big(d_, n_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (p_ || o.p_) {
    std::uint64_t p = p_ ? p_ : o.p_;
    return residue_mod(p) == o.residue_mod(p);
  }
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  return to_mpq() == o.to_mpq();
}

int Scalar::sign() const {
  if (p_) return n_ ? 1 : 0;
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

std::string Scalar::str() const {
  if (p_) return std::to_string(n_);
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

}  // namespace preproj
