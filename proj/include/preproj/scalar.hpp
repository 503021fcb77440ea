#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace preproj {

// Exact field element. A scalar with modulus 0 is a rational; otherwise it is a
// residue mod a prime. Rationals combine with residues by reduction, so integer
// literals like Scalar(-1) work in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : n_(v) {}  // NOLINT(google-explicit-constructor)
  static Scalar fraction(long num, long den);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar residue(long v, std::uint64_t p);

  bool is_zero() const;
  bool is_one() const;
  std::uint64_t modulus() const { return p_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // sign of a rational (residues: 0 or 1)
  int sign() const;
  mpq_class to_mpq() const;
  std::string str() const;

 private:
  std::int64_t n_ = 0, d_ = 1;  // small rational, d_ > 0, gcd 1
  std::uint64_t p_ = 0;          // residue mode when nonzero, value in n_
  std::shared_ptr<const mpq_class> big_;

  static Scalar make_small_or_big(__int128 n, __int128 d);
  static Scalar make_big(mpq_class q);
  std::uint64_t residue_mod(std::uint64_t p) const;
};

struct Field {
  std::uint64_t p = 0;  // 0 = rationals
  bool is_rational() const { return p == 0; }
  Scalar make(long v) const { return p ? Scalar::residue(v, p) : Scalar(v); }
  Scalar make(const mpq_class& q) const;
  std::string str() const { return p ? "F " + std::to_string(p) : "Q"; }
  bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime(std::uint64_t p);

}  // namespace preproj
