#pragma once

#include <string>

#include "periods/rational.hpp"

namespace periods {

// Capped-relative-precision p-adic number: p^v * u with u a unit known
// modulo p^N, so the value is known modulo p^(v+N). Three shapes:
//   exact zero    : v = +inf (sentinel), N irrelevant
//   inexact zero  : N = 0, value is O(p^v) (all digits cancelled)
//   regular       : N > 0, u != 0 mod p
class Padic {
 public:
  static constexpr long kInf = 1L << 62;

  Padic() : p_(0), v_(kInf), n_(0), u_(0) {}  // uninitialized/zero

  static Padic exact_zero(const Int& p);
  static Padic inexact_zero(const Int& p, long abs_prec);
  // value p^v * u at relative precision n (u reduced mod p^n, may carry p's).
  static Padic make(const Int& p, long v, const Int& u, long n);
  static Padic from_rational(const Rat& a, const Int& p, long n);
  static Padic from_integer(long x, const Int& p, long n);

  const Int& prime() const { return p_; }
  bool exact() const { return v_ == kInf; }
  bool inexact_zero() const { return v_ != kInf && n_ == 0; }
  bool is_zero() const { return exact() || n_ == 0; }
  long valuation() const;          // fails on exact zero
  long rel_prec() const { return n_; }
  long abs_prec() const;           // v + N; kInf for exact zero
  const Int& unit() const { return u_; }

  Padic add(const Padic& o) const;
  Padic sub(const Padic& o) const;
  Padic mul(const Padic& o) const;
  Padic neg() const;
  Padic inv() const;
  Padic pow(long e) const;

  // Congruent at the minimum of the two absolute precisions.
  bool eq_at_precision(const Padic& o) const;

  std::string to_string() const;

 private:
  Int p_;
  long v_;
  long n_;
  Int u_;  // in [0, p^n), unit when n > 0

  void check_same_prime(const Padic& o) const;
};

}  // namespace periods
