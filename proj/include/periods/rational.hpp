#pragma once

#include <gmpxx.h>

#include <string>

#include "periods/error.hpp"

namespace periods {

using Int = mpz_class;
using Rat = mpq_class;

// "a/b" or "a"; canonicalized so gcd(a,b)=1 and b>0.
Rat parse_rational(const std::string& s);
std::string rat_to_string(const Rat& q);

inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Exponent of p in n (n != 0).
long padic_val(const Int& n, const Int& p);

Int pow_int(const Int& base, unsigned long e);

// Inverse of a modulo m; fails if not coprime.
Int inv_mod(const Int& a, const Int& m);

bool is_prime(const Int& p);

}  // namespace periods
