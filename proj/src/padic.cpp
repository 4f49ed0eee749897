#include "periods/padic.hpp"

#include <sstream>

namespace periods {

Rat parse_rational(const std::string& s) {
  require(!s.empty(), errc::parse_error, "empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    fail(errc::parse_error, "bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

long padic_val(const Int& n, const Int& p) {
  require(n != 0, errc::internal, "valuation of zero");
  Int m = n, r;
  long v = 0;
  while (true) {
    Int quo = m / p;
    r = m - quo * p;
    if (r != 0) break;
    m = quo;
    ++v;
  }
  return v;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  require(ok != 0, errc::division_by_zero, "non-invertible residue");
  return r;
}

bool is_prime(const Int& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

Padic Padic::exact_zero(const Int& p) {
  Padic z;
  z.p_ = p;
  return z;
}

Padic Padic::inexact_zero(const Int& p, long abs_prec) {
  Padic z;
  z.p_ = p;
  z.v_ = abs_prec;
  z.n_ = 0;
  return z;
}

Padic Padic::make(const Int& p, long v, const Int& u, long n) {
  require(n >= 0, errc::bad_precision, "negative relative precision");
  if (n == 0) return inexact_zero(p, v);
  Int mod = pow_int(p, static_cast<unsigned long>(n));
  Int uu = u % mod;
  if (uu < 0) uu += mod;
  if (uu == 0) return inexact_zero(p, v + n);
  // strip carried powers of p out of the residue
  long extra = padic_val(uu, p);
  if (extra > 0) {
    if (extra >= n) return inexact_zero(p, v + n);
    for (long i = 0; i < extra; ++i) uu /= p;
    v += extra;
    n -= extra;
    mod = pow_int(p, static_cast<unsigned long>(n));
    uu %= mod;
    if (uu == 0) return inexact_zero(p, v + n);
  }
  Padic r;
  r.p_ = p;
  r.v_ = v;
  r.n_ = n;
  r.u_ = uu;
  return r;
}

Padic Padic::from_rational(const Rat& a, const Int& p, long n) {
  require(n > 0, errc::bad_precision, "relative precision must be positive");
  require(p >= 2 && is_prime(p), errc::nonprime_modulus,
          "p must be prime, got " + p.get_str());
  if (a == 0) return exact_zero(p);
  Int num = a.get_num(), den = a.get_den();
  long v = 0;
  if (num != 0) {
    long vn = padic_val(num, p);
    for (long i = 0; i < vn; ++i) num /= p;
    v += vn;
  }
  long vd = padic_val(den, p);
  for (long i = 0; i < vd; ++i) den /= p;
  v -= vd;
  Int mod = pow_int(p, static_cast<unsigned long>(n));
  Int u = (num % mod) * inv_mod(den % mod, mod) % mod;
  if (u < 0) u += mod;
  return make(p, v, u, n);
}

Padic Padic::from_integer(long x, const Int& p, long n) {
  return from_rational(Rat(x), p, n);
}

long Padic::valuation() const {
  require(!exact(), errc::internal, "valuation of exact zero");
  return v_;
}

long Padic::abs_prec() const { return exact() ? kInf : v_ + n_; }

void Padic::check_same_prime(const Padic& o) const {
  require(p_ == o.p_, errc::domain_mismatch,
          "p-adic primes differ: " + p_.get_str() + " vs " + o.p_.get_str());
}

Padic Padic::add(const Padic& o) const {
  check_same_prime(o);
  if (exact()) return o;
  if (o.exact()) return *this;
  long a = std::min(abs_prec(), o.abs_prec());
  long vmin = std::min(v_, o.v_);
  long width = a - vmin;
  if (width <= 0) return inexact_zero(p_, a);
  Int mod = pow_int(p_, static_cast<unsigned long>(width));
  Int w = 0;
  if (n_ > 0) w += u_ * pow_int(p_, static_cast<unsigned long>(v_ - vmin));
  if (o.n_ > 0) w += o.u_ * pow_int(p_, static_cast<unsigned long>(o.v_ - vmin));
  w %= mod;
  return make(p_, vmin, w, width);
}

Padic Padic::neg() const {
  if (is_zero()) return *this;
  Int mod = pow_int(p_, static_cast<unsigned long>(n_));
  return make(p_, v_, mod - u_, n_);
}

Padic Padic::sub(const Padic& o) const { return add(o.neg()); }

Padic Padic::mul(const Padic& o) const {
  check_same_prime(o);
  if (exact() || o.exact()) return exact_zero(p_);
  if (inexact_zero() || o.inexact_zero()) {
    long v = v_ + o.v_;  // O(p^v1) * (p^v2 unit) = O(p^(v1+v2))
    return inexact_zero(p_, v);
  }
  long n = std::min(n_, o.n_);
  Int mod = pow_int(p_, static_cast<unsigned long>(n));
  return make(p_, v_ + o.v_, (u_ * o.u_) % mod, n);
}

Padic Padic::inv() const {
  require(!exact(), errc::division_by_zero, "inverse of zero");
  require(!inexact_zero(), errc::precision_exhausted,
          "inverse of a value that is zero at working precision");
  Int mod = pow_int(p_, static_cast<unsigned long>(n_));
  return make(p_, -v_, inv_mod(u_, mod), n_);
}

Padic Padic::pow(long e) const {
  if (e == 0) {
    require(!is_zero(), errc::division_by_zero, "0^0 in p-adic domain");
    Padic r = *this;
    r.v_ = 0;
    r.u_ = 1;
    return r;
  }
  Padic base = e > 0 ? *this : inv();
  long k = e > 0 ? e : -e;
  Padic acc = base;
  for (long i = 1; i < k; ++i) acc = acc.mul(base);
  return acc;
}

bool Padic::eq_at_precision(const Padic& o) const {
  return sub(o).is_zero();
}

std::string Padic::to_string() const {
  std::ostringstream os;
  if (exact()) {
    os << "0";
  } else if (inexact_zero()) {
    os << "O(" << p_.get_str() << "^" << v_ << ")";
  } else {
    os << p_.get_str() << "^" << v_ << "*" << u_.get_str() << " + O("
       << p_.get_str() << "^" << abs_prec() << ")";
  }
  return os.str();
}

}  // namespace periods
