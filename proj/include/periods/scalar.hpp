#pragma once

#include <string>
#include <variant>

#include "periods/padic.hpp"

namespace periods {

// Every matrix/space/map in a computation carries exactly one domain.
struct ScalarDomain {
  enum class Tag { rational, padic } tag = Tag::rational;
  Int p = 0;      // prime, padic only
  long prec = 0;  // context relative precision, padic only

  static ScalarDomain rational() { return {}; }
  static ScalarDomain padic(const Int& p, long n) {
    require(n > 0, errc::bad_precision, "precision must be positive");
    require(p >= 2 && is_prime(p), errc::nonprime_modulus,
            "p must be prime, got " + p.get_str());
    return {Tag::padic, p, n};
  }

  bool is_padic() const { return tag == Tag::padic; }
  bool operator==(const ScalarDomain& o) const {
    return tag == o.tag && (!is_padic() || (p == o.p && prec == o.prec));
  }
  std::string describe() const;
};

class Scalar {
 public:
  Scalar() : value_(Rat(0)) {}
  explicit Scalar(Rat q) : value_(std::move(q)) {}
  explicit Scalar(Padic x) : value_(std::move(x)) {}

  static Scalar zero(const ScalarDomain& d);
  static Scalar one(const ScalarDomain& d);
  static Scalar from_rational(const Rat& q, const ScalarDomain& d);
  static Scalar from_int(long x, const ScalarDomain& d) {
    return from_rational(Rat(x), d);
  }
  static Scalar parse(const std::string& s, const ScalarDomain& d);

  bool is_rational() const { return std::holds_alternative<Rat>(value_); }
  const Rat& rat() const { return std::get<Rat>(value_); }
  const Padic& padic() const { return std::get<Padic>(value_); }
  ScalarDomain domain_of() const;  // padic prec reported as rel_prec

  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar div(const Scalar& o) const;
  Scalar neg() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  Scalar mul_rat(const Rat& c) const;  // scale by an exact rational

  bool is_zero() const;  // zero at working precision for p-adics
  // Equality at the minimum of the two absolute precisions (exact over Q).
  bool eq(const Scalar& o) const;

  // Valuation used for pivot selection; 0 for nonzero rationals.
  long pivot_valuation() const;

  std::string to_string() const;

 private:
  std::variant<Rat, Padic> value_;
  void check_compatible(const Scalar& o) const;
};

}  // namespace periods
