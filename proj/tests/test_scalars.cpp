#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "periods/rng.hpp"
#include "periods/scalar.hpp"

using namespace periods;

namespace {

// Oracle: residue r with a*r = 1 mod m, by brute force over small moduli.
long brute_inverse(long a, long m) {
  for (long r = 1; r < m; ++r)
    if ((a % m) * r % m == 1) return r;
  return -1;
}

Rat rand_rat(Rng& rng) {
  long num = rng.range(-30, 30);
  long den = rng.range(1, 20);
  return make_rat(num, den);
}

}  // namespace

TEST_CASE("padic image of 1/3 at p=2, N=4") {
  // oracle: 3 * 11 = 33 = 2*16 + 1
  CHECK(brute_inverse(3, 16) == 11);
  Padic x = Padic::from_rational(Rat(1, 3), 2, 4);
  CHECK(x.valuation() == 0);
  CHECK(x.unit() == 11);
  CHECK(x.rel_prec() == 4);
}

TEST_CASE("padic image of 0 is exact zero") {
  Padic z = Padic::from_rational(Rat(0), 7, 6);
  CHECK(z.exact());
  CHECK(z.is_zero());
}

TEST_CASE("padic image of 9/2 at p=3, N=4") {
  // oracle: 2 * 41 = 82 = 81 + 1
  CHECK(brute_inverse(2, 81) == 41);
  Padic x = Padic::from_rational(Rat(9, 2), 3, 4);
  CHECK(x.valuation() == 2);
  CHECK(x.unit() == 41);
}

TEST_CASE("from_rational rejects bad inputs") {
  CHECK_THROWS_AS(Padic::from_rational(Rat(1, 3), 4, 4), engine_error);
  CHECK_THROWS_AS(Padic::from_rational(Rat(1, 3), 5, 0), engine_error);
}

TEST_CASE("rational field ops") {
  ScalarDomain q = ScalarDomain::rational();
  Scalar a = Scalar::parse("1/2", q), b = Scalar::parse("1/3", q);
  CHECK(a.add(b).eq(Scalar::parse("5/6", q)));
  CHECK(a.mul(b).eq(Scalar::parse("1/6", q)));
  CHECK_THROWS_AS(Scalar::zero(q).inv(), engine_error);
}

TEST_CASE("inverse of p has valuation -1") {
  Padic p5 = Padic::make(5, 1, 1, 8);
  Padic i = p5.inv();
  CHECK(i.valuation() == -1);
  CHECK(i.unit() == 1);
}

TEST_CASE("cancellation yields a zero at precision") {
  // p=3, N=2: units congruent mod 9 but tracked at different precision
  Padic a = Padic::make(3, 0, 1, 2);
  Padic b = Padic::make(3, 0, 1 + 9, 2);  // same residue mod 9
  Padic d = a.sub(b);
  CHECK(d.is_zero());
  CHECK(d.inexact_zero());
  CHECK(d.abs_prec() == 2);
  CHECK(a.eq_at_precision(b));
}

TEST_CASE("domain mismatch is rejected") {
  ScalarDomain q = ScalarDomain::rational();
  ScalarDomain p5 = ScalarDomain::padic(5, 10);
  CHECK_THROWS_AS(Scalar::one(q).add(Scalar::one(p5)), engine_error);
  Scalar a(Padic::from_integer(2, 5, 10));
  Scalar b(Padic::from_integer(2, 7, 10));
  CHECK_THROWS_AS(a.add(b), engine_error);
}

TEST_CASE("rational arithmetic is a field on random triples") {
  Rng rng(1234);
  ScalarDomain q = ScalarDomain::rational();
  for (int t = 0; t < 200; ++t) {
    Scalar a(rand_rat(rng)), b(rand_rat(rng)), c(rand_rat(rng));
    CHECK(a.add(b).eq(b.add(a)));
    CHECK(a.mul(b).eq(b.mul(a)));
    CHECK(a.add(b.add(c)).eq(a.add(b).add(c)));
    CHECK(a.mul(b.mul(c)).eq(a.mul(b).mul(c)));
    CHECK(a.mul(b.add(c)).eq(a.mul(b).add(a.mul(c))));
    if (!a.is_zero()) CHECK(a.mul(a.inv()).eq(Scalar::one(q)));
  }
}

TEST_CASE("rational to padic is a ring homomorphism at precision") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    long p = (t % 3 == 0) ? 3 : (t % 3 == 1 ? 5 : 7);
    long n = 12;
    Rat a, b;
    do {
      a = rand_rat(rng);
    } while (a.get_den() % p == 0);
    do {
      b = rand_rat(rng);
    } while (b.get_den() % p == 0);
    Padic pa = Padic::from_rational(a, p, n);
    Padic pb = Padic::from_rational(b, p, n);
    CHECK(pa.add(pb).eq_at_precision(Padic::from_rational(a + b, p, n)));
    CHECK(pa.mul(pb).eq_at_precision(Padic::from_rational(a * b, p, n)));
    CHECK(pa.sub(pb).eq_at_precision(Padic::from_rational(a - b, p, n)));
  }
}

TEST_CASE("padic precision propagation") {
  // multiply keeps min relative precision, add keeps min absolute
  Padic a = Padic::make(5, 2, 3, 6);   // abs prec 8
  Padic b = Padic::make(5, -1, 2, 4);  // abs prec 3
  CHECK(a.mul(b).rel_prec() == 4);
  CHECK(a.mul(b).valuation() == 1);
  CHECK(a.add(b).abs_prec() == 3);
  CHECK(a.inv().rel_prec() == 6);
  CHECK(a.inv().valuation() == -2);
}

TEST_CASE("scalar serialization round trip") {
  ScalarDomain q = ScalarDomain::rational();
  Scalar a = Scalar::parse("-22/7", q);
  CHECK(Scalar::parse(a.to_string(), q).eq(a));
}
