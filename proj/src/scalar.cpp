#include "periods/scalar.hpp"

#include "periods/hash.hpp"

namespace periods {

const char* errc_name(errc c) {
  switch (c) {
    case errc::domain_mismatch: return "DOMAIN_MISMATCH";
    case errc::division_by_zero: return "DIVISION_BY_ZERO";
    case errc::nonprime_modulus: return "NONPRIME_MODULUS";
    case errc::bad_precision: return "BAD_PRECISION";
    case errc::precision_exhausted: return "PRECISION_EXHAUSTED";
    case errc::spectra_not_disjoint: return "SPECTRA_NOT_DISJOINT";
    case errc::besser_condition_failed: return "BESSER_CONDITION_FAILED";
    case errc::not_effective: return "NOT_EFFECTIVE";
    case errc::f_not_subalgebra: return "F_NOT_SUBALGEBRA";
    case errc::relations_violated: return "RELATIONS_VIOLATED";
    case errc::depth_overflow: return "DEPTH_OVERFLOW";
    case errc::not_in_image: return "NOT_IN_IMAGE";
    case errc::no_f0_lift: return "NO_F0_LIFT";
    case errc::inputs_not_splittings: return "INPUTS_NOT_SPLITTINGS";
    case errc::composition_nonzero: return "COMPOSITION_NONZERO";
    case errc::diagram_violation: return "DIAGRAM_VIOLATION";
    case errc::identity_violation: return "IDENTITY_VIOLATION";
    case errc::size_limit: return "SIZE_LIMIT";
    case errc::validation_failed: return "VALIDATION_FAILED";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string ScalarDomain::describe() const {
  if (!is_padic()) return "Q";
  return "Q_" + p.get_str() + " (prec " + std::to_string(prec) + ")";
}

Scalar Scalar::zero(const ScalarDomain& d) {
  if (d.is_padic()) return Scalar(Padic::exact_zero(d.p));
  return Scalar(Rat(0));
}

Scalar Scalar::one(const ScalarDomain& d) { return from_rational(Rat(1), d); }

Scalar Scalar::from_rational(const Rat& q, const ScalarDomain& d) {
  if (d.is_padic()) return Scalar(Padic::from_rational(q, d.p, d.prec));
  return Scalar(q);
}

Scalar Scalar::parse(const std::string& s, const ScalarDomain& d) {
  return from_rational(parse_rational(s), d);
}

ScalarDomain Scalar::domain_of() const {
  if (is_rational()) return ScalarDomain::rational();
  ScalarDomain d;
  d.tag = ScalarDomain::Tag::padic;
  d.p = padic().prime();
  d.prec = padic().rel_prec();
  return d;
}

void Scalar::check_compatible(const Scalar& o) const {
  require(is_rational() == o.is_rational(), errc::domain_mismatch,
          "cannot mix rational and p-adic scalars");
}

Scalar Scalar::add(const Scalar& o) const {
  check_compatible(o);
  if (is_rational()) return Scalar(Rat(rat() + o.rat()));
  return Scalar(padic().add(o.padic()));
}

Scalar Scalar::sub(const Scalar& o) const {
  check_compatible(o);
  if (is_rational()) return Scalar(Rat(rat() - o.rat()));
  return Scalar(padic().sub(o.padic()));
}

Scalar Scalar::mul(const Scalar& o) const {
  check_compatible(o);
  if (is_rational()) return Scalar(Rat(rat() * o.rat()));
  return Scalar(padic().mul(o.padic()));
}

Scalar Scalar::div(const Scalar& o) const { return mul(o.inv()); }

Scalar Scalar::neg() const {
  if (is_rational()) return Scalar(Rat(-rat()));
  return Scalar(padic().neg());
}

Scalar Scalar::inv() const {
  if (is_rational()) {
    require(rat() != 0, errc::division_by_zero, "inverse of zero");
    return Scalar(Rat(1 / rat()));
  }
  return Scalar(padic().inv());
}

Scalar Scalar::pow(long e) const {
  if (is_rational()) {
    if (e == 0) return Scalar(Rat(1));
    Rat b = e > 0 ? rat() : Rat(1 / rat());
    Rat acc = b;
    for (long i = 1; i < (e > 0 ? e : -e); ++i) acc *= b;
    return Scalar(acc);
  }
  return Scalar(padic().pow(e));
}

Scalar Scalar::mul_rat(const Rat& c) const {
  if (is_rational()) return Scalar(Rat(rat() * c));
  if (c == 0) return Scalar(Padic::exact_zero(padic().prime()));
  // convert at the operand's own relative precision
  Padic cc = Padic::from_rational(c, padic().prime(),
                                  std::max<long>(padic().rel_prec(), 1));
  return Scalar(padic().mul(cc));
}

bool Scalar::is_zero() const {
  if (is_rational()) return rat() == 0;
  return padic().is_zero();
}

bool Scalar::eq(const Scalar& o) const {
  check_compatible(o);
  if (is_rational()) return rat() == o.rat();
  return padic().eq_at_precision(o.padic());
}

long Scalar::pivot_valuation() const {
  if (is_rational()) return 0;
  return padic().valuation();
}

std::string Scalar::to_string() const {
  if (is_rational()) return rat_to_string(rat());
  return padic().to_string();
}

}  // namespace periods
