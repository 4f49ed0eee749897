#pragma once

#include "periods/matrix.hpp"

namespace periods {

// Subspace of k^n held as a canonical reduced-row-echelon basis, so
// membership and equality are decidable (at working precision over Q_p).
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(size_t ambient, const ScalarDomain& d);
  static Subspace full(size_t ambient, const ScalarDomain& d);
  static Subspace span(size_t ambient, const std::vector<Vec>& vectors,
                       const ScalarDomain& d);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  ScalarDomain domain() const { return domain_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool eq(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Rows that the echelon structure leaves free: complementary coordinate
  // subspace spanned by non-pivot unit vectors. Deterministic.
  Subspace echelon_complement() const;

  // Coordinates of v in this basis; fails if v is outside.
  Vec coordinates(const Vec& v) const;

  // v reduced modulo this subspace (kill pivot coordinates).
  Vec reduce_mod(const Vec& v) const;

  // Annihilator in the dual space (kernel of basis matrix).
  Subspace annihilator() const;

  // Image under a linear map given on ambient coordinates.
  Subspace image(const Mat& m) const;
  // Preimage of this subspace under m.
  Subspace preimage(const Mat& m) const;

  std::string to_string() const;

 private:
  size_t ambient_;
  ScalarDomain domain_;
  std::vector<Vec> basis_;      // RREF rows
  std::vector<size_t> pivots_;
};

// Quotient W/S with a deterministic echelon section: basis vectors of W whose
// S-reduction is kept in echelon form, plus the lift data.
struct QuotientSpace {
  // Representatives in the ambient space (lifts of the quotient basis).
  std::vector<Vec> section;
  // section rows reduced mod S and echelonized against each other; the
  // leading coordinates drive coords().
  std::vector<Vec> reduced;
  size_t dim = 0;

  // Coordinates of [v] in the quotient basis (v must lie in W).
  Vec coords(const Vec& v) const;
  ScalarDomain domain;
  Subspace sub;    // S
  Subspace total;  // W
};

QuotientSpace quotient(const Subspace& total, const Subspace& sub);

}  // namespace periods
