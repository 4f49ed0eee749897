#pragma once

#include <map>
#include <optional>
#include <vector>

#include "periods/subspace.hpp"

namespace periods {

// Torus multiweight; rank-1 gradings use {w}.
using Multiweight = std::vector<long>;

std::string mw_to_string(const Multiweight& m);
Multiweight mw_add(const Multiweight& a, const Multiweight& b);
Multiweight mw_neg(const Multiweight& a);

struct GradingComponent {
  long weight = 0;          // W-weight
  Multiweight multiweight;  // defaults to {weight}
  Subspace space;
};

// Finite-dimensional space with an increasing weight filtration W, an
// optional decreasing Hodge filtration F and an optional grading.
class BifilteredSpace {
 public:
  BifilteredSpace() = default;

  // W given by its jumps; the top subspace must be the whole space.
  static BifilteredSpace make(size_t dim, const ScalarDomain& d,
                              const std::map<long, Subspace>& w_jumps,
                              const std::map<long, Subspace>& f_jumps = {},
                              const std::vector<GradingComponent>& grading = {});

  // Space split as a direct sum of weight components; W is derived.
  static BifilteredSpace from_grading(
      size_t dim, const ScalarDomain& d,
      const std::vector<GradingComponent>& grading,
      const std::map<long, Subspace>& f_jumps = {});

  size_t dim() const { return dim_; }
  ScalarDomain domain() const { return domain_; }

  const std::map<long, Subspace>& w_jumps() const { return w_; }
  const std::map<long, Subspace>& f_jumps() const { return f_; }
  bool has_f() const { return !f_.empty(); }
  bool has_grading() const { return !grading_.empty(); }
  const std::vector<GradingComponent>& grading() const { return grading_; }

  Subspace w_at(long n) const;  // W_n (zero below lowest jump)
  Subspace f_at(long i) const;  // F^i (full below lowest level, zero above)

  std::vector<long> w_weights() const;  // jump indices, ascending
  std::vector<long> f_levels() const;   // declared levels, ascending

  // For each F jump i, dim F^i == sum_j dim(F^i cap V_j)?
  bool grading_compatible_with_f() const;

  std::string to_string() const;

 private:
  size_t dim_ = 0;
  ScalarDomain domain_;
  std::map<long, Subspace> w_;  // increasing jumps
  std::map<long, Subspace> f_;  // decreasing jumps, keyed by level
  std::vector<GradingComponent> grading_;

  void validate() const;
};

struct GradedComponent {
  long weight = 0;
  Multiweight multiweight;
  size_t dim = 0;
  // Decreasing filtration on the component, in component coordinates.
  std::map<long, Subspace> f;
  // Lift data back into the ambient space of the filtered parent (only
  // populated by associated_graded).
  QuotientSpace lifts;
};

struct GradedSpace {
  ScalarDomain domain;
  std::vector<GradedComponent> components;  // ascending weight

  size_t total_dim() const;
  const GradedComponent* component(long weight) const;
  std::string to_string() const;
};

// gr_W: component n is W_n/W_{n-1} with the induced Hodge filtration
// F^i(gr_n) = image of F^i cap W_n.
GradedSpace associated_graded(const BifilteredSpace& v);

// fil: direct-sum space with W_n = sum of components of weight <= n; the
// grading is retained and F is the direct-sum filtration when present.
BifilteredSpace fil_of_graded(const GradedSpace& g);

BifilteredSpace tensor(const BifilteredSpace& a, const BifilteredSpace& b);
BifilteredSpace dual(const BifilteredSpace& v);

// hom(V, V) = V tensor V*; index (i,j) -> i*dim+j maps basis_j -> basis_i.
BifilteredSpace end_space(const BifilteredSpace& v);
Vec end_vectorize(const Mat& m);
Mat end_matrixize(const Vec& v, size_t n);

}  // namespace periods
