#include "periods/filtered_map.hpp"

#include <set>

namespace periods {

namespace {

Subspace fil_at(const BifilteredSpace& v, FiltrationKind kind, long n) {
  return kind == FiltrationKind::weight ? v.w_at(n) : v.f_at(n);
}

std::vector<long> jumps_of(const BifilteredSpace& v, FiltrationKind kind) {
  return kind == FiltrationKind::weight ? v.w_weights() : v.f_levels();
}

// gr at n: W_n/W_{n-1} for weight, F^n/F^{n+1} for hodge.
QuotientSpace graded_piece(const BifilteredSpace& v, FiltrationKind kind,
                           long n) {
  if (kind == FiltrationKind::weight)
    return quotient(v.w_at(n), v.w_at(n - 1));
  return quotient(v.f_at(n), v.f_at(n + 1));
}

Subspace image_of(const FilteredMap& f) {
  return Subspace::full(f.source->dim(), f.source->domain()).image(f.matrix);
}

Subspace kernel_of(const FilteredMap& g) {
  auto rows = kernel_basis(g.matrix);
  if (rows.empty()) return Subspace::zero(g.source->dim(), g.source->domain());
  return Subspace::span(g.source->dim(), rows, g.source->domain());
}

}  // namespace

bool FilteredMap::w_compatible() const {
  for (long n : source->w_weights())
    if (!target->w_at(n).contains(source->w_at(n).image(matrix))) return false;
  return true;
}

bool FilteredMap::f_compatible() const {
  for (long i : source->f_levels())
    if (!target->f_at(i).contains(source->f_at(i).image(matrix))) return false;
  return true;
}

bool is_strict(const FilteredMap& f, FiltrationKind kind) {
  Subspace im = image_of(f);
  std::set<long> jumps;
  for (long n : jumps_of(*f.source, kind)) jumps.insert(n);
  for (long n : jumps_of(*f.target, kind)) jumps.insert(n);
  for (long n : jumps) {
    Subspace lhs = fil_at(*f.source, kind, n).image(f.matrix);
    Subspace rhs = fil_at(*f.target, kind, n).intersect(im);
    if (!lhs.eq(rhs)) return false;
  }
  return true;
}

ExactnessReport check_exactness_equivalences(const FilteredMap& f,
                                             const FilteredMap& g,
                                             FiltrationKind kind) {
  require(f.target == g.source || f.target->dim() == g.source->dim(),
          errc::internal, "maps not composable");
  Mat comp = g.matrix.mul(f.matrix);
  require(comp.is_zero(), errc::composition_nonzero,
          "g o f is nonzero; exactness test undefined");

  ExactnessReport r;
  Subspace ker = kernel_of(g);
  Subspace im = image_of(f);
  bool underlying_exact = ker.eq(im);
  r.exact_with_strictness = underlying_exact && is_strict(f, kind);

  std::set<long> jumps;
  for (long n : jumps_of(*f.source, kind)) jumps.insert(n);
  for (long n : jumps_of(*f.target, kind)) jumps.insert(n);
  for (long n : jumps_of(*g.target, kind)) jumps.insert(n);

  r.levelwise_exact = true;
  for (long n : jumps) {
    Subspace fil_m = fil_at(*f.target, kind, n);
    Subspace lhs = ker.intersect(fil_m);
    Subspace rhs = fil_at(*f.source, kind, n).image(f.matrix);
    if (!lhs.eq(rhs)) {
      r.levelwise_exact = false;
      break;
    }
  }

  // The induced graded maps exist only for filtration-compatible maps; a
  // level where compatibility fails cannot be graded-exact.
  auto compatible_at = [&](const FilteredMap& m, long n) {
    return fil_at(*m.target, kind, n)
        .contains(fil_at(*m.source, kind, n).image(m.matrix));
  };
  r.graded_exact = true;
  for (long n : jumps) {
    if (!compatible_at(f, n) || !compatible_at(g, n)) {
      r.graded_exact = false;
      break;
    }
    QuotientSpace qm = graded_piece(*f.target, kind, n);
    if (qm.dim == 0) continue;
    QuotientSpace ql = graded_piece(*f.source, kind, n);
    QuotientSpace qn = graded_piece(*g.target, kind, n);
    // image of gr_n f
    std::vector<Vec> im_rows;
    for (const auto& s : ql.section) im_rows.push_back(qm.coords(f.matrix.apply(s)));
    Subspace gr_im = im_rows.empty()
                         ? Subspace::zero(qm.dim, f.source->domain())
                         : Subspace::span(qm.dim, im_rows, f.source->domain());
    // kernel of gr_n g: matrix with columns over qm section
    Subspace gr_ker = Subspace::zero(qm.dim, f.source->domain());
    if (qn.dim == 0) {
      gr_ker = Subspace::full(qm.dim, f.source->domain());
    } else {
      Mat gg(qn.dim, qm.dim, f.source->domain());
      for (size_t k = 0; k < qm.section.size(); ++k) {
        Vec col = qn.coords(g.matrix.apply(qm.section[k]));
        for (size_t i = 0; i < qn.dim; ++i) gg.at(i, k) = col[i];
      }
      auto kb = kernel_basis(gg);
      gr_ker = kb.empty() ? Subspace::zero(qm.dim, f.source->domain())
                          : Subspace::span(qm.dim, kb, f.source->domain());
    }
    if (!gr_ker.eq(gr_im)) {
      r.graded_exact = false;
      break;
    }
  }
  return r;
}

}  // namespace periods
