#include "periods/subspace.hpp"

#include <sstream>

namespace periods {

Subspace Subspace::zero(size_t ambient, const ScalarDomain& d) {
  Subspace s;
  s.ambient_ = ambient;
  s.domain_ = d;
  return s;
}

Subspace Subspace::full(size_t ambient, const ScalarDomain& d) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, Scalar::zero(d));
    e[i] = Scalar::one(d);
    rows.push_back(e);
  }
  return span(ambient, rows, d);
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors,
                        const ScalarDomain& d) {
  Subspace s;
  s.ambient_ = ambient;
  s.domain_ = d;
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(vectors);
  require(m.cols() == ambient, errc::internal, "span vector length mismatch");
  std::vector<size_t> piv;
  Mat e = rref(m, &piv);
  for (size_t i = 0; i < piv.size(); ++i) {
    Vec row;
    for (size_t j = 0; j < ambient; ++j) row.push_back(e.at(i, j));
    s.basis_.push_back(row);
  }
  s.pivots_ = piv;
  return s;
}

Vec Subspace::reduce_mod(const Vec& v) const {
  Vec r = v;
  for (size_t k = 0; k < basis_.size(); ++k) {
    const Scalar& c = r[pivots_[k]];
    if (c.is_zero()) continue;
    r = vec_sub(r, vec_scale(basis_[k], c));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  return vec_is_zero(reduce_mod(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::eq(const Subspace& other) const {
  return dim() == other.dim() && contains(other) && other.contains(*this);
}

Subspace Subspace::sum(const Subspace& other) const {
  require(ambient_ == other.ambient_, errc::internal, "ambient mismatch");
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  if (rows.empty()) return zero(ambient_, domain_);
  return span(ambient_, rows, domain_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require(ambient_ == other.ambient_, errc::internal, "ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(ambient_, domain_);
  // Zassenhaus-free approach: x in both spans. Solve [B1^T | -B2^T] null
  // space: coefficients (a, b) with a*B1 = b*B2.
  size_t d1 = dim(), d2 = other.dim();
  Mat m(ambient_, d1 + d2, domain_);
  for (size_t j = 0; j < d1; ++j)
    for (size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (size_t j = 0; j < d2; ++j)
    for (size_t i = 0; i < ambient_; ++i)
      m.at(i, d1 + j) = other.basis_[j][i].neg();
  auto ker = kernel_basis(m);
  std::vector<Vec> rows;
  for (const auto& k : ker) {
    Vec v(ambient_, Scalar::zero(domain_));
    for (size_t j = 0; j < d1; ++j)
      v = vec_add(v, vec_scale(basis_[j], k[j]));
    rows.push_back(v);
  }
  if (rows.empty()) return zero(ambient_, domain_);
  return span(ambient_, rows, domain_);
}

Subspace Subspace::echelon_complement() const {
  std::vector<bool> is_piv(ambient_, false);
  for (size_t c : pivots_) is_piv[c] = true;
  std::vector<Vec> rows;
  for (size_t c = 0; c < ambient_; ++c) {
    if (is_piv[c]) continue;
    Vec e(ambient_, Scalar::zero(domain_));
    e[c] = Scalar::one(domain_);
    rows.push_back(e);
  }
  if (rows.empty()) return zero(ambient_, domain_);
  return span(ambient_, rows, domain_);
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec r = v;
  Vec coords(dim(), Scalar::zero(domain_));
  for (size_t k = 0; k < basis_.size(); ++k) {
    const Scalar& c = r[pivots_[k]];
    if (c.is_zero()) continue;
    coords[k] = c;
    r = vec_sub(r, vec_scale(basis_[k], c));
  }
  require(vec_is_zero(r), errc::internal, "vector outside subspace");
  return coords;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_, domain_);
  Mat m = Mat::from_rows(basis_);
  auto ker = kernel_basis(m);
  if (ker.empty()) return zero(ambient_, domain_);
  return span(ambient_, ker, domain_);
}

Subspace Subspace::image(const Mat& m) const {
  std::vector<Vec> rows;
  for (const auto& b : basis_) rows.push_back(m.apply(b));
  if (rows.empty()) return zero(m.rows(), domain_);
  return span(m.rows(), rows, domain_);
}

Subspace Subspace::preimage(const Mat& m) const {
  // {x : m x in this} = kernel of (reduce_mod circle m)
  // Solve m x = sum c_i b_i: kernel of [m | -B^T] projected to x.
  size_t n = m.cols();
  size_t d = dim();
  Mat big(m.rows(), n + d, domain_);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < n; ++j) big.at(i, j) = m.at(i, j);
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < m.rows(); ++i)
      big.at(i, n + k) = basis_[k][i].neg();
  auto ker = kernel_basis(big);
  std::vector<Vec> rows;
  for (const auto& kv : ker) {
    Vec x(kv.begin(), kv.begin() + static_cast<long>(n));
    rows.push_back(x);
  }
  if (rows.empty()) return zero(n, domain_);
  return span(n, rows, domain_);
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (size_t i = 0; i < basis_.size(); ++i)
    os << (i ? ", " : "") << vec_to_string(basis_[i]);
  os << "} in k^" << ambient_;
  return os.str();
}

Vec QuotientSpace::coords(const Vec& v) const {
  require(total.contains(v), errc::internal, "vector outside total space");
  Vec r = sub.reduce_mod(v);
  Vec out(dim, Scalar::zero(domain));
  // Peeling order matters: each reduced row's leading coordinate does not
  // appear in later rows, so peel in reverse echelon order.
  for (size_t k = reduced.size(); k-- > 0;) {
    const Vec& srow = reduced[k];
    size_t lead = srow.size();
    for (size_t j = 0; j < srow.size(); ++j)
      if (!srow[j].is_zero()) { lead = j; break; }
    require(lead < srow.size(), errc::internal, "degenerate section row");
    Scalar c = r[lead].div(srow[lead]);
    out[k] = c;
    r = vec_sub(r, vec_scale(srow, c));
  }
  require(vec_is_zero(r), errc::internal, "quotient coordinates failed");
  return out;
}

QuotientSpace quotient(const Subspace& total, const Subspace& sub) {
  require(total.contains(sub), errc::internal, "quotient: S not inside W");
  QuotientSpace q;
  q.domain = total.domain();
  q.sub = sub;
  q.total = total;
  // Greedy pick of total-basis rows whose reductions mod S stay independent;
  // reductions are kept echelonized for determinism.
  std::vector<Vec> reduced;
  for (const auto& row : total.basis()) {
    Vec r = sub.reduce_mod(row);
    // reduce against chosen rows
    for (const auto& cho : reduced) {
      size_t lead = cho.size();
      for (size_t j = 0; j < cho.size(); ++j)
        if (!cho[j].is_zero()) { lead = j; break; }
      if (lead == cho.size()) continue;
      if (!r[lead].is_zero()) r = vec_sub(r, vec_scale(cho, r[lead].div(cho[lead])));
    }
    if (!vec_is_zero(r)) {
      reduced.push_back(r);
      q.section.push_back(row);
    }
  }
  q.dim = q.section.size();
  return q;
}

}  // namespace periods
