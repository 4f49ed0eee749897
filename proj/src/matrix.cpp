#include "periods/matrix.hpp"

#include <sstream>

namespace periods {

Mat Mat::identity(size_t n, const ScalarDomain& d) {
  Mat m(n, n, d);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  require(!rows.empty() && !rows[0].empty(), errc::internal,
          "from_rows needs a nonempty matrix");
  Mat m;
  m.rows_ = rows.size();
  m.cols_ = rows[0].size();
  for (const auto& r : rows) {
    require(r.size() == m.cols_, errc::internal, "ragged rows");
    for (const auto& x : r) m.a_.push_back(x);
  }
  return m;
}

Mat Mat::mul(const Mat& o) const {
  require(cols_ == o.rows_, errc::internal, "matrix shape mismatch in mul");
  Mat r(rows_, o.cols_, a_.empty() ? ScalarDomain::rational() : a_[0].domain_of());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j).add(aik.mul(o.at(k, j)));
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  require(v.size() == cols_, errc::internal, "shape mismatch in apply");
  Vec r(rows_, Scalar::zero(v.empty() ? ScalarDomain::rational() : v[0].domain_of()));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] = r[i].add(at(i, j).mul(v[j]));
  return r;
}

Vec Mat::apply_row(const Vec& v) const {
  require(v.size() == rows_, errc::internal, "shape mismatch in apply_row");
  Vec r(cols_, Scalar::zero(v.empty() ? ScalarDomain::rational() : v[0].domain_of()));
  for (size_t j = 0; j < cols_; ++j)
    for (size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) r[j] = r[j].add(v[i].mul(at(i, j)));
  return r;
}

Mat Mat::add(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::internal, "shape");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].add(o.a_[i]);
  return r;
}

Mat Mat::sub(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, errc::internal, "shape");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].sub(o.a_[i]);
  return r;
}

Mat Mat::scale(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = x.mul(c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, a_.empty() ? ScalarDomain::rational() : a_[0].domain_of());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::inverse() const {
  require(rows_ == cols_, errc::internal, "inverse of non-square matrix");
  ScalarDomain d = a_.empty() ? ScalarDomain::rational() : a_[0].domain_of();
  Mat inv(rows_, rows_, d);
  for (size_t j = 0; j < rows_; ++j) {
    Vec e(rows_, Scalar::zero(d));
    e[j] = Scalar::one(d);
    auto res = solve_linear(*this, e);
    require(res.solution.has_value(), errc::division_by_zero,
            "matrix not invertible");
    for (size_t i = 0; i < rows_; ++i) inv.at(i, j) = (*res.solution)[i];
  }
  return inv;
}

Mat Mat::tensor(const Mat& o) const {
  ScalarDomain d = a_.empty() ? ScalarDomain::rational() : a_[0].domain_of();
  Mat r(rows_ * o.rows_, cols_ * o.cols_, d);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j).mul(o.at(k, l));
    }
  return r;
}

bool Mat::eq(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].eq(o.a_[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> rows;
  for (size_t i = 0; i < rows_; ++i) {
    Vec r;
    for (size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    rows.push_back(r);
  }
  return rows;
}

Scalar dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), errc::internal, "dot shape");
  Scalar s = Scalar::zero(a.empty() ? ScalarDomain::rational() : a[0].domain_of());
  for (size_t i = 0; i < a.size(); ++i) s = s.add(a[i].mul(b[i]));
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), errc::internal, "vec shape");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].add(b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), errc::internal, "vec shape");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].sub(b[i]);
  return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x = x.mul(c);
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].eq(b[i])) return false;
  return true;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_zero(size_t n, const ScalarDomain& d) {
  return Vec(n, Scalar::zero(d));
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i].to_string();
  os << ")";
  return os.str();
}

namespace {

// Pick the pivot row: first nonzero over Q, minimal valuation over Q_p.
// Returns npos if the column is zero; throws if every nonzero candidate is an
// inexact zero (cannot certify anything at working precision).
size_t pick_pivot(const Mat& m, size_t col, size_t start, bool padic) {
  size_t best = static_cast<size_t>(-1);
  bool saw_inexact = false;
  long best_val = 0;
  for (size_t i = start; i < m.rows(); ++i) {
    const Scalar& x = m.at(i, col);
    if (x.is_zero()) {
      if (!x.is_rational() && x.padic().inexact_zero()) saw_inexact = true;
      continue;
    }
    if (!padic) return i;
    long v = x.pivot_valuation();
    if (best == static_cast<size_t>(-1) || v < best_val) {
      best = i;
      best_val = v;
    }
  }
  if (best == static_cast<size_t>(-1) && saw_inexact)
    fail(errc::precision_exhausted,
         "pivot column is zero at working precision");
  return best;
}

}  // namespace

Mat rref(const Mat& a, std::vector<size_t>* pivots, long* precision_loss) {
  Mat m = a;
  bool padic = m.rows() > 0 && m.cols() > 0 && !m.at(0, 0).is_rational();
  long loss = 0;
  size_t r = 0;
  std::vector<size_t> piv;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t pr = pick_pivot(m, c, r, padic);
    if (pr == static_cast<size_t>(-1)) continue;
    if (pr != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar pv = m.at(r, c);
    if (padic) loss += std::max(0L, pv.pivot_valuation());
    Scalar ip = pv.inv();
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j).mul(ip);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j).sub(f.mul(m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  if (precision_loss) *precision_loss = loss;
  return m;
}

SolveResult solve_linear(const Mat& a, const Vec& b) {
  require(a.rows() == b.size(), errc::internal, "solve shape mismatch");
  ScalarDomain d = b.empty() ? ScalarDomain::rational() : b[0].domain_of();
  Mat aug(a.rows(), a.cols() + 1, d);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<size_t> piv;
  long loss = 0;
  Mat e = rref(aug, &piv, &loss);
  SolveResult res;
  res.precision_loss = loss;
  // inconsistent iff a pivot lands in the augmented column
  if (!piv.empty() && piv.back() == a.cols()) return res;
  Vec x(a.cols(), Scalar::zero(d));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = e.at(k, a.cols());
  res.solution = x;
  return res;
}

std::vector<Vec> kernel_basis(const Mat& a) {
  ScalarDomain d =
      a.rows() && a.cols() ? a.at(0, 0).domain_of() : ScalarDomain::rational();
  std::vector<size_t> piv;
  Mat e = rref(a, &piv);
  std::vector<bool> is_piv(a.cols(), false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_piv[c]) continue;
    Vec v(a.cols(), Scalar::zero(d));
    v[c] = Scalar::one(d);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = e.at(k, c).neg();
    basis.push_back(v);
  }
  return basis;
}

size_t rank(const Mat& a) {
  std::vector<size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::vector<Scalar> char_poly(const Mat& a) {
  require(a.rows() == a.cols(), errc::internal, "char_poly of non-square");
  size_t n = a.rows();
  ScalarDomain d = n ? a.at(0, 0).domain_of() : ScalarDomain::rational();
  // Faddeev-LeVerrier: M_0 = I, c_n = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Scalar> c(n + 1, Scalar::zero(d));
  c[n] = Scalar::one(d);
  Mat m = Mat::identity(n, d);
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      m = a.mul(m);
      for (size_t i = 0; i < n; ++i) m.at(i, i) = m.at(i, i).add(c[n - k + 1]);
    }
    Mat am = a.mul(m);
    Scalar tr = Scalar::zero(d);
    for (size_t i = 0; i < n; ++i) tr = tr.add(am.at(i, i));
    c[n - k] = tr.neg().mul_rat(Rat(1, static_cast<unsigned long>(k)));
  }
  return c;
}

Scalar determinant(const Mat& a) {
  auto c = char_poly(a);
  Scalar det = c[0];
  if (a.rows() % 2 == 1) det = det.neg();  // det(A) = (-1)^n c_0
  return det;
}

Scalar resultant(const std::vector<Scalar>& f, const std::vector<Scalar>& g) {
  // drop leading zeros
  auto deg = [](const std::vector<Scalar>& p) {
    size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d == 0 ? static_cast<size_t>(-1) : d - 1;
  };
  size_t df = deg(f), dg = deg(g);
  require(df != static_cast<size_t>(-1) && dg != static_cast<size_t>(-1),
          errc::internal, "resultant of zero polynomial");
  ScalarDomain d = f[0].domain_of();
  if (df == 0 && dg == 0) return Scalar::one(d);
  size_t n = df + dg;
  Mat s(n, n, d);
  for (size_t i = 0; i < dg; ++i)
    for (size_t j = 0; j <= df; ++j) s.at(i, i + j) = f[df - j];
  for (size_t i = 0; i < df; ++i)
    for (size_t j = 0; j <= dg; ++j) s.at(dg + i, i + j) = g[dg - j];
  return determinant(s);
}

Mat exp_nilpotent(const Mat& n) {
  size_t dim = n.rows();
  ScalarDomain d = dim ? n.at(0, 0).domain_of() : ScalarDomain::rational();
  Mat acc = Mat::identity(dim, d);
  Mat term = Mat::identity(dim, d);
  for (size_t k = 1; k <= dim; ++k) {
    term = term.mul(n).scale(Scalar::from_rational(
        Rat(1, static_cast<unsigned long>(k)), d));
    if (term.is_zero()) return acc;
    acc = acc.add(term);
  }
  require(term.mul(n).is_zero(), errc::internal, "matrix is not nilpotent");
  return acc;
}

Mat log_unipotent(const Mat& u) {
  size_t dim = u.rows();
  ScalarDomain d = dim ? u.at(0, 0).domain_of() : ScalarDomain::rational();
  Mat n = u.sub(Mat::identity(dim, d));
  Mat acc(dim, dim, d);
  Mat term = Mat::identity(dim, d);
  for (size_t k = 1; k <= dim; ++k) {
    term = term.mul(n);
    if (term.is_zero()) return acc;
    Rat c(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    acc = acc.add(term.scale(Scalar::from_rational(c, d)));
  }
  require(term.mul(n).is_zero(), errc::internal, "matrix is not unipotent");
  return acc;
}

}  // namespace periods
