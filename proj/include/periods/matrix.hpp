#pragma once

#include <optional>
#include <vector>

#include "periods/scalar.hpp"

namespace periods {

using Vec = std::vector<Scalar>;

// Small dense matrix over one scalar domain. Row major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c, const ScalarDomain& d)
      : rows_(r), cols_(c), a_(r * c, Scalar::zero(d)) {}
  static Mat identity(size_t n, const ScalarDomain& d);
  static Mat from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Mat mul(const Mat& o) const;
  Vec apply(const Vec& v) const;       // matrix * column vector
  Vec apply_row(const Vec& v) const;   // row vector * matrix
  Mat add(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat scale(const Scalar& c) const;
  Mat transpose() const;
  Mat inverse() const;                 // fails if singular at precision

  Mat tensor(const Mat& o) const;      // Kronecker product

  bool eq(const Mat& o) const;
  bool is_zero() const;
  std::string to_string() const;

  std::vector<Vec> row_list() const;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Scalar dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_eq(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);
Vec vec_zero(size_t n, const ScalarDomain& d);
std::string vec_to_string(const Vec& v);

struct SolveResult {
  std::optional<Vec> solution;  // empty = NO_SOLUTION certified
  long precision_loss = 0;      // valuation of the pivot product (>= 0 part)
};

// Gaussian elimination; over p-adics pivots are chosen by minimal valuation
// and the ledger records the precision spent on them. Throws
// precision_exhausted when every pivot candidate is zero at precision.
SolveResult solve_linear(const Mat& a, const Vec& b);

// Reduced row echelon form; returns pivot column indices and accumulates the
// pivot ledger (p-adic mode).
Mat rref(const Mat& a, std::vector<size_t>* pivots = nullptr,
         long* precision_loss = nullptr);

// Basis of the right kernel, as rows.
std::vector<Vec> kernel_basis(const Mat& a);

size_t rank(const Mat& a);

// Characteristic polynomial coefficients c_0..c_n with
// det(xI - A) = sum c_i x^i (Faddeev-LeVerrier; needs char 0).
std::vector<Scalar> char_poly(const Mat& a);

// Resultant of two polynomials given by coefficient vectors (low to high),
// via the Sylvester matrix determinant.
Scalar resultant(const std::vector<Scalar>& f, const std::vector<Scalar>& g);

Scalar determinant(const Mat& a);

// exp of a nilpotent matrix (fails if not nilpotent within dim steps).
Mat exp_nilpotent(const Mat& n);
// log of a unipotent matrix.
Mat log_unipotent(const Mat& u);

}  // namespace periods
