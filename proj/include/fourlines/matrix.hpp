// Dense exact matrices over Q(zeta_16) with deterministic elimination.
//
// Pivoting is by first nonzero entry in column order (no magnitude
// heuristics make sense over an exact field), so ranks, reduced echelon
// forms and kernel bases are bit-reproducible across runs and platforms.
#pragma once

#include <vector>

#include "fourlines/cyclo.hpp"

namespace fourlines {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = CycloNum::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloNum& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const CycloNum& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  ExactMatrix transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const CycloNum& f) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  CycloNum trace() const;

  // rows of `b` appended below this matrix (column counts must match)
  ExactMatrix stacked(const ExactMatrix& b) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<CycloNum> a_;
};

struct EchelonForm {
  ExactMatrix reduced;          // reduced row echelon form
  std::vector<int> pivot_cols;  // ascending
  int rank = 0;
  int row_swaps = 0;
  CycloNum pivot_product;  // product of pivots before normalization (det helper)
};

// Reduced row echelon form with first-nonzero pivot selection.
EchelonForm echelon_form(ExactMatrix m);

int mat_rank(const ExactMatrix& m);

// Deterministic kernel basis: one column per free column of the echelon
// form, in ascending free-column order, with a 1 in the free coordinate.
// Result has kernel-dimension many columns (possibly zero).
ExactMatrix kernel_basis(const ExactMatrix& m);

// Kernel of (m - lambda*I); m must be square.
ExactMatrix eigenspace(const ExactMatrix& m, const CycloNum& lambda);

CycloNum determinant(const ExactMatrix& m);

// True iff v (a column vector) lies in the column span of basis.
bool in_column_span(const ExactMatrix& basis, const ExactMatrix& v);

}  // namespace fourlines
