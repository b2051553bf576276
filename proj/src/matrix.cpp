#include "fourlines/matrix.hpp"

#include <stdexcept>

namespace fourlines {

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& f = a.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += f * b.at(k, j);
      }
    }
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

ExactMatrix ExactMatrix::scaled(const CycloNum& f) const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x = x * f;
  return r;
}

CycloNum ExactMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  CycloNum t;
  for (int k = 0; k < rows_; ++k) t += at(k, k);
  return t;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& b) const {
  if (cols_ != b.cols_) throw std::invalid_argument("stack column mismatch");
  ExactMatrix r(rows_ + b.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = b.at(i, j);
  return r;
}

EchelonForm echelon_form(ExactMatrix m) {
  EchelonForm out;
  out.pivot_product = CycloNum::one();
  int rows = m.rows(), cols = m.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    // first nonzero entry at or below `lead`
    int piv = -1;
    for (int r = lead; r < rows; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
      ++out.row_swaps;
    }
    CycloNum p = m.at(lead, col);
    out.pivot_product *= p;
    CycloNum pinv = p.inverse();
    for (int j = col; j < cols; ++j)
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= pinv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const CycloNum f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < cols; ++j) {
        if (m.at(lead, j).is_zero()) continue;
        m.at(r, j) -= f * m.at(lead, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = int(out.pivot_cols.size());
  out.reduced = std::move(m);
  return out;
}

int mat_rank(const ExactMatrix& m) { return echelon_form(m).rank; }

ExactMatrix kernel_basis(const ExactMatrix& m) {
  EchelonForm ef = echelon_form(m);
  int cols = m.cols();
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int c = 0; c < cols; ++c) {
      if (p < ef.pivot_cols.size() && ef.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  ExactMatrix k(cols, int(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int f = free_cols[j];
    k.at(f, int(j)) = CycloNum::one();
    for (int r = 0; r < ef.rank; ++r) k.at(ef.pivot_cols[r], int(j)) = -ef.reduced.at(r, f);
  }
  return k;
}

ExactMatrix eigenspace(const ExactMatrix& m, const CycloNum& lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace of non-square matrix");
  ExactMatrix s = m;
  for (int k = 0; k < m.rows(); ++k) s.at(k, k) -= lambda;
  return kernel_basis(s);
}

CycloNum determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  EchelonForm ef = echelon_form(m);
  if (ef.rank < m.rows()) return CycloNum::zero();
  return (ef.row_swaps % 2 == 0) ? ef.pivot_product : -ef.pivot_product;
}

bool in_column_span(const ExactMatrix& basis, const ExactMatrix& v) {
  if (v.cols() != 1 || v.rows() != basis.rows()) throw std::invalid_argument("span test shape mismatch");
  ExactMatrix aug(basis.rows(), basis.cols() + 1);
  for (int r = 0; r < basis.rows(); ++r) {
    for (int c = 0; c < basis.cols(); ++c) aug.at(r, c) = basis.at(r, c);
    aug.at(r, basis.cols()) = v.at(r, 0);
  }
  return mat_rank(aug) == mat_rank(basis);
}

}  // namespace fourlines
