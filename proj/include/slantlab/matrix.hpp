#pragma once

// Truncated operator matrices in the monomial basis, the orthonormal-basis
// export, and exact rank / determinant routines.

#include "slantlab/operators.hpp"
#include "slantlab/parallel.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slantlab {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Matrix of an operator word on span{1, z, ..., z^C}, truncated to
/// output degrees 0..R. Entry (i, j) is the z^i coefficient of expr(z^j).
struct OperatorMatrix {
  std::size_t max_row = 0;  // R
  std::size_t max_col = 0;  // C
  RationalMatrix entries;

  const Rational& entry(std::size_t i, std::size_t j) const { return entries(i, j); }
};

inline OperatorMatrix build_matrix(const OperatorExpr& expr, std::size_t R, std::size_t C, unsigned jobs = 1) {
  OperatorMatrix m{R, C, RationalMatrix(R + 1, C + 1)};
  parallel_for(C + 1, jobs, [&](std::size_t j) {
    AnalyticPoly col = apply_expr(expr, AnalyticPoly::monomial(j));
    for (const auto& [i, c] : col.terms()) {
      if (i > R) break;
      m.entries(i, j) = c;
    }
  });
  return m;
}

/// Matrix of a single primitive from degrees 0..in to degrees 0..out.
inline RationalMatrix primitive_matrix(const Primitive& op, std::size_t out, std::size_t in) {
  RationalMatrix m(out + 1, in + 1);
  for (std::size_t j = 0; j <= in; ++j) {
    AnalyticPoly col = apply_primitive(op, AnalyticPoly::monomial(j));
    for (const auto& [i, c] : col.terms())
      if (i <= out) m(i, j) = c;
  }
  return m;
}

/// Largest output degree a primitive can produce from inputs of degree <= d.
inline std::size_t primitive_degree_bound(const Primitive& op, std::size_t d) {
  if (std::holds_alternative<Slant>(op)) return d / 2;
  if (std::holds_alternative<SlantAdjoint>(op)) return 2 * d;
  const auto& sym = std::get<Toeplitz>(op).symbol;
  long a = sym.analytic().degree();
  return a < 0 ? d : d + static_cast<std::size_t>(a);
}

/// Second route to the same matrix: multiply the primitive matrices, sizing
/// every intermediate space so no truncation happens before the final rows.
inline OperatorMatrix compose_matrix(const OperatorExpr& expr, std::size_t R, std::size_t C) {
  const auto& w = expr.word();
  std::vector<std::size_t> dims{C};
  for (auto it = w.rbegin(); it != w.rend(); ++it) dims.push_back(primitive_degree_bound(*it, dims.back()));
  RationalMatrix acc(C + 1, C + 1);
  for (std::size_t i = 0; i <= C; ++i) acc(i, i) = 1;
  std::size_t step = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it, ++step)
    acc = primitive_matrix(*it, dims[step + 1], dims[step]) * acc;
  OperatorMatrix m{R, C, RationalMatrix(R + 1, C + 1)};
  for (std::size_t i = 0; i <= std::min(R, dims.back()); ++i)
    for (std::size_t j = 0; j <= C; ++j) m.entries(i, j) = acc(i, j);
  return m;
}

/// Multiplier taking a monomial-basis entry (i, j) to the orthonormal basis
/// e_n = sqrt(n + 1) z^n: the operator sends e_j to sum_i m_ij sqrt((j+1)/(i+1)) e_i.
inline double orthonormal_factor(std::size_t i, std::size_t j) {
  return std::sqrt(static_cast<double>(j + 1) / static_cast<double>(i + 1));
}

/// Row-major doubles, approximate by construction.
inline std::vector<std::vector<double>> orthonormal_export(const OperatorMatrix& m) {
  std::vector<std::vector<double>> out(m.max_row + 1, std::vector<double>(m.max_col + 1, 0.0));
  for (std::size_t i = 0; i <= m.max_row; ++i)
    for (std::size_t j = 0; j <= m.max_col; ++j)
      if (m.entry(i, j) != 0) out[i][j] = m.entry(i, j).get_d() * orthonormal_factor(i, j);
  return out;
}

/// Exact rank by Bareiss fraction-free elimination. Each row is first scaled
/// to integers, which does not change the rank.
inline std::size_t rank_bareiss(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Exact rank by ordinary Gaussian elimination over the rationals.
inline std::size_t rank_gauss(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

inline Rational determinant_2x2(const RationalMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("determinant_2x2 needs a 2x2 matrix");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace slantlab
