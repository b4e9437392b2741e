// Dense exact linear algebra templated on the scalar field.
//
// Works for any exact field type with +, -, *, / and an is_zero overload:
// Rat, NFElem and RealAlg.

#pragma once

#include "ltireach/exactnum/number_field.hpp"
#include "ltireach/exactnum/rat.hpp"
#include "ltireach/exactnum/real_alg.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace ltireach {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMatrix = Mat<Rat>;
using RatVector = Vec<Rat>;

inline bool is_zero(const RealAlg& a) { return a.is_zero(); }
inline bool is_zero(const NFElem& a) { return a.is_zero(); }

template <class S>
struct RowEchelon {
  Mat<S> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class S>
RowEchelon<S> rref(Mat<S> m) {
  RowEchelon<S> out;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (int c = col; c < cols; ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
int rank(const Mat<S>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

/// Basis of the right kernel, as columns.
template <class S>
Mat<S> kernel(const Mat<S>& m) {
  const auto e = rref(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const int nfree = cols - static_cast<int>(e.pivots.size());
  Mat<S> k = Mat<S>::Constant(cols, nfree, S(0));
  int j = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, j) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(static_cast<int>(r), f);
    ++j;
  }
  return k;
}

/// Linearly independent subset of the columns spanning the column space.
template <class S>
Mat<S> column_basis(const Mat<S>& m) {
  const auto e = rref(m);
  Mat<S> b(m.rows(), static_cast<Eigen::Index>(e.pivots.size()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = m.col(e.pivots[i]);
  return b;
}

/// Some solution x of a x = b, if one exists.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Constant(a.cols(), S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(static_cast<int>(r), a.cols());
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  const auto e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    return std::nullopt;
  return Mat<S>(e.reduced.rightCols(n));
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class To, class From>
Mat<To> convert(const Mat<From>& m) {
  Mat<To> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}

template <class To, class From>
Vec<To> convert(const Vec<From>& v) {
  Vec<To> r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = To(v(i));
  return r;
}

}  // namespace ltireach
