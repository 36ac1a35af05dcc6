#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "repcomp/matrix.hpp"

namespace repcomp {

template <class F>
struct Echelon {
  Matrix<F> rref;                  // reduced row echelon form, unit pivots
  std::vector<size_t> pivot_cols;  // ascending
  size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

// Fraction-free forward elimination (Bareiss). Rows are first scaled to a
// common integral denominator so every intermediate entry stays integral,
// which bounds coefficient growth compared to naive rational pivoting.
inline void bareiss_forward(Matrix<RationalField>& a, std::vector<size_t>& pivot_cols,
                            std::vector<size_t>& pivot_rows) {
  const RationalField& f = a.field();
  for (size_t i = 0; i < a.rows(); ++i) {
    mpz_class l(1);
    for (size_t j = 0; j < a.cols(); ++j) l = lcm(l, a.at(i, j).get_den());
    if (l != 1) {
      mpq_class c(l);
      for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) = mpq_class(a.at(i, j) * c);
    }
  }
  mpq_class prev(1);
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t piv = row;
    while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(piv, j));
    for (size_t i = row + 1; i < a.rows(); ++i) {
      for (size_t j = col + 1; j < a.cols(); ++j)
        a.at(i, j) = mpq_class((a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j)) / prev);
      a.at(i, col) = f.zero();
    }
    prev = a.at(row, col);
    pivot_cols.push_back(col);
    pivot_rows.push_back(row);
    ++row;
  }
}

}  // namespace detail

// Canonical reduced row echelon form. Over F_p this is plain Gauss-Jordan;
// over Q the forward pass is fraction-free and pivots are normalised at the end.
template <class F>
Echelon<F> rref(Matrix<F> a) {
  const F f = a.field();
  Echelon<F> out{Matrix<F>(f, 0, 0), {}};
  if constexpr (F::is_prime_field) {
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
      size_t piv = row;
      while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
      if (piv == a.rows()) continue;
      if (piv != row)
        for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(piv, j));
      auto s = f.inv(a.at(row, col));
      for (size_t j = col; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), s);
      for (size_t i = 0; i < a.rows(); ++i) {
        if (i == row || f.is_zero(a.at(i, col))) continue;
        auto c = a.at(i, col);
        for (size_t j = col; j < a.cols(); ++j)
          a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(row, j)));
      }
      out.pivot_cols.push_back(col);
      ++row;
    }
  } else {
    std::vector<size_t> pivot_rows;
    detail::bareiss_forward(a, out.pivot_cols, pivot_rows);
    for (size_t k = out.pivot_cols.size(); k-- > 0;) {
      size_t row = pivot_rows[k], col = out.pivot_cols[k];
      auto s = f.inv(a.at(row, col));
      for (size_t j = col; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), s);
      for (size_t i = 0; i < row; ++i) {
        auto c = a.at(i, col);
        if (f.is_zero(c)) continue;
        for (size_t j = col; j < a.cols(); ++j)
          a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(row, j)));
      }
    }
  }
  out.rref = std::move(a);
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

// Basis of the right null space in canonical order: one vector per free
// column (ascending), carrying 1 at its free coordinate.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis_of(const Echelon<F>& e, size_t cols) {
  const F& f = e.rref.field();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> v(cols, f.zero());
    v[fc] = f.one();
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
      v[e.pivot_cols[k]] = f.neg(e.rref.at(k, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const Matrix<F>& m) {
  return kernel_basis_of(rref(m), m.cols());
}

template <class F>
struct AffineSolution {
  std::vector<typename F::Elem> particular;
  std::vector<std::vector<typename F::Elem>> kernel;
};

// Particular solution of m x = b (free variables set to 0) plus the kernel
// basis, or nullopt when rank(m|b) > rank(m).
template <class F>
std::optional<AffineSolution<F>> solve_affine(const Matrix<F>& m,
                                              const std::vector<typename F::Elem>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (size_t i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = b[i];
  Echelon<F> e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  AffineSolution<F> sol;
  sol.particular.assign(m.cols(), f.zero());
  for (size_t k = 0; k < e.pivot_cols.size(); ++k)
    sol.particular[e.pivot_cols[k]] = e.rref.at(k, m.cols());
  Echelon<F> em{e.rref.block(0, 0, e.rref.rows(), m.cols()), e.pivot_cols};
  sol.kernel = kernel_basis_of(em, m.cols());
  return sol;
}

template <class F>
typename F::Elem det(Matrix<F> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const F f = a.field();
  if (a.rows() == 0) return f.one();
  bool flip = false;
  if constexpr (F::is_prime_field) {
    typename F::Elem d = f.one();
    for (size_t col = 0; col < a.cols(); ++col) {
      size_t piv = col;
      while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
      if (piv == a.rows()) return f.zero();
      if (piv != col) {
        flip = !flip;
        for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(col, j), a.at(piv, j));
      }
      d = f.mul(d, a.at(col, col));
      auto s = f.inv(a.at(col, col));
      for (size_t i = col + 1; i < a.rows(); ++i) {
        auto c = f.mul(a.at(i, col), s);
        if (f.is_zero(c)) continue;
        for (size_t j = col; j < a.cols(); ++j)
          a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
      }
    }
    return flip ? f.neg(d) : d;
  } else {
    // Bareiss: the last pivot is det of the row-scaled matrix
    mpq_class scale(1);
    for (size_t i = 0; i < a.rows(); ++i) {
      mpz_class l(1);
      for (size_t j = 0; j < a.cols(); ++j) l = lcm(l, a.at(i, j).get_den());
      scale *= l;
      if (l != 1) {
        mpq_class c(l);
        for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) = mpq_class(a.at(i, j) * c);
      }
    }
    mpq_class prev(1);
    for (size_t col = 0; col < a.cols(); ++col) {
      size_t piv = col;
      while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
      if (piv == a.rows()) return f.zero();
      if (piv != col) {
        flip = !flip;
        for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(col, j), a.at(piv, j));
      }
      for (size_t i = col + 1; i < a.rows(); ++i) {
        for (size_t j = col + 1; j < a.cols(); ++j)
          a.at(i, j) = mpq_class((a.at(col, col) * a.at(i, j) - a.at(i, col) * a.at(col, j)) / prev);
        a.at(i, col) = f.zero();
      }
      prev = a.at(col, col);
    }
    mpq_class d(prev / scale);
    return flip ? mpq_class(-d) : d;
  }
}

// Determinant of the submatrix with rows I and columns J (each ascending).
template <class F>
typename F::Elem minor_det(const Matrix<F>& m, const std::vector<size_t>& I,
                           const std::vector<size_t>& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: |I| != |J|");
  return det(m.submatrix(I, J));
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const F& f = m.field();
  Echelon<F> e = rref(Matrix<F>::hstack(m, Matrix<F>::identity(f, m.rows())));
  if (e.rank() != m.rows()) return std::nullopt;
  for (size_t k = 0; k < e.pivot_cols.size(); ++k)
    if (e.pivot_cols[k] != k) return std::nullopt;
  return e.rref.block(0, m.cols(), m.rows(), m.cols());
}

// Column-reduced echelon basis of the column space: the transpose of
// rref(m^T) restricted to its nonzero rows. pivot_rows lists, per column,
// the row carrying its leading 1.
template <class F>
struct ColEchelon {
  Matrix<F> basis;  // m.rows() x rank
  std::vector<size_t> pivot_rows;
};

template <class F>
ColEchelon<F> col_echelon(const Matrix<F>& m) {
  Echelon<F> e = rref(m.transpose());
  ColEchelon<F> out{Matrix<F>(m.field(), m.rows(), e.rank()), e.pivot_cols};
  for (size_t k = 0; k < e.rank(); ++k)
    for (size_t i = 0; i < m.rows(); ++i) out.basis.at(i, k) = e.rref.at(k, i);
  return out;
}

// Coordinates of v in the column space of an echelon basis, or nullopt.
template <class F>
std::optional<std::vector<typename F::Elem>> reduce_against_echelon(
    const ColEchelon<F>& ce, std::vector<typename F::Elem> v) {
  const F& f = ce.basis.field();
  std::vector<typename F::Elem> coef(ce.pivot_rows.size(), f.zero());
  for (size_t k = 0; k < ce.pivot_rows.size(); ++k) {
    auto c = v[ce.pivot_rows[k]];
    if (f.is_zero(c)) continue;
    coef[k] = c;
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, ce.basis.at(i, k)));
  }
  for (const auto& x : v)
    if (!f.is_zero(x)) return std::nullopt;
  return coef;
}

}  // namespace repcomp
