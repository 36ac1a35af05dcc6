#pragma once

#include <random>

#include "repcomp/algebra.hpp"
#include "repcomp/rep.hpp"

namespace fixtures {

using namespace repcomp;

// K[X]/(X^4)
template <class F>
AlgebraPresentation<F> kx4(F f) {
  return truncated_polynomial_algebra(f, 4);
}

// the i-dimensional indecomposable over K[X]/(X^n): single Jordan block with
// ones on the upper diagonal
template <class F>
Representation<F> tau(const F& f, size_t i) {
  Representation<F> rep;
  rep.dim = i;
  Matrix<F> j(f, i, i);
  for (size_t k = 0; k + 1 < i; ++k) j.at(k, k + 1) = f.one();
  rep.mats.push_back(std::move(j));
  return rep;
}

// path algebra of 1 -> 2 (equivalently the upper-triangular 2x2 matrices)
template <class F>
AlgebraPresentation<F> a2(F f) {
  return compile_quiver<F>(f, {"1", "2"}, {Arrow{"a", 0, 1}}, {});
}

// semisimple K x K: two vertices, no arrows
template <class F>
AlgebraPresentation<F> ksquare(F f) {
  return compile_quiver<F>(f, {"1", "2"}, {}, {});
}

// representation of a2 with dimension vector (d1,d2) and arrow block A (d2 x d1)
template <class F>
Representation<F> a2_rep(const F& f, size_t d1, size_t d2, const Matrix<F>& A) {
  Representation<F> rep;
  rep.dim = d1 + d2;
  rep.dim_vector = std::vector<size_t>{d1, d2};
  rep.mats.push_back(standard_idempotent(f, *rep.dim_vector, 0));
  rep.mats.push_back(standard_idempotent(f, *rep.dim_vector, 1));
  Matrix<F> arrow(f, rep.dim, rep.dim);
  arrow.set_block(d1, 0, A);
  rep.mats.push_back(std::move(arrow));
  return rep;
}

template <class F>
Representation<F> a2_simple_source(const F& f) {
  return a2_rep(f, 1, 0, Matrix<F>(f, 0, 1));
}
template <class F>
Representation<F> a2_simple_sink(const F& f) {
  return a2_rep(f, 0, 1, Matrix<F>(f, 1, 0));
}
template <class F>
Representation<F> a2_proj_inj(const F& f) {
  Matrix<F> one(f, 1, 1);
  one.at(0, 0) = f.one();
  return a2_rep(f, 1, 1, one);
}

// random d-dimensional representation of K[X]/(X^4): a conjugated strictly
// upper triangular matrix (nilpotency order <= d <= 4)
template <class F>
Representation<F> random_kx4_rep(const F& f, size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  Matrix<F> n(f, d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) n.at(i, j) = f.from_int(dist(rng));
  Matrix<F> g(f, d, d);
  while (true) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) g.at(i, j) = f.from_int(dist(rng));
    if (!f.is_zero(det(g))) break;
  }
  Representation<F> rep;
  rep.dim = d;
  rep.mats.push_back(g * n * *inverse(g));
  return rep;
}

// random representation of a2 with a random dimension vector summing to d
template <class F>
Representation<F> random_a2_rep(const F& f, size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> split(0, d);
  size_t d1 = split(rng), d2 = d - d1;
  std::uniform_int_distribution<long> dist(-3, 3);
  Matrix<F> A(f, d2, d1);
  for (size_t i = 0; i < d2; ++i)
    for (size_t j = 0; j < d1; ++j) A.at(i, j) = f.from_int(dist(rng));
  return a2_rep(f, d1, d2, A);
}

}  // namespace fixtures
