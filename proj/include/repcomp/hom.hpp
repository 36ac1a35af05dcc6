#pragma once

#include <vector>

#include "repcomp/rep.hpp"

namespace repcomp {

// Hom(rho,sigma) = { f : f rho_i = sigma_i f }, computed as the kernel of
// the stacked linear system, one e x d block of equations per generator.
// Basis matrices come out in canonical echelon order.
template <class F>
struct HomSpace {
  size_t source_dim = 0, target_dim = 0;
  std::vector<Matrix<F>> basis;  // e x d each
  size_t dim() const { return basis.size(); }
};

namespace detail {

// row-major vec: entry (r,c) of an e x d matrix sits at r*d + c
template <class F>
Matrix<F> unvec(const F& f, const std::vector<typename F::Elem>& v, size_t rows, size_t cols,
                size_t offset = 0) {
  Matrix<F> m(f, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = v[offset + r * cols + c];
  return m;
}

template <class F>
void check_same_algebra(const Representation<F>& a, const Representation<F>& b) {
  if (a.mats.size() != b.mats.size())
    throw std::invalid_argument("representations have different generator counts");
  if (a.dim > 0 && b.dim > 0 && !(a.field() == b.field()))
    throw std::invalid_argument("representations live over different fields");
}

// coefficient matrix of f |-> (f rho_g - sigma_g f)_g on vec(f), f : e x d
template <class F>
Matrix<F> intertwiner_system(const Representation<F>& rho, const Representation<F>& sigma) {
  const F& f = rho.field();
  size_t d = rho.dim, e = sigma.dim, n = rho.mats.size();
  Matrix<F> sys(f, n * e * d, e * d);
  for (size_t g = 0; g < n; ++g) {
    const auto& R = rho.mats[g];
    const auto& S = sigma.mats[g];
    for (size_t r = 0; r < e; ++r)
      for (size_t c = 0; c < d; ++c) {
        size_t row = g * e * d + r * d + c;
        for (size_t k = 0; k < d; ++k)
          sys.at(row, r * d + k) = f.add(sys.at(row, r * d + k), R.at(k, c));
        for (size_t k = 0; k < e; ++k)
          sys.at(row, k * d + c) = f.sub(sys.at(row, k * d + c), S.at(r, k));
      }
  }
  return sys;
}

}  // namespace detail

template <class F>
HomSpace<F> hom_basis(const Representation<F>& rho, const Representation<F>& sigma) {
  detail::check_same_algebra(rho, sigma);
  const F& f = rho.field();
  HomSpace<F> out{rho.dim, sigma.dim, {}};
  if (rho.dim == 0 || sigma.dim == 0) return out;
  for (auto& v : kernel_basis(detail::intertwiner_system(rho, sigma)))
    out.basis.push_back(detail::unvec(f, v, sigma.dim, rho.dim));
  return out;
}

template <class F>
size_t hom_dim(const Representation<F>& rho, const Representation<F>& sigma) {
  return hom_basis(rho, sigma).dim();
}

// Derivation space Der(rho,sigma): tuples (xi_1..xi_N) of e x d matrices
// such that the Leibniz extension kills every relation. For a relation word
// x_{i_1}...x_{i_k} the extension contributes
//   sum_j sigma(x_{i_1}..x_{i_{j-1}}) xi_{i_j} rho(x_{i_{j+1}}..x_{i_k}).
template <class F>
struct DerSpace {
  size_t source_dim = 0, target_dim = 0;
  std::vector<std::vector<Matrix<F>>> basis;  // each an N-tuple of e x d matrices
  size_t dim() const { return basis.size(); }
};

namespace detail {

template <class F>
Matrix<F> derivation_system(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
                            const Representation<F>& sigma) {
  const F& f = alg.field;
  size_t d = rho.dim, e = sigma.dim, n = alg.num_generators();
  size_t block = e * d;
  Matrix<F> sys(f, alg.relations.size() * block, n * block);
  for (size_t rel = 0; rel < alg.relations.size(); ++rel) {
    for (const auto& term : alg.relations[rel].terms()) {
      const auto& w = term.word;
      if (w.empty()) continue;  // derivations kill the unit
      // prefix products in sigma, suffix products in rho
      std::vector<Matrix<F>> pre(w.size()), suf(w.size());
      pre[0] = Matrix<F>::identity(f, e);
      for (size_t j = 1; j < w.size(); ++j) pre[j] = pre[j - 1] * sigma.mats[w[j - 1]];
      suf[w.size() - 1] = Matrix<F>::identity(f, d);
      for (size_t j = w.size() - 1; j-- > 0;) suf[j] = rho.mats[w[j + 1]] * suf[j + 1];
      for (size_t j = 0; j < w.size(); ++j) {
        size_t g = w[j];
        for (size_t r = 0; r < e; ++r)
          for (size_t c = 0; c < d; ++c) {
            size_t row = rel * block + r * d + c;
            for (size_t a = 0; a < e; ++a) {
              if (f.is_zero(pre[j].at(r, a))) continue;
              auto ca = f.mul(term.coeff, pre[j].at(r, a));
              for (size_t b = 0; b < d; ++b) {
                size_t col = g * block + a * d + b;
                sys.at(row, col) = f.add(sys.at(row, col), f.mul(ca, suf[j].at(b, c)));
              }
            }
          }
      }
    }
  }
  return sys;
}

}  // namespace detail

template <class F>
DerSpace<F> der_basis(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
                      const Representation<F>& sigma) {
  detail::check_same_algebra(rho, sigma);
  const F& f = alg.field;
  size_t n = alg.num_generators();
  DerSpace<F> out{rho.dim, sigma.dim, {}};
  if (rho.dim == 0 || sigma.dim == 0) return out;
  for (auto& v : kernel_basis(detail::derivation_system(alg, rho, sigma))) {
    std::vector<Matrix<F>> tuple;
    for (size_t g = 0; g < n; ++g)
      tuple.push_back(detail::unvec(f, v, sigma.dim, rho.dim, g * sigma.dim * rho.dim));
    out.basis.push_back(std::move(tuple));
  }
  return out;
}

template <class F>
size_t der_dim(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
               const Representation<F>& sigma) {
  if (rho.dim == 0 || sigma.dim == 0) return 0;
  return rho.dim * sigma.dim * alg.num_generators() -
         rank(detail::derivation_system(alg, rho, sigma));
}

// dim Ext^1 via the exact sequence 0 -> Hom -> M_{e x d} -> Der -> Ext^1 -> 0
template <class F>
size_t ext_dim(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
               const Representation<F>& sigma) {
  size_t h = hom_dim(rho, sigma);
  size_t dr = der_dim(alg, rho, sigma);
  size_t de = rho.dim * sigma.dim;
  if (h + dr < de) throw std::logic_error("ext_dim: exact sequence dimensions are inconsistent");
  return h + dr - de;
}

namespace detail {

// coefficient matrix of gamma |-> (gamma rho_g - sigma_g gamma)_g
template <class F>
Matrix<F> delta_system(const Representation<F>& rho, const Representation<F>& sigma) {
  const F& f = rho.field();
  size_t d = rho.dim, e = sigma.dim, n = rho.mats.size();
  size_t block = e * d;
  Matrix<F> sys(f, n * block, block);
  for (size_t g = 0; g < n; ++g)
    for (size_t r = 0; r < e; ++r)
      for (size_t c = 0; c < d; ++c) {
        size_t row = g * block + r * d + c;
        for (size_t k = 0; k < d; ++k)
          sys.at(row, r * d + k) = f.add(sys.at(row, r * d + k), rho.mats[g].at(k, c));
        for (size_t k = 0; k < e; ++k)
          sys.at(row, k * d + c) = f.sub(sys.at(row, k * d + c), sigma.mats[g].at(r, k));
      }
  return sys;
}

template <class F>
std::vector<typename F::Elem> vec_tuple(const std::vector<Matrix<F>>& xi) {
  std::vector<typename F::Elem> v;
  for (const auto& m : xi)
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

}  // namespace detail

// image of delta: the inner derivations, as a canonical echelon basis
template <class F>
std::vector<std::vector<Matrix<F>>> delta_image_basis(const Representation<F>& rho,
                                                      const Representation<F>& sigma) {
  detail::check_same_algebra(rho, sigma);
  const F& f = rho.field();
  size_t n = rho.mats.size();
  std::vector<std::vector<Matrix<F>>> out;
  if (rho.dim == 0 || sigma.dim == 0) return out;
  auto ce = col_echelon(detail::delta_system(rho, sigma));
  for (size_t k = 0; k < ce.basis.cols(); ++k) {
    std::vector<Matrix<F>> tuple;
    auto col = ce.basis.col(k);
    for (size_t g = 0; g < n; ++g)
      tuple.push_back(detail::unvec(f, col, sigma.dim, rho.dim, g * sigma.dim * rho.dim));
    out.push_back(std::move(tuple));
  }
  return out;
}

template <class F>
bool is_derivation(const AlgebraPresentation<F>& alg, const std::vector<Matrix<F>>& xi,
                   const Representation<F>& rho, const Representation<F>& sigma) {
  if (xi.size() != alg.num_generators()) return false;
  if (rho.dim == 0 || sigma.dim == 0) return true;
  auto sys = detail::derivation_system(alg, rho, sigma);
  auto v = detail::vec_tuple(xi);
  const F& f = alg.field;
  for (size_t r = 0; r < sys.rows(); ++r) {
    auto acc = f.zero();
    for (size_t c = 0; c < sys.cols(); ++c) acc = f.add(acc, f.mul(sys.at(r, c), v[c]));
    if (!f.is_zero(acc)) return false;
  }
  return true;
}

template <class F>
struct SplitResult {
  bool split = false;
  std::optional<Matrix<F>> witness;  // gamma with xi = gamma rho - sigma gamma
};

template <class F>
SplitResult<F> is_split(const AlgebraPresentation<F>& alg, const std::vector<Matrix<F>>& xi,
                        const Representation<F>& rho, const Representation<F>& sigma) {
  if (!is_derivation(alg, xi, rho, sigma))
    throw std::invalid_argument("is_split: xi is not a derivation");
  const F& f = alg.field;
  if (rho.dim == 0 || sigma.dim == 0) return {true, Matrix<F>(f, sigma.dim, rho.dim)};
  auto sol = solve_affine(detail::delta_system(rho, sigma), detail::vec_tuple(xi));
  if (!sol) return {false, std::nullopt};
  return {true, detail::unvec(f, sol->particular, sigma.dim, rho.dim)};
}

// middle term of the extension 0 -> M_sigma -> M_xi -> M_rho -> 0
template <class F>
Representation<F> extension_module(const std::vector<Matrix<F>>& xi, const Representation<F>& rho,
                                   const Representation<F>& sigma) {
  detail::check_same_algebra(rho, sigma);
  const F& f = rho.field();
  Representation<F> out;
  out.dim = rho.dim + sigma.dim;
  for (size_t g = 0; g < rho.mats.size(); ++g)
    out.mats.push_back(Matrix<F>::block2x2(sigma.mats[g], xi[g],
                                           Matrix<F>(f, rho.dim, sigma.dim), rho.mats[g]));
  return out;
}

// cokernel of an injective intertwiner, on the complement of the pivot
// coordinates of its column echelon form
template <class F>
struct QuotientModule {
  Representation<F> rep;  // dim m - d
  Matrix<F> projection;   // (m-d) x m, the cokernel map
};

template <class F>
QuotientModule<F> quotient_module(const Representation<F>& amb, const Matrix<F>& sub_map) {
  const F& f = amb.field();
  size_t m = amb.dim, d = sub_map.cols();
  if (sub_map.rows() != m) throw std::invalid_argument("quotient_module: shape mismatch");
  auto ce = col_echelon(sub_map);
  if (ce.basis.cols() != d) throw std::invalid_argument("quotient_module: sub_map not injective");
  std::vector<bool> is_pivot(m, false);
  for (size_t r : ce.pivot_rows) is_pivot[r] = true;
  Matrix<F> T(f, m, m);
  T.set_block(0, 0, ce.basis);
  size_t k = d;
  for (size_t r = 0; r < m; ++r)
    if (!is_pivot[r]) T.at(r, k++) = f.one();
  auto Ti = inverse(T);
  if (!Ti) throw std::logic_error("quotient_module: complement construction failed");
  QuotientModule<F> out;
  out.rep.dim = m - d;
  for (const auto& a : amb.mats) {
    Matrix<F> conj = (*Ti) * a * T;
    if (!conj.block(d, 0, m - d, d).is_zero())
      throw std::invalid_argument("quotient_module: image of sub_map is not invariant");
    out.rep.mats.push_back(conj.block(d, d, m - d, m - d));
  }
  out.projection = Ti->block(d, 0, m - d, m);
  return out;
}

// Hom of chain modules: tuples (phi_i : A_i -> B_i), each phi_i an
// intertwiner, with phi_{i+1} f_A^i = f_B^i phi_i for the chain maps.
template <class F>
std::vector<std::vector<Matrix<F>>> chain_hom_basis(const ChainModule<F>& A,
                                                    const ChainModule<F>& B) {
  if (A.reps.size() != B.reps.size())
    throw std::invalid_argument("chain_hom_basis: chain lengths differ");
  size_t r = A.reps.size();
  const F& f = A.reps[0].field();
  size_t ngen = A.reps[0].mats.size();
  std::vector<size_t> offset(r + 1, 0);
  for (size_t i = 0; i < r; ++i) offset[i + 1] = offset[i] + B.reps[i].dim * A.reps[i].dim;
  size_t cols = offset[r];
  std::vector<std::vector<Matrix<F>>> out;
  if (cols == 0) return out;

  size_t rows = 0;
  for (size_t i = 0; i < r; ++i) rows += ngen * B.reps[i].dim * A.reps[i].dim;
  for (size_t i = 0; i + 1 < r; ++i) rows += B.reps[i + 1].dim * A.reps[i].dim;
  Matrix<F> sys(f, rows, cols);

  size_t row0 = 0;
  for (size_t i = 0; i < r; ++i) {
    size_t d = A.reps[i].dim, e = B.reps[i].dim;
    for (size_t g = 0; g < ngen; ++g) {
      for (size_t rr = 0; rr < e; ++rr)
        for (size_t cc = 0; cc < d; ++cc) {
          size_t row = row0 + g * e * d + rr * d + cc;
          for (size_t k = 0; k < d; ++k)
            sys.at(row, offset[i] + rr * d + k) =
                f.add(sys.at(row, offset[i] + rr * d + k), A.reps[i].mats[g].at(k, cc));
          for (size_t k = 0; k < e; ++k)
            sys.at(row, offset[i] + k * d + cc) =
                f.sub(sys.at(row, offset[i] + k * d + cc), B.reps[i].mats[g].at(rr, k));
        }
    }
    row0 += ngen * e * d;
  }
  // squares: phi_{i+1} f_A^i - f_B^i phi_i = 0
  for (size_t i = 0; i + 1 < r; ++i) {
    size_t dA = A.reps[i].dim, dA1 = A.reps[i + 1].dim;
    size_t eB = B.reps[i].dim, eB1 = B.reps[i + 1].dim;
    for (size_t rr = 0; rr < eB1; ++rr)
      for (size_t cc = 0; cc < dA; ++cc) {
        size_t row = row0 + rr * dA + cc;
        for (size_t k = 0; k < dA1; ++k)
          sys.at(row, offset[i + 1] + rr * dA1 + k) =
              f.add(sys.at(row, offset[i + 1] + rr * dA1 + k), A.maps[i].at(k, cc));
        for (size_t k = 0; k < eB; ++k)
          sys.at(row, offset[i] + k * dA + cc) =
              f.sub(sys.at(row, offset[i] + k * dA + cc), B.maps[i].at(rr, k));
      }
    row0 += eB1 * dA;
  }

  for (auto& v : kernel_basis(sys)) {
    std::vector<Matrix<F>> tuple;
    for (size_t i = 0; i < r; ++i)
      tuple.push_back(detail::unvec(f, v, B.reps[i].dim, A.reps[i].dim, offset[i]));
    out.push_back(std::move(tuple));
  }
  return out;
}

// Hom of pair modules (alpha : sub_A -> sub_B, beta : amb_A -> amb_B)
template <class F>
std::vector<std::pair<Matrix<F>, Matrix<F>>> pair_hom_basis(const PairModule<F>& A,
                                                            const PairModule<F>& B) {
  auto tuples = chain_hom_basis(ChainModule<F>{{A.sub, A.amb}, {A.map}},
                                ChainModule<F>{{B.sub, B.amb}, {B.map}});
  std::vector<std::pair<Matrix<F>, Matrix<F>>> out;
  for (auto& t : tuples) out.emplace_back(std::move(t[0]), std::move(t[1]));
  return out;
}

template <class F>
size_t pair_hom_dim(const PairModule<F>& A, const PairModule<F>& B) {
  return pair_hom_basis(A, B).size();
}

// dim of the pulled-back extension space for Grassmannian points:
//   dim Hom(U, N/V) - dim Hom(M, N) + dim Hom_{Lambda(2)}(U., V.)
template <class F>
size_t bar_ext_dim(const PairModule<F>& A, const PairModule<F>& B) {
  if (!pair_injective(A) || !pair_injective(B))
    throw std::invalid_argument("bar_ext_dim: pair modules must be injective");
  size_t h_quot;
  if (B.sub.dim == B.amb.dim) {
    h_quot = 0;  // N/V = 0
  } else {
    auto q = quotient_module(B.amb, B.map);
    h_quot = hom_dim(A.sub, q.rep);
  }
  size_t h_amb = hom_dim(A.amb, B.amb);
  size_t h_pair = pair_hom_dim(A, B);
  if (h_quot + h_pair < h_amb)
    throw std::logic_error("bar_ext_dim: dimension formula went negative");
  return h_quot + h_pair - h_amb;
}

// Constrained derivations of the X_{d,u} theory: xi in Der(rho,sigma) such
// that phi . xi is an inner derivation rho -> tau_M for every phi in
// Hom(sigma, M). Computed as the kernel of the composite map into
// Der(rho, tau_M) / im delta, one block per basis element phi.
template <class F>
size_t constrained_der_dim(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
                           const Representation<F>& sigma, const Representation<F>& M) {
  auto der = der_basis(alg, rho, sigma);
  size_t s = der.dim();
  auto phis = hom_basis(sigma, M);
  size_t u = phis.dim();
  if (u == 0 || s == 0 || rho.dim == 0) return s;

  const F& f = alg.field;
  size_t d = rho.dim, n = M.dim, ngen = alg.num_generators();
  size_t block = ngen * n * d;
  auto delta = detail::delta_system(rho, M);  // block x (n*d)
  size_t hom_rho_M = n * d - rank(delta);

  Matrix<F> sys(f, u * block, s + u * n * d);
  for (size_t j = 0; j < u; ++j) {
    const auto& phi = phis.basis[j];
    for (size_t t = 0; t < s; ++t) {
      // column t: vec of the tuple (phi xi_g)_g
      for (size_t g = 0; g < ngen; ++g) {
        Matrix<F> prod = phi * der.basis[t][g];
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < d; ++c)
            sys.at(j * block + g * n * d + r * d + c, t) = prod.at(r, c);
      }
    }
    for (size_t r = 0; r < block; ++r)
      for (size_t c = 0; c < n * d; ++c)
        sys.at(j * block + r, s + j * n * d + c) = f.neg(delta.at(r, c));
  }
  size_t ker = sys.cols() - rank(sys);
  return ker - u * hom_rho_M;
}

template <class F>
size_t e_constrained_dim(const AlgebraPresentation<F>& alg, const Representation<F>& rho,
                         const Representation<F>& sigma, const Representation<F>& M) {
  size_t h = hom_dim(rho, sigma);
  size_t cd = constrained_der_dim(alg, rho, sigma, M);
  size_t de = rho.dim * sigma.dim;
  if (h + cd < de) throw std::logic_error("e_constrained_dim: dimensions are inconsistent");
  return h + cd - de;
}

}  // namespace repcomp
