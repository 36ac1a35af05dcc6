#pragma once

#include <random>

#include "repcomp/hom.hpp"

namespace repcomp {

enum class Verdict3 { yes, no, unknown };

template <class F>
struct IsoResult {
  Verdict3 verdict = Verdict3::unknown;
  std::optional<Matrix<F>> witness;  // invertible g with g rho g^{-1} = sigma
};

namespace detail {

// conjugation-invariant fingerprint: ranks of generator powers
template <class F>
std::vector<size_t> rank_fingerprint(const Representation<F>& rep) {
  std::vector<size_t> fp;
  for (const auto& m : rep.mats) {
    Matrix<F> p = m;
    for (size_t k = 1; k <= rep.dim; ++k) {
      fp.push_back(rank(p));
      if (k < rep.dim) p = p * m;
    }
  }
  return fp;
}

template <class F>
std::optional<Matrix<F>> combo_if_invertible(const std::vector<Matrix<F>>& basis,
                                             const std::vector<typename F::Elem>& coef) {
  const F& f = basis[0].field();
  Matrix<F> g(f, basis[0].rows(), basis[0].cols());
  for (size_t i = 0; i < basis.size(); ++i) g = g + basis[i].scaled(coef[i]);
  if (f.is_zero(det(g))) return std::nullopt;
  return g;
}

}  // namespace detail

// Searches Hom(rho,sigma) for an invertible element. Over F_q: seeded random
// combinations, then exhaustive sweep when q^{dim Hom} is small, giving a
// definite no. Over Q: deterministic pseudo-random integer points; a definite
// no needs the full (d+1)^k evaluation grid (det of a generic combination has
// degree <= d in each variable), otherwise the verdict is unknown.
template <class F>
IsoResult<F> is_isomorphic(const Representation<F>& rho, const Representation<F>& sigma,
                           uint64_t seed = 0, size_t budget = 2000) {
  const size_t exhaust_limit = 1u << 20;
  if (rho.dim != sigma.dim) return {Verdict3::no, std::nullopt};
  size_t d = rho.dim;
  if (d == 0) {
    const F& f = rho.field();
    return {Verdict3::yes, Matrix<F>::identity(f, 0)};
  }
  if (detail::rank_fingerprint(rho) != detail::rank_fingerprint(sigma))
    return {Verdict3::no, std::nullopt};
  auto hom = hom_basis(rho, sigma);
  size_t k = hom.dim();
  if (k == 0) return {Verdict3::no, std::nullopt};
  if (hom_dim(rho, rho) != hom_dim(sigma, sigma)) return {Verdict3::no, std::nullopt};
  const F& f = rho.field();

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<typename F::Elem> coef(k, f.zero());

  if constexpr (F::is_prime_field) {
    uint64_t q = f.modulus();
    std::uniform_int_distribution<uint64_t> dist(0, q - 1);
    for (size_t t = 0; t < std::min<size_t>(budget, 512); ++t) {
      for (auto& c : coef) c = dist(rng);
      if (auto g = detail::combo_if_invertible(hom.basis, coef)) return {Verdict3::yes, *g};
    }
    double total = 1;
    for (size_t i = 0; i < k && total <= exhaust_limit; ++i) total *= double(q);
    if (total <= exhaust_limit) {
      std::vector<uint64_t> idx(k, 0);
      while (true) {
        for (size_t i = 0; i < k; ++i) coef[i] = idx[i];
        if (auto g = detail::combo_if_invertible(hom.basis, coef)) return {Verdict3::yes, *g};
        size_t pos = 0;
        while (pos < k && idx[pos] == q - 1) idx[pos++] = 0;
        if (pos == k) break;
        ++idx[pos];
      }
      return {Verdict3::no, std::nullopt};
    }
    return {Verdict3::unknown, std::nullopt};
  } else {
    std::uniform_int_distribution<long> dist(-long(8 * d), long(8 * d));
    for (size_t t = 0; t < std::min<size_t>(budget, 256); ++t) {
      for (auto& c : coef) c = f.from_int(dist(rng));
      if (auto g = detail::combo_if_invertible(hom.basis, coef)) return {Verdict3::yes, *g};
    }
    double total = 1;
    for (size_t i = 0; i < k && total <= exhaust_limit; ++i) total *= double(d + 1);
    if (total <= exhaust_limit) {
      std::vector<size_t> idx(k, 0);
      while (true) {
        for (size_t i = 0; i < k; ++i) coef[i] = f.from_int(long(idx[i]));
        if (auto g = detail::combo_if_invertible(hom.basis, coef)) return {Verdict3::yes, *g};
        size_t pos = 0;
        while (pos < k && idx[pos] == d) idx[pos++] = 0;
        if (pos == k) break;
        ++idx[pos];
      }
      return {Verdict3::no, std::nullopt};
    }
    return {Verdict3::unknown, std::nullopt};
  }
}

}  // namespace repcomp
