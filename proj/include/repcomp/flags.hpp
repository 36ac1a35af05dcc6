#pragma once

#include "repcomp/grass.hpp"

namespace repcomp {

// A flag U^1 c U^2 c ... c U^r of invariant subspaces, each stored with its
// echelon basis in ambient coordinates.
template <class F>
struct FlagPoint {
  std::vector<Submodule<F>> subs;
};

namespace detail {

template <class F>
void enumerate_flags_rec(const Representation<F>& tau, const std::vector<size_t>& dims,
                         size_t level, std::vector<Submodule<F>>& chain,
                         size_t budget, std::vector<FlagPoint<F>>& out) {
  // level walks dims from the top (largest) down; chain holds U^{level+1}..U^r
  const bool at_top = chain.empty();
  const Representation<F> ambient_rep = at_top ? tau : sub_rep(tau, chain.back());
  const std::optional<Matrix<F>> ambient_basis =
      at_top ? std::nullopt : std::make_optional(chain.back().basis);
  auto subs = enumerate_submodules(ambient_rep, dims[level], budget);
  for (const auto& s : subs) {
    Submodule<F> in_ambient = s;
    if (ambient_basis) {
      auto ce = col_echelon((*ambient_basis) * s.basis);
      in_ambient = Submodule<F>{ce.basis, ce.pivot_rows};
    }
    chain.push_back(in_ambient);
    if (level == 0) {
      FlagPoint<F> fp;
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) fp.subs.push_back(*it);
      out.push_back(std::move(fp));
    } else {
      enumerate_flags_rec(tau, dims, level - 1, chain, budget, out);
    }
    chain.pop_back();
  }
}

}  // namespace detail

// Nested enumeration of flags with dimensions d^1 <= ... <= d^r.
template <class F>
std::vector<FlagPoint<F>> enumerate_flags(const Representation<F>& tau,
                                          const std::vector<size_t>& dims,
                                          size_t budget = 1000000) {
  static_assert(F::is_prime_field, "flag enumeration works over prime fields");
  if (dims.empty()) throw std::invalid_argument("enumerate_flags: empty dimension list");
  for (size_t i = 0; i + 1 < dims.size(); ++i)
    if (dims[i] > dims[i + 1])
      throw std::invalid_argument("enumerate_flags: dimensions must be nondecreasing");
  if (dims.back() > tau.dim) return {};
  std::vector<FlagPoint<F>> out;
  std::vector<Submodule<F>> chain;
  detail::enumerate_flags_rec(tau, dims, dims.size() - 1, chain, budget, out);
  return out;
}

// the flag and its ambient quotients as chain modules, for tangent spaces
template <class F>
ChainModule<F> flag_chain(const Representation<F>& tau, const FlagPoint<F>& flag) {
  ChainModule<F> cm;
  for (size_t i = 0; i < flag.subs.size(); ++i) cm.reps.push_back(sub_rep(tau, flag.subs[i]));
  for (size_t i = 0; i + 1 < flag.subs.size(); ++i) {
    const auto& small = flag.subs[i];
    const auto& big = flag.subs[i + 1];
    ColEchelon<F> ce{big.basis, big.pivot_rows};
    Matrix<F> incl(tau.field(), big.basis.cols(), small.basis.cols());
    for (size_t j = 0; j < small.basis.cols(); ++j) {
      auto coords = reduce_against_echelon(ce, small.basis.col(j));
      if (!coords) throw std::invalid_argument("flag is not nested");
      for (size_t r = 0; r < big.basis.cols(); ++r) incl.at(r, j) = (*coords)[r];
    }
    cm.maps.push_back(std::move(incl));
  }
  return cm;
}

template <class F>
ChainModule<F> flag_quotient_chain(const Representation<F>& tau, const FlagPoint<F>& flag) {
  ChainModule<F> cm;
  std::vector<QuotientModule<F>> quots;
  for (const auto& u : flag.subs) quots.push_back(quotient_module(tau, u.basis));
  for (auto& q : quots) cm.reps.push_back(q.rep);
  const F& f = tau.field();
  for (size_t i = 0; i + 1 < quots.size(); ++i) {
    // induced map M/U^i -> M/U^{i+1}: include the complement coordinates back
    // into M, then project
    size_t mi = quots[i].rep.dim;
    // canonical section of the projection: quotient coordinate k goes to the
    // k-th non-pivot standard basis vector
    Matrix<F> section(f, tau.dim, mi);
    std::vector<bool> is_pivot(tau.dim, false);
    for (size_t r : flag.subs[i].pivot_rows) is_pivot[r] = true;
    size_t k = 0;
    for (size_t r = 0; r < tau.dim; ++r)
      if (!is_pivot[r]) section.at(r, k++) = f.one();
    cm.maps.push_back(quots[i + 1].projection * section);
  }
  return cm;
}

// dim Hom over the chain algebra of (U^1 c ... c U^r) into (M/U^1 -> ... -> M/U^r)
template <class F>
size_t flag_tangent_dim(const Representation<F>& tau, const FlagPoint<F>& flag) {
  return chain_hom_basis(flag_chain(tau, flag), flag_quotient_chain(tau, flag)).size();
}

}  // namespace repcomp
