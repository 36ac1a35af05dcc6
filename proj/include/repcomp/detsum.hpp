#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "repcomp/linalg.hpp"

namespace repcomp {

// det(M_1 + ... + M_n) expanded over ordered partitions (I_1,...,I_n) of the
// row set and shuffles sigma, with terms sgn(sigma) * prod_k minor(M_k; I_k,
// sigma(I_k)). The sum is never formed: this is the verification route, and
// it is exponential in d by construction. Ordered partitions may have empty
// blocks; shuffles are encoded as ordered partitions (J_1,...,J_n) of the
// column set with |J_k| = |I_k|, the permutation mapping the sorted elements
// of I_k onto the sorted elements of J_k.

namespace detail {

inline std::vector<size_t> bits_of(uint32_t mask, size_t d) {
  std::vector<size_t> v;
  for (size_t i = 0; i < d; ++i)
    if (mask & (uint32_t(1) << i)) v.push_back(i);
  return v;
}

template <class F>
class MinorCache {
 public:
  explicit MinorCache(const Matrix<F>& m) : m_(m) {}
  const typename F::Elem& get(uint32_t rows, uint32_t cols) {
    auto key = std::make_pair(rows, cols);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto val = minor_det(m_, bits_of(rows, m_.rows()), bits_of(cols, m_.cols()));
    return cache_.emplace(key, std::move(val)).first->second;
  }

 private:
  const Matrix<F>& m_;
  std::map<std::pair<uint32_t, uint32_t>, typename F::Elem> cache_;
};

inline int sign_of_permutation(const std::vector<size_t>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

// all ways to split `elems` into n ordered blocks of prescribed sizes
inline void enumerate_blockings(const std::vector<size_t>& elems, const std::vector<size_t>& sizes,
                                size_t block, std::vector<std::vector<size_t>>& current,
                                const std::function<void(const std::vector<std::vector<size_t>>&)>& emit) {
  if (block == sizes.size()) {
    emit(current);
    return;
  }
  std::vector<size_t> rest;
  for (size_t e : elems)
    rest.push_back(e);
  // choose sizes[block] elements (as a sorted subset) for this block
  size_t k = sizes[block];
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> choose = [&](size_t start, size_t depth) {
    if (depth == k) {
      std::vector<size_t> chosen, remaining;
      std::vector<bool> used(elems.size(), false);
      for (size_t t = 0; t < k; ++t) used[idx[t]] = true;
      for (size_t t = 0; t < elems.size(); ++t)
        (used[t] ? chosen : remaining).push_back(elems[t]);
      current.push_back(chosen);
      enumerate_blockings(remaining, sizes, block + 1, current, emit);
      current.pop_back();
      return;
    }
    for (size_t i = start; i + (k - depth) <= elems.size(); ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
}

}  // namespace detail

template <class F>
typename F::Elem det_sum(const std::vector<Matrix<F>>& ms) {
  if (ms.empty()) throw std::invalid_argument("det_sum: empty list");
  const F& f = ms[0].field();
  size_t d = ms[0].rows();
  if (d > 16) throw std::invalid_argument("det_sum: dimension too large for expansion");
  for (const auto& m : ms) {
    if (m.rows() != m.cols() || m.rows() != d) throw std::invalid_argument("det_sum: size mismatch");
    if (!(m.field() == f)) throw std::invalid_argument("det_sum: field mismatch");
  }
  size_t n = ms.size();
  std::vector<detail::MinorCache<F>> minors;
  minors.reserve(n);
  for (const auto& m : ms) minors.emplace_back(m);

  typename F::Elem total = f.zero();
  std::vector<size_t> all(d);
  for (size_t i = 0; i < d; ++i) all[i] = i;

  // ordered partitions of rows: one block label per row
  std::vector<size_t> label(d, 0);
  while (true) {
    std::vector<std::vector<size_t>> iblocks(n);
    std::vector<uint32_t> imasks(n, 0);
    for (size_t i = 0; i < d; ++i) {
      iblocks[label[i]].push_back(i);
      imasks[label[i]] |= uint32_t(1) << i;
    }
    std::vector<size_t> sizes(n);
    for (size_t k = 0; k < n; ++k) sizes[k] = iblocks[k].size();

    std::vector<std::vector<size_t>> current;
    detail::enumerate_blockings(all, sizes, 0, current,
                                [&](const std::vector<std::vector<size_t>>& jblocks) {
      // permutation: sorted I_k -> sorted J_k
      std::vector<size_t> perm(d);
      for (size_t k = 0; k < n; ++k)
        for (size_t t = 0; t < iblocks[k].size(); ++t) perm[iblocks[k][t]] = jblocks[k][t];
      typename F::Elem term =
          detail::sign_of_permutation(perm) == 1 ? f.one() : f.neg(f.one());
      for (size_t k = 0; k < n && !f.is_zero(term); ++k) {
        uint32_t jmask = 0;
        for (size_t e : jblocks[k]) jmask |= uint32_t(1) << e;
        term = f.mul(term, minors[k].get(imasks[k], jmask));
      }
      total = f.add(total, term);
    });

    // next label assignment
    size_t pos = 0;
    while (pos < d && label[pos] == n - 1) label[pos++] = 0;
    if (pos == d) break;
    ++label[pos];
  }
  return total;
}

// The two-matrix specialisation with explicit signs (-1)^{S(I)+S(J)}, kept
// as an independent route for cross-checking det_sum.
template <class F>
typename F::Elem det_sum_pair_signed(const Matrix<F>& m, const Matrix<F>& n) {
  const F& f = m.field();
  size_t d = m.rows();
  if (n.rows() != d || m.cols() != d || n.cols() != d)
    throw std::invalid_argument("det_sum_pair_signed: size mismatch");
  if (d > 16) throw std::invalid_argument("det_sum_pair_signed: dimension too large");
  typename F::Elem total = f.zero();
  for (uint32_t imask = 0; imask < (uint32_t(1) << d); ++imask) {
    auto I = detail::bits_of(imask, d);
    for (uint32_t jmask = 0; jmask < (uint32_t(1) << d); ++jmask) {
      if (__builtin_popcount(jmask) != static_cast<int>(I.size())) continue;
      auto J = detail::bits_of(jmask, d);
      size_t s = 0;  // 1-based index sums, as in the sign convention
      for (size_t x : I) s += x + 1;
      for (size_t x : J) s += x + 1;
      std::vector<size_t> Ic, Jc;
      for (size_t x = 0; x < d; ++x) {
        if (!(imask & (uint32_t(1) << x))) Ic.push_back(x);
        if (!(jmask & (uint32_t(1) << x))) Jc.push_back(x);
      }
      auto term = f.mul(minor_det(m, I, J), minor_det(n, Ic, Jc));
      total = (s % 2 == 0) ? f.add(total, term) : f.sub(total, term);
    }
  }
  return total;
}

}  // namespace repcomp
