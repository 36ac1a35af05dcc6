#pragma once

#include <functional>
#include <string>
#include <thread>

#include "repcomp/budget.hpp"
#include "repcomp/certify.hpp"
#include "repcomp/decompose.hpp"

namespace repcomp {

// A point of the quiver Grassmannian: an invariant subspace stored with its
// canonical column-echelon basis, so set-level equality is syntactic.
template <class F>
struct Submodule {
  Matrix<F> basis;                // m x d, column echelon
  std::vector<size_t> pivot_rows; // ascending, one per column
};

namespace detail {

// candidate column-echelon shapes: pivot rows J (ascending) plus the list of
// free positions (row, col) with row > J[col], row not a pivot
struct EchelonPattern {
  std::vector<size_t> pivots;
  std::vector<std::pair<size_t, size_t>> free_pos;
};

inline std::vector<EchelonPattern> echelon_patterns(size_t m, size_t d) {
  std::vector<EchelonPattern> out;
  if (d > m) return out;
  std::vector<size_t> J(d);
  for (size_t i = 0; i < d; ++i) J[i] = i;
  while (true) {
    EchelonPattern pat;
    pat.pivots = J;
    std::vector<bool> is_pivot(m, false);
    for (size_t r : J) is_pivot[r] = true;
    for (size_t k = 0; k < d; ++k)
      for (size_t r = J[k] + 1; r < m; ++r)
        if (!is_pivot[r]) pat.free_pos.emplace_back(r, k);
    out.push_back(std::move(pat));
    // next combination
    if (d == 0) break;
    size_t i = d;
    while (i-- > 0) {
      if (J[i] + 1 <= m - (d - i)) {
        ++J[i];
        for (size_t t = i + 1; t < d; ++t) J[t] = J[t - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

template <class F>
bool is_invariant(const Representation<F>& tau, const ColEchelon<F>& ce) {
  for (const auto& m : tau.mats) {
    Matrix<F> img = m * ce.basis;
    for (size_t j = 0; j < img.cols(); ++j)
      if (!reduce_against_echelon(ce, img.col(j)).has_value()) return false;
  }
  return true;
}

// enumerate all invariant subspaces with the given pattern, in digit order
inline void for_each_assignment(uint64_t q, size_t cells, const std::function<void(const std::vector<uint64_t>&)>& fn) {
  std::vector<uint64_t> digits(cells, 0);
  while (true) {
    fn(digits);
    size_t pos = cells;
    while (pos-- > 0) {
      if (digits[pos] + 1 < q) {
        ++digits[pos];
        for (size_t t = pos + 1; t < cells; ++t) digits[t] = 0;
        break;
      }
      if (pos == 0) return;
    }
    if (cells == 0) return;
  }
}

inline void collect_patterns_for(const std::vector<EchelonPattern>& pats, uint64_t q,
                                 size_t budget, const char* what) {
  double total = 0;
  for (const auto& pat : pats) {
    double candidates = 1;
    for (size_t i = 0; i < pat.free_pos.size(); ++i) candidates *= double(q);
    total += candidates;
  }
  if (total > double(budget)) throw BudgetExceeded(what, total);
}

template <class F>
void enumerate_with_patterns(const Representation<F>& tau,
                             const std::vector<EchelonPattern>& pats, size_t d,
                             size_t num_threads, std::vector<Submodule<F>>& out) {
  const F& f = tau.field();
  uint64_t q = f.modulus();
  std::vector<std::vector<Submodule<F>>> found(pats.size());
  auto work = [&](size_t lo, size_t hi) {
    for (size_t pi = lo; pi < hi; ++pi) {
      const auto& pat = pats[pi];
      for_each_assignment(q, pat.free_pos.size(), [&](const std::vector<uint64_t>& digits) {
        Matrix<F> b(f, tau.dim, d);
        for (size_t k = 0; k < d; ++k) b.at(pat.pivots[k], k) = f.one();
        for (size_t i = 0; i < digits.size(); ++i)
          b.at(pat.free_pos[i].first, pat.free_pos[i].second) = digits[i];
        ColEchelon<F> ce{b, pat.pivots};
        if (is_invariant(tau, ce)) found[pi].push_back(Submodule<F>{b, pat.pivots});
      });
    }
  };
  if (num_threads <= 1 || pats.size() <= 1) {
    work(0, pats.size());
  } else {
    size_t n = std::min(num_threads, pats.size());
    std::vector<std::thread> threads;
    size_t chunk = (pats.size() + n - 1) / n;
    for (size_t t = 0; t < n; ++t)
      threads.emplace_back(work, t * chunk, std::min(pats.size(), (t + 1) * chunk));
    for (auto& th : threads) th.join();
  }
  for (auto& bucket : found)
    for (auto& sm : bucket) out.push_back(std::move(sm));
}

}  // namespace detail

// All d-dimensional invariant subspaces of the module of tau over F_q, in
// canonical order (pivot pattern, then free entries). The echelon-pattern
// sweep is exhaustive; the closure filter is the correctness authority.
template <class F>
std::vector<Submodule<F>> enumerate_submodules(const Representation<F>& tau, size_t d,
                                               size_t budget = 1000000, size_t num_threads = 1) {
  static_assert(F::is_prime_field, "submodule enumeration works over prime fields");
  std::vector<Submodule<F>> out;
  if (d > tau.dim) return out;
  auto pats = detail::echelon_patterns(tau.dim, d);
  detail::collect_patterns_for(pats, tau.field().modulus(), budget, "submodule enumeration budget");
  detail::enumerate_with_patterns(tau, pats, d, num_threads, out);
  return out;
}

// Dimension-vector variant: when the ambient is pinned to the standard block
// idempotents, candidate bases are assembled per block (cross-block entries
// vanish for any idempotent-invariant subspace).
template <class F>
std::vector<Submodule<F>> enumerate_submodules_dimvec(const AlgebraPresentation<F>& alg,
                                                      const Representation<F>& tau,
                                                      const std::vector<size_t>& dimvec,
                                                      size_t budget = 1000000,
                                                      size_t num_threads = 1) {
  static_assert(F::is_prime_field, "submodule enumeration works over prime fields");
  if (!alg.idempotents || alg.idempotents->count != dimvec.size())
    throw std::invalid_argument("dimension vector does not match the idempotent block");
  if (!tau.dim_vector)
    throw std::invalid_argument("ambient representation carries no dimension vector");
  const auto& amb_dv = *tau.dim_vector;
  size_t d = 0;
  for (size_t i = 0; i < dimvec.size(); ++i) {
    if (dimvec[i] > amb_dv[i]) return {};
    d += dimvec[i];
  }

  // per-block patterns, assembled into global ones (block rows are disjoint
  // and ordered, so the concatenation is again column-echelon)
  std::vector<std::vector<detail::EchelonPattern>> block_pats;
  for (size_t i = 0; i < dimvec.size(); ++i)
    block_pats.push_back(detail::echelon_patterns(amb_dv[i], dimvec[i]));

  std::vector<detail::EchelonPattern> pats;
  std::vector<size_t> idx(dimvec.size(), 0);
  std::vector<size_t> row_off(dimvec.size() + 1, 0), col_off(dimvec.size() + 1, 0);
  for (size_t i = 0; i < dimvec.size(); ++i) {
    row_off[i + 1] = row_off[i] + amb_dv[i];
    col_off[i + 1] = col_off[i] + dimvec[i];
  }
  while (true) {
    bool valid = true;
    for (size_t i = 0; i < dimvec.size() && valid; ++i)
      if (block_pats[i].empty()) valid = false;
    if (!valid) return {};
    detail::EchelonPattern pat;
    pat.pivots.resize(d);
    for (size_t i = 0; i < dimvec.size(); ++i) {
      const auto& bp = block_pats[i][idx[i]];
      for (size_t k = 0; k < dimvec[i]; ++k) pat.pivots[col_off[i] + k] = row_off[i] + bp.pivots[k];
      for (const auto& [r, c] : bp.free_pos) pat.free_pos.emplace_back(row_off[i] + r, col_off[i] + c);
    }
    pats.push_back(std::move(pat));
    size_t pos = dimvec.size();
    while (pos-- > 0) {
      if (idx[pos] + 1 < block_pats[pos].size()) {
        ++idx[pos];
        for (size_t t = pos + 1; t < dimvec.size(); ++t) idx[t] = 0;
        break;
      }
      if (pos == 0) {
        pos = size_t(-1);
        break;
      }
    }
    if (pos == size_t(-1)) break;
  }

  detail::collect_patterns_for(pats, tau.field().modulus(), budget, "submodule enumeration budget");
  std::vector<Submodule<F>> out;
  detail::enumerate_with_patterns(tau, pats, d, num_threads, out);
  return out;
}

template <class F>
size_t point_count(const Representation<F>& tau, size_t d, size_t budget = 1000000,
                   size_t num_threads = 1) {
  return enumerate_submodules(tau, d, budget, num_threads).size();
}

template <class F>
Representation<F> sub_rep(const Representation<F>& tau, const Submodule<F>& u) {
  auto r = restrict_to_subspace(tau, ColEchelon<F>{u.basis, u.pivot_rows});
  if (!r) throw std::invalid_argument("submodule basis is not invariant");
  return *r;
}

// dim Hom(U, M/U), the tangent space of the Grassmannian at U
template <class F>
size_t tangent_dim(const Representation<F>& tau, const Submodule<F>& u) {
  if (u.basis.cols() == 0 || u.basis.cols() == tau.dim) return 0;
  auto sub = sub_rep(tau, u);
  auto quot = quotient_module(tau, u.basis);
  return hom_dim(sub, quot.rep);
}

// iso-class strata of the enumerated points
template <class F>
struct Stratum {
  std::string label;  // summand dimensions of the decomposition, e.g. "2" or "1+1"
  Representation<F> representative;
  std::vector<size_t> point_indices;  // into the enumeration order
  bool iso_unknown = false;           // residual stratum of unresolved points
};

namespace detail {

template <class F>
std::string decomposition_label(const Representation<F>& rep, uint64_t seed) {
  auto d = decompose(rep, seed);
  std::vector<size_t> dims;
  for (const auto& s : d.summands)
    for (size_t i = 0; i < s.multiplicity; ++i) dims.push_back(s.rep.dim);
  std::sort(dims.rbegin(), dims.rend());
  std::string label;
  for (size_t i = 0; i < dims.size(); ++i) label += (i ? "+" : "") + std::to_string(dims[i]);
  if (!d.complete) label += "?";
  return label.empty() ? "0" : label;
}

// cheap sound negative screen before running the full iso search
template <class F>
std::vector<size_t> hom_fingerprint(const Representation<F>& rep,
                                    const std::vector<Representation<F>>& probes) {
  std::vector<size_t> fp;
  for (const auto& p : probes) {
    fp.push_back(hom_dim(rep, p));
    fp.push_back(hom_dim(p, rep));
  }
  return fp;
}

}  // namespace detail

template <class F>
std::vector<Stratum<F>> stratify(const Representation<F>& tau,
                                 const std::vector<Submodule<F>>& points, uint64_t seed = 0) {
  std::vector<Stratum<F>> strata;
  std::vector<Representation<F>> reps;
  std::vector<std::vector<size_t>> fingerprints;
  std::optional<size_t> residual;
  for (size_t i = 0; i < points.size(); ++i) {
    Representation<F> s = sub_rep(tau, points[i]);
    auto fp = detail::hom_fingerprint(s, std::vector<Representation<F>>{s, tau});
    bool placed = false;
    bool saw_unknown = false;
    for (size_t k = 0; k < strata.size() && !placed; ++k) {
      if (strata[k].iso_unknown) continue;
      if (strata[k].representative.dim != s.dim) continue;
      if (fingerprints[k] != fp) continue;
      auto iso = is_isomorphic(s, strata[k].representative, seed);
      if (iso.verdict == Verdict3::yes) {
        strata[k].point_indices.push_back(i);
        placed = true;
      } else if (iso.verdict == Verdict3::unknown) {
        saw_unknown = true;
      }
    }
    if (placed) continue;
    if (saw_unknown) {
      if (!residual) {
        residual = strata.size();
        strata.push_back(Stratum<F>{"unresolved", s, {}, true});
        fingerprints.push_back({});
      }
      strata[*residual].point_indices.push_back(i);
      continue;
    }
    strata.push_back(Stratum<F>{detail::decomposition_label(s, seed), s, {i}, false});
    fingerprints.push_back(fp);
  }
  return strata;
}

// An injective intertwiner rho -> tau, searched among combinations of the
// Hom basis; exhaustive over small F_q, grid-certified over Q.
template <class F>
struct EmbeddingResult {
  Verdict3 verdict = Verdict3::unknown;
  std::optional<Matrix<F>> embedding;
};

template <class F>
EmbeddingResult<F> find_embedding(const Representation<F>& rho, const Representation<F>& tau,
                                  uint64_t seed = 0, size_t budget = 2000) {
  const size_t exhaust_limit = 1u << 20;
  if (rho.dim == 0) return {Verdict3::yes, Matrix<F>(rho.mats.at(0).field(), tau.dim, 0)};
  if (rho.dim > tau.dim) return {Verdict3::no, std::nullopt};
  auto hom = hom_basis(rho, tau);
  size_t k = hom.dim();
  if (k == 0) return {Verdict3::no, std::nullopt};
  const F& f = rho.field();
  auto full_rank = [&](const std::vector<typename F::Elem>& coef)
      -> std::optional<Matrix<F>> {
    Matrix<F> g(f, tau.dim, rho.dim);
    for (size_t i = 0; i < k; ++i) g = g + hom.basis[i].scaled(coef[i]);
    if (rank(g) == rho.dim) return g;
    return std::nullopt;
  };
  std::mt19937_64 rng(seed ^ 0xa0761d6478bd642full);
  std::vector<typename F::Elem> coef(k, f.zero());
  if constexpr (F::is_prime_field) {
    uint64_t q = f.modulus();
    std::uniform_int_distribution<uint64_t> dist(0, q - 1);
    for (size_t t = 0; t < std::min<size_t>(budget, 512); ++t) {
      for (auto& c : coef) c = dist(rng);
      if (auto g = full_rank(coef)) return {Verdict3::yes, *g};
    }
    double total = 1;
    for (size_t i = 0; i < k && total <= exhaust_limit; ++i) total *= double(q);
    if (total <= exhaust_limit) {
      std::vector<uint64_t> idx(k, 0);
      while (true) {
        for (size_t i = 0; i < k; ++i) coef[i] = idx[i];
        if (auto g = full_rank(coef)) return {Verdict3::yes, *g};
        size_t pos = 0;
        while (pos < k && idx[pos] == q - 1) idx[pos++] = 0;
        if (pos == k) break;
        ++idx[pos];
      }
      return {Verdict3::no, std::nullopt};
    }
    return {Verdict3::unknown, std::nullopt};
  } else {
    std::uniform_int_distribution<long> dist(-long(8 * rho.dim + 8), long(8 * rho.dim + 8));
    for (size_t t = 0; t < std::min<size_t>(budget, 256); ++t) {
      for (auto& c : coef) c = f.from_int(dist(rng));
      if (auto g = full_rank(coef)) return {Verdict3::yes, *g};
    }
    double total = 1;
    for (size_t i = 0; i < k && total <= exhaust_limit; ++i) total *= double(rho.dim + 1);
    if (total <= exhaust_limit) {
      std::vector<size_t> idx(k, 0);
      while (true) {
        for (size_t i = 0; i < k; ++i) coef[i] = f.from_int(long(idx[i]));
        if (auto g = full_rank(coef)) return {Verdict3::yes, *g};
        size_t pos = 0;
        while (pos < k && idx[pos] == rho.dim) idx[pos++] = 0;
        if (pos == k) break;
        ++idx[pos];
      }
      return {Verdict3::no, std::nullopt};
    }
    return {Verdict3::unknown, std::nullopt};
  }
}

// dim S_rho = dim Hom(rho, tau) - dim End(rho), defined when rho embeds
template <class F>
struct StratumDim {
  Verdict3 embedding = Verdict3::unknown;
  size_t dim = 0;
};

template <class F>
StratumDim<F> stratum_dim(const Representation<F>& rho, const Representation<F>& tau,
                          uint64_t seed = 0) {
  auto emb = find_embedding(rho, tau, seed);
  StratumDim<F> out;
  out.embedding = emb.verdict;
  if (emb.verdict == Verdict3::yes) {
    size_t h = hom_dim(rho, tau);
    size_t e = end_dim(rho);
    if (h < e) throw std::logic_error("stratum_dim: hom smaller than end at an embedding");
    out.dim = h - e;
  }
  return out;
}

// closure of S_rho is a component when Hom(rho,tau) ->> Hom(rho, tau/rho),
// or already when Ext^1(rho,rho) = 0
template <class F>
ComponentCertificate stratum_is_component(const AlgebraPresentation<F>& alg,
                                          const Representation<F>& rho,
                                          const Representation<F>& tau,
                                          const Matrix<F>& embedding) {
  ComponentCertificate cert;
  size_t self_ext = ext_dim(alg, rho, rho);
  cert.obstructions.emplace_back("ext(rho,rho)", self_ext);
  auto quot = quotient_module(tau, embedding);
  auto hom = hom_basis(rho, tau);
  size_t target = hom_dim(rho, quot.rep);
  // rank of the composition Hom(rho,tau) -> Hom(rho, tau/rho)
  const F& f = alg.field;
  Matrix<F> images(f, quot.rep.dim * rho.dim, hom.dim());
  for (size_t t = 0; t < hom.dim(); ++t) {
    Matrix<F> img = quot.projection * hom.basis[t];
    for (size_t r = 0; r < img.rows(); ++r)
      for (size_t c = 0; c < img.cols(); ++c) images.at(r * rho.dim + c, t) = img.at(r, c);
  }
  size_t image_rank = rank(images);
  cert.obstructions.emplace_back("corank of Hom(rho,tau) -> Hom(rho,tau/rho)",
                                 target - image_rank);
  cert.certified = (image_rank == target) || (self_ext == 0);
  cert.semicontinuity_note = kSemicontinuityNote;
  return cert;
}

// direct sums of Grassmannian components: certified when the pulled-back
// extension spaces vanish both ways
template <class F>
ComponentCertificate grass_sum_is_component(const PairModule<F>& A, const PairModule<F>& B) {
  ComponentCertificate cert;
  size_t e1 = bar_ext_dim(A, B);
  size_t e2 = bar_ext_dim(B, A);
  cert.obstructions.emplace_back("bar_ext(U.,V.)", e1);
  cert.obstructions.emplace_back("bar_ext(V.,U.)", e2);
  cert.certified = (e1 == 0 && e2 == 0);
  cert.semicontinuity_note = kSemicontinuityNote;
  return cert;
}

}  // namespace repcomp
