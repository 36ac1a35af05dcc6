#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "repcomp/algebra.hpp"
#include "repcomp/linalg.hpp"

namespace repcomp {

// A d-dimensional representation: one d x d matrix per generator. The
// dimension vector, when present, records the ranks at the idempotent block
// and pins rho(e^i) to the standard block-diagonal idempotents.
template <class F>
struct Representation {
  size_t dim = 0;
  std::vector<Matrix<F>> mats;
  std::optional<std::vector<size_t>> dim_vector;

  const F& field() const { return mats.at(0).field(); }
};

template <class F>
Representation<F> zero_representation(const F& f, size_t num_generators, size_t dim) {
  Representation<F> rep;
  rep.dim = dim;
  rep.mats.assign(num_generators, Matrix<F>(f, dim, dim));
  return rep;
}

// standard block idempotent E_i for a dimension vector
template <class F>
Matrix<F> standard_idempotent(const F& f, const std::vector<size_t>& dimvec, size_t i) {
  size_t d = std::accumulate(dimvec.begin(), dimvec.end(), size_t(0));
  Matrix<F> m(f, d, d);
  size_t off = std::accumulate(dimvec.begin(), dimvec.begin() + i, size_t(0));
  for (size_t k = 0; k < dimvec[i]; ++k) m.at(off + k, off + k) = f.one();
  return m;
}

template <class F>
Matrix<F> eval_word(const Representation<F>& rep, const std::vector<size_t>& word) {
  const F& f = rep.field();
  Matrix<F> acc = Matrix<F>::identity(f, rep.dim);
  for (size_t g : word) {
    if (g >= rep.mats.size()) throw std::out_of_range("word mentions unknown generator");
    acc = acc * rep.mats[g];
  }
  return acc;
}

template <class F>
Matrix<F> eval_ncpoly(const NCPoly<F>& p, const Representation<F>& rep) {
  const F& f = rep.field();
  Matrix<F> acc(f, rep.dim, rep.dim);
  for (const auto& term : p.terms()) acc = acc + eval_word(rep, term.word).scaled(term.coeff);
  return acc;
}

struct Validation {
  std::vector<size_t> violated_relations;
  std::vector<std::string> structural_errors;
  bool ok() const { return violated_relations.empty() && structural_errors.empty(); }
};

template <class F>
Validation validate_rep(const AlgebraPresentation<F>& alg, const Representation<F>& rep) {
  Validation v;
  if (rep.mats.size() != alg.num_generators()) {
    v.structural_errors.push_back("expected one matrix per generator");
    return v;
  }
  for (size_t g = 0; g < rep.mats.size(); ++g)
    if (rep.mats[g].rows() != rep.dim || rep.mats[g].cols() != rep.dim) {
      v.structural_errors.push_back("matrix for generator '" + alg.generator_names[g] +
                                    "' is not dim x dim");
      return v;
    }
  if (rep.dim_vector) {
    if (!alg.idempotents || rep.dim_vector->size() != alg.idempotents->count)
      v.structural_errors.push_back("dimension vector does not match the idempotent block");
    else {
      size_t total = std::accumulate(rep.dim_vector->begin(), rep.dim_vector->end(), size_t(0));
      if (total != rep.dim)
        v.structural_errors.push_back("dimension vector entries do not sum to dim");
      else
        for (size_t i = 0; i < alg.idempotents->count; ++i)
          if (rep.mats[alg.idempotents->gens[i]] !=
              standard_idempotent(rep.field(), *rep.dim_vector, i))
            v.structural_errors.push_back("rho(e^" + std::to_string(i + 1) +
                                          ") is not the standard block idempotent");
    }
    if (!v.structural_errors.empty()) return v;
  }
  for (size_t r = 0; r < alg.relations.size(); ++r)
    if (!eval_ncpoly(alg.relations[r], rep).is_zero()) v.violated_relations.push_back(r);
  return v;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
  if (a.mats.size() != b.mats.size())
    throw std::invalid_argument("direct_sum: generator count mismatch");
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: field mismatch");
  Representation<F> r;
  r.dim = a.dim + b.dim;
  for (size_t g = 0; g < a.mats.size(); ++g)
    r.mats.push_back(Matrix<F>::direct_sum(a.mats[g], b.mats[g]));
  if (a.dim_vector && b.dim_vector && a.dim_vector->size() == b.dim_vector->size()) {
    std::vector<size_t> dv(a.dim_vector->size());
    for (size_t i = 0; i < dv.size(); ++i) dv[i] = (*a.dim_vector)[i] + (*b.dim_vector)[i];
    r.dim_vector = dv;
    // the block idempotents of the summands interleave, so the sum is only
    // a dim-vector representation after the separating permutation
    if (a.dim_vector.has_value()) {
      std::vector<size_t> perm;  // new position -> old position
      size_t offa = 0, offb = a.dim;
      for (size_t i = 0; i < dv.size(); ++i) {
        for (size_t k = 0; k < (*a.dim_vector)[i]; ++k) perm.push_back(offa + k);
        for (size_t k = 0; k < (*b.dim_vector)[i]; ++k) perm.push_back(offb + k);
        offa += (*a.dim_vector)[i];
        offb += (*b.dim_vector)[i];
      }
      const F& f = a.field();
      Matrix<F> p(f, r.dim, r.dim);
      for (size_t i = 0; i < r.dim; ++i) p.at(i, perm[i]) = f.one();
      Matrix<F> pt = p.transpose();
      for (auto& m : r.mats) m = p * m * pt;
    }
  }
  return r;
}

template <class F>
Representation<F> conjugate(const Matrix<F>& g, const Representation<F>& rep) {
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("conjugate: matrix not invertible");
  Representation<F> r;
  r.dim = rep.dim;
  r.dim_vector = std::nullopt;
  for (const auto& m : rep.mats) r.mats.push_back(g * m * (*gi));
  return r;
}

// (rank rho(e^1), ..., rank rho(e^n)); the ranks must sum to dim.
template <class F>
std::vector<size_t> dimension_vector_of(const AlgebraPresentation<F>& alg,
                                        const Representation<F>& rep) {
  if (!alg.idempotents) throw std::invalid_argument("algebra has no idempotent block");
  std::vector<size_t> dv;
  size_t total = 0;
  for (size_t g : alg.idempotents->gens) {
    dv.push_back(rank(rep.mats.at(g)));
    total += dv.back();
  }
  if (total != rep.dim)
    throw std::invalid_argument("idempotent ranks do not sum to dim; invalid idempotent data");
  return dv;
}

// A Lambda(2)-module: an intertwiner map : sub -> amb between two
// representations of the same algebra.
template <class F>
struct PairModule {
  Representation<F> sub;  // dim d
  Representation<F> amb;  // dim m
  Matrix<F> map;          // m x d
};

template <class F>
bool pair_intertwines(const PairModule<F>& pm) {
  if (pm.sub.mats.size() != pm.amb.mats.size()) return false;
  for (size_t g = 0; g < pm.sub.mats.size(); ++g)
    if (pm.map * pm.sub.mats[g] != pm.amb.mats[g] * pm.map) return false;
  return true;
}

template <class F>
bool pair_injective(const PairModule<F>& pm) {
  return rank(pm.map) == pm.sub.dim;
}

// A Lambda(r)-module: a chain U^1 -> U^2 -> ... -> U^r of representations
// with intertwiners maps[i] : reps[i] -> reps[i+1].
template <class F>
struct ChainModule {
  std::vector<Representation<F>> reps;
  std::vector<Matrix<F>> maps;
};

template <class F>
bool chain_intertwines(const ChainModule<F>& cm) {
  if (cm.reps.size() < 1 || cm.maps.size() + 1 != cm.reps.size()) return false;
  for (size_t i = 0; i < cm.maps.size(); ++i) {
    const auto& f = cm.maps[i];
    if (f.rows() != cm.reps[i + 1].dim || f.cols() != cm.reps[i].dim) return false;
    for (size_t g = 0; g < cm.reps[i].mats.size(); ++g)
      if (f * cm.reps[i].mats[g] != cm.reps[i + 1].mats[g] * f) return false;
  }
  return true;
}

// The chain as a single representation of the extended algebra
// chain_extension(base, r), with dimension vector (dim U^1, ..., dim U^r).
// `extended` is that extension presentation; its generator list is the base
// generators followed by r idempotents and r-1 arrows.
template <class F>
Representation<F> chain_to_rep(const AlgebraPresentation<F>& extended, const ChainModule<F>& cm) {
  if (!chain_intertwines(cm)) throw std::invalid_argument("chain maps do not intertwine");
  const F& f = extended.field;
  size_t r = cm.reps.size();
  if (extended.num_generators() < 2 * r - 1)
    throw std::invalid_argument("chain_to_rep: presentation is not an extension of length r");
  size_t nx = extended.num_generators() - (2 * r - 1);
  for (const auto& rep : cm.reps)
    if (rep.mats.size() != nx)
      throw std::invalid_argument("chain_to_rep: member generator count mismatch");
  std::vector<size_t> dv;
  size_t total = 0;
  std::vector<size_t> offset;
  for (const auto& rep : cm.reps) {
    offset.push_back(total);
    dv.push_back(rep.dim);
    total += rep.dim;
  }
  Representation<F> out;
  out.dim = total;
  out.dim_vector = dv;
  for (size_t g = 0; g < nx; ++g) {
    Matrix<F> m(f, total, total);
    for (size_t i = 0; i < r; ++i) m.set_block(offset[i], offset[i], cm.reps[i].mats[g]);
    out.mats.push_back(std::move(m));
  }
  for (size_t i = 0; i < r; ++i)
    out.mats.push_back(standard_idempotent(f, dv, i));
  for (size_t i = 0; i + 1 < r; ++i) {
    Matrix<F> m(f, total, total);
    m.set_block(offset[i + 1], offset[i], cm.maps[i]);
    out.mats.push_back(std::move(m));
  }
  return out;
}

template <class F>
Representation<F> pair_to_rep(const AlgebraPresentation<F>& alg, const PairModule<F>& pm) {
  return chain_to_rep(alg, ChainModule<F>{{pm.sub, pm.amb}, {pm.map}});
}

// Restrict the ambient action to an invariant column-echelon subspace;
// nullopt when the subspace is not invariant.
template <class F>
std::optional<Representation<F>> restrict_to_subspace(const Representation<F>& amb,
                                                      const ColEchelon<F>& basis) {
  const F& f = amb.field();
  size_t d = basis.basis.cols();
  Representation<F> sub;
  sub.dim = d;
  for (const auto& m : amb.mats) {
    Matrix<F> s(f, d, d);
    for (size_t j = 0; j < d; ++j) {
      auto coords = reduce_against_echelon(basis, (m * basis.basis).col(j));
      if (!coords) return std::nullopt;
      for (size_t i = 0; i < d; ++i) s.at(i, j) = (*coords)[i];
    }
    sub.mats.push_back(std::move(s));
  }
  return sub;
}

}  // namespace repcomp
