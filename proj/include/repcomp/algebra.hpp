#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repcomp/ncpoly.hpp"

namespace repcomp {

// A complete set of orthogonal idempotents e^1..e^n inside the generator
// list. Presentations built from quivers always carry one.
struct IdempotentBlock {
  size_t count = 0;
  std::vector<size_t> gens;  // generator index of each e^i
};

struct Arrow {
  std::string name;
  size_t src = 0, tgt = 0;  // vertex indices
};

struct QuiverShape {
  size_t num_vertices = 0;
  std::vector<Arrow> arrows;  // generator index of arrow k is num_vertices + k
};

// Finitely presented algebra K<x_1..x_N>/I with the relations stored fully
// expanded; validation is evaluation-only, no rewriting.
template <class F>
struct AlgebraPresentation {
  explicit AlgebraPresentation(F f) : field(std::move(f)) {}

  F field;
  std::vector<std::string> generator_names;
  std::vector<NCPoly<F>> relations;
  std::optional<IdempotentBlock> idempotents;
  std::optional<QuiverShape> quiver;

  size_t num_generators() const { return generator_names.size(); }

  std::optional<size_t> generator_index(const std::string& name) const {
    for (size_t i = 0; i < generator_names.size(); ++i)
      if (generator_names[i] == name) return i;
    return std::nullopt;
  }
};

// Path algebra KQ / (relations). Generators are the vertex idempotents
// followed by the arrows; words in user relations are products of arrows
// and idempotents in matrix-product order and must be composable.
template <class F>
AlgebraPresentation<F> compile_quiver(F field, const std::vector<std::string>& vertices,
                                      const std::vector<Arrow>& arrows,
                                      const std::vector<NCPoly<F>>& user_relations) {
  AlgebraPresentation<F> alg(field);
  size_t n = vertices.size();
  for (const auto& v : vertices) alg.generator_names.push_back("e_" + v);
  for (const auto& a : arrows) {
    if (a.src >= n || a.tgt >= n) throw std::invalid_argument("arrow endpoint is not a vertex: " + a.name);
    alg.generator_names.push_back(a.name);
  }

  auto src_of = [&](size_t gen) { return gen < n ? gen : arrows[gen - n].src; };
  auto tgt_of = [&](size_t gen) { return gen < n ? gen : arrows[gen - n].tgt; };

  const auto one = field.one();
  // e^i e^j = delta_ij e^i,  sum e^i = 1
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      NCPoly<F> r = NCPoly<F>::monomial(field, one, {i, j});
      if (i == j) r.add_term(field, field.neg(one), {i});
      alg.relations.push_back(std::move(r));
    }
  {
    NCPoly<F> r;
    for (size_t i = 0; i < n; ++i) r.add_term(field, one, {i});
    r.add_term(field, field.neg(one), {});
    alg.relations.push_back(std::move(r));
  }
  // e_tgt a = a = a e_src
  for (size_t k = 0; k < arrows.size(); ++k) {
    size_t g = n + k;
    NCPoly<F> left = NCPoly<F>::monomial(field, one, {arrows[k].tgt, g});
    left.add_term(field, field.neg(one), {g});
    alg.relations.push_back(std::move(left));
    NCPoly<F> right = NCPoly<F>::monomial(field, one, {g, arrows[k].src});
    right.add_term(field, field.neg(one), {g});
    alg.relations.push_back(std::move(right));
  }

  for (const auto& rel : user_relations) {
    for (const auto& term : rel.terms()) {
      for (size_t pos = 0; pos < term.word.size(); ++pos) {
        size_t g = term.word[pos];
        if (g >= alg.generator_names.size())
          throw std::invalid_argument("relation mentions unknown generator index");
        if (pos + 1 < term.word.size() && src_of(g) != tgt_of(term.word[pos + 1]))
          throw std::invalid_argument("non-composable path in relation: " +
                                      rel.to_string(field, alg.generator_names));
      }
    }
    alg.relations.push_back(rel);
  }

  alg.idempotents = IdempotentBlock{n, [&] {
                                      std::vector<size_t> g(n);
                                      for (size_t i = 0; i < n; ++i) g[i] = i;
                                      return g;
                                    }()};
  alg.quiver = QuiverShape{n, arrows};
  return alg;
}

// Free presentation K<x_1..x_N>/(relations), no idempotent block.
template <class F>
AlgebraPresentation<F> free_presentation(F field, std::vector<std::string> names,
                                         std::vector<NCPoly<F>> relations) {
  AlgebraPresentation<F> alg(field);
  alg.generator_names = std::move(names);
  alg.relations = std::move(relations);
  for (const auto& r : alg.relations)
    if (r.max_generator() > alg.generator_names.size())
      throw std::invalid_argument("relation mentions unknown generator index");
  return alg;
}

// K[X]/(X^k): one generator, one relation.
template <class F>
AlgebraPresentation<F> truncated_polynomial_algebra(F field, size_t k) {
  return free_presentation<F>(
      field, {"x"},
      {NCPoly<F>::monomial(field, field.one(), std::vector<size_t>(k, 0))});
}

// The tensor algebra Lambda(r) = Lambda (x) KQ_r for the linear quiver
// 1 -> 2 -> ... -> r. Generators: the x_i of Lambda, then e^1..e^r, then the
// arrows a_1..a_{r-1}. Every Lambda generator commutes with every KQ_r one.
template <class F>
AlgebraPresentation<F> chain_extension(const AlgebraPresentation<F>& base, size_t r) {
  const F& field = base.field;
  AlgebraPresentation<F> alg(field);
  size_t nx = base.num_generators();
  alg.generator_names = base.generator_names;
  for (size_t i = 1; i <= r; ++i) alg.generator_names.push_back("E" + std::to_string(i));
  for (size_t i = 1; i < r; ++i) alg.generator_names.push_back("t" + std::to_string(i));
  auto e = [&](size_t i) { return nx + i; };           // i in [0, r)
  auto arr = [&](size_t i) { return nx + r + i; };     // a_{i+1}: vertex i -> i+1

  alg.relations = base.relations;
  const auto one = field.one();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      NCPoly<F> rel = NCPoly<F>::monomial(field, one, {e(i), e(j)});
      if (i == j) rel.add_term(field, field.neg(one), {e(i)});
      alg.relations.push_back(std::move(rel));
    }
  {
    NCPoly<F> rel;
    for (size_t i = 0; i < r; ++i) rel.add_term(field, one, {e(i)});
    rel.add_term(field, field.neg(one), {});
    alg.relations.push_back(std::move(rel));
  }
  for (size_t i = 0; i + 1 < r; ++i) {
    NCPoly<F> left = NCPoly<F>::monomial(field, one, {e(i + 1), arr(i)});
    left.add_term(field, field.neg(one), {arr(i)});
    alg.relations.push_back(std::move(left));
    NCPoly<F> right = NCPoly<F>::monomial(field, one, {arr(i), e(i)});
    right.add_term(field, field.neg(one), {arr(i)});
    alg.relations.push_back(std::move(right));
  }
  for (size_t x = 0; x < nx; ++x) {
    for (size_t q = nx; q < alg.generator_names.size(); ++q) {
      NCPoly<F> rel = NCPoly<F>::monomial(field, one, {x, q});
      rel.add_term(field, field.neg(one), {q, x});
      alg.relations.push_back(std::move(rel));
    }
  }
  alg.idempotents = IdempotentBlock{r, [&] {
                                      std::vector<size_t> g(r);
                                      for (size_t i = 0; i < r; ++i) g[i] = e(i);
                                      return g;
                                    }()};
  return alg;
}

}  // namespace repcomp
