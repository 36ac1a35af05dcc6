#pragma once

#include <json.hpp>

#include "repcomp/cpoly.hpp"
#include "repcomp/grass.hpp"
#include "repcomp/jets.hpp"

namespace repcomp {

using ordered_json = nlohmann::ordered_json;

// {"type":"rational"} or {"type":"prime","p":5}
struct FieldTag {
  bool rational = true;
  uint64_t p = 0;
};

inline FieldTag field_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("field: expected {\"type\": ...}");
  std::string type = j.at("type").get<std::string>();
  if (type == "rational") return FieldTag{true, 0};
  if (type == "prime") {
    if (!j.contains("p")) throw std::invalid_argument("prime field needs \"p\"");
    return FieldTag{false, j.at("p").get<uint64_t>()};
  }
  throw std::invalid_argument("unknown field type '" + type + "'");
}

inline ordered_json field_to_json(const FieldTag& tag) {
  if (tag.rational) return ordered_json{{"type", "rational"}};
  return ordered_json{{"type", "prime"}, {"p", tag.p}};
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  size_t rows = j.size();
  size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix<F> m(f, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (size_t c = 0; c < cols; ++c) {
      const auto& cell = j.at(r).at(c);
      if (cell.is_string())
        m.at(r, c) = f.from_string(cell.template get<std::string>());
      else if (cell.is_number_integer())
        m.at(r, c) = f.from_int(cell.template get<long>());
      else
        throw std::invalid_argument("matrix entries must be strings or integers");
    }
  }
  return m;
}

template <class F>
ordered_json matrix_to_json(const Matrix<F>& m) {
  const F& f = m.field();
  ordered_json rows = ordered_json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(f.to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

template <class F>
NCPoly<F> ncpoly_from_json(const F& f, const ordered_json& j,
                           const std::function<size_t(const ordered_json&)>& gen_index) {
  NCPoly<F> p;
  if (!j.is_array()) throw std::invalid_argument("relation: expected an array of terms");
  for (const auto& term : j) {
    if (!term.contains("c") || !term.contains("w"))
      throw std::invalid_argument("relation term needs \"c\" and \"w\"");
    typename F::Elem coeff = term.at("c").is_string()
                                 ? f.from_string(term.at("c").template get<std::string>())
                                 : f.from_int(term.at("c").template get<long>());
    std::vector<size_t> word;
    for (const auto& g : term.at("w")) word.push_back(gen_index(g));
    p.add_term(f, coeff, std::move(word));
  }
  return p;
}

}  // namespace detail

// Algebra file: either a free presentation
//   {"field":..., "generators":[...], "relations":[[{"c":"-1","w":[0,0,0]},...],...],
//    "idempotents":{"count":n,"gens":[...]}?}
// or a quiver
//   {"field":..., "quiver":{"vertices":[...], "arrows":[{"name","src","tgt"},...],
//    "relations":[[{"c":"1","w":["b","a"]}],...]}}
// Quiver relation words list arrow/vertex names in matrix-product order.
template <class F>
AlgebraPresentation<F> algebra_from_json(F f, const ordered_json& j) {
  if (j.contains("quiver")) {
    const auto& qj = j.at("quiver");
    std::vector<std::string> vertices;
    for (const auto& v : qj.at("vertices")) vertices.push_back(v.get<std::string>());
    auto vertex_index = [&](const std::string& name) -> size_t {
      for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
      throw std::invalid_argument("unknown vertex '" + name + "'");
    };
    std::vector<Arrow> arrows;
    if (qj.contains("arrows"))
      for (const auto& a : qj.at("arrows"))
        arrows.push_back(Arrow{a.at("name").get<std::string>(),
                               vertex_index(a.at("src").get<std::string>()),
                               vertex_index(a.at("tgt").get<std::string>())});
    auto gen_index = [&](const ordered_json& g) -> size_t {
      std::string name = g.get<std::string>();
      for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return vertices.size() + i;
      for (size_t i = 0; i < vertices.size(); ++i)
        if ("e_" + vertices[i] == name || vertices[i] == name) return i;
      throw std::invalid_argument("unknown arrow or vertex '" + name + "' in relation");
    };
    std::vector<NCPoly<F>> rels;
    if (qj.contains("relations"))
      for (const auto& r : qj.at("relations"))
        rels.push_back(detail::ncpoly_from_json<F>(f, r, gen_index));
    return compile_quiver<F>(f, vertices, arrows, rels);
  }

  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
  auto gen_index = [&](const ordered_json& g) -> size_t {
    if (g.is_number_integer()) {
      size_t idx = g.get<size_t>();
      if (idx >= names.size()) throw std::invalid_argument("generator index out of range");
      return idx;
    }
    std::string name = g.get<std::string>();
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "'");
  };
  std::vector<NCPoly<F>> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations"))
      rels.push_back(detail::ncpoly_from_json<F>(f, r, gen_index));
  auto alg = free_presentation<F>(f, names, rels);
  if (j.contains("idempotents")) {
    IdempotentBlock block;
    block.count = j.at("idempotents").at("count").get<size_t>();
    for (const auto& g : j.at("idempotents").at("gens")) block.gens.push_back(gen_index(g));
    if (block.gens.size() != block.count)
      throw std::invalid_argument("idempotent block: count does not match gens");
    alg.idempotents = block;
  }
  return alg;
}

// Representation file: {"dim":d, "dimvec":[...]?, "mats":{"<gen>":[["1","0"],...]}}.
// For quiver algebras a block form is accepted: arrows may be given as
// (d_tgt x d_src) blocks and vertex idempotents may be omitted, provided
// "dimvec" is present; everything is canonicalised to full matrices.
template <class F>
Representation<F> rep_from_json(const F& f, const AlgebraPresentation<F>& alg,
                                const ordered_json& j) {
  Representation<F> rep;
  rep.dim = j.at("dim").get<size_t>();
  if (j.contains("dimvec")) {
    std::vector<size_t> dv;
    for (const auto& d : j.at("dimvec")) dv.push_back(d.get<size_t>());
    rep.dim_vector = dv;
  }
  const auto& mats = j.at("mats");
  rep.mats.reserve(alg.num_generators());
  for (size_t g = 0; g < alg.num_generators(); ++g) {
    const std::string& name = alg.generator_names[g];
    bool is_vertex = alg.quiver && g < alg.quiver->num_vertices;
    std::string alt = is_vertex ? name.substr(2) : name;  // vertex "e_1" may be keyed "1"
    const ordered_json* cell = nullptr;
    if (mats.contains(name)) cell = &mats.at(name);
    else if (is_vertex && mats.contains(alt)) cell = &mats.at(alt);
    if (!cell) {
      if (is_vertex && rep.dim_vector) {
        rep.mats.push_back(standard_idempotent(f, *rep.dim_vector, g));
        continue;
      }
      throw std::invalid_argument("missing matrix for generator '" + name + "'");
    }
    Matrix<F> m = matrix_from_json(f, *cell);
    if (m.rows() == rep.dim && m.cols() == rep.dim) {
      rep.mats.push_back(std::move(m));
      continue;
    }
    // block form for an arrow of a quiver algebra
    if (alg.quiver && g >= alg.quiver->num_vertices && rep.dim_vector) {
      const Arrow& a = alg.quiver->arrows[g - alg.quiver->num_vertices];
      const auto& dv = *rep.dim_vector;
      if (m.rows() == dv[a.tgt] && m.cols() == dv[a.src]) {
        size_t row_off = 0, col_off = 0;
        for (size_t i = 0; i < a.tgt; ++i) row_off += dv[i];
        for (size_t i = 0; i < a.src; ++i) col_off += dv[i];
        Matrix<F> full(f, rep.dim, rep.dim);
        full.set_block(row_off, col_off, m);
        rep.mats.push_back(std::move(full));
        continue;
      }
    }
    throw std::invalid_argument("matrix for generator '" + name + "' has the wrong shape");
  }
  return rep;
}

template <class F>
ordered_json rep_to_json(const AlgebraPresentation<F>& alg, const Representation<F>& rep) {
  ordered_json out;
  out["dim"] = rep.dim;
  if (rep.dim_vector) out["dimvec"] = *rep.dim_vector;
  ordered_json mats;
  for (size_t g = 0; g < rep.mats.size(); ++g)
    mats[alg.generator_names[g]] = matrix_to_json(rep.mats[g]);
  out["mats"] = std::move(mats);
  return out;
}

// Submodule file: {"basis":[["1","0"],...]} with the basis in the columns.
template <class F>
Submodule<F> submodule_from_json(const F& f, const Representation<F>& amb,
                                 const ordered_json& j) {
  Matrix<F> raw = matrix_from_json(f, j.at("basis"));
  if (raw.rows() != amb.dim) throw std::invalid_argument("submodule basis has wrong height");
  auto ce = col_echelon(raw);
  if (ce.basis.cols() != raw.cols())
    throw std::invalid_argument("submodule basis columns are dependent");
  return Submodule<F>{ce.basis, ce.pivot_rows};
}

template <class F>
ordered_json submodule_to_json(const Submodule<F>& u) {
  return ordered_json{{"basis", matrix_to_json(u.basis)}};
}

// Derivation tuple file: {"mats":{"<gen>": e x d matrix, ...}}
template <class F>
std::vector<Matrix<F>> derivation_from_json(const F& f, const AlgebraPresentation<F>& alg,
                                            size_t d, size_t e, const ordered_json& j) {
  std::vector<Matrix<F>> xi;
  const auto& mats = j.at("mats");
  for (size_t g = 0; g < alg.num_generators(); ++g) {
    const std::string& name = alg.generator_names[g];
    if (!mats.contains(name)) {
      xi.push_back(Matrix<F>(f, e, d));
      continue;
    }
    Matrix<F> m = matrix_from_json(f, mats.at(name));
    if (m.rows() != e || m.cols() != d)
      throw std::invalid_argument("derivation matrix for '" + name + "' has the wrong shape");
    xi.push_back(std::move(m));
  }
  return xi;
}

// Jet model file:
//   {"field":..., "vars":3 | "variables":["s","t","u"],
//    "equations":[[{"c":"1","e":[1,1,0]},{"c":"-1","e":[0,0,3]}],...],
//    "point":["0","0","0"]?}
template <class F>
JetModel<F> jet_model_from_json(const F& f, const ordered_json& j) {
  size_t num_vars;
  if (j.contains("vars"))
    num_vars = j.at("vars").get<size_t>();
  else if (j.contains("variables"))
    num_vars = j.at("variables").size();
  else
    throw std::invalid_argument("jet model needs \"vars\" or \"variables\"");
  std::vector<Poly<F>> eqs;
  for (const auto& ej : j.at("equations")) {
    Poly<F> p(f, num_vars);
    for (const auto& term : ej) {
      typename F::Elem coeff = term.at("c").is_string()
                                   ? f.from_string(term.at("c").template get<std::string>())
                                   : f.from_int(term.at("c").template get<long>());
      std::vector<uint32_t> exps;
      for (const auto& e : term.at("e")) exps.push_back(e.get<uint32_t>());
      if (exps.size() != num_vars)
        throw std::invalid_argument("equation term exponent list has the wrong length");
      p.add_term(std::move(exps), coeff);
    }
    eqs.push_back(std::move(p));
  }
  std::vector<typename F::Elem> base(num_vars, f.zero());
  if (j.contains("point")) {
    const auto& pj = j.at("point");
    if (pj.size() != num_vars) throw std::invalid_argument("base point has the wrong length");
    for (size_t v = 0; v < num_vars; ++v)
      base[v] = pj.at(v).is_string() ? f.from_string(pj.at(v).template get<std::string>())
                                     : f.from_int(pj.at(v).template get<long>());
  }
  return make_model(f, num_vars, eqs, base);
}

template <class F>
std::vector<typename F::Elem> scalars_from_csl(const F& f, const std::string& csl) {
  std::vector<typename F::Elem> out;
  size_t pos = 0;
  while (pos <= csl.size()) {
    size_t comma = csl.find(',', pos);
    if (comma == std::string::npos) comma = csl.size();
    out.push_back(f.from_string(csl.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace repcomp
