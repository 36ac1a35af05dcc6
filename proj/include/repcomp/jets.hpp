#pragma once

#include <map>
#include <thread>

#include "repcomp/budget.hpp"
#include "repcomp/cpoly.hpp"
#include "repcomp/grass.hpp"

namespace repcomp {

// Affine local model: polynomial equations vanishing at the base point,
// stored re-centred (the base point sits at the origin of the variables),
// together with the degree-1 part G and the degree-2 part H. Columns of H
// are indexed by unordered pairs p <= q in lexicographic order.
template <class F>
struct JetModel {
  size_t num_vars = 0;
  std::vector<Poly<F>> equations;
  std::vector<typename F::Elem> base_point;  // original coordinates, for reporting
  Matrix<F> jacobian;                        // num_eqs x num_vars
  Matrix<F> quadratic;                       // num_eqs x (num_vars+1 choose 2)

  const F& field() const { return jacobian.field(); }
};

inline size_t pair_index(size_t p, size_t q, size_t n) {
  // (p,q), p <= q, lex ordered: (0,0),(0,1),...,(0,n-1),(1,1),...
  return p * n - p * (p - 1) / 2 + (q - p);
}

namespace detail {

template <class F>
JetModel<F> finalize_model(const F& f, size_t num_vars, std::vector<Poly<F>> eqs,
                           std::vector<typename F::Elem> base) {
  JetModel<F> model;
  model.num_vars = num_vars;
  model.base_point = std::move(base);
  Matrix<F> G(f, eqs.size(), num_vars);
  Matrix<F> H(f, eqs.size(), num_vars * (num_vars + 1) / 2);
  for (size_t i = 0; i < eqs.size(); ++i) {
    for (const auto& term : eqs[i].terms()) {
      size_t td = 0;
      std::vector<size_t> support;
      for (size_t v = 0; v < num_vars; ++v) {
        td += term.exps[v];
        for (uint32_t k = 0; k < term.exps[v]; ++k) support.push_back(v);
      }
      if (td == 0) throw std::invalid_argument("jet model equations must vanish at the base point");
      if (td == 1) G.at(i, support[0]) = f.add(G.at(i, support[0]), term.coeff);
      if (td == 2) {
        size_t col = pair_index(support[0], support[1], num_vars);
        H.at(i, col) = f.add(H.at(i, col), term.coeff);
      }
    }
  }
  model.equations = std::move(eqs);
  model.jacobian = std::move(G);
  model.quadratic = std::move(H);
  return model;
}

}  // namespace detail

// model from explicit equations and a base point (equations get re-centred)
template <class F>
JetModel<F> make_model(const F& f, size_t num_vars, const std::vector<Poly<F>>& equations,
                       const std::vector<typename F::Elem>& base_point) {
  std::vector<Poly<F>> centred;
  for (const auto& e : equations) {
    if (!f.is_zero(e.eval(base_point)))
      throw std::invalid_argument("base point does not satisfy the equations");
    Poly<F> c = e.translated(base_point);
    if (!c.is_zero()) centred.push_back(std::move(c));
  }
  return detail::finalize_model(f, num_vars, std::move(centred), base_point);
}

// local model of the representation scheme at rho: variables are the N d^2
// matrix-entry offsets, equations the entries of every relation evaluated at
// rho + Xi
template <class F>
JetModel<F> model_from_rep(const AlgebraPresentation<F>& alg, const Representation<F>& rho) {
  const F& f = alg.field;
  size_t d = rho.dim, n = alg.num_generators();
  size_t num_vars = n * d * d;
  using PolyMat = std::vector<Poly<F>>;  // d x d, row-major
  std::vector<PolyMat> gens;
  for (size_t g = 0; g < n; ++g) {
    PolyMat m;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Poly<F> p = Poly<F>::variable(f, num_vars, g * d * d + i * d + j);
        p.add_term(std::vector<uint32_t>(num_vars, 0), rho.mats[g].at(i, j));
        m.push_back(std::move(p));
      }
    gens.push_back(std::move(m));
  }
  auto mat_mul = [&](const PolyMat& a, const PolyMat& b) {
    PolyMat c(d * d, Poly<F>(f, num_vars));
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < d; ++j)
          c[i * d + j] = c[i * d + j] + a[i * d + k] * b[k * d + j];
    return c;
  };
  std::vector<Poly<F>> eqs;
  for (const auto& rel : alg.relations) {
    PolyMat acc(d * d, Poly<F>(f, num_vars));
    for (const auto& term : rel.terms()) {
      PolyMat prod(d * d, Poly<F>(f, num_vars));
      for (size_t i = 0; i < d; ++i) prod[i * d + i] = Poly<F>::constant(f, num_vars, f.one());
      for (size_t g : term.word) prod = mat_mul(prod, gens[g]);
      for (size_t e = 0; e < d * d; ++e) acc[e] = acc[e] + prod[e].scaled(term.coeff);
    }
    for (auto& e : acc)
      if (!e.is_zero()) eqs.push_back(std::move(e));
  }
  return detail::finalize_model(f, num_vars, std::move(eqs),
                                std::vector<typename F::Elem>(num_vars, f.zero()));
}

// local model of the Grassmannian at an enumerated point, on the closed
// chart through its echelon basis: chart matrices keep the pivot rows pinned
// to the identity, the (m-d) d free entries are the variables, and the
// equations are the entries of C(f) tau_g f for the explicit cokernel C(f)
template <class F>
JetModel<F> model_from_grass_chart(const Representation<F>& tau, const Submodule<F>& u) {
  const F& f = tau.field();
  size_t m = tau.dim, d = u.basis.cols();
  std::vector<bool> is_pivot(m, false);
  for (size_t r : u.pivot_rows) is_pivot[r] = true;
  std::vector<size_t> free_rows;
  for (size_t r = 0; r < m; ++r)
    if (!is_pivot[r]) free_rows.push_back(r);
  size_t num_vars = free_rows.size() * d;

  // f as an m x d matrix of polynomials
  std::vector<Poly<F>> fmat(m * d, Poly<F>(f, num_vars));
  for (size_t k = 0; k < d; ++k) fmat[u.pivot_rows[k] * d + k] = Poly<F>::constant(f, num_vars, f.one());
  for (size_t fr = 0; fr < free_rows.size(); ++fr)
    for (size_t c = 0; c < d; ++c) {
      Poly<F> p = Poly<F>::variable(f, num_vars, fr * d + c);
      p.add_term(std::vector<uint32_t>(num_vars, 0), u.basis.at(free_rows[fr], c));
      fmat[free_rows[fr] * d + c] = std::move(p);
    }

  // cokernel rows: C[k, pivot_rows[t]] = -f[free_rows[k], t], C[k, free_rows[k]] = 1
  std::vector<Poly<F>> eqs;
  for (size_t g = 0; g < tau.mats.size(); ++g) {
    for (size_t k = 0; k < free_rows.size(); ++k)
      for (size_t c = 0; c < d; ++c) {
        // entry (k, c) of C(f) tau_g f
        Poly<F> acc(f, num_vars);
        for (size_t col = 0; col < m; ++col) {
          Poly<F> crow(f, num_vars);
          if (col == free_rows[k]) {
            crow = Poly<F>::constant(f, num_vars, f.one());
          } else if (is_pivot[col]) {
            size_t t = std::lower_bound(u.pivot_rows.begin(), u.pivot_rows.end(), col) -
                       u.pivot_rows.begin();
            crow = fmat[free_rows[k] * d + t].scaled(f.neg(f.one()));
          } else {
            continue;
          }
          Poly<F> tf(f, num_vars);
          for (size_t j = 0; j < m; ++j)
            if (!f.is_zero(tau.mats[g].at(col, j)))
              tf = tf + fmat[j * d + c].scaled(tau.mats[g].at(col, j));
          acc = acc + crow * tf;
        }
        if (!acc.is_zero()) eqs.push_back(std::move(acc));
      }
  }
  return detail::finalize_model(f, num_vars, std::move(eqs),
                                std::vector<typename F::Elem>(num_vars, f.zero()));
}

template <class F>
size_t tangent_dim_model(const JetModel<F>& model) {
  return model.num_vars - rank(model.jacobian);
}

namespace detail {

template <class F>
std::vector<typename F::Elem> apply_matrix(const Matrix<F>& m,
                                           const std::vector<typename F::Elem>& v) {
  const F& f = m.field();
  std::vector<typename F::Elem> out(m.rows(), f.zero());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
  return out;
}

// H applied to the symmetrised pair products of xi
template <class F>
std::vector<typename F::Elem> quadratic_at(const JetModel<F>& model,
                                           const std::vector<typename F::Elem>& xi) {
  const F& f = model.field();
  size_t n = model.num_vars;
  std::vector<typename F::Elem> pairs(n * (n + 1) / 2, f.zero());
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p; q < n; ++q) pairs[pair_index(p, q, n)] = f.mul(xi[p], xi[q]);
  return apply_matrix(model.quadratic, pairs);
}

}  // namespace detail

template <class F>
bool is_tangent(const JetModel<F>& model, const std::vector<typename F::Elem>& xi) {
  const F& f = model.field();
  for (const auto& e : detail::apply_matrix(model.jacobian, xi))
    if (!f.is_zero(e)) return false;
  return true;
}

// membership in the image of the second jet space: the inhomogeneous system
// G eta = -H(xi xi) must be solvable
template <class F>
bool t2_member(const JetModel<F>& model, const std::vector<typename F::Elem>& xi) {
  if (!is_tangent(model, xi)) throw std::invalid_argument("t2_member: xi is not a tangent vector");
  const F& f = model.field();
  auto rhs = detail::quadratic_at(model, xi);
  for (auto& e : rhs) e = f.neg(e);
  return solve_affine(model.jacobian, rhs).has_value();
}

enum class LiftMember { yes, no, unknown };

template <class F>
struct LiftVerdict {
  LiftMember member = LiftMember::unknown;
  size_t depth_reached = 1;
  // witness jet: correction vectors eta_1 = xi, eta_2, ..., eta_r
  std::optional<std::vector<std::vector<typename F::Elem>>> witness;
  uint64_t nodes = 0;
};

namespace detail {

template <class F>
class LiftSearch {
 public:
  LiftSearch(const JetModel<F>& model, size_t depth, uint64_t budget)
      : model_(model), f_(model.field()), depth_(depth), budget_(budget) {
    cokernel_rows_ = kernel_basis(model.jacobian.transpose());
    Echelon<F> e = rref(model.jacobian);
    kernel_ = kernel_basis_of(e, model.num_vars);
  }

  LiftVerdict<F> run(const std::vector<typename F::Elem>& xi) {
    LiftVerdict<F> verdict;
    chosen_.clear();
    chosen_.push_back(xi);
    nodes_ = 0;
    depth_reached_ = 1;
    bool exceeded = false;
    bool found = false;
    try {
      found = extend(2);
    } catch (const BudgetExceeded&) {
      exceeded = true;
    }
    verdict.nodes = nodes_;
    verdict.depth_reached = depth_reached_;
    if (found) {
      verdict.member = LiftMember::yes;
      verdict.witness = chosen_;
      verify_witness();
      verdict.depth_reached = depth_;
    } else {
      verdict.member = exceeded ? LiftMember::unknown : LiftMember::no;
    }
    return verdict;
  }

 private:
  // residual: coefficient of t^s of every equation at the chosen prefix
  std::vector<typename F::Elem> residual(size_t s) const {
    std::vector<std::vector<typename F::Elem>> series(
        model_.num_vars, std::vector<typename F::Elem>(s + 1, f_.zero()));
    for (size_t j = 0; j < chosen_.size(); ++j)
      for (size_t v = 0; v < model_.num_vars; ++v) series[v][j + 1] = chosen_[j][v];
    std::vector<typename F::Elem> out;
    out.reserve(model_.equations.size());
    for (const auto& e : model_.equations) out.push_back(e.eval_series(series, s)[s]);
    return out;
  }

  // matrix of the linear action of eta_{s-1} on the order-s residual: only
  // the quadratic part contributes, paired against xi
  Matrix<F> cross_matrix() const {
    const auto& xi = chosen_[0];
    size_t n = model_.num_vars;
    Matrix<F> L(f_, model_.equations.size(), n);
    for (size_t i = 0; i < model_.quadratic.rows(); ++i)
      for (size_t p = 0; p < n; ++p)
        for (size_t q = p; q < n; ++q) {
          const auto& h = model_.quadratic.at(i, pair_index(p, q, n));
          if (f_.is_zero(h)) continue;
          L.at(i, q) = f_.add(L.at(i, q), f_.mul(h, xi[p]));
          L.at(i, p) = f_.add(L.at(i, p), f_.mul(h, xi[q]));
        }
    return L;
  }

  void bump() {
    if (++nodes_ > budget_) throw BudgetExceeded("lift search budget", double(budget_));
  }

  // choose eta_s .. eta_depth; chosen_ holds eta_1 .. eta_{s-1}
  bool extend(size_t s) {
    bump();
    auto b = residual(s);
    for (auto& e : b) e = f_.neg(e);
    if (s == depth_) {
      auto sol = cached_solve(b);
      if (!sol) return false;
      chosen_.push_back(sol->particular);
      depth_reached_ = std::max(depth_reached_, s);
      return true;
    }
    if (s + 1 == depth_) {
      // joint system: G eta = b and the order-(s+1) residual stays solvable;
      // that residual is affine-linear in eta with matrix cross_matrix()
      chosen_.push_back(std::vector<typename F::Elem>(model_.num_vars, f_.zero()));
      auto b_next0 = residual(s + 1);
      chosen_.pop_back();
      Matrix<F> L = cross_matrix();
      size_t extra = cokernel_rows_.size();
      Matrix<F> sys(f_, model_.equations.size() + extra, model_.num_vars);
      sys.set_block(0, 0, model_.jacobian);
      std::vector<typename F::Elem> rhs = b;
      for (size_t k = 0; k < extra; ++k) {
        std::vector<typename F::Elem> yl(model_.num_vars, f_.zero());
        typename F::Elem yb = f_.zero();
        for (size_t i = 0; i < model_.equations.size(); ++i) {
          const auto& y = cokernel_rows_[k][i];
          if (f_.is_zero(y)) continue;
          for (size_t v = 0; v < model_.num_vars; ++v)
            yl[v] = f_.add(yl[v], f_.mul(y, L.at(i, v)));
          yb = f_.add(yb, f_.mul(y, b_next0[i]));
        }
        for (size_t v = 0; v < model_.num_vars; ++v) sys.at(model_.equations.size() + k, v) = yl[v];
        rhs.push_back(f_.neg(yb));
      }
      auto sol = solve_affine(sys, rhs);
      if (!sol) return false;
      chosen_.push_back(sol->particular);
      depth_reached_ = std::max(depth_reached_, s);
      bool ok = extend(s + 1);
      if (!ok) chosen_.pop_back();
      return ok;  // by construction the last level must succeed
    }
    auto sol = cached_solve(b);
    if (!sol) return false;
    depth_reached_ = std::max(depth_reached_, s);
    // sweep the affine solution set: particular + kernel combinations
    static_assert(F::is_prime_field, "lift search enumerates over prime fields");
    uint64_t q = f_.modulus();
    size_t k = kernel_.size();
    std::vector<uint64_t> digits(k, 0);
    while (true) {
      bump();
      std::vector<typename F::Elem> eta = sol->particular;
      for (size_t i = 0; i < k; ++i) {
        if (!digits[i]) continue;
        for (size_t v = 0; v < model_.num_vars; ++v)
          eta[v] = f_.add(eta[v], f_.mul(digits[i], kernel_[i][v]));
      }
      chosen_.push_back(std::move(eta));
      if (extend(s + 1)) return true;
      chosen_.pop_back();
      size_t pos = 0;
      while (pos < k && digits[pos] == q - 1) digits[pos++] = 0;
      if (pos == k) break;
      ++digits[pos];
    }
    return false;
  }

  const std::optional<AffineSolution<F>>& cached_solve(const std::vector<typename F::Elem>& b) {
    auto it = solve_cache_.find(b);
    if (it == solve_cache_.end())
      it = solve_cache_.emplace(b, solve_affine(model_.jacobian, b)).first;
    return it->second;
  }

  void verify_witness() const {
    std::vector<std::vector<typename F::Elem>> series(
        model_.num_vars, std::vector<typename F::Elem>(depth_ + 1, f_.zero()));
    for (size_t j = 0; j < chosen_.size(); ++j)
      for (size_t v = 0; v < model_.num_vars; ++v) series[v][j + 1] = chosen_[j][v];
    for (const auto& e : model_.equations)
      for (const auto& c : e.eval_series(series, depth_))
        if (!f_.is_zero(c)) throw std::logic_error("lift witness fails exact substitution");
  }

  const JetModel<F>& model_;
  const F& f_;
  size_t depth_;
  uint64_t budget_;
  std::vector<std::vector<typename F::Elem>> chosen_;
  std::vector<std::vector<typename F::Elem>> kernel_;
  std::vector<std::vector<typename F::Elem>> cokernel_rows_;
  std::map<std::vector<typename F::Elem>, std::optional<AffineSolution<F>>> solve_cache_;
  uint64_t nodes_ = 0;
  size_t depth_reached_ = 1;
};

}  // namespace detail

// Does xi lift to a D_r-point? Depth-first search over the affine solution
// sets of the order-by-order systems G eta_s = b_s(eta_1..eta_{s-1}), with
// the last two orders folded into one joint linear solve (the final residual
// is affine-linear in the second-to-last correction).
template <class F>
LiftVerdict<F> lift_member(const JetModel<F>& model, const std::vector<typename F::Elem>& xi,
                           size_t r, uint64_t budget = 1000000) {
  static_assert(F::is_prime_field, "lift_member enumerates over prime fields");
  if (r < 2) throw std::invalid_argument("lift_member: depth must be at least 2");
  if (!is_tangent(model, xi)) throw std::invalid_argument("lift_member: xi is not tangent");
  detail::LiftSearch<F> search(model, r, budget);
  return search.run(xi);
}

template <class F>
struct TbarReport {
  size_t tangent_nullity = 0;     // dim ker G
  uint64_t tangent_count = 0;     // q^nullity
  uint64_t lifting_count = 0;     // how many tangent vectors lift to depth r
  uint64_t unknown_count = 0;     // budget-exhausted searches
  std::optional<size_t> dim_proxy;  // e with lifting_count = q^e, when exact
  bool cone_closed = true;        // lifting set closed under scalar multiples
  size_t depth = 0;
};

// Exhaustively classify ker G(F_q) by lift_member at depth r.
template <class F>
TbarReport<F> tbar_dim_estimate(const JetModel<F>& model, size_t r, uint64_t budget = 1000000,
                                size_t num_threads = 1) {
  static_assert(F::is_prime_field, "tbar_dim_estimate enumerates over prime fields");
  const F& f = model.field();
  uint64_t q = f.modulus();
  auto kernel = kernel_basis(model.jacobian);
  size_t k = kernel.size();
  TbarReport<F> report;
  report.tangent_nullity = k;
  report.depth = r;
  double total = 1;
  for (size_t i = 0; i < k; ++i) total *= double(q);
  if (total > double(budget))
    throw BudgetExceeded("tangent space enumeration budget", total);
  report.tangent_count = uint64_t(total);

  // enumerate kernel points by digit vectors; index i <-> digits base q
  std::vector<uint8_t> lifts(report.tangent_count, 0);  // 0 no, 1 yes, 2 unknown
  auto point_of = [&](uint64_t index) {
    std::vector<typename F::Elem> xi(model.num_vars, f.zero());
    uint64_t rest = index;
    for (size_t i = 0; i < k; ++i) {
      uint64_t digit = rest % q;
      rest /= q;
      if (digit)
        for (size_t v = 0; v < model.num_vars; ++v)
          xi[v] = f.add(xi[v], f.mul(digit, kernel[i][v]));
    }
    return xi;
  };
  auto work = [&](uint64_t lo, uint64_t hi) {
    detail::LiftSearch<F> search(model, r, budget);
    for (uint64_t idx = lo; idx < hi; ++idx) {
      auto v = search.run(point_of(idx));
      lifts[idx] = v.member == LiftMember::yes ? 1 : (v.member == LiftMember::unknown ? 2 : 0);
    }
  };
  if (num_threads <= 1) {
    work(0, report.tangent_count);
  } else {
    std::vector<std::thread> threads;
    uint64_t chunk = (report.tangent_count + num_threads - 1) / num_threads;
    for (size_t t = 0; t < num_threads; ++t)
      threads.emplace_back(work, t * chunk,
                           std::min<uint64_t>(report.tangent_count, (t + 1) * chunk));
    for (auto& th : threads) th.join();
  }

  for (uint8_t v : lifts) {
    if (v == 1) ++report.lifting_count;
    if (v == 2) ++report.unknown_count;
  }
  // exact power-of-q check
  uint64_t c = report.lifting_count;
  if (c >= 1) {
    size_t e = 0;
    while (c % q == 0) {
      c /= q;
      ++e;
    }
    if (c == 1) report.dim_proxy = e;
  }
  // cone property: scaling a digit vector scales the point
  for (uint64_t idx = 0; idx < report.tangent_count && report.cone_closed; ++idx) {
    if (lifts[idx] != 1) continue;
    for (uint64_t c2 = 2; c2 < q; ++c2) {
      // index of c2 * point: scale each digit
      uint64_t rest = idx, scaled = 0, place = 1;
      for (size_t i = 0; i < k; ++i) {
        uint64_t digit = rest % q;
        rest /= q;
        scaled += ((digit * c2) % q) * place;
        place *= q;
      }
      if (lifts[scaled] != 1) report.cone_closed = false;
    }
  }
  return report;
}

// Repeatedly eliminate variables that occur in some equation only through a
// single unit-coefficient linear term: substituting the solved expression
// presents the same ring on fewer generators.
template <class F>
struct SimplifiedModel {
  JetModel<F> model;
  std::vector<size_t> kept_vars;  // original indices of the surviving variables
};

template <class F>
SimplifiedModel<F> eliminate_linear(const JetModel<F>& model) {
  const F& f = model.field();
  std::vector<Poly<F>> eqs = model.equations;
  size_t n = model.num_vars;
  std::vector<size_t> kept(n);
  for (size_t i = 0; i < n; ++i) kept[i] = i;

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ei = 0; ei < eqs.size() && !changed; ++ei) {
      // find a variable occurring exactly once in this equation, linearly
      for (size_t v = 0; v < n && !changed; ++v) {
        typename F::Elem coeff = f.zero();
        bool only_linear = true;
        bool appears = false;
        for (const auto& term : eqs[ei].terms()) {
          if (term.exps[v] == 0) continue;
          appears = true;
          size_t td = 0;
          for (size_t w = 0; w < n; ++w) td += term.exps[w];
          if (term.exps[v] == 1 && td == 1)
            coeff = term.coeff;
          else
            only_linear = false;
        }
        if (!appears || !only_linear || f.is_zero(coeff)) continue;
        // v = -(rest)/coeff
        Poly<F> rest(f, n);
        for (const auto& term : eqs[ei].terms())
          if (term.exps[v] == 0) rest.add_term(term.exps, term.coeff);
        Poly<F> repl = rest.scaled(f.neg(f.inv(coeff)));
        std::vector<Poly<F>> next;
        for (size_t j = 0; j < eqs.size(); ++j) {
          if (j == ei) continue;
          Poly<F> s = eqs[j].substituted(v, repl);
          if (!s.is_zero()) next.push_back(std::move(s));
        }
        eqs = std::move(next);
        // drop the variable: renumber exponents
        std::vector<Poly<F>> renumbered;
        for (const auto& e : eqs) {
          Poly<F> p(f, n - 1);
          for (const auto& term : e.terms()) {
            std::vector<uint32_t> ex;
            ex.reserve(n - 1);
            for (size_t w = 0; w < n; ++w)
              if (w != v) ex.push_back(term.exps[w]);
            p.add_term(std::move(ex), term.coeff);
          }
          renumbered.push_back(std::move(p));
        }
        eqs = std::move(renumbered);
        kept.erase(kept.begin() + v);
        --n;
        changed = true;
      }
    }
  }
  SimplifiedModel<F> out{detail::finalize_model(f, n, std::move(eqs),
                                                std::vector<typename F::Elem>(n, f.zero())),
                         kept};
  return out;
}

// Built-in scenario: the algebra K[X,Y]/(X^3 - Y^2) and the two-dimensional
// representation x -> E_12, y -> 0. The order-2 and order-3 jet images in
// the tangent space are classified exhaustively and compared point-for-point
// with their closed forms: at order 2 the quadric
//   { x_21 = 0, y_22 = -y_11, y_11^2 + y_12 y_21 = 0 },
// at order 3 the union of its locus with (y_12, y_21) != (0,0) and of
//   { y = 0, x_22 = -x_11 }.
struct Rep2JetReport {
  uint64_t tangent_count = 0;
  uint64_t t2_count = 0, t2_expected = 0;
  bool t2_matches = false;
  uint64_t t3_count = 0, t3_expected = 0;
  bool t3_matches = false;
  bool chain_ok = true;  // order-3 members all lie in the order-2 set
};

inline Rep2JetReport rep2_jet_sets_check(uint64_t q = 3, uint64_t budget = 10000000) {
  PrimeField f(q);
  NCPoly<PrimeField> rel = NCPoly<PrimeField>::monomial(f, f.one(), {0, 0, 0});
  rel.add_term(f, f.neg(f.one()), {1, 1});
  auto alg = free_presentation<PrimeField>(f, {"x", "y"}, {rel});
  Representation<PrimeField> rho;
  rho.dim = 2;
  Matrix<PrimeField> mx(f, 2, 2);
  mx.at(0, 1) = f.one();
  rho.mats.push_back(mx);
  rho.mats.push_back(Matrix<PrimeField>(f, 2, 2));
  auto model = model_from_rep(alg, rho);

  // variables: x11 x12 x21 x22 y11 y12 y21 y22
  auto in_t2 = [&](const std::vector<uint64_t>& v) {
    if (v[2] != 0) return false;
    if (v[7] != f.neg(v[4])) return false;
    return f.add(f.mul(v[4], v[4]), f.mul(v[5], v[6])) == 0;
  };
  auto in_t3 = [&](const std::vector<uint64_t>& v) {
    if (!in_t2(v)) return false;
    if (v[5] != 0 || v[6] != 0) return true;
    return v[4] == 0 && v[5] == 0 && v[6] == 0 && v[7] == 0 && v[3] == f.neg(v[0]);
  };

  auto kernel = kernel_basis(model.jacobian);
  Rep2JetReport report;
  double total = 1;
  for (size_t i = 0; i < kernel.size(); ++i) total *= double(q);
  if (total > double(budget)) throw BudgetExceeded("rep2 jet scenario budget", total);
  report.tangent_count = uint64_t(total);

  detail::LiftSearch<PrimeField> search2(model, 2, budget);
  detail::LiftSearch<PrimeField> search3(model, 3, budget);
  std::vector<uint64_t> digits(kernel.size(), 0);
  report.t2_matches = report.t3_matches = true;
  while (true) {
    std::vector<uint64_t> xi(model.num_vars, 0);
    for (size_t i = 0; i < kernel.size(); ++i)
      if (digits[i])
        for (size_t v = 0; v < model.num_vars; ++v)
          xi[v] = f.add(xi[v], f.mul(digits[i], kernel[i][v]));
    bool m2 = search2.run(xi).member == LiftMember::yes;
    bool m3 = search3.run(xi).member == LiftMember::yes;
    if (m3 && !m2) report.chain_ok = false;
    if (m2) ++report.t2_count;
    if (in_t2(xi)) ++report.t2_expected;
    if (m2 != in_t2(xi)) report.t2_matches = false;
    if (m3) ++report.t3_count;
    if (in_t3(xi)) ++report.t3_expected;
    if (m3 != in_t3(xi)) report.t3_matches = false;
    size_t pos = 0;
    while (pos < kernel.size() && digits[pos] == q - 1) digits[pos++] = 0;
    if (pos == kernel.size()) break;
    ++digits[pos];
  }
  return report;
}

}  // namespace repcomp
