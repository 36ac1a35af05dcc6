#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "repcomp/field.hpp"

namespace repcomp {

// Sparse commutative polynomial in a fixed number of variables; terms keep
// dense exponent vectors and stay sorted, no zero coefficients.
template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;
  struct Term {
    std::vector<uint32_t> exps;
    Elem coeff;
  };

  Poly(F field, size_t num_vars) : field_(field), num_vars_(num_vars) {}

  static Poly constant(F field, size_t num_vars, const Elem& c) {
    Poly p(field, num_vars);
    p.add_term(std::vector<uint32_t>(num_vars, 0), c);
    return p;
  }
  static Poly variable(F field, size_t num_vars, size_t v) {
    Poly p(field, num_vars);
    std::vector<uint32_t> e(num_vars, 0);
    e[v] = 1;
    p.add_term(e, field.one());
    return p;
  }

  const F& field() const { return field_; }
  size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<uint32_t> exps, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                               [](const Term& t, const std::vector<uint32_t>& e) { return t.exps < e; });
    if (it != terms_.end() && it->exps == exps) {
      it->coeff = field_.add(it->coeff, c);
      if (field_.is_zero(it->coeff)) terms_.erase(it);
    } else {
      terms_.insert(it, Term{std::move(exps), c});
    }
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const Term& t : o.terms_) r.add_term(t.exps, t.coeff);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const Term& t : o.terms_) r.add_term(t.exps, field_.neg(t.coeff));
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r(field_, num_vars_);
    for (const Term& a : terms_)
      for (const Term& b : o.terms_) {
        std::vector<uint32_t> e(num_vars_);
        for (size_t i = 0; i < num_vars_; ++i) e[i] = a.exps[i] + b.exps[i];
        r.add_term(std::move(e), field_.mul(a.coeff, b.coeff));
      }
    return r;
  }
  Poly scaled(const Elem& c) const {
    Poly r(field_, num_vars_);
    for (const Term& t : terms_) r.add_term(t.exps, field_.mul(t.coeff, c));
    return r;
  }

  size_t total_degree() const {
    size_t d = 0;
    for (const Term& t : terms_) {
      size_t td = 0;
      for (uint32_t e : t.exps) td += e;
      d = std::max(d, td);
    }
    return d;
  }

  Elem eval(const std::vector<Elem>& point) const {
    Elem acc = field_.zero();
    for (const Term& t : terms_) {
      Elem m = t.coeff;
      for (size_t v = 0; v < num_vars_; ++v)
        for (uint32_t k = 0; k < t.exps[v]; ++k) m = field_.mul(m, point[v]);
      acc = field_.add(acc, m);
    }
    return acc;
  }

  // truncated power-series evaluation: inputs[v] lists the coefficients of
  // t^0..t^order for variable v; result is the series of the value
  std::vector<Elem> eval_series(const std::vector<std::vector<Elem>>& inputs,
                                size_t order) const {
    auto mul_series = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
      std::vector<Elem> c(order + 1, field_.zero());
      for (size_t i = 0; i <= order; ++i) {
        if (field_.is_zero(a[i])) continue;
        for (size_t j = 0; i + j <= order; ++j)
          c[i + j] = field_.add(c[i + j], field_.mul(a[i], b[j]));
      }
      return c;
    };
    std::vector<Elem> acc(order + 1, field_.zero());
    for (const Term& t : terms_) {
      std::vector<Elem> m(order + 1, field_.zero());
      m[0] = t.coeff;
      for (size_t v = 0; v < num_vars_; ++v)
        for (uint32_t k = 0; k < t.exps[v]; ++k) m = mul_series(m, inputs[v]);
      for (size_t i = 0; i <= order; ++i) acc[i] = field_.add(acc[i], m[i]);
    }
    return acc;
  }

  // substitute variable v by the given polynomial (same variable count)
  Poly substituted(size_t v, const Poly& replacement) const {
    Poly r(field_, num_vars_);
    for (const Term& t : terms_) {
      Poly m(field_, num_vars_);
      std::vector<uint32_t> rest = t.exps;
      uint32_t k = rest[v];
      rest[v] = 0;
      m.add_term(rest, t.coeff);
      for (uint32_t i = 0; i < k; ++i) m = m * replacement;
      r = r + m;
    }
    return r;
  }

  // recentre at the given point: p_new(x) = p(point + x)
  Poly translated(const std::vector<Elem>& point) const {
    Poly r = *this;
    for (size_t v = 0; v < num_vars_; ++v) {
      if (field_.is_zero(point[v])) continue;
      Poly repl = Poly::variable(field_, num_vars_, v);
      repl.add_term(std::vector<uint32_t>(num_vars_, 0), point[v]);
      r = r.substituted(v, repl);
    }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += field_.to_string(terms_[i].coeff);
      for (size_t v = 0; v < num_vars_; ++v)
        for (uint32_t k = 0; k < terms_[i].exps[v]; ++k) s += "*" + names[v];
    }
    return s;
  }

 private:
  F field_;
  size_t num_vars_;
  std::vector<Term> terms_;
};

}  // namespace repcomp
