#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "repcomp/field.hpp"

namespace repcomp {

// Noncommutative polynomial: formal sum of coeff * word, the word being a
// sequence of generator indices in matrix-product order. The empty word is
// the unit. Terms are kept sorted by word with no duplicates or zeros.
template <class F>
class NCPoly {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Elem coeff;
    std::vector<size_t> word;
  };

  NCPoly() = default;

  static NCPoly monomial(const F& f, const Elem& c, std::vector<size_t> word) {
    NCPoly p;
    p.add_term(f, c, std::move(word));
    return p;
  }

  void add_term(const F& f, const Elem& c, std::vector<size_t> word) {
    if (f.is_zero(c)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const Term& t, const std::vector<size_t>& w) { return t.word < w; });
    if (it != terms_.end() && it->word == word) {
      it->coeff = f.add(it->coeff, c);
      if (f.is_zero(it->coeff)) terms_.erase(it);
    } else {
      terms_.insert(it, Term{c, std::move(word)});
    }
  }

  void add(const F& f, const NCPoly& o) {
    for (const Term& t : o.terms_) add_term(f, t.coeff, t.word);
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  size_t max_generator() const {
    size_t m = 0;
    for (const Term& t : terms_)
      for (size_t g : t.word) m = std::max(m, g + 1);
    return m;
  }

  std::string to_string(const F& f, const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += f.to_string(terms_[i].coeff);
      for (size_t g : terms_[i].word) s += "*" + names[g];
    }
    return s;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace repcomp
