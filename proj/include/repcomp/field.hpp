#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace repcomp {

// The two coefficient fields: Q with arbitrary-precision arithmetic, and
// F_p for a prime modulus p. All higher layers are templated on the field
// type; a field object is carried around by value (it is empty for Q and
// holds the modulus for F_p). Elements are always kept in canonical form:
// lowest terms over Q, least nonnegative residue over F_p.

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool is_prime_field = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1 / a);
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return Elem(a / b);
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem from_string(const std::string& s) const {
    Elem v;
    if (s.empty() || v.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
  }

  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using Elem = uint64_t;
  static constexpr bool is_prime_field = true;

  explicit PrimeField(uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    if (p >= (uint64_t(1) << 31)) throw std::invalid_argument("modulus too large");
  }

  uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid on (a, p)
    int64_t t = 0, nt = 1, r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(a);
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1 % p_; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem from_string(const std::string& s) const {
    // accepts any integer literal, reduced mod p; "a/b" is allowed when b is a unit
    auto slash = s.find('/');
    if (slash != std::string::npos)
      return div(from_string(s.substr(0, slash)), from_string(s.substr(slash + 1)));
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0)
      throw std::invalid_argument("bad integer literal: '" + s + "'");
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<Elem>(r.get_ui());
  }

  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint64_t p_;
};

}  // namespace repcomp
