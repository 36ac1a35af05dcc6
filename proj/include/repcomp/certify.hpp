#pragma once

#include <string>

#include "repcomp/hom.hpp"

namespace repcomp {

// Certificate for "this closure is an irreducible component". The criteria
// are one-sided: certified verdicts list only obstruction dimensions that
// are exactly zero, not_certified never means "not a component".
struct ComponentCertificate {
  bool certified = false;
  std::vector<std::pair<std::string, size_t>> obstructions;
  std::string semicontinuity_note;
};

inline const char* kSemicontinuityNote =
    "obstruction dimensions are upper semi-continuous; vanishing at the witness "
    "point certifies generic vanishing on the components through it";

template <class F>
ComponentCertificate orbit_closure_is_component(const AlgebraPresentation<F>& alg,
                                                const Representation<F>& rho) {
  ComponentCertificate cert;
  size_t e = ext_dim(alg, rho, rho);
  cert.obstructions.emplace_back("ext(rho,rho)", e);
  cert.certified = (e == 0);
  cert.semicontinuity_note = "Ext^1 = 0 makes the orbit map a submersion onto a dense subset";
  return cert;
}

template <class F>
ComponentCertificate sum_is_component(const AlgebraPresentation<F>& alg,
                                      const Representation<F>& rho,
                                      const Representation<F>& sigma) {
  ComponentCertificate cert;
  size_t e1 = ext_dim(alg, rho, sigma);
  size_t e2 = ext_dim(alg, sigma, rho);
  cert.obstructions.emplace_back("ext(rho,sigma)", e1);
  cert.obstructions.emplace_back("ext(sigma,rho)", e2);
  cert.certified = (e1 == 0 && e2 == 0);
  cert.semicontinuity_note = kSemicontinuityNote;
  return cert;
}

// u with rho in X_{d,u}: the number of independent homomorphisms to the
// fixed test module M
template <class F>
size_t xdu_membership(const Representation<F>& rho, const Representation<F>& M) {
  return hom_dim(rho, M);
}

template <class F>
ComponentCertificate xdu_sum_is_component(const AlgebraPresentation<F>& alg,
                                          const Representation<F>& rho,
                                          const Representation<F>& sigma,
                                          const Representation<F>& M) {
  ComponentCertificate cert;
  size_t e1 = e_constrained_dim(alg, rho, sigma, M);
  size_t e2 = e_constrained_dim(alg, sigma, rho, M);
  cert.obstructions.emplace_back("e_{u+v}(rho,sigma)", e1);
  cert.obstructions.emplace_back("e_{u+v}(sigma,rho)", e2);
  cert.certified = (e1 == 0 && e2 == 0);
  cert.semicontinuity_note = kSemicontinuityNote;
  return cert;
}

}  // namespace repcomp
