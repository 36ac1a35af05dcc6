#include <doctest.h>

#include "fixtures.hpp"
#include "repcomp/flags.hpp"
#include "repcomp/grass.hpp"
#include "test_util.hpp"

using namespace repcomp;
using namespace fixtures;

TEST_CASE("submodule enumeration basics") {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto t2 = tau(f, 2);
    CHECK(enumerate_submodules(t2, 0).size() == 1);
    CHECK(enumerate_submodules(t2, 2).size() == 1);
    // the fat point: only the socle
    auto pts = enumerate_submodules(t2, 1);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].pivot_rows == std::vector<size_t>{0});
    CHECK(tangent_dim(t2, pts[0]) == 1);
  }
}

TEST_CASE("point counts for the worked Grassmannians") {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto m12 = direct_sum(tau(f, 1), tau(f, 2));
    CHECK(point_count(m12, 1) == q + 1);

    auto m13 = direct_sum(tau(f, 1), tau(f, 3));
    CHECK(point_count(m13, 2) == q + 1);

    // counts do not depend on the order of the summands
    CHECK(point_count(direct_sum(tau(f, 2), tau(f, 1)), 1) == q + 1);
    CHECK(point_count(direct_sum(tau(f, 3), tau(f, 1)), 2) == q + 1);
  }
}

TEST_CASE("dimension-vector Grassmannian of the two-vertex example") {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto alg = a2(f);
    Matrix<PrimeField> A(f, 2, 2);
    A.at(0, 0) = f.one();
    auto m = a2_rep(f, 2, 2, A);
    auto pts = enumerate_submodules_dimvec(alg, m, {1, 1});
    CHECK(pts.size() == 2 * q + 1);
    // each point really is an invariant subspace of total dimension 2
    for (const auto& u : pts) {
      CHECK(u.basis.cols() == 2);
      CHECK(validate_rep(alg, sub_rep(m, u)).violated_relations.empty());
    }
  }
}

TEST_CASE("dimvec enumeration equals filtered plain enumeration") {
  for (uint64_t q : {2, 3}) {
    PrimeField f(q);
    auto alg = a2(f);
    Matrix<PrimeField> A(f, 2, 2);
    A.at(0, 0) = f.one();
    auto m = a2_rep(f, 2, 2, A);
    for (size_t d1 = 0; d1 <= 2; ++d1)
      for (size_t d2 = 0; d2 <= 2; ++d2) {
        auto fast = enumerate_submodules_dimvec(alg, m, {d1, d2});
        std::vector<Matrix<PrimeField>> expected;
        for (const auto& u : enumerate_submodules(m, d1 + d2))
          if (dimension_vector_of(alg, sub_rep(m, u)) == std::vector<size_t>{d1, d2})
            expected.push_back(u.basis);
        REQUIRE(fast.size() == expected.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].basis == expected[i]);
      }
  }
}

TEST_CASE("tangent dimensions") {
  PrimeField f3(3);
  auto m13 = direct_sum(tau(f3, 1), tau(f3, 3));
  auto pts = enumerate_submodules(m13, 2);
  REQUIRE(pts.size() == 4);
  for (const auto& u : pts) CHECK(tangent_dim(m13, u) == 2);

  auto m12 = direct_sum(tau(f3, 1), tau(f3, 2));
  auto pts1 = enumerate_submodules(m12, 1);
  REQUIRE(pts1.size() == 4);
  size_t dim1 = 0, dim2 = 0;
  for (const auto& u : pts1) {
    size_t t = tangent_dim(m12, u);
    if (t == 1) ++dim1;
    if (t == 2) ++dim2;
  }
  CHECK(dim1 == 3);  // q points
  CHECK(dim2 == 1);  // the embedded point

  CHECK(tangent_dim(m12, enumerate_submodules(m12, 0)[0]) == 0);
  CHECK(tangent_dim(m12, enumerate_submodules(m12, 3)[0]) == 0);
}

TEST_CASE("strata") {
  PrimeField f2(2);
  auto t2 = tau(f2, 2);
  auto pts = enumerate_submodules(t2, 1);
  auto strata = stratify(t2, pts);
  REQUIRE(strata.size() == 1);
  CHECK(strata[0].label == "1");
  CHECK(strata[0].point_indices.size() == 1);

  PrimeField f3(3);
  auto m12 = direct_sum(tau(f3, 1), tau(f3, 2));
  auto pts12 = enumerate_submodules(m12, 1);
  auto strata12 = stratify(m12, pts12);
  REQUIRE(strata12.size() == 1);  // all 1-dim submodules are killed by X
  CHECK(strata12[0].point_indices.size() == 4);

  auto m13 = direct_sum(tau(f2, 1), tau(f2, 3));
  auto pts13 = enumerate_submodules(m13, 2);
  auto strata13 = stratify(m13, pts13);
  REQUIRE(strata13.size() == 2);
  size_t total = 0;
  for (const auto& s : strata13) {
    total += s.point_indices.size();
    if (s.label == "2") CHECK(s.point_indices.size() == 2);  // q points
    if (s.label == "1+1") CHECK(s.point_indices.size() == 1);
    // tangent dimension is constant on each stratum
    size_t t0 = tangent_dim(m13, pts13[s.point_indices[0]]);
    for (size_t i : s.point_indices) CHECK(tangent_dim(m13, pts13[i]) == t0);
  }
  CHECK(total == pts13.size());
}

TEST_CASE("stratum dimension") {
  PrimeField f5(5);
  auto t2 = tau(f5, 2);
  auto sd0 = stratum_dim(t2, t2);
  REQUIRE(sd0.embedding == Verdict3::yes);
  CHECK(sd0.dim == 0);

  auto sd1 = stratum_dim(tau(f5, 1), t2);
  REQUIRE(sd1.embedding == Verdict3::yes);
  CHECK(sd1.dim == 0);

  auto m13 = direct_sum(tau(f5, 1), tau(f5, 3));
  auto sd2 = stratum_dim(t2, m13);
  REQUIRE(sd2.embedding == Verdict3::yes);
  CHECK(hom_dim(t2, m13) == 3);
  CHECK(sd2.dim == 1);

  // no embedding of tau3 into tau2 + tau1
  auto m12 = direct_sum(tau(f5, 1), tau(f5, 2));
  CHECK(find_embedding(tau(f5, 3), m12).verdict == Verdict3::no);
}

TEST_CASE("stratum component certificates") {
  PrimeField f2(2);
  auto alg = kx4(f2);
  auto t2 = tau(f2, 2);

  auto full = stratum_is_component(alg, t2, t2, Matrix<PrimeField>::identity(f2, 2));
  CHECK(full.certified);

  // S1 embedded as the first summand of S1 + S2
  auto m12 = direct_sum(tau(f2, 1), tau(f2, 2));
  Matrix<PrimeField> e1(f2, 3, 1);
  e1.at(0, 0) = f2.one();
  auto cert = stratum_is_component(alg, tau(f2, 1), m12, e1);
  CHECK(cert.certified);

  // S1 embedded in the socle of S2: the composition to the quotient is zero
  Matrix<PrimeField> socle(f2, 2, 1);
  socle.at(0, 0) = f2.one();
  auto bad = stratum_is_component(alg, tau(f2, 1), t2, socle);
  CHECK(!bad.certified);
}

TEST_CASE("grass sum certificates") {
  PrimeField f3(3);
  auto t1 = tau(f3, 1);
  auto t2 = tau(f3, 2);
  PairModule<PrimeField> U{t1, t1, Matrix<PrimeField>::identity(f3, 1)};
  PairModule<PrimeField> V{zero_representation(f3, 1, 0), t2, Matrix<PrimeField>(f3, 2, 0)};
  CHECK(grass_sum_is_component(U, V).certified);

  // trivially empty ambient
  PairModule<PrimeField> E{zero_representation(f3, 1, 0), zero_representation(f3, 1, 0),
                           Matrix<PrimeField>(f3, 0, 0)};
  CHECK(grass_sum_is_component(E, E).certified);
}

TEST_CASE("bar_ext is bounded by hom into the quotient") {
  PrimeField f3(3);
  std::vector<Representation<PrimeField>> modules = {tau(f3, 2),
                                                     direct_sum(tau(f3, 1), tau(f3, 2))};
  for (const auto& m : modules)
    for (const auto& n : modules)
      for (size_t dm = 0; dm <= m.dim; ++dm)
        for (size_t dn = 0; dn <= n.dim; ++dn)
          for (const auto& u : enumerate_submodules(m, dm))
            for (const auto& v : enumerate_submodules(n, dn)) {
              PairModule<PrimeField> A{sub_rep(m, u), m, u.basis};
              PairModule<PrimeField> B{sub_rep(n, v), n, v.basis};
              size_t bound = v.basis.cols() == n.dim
                                 ? 0
                                 : hom_dim(A.sub, quotient_module(n, v.basis).rep);
              CHECK(bar_ext_dim(A, B) <= bound);
            }
}

TEST_CASE("flags") {
  PrimeField f2(2);
  auto t2 = tau(f2, 2);

  // r = 1 reduces to plain enumeration
  auto single = enumerate_flags(t2, {1});
  CHECK(single.size() == enumerate_submodules(t2, 1).size());

  // full flag on a 1-dim module
  auto t1 = tau(f2, 1);
  auto fl1 = enumerate_flags(t1, {0, 1});
  REQUIRE(fl1.size() == 1);
  CHECK(flag_tangent_dim(t1, fl1[0]) == 0);

  // socle c whole over tau2
  auto fl2 = enumerate_flags(t2, {1, 2});
  REQUIRE(fl2.size() == 1);
  CHECK(flag_tangent_dim(t2, fl2[0]) == 1);

  CHECK_THROWS_AS(enumerate_flags(t2, {2, 1}), std::invalid_argument);
}

TEST_CASE("flag counts match nested Grassmannian counts") {
  PrimeField f2(2);
  auto m = direct_sum(tau(f2, 1), tau(f2, 2));
  auto flags = enumerate_flags(m, {1, 2});
  size_t expect = 0;
  for (const auto& u2 : enumerate_submodules(m, 2))
    expect += enumerate_submodules(sub_rep(m, u2), 1).size();
  CHECK(flags.size() == expect);
  // nesting is honored
  for (const auto& fp : flags) {
    ColEchelon<PrimeField> big{fp.subs[1].basis, fp.subs[1].pivot_rows};
    for (size_t j = 0; j < fp.subs[0].basis.cols(); ++j)
      CHECK(reduce_against_echelon(big, fp.subs[0].basis.col(j)).has_value());
  }
}

TEST_CASE("enumeration budget is enforced") {
  PrimeField f5(5);
  auto m = direct_sum(direct_sum(tau(f5, 3), tau(f5, 3)), tau(f5, 2));
  CHECK_THROWS_AS(enumerate_submodules(m, 4, 100), BudgetExceeded);
}

TEST_CASE("threaded enumeration is identical to sequential") {
  PrimeField f3(3);
  auto m = direct_sum(tau(f3, 1), tau(f3, 3));
  auto seq = enumerate_submodules(m, 2, 1000000, 1);
  auto par = enumerate_submodules(m, 2, 1000000, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) CHECK(seq[i].basis == par[i].basis);
}
