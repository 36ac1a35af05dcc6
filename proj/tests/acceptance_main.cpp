// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout — every comparison below is equality, no tolerances.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include <json.hpp>

#include "repcomp/certify.hpp"
#include "repcomp/decompose.hpp"
#include "repcomp/detsum.hpp"
#include "repcomp/flags.hpp"
#include "repcomp/jets.hpp"

using namespace repcomp;

namespace {

int failures = 0;
std::vector<std::string> notes;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void()> body;
};

Representation<PrimeField> tau(const PrimeField& f, size_t i) {
  Representation<PrimeField> rep;
  rep.dim = i;
  Matrix<PrimeField> j(f, i, i);
  for (size_t k = 0; k + 1 < i; ++k) j.at(k, k + 1) = f.one();
  rep.mats.push_back(std::move(j));
  return rep;
}

AlgebraPresentation<PrimeField> kx4(const PrimeField& f) {
  return truncated_polynomial_algebra(f, 4);
}

AlgebraPresentation<PrimeField> a2(const PrimeField& f) {
  return compile_quiver<PrimeField>(f, {"1", "2"}, {Arrow{"a", 0, 1}}, {});
}

Representation<PrimeField> a2_rep(const PrimeField& f, size_t d1, size_t d2,
                                  const Matrix<PrimeField>& A) {
  Representation<PrimeField> rep;
  rep.dim = d1 + d2;
  rep.dim_vector = std::vector<size_t>{d1, d2};
  rep.mats.push_back(standard_idempotent(f, *rep.dim_vector, 0));
  rep.mats.push_back(standard_idempotent(f, *rep.dim_vector, 1));
  Matrix<PrimeField> arrow(f, rep.dim, rep.dim);
  arrow.set_block(d1, 0, A);
  rep.mats.push_back(std::move(arrow));
  return rep;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(REPCOMP_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "";
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

std::string data(const std::string& name) { return std::string(REPCOMP_DATA) + "/" + name; }

// ---------------------------------------------------------------------------

void criterion1_fat_point() {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto t2 = tau(f, 2);
    auto points = enumerate_submodules(t2, 1);
    check(points.size() == 1, "fat point: count over F" + std::to_string(q));
    check(tangent_dim(t2, points[0]) == 1, "fat point: tangent dim");
    auto model = model_from_grass_chart(t2, points[0]);
    auto probe = tbar_dim_estimate(model, 2);
    check(probe.lifting_count == 1, "fat point: lifting count");
    check(probe.dim_proxy == size_t(0), "fat point: dim proxy");
    check(probe.lifting_count < probe.tangent_count, "fat point: nonreduced verdict");
  }
  // the CLI route named in the criterion
  int code = 0;
  auto out = run_cli("grass count --algebra " + data("kx4.json") + " --module " +
                         data("tau2.json") + " --dim 1 --q 5",
                     &code);
  check(code == 0 && nlohmann::json::parse(out).at("count") == 1, "fat point: CLI count");
}

void criterion2_embedded_point() {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto m = direct_sum(tau(f, 1), tau(f, 2));
    auto points = enumerate_submodules(m, 1);
    check(points.size() == q + 1, "embedded point: count over F" + std::to_string(q));
    size_t dim1 = 0, dim2 = 0;
    for (const auto& u : points) {
      size_t td = tangent_dim(m, u);
      if (td == 1) ++dim1;
      else if (td == 2) ++dim2;
      auto probe = tbar_dim_estimate(model_from_grass_chart(m, u), 2);
      bool nonreduced = probe.lifting_count < probe.tangent_count;
      check(probe.unknown_count == 0, "embedded point: probe resolved");
      check(nonreduced == (td == 2), "embedded point: nonreduced exactly at the dim-2 point");
    }
    check(dim1 == q && dim2 == 1, "embedded point: tangent profile over F" + std::to_string(q));
  }
  // homological table and the certificate
  PrimeField f3(3);
  auto t1 = tau(f3, 1);
  auto t2 = tau(f3, 2);
  PairModule<PrimeField> U{t1, t1, Matrix<PrimeField>::identity(f3, 1)};
  PairModule<PrimeField> V{zero_representation(f3, 1, 0), t2, Matrix<PrimeField>(f3, 2, 0)};
  check(hom_dim(U.sub, quotient_module(V.amb, V.map).rep) == 1, "table: Hom(U, N/V)");
  check(hom_dim(V.sub, quotient_module(U.amb, U.map).rep) == 0, "table: Hom(V, M/U)");
  check(hom_dim(U.amb, V.amb) == 1, "table: Hom(M, N)");
  check(hom_dim(V.amb, U.amb) == 1, "table: Hom(N, M)");
  check(pair_hom_dim(U, V) == 0, "table: Hom_{L(2)}(U., V.)");
  check(pair_hom_dim(V, U) == 1, "table: Hom_{L(2)}(V., U.)");
  check(bar_ext_dim(U, V) == 0 && bar_ext_dim(V, U) == 0, "table: both bar_ext vanish");
  check(grass_sum_is_component(U, V).certified, "embedded point: sum certificate");
}

void criterion3_generically_nonreduced() {
  for (uint64_t q : {2, 3}) {
    PrimeField f(q);
    auto m = direct_sum(tau(f, 1), tau(f, 3));
    auto points = enumerate_submodules(m, 2);
    check(points.size() == q + 1, "gen-nonreduced: count over F" + std::to_string(q));
    for (const auto& u : points) {
      check(tangent_dim(m, u) == 2, "gen-nonreduced: tangent dim 2");
      auto probe = tbar_dim_estimate(model_from_grass_chart(m, u), 3);
      check(probe.lifting_count == q, "gen-nonreduced: lifting count q");
      check(probe.dim_proxy == size_t(1), "gen-nonreduced: proxy 1 < 2");
    }
    auto strata = stratify(m, points);
    check(strata.size() == 2, "gen-nonreduced: two strata");
    for (const auto& s : strata) {
      if (s.label == "2")
        check(s.point_indices.size() == q, "gen-nonreduced: S2 stratum has q points");
      else if (s.label == "1+1")
        check(s.point_indices.size() == 1, "gen-nonreduced: split stratum has one point");
      else
        check(false, "gen-nonreduced: unexpected stratum label " + s.label);
    }
  }
}

void criterion4_two_vertex() {
  for (uint64_t q : {2, 3, 5}) {
    PrimeField f(q);
    auto alg = a2(f);
    Matrix<PrimeField> A(f, 2, 2);
    A.at(0, 0) = f.one();
    auto m = a2_rep(f, 2, 2, A);
    auto points = enumerate_submodules_dimvec(alg, m, {1, 1});
    check(points.size() == 2 * q + 1, "two-vertex: count over F" + std::to_string(q));
  }
  PrimeField f2(2);
  auto s1 = a2_rep(f2, 1, 0, Matrix<PrimeField>(f2, 0, 1));
  auto s2 = a2_rep(f2, 0, 1, Matrix<PrimeField>(f2, 1, 0));
  Matrix<PrimeField> one(f2, 1, 1);
  one.at(0, 0) = f2.one();
  auto t = a2_rep(f2, 1, 1, one);
  auto zero_of = [&](const Representation<PrimeField>& amb) {
    return PairModule<PrimeField>{zero_representation(f2, 3, 0), amb,
                                  Matrix<PrimeField>(f2, amb.dim, 0)};
  };
  auto full_of = [&](const Representation<PrimeField>& amb) {
    return PairModule<PrimeField>{amb, amb, Matrix<PrimeField>::identity(f2, amb.dim)};
  };
  // X = (S1 c S1), (S2 c S2), (0 c T); Y = (0 c S1), (0 c S2), (T c T)
  std::vector<PairModule<PrimeField>> X{full_of(s1), full_of(s2), zero_of(t)};
  std::vector<PairModule<PrimeField>> Y{zero_of(s1), zero_of(s2), full_of(t)};
  for (const auto& triple : {X, Y})
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        check(bar_ext_dim(triple[i], triple[j]) == 0, "two-vertex: pairwise bar_ext vanishes");
        check(grass_sum_is_component(triple[i], triple[j]).certified,
              "two-vertex: pairwise certificate");
      }
}

void criterion5_jet_counterexamples() {
  PrimeField f5(5);
  Poly<PrimeField> eq(f5, 3);
  eq.add_term({1, 1, 0}, f5.one());
  eq.add_term({0, 0, 3}, f5.neg(f5.one()));
  auto stu = make_model(f5, 3, {eq}, std::vector<uint64_t>{0, 0, 0});
  for (uint64_t a = 0; a < 5; ++a)
    for (uint64_t b = 0; b < 5; ++b)
      for (uint64_t c = 0; c < 5; ++c) {
        std::vector<uint64_t> xi{a, b, c};
        bool m2 = lift_member(stu, xi, 2).member == LiftMember::yes;
        bool m3 = lift_member(stu, xi, 3).member == LiftMember::yes;
        bool want2 = (a * b) % 5 == 0;
        bool want3 = want2 && (a != 0 || b != 0 || c == 0);
        check(m2 == want2, "stu: order-2 classification");
        check(m3 == want3, "stu: order-3 classification");
      }

  // cusp shadow: only the zero tangent vector lifts to depth 3
  NCPoly<PrimeField> rel = NCPoly<PrimeField>::monomial(f5, f5.one(), {0, 0, 0});
  rel.add_term(f5, f5.neg(f5.one()), {1, 1});
  auto cusp = free_presentation<PrimeField>(f5, {"x", "y"}, {rel});
  auto mc = model_from_rep(cusp, zero_representation(f5, 2, 1));
  for (uint64_t a = 0; a < 5; ++a)
    for (uint64_t b = 0; b < 5; ++b) {
      bool lifts = lift_member(mc, std::vector<uint64_t>{a, b}, 3).member == LiftMember::yes;
      check(lifts == (a == 0 && b == 0), "cusp: only the origin lifts");
    }

  auto rep2 = rep2_jet_sets_check(3);
  check(rep2.t2_matches && rep2.t2_count == 243, "rep2: order-2 set and cardinality");
  check(rep2.t3_matches && rep2.t3_count == 225, "rep2: order-3 set and cardinality");
  check(rep2.chain_ok, "rep2: chain property");

  // the CLI route named in the criterion
  int code = 0;
  auto out = run_cli("jets lift --model " + data("stu.json") + " --xi 0,0,1 --r 3 --q 5", &code);
  check(code == 0 && nlohmann::json::parse(out).at("member") == "false", "stu: CLI lift");
}

void criterion6_det_sum() {
  std::mt19937_64 rng(2024);
  PrimeField f7(7);
  RationalField q;
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<size_t> dpick(1, 5), npick(1, 3);
  for (size_t trial = 0; trial < 500; ++trial) {
    size_t d = dpick(rng), n = npick(rng);
    std::vector<Matrix<PrimeField>> mp;
    std::vector<Matrix<RationalField>> mq;
    Matrix<PrimeField> sp(f7, d, d);
    Matrix<RationalField> sq(q, d, d);
    for (size_t k = 0; k < n; ++k) {
      Matrix<PrimeField> p(f7, d, d);
      Matrix<RationalField> r(q, d, d);
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
          long v = entry(rng);
          p.at(i, j) = f7.from_int(v);
          r.at(i, j) = q.from_int(v);
        }
      sp = sp + p;
      sq = sq + r;
      mp.push_back(std::move(p));
      mq.push_back(std::move(r));
    }
    check(det_sum(mp) == det(sp), "det_sum over F7");
    check(det_sum(mq) == det(sq), "det_sum over Q");
  }
}

void criterion7_voigt_suite() {
  PrimeField f5(5);
  auto algs = std::vector<AlgebraPresentation<PrimeField>>{kx4(f5), a2(f5)};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<size_t> dim(1, 3);

  auto random_rep = [&](const AlgebraPresentation<PrimeField>& alg, size_t which) {
    if (which == 0) {
      size_t d = dim(rng);
      Matrix<PrimeField> n(f5, d, d), g(f5, d, d);
      for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) n.at(i, j) = f5.from_int(entry(rng));
      do {
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j) g.at(i, j) = f5.from_int(entry(rng));
      } while (f5.is_zero(det(g)));
      Representation<PrimeField> rep;
      rep.dim = d;
      rep.mats.push_back(g * n * *inverse(g));
      return rep;
    }
    size_t d1 = dim(rng) - 1, d2 = dim(rng);
    Matrix<PrimeField> A(f5, d2, d1);
    for (size_t i = 0; i < d2; ++i)
      for (size_t j = 0; j < d1; ++j) A.at(i, j) = f5.from_int(entry(rng));
    return a2_rep(f5, d1, d2, A);
  };

  auto random_invertible = [&](size_t d) {
    Matrix<PrimeField> g(f5, d, d);
    do {
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) g.at(i, j) = f5.from_int(entry(rng));
    } while (f5.is_zero(det(g)));
    return g;
  };

  size_t census_checked = 0;
  for (size_t which = 0; which < 2; ++which) {
    const auto& alg = algs[which];
    for (size_t trial = 0; trial < 100; ++trial) {
      auto rho = random_rep(alg, which);
      auto sigma = random_rep(alg, which);
      size_t h = hom_dim(rho, sigma);
      size_t dr = der_dim(alg, rho, sigma);
      size_t de = rho.dim * sigma.dim;
      check(h + dr >= de, "voigt: ext nonnegative");
      size_t ext = ext_dim(alg, rho, sigma);
      check(ext == h + dr - de, "voigt: dimension identity");

      if (rho.dim > 0 && sigma.dim > 0) {
        auto g = random_invertible(rho.dim);
        auto g2 = random_invertible(sigma.dim);
        check(ext_dim(alg, conjugate(g, rho), conjugate(g2, sigma)) == ext,
              "voigt: conjugation invariance");
      }

      // split census by exhaustive enumeration where q^{dim Der} is small
      if (dr <= 7 && rho.dim > 0 && sigma.dim > 0) {
        auto der = der_basis(alg, rho, sigma);
        uint64_t splits = 0, total = 1;
        for (size_t i = 0; i < dr; ++i) total *= 5;
        std::vector<uint64_t> digits(dr, 0);
        while (true) {
          std::vector<Matrix<PrimeField>> xi(alg.num_generators(),
                                             Matrix<PrimeField>(f5, sigma.dim, rho.dim));
          for (size_t i = 0; i < dr; ++i)
            if (digits[i])
              for (size_t g = 0; g < alg.num_generators(); ++g)
                xi[g] = xi[g] + der.basis[i][g].scaled(digits[i]);
          if (is_split(alg, xi, rho, sigma).split) ++splits;
          size_t pos = 0;
          while (pos < dr && digits[pos] == 4) digits[pos++] = 0;
          if (pos == dr) break;
          ++digits[pos];
        }
        uint64_t expect = 1;
        for (size_t i = 0; i < de - h; ++i) expect *= 5;
        check(splits == expect, "voigt: split census");
        ++census_checked;
      }
    }
  }
  check(census_checked > 20, "voigt: census instances actually ran");
}

void criterion8_rep1_points() {
  // <x,y>/(yx, (1+x^2)x, (1+x^2)y): rep^1 over F_5 has 3 points, over F_7 one
  for (auto [q, expect] : std::vector<std::pair<uint64_t, size_t>>{{5, 3}, {7, 1}}) {
    PrimeField f(q);
    NCPoly<PrimeField> r1 = NCPoly<PrimeField>::monomial(f, f.one(), {1, 0});
    NCPoly<PrimeField> r2 = NCPoly<PrimeField>::monomial(f, f.one(), {0});
    r2.add_term(f, f.one(), {0, 0, 0});
    NCPoly<PrimeField> r3 = NCPoly<PrimeField>::monomial(f, f.one(), {1});
    r3.add_term(f, f.one(), {0, 0, 1});
    auto alg = free_presentation<PrimeField>(f, {"x", "y"}, {r1, r2, r3});
    size_t count = 0;
    for (uint64_t x = 0; x < q; ++x)
      for (uint64_t y = 0; y < q; ++y) {
        Representation<PrimeField> rep;
        rep.dim = 1;
        Matrix<PrimeField> mx(f, 1, 1), my(f, 1, 1);
        mx.at(0, 0) = x;
        my.at(0, 0) = y;
        rep.mats = {mx, my};
        if (validate_rep(alg, rep).ok()) ++count;
      }
    check(count == expect, "rep1 points over F" + std::to_string(q));
  }
}

void criterion9_components() {
  PrimeField f5(5);
  // semisimple K x K: every sum certified
  auto kk = compile_quiver<PrimeField>(f5, {"1", "2"}, {}, {});
  auto make_kk = [&](size_t d1, size_t d2) {
    Representation<PrimeField> rep;
    rep.dim = d1 + d2;
    rep.dim_vector = std::vector<size_t>{d1, d2};
    rep.mats.push_back(standard_idempotent(f5, *rep.dim_vector, 0));
    rep.mats.push_back(standard_idempotent(f5, *rep.dim_vector, 1));
    return rep;
  };
  for (size_t a = 0; a <= 2; ++a)
    for (size_t b = 0; b <= 2; ++b)
      for (size_t c = 0; c <= 2; ++c)
        for (size_t d = 0; d <= 2; ++d) {
          if (a + b == 0 || c + d == 0) continue;
          check(sum_is_component(kk, make_kk(a, b), make_kk(c, d)).certified,
                "components: semisimple sums certified");
        }

  // A2: the projective-injective is an orbit component, the wrong order of
  // simples is rejected
  PrimeField f2(2);
  auto a2alg = a2(f2);
  Matrix<PrimeField> one(f2, 1, 1);
  one.at(0, 0) = f2.one();
  auto t = a2_rep(f2, 1, 1, one);
  check(orbit_closure_is_component(a2alg, t).certified, "components: A2 orbit certificate");
  auto src = a2_rep(f2, 1, 0, Matrix<PrimeField>(f2, 0, 1));
  auto snk = a2_rep(f2, 0, 1, Matrix<PrimeField>(f2, 1, 0));
  check(!sum_is_component(a2alg, src, snk).certified, "components: A2 rejects simple pair");
  check(ext_dim(a2alg, src, snk) + ext_dim(a2alg, snk, src) == 1,
        "components: exactly one nonzero Ext direction");

  // Krull-Remak-Schmidt: random sums reassemble up to isomorphism
  auto alg = kx4(f5);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<size_t> dim(1, 3);
  std::uniform_int_distribution<long> entry(-2, 2);
  auto random_nilpotent = [&]() {
    size_t d = dim(rng);
    Matrix<PrimeField> n(f5, d, d), g(f5, d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = i + 1; j < d; ++j) n.at(i, j) = f5.from_int(entry(rng));
    do {
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) g.at(i, j) = f5.from_int(entry(rng));
    } while (f5.is_zero(det(g)));
    Representation<PrimeField> rep;
    rep.dim = d;
    rep.mats.push_back(g * n * *inverse(g));
    return rep;
  };
  for (size_t trial = 0; trial < 100; ++trial) {
    auto sum = direct_sum(random_nilpotent(), random_nilpotent());
    auto report = decompose(sum, trial);
    check(report.complete, "components: decomposition complete");
    Representation<PrimeField> reassembled = zero_representation(f5, 1, 0);
    for (const auto& s : report.summands)
      for (size_t mlt = 0; mlt < s.multiplicity; ++mlt)
        reassembled = direct_sum(reassembled, s.rep);
    check(conjugate(report.witness, sum).mats[0] == reassembled.mats[0],
          "components: witness conjugates onto the summands");
    check(is_isomorphic(reassembled, sum, trial).verdict == Verdict3::yes,
          "components: reassembly isomorphic to the input");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 fat-point Grassmannian", 1.0, criterion1_fat_point},
      {"2 P1 with embedded point", 2.0, criterion2_embedded_point},
      {"3 generically non-reduced Grassmannian", 10.0, criterion3_generically_nonreduced},
      {"4 two-vertex dimension-vector Grassmannian", 5.0, criterion4_two_vertex},
      {"5 jet counterexamples", 30.0, criterion5_jet_counterexamples},
      {"6 det_sum identity", 5.0, criterion6_det_sum},
      {"7 Voigt suite", 60.0, criterion7_voigt_suite},
      {"8 rep1 point count", 1.0, criterion8_rep1_points},
      {"9 component certificates", 30.0, criterion9_components},
  };

  int exit_code = 0;
  for (auto& c : criteria) {
    failures = 0;
    notes.clear();
    auto start = std::chrono::steady_clock::now();
    try {
      c.body();
    } catch (const std::exception& e) {
      ++failures;
      notes.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool timed_out = seconds >= c.limit_seconds;
    bool pass = failures == 0 && !timed_out;
    printf("%s criterion %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", c.name, seconds,
           c.limit_seconds);
    if (!pass) {
      exit_code = 1;
      for (const auto& n : notes) printf("       %s\n", n.c_str());
      if (timed_out) printf("       exceeded the runtime limit\n");
    }
  }
  return exit_code;
}
