// repcomp: exact computations with finite-dimensional representations of
// finitely presented algebras. Subcommands cover validation, Hom/Der/Ext
// dimensions, split tests, isomorphism, decomposition, component
// certificates, submodule/flag enumeration over prime fields, and jet-space
// lifting probes. All arithmetic is exact; scalars print as decimal strings.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "repcomp/certify.hpp"
#include "repcomp/decompose.hpp"
#include "repcomp/detsum.hpp"
#include "repcomp/flags.hpp"
#include "repcomp/json_io.hpp"

using namespace repcomp;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Args {
  std::string command;        // e.g. "hom", "cert sum", "grass enum"
  std::string algebra_path, rep_path, rep2_path, module_path, module2_path;
  std::string sub_path, sub2_path, xi_path, model_path;
  std::vector<std::string> sub_paths;  // for flags
  long dim = -1;
  std::vector<size_t> dimvec;
  uint64_t q = 0;             // 0: take the field from the input files
  size_t r = 4;
  uint64_t seed = 0;
  uint64_t budget = 1000000;
  size_t threads = 1;
  std::string format = "json";
  std::string xi_csl;
  bool certify = false;
  // detsum verify
  size_t trials = 500;
  size_t dmax = 5;
  size_t nmax = 3;
  bool rational = false;
};

int exit_code = 0;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json load_json(const std::string& path) {
  std::string text = read_file(path);
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::invalid_argument(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                ": " + e.what());
  }
}

void emit(const Args& a, const ordered_json& out) {
  if (a.format == "json") {
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (a.format == "table") {
    // one value or one row per line
    std::function<void(const ordered_json&, const std::string&)> walk =
        [&](const ordered_json& j, const std::string& prefix) {
          if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
              walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
          } else if (j.is_array() && !j.empty() && (j.at(0).is_object() || j.at(0).is_array())) {
            for (size_t i = 0; i < j.size(); ++i) walk(j.at(i), prefix + "[" + std::to_string(i) + "]");
          } else {
            std::cout << (prefix.empty() ? "" : prefix + "\t")
                      << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
          }
        };
    walk(out, "");
    return;
  }
  throw std::invalid_argument("unknown format '" + a.format + "'");
}

std::string verdict_name(Verdict3 v) {
  switch (v) {
    case Verdict3::yes: return "yes";
    case Verdict3::no: return "no";
    default: return "unknown";
  }
}

ordered_json certificate_json(const ComponentCertificate& cert) {
  ordered_json obs = ordered_json::array();
  for (const auto& [name, dim] : cert.obstructions)
    obs.push_back(ordered_json{{"name", name}, {"dim", dim}});
  return ordered_json{{"certified", cert.certified},
                      {"obstructions", std::move(obs)},
                      {"semicontinuity_note", cert.semicontinuity_note}};
}

template <class F>
ordered_json derivation_to_json(const AlgebraPresentation<F>& alg,
                                const std::vector<Matrix<F>>& xi) {
  ordered_json mats;
  for (size_t g = 0; g < xi.size(); ++g) mats[alg.generator_names[g]] = matrix_to_json(xi[g]);
  return ordered_json{{"mats", std::move(mats)}};
}

template <class F>
int run(F f, const Args& a) {
  auto load_algebra = [&]() { return algebra_from_json<F>(f, load_json(a.algebra_path)); };
  auto load_rep = [&](const AlgebraPresentation<F>& alg, const std::string& path) {
    auto rep = rep_from_json<F>(f, alg, load_json(path));
    auto v = validate_rep(alg, rep);
    if (!v.ok())
      throw std::invalid_argument(path + ": representation violates relations " +
                                  [&] {
                                    std::string s;
                                    for (size_t i : v.violated_relations)
                                      s += (s.empty() ? "" : ",") + std::to_string(i);
                                    for (const auto& e : v.structural_errors)
                                      s += (s.empty() ? "" : "; ") + e;
                                    return s;
                                  }());
    return rep;
  };

  if (a.command == "validate") {
    auto alg = load_algebra();
    auto rep = rep_from_json<F>(f, alg, load_json(a.rep_path));
    auto v = validate_rep(alg, rep);
    ordered_json out{{"ok", v.ok()}};
    if (!v.ok()) {
      out["violated_relations"] = v.violated_relations;
      ordered_json rels = ordered_json::array();
      for (size_t i : v.violated_relations)
        rels.push_back(alg.relations[i].to_string(f, alg.generator_names));
      out["violated"] = rels;
      out["structural_errors"] = v.structural_errors;
      exit_code = 1;
    }
    emit(a, out);
    return exit_code;
  }

  if (a.command == "hom") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto sigma = load_rep(alg, a.rep2_path);
    auto hom = hom_basis(rho, sigma);
    ordered_json basis = ordered_json::array();
    for (const auto& m : hom.basis) basis.push_back(matrix_to_json(m));
    emit(a, ordered_json{{"dim", hom.dim()}, {"basis", std::move(basis)}});
    return 0;
  }

  if (a.command == "der") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto sigma = load_rep(alg, a.rep2_path);
    auto der = der_basis(alg, rho, sigma);
    ordered_json basis = ordered_json::array();
    for (const auto& xi : der.basis) basis.push_back(derivation_to_json(alg, xi));
    emit(a, ordered_json{{"dim", der.dim()}, {"basis", std::move(basis)}});
    return 0;
  }

  if (a.command == "ext") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto sigma = load_rep(alg, a.rep2_path);
    size_t h = hom_dim(rho, sigma), d = der_dim(alg, rho, sigma);
    emit(a, ordered_json{{"dim", h + d - rho.dim * sigma.dim}, {"hom", h}, {"der", d}});
    return 0;
  }

  if (a.command == "split") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto sigma = load_rep(alg, a.rep2_path);
    auto xi = derivation_from_json<F>(f, alg, rho.dim, sigma.dim, load_json(a.xi_path));
    auto res = is_split(alg, xi, rho, sigma);
    ordered_json out{{"split", res.split}};
    if (res.witness) out["witness"] = matrix_to_json(*res.witness);
    emit(a, out);
    return 0;
  }

  if (a.command == "iso") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto sigma = load_rep(alg, a.rep2_path);
    auto res = is_isomorphic(rho, sigma, a.seed, a.budget);
    ordered_json out{{"isomorphic", verdict_name(res.verdict)}};
    if (res.witness) out["witness"] = matrix_to_json(*res.witness);
    emit(a, out);
    return res.verdict == Verdict3::unknown ? 2 : 0;
  }

  if (a.command == "decompose") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    auto rep = decompose(rho, a.seed, a.budget);
    ordered_json summands = ordered_json::array();
    for (const auto& s : rep.summands)
      summands.push_back(ordered_json{{"dim", s.rep.dim},
                                      {"multiplicity", s.multiplicity},
                                      {"indecomposable_certified", s.certified_indecomposable},
                                      {"rep", rep_to_json(alg, s.rep)}});
    emit(a, ordered_json{{"complete", rep.complete},
                         {"summands", std::move(summands)},
                         {"witness", matrix_to_json(rep.witness)}});
    return rep.complete ? 0 : 2;
  }

  if (a.command == "orbit") {
    auto alg = load_algebra();
    auto rho = load_rep(alg, a.rep_path);
    emit(a, ordered_json{{"end_dim", end_dim(rho)}, {"orbit_dim", orbit_dim(rho)}});
    return 0;
  }

  if (a.command == "cert sum") {
    auto alg = load_algebra();
    auto cert = sum_is_component(alg, load_rep(alg, a.rep_path), load_rep(alg, a.rep2_path));
    emit(a, certificate_json(cert));
    return 0;
  }
  if (a.command == "cert orbit") {
    auto alg = load_algebra();
    auto cert = orbit_closure_is_component(alg, load_rep(alg, a.rep_path));
    emit(a, certificate_json(cert));
    return 0;
  }
  if (a.command == "cert xdu") {
    auto alg = load_algebra();
    auto cert = xdu_sum_is_component(alg, load_rep(alg, a.rep_path),
                                     load_rep(alg, a.rep2_path), load_rep(alg, a.module_path));
    emit(a, certificate_json(cert));
    return 0;
  }

  if (a.command.rfind("grass", 0) == 0 || a.command.rfind("flag", 0) == 0 ||
      a.command.rfind("jets", 0) == 0) {
    if constexpr (!F::is_prime_field) {
      if (a.command != "jets tangent" && a.command != "jets t2")
        throw std::invalid_argument("'" + a.command + "' needs a prime field; pass --q");
    }
  }

  if constexpr (F::is_prime_field) {
    auto enumerate_points = [&](const AlgebraPresentation<F>& alg, const Representation<F>& tau) {
      if (!a.dimvec.empty()) return enumerate_submodules_dimvec(alg, tau, a.dimvec, a.budget, a.threads);
      if (a.dim < 0) throw std::invalid_argument("pass --dim or --dimvec");
      return enumerate_submodules(tau, size_t(a.dim), a.budget, a.threads);
    };

    if (a.command == "grass count") {
      auto alg = load_algebra();
      auto tau = load_rep(alg, a.module_path);
      emit(a, ordered_json{{"count", enumerate_points(alg, tau).size()}});
      return 0;
    }

    if (a.command == "grass enum") {
      auto alg = load_algebra();
      auto tau = load_rep(alg, a.module_path);
      auto points = enumerate_points(alg, tau);
      auto strata = stratify(tau, points, a.seed);
      std::vector<std::string> labels(points.size());
      for (const auto& s : strata)
        for (size_t i : s.point_indices) labels[i] = s.label;
      if (a.format == "csv") {
        std::cout << "point_index,stratum,tangent_dim,nonreduced_flag\n";
        for (size_t i = 0; i < points.size(); ++i) {
          size_t td = tangent_dim(tau, points[i]);
          std::string flag = "0";
          if (td > 0) {
            auto model = model_from_grass_chart(tau, points[i]);
            auto rep = tbar_dim_estimate(model, a.r, a.budget, a.threads);
            flag = rep.unknown_count > 0 ? "unknown"
                                         : (rep.lifting_count < rep.tangent_count ? "1" : "0");
          }
          std::cout << i << "," << labels[i] << "," << td << "," << flag << "\n";
        }
        return 0;
      }
      ordered_json out = ordered_json::array();
      for (size_t i = 0; i < points.size(); ++i)
        out.push_back(ordered_json{{"basis", matrix_to_json(points[i].basis)},
                                   {"iso_label", labels[i]},
                                   {"tangent_dim", tangent_dim(tau, points[i])}});
      emit(a, out);
      return 0;
    }

    if (a.command == "grass tangent") {
      auto alg = load_algebra();
      auto tau = load_rep(alg, a.module_path);
      auto u = submodule_from_json(f, tau, load_json(a.sub_path));
      emit(a, ordered_json{{"tangent_dim", tangent_dim(tau, u)}});
      return 0;
    }

    if (a.command == "grass strata") {
      auto alg = load_algebra();
      auto tau = load_rep(alg, a.module_path);
      auto points = enumerate_points(alg, tau);
      auto strata = stratify(tau, points, a.seed);
      ordered_json out = ordered_json::array();
      bool any_unknown = false;
      for (const auto& s : strata) {
        ordered_json row{{"label", s.label},
                         {"count", s.point_indices.size()},
                         {"representative", rep_to_json(alg, s.representative)}};
        if (s.iso_unknown) {
          row["unresolved"] = true;
          any_unknown = true;
        } else if (a.certify) {
          auto sd = stratum_dim(s.representative, tau, a.seed);
          row["stratum_dim"] =
              sd.embedding == Verdict3::yes ? ordered_json(sd.dim) : ordered_json(nullptr);
          auto emb = find_embedding(s.representative, tau, a.seed);
          if (emb.verdict == Verdict3::yes)
            row["certificate"] =
                certificate_json(stratum_is_component(alg, s.representative, tau, *emb.embedding));
        }
        out.push_back(std::move(row));
      }
      emit(a, out);
      return any_unknown ? 2 : 0;
    }

    if (a.command == "grass cert") {
      auto alg = load_algebra();
      auto m = load_rep(alg, a.module_path);
      auto n = load_rep(alg, a.module2_path);
      auto u = submodule_from_json(f, m, load_json(a.sub_path));
      auto v = submodule_from_json(f, n, load_json(a.sub2_path));
      PairModule<F> A{sub_rep(m, u), m, u.basis};
      PairModule<F> B{sub_rep(n, v), n, v.basis};
      emit(a, certificate_json(grass_sum_is_component(A, B)));
      return 0;
    }

    if (a.command == "flag enum" || a.command == "flag tangent") {
      auto alg = load_algebra();
      auto tau = load_rep(alg, a.module_path);
      if (a.command == "flag tangent") {
        FlagPoint<F> fp;
        for (const auto& p : a.sub_paths)
          fp.subs.push_back(submodule_from_json(f, tau, load_json(p)));
        emit(a, ordered_json{{"tangent_dim", flag_tangent_dim(tau, fp)}});
        return 0;
      }
      if (a.dimvec.empty()) throw std::invalid_argument("flag enum needs --dimvec");
      auto flags = enumerate_flags(tau, a.dimvec, a.budget);
      ordered_json out = ordered_json::array();
      for (const auto& fp : flags) {
        ordered_json bases = ordered_json::array();
        for (const auto& u : fp.subs) bases.push_back(matrix_to_json(u.basis));
        out.push_back(
            ordered_json{{"bases", std::move(bases)}, {"tangent_dim", flag_tangent_dim(tau, fp)}});
      }
      emit(a, out);
      return 0;
    }
  }

  if (a.command.rfind("jets", 0) == 0) {
    JetModel<F> model(
        [&] {
          if (!a.model_path.empty()) return jet_model_from_json(f, load_json(a.model_path));
          auto alg = load_algebra();
          if (!a.sub_path.empty()) {
            auto tau = load_rep(alg, a.module_path);
            auto u = submodule_from_json(f, tau, load_json(a.sub_path));
            return model_from_grass_chart(tau, u);
          }
          auto rho = load_rep(alg, a.rep_path);
          return model_from_rep(alg, rho);
        }());

    if (a.command == "jets tangent") {
      emit(a, ordered_json{{"tangent_dim", tangent_dim_model(model)},
                           {"num_vars", model.num_vars},
                           {"num_equations", model.equations.size()}});
      return 0;
    }
    if (a.command == "jets t2") {
      auto xi = scalars_from_csl(f, a.xi_csl);
      if (xi.size() != model.num_vars) throw std::invalid_argument("--xi has the wrong length");
      emit(a, ordered_json{{"member", t2_member(model, xi)}});
      return 0;
    }
    if constexpr (F::is_prime_field) {
      if (a.command == "jets lift") {
        auto xi = scalars_from_csl(f, a.xi_csl);
        if (xi.size() != model.num_vars) throw std::invalid_argument("--xi has the wrong length");
        auto v = lift_member(model, xi, a.r, a.budget);
        ordered_json out{{"member", v.member == LiftMember::yes
                                        ? "true"
                                        : (v.member == LiftMember::no ? "false" : "unknown")},
                         {"depth", a.r},
                         {"nodes", v.nodes}};
        if (v.witness) {
          ordered_json w = ordered_json::array();
          for (const auto& layer : *v.witness) {
            ordered_json l = ordered_json::array();
            for (const auto& e : layer) l.push_back(f.to_string(e));
            w.push_back(std::move(l));
          }
          out["witness"] = std::move(w);
        }
        emit(a, out);
        return v.member == LiftMember::unknown ? 2 : 0;
      }
      if (a.command == "jets probe") {
        auto report = tbar_dim_estimate(model, a.r, a.budget, a.threads);
        std::string verdict = report.unknown_count > 0
                                  ? "unknown"
                                  : (report.lifting_count < report.tangent_count
                                         ? "nonreduced"
                                         : "reduced_evidence");
        ordered_json point = ordered_json::array();
        for (const auto& e : model.base_point) point.push_back(f.to_string(e));
        emit(a, ordered_json{{"point", std::move(point)},
                             {"tangent_dim", report.tangent_nullity},
                             {"depth", report.depth},
                             {"lifting_count", report.lifting_count},
                             {"dim_proxy", report.dim_proxy ? ordered_json(*report.dim_proxy)
                                                            : ordered_json(nullptr)},
                             {"cone_closed", report.cone_closed},
                             {"verdict", verdict}});
        return verdict == "unknown" ? 2 : 0;
      }
    }
    throw std::invalid_argument("'" + a.command + "' needs a prime field; pass --q");
  }

  if (a.command == "detsum verify") {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<size_t> dpick(1, a.dmax), npick(1, a.nmax);
    size_t failures = 0;
    for (size_t t = 0; t < a.trials; ++t) {
      size_t d = dpick(rng), n = npick(rng);
      std::vector<Matrix<F>> ms;
      Matrix<F> sum(f, d, d);
      for (size_t k = 0; k < n; ++k) {
        Matrix<F> m(f, d, d);
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j) m.at(i, j) = f.from_int(entry(rng));
        sum = sum + m;
        ms.push_back(std::move(m));
      }
      if (!f.eq(det_sum(ms), det(sum))) ++failures;
    }
    emit(a, ordered_json{{"trials", a.trials}, {"failures", failures}});
    return failures == 0 ? 0 : 1;
  }

  throw std::invalid_argument("unhandled command '" + a.command + "'");
}

uint64_t env_budget(uint64_t fallback) {
  if (const char* s = std::getenv("REPCOMP_BUDGET")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  a.budget = env_budget(1000000);

  CLI::App app{"exact representation, Grassmannian and jet computations"};
  app.require_subcommand(1);

  std::string dimvec_csl;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", a.algebra_path, "algebra file (JSON)");
    cmd->add_option("--rep", a.rep_path, "representation file");
    cmd->add_option("--rep2", a.rep2_path, "second representation file");
    cmd->add_option("--module", a.module_path, "fixed module / ambient representation file");
    cmd->add_option("--module2", a.module2_path, "second ambient representation file");
    cmd->add_option("--sub", a.sub_paths, "submodule file (repeatable for flags)");
    cmd->add_option("--sub2", a.sub2_path, "second submodule file");
    cmd->add_option("--xi", a.xi_csl, "comma-separated tangent vector, or derivation file for split");
    cmd->add_option("--xi-file", a.xi_path, "derivation tuple file");
    cmd->add_option("--model", a.model_path, "jet model file");
    cmd->add_option("--dim", a.dim, "submodule dimension");
    cmd->add_option("--dimvec", dimvec_csl, "comma-separated dimension vector");
    cmd->add_option("--q", a.q, "prime modulus; re-bases all inputs over F_q");
    cmd->add_option("--r", a.r, "jet depth (default 4)");
    cmd->add_option("--seed", a.seed, "random seed (default 0)");
    cmd->add_option("--budget", a.budget, "search/enumeration budget in nodes");
    cmd->add_option("--threads", a.threads, "worker threads for enumeration and probes");
    cmd->add_option("--format", a.format, "json|table|csv");
    cmd->add_flag("--certify", a.certify, "attach certificates to strata output");
    cmd->add_option("--trials", a.trials, "detsum verify: number of trials");
    cmd->add_option("--dmax", a.dmax, "detsum verify: max matrix size");
    cmd->add_option("--nmax", a.nmax, "detsum verify: max number of summands");
    cmd->add_flag("--rational", a.rational, "detsum verify: work over the rationals");
  };

  std::vector<std::pair<std::string, CLI::App*>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  const std::string& command) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    add_common(cmd);
    leaves.emplace_back(command, cmd);
    return cmd;
  };

  leaf(&app, "validate", "check a representation against the relations", "validate");
  leaf(&app, "hom", "basis of Hom(rep, rep2)", "hom");
  leaf(&app, "der", "basis of Der(rep, rep2)", "der");
  leaf(&app, "ext", "dim Ext^1(rep, rep2)", "ext");
  leaf(&app, "split", "does the derivation class split?", "split");
  leaf(&app, "iso", "are two representations isomorphic?", "iso");
  leaf(&app, "decompose", "Krull-Remak-Schmidt decomposition", "decompose");
  leaf(&app, "orbit", "endomorphism and orbit dimensions", "orbit");
  CLI::App* cert = app.add_subcommand("cert", "irreducible-component certificates");
  cert->require_subcommand(1);
  leaf(cert, "sum", "direct sum of components", "cert sum");
  leaf(cert, "orbit", "orbit closure", "cert orbit");
  leaf(cert, "xdu", "direct sum inside the hom-constrained scheme", "cert xdu");
  CLI::App* grass = app.add_subcommand("grass", "quiver Grassmannians over F_q");
  grass->require_subcommand(1);
  leaf(grass, "enum", "enumerate submodules", "grass enum");
  leaf(grass, "count", "count submodules", "grass count");
  leaf(grass, "tangent", "tangent dimension at a point", "grass tangent");
  leaf(grass, "strata", "iso-class strata", "grass strata");
  leaf(grass, "cert", "direct-sum component certificate for two points", "grass cert");
  CLI::App* flag = app.add_subcommand("flag", "flag varieties over F_q");
  flag->require_subcommand(1);
  leaf(flag, "enum", "enumerate flags", "flag enum");
  leaf(flag, "tangent", "tangent dimension at a flag", "flag tangent");
  CLI::App* jets = app.add_subcommand("jets", "jet-space computations on local models");
  jets->require_subcommand(1);
  leaf(jets, "tangent", "tangent dimension of a model", "jets tangent");
  leaf(jets, "t2", "order-2 jet membership", "jets t2");
  leaf(jets, "lift", "depth-r lifting test", "jets lift");
  leaf(jets, "probe", "exhaustive lifting classification", "jets probe");
  CLI::App* detsum = app.add_subcommand("detsum", "determinant-of-sums identity");
  detsum->require_subcommand(1);
  leaf(detsum, "verify", "random trials of the partition expansion", "detsum verify");

  CLI11_PARSE(app, argc, argv);

  for (const auto& [command, cmd] : leaves)
    if (cmd->parsed()) a.command = command;
  if (!dimvec_csl.empty()) {
    size_t pos = 0;
    while (pos <= dimvec_csl.size()) {
      size_t comma = dimvec_csl.find(',', pos);
      if (comma == std::string::npos) comma = dimvec_csl.size();
      a.dimvec.push_back(std::stoul(dimvec_csl.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  if (!a.sub_paths.empty()) a.sub_path = a.sub_paths.front();
  if (a.command == "split" && a.xi_path.empty()) a.xi_path = a.xi_csl;  // --xi FILE also accepted

  try {
    // field resolution: --q wins; otherwise the primary input file decides
    if (a.q != 0) return run(PrimeField(a.q), a);
    if (a.command == "detsum verify")
      return a.rational ? run(RationalField{}, a)
                        : (throw std::invalid_argument("detsum verify needs --q or --rational"), 1);
    std::string primary = !a.algebra_path.empty() ? a.algebra_path : a.model_path;
    if (primary.empty()) throw std::invalid_argument("no input file; pass --algebra or --model");
    auto j = load_json(primary);
    FieldTag tag = j.contains("field") ? field_from_json(j.at("field")) : FieldTag{true, 0};
    if (tag.rational) return run(RationalField{}, a);
    return run(PrimeField(tag.p), a);
  } catch (const BudgetExceeded& e) {
    std::cout << ordered_json{{"status", "budget_exceeded"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
