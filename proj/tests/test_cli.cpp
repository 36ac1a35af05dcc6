#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(REPCOMP_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return RunResult{WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(REPCOMP_DATA) + "/" + name; }

}  // namespace

TEST_CASE("cli: count, exit codes, determinism") {
  auto r1 = run_cli("grass count --algebra " + data("kx4.json") + " --module " +
                    data("tau2.json") + " --dim 1 --q 5");
  CHECK(r1.exit_code == 0);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j.at("count") == 1);

  auto r2 = run_cli("grass count --algebra " + data("kx4.json") + " --module " +
                    data("tau2.json") + " --dim 1 --q 5");
  CHECK(r1.out == r2.out);  // byte-identical reruns

  auto bad = run_cli("validate --algebra " + data("kx4.json") + " --rep " +
                     data("identity2.json"));
  CHECK(bad.exit_code == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb.at("ok") == false);
  CHECK(jb.at("violated_relations").size() == 1);

  auto ok = run_cli("validate --algebra " + data("kx4.json") + " --rep " + data("tau2.json"));
  CHECK(ok.exit_code == 0);
}

TEST_CASE("cli: budget exhaustion surfaces as exit 2") {
  auto r = run_cli("grass count --algebra " + data("kx4.json") + " --module " +
                   data("m13.json") + " --dim 2 --q 5 --budget 3");
  CHECK(r.exit_code == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "budget_exceeded");
}

TEST_CASE("cli: jets lift and probe schemas") {
  auto lift = run_cli("jets lift --model " + data("stu.json") + " --xi 1,0,1 --r 3 --q 5");
  CHECK(lift.exit_code == 0);
  auto jl = nlohmann::json::parse(lift.out);
  CHECK(jl.at("member") == "true");
  CHECK(jl.at("witness").size() == 3);

  auto probe = run_cli("jets probe --algebra " + data("kx4.json") + " --module " +
                       data("tau2.json") + " --sub " + data("socle_in_tau2.json") +
                       " --r 2 --q 3");
  CHECK(probe.exit_code == 0);
  auto jp = nlohmann::json::parse(probe.out);
  CHECK(jp.at("tangent_dim") == 1);
  CHECK(jp.at("lifting_count") == 1);
  CHECK(jp.at("dim_proxy") == 0);
  CHECK(jp.at("verdict") == "nonreduced");
}

TEST_CASE("cli: hom/ext/split plumbing") {
  auto ext = run_cli("ext --algebra " + data("kx4.json") + " --rep " + data("tau1.json") +
                     " --rep2 " + data("tau1.json") + " --q 5");
  auto je = nlohmann::json::parse(ext.out);
  CHECK(je.at("dim") == 1);

  auto split = run_cli("split --algebra " + data("kx4.json") + " --rep " + data("tau1.json") +
                       " --rep2 " + data("tau1.json") + " --xi-file " + data("xi_one.json") +
                       " --q 5");
  auto js = nlohmann::json::parse(split.out);
  CHECK(js.at("split") == false);

  auto iso = run_cli("iso --algebra " + data("kx4.json") + " --rep " + data("tau2.json") +
                     " --rep2 " + data("tau2.json") + " --q 5");
  auto ji = nlohmann::json::parse(iso.out);
  CHECK(ji.at("isomorphic") == "yes");
}

TEST_CASE("cli: enum csv format") {
  auto r = run_cli("grass enum --algebra " + data("kx4.json") + " --module " + data("m12.json") +
                   " --dim 1 --q 2 --r 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("point_index,stratum,tangent_dim,nonreduced_flag\n", 0) == 0);
  // q + 1 = 3 points follow the header
  size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 4);
}

TEST_CASE("cli: malformed json reports line and column") {
  std::string path = std::string(REPCOMP_DATA) + "/../build/bad_input.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("{\n  \"dim\": 2,,\n}\n", f);
    fclose(f);
  }
  auto r = run_cli("validate --algebra " + data("kx4.json") + " --rep " + path);
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli: detsum verify") {
  auto r = run_cli("detsum verify --trials 50 --dmax 4 --nmax 3 --q 7 --seed 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("failures") == 0);

  auto rq = run_cli("detsum verify --trials 20 --dmax 3 --nmax 2 --rational");
  CHECK(rq.exit_code == 0);
  CHECK(nlohmann::json::parse(rq.out).at("failures") == 0);
}
