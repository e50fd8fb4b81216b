#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct CmdResult {
  int code = -1;
  std::string out;  // stdout and stderr combined
};

CmdResult run_cli(const std::string& args) {
  const char* bin = std::getenv("LAGCOH_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "LAGCOH_BIN must point at the lagcoh binary");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path tmp_file(const std::string& name) {
  return fs::temp_directory_path() / ("lagcoh_cli_" + name);
}

}  // namespace

TEST_CASE("variety gen writes a loadable curve file") {
  fs::path out = tmp_file("curve.json");
  CmdResult r = run_cli("variety gen --family curve --poly \"p^2 - q^3\" --weights q=2,p=3 --out " +
                        out.string());
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["format"] == "lagvar-1");
  CHECK(j["family"] == "curve");
  CHECK(j["W"] == 5);
  CHECK(j["dim"] == 1);
  CHECK(j["ideal_generators"].size() == 1);
}

TEST_CASE("variety gen is byte deterministic") {
  fs::path a = tmp_file("det_a.json"), b = tmp_file("det_b.json");
  CHECK(run_cli("variety gen --family swallowtail --n 2 --k 1 --out " + a.string()).code == 0);
  CHECK(run_cli("variety gen --family swallowtail --n 2 --k 1 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("cohomology reports are byte deterministic with --omit-timings") {
  fs::path v = tmp_file("smooth.json");
  REQUIRE(run_cli("variety gen --family swallowtail --n 1 --k 0 --out " + v.string()).code == 0);
  fs::path a = tmp_file("rep_a.json"), b = tmp_file("rep_b.json");
  std::string base = "cohomology --variety " + v.string() +
                     " --p 1 --max-degree 20 --omit-timings --format json --out ";
  CmdResult ra = run_cli(base + a.string());
  CmdResult rb = run_cli(base + b.string());
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(slurp(a) == slurp(b));
  nlohmann::json j = nlohmann::json::parse(slurp(a));
  CHECK(j["format"] == "cohreport-1");
  CHECK(j["status"] == "complete");
  CHECK(j["tables"][0]["all_zero"] == true);
  CHECK(j.find("elapsed_ms") == j.end());
}

TEST_CASE("cohomology table output shows the verdict data") {
  fs::path v = tmp_file("cusp2.json");
  REQUIRE(run_cli("variety gen --family curve --poly \"p^2 - q^3\" --weights q=2,p=3 --out " +
                  v.string())
              .code == 0);
  CmdResult r = run_cli("cohomology --variety " + v.string() + " --p 1 --max-degree 12");
  CHECK(r.code == 0);
  CHECK(r.out.find("total dim H^1 = 2") != std::string::npos);
}

TEST_CASE("check involutivity fails with exit code 2 on a non involutive ideal") {
  fs::path v = tmp_file("noninv.json");
  {
    nlohmann::json j;
    j["format"] = "lagvar-1";
    j["family"] = "curve";
    j["ring"] = {{"variables", {"q1", "p1"}}, {"weights", {2, 3}}, {"n", 1}};
    j["ideal_generators"] = {{{"text", "q1"}}, {{"text", "p1"}}};
    std::ofstream out(v);
    out << j.dump(2);
  }
  CmdResult r = run_cli("check involutivity --variety " + v.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("check commands pass on good input") {
  fs::path v = tmp_file("s21.json");
  REQUIRE(run_cli("variety gen --family swallowtail --n 2 --k 1 --out " + v.string()).code == 0);
  CHECK(run_cli("check involutivity --variety " + v.string()).code == 0);
  CHECK(run_cli("check parametrization --variety " + v.string()).code == 0);
  CmdResult cm = run_cli("check cm --variety " + v.string());
  CHECK(cm.code == 0);
  CHECK(cm.out.find("Cohen-Macaulay: YES") != std::string::npos);
  CmdResult at = run_cli("check alpha-torsion --poly \"p^2 - q^3\" --weights q=2,p=3");
  CHECK(at.code == 0);
  CHECK(at.out.find("PASS") != std::string::npos);
}

TEST_CASE("depth emits a machine readable certificate") {
  fs::path v = tmp_file("s21b.json");
  REQUIRE(run_cli("variety gen --family swallowtail --n 2 --k 1 --out " + v.string()).code == 0);
  fs::path cert = tmp_file("cert.json");
  CmdResult r = run_cli("depth --variety " + v.string() +
                        " --module structure-sheaf --format json --out " + cert.string());
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(cert));
  CHECK(j["pd"] == 2);
  CHECK(j["depth"] == 2);
  CHECK(j["betti"] == nlohmann::json({1, 3, 2}));
}

TEST_CASE("reproduce lemma-h1 verdicts and exit codes") {
  // n=1 k=1 is the cusp: H^1 does not vanish, so the verdict must fail
  CmdResult bad = run_cli("reproduce lemma-h1 --k 1 --n 1 --omit-timings");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  // the real lemma at k=1 (fast case) passes
  CmdResult good = run_cli("reproduce lemma-h1 --k 1 --omit-timings");
  CHECK(good.code == 0);
  CHECK(good.out.find("verdict: H^1 vanishes") != std::string::npos);
  CHECK(good.out.find("PASS") != std::string::npos);
}

TEST_CASE("degenerate bound warns and exits zero") {
  CmdResult r = run_cli("reproduce lemma-h1 --k 1 --max-degree -100 --omit-timings");
  CHECK(r.code == 0);
  CHECK(r.out.find("warning") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("missing files and bad arguments exit with code 1") {
  CHECK(run_cli("cohomology --variety /nonexistent.json --p 1").code == 1);
  CHECK(run_cli("variety gen --family curve --poly \"p^2 - q^3\"").code == 1);  // no weights
  CHECK(run_cli("depth --variety /nonexistent.json").code == 1);
}

TEST_CASE("resource caps exit with code 1 and a distinct message") {
  fs::path v = tmp_file("cap.json");
  REQUIRE(run_cli("variety gen --family swallowtail --n 2 --k 1 --out " + v.string()).code == 0);
  CmdResult r = run_cli("--max-pairs 1 cohomology --variety " + v.string() + " --p 1");
  CHECK(r.code == 1);
  CHECK(r.out.find("resource cap") != std::string::npos);
}

TEST_CASE("swallowtail cache round trips") {
  fs::path cache = tmp_file("cache_dir");
  fs::remove_all(cache);
  std::string env = "LAGCOH_CACHE_DIR=" + cache.string() + " ";
  const char* bin = std::getenv("LAGCOH_BIN");
  REQUIRE(bin != nullptr);
  fs::path a = tmp_file("cached_a.json"), b = tmp_file("cached_b.json");
  std::string gen = " variety gen --family swallowtail --n 2 --k 1 --out ";
  CHECK(std::system((env + bin + gen + a.string() + " >/dev/null 2>&1").c_str()) == 0);
  CHECK(fs::exists(cache / "swallowtail_n2_k1_kernel.json"));
  CHECK(std::system((env + bin + gen + b.string() + " >/dev/null 2>&1").c_str()) == 0);
  CHECK(slurp(a) == slurp(b));
}
