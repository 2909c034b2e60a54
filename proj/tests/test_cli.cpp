#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(RISWPC_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sweep to stdout is deterministic") {
  const std::string args = "sweep --variable P_p_dbm --values 0:30:10 --outputs ergodic_cf,outage_mc --samples 2000 --seed 4";
  const Run a = run(args);
  const Run b = run(args + " --threads 1");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("P_p_dbm[dBm],ergodic_cf[bit/s/Hz],outage_mc[-],outage_mc_stderr[-]\n", 0) == 0);
  CHECK(run(args + " --seed 5").out != a.out);
}

TEST_CASE("precedence of configuration sources") {
  const auto path = std::filesystem::temp_directory_path() / "riswpc_cli_cfg.txt";
  {
    std::ofstream out(path);
    out << "M = 8\nmc_samples = 500\n";
  }
  const std::string base = "sweep --variable alpha --values 0.3 --outputs power --config " + path.string();
  const Run from_file = run(base);
  const Run overridden = run(base + " --set M=16");
  CHECK(from_file.status == 0);
  CHECK(from_file.out != overridden.out);
  CHECK(run("sweep --variable alpha --values 0.3 --outputs power --set M=16").out == overridden.out);
  // A dedicated flag beats --set for the same key.
  const std::string mc = "sweep --variable alpha --values 0.3 --outputs ergodic_mc";
  CHECK(run(mc + " --set mc_samples=300 --samples 700").out == run(mc + " --samples 700").out);
  std::filesystem::remove(path);
}

TEST_CASE("errors are one JSON line with a nonzero exit") {
  const Run bad = run("sweep --variable alpha --values 0.5,1.5 --outputs ergodic_cf", true);
  CHECK(bad.status != 0);
  CHECK(bad.out.find('\n') == bad.out.size() - 1);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j["error"] == "validation");
  CHECK(j["message"].get<std::string>().find("alpha=1.5") != std::string::npos);

  const Run unknown = run("optimize --set gain=3", true);
  CHECK(unknown.status != 0);
  const auto u = nlohmann::json::parse(unknown.out);
  CHECK(u["field"] == "gain");

  const Run usage = run("nonsense", true);
  CHECK(usage.status != 0);
  CHECK(nlohmann::json::parse(usage.out)["error"] == "usage");

  CHECK(run("figure fig9", true).status != 0);
  CHECK(run("sweep --variable M --values 4 --outputs power --config /nonexistent/x", true).status != 0);
}

TEST_CASE("figures and reports write files") {
  const auto dir = std::filesystem::temp_directory_path() / "riswpc_cli_out";
  std::filesystem::remove_all(dir);
  CHECK(run("figure fig6 --out-dir " + dir.string()).status == 0);
  const std::string fig6 = slurp(dir / "fig6_power.csv");
  CHECK(fig6.rfind("M[-],alpha[-],power[mW]\n", 0) == 0);
  CHECK(run("optimize --out-dir " + dir.string()).status == 0);
  CHECK(std::filesystem::exists(dir / "optimize.csv"));
  CHECK(run("compare --samples 1000 --out-dir " + dir.string()).status == 0);
  CHECK(slurp(dir / "compare.csv").find("passive") != std::string::npos);
  CHECK(run("mc --samples 2000").out.find("ergodic_rate[bit/s/Hz]") != std::string::npos);
  std::filesystem::remove_all(dir);
}
