#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cpe/csv.hpp"

namespace fs = std::filesystem;

namespace {

std::string data(const char* name) { return std::string(CPE_TEST_DATA) + "/" + name; }

std::string out_dir(const char* name) {
  const fs::path p = fs::path(CPE_TEST_WORK) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

int run(const std::string& args) {
  const std::string cmd = std::string(CPE_LAB) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(CPE_LAB) + " " + args + " 2>&1";
  std::string out;
  if (FILE* f = popen(cmd.c_str(), "r")) {
    char buf[256];
    while (fgets(buf, sizeof buf, f)) out += buf;
    pclose(f);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> rows_of(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::string summary_value(const std::string& dir, const std::string& key) {
  std::istringstream in(slurp(dir + "/summary.txt"));
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  return {};
}

}  // namespace

TEST_CASE("run on constant data conserves mass and writes ceil(steps/k)+1 rows") {
  const std::string out = out_dir("run_constant");
  REQUIRE(run("run --config " + data("constant.ini") + " --out " + out + " --quiet") == 0);
  const auto rows = rows_of(out + "/timeseries.csv");
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0][4] == "mass");
  const double m0 = std::stod(rows[1][4]);
  for (std::size_t r = 1; r < rows.size(); ++r) CHECK(std::abs(std::stod(rows[r][4]) - m0) <= 1e-12);
  const long steps = std::stol(summary_value(out, "steps"));
  CHECK(static_cast<long>(rows.size()) - 1 == (steps + 3) / 4 + 1);
  CHECK(fs::exists(out + "/final.cpe"));

  const std::string info = capture("inspect " + out + "/final.cpe");
  CHECK(info.find("nx = 8") != std::string::npos);
  CHECK(info.find("time = 0.02") != std::string::npos);
  CHECK(info.find("gamma = 1.3999999999999999") != std::string::npos);
}

TEST_CASE("picard on constant data") {
  const std::string out = out_dir("picard_constant");
  REQUIRE(run("picard --config " + data("constant.ini") + " --out " + out + " --quiet") == 0);
  CHECK(std::stoi(summary_value(out, "iterations")) <= 2);
  CHECK(summary_value(out, "converged") == "true");
}

TEST_CASE("every subcommand runs on a small random configuration") {
  for (const char* sub : {"run", "mms", "eps-sweep", "perturb", "picard", "ineq-lab"}) {
    CAPTURE(sub);
    const std::string out = out_dir(sub);
    CHECK(run(std::string(sub) + " --config " + data("smooth_random.ini") + " --out " + out + " --quiet") == 0);
    CHECK(summary_value(out, "status") == "ok");
  }
}

TEST_CASE("same seed gives byte-identical CSV, a new seed does not") {
  const std::string a = out_dir("det_a"), b = out_dir("det_b"), c = out_dir("det_c");
  const std::string cfg = " --config " + data("smooth_random.ini") + " --quiet --out ";
  REQUIRE(run("run" + cfg + a) == 0);
  REQUIRE(run("run" + cfg + b) == 0);
  REQUIRE(run("run --seed 6" + cfg + c) == 0);
  CHECK(slurp(a + "/timeseries.csv") == slurp(b + "/timeseries.csv"));
  CHECK(slurp(a + "/timeseries.csv") != slurp(c + "/timeseries.csv"));
  REQUIRE(run("ineq-lab" + cfg + a) == 0);
  REQUIRE(run("ineq-lab" + cfg + b) == 0);
  CHECK(slurp(a + "/ineq.csv") == slurp(b + "/ineq.csv"));
}

TEST_CASE("faults map to exit codes") {
  const std::string out = out_dir("faults");
  CHECK(run("run --config " + data("bad_gamma.ini") + " --out " + out) == 2);
  CHECK(run("run --config /no/such.ini --out " + out) == 2);
  CHECK(run("inspect /no/such.cpe") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2);
}
