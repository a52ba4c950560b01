#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("HECKE_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string tmp_dir() {
  const char* p = std::getenv("HECKE_TEST_TMPDIR");
  return p ? p : "/tmp";
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("trace subcommand") {
  auto r = run("trace --m 2 --N 1 --k 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-24\n");

  r = run("trace --m 2 --N 1 --k 12 --normalized");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 + -3/8*sqrt(2)\n");

  r = run("trace --m 1 --N 11 --k 4 --new");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("precondition violations exit with code 2") {
  CHECK(run("trace --m 2 --N 4 --k 12").exit_code == 2);   // not coprime
  CHECK(run("trace --m 2 --N 3 --k 2").exit_code == 2);    // k = 2 refused
  CHECK(run("trace --m 2 --N 3 --k 7").exit_code == 2);    // odd k
  CHECK(run("charpoly --m 2 --N 1 --k 12 --max-r 5").exit_code == 2);
}

TEST_CASE("charpoly subcommand emits JSON") {
  const auto r = run("charpoly --m 2 --N 1 --k 24");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"dim\": 2") != std::string::npos);
  CHECK(r.out.find("-1080") != std::string::npos);
  CHECK(r.out.find("-20468736") != std::string::npos);
  CHECK(r.out.find("\"space\": \"full\"") != std::string::npos);
}

TEST_CASE("asymp subcommand writes deterministic CSV") {
  const std::string f1 = tmp_dir() + "/asymp1.csv";
  const std::string f8 = tmp_dir() + "/asymp8.csv";
  auto r = run("asymp --m 1 --m 2 --r 1 --r 2 --N-range 1:25 "
               "--k-range 12:16:2 --jobs 1 --out " + f1);
  CHECK(r.exit_code == 0);
  r = run("asymp --m 1 --m 2 --r 1 --r 2 --N-range 1:25 "
          "--k-range 12:16:2 --jobs 8 --out " + f8);
  CHECK(r.exit_code == 0);
  std::ifstream a(f1), b(f8);
  const std::string s1((std::istreambuf_iterator<char>(a)),
                       std::istreambuf_iterator<char>());
  const std::string s8((std::istreambuf_iterator<char>(b)),
                       std::istreambuf_iterator<char>());
  CHECK(!s1.empty());
  CHECK(s1 == s8);
  CHECK(s1.rfind("m,r,N,k,space,dim,", 0) == 0);

  CHECK(run("asymp --m 1 --r 1 --N-range 1:5 --k-range 12:12 "
            "--out /nonexistent-dir/x.csv").exit_code == 3);
}

TEST_CASE("scan-conjecture subcommand") {
  const auto r = run("scan-conjecture --m-list 2 --r-max 1 --N-max 15 "
                     "--k-max 16 --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("vanishing coefficients found: 0") != std::string::npos);
}

TEST_CASE("signpattern chebyshev") {
  const auto r = run("signpattern --chebyshev 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"observed\": \"+0-0+\"") != std::string::npos);
  CHECK(r.out.find("\"match\": true") != std::string::npos);
  CHECK(r.out.find("\"c1_class\": \"zero\"") != std::string::npos);
}

TEST_CASE("signpattern roots file") {
  const std::string path = tmp_dir() + "/roots.txt";
  {
    std::ofstream out(path);
    out << "1 -1\n2 -2\n";
  }
  const auto r = run("signpattern --roots " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"c1_class\": \"zero\"") != std::string::npos);
  CHECK(r.out.find("\"observed\": \"+0-0+\"") != std::string::npos);

  {
    std::ofstream out(path);
    out << "1 -1\nbogus\n";
  }
  const auto bad = run("signpattern --roots " + path);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("line 2") != std::string::npos);
}

TEST_CASE("signpattern random ensembles are seed-deterministic") {
  const auto a = run("signpattern --random 50 --seed 9 --dist pm --max-r 8");
  const auto b = run("signpattern --random 50 --seed 9 --dist pm --max-r 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"c1_class\": \"zero\"") != std::string::npos);
}

TEST_CASE("selftest subcommand") {
  const auto none = run("selftest --suite none");
  CHECK(none.exit_code == 0);
  CHECK(none.out == "0 suites\n");

  const auto dim = run("selftest --suite dimension --suite quad-sign");
  CHECK(dim.exit_code == 0);
  CHECK(dim.out.find("PASS dimension") != std::string::npos);
  CHECK(dim.out.find("PASS quad-sign") != std::string::npos);

  CHECK(run("selftest --suite no-such-suite").exit_code == 2);
}

TEST_CASE("hurwitz table cache is honored and fault-injectable") {
  const std::string good = tmp_dir() + "/hurwitz_good.csv";
  {
    // H(0) = -1/12, H(3) = 1/3, H(4) = 1/2, zeros at 1, 2 mod 4.
    std::ofstream out(good);
    out << "0,-1/12\n1,0\n2,0\n3,1/3\n4,1/2\n5,0\n6,0\n7,1\n";
  }
  auto r = run("trace --m 1 --N 1 --k 12", "HECKE_TABLE_DIR=" + good);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
  r = run("selftest --suite hurwitz-table", "HECKE_TABLE_DIR=" + good);
  CHECK(r.exit_code == 0);

  const std::string bad = tmp_dir() + "/hurwitz_bad.csv";
  {
    // H(7) is 1, not 2: passes the light load-time checks, must be caught
    // by the full recomputation in the selftest suite.
    std::ofstream out(bad);
    out << "0,-1/12\n1,0\n2,0\n3,1/3\n4,1/2\n5,0\n6,0\n7,2\n";
  }
  r = run("selftest --suite hurwitz-table", "HECKE_TABLE_DIR=" + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL hurwitz-table") != std::string::npos);

  const std::string garbled = tmp_dir() + "/hurwitz_garbled.csv";
  {
    std::ofstream out(garbled);
    out << "0,-1/12\nnot-a-row\n";
  }
  r = run("trace --m 1 --N 1 --k 12", "HECKE_TABLE_DIR=" + garbled);
  CHECK(r.exit_code == 2);
}
