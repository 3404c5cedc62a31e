// Drives the command-line binary end to end: exit codes, text output,
// JSON round-trips, and byte-for-byte determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

int g_failures = 0;

#define CHECK(cond)                                                           \
  do {                                                                        \
    if (!(cond)) {                                                            \
      ++g_failures;                                                           \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": " << #cond    \
                << "\n";                                                      \
    }                                                                         \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const auto tmp = std::filesystem::temp_directory_path() / "roughdist_cli_tests";
  std::filesystem::create_directories(tmp);

  // --- feasible, case 0 -----------------------------------------------
  {
    auto r = run(cli + " feasible --case 0 --n 110");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "k=10"));
    CHECK(contains(r.out, "rough=100"));

    CHECK(run(cli + " feasible --case 0 --n 7").exit_code == 3);
  }

  // --- feasible, case 1 and power-set models ---------------------------
  {
    auto r = run(cli + " feasible --case 1 --n 16");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "k=4"));
    CHECK(contains(r.out, "rough=12"));
    CHECK(run(cli + " feasible --case 1 --n 17").exit_code == 3);

    auto p = run(cli + " feasible --case 1p --n 100");
    CHECK(p.exit_code == 0);
    CHECK(contains(p.out, "x=2 k=2 n=4"));
    CHECK(contains(p.out, "x=6 k=8 n=64"));
    CHECK(!contains(p.out, "n=256"));
  }

  // --- feasible, case 2 -----------------------------------------------
  {
    auto r = run(cli + " feasible --case 2 --n 100 --alpha 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "candidates=9"));  // k in {2..10}
    CHECK(contains(r.out, "k=10 pi=1 rough=90"));

    auto byppi = run(cli + " feasible --case 2 --n 100 --pi 1");
    CHECK(byppi.exit_code == 0);
    CHECK(contains(byppi.out, "k=10"));

    CHECK(run(cli + " feasible --case 2 --n 100 --alpha 1 --pi 1").exit_code == 2);
    CHECK(run(cli + " feasible --case 2 --n 100 --alpha 0.5").exit_code == 2);
    CHECK(run(cli + " feasible --case 2").exit_code == 2);
  }

  // --- count ------------------------------------------------------------
  {
    auto r = run(cli + " count --r 4 --g 2 --min 1 --max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n_o=3"));
    CHECK(contains(r.out, "B=10"));
    CHECK(contains(r.out, "bounds=[3,27]"));
  }

  // --- fixtures ---------------------------------------------------------
  const auto chain5 = tmp / "chain5.poset";
  write_file(chain5,
             "elements a b c d e\n"
             "order a <= b\norder b <= c\norder c <= d\norder d <= e\n");
  const auto diamond = tmp / "diamond.poset";
  write_file(diamond,
             "# bounded width-2 poset\n"
             "elements bot x y top\n"
             "order bot <= x\norder bot <= y\norder x <= top\norder y <= top\n");
  const auto family = tmp / "family.sdr";
  write_file(family,
             "ground a b c\n"
             "set a b\nset b c\nset a c\n");
  const auto space = tmp / "space.gos";
  write_file(space,
             "universe 1 2 3\n"
             "block 1 2\nblock 3\n"
             "pawlak\n");

  // --- poset ------------------------------------------------------------
  {
    auto w = run(cli + " poset --width " + std::string(chain5.string()));
    CHECK(w.exit_code == 0);
    CHECK(w.out.substr(0, 2) == "1\n");

    auto w2 = run(cli + " poset --width " + std::string(diamond.string()));
    CHECK(w2.exit_code == 0);
    CHECK(w2.out.substr(0, 2) == "2\n");
    CHECK(contains(w2.out, "antichain: x y"));

    auto v = run(cli + " poset --validate " + std::string(diamond.string()));
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "elements=4"));
    CHECK(contains(v.out, "covering_pairs=4"));

    auto c = run(cli + " poset --cover " + std::string(diamond.string()));
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "chain:"));

    auto s = run(cli + " poset --sdr " + std::string(family.string()));
    CHECK(s.exit_code == 0);
    CHECK(contains(s.out, "sdr:"));

    const auto bad = tmp / "cycle.poset";
    write_file(bad, "elements a b\norder a <= b\norder b <= a\n");
    CHECK(run(cli + " poset --validate " + std::string(bad.string())).exit_code == 2);

    CHECK(run(cli + " poset --validate " + std::string((tmp / "missing.poset").string()))
              .exit_code != 0);
  }

  // --- gos ----------------------------------------------------------------
  {
    auto v = run(cli + " gos --validate " + std::string(space.string()));
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "axioms ok"));
    CHECK(contains(v.out, "wra=yes"));

    auto c = run(cli + " gos --classify " + std::string(space.string()));
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "n=8 k=4 rough=4"));
  }

  // --- index ----------------------------------------------------------------
  {
    auto r = run(cli + " index --space " + std::string(space.string()));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, " = "));
    CHECK(contains(r.out, "relative="));
  }

  // --- figures -----------------------------------------------------------
  {
    const auto csv1 = tmp / "fig1.csv";
    const auto csv2 = tmp / "fig1_again.csv";
    CHECK(run(cli + " figures --fig 1 --n-max 200 --out " + std::string(csv1.string()))
              .exit_code == 0);
    CHECK(run(cli + " figures --fig 1 --n-max 200 --out " + std::string(csv2.string()))
              .exit_code == 0);
    const std::string a = read_file(csv1);
    CHECK(a == read_file(csv2));
    CHECK(contains(a, "n,k,rough_total,rough_per_crisp_gap"));
    CHECK(contains(a, "110,10,100,10"));
    CHECK(a.find('\r') == std::string::npos);

    auto f4 = run(cli + " figures --fig 4 --n-from 3 --n-to 10 --pi 1/2 --out -");
    CHECK(f4.exit_code == 0);
    CHECK(contains(f4.out, "n,pi,count"));

    CHECK(run(cli + " figures --fig 9 --out -").exit_code == 2);
    CHECK(run(cli + " figures --fig 1 --out /nonexistent-dir/x.csv").exit_code == 4);
  }

  // --- JSON mirrors round-trip and match the text mode --------------------
  {
    for (const std::string& sub : std::vector<std::string>
         {" feasible --case 2 --n 100 --alpha 1 --json",
          " count --r 4 --g 2 --min 1 --max 3 --json",
          " poset --width " + std::string(diamond.string()) + " --json",
          " gos --classify " + std::string(space.string()) + " --json",
          " index --space " + std::string(space.string()) + " --json"}) {
      auto r = run(cli + sub);
      CHECK(r.exit_code == 0);
      auto j = nlohmann::ordered_json::parse(r.out, nullptr, false);
      CHECK(!j.is_discarded());
      CHECK(j.dump(2) + "\n" == r.out);
    }
    auto j = nlohmann::ordered_json::parse(
        run(cli + " feasible --case 2 --n 100 --alpha 1 --json").out);
    CHECK(j["candidates"] == "9");
    CHECK(j["admissible"].size() > 0);
  }

  // --- determinism across runs --------------------------------------------
  {
    for (const std::string& sub : std::vector<std::string>
         {" feasible --case 2 --n 5000 --alpha 1/3",
          " gos --classify " + std::string(space.string()),
          " poset --cover " + std::string(diamond.string())}) {
      auto a = run(cli + sub);
      auto b = run(cli + sub);
      CHECK(a.exit_code == b.exit_code);
      CHECK(a.out == b.out);
    }
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << g_failures << " failure(s)\n";
  return 1;
}
