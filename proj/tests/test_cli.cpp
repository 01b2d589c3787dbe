#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cagames/cli.hpp"
#include "cagames/render.hpp"
#include "cagames/spec_document.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cagames;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

const std::vector<std::string> kRule60 = {"--gamma", "0", "--Gamma", "0", "--L", "0", "--R", "1"};
const std::vector<std::string> kRule110 = {"--gamma", "1", "--Gamma", "0", "--L", "0",
                                           "--C",     "11010011101100", "--R", "0"};

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cagames_test_" + name);
}

}  // namespace

TEST_CASE("solve prints outcome and best move") {
  auto r = run(with({"solve", "--X", "4", "--Y", "5", "--mp", "3"}, kRule60));
  CHECK(r.code == 0);
  CHECK(r.out == "P\n");
  r = run(with({"solve", "--X", "6", "--Y", "2", "--mp", "4", "--best-move"}, kRule110));
  CHECK(r.out == "N\nt=6,m=2\n");
  r = run(with({"solve", "--X", "6", "--Y", "2", "--mp", "3", "--best-move"}, kRule110));
  CHECK(r.out == "P\nnone\n");
}

TEST_CASE("spec file and inline flags agree") {
  const auto path = scratch("spec.json");
  std::ofstream(path) << serialize(SpecDocument::from_game_spec(testing_support::rule110_game()));
  for (int mp = 0; mp <= 6; ++mp) {
    const std::vector<std::string> pos{"--X", "6", "--Y", "2", "--mp", std::to_string(mp)};
    CHECK(run(with(with({"solve", "--spec", path.string()}, pos), {})).out ==
          run(with(with({"solve"}, pos), kRule110)).out);
  }
  std::filesystem::remove(path);
}

TEST_CASE("evolve renders Pascal's triangle and round-trips through PBM") {
  auto r = run(with({"evolve", "--x0", "1", "--x1", "4", "--rows", "3"}, kRule60));
  REQUIRE(r.code == 0);
  CHECK(r.out == "#.#.\n##..\n#...\n####\n");

  const auto path = scratch("window.pbm");
  r = run(with({"evolve", "--x0", "-3", "--x1", "20", "--rows", "15", "--format", "pbm", "--out", path.string()},
               kRule110));
  REQUIRE(r.code == 0);
  std::ifstream file(path, std::ios::binary);
  std::ostringstream bytes;
  bytes << file.rdbuf();
  const auto spec = testing_support::rule110_game();
  CHECK(read_pbm(bytes.str(), -3) == evolve_window(spec.params, spec.background, -3, 20, 15));
  std::filesystem::remove(path);
}

TEST_CASE("verify subcommands report counts") {
  auto r = run(with({"verify-thm2", "--xmax", "12", "--ymax", "6", "--mpmax", "4"}, kRule110));
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 mismatches") != std::string::npos);
  r = run(with({"verify-thm3", "--xmin", "-3", "--xmax", "10", "--ymax", "5", "--hmax", "3"}, kRule60));
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 mismatches") != std::string::npos);
}

TEST_CASE("tri-solve prints both verdicts") {
  const auto r = run(with({"tri-solve", "--x", "5", "--y", "1", "--h", "2"}, kRule60));
  CHECK(r.code == 0);
  CHECK(r.out == "P\npredicate P\n");
}

TEST_CASE("periodicity, convergence and search") {
  auto r = run({"periodicity", "--gamma", "0", "--Gamma", "0", "--L", "1", "--R", "1", "--dmax", "2", "--rmax", "2",
                "--rows", "32", "--burnin", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("periodic delta=0 rho=1", 0) == 0);

  const auto other = scratch("other.json");
  std::ofstream(other) << R"({"gamma": 0, "Gamma": 0, "L": "0", "C": "0", "R": "1"})";
  r = run(with({"converge", "--spec2", other.string(), "--yfrom", "0", "--yto", "10", "--window", "8"}, kRule60));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("diverges at", 0) == 0);
  std::filesystem::remove(other);

  r = run(with({"search", "--pattern", "111", "--ymin", "1", "--ymax", "8", "--window", "10"}, kRule60));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("y=4 x=1\n", 0) == 0);
}

TEST_CASE("path-check") {
  auto r = run(with({"path-check", "--X", "6", "--Y", "2", "--mp", "4", "--path", "6,2"}, kRule110));
  CHECK(r.code == 0);
  CHECK(r.out == "optimal\n");
  r = run(with({"path-check", "--X", "6", "--Y", "2", "--mp", "4", "--path", "0,1"}, kRule110));
  CHECK(r.code == 1);
  CHECK(r.out.rfind("failure at move 0", 0) == 0);
  r = run(with({"path-check", "--X", "6", "--Y", "2", "--mp", "4", "--path", "oops"}, kRule110));
  CHECK(r.code == 1);
}

TEST_CASE("the engine wins a play session from an N position") {
  const auto spec = testing_support::rule110_game();
  const GamePosition start{9, 3, 4};
  TakeawaySolver solver(spec);
  REQUIRE(solver.outcome(start) == Outcome::N);

  // Human moves second and always takes the first legal move.
  std::string input;
  GamePosition pos = start;
  bool engine_turn = true;
  while (!legal_moves(spec, pos).empty()) {
    const auto moves = legal_moves(spec, pos);
    const Move m = engine_turn ? solver.best_move(pos).value_or(moves.front()) : moves.front();
    if (!engine_turn) input += std::to_string(m.tokens) + " " + std::to_string(m.matches) + "\n";
    pos = apply_move(spec, pos, m);
    engine_turn = !engine_turn;
  }

  const auto r = run(with({"play", "--X", "9", "--Y", "3", "--mp", "4", "--human", "second"}, kRule110), input);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("no legal moves - you lose") != std::string::npos);
  const auto at = r.out.rfind("path: ");
  REQUIRE(at != std::string::npos);
  const std::string path = r.out.substr(at + 6, r.out.size() - at - 7);
  CHECK(run(with({"path-check", "--X", "9", "--Y", "3", "--mp", "4", "--path", path}, kRule110)).out == "optimal\n");
}

TEST_CASE("illegal input in a play session is rejected and re-prompted") {
  const auto r = run(with({"play", "--X", "6", "--Y", "2", "--mp", "3"}, kRule110), "0 2\nx\nquit\n");
  CHECK(r.out.find("illegal move (token-range)") != std::string::npos);
  CHECK(r.out.find("enter a move as 't m'") != std::string::npos);
  CHECK(r.out.find("session abandoned") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"solve", "--X", "1"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run(with({"solve", "--X", "-1", "--Y", "1", "--mp", "1"}, kRule60)).code == 1);
  auto r = run(with({"solve", "--X", "1000", "--Y", "1000", "--mp", "1000", "--budget", "1000"}, kRule60));
  CHECK(r.code == 2);
  CHECK(r.err.find("search-too-large") != std::string::npos);
  r = run(with({"evolve", "--x0", "0", "--x1", "5000", "--rows", "5000"}, kRule60));
  CHECK(r.code == 2);
  CHECK(run({"solve", "--gamma", "0", "--Gamma", "0", "--L", "2", "--R", "1", "--X", "1", "--Y", "1", "--mp", "1"})
            .code == 1);
  CHECK(run({"solve", "--spec", "/nonexistent/spec.json", "--X", "1", "--Y", "1", "--mp", "1"}).code == 1);
}
