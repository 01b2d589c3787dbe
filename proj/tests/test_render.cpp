#include <doctest.h>

#include <random>

#include "cagames/errors.hpp"
#include "cagames/render.hpp"
#include "support.hpp"

using namespace cagames;

TEST_CASE("render formats") {
  SpacetimeWindow one{0, 0, 0, {1}};
  CHECK(render(one, RenderFormat::Pbm) == "P1\n1 1\n1\n");
  CHECK(render(one, RenderFormat::Text) == "#\n");

  SpacetimeWindow zeros{0, 1, 1, {0, 0, 0, 0}};
  CHECK(render(zeros, RenderFormat::Text) == "..\n..\n");

  // Top line is the latest row.
  SpacetimeWindow two_rows{0, 1, 1, {1, 0, 0, 1}};
  CHECK(render(two_rows, RenderFormat::Text) == ".#\n#.\n");
  CHECK(render(two_rows, RenderFormat::Pbm) == "P1\n2 2\n01\n10\n");
}

TEST_CASE("rendered rule 60 window equals the Lucas grid") {
  const auto spec = testing_support::rule60();
  const auto win = evolve_window(spec.params, spec.background, 1, 8, 8);
  std::string expect;
  for (std::int64_t y = 8; y >= 0; --y) {
    for (std::int64_t x = 1; x <= 8; ++x) expect.push_back(oracle::pascal_cell(x, y) ? '#' : '.');
    expect.push_back('\n');
  }
  CHECK(render(win, RenderFormat::Text) == expect);
}

TEST_CASE("PBM output reads back into the same window") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> pos(-20, 20), len(0, 30), rows(0, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const auto spec = testing_support::random_spec(rng);
    const auto x0 = pos(rng);
    const auto win = evolve_window(spec.params, spec.background, x0, x0 + len(rng), rows(rng));
    CHECK(read_pbm(render(win, RenderFormat::Pbm), x0) == win);
  }
}

TEST_CASE("PBM reader tolerates comments and rejects garbage") {
  const auto win = read_pbm("P1\n# comment\n3 1\n1 0 1\n", 5);
  CHECK(win.x0 == 5);
  CHECK(win.x1 == 7);
  CHECK(win.at(6, 0) == 0);
  CHECK_THROWS_AS(read_pbm("P4\n1 1\n1\n"), DomainError);
  CHECK_THROWS_AS(read_pbm("P1\n2 2\n01\n"), DomainError);
}
