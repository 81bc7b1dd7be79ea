#include <doctest.h>

#include "oracles.hpp"
#include "tmc/error.hpp"
#include "tmc/generators.hpp"
#include "tmc/isomorphism.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"

using namespace tmc;

namespace {

int exact(const Graph& g) {
  TmcOutcome out = tmc_exact(g, SolverOptions{.max_n = kSolverMaxOrder});
  REQUIRE(out.exact());
  return *out.value;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("bounds") {
  CHECK(tmc_lower_bound(path_graph(5)) == 3);
  CHECK(tmc_lower_bound(complete_graph(4)) == 7);
  CHECK(tmc_lower_bound(petersen_graph()) == 13);
  CHECK(tmc_lower_bound(complete_graph(1)) == 1);
  CHECK(tmc_lower_bound(empty_graph(2)) == 0);
  CHECK(tmc_upper_bound(complete_graph(4)) == 10);
  CHECK(tmc_upper_bound(cycle_graph(5)) == 5);
  CHECK(tmc_upper_bound(complete_minus(4, Pattern::kK2)) == 7);
  CHECK(tmc_upper_bound(empty_graph(2)) == 0);
}

TEST_CASE("exact values") {
  CHECK(exact(complete_graph(4)) == 10);
  CHECK(exact(complete_multipartite(MultipartiteSpec({2, 1, 1}))) == 7);
  CHECK(exact(complete_multipartite(MultipartiteSpec({2, 2, 1}))) == 9);
  CHECK(exact(cycle_graph(5)) == 4);
  CHECK(exact(complete_graph(1)) == 1);
  CHECK(exact(complete_graph(2)) == 3);
  CHECK(exact(petersen_graph()) == 13);
}

TEST_CASE("degenerate and budget outcomes") {
  TmcOutcome k1 = tmc_exact(complete_graph(1));
  REQUIRE(k1.certificate);
  CHECK(k1.certificate->num_colors() == 1);
  TmcOutcome split = tmc_exact(empty_graph(3));
  CHECK(split.value == 0);
  CHECK(split.method == "disconnected");
  TmcOutcome big = tmc_exact(cycle_graph(9), SolverOptions{.max_n = 8});
  CHECK_FALSE(big.exact());
  CHECK(big.method == "bounds-only");
  CHECK(big.lower <= 4);
  CHECK(big.upper >= 4);
  TmcOutcome capped = tmc_exact(petersen_graph(), SolverOptions{.max_n = 10, .node_limit = 1});
  if (!capped.exact()) CHECK(capped.lower <= 13);
}

TEST_CASE("oracle examples") {
  CHECK(tmc_oracle(complete_graph(3)) == 6);
  CHECK(tmc_oracle(path_graph(4)) == 3);
  CHECK(tmc_oracle(star_graph(3)) == 4);
  CHECK_THROWS_AS(tmc_oracle(path_graph(6)), LimitError);
}

TEST_CASE("oracle and solver agree with partition brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      CAPTURE(n);
      CAPTURE(g.size());
      int value = exact(g);
      CHECK(value == tmc_oracle(g));
      if (g.order() + g.size() <= 10) CHECK(value == oracle::tmc_by_partitions(g));
    }
  }
  CHECK(oracle::tmc_by_partitions(empty_graph(3)) == 0);
}

TEST_CASE("certificates and sandwich on the n <= 6 sweep") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      TmcOutcome out = tmc_exact(g);
      REQUIRE(out.exact());
      REQUIRE(out.certificate);
      CHECK(verify_tmc(g, *out.certificate).ok);
      CHECK(out.certificate->num_colors() == *out.value);
      CHECK(tmc_lower_bound(g) <= *out.value);
      CHECK(*out.value <= tmc_upper_bound(g));
      if (out.family) {
        CHECK_NOTHROW(check_family(g, *out.family));
        CHECK(covers_nonadjacent_pairs(g, *out.family));
        CHECK(*out.value == g.size() + g.order() - out.family->total_waste());
      }
    }
  }
}

TEST_CASE("deterministic certificates") {
  for (const Graph& g : enumerate_connected_graphs(6)) {
    TmcOutcome a = tmc_exact(g);
    TmcOutcome b = tmc_exact(g);
    CHECK(a.certificate == b.certificate);
  }
}

}  // TEST_SUITE
