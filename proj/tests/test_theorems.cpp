#include <doctest.h>

#include "tmc/generators.hpp"
#include "tmc/graph_io.hpp"
#include "tmc/isomorphism.hpp"
#include "tmc/solver.hpp"
#include "tmc/theorems.hpp"

using namespace tmc;

namespace {

Graph bowtie() { return Graph(5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

bool has_hit(const TheoremVerdict& v, const std::string& rule) {
  for (const auto& h : v.hits)
    if (h.rule == rule) return true;
  return false;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("classify examples") {
  TheoremVerdict petersen = classify(petersen_graph());
  CHECK(petersen.rule == "thm2b");
  CHECK(petersen.value == 13);

  TheoremVerdict bow = classify(bowtie());
  CHECK(bow.rule == "thm2e");
  CHECK(bow.value == 7);

  // K_{3,1,1} = K_5 - K_3: m = 7, so m + r - t = 7 + 3 - 1 = m + n - 3.
  Graph k311g = complete_multipartite(MultipartiteSpec({3, 1, 1}));
  TheoremVerdict k311 = classify(k311g);
  CHECK(k311.rule == "example1");
  CHECK(k311g.size() == 7);
  CHECK(k311.value == 9);
  CHECK(*k311.value == k311g.size() + k311g.order() - 3);
  CHECK(*tmc_exact(k311g).value == 9);

  CHECK(classify(complete_graph(5)).rule == "complete");
  CHECK(classify(complete_graph(5)).value == 15);
  TheoremVerdict split = classify(empty_graph(4));
  CHECK(split.rule == "disconnected");
  CHECK(split.value == 0);
}

TEST_CASE("every hit carries the same value") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      TheoremVerdict v = classify(g);
      for (const auto& h : v.hits) CHECK(h.value == *v.value);
    }
  }
}

TEST_CASE("leaf-formula conditions") {
  CHECK(degree_condition(cycle_graph(6)));
  CHECK_FALSE(degree_condition(complete_graph(3)));
  CHECK(complement_four_connected(cycle_graph(8)));
  CHECK_FALSE(complement_four_connected(complete_minus(6, Pattern::kK2)));
  CHECK(has_hit(classify(path_graph(6)), "thm2d"));
  CHECK(has_hit(classify(cycle_graph(6)), "thm2b"));
  CHECK_FALSE(has_hit(classify(path_graph(3)), "thm2b"));
}

TEST_CASE("small-value characterization") {
  CHECK(characterize_small(path_graph(7)) == 3);
  CHECK(characterize_small(cycle_graph(4)) == 4);
  CHECK(characterize_small(complete_graph(3)) == 6);
  CHECK(characterize_small(star_graph(4)) == 5);
  CHECK_FALSE(characterize_small(complete_graph(5)).has_value());
  CHECK_FALSE(in_tmc6_class(complete_minus(4, Pattern::kK2)));
}

TEST_CASE("large-value characterization") {
  auto k6e = characterize_large(complete_minus(6, Pattern::kK2));
  REQUIRE(k6e);
  CHECK(k6e->rule == "thm7");
  CHECK(k6e->value == 18);
  auto k5p3 = characterize_large(complete_minus(5, Pattern::kP3));
  REQUIRE(k5p3);
  CHECK(k5p3->value == 10);
  auto k5c4 = characterize_large(complete_minus(5, Pattern::kC4));
  REQUIRE(k5c4);
  CHECK(k5c4->rule == "thm9");
  CHECK(k5c4->value == 7);
  CHECK_FALSE(characterize_large(path_graph(5)).has_value());
  CHECK(matches_complete_minus(complete_multipartite(MultipartiteSpec({2, 2, 1})), Pattern::k2K2));
}

TEST_CASE("large templates against the solver at n = 5, 6, 7") {
  for (int n = 5; n <= 7; ++n) {
    for (Pattern p : kAllPatterns) {
      Graph g = complete_minus(n, p);
      auto hit = characterize_large(g);
      REQUIRE(hit);
      CHECK(*tmc_exact(g).value == hit->value);
    }
  }
}

TEST_CASE("complete multipartite graphs up to n = 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      auto parts = multipartite_structure(g);
      if (!parts) continue;
      CHECK(*tmc_exact(g).value == g.size() + parts->parts() - parts->nontrivial_parts());
    }
  }
}

TEST_CASE("sweep passes") {
  SweepReport four = sweep_crosscheck(SweepOptions{.n_max = 4});
  CHECK(four.passed());
  CHECK(four.total_classes() == 10);
  SweepReport five = sweep_crosscheck(SweepOptions{.n_max = 5});
  CHECK(five.passed());
  CHECK(five.total_classes() == 31);
  SweepReport six = sweep_crosscheck(SweepOptions{.n_max = 6, .jobs = 2});
  CHECK(six.passed());
  CHECK(six.total_classes() == 143);
  for (const auto& d : six.discrepancies) MESSAGE(d);
}

TEST_CASE("sweep CSV") {
  SweepReport r = sweep_crosscheck(SweepOptions{.n_max = 3});
  std::string csv = sweep_csv(r);
  CHECK(csv.rfind("graph6,n,m,l,tmc_exact,matched_rules,predicted_value,agree\n", 0) == 0);
  CHECK(csv.find("Bw,3,3,2,6,complete;example1;thm6,6,true") != std::string::npos);
}

}  // TEST_SUITE
