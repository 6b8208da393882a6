#include <doctest.h>

#include <set>

#include "defsem/defense_semantics.hpp"
#include "defsem/error.hpp"
#include "defsem/oracle.hpp"
#include "fixtures.hpp"

using namespace defsem;
namespace fx = defsem::fixtures;

TEST_CASE("brute force on example graphs") {
  CHECK(oracle::brute_force_extensions(fx::f10(), Semantics::complete) ==
        std::vector<Extension>{{}, {"b"}});
  CHECK(oracle::brute_force_extensions(fx::f3(), Semantics::stable) ==
        std::vector<Extension>{{"a", "c"}});
  CHECK(oracle::brute_force_extensions(ArgumentGraph{}, Semantics::grounded) ==
        std::vector<Extension>{{}});
  CHECK(oracle::brute_force_defense_extensions(build_defense_graph(fx::f10()),
                                               Semantics::complete) ==
        std::vector<DefenseExtension>{{}, {defense("b", "b")}});
  CHECK(oracle::brute_force_defense_extensions(build_defense_graph(fx::f1()),
                                               Semantics::complete)
            .size() == 3);
  CHECK(oracle::brute_force_defense_extensions(build_defense_graph(ArgumentGraph{}),
                                               Semantics::complete) ==
        std::vector<DefenseExtension>{{}});
}

TEST_CASE("size bounds") {
  const auto big = oracle::random_graph(13, 0.2, 1);
  CHECK_THROWS_AS(oracle::brute_force_extensions(big, Semantics::complete), Error);
  CHECK_NOTHROW(oracle::brute_force_extensions(big, Semantics::complete, 13));
  CHECK_THROWS_AS(oracle::enumerate_all_graphs(5), Error);
}

TEST_CASE("graph enumeration") {
  CHECK(oracle::enumerate_all_graphs(0).size() == 1);
  CHECK(oracle::enumerate_all_graphs(1).size() == 2);
  const auto two = oracle::enumerate_all_graphs(2);
  CHECK(two.size() == 16);
  std::set<std::vector<std::pair<std::string, std::string>>> distinct;
  for (const auto& g : two) {
    std::vector<std::pair<std::string, std::string>> key;
    for (const auto& a : g.attacks()) key.emplace_back(a.from.name(), a.to.name());
    distinct.insert(key);
  }
  CHECK(distinct.size() == 16);
  CHECK(oracle::graph_from_code(2, 0b0110) == fx::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
}

TEST_CASE("random graphs are seeded") {
  CHECK(oracle::random_graph(7, 0.3, 42) == oracle::random_graph(7, 0.3, 42));
  CHECK(oracle::random_graph(5, 0.0, 3).attack_count() == 0);
  CHECK(oracle::random_graph(5, 1.0, 3).attack_count() == 25);
}

TEST_CASE("literal node enumeration matches the builder up to n = 3") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& g : oracle::enumerate_all_graphs(n)) {
      const auto dg = build_defense_graph(g);
      auto lit = oracle::literal_defense_nodes(g);
      std::vector<DefenseNode> built(dg.nodes().begin(), dg.nodes().end());
      REQUIRE(lit.size() == built.size());
      for (std::size_t i = 0; i < lit.size(); ++i) {
        CHECK(lit[i] == built[i]);
        CHECK(lit[i].kind == built[i].kind);
      }
    }
  }
}

TEST_CASE("engine agrees with brute force up to n = 3") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& g : oracle::enumerate_all_graphs(n)) {
      const auto dg = build_defense_graph(g);
      for (auto s : all_semantics) {
        CHECK(extensions(g, s) == oracle::brute_force_extensions(g, s));
        CHECK(defense_extensions(dg, s) == oracle::brute_force_defense_extensions(dg, s));
      }
    }
  }
}

TEST_CASE("root reasons agree with path search up to n = 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& g : oracle::enumerate_all_graphs(n)) {
      const auto dg = build_defense_graph(g);
      for (const auto& d : defense_extensions(dg, Semantics::complete)) {
        for (const auto& a : g.arguments()) {
          CHECK(root_reason(g, a, d) == oracle::path_root_reason(g, a, d));
        }
      }
    }
  }
  const DefenseExtension d2 = {defense("a", "c2"), defense("c2", "c3"), defense("c3", "a")};
  CHECK(oracle::path_root_reason(fx::f1(), "a", d2) == ReasonSet{"a"});
}
