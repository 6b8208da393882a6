#include <doctest.h>

#include "defsem/equivalence.hpp"
#include "defsem/error.hpp"
#include "fixtures.hpp"

using namespace defsem;
namespace fx = defsem::fixtures;

TEST_CASE("c-kernel") {
  const auto g = fx::make({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}});
  CHECK(c_kernel(g) == fx::make({"a", "b"}, {{"a", "a"}, {"b", "b"}}));
  CHECK(c_kernel(fx::f3()) == fx::f3());
  CHECK(c_kernel(fx::f11()) == fx::f11());
  CHECK_FALSE(c_kernel(fx::f3()) == c_kernel(fx::f11()));
}

TEST_CASE("standard equivalence") {
  CHECK(standard_equivalent(fx::f3(), fx::f4(), Semantics::complete).result);
  const auto v = standard_equivalent(fx::f1(), fx::f2(), Semantics::complete);
  CHECK_FALSE(v.result);
  CHECK(v.witness.has_value());
  CHECK(standard_equivalent(fx::f12(), fx::f12(), Semantics::stable).result);
}

TEST_CASE("strong equivalence under complete") {
  const auto v = strong_equivalent_co(fx::f3(), fx::f4());
  CHECK_FALSE(v.result);
  CHECK_FALSE(v.semantics.has_value());
  REQUIRE(v.witness.has_value());
  const auto& w = std::get<KernelWitness>(*v.witness);
  REQUIRE(w.attacks_only_in_first.size() == 1);
  CHECK(w.attacks_only_in_first[0].from == ArgId("b"));
  CHECK(w.attacks_only_in_first[0].to == ArgId("c"));
  CHECK(w.attacks_only_in_second.empty());
  CHECK_FALSE(strong_equivalent_co(fx::f3(), fx::f11()).result);
  CHECK(strong_equivalent_co(fx::f10(), fx::f10()).result);
}

TEST_CASE("defense equivalence") {
  CHECK(defense_equivalent(fx::f3(), fx::f11(), Semantics::complete).result);
  const auto v = defense_equivalent(fx::f3(), fx::f4(), Semantics::complete);
  CHECK_FALSE(v.result);
  CHECK(std::holds_alternative<DefenseExtensionWitness>(*v.witness));
  CHECK(defense_equivalent(fx::f6(), fx::f6(), Semantics::preferred).result);
}

TEST_CASE("root equivalence") {
  CHECK(root_equivalent(fx::f1(), fx::f2(), {"a", "b"}, Semantics::complete).result);
  const auto v = root_equivalent(fx::f3(), fx::f4(), {"a", "b", "c"}, Semantics::complete);
  CHECK_FALSE(v.result);
  const auto& w = std::get<ReasonWitness>(*v.witness);
  CHECK(w.argument == ArgId("c"));
  CHECK(w.first == ReasonBag{{"a"}});
  CHECK(w.second == ReasonBag{ReasonSet::unconditional()});
  CHECK(root_equivalent(fx::f9(), fx::f9(), fx::f9().argument_set(), Semantics::grounded).result);

  try {
    root_equivalent(fx::f1(), fx::f2(), {}, Semantics::complete);
    FAIL("expected empty-restriction-set");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_restriction_set);
  }
  try {
    root_equivalent(fx::f1(), fx::f2(), {"a", "c1"}, Semantics::complete);
    FAIL("expected argument-outside-intersection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::argument_outside_intersection);
  }
}

TEST_CASE("summarization") {
  const auto v = is_summarization(fx::f13_summary(), fx::f13_full(), Semantics::complete);
  CHECK(v.result);
  const ReasonBag e3 = {{"e1", "e2"}};
  CHECK(root_reasons(fx::f13_summary(), "e3", Semantics::complete) == e3);
  CHECK(root_reasons(fx::f13_full(), "e3", Semantics::complete) == e3);

  CHECK_FALSE(is_summarization(fx::f3(), fx::f3(), Semantics::complete).result);
  const auto w = is_summarization(fx::f4(), fx::f3(), Semantics::complete);
  CHECK_FALSE(w.result);
  CHECK(std::holds_alternative<ArgumentSetWitness>(*w.witness));
}

TEST_CASE("equivalence kind tokens") {
  CHECK(parse_equivalence_kind("strong") == EquivalenceKind::strong_co);
  CHECK(to_string(EquivalenceKind::root) == "root");
  CHECK_THROWS_AS(parse_equivalence_kind("weak"), Error);
}

TEST_CASE("root equivalence pairs extensions, not just per-argument bags") {
  // every argument has the bag [{},{},{x}] in both graphs, yet co differs
  const auto f = fx::make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "a"}, {"c", "a"}});
  const auto h = fx::make({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
  for (const auto& x : {"a", "b", "c"}) {
    CHECK(same_multiset(root_reasons(f, x, Semantics::complete),
                        root_reasons(h, x, Semantics::complete)));
  }
  const auto v = root_equivalent(f, h, f.argument_set(), Semantics::complete);
  CHECK_FALSE(v.result);
  const auto& w = std::get<ReasonProfileWitness>(*v.witness);
  CHECK(w.in_first == 1);
  CHECK(w.in_second == 0);
  CHECK_FALSE(standard_equivalent(f, h, Semantics::complete).result);
  // restricted to one argument the pairing is unconstrained
  CHECK(root_equivalent(f, h, {"a"}, Semantics::complete).result);
}
