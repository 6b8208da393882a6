#pragma once

// Named example graphs shared by the tests.

#include <utility>
#include <vector>

#include "defsem/graph.hpp"

namespace defsem::fixtures {

inline ArgumentGraph make(std::vector<ArgId> args, std::vector<std::pair<const char*, const char*>> atts) {
  std::vector<Attack> attacks;
  for (auto [from, to] : atts) attacks.push_back({from, to});
  return ArgumentGraph(std::move(args), std::move(attacks));
}

// 6-cycle a -> c1 -> c2 -> b -> c3 -> c4 -> a
inline ArgumentGraph f1() {
  return make({"a", "b", "c1", "c2", "c3", "c4"},
              {{"a", "c1"}, {"c1", "c2"}, {"c2", "b"}, {"b", "c3"}, {"c3", "c4"}, {"c4", "a"}});
}
inline ArgumentGraph f2() { return make({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }
inline ArgumentGraph f3() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline ArgumentGraph f4() { return make({"a", "b", "c"}, {{"a", "b"}}); }
inline ArgumentGraph f5() {
  return make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}
inline ArgumentGraph f6() {
  return make({"a1", "a2", "a3", "a4", "a5", "a6"},
              {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a6"}});
}
inline ArgumentGraph f7() {
  return make({"a7", "a8", "a9", "a10"},
              {{"a7", "a8"}, {"a8", "a9"}, {"a10", "a9"}, {"a10", "a10"}});
}
inline ArgumentGraph f8() {
  return make({"a11", "a12", "a13", "a14", "a15"},
              {{"a11", "a12"}, {"a12", "a13"}, {"a14", "a14"}, {"a14", "a15"}, {"a15", "a13"}});
}
inline ArgumentGraph f9() {
  return make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "b"}, {"b", "c"}, {"c", "d"}});
}
inline ArgumentGraph f10() {
  return make({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "a"}});
}
inline ArgumentGraph f11() {
  return make({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "d"}, {"b", "c"}, {"d", "c"}});
}
inline ArgumentGraph f12() {
  return make({"a", "b", "c", "d", "e", "f", "g"},
              {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"e", "f"}, {"f", "g"}, {"g", "c"}});
}
inline ArgumentGraph f13_summary() {
  return make({"e1", "e2", "e3", "o"}, {{"e1", "o"}, {"e2", "o"}, {"o", "e3"}});
}
inline ArgumentGraph f13_full() {
  return make({"e1", "e2", "e3", "o", "a1", "a2", "b1", "b2"},
              {{"e1", "a1"}, {"a1", "a2"}, {"a2", "o"}, {"e2", "b1"}, {"b1", "b2"}, {"b2", "o"},
               {"o", "e3"}});
}
inline ArgumentGraph self_attacker() { return make({"a"}, {{"a", "a"}}); }

}  // namespace defsem::fixtures
