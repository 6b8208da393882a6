#include "defsem/semantics.hpp"

#include <algorithm>

#include "defsem/error.hpp"
#include "defsem/labelling.hpp"

namespace defsem {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::complete: return "complete";
    case Semantics::grounded: return "grounded";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
  }
  return "complete";
}

Semantics parse_semantics(std::string_view token) {
  if (token == "complete" || token == "co") return Semantics::complete;
  if (token == "grounded" || token == "gr") return Semantics::grounded;
  if (token == "preferred" || token == "pr") return Semantics::preferred;
  if (token == "stable" || token == "st") return Semantics::stable;
  throw Error(ErrorKind::unknown_semantics, std::string(token));
}

namespace {

detail::AttackStructure structure_of(const ArgumentGraph& g) {
  detail::AttackStructure s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j : g.attackees_of(i)) s.add_attack(i, j);
  }
  return s;
}

Extension to_extension(const ArgumentGraph& g, const detail::Membership& m) {
  std::vector<ArgId> members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) members.push_back(g.name(i));
  }
  return Extension(std::move(members));
}

std::vector<Extension> to_extensions(const ArgumentGraph& g,
                                     const std::vector<detail::Membership>& sets) {
  std::vector<Extension> out;
  out.reserve(sets.size());
  for (const auto& m : sets) out.push_back(to_extension(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Extension grounded_extension(const ArgumentGraph& g) {
  return to_extension(g, detail::grounded_set(structure_of(g)));
}

std::vector<Extension> complete_extensions(const ArgumentGraph& g) {
  return to_extensions(g, detail::complete_sets(structure_of(g)));
}

std::vector<Extension> preferred_extensions(const ArgumentGraph& g) {
  return to_extensions(g, detail::maximal_sets(detail::complete_sets(structure_of(g))));
}

std::vector<Extension> stable_extensions(const ArgumentGraph& g) {
  // every stable extension is complete
  const auto s = structure_of(g);
  std::vector<detail::Membership> stable;
  for (auto& m : detail::complete_sets(s)) {
    if (detail::attacks_all_outside(s, m)) stable.push_back(std::move(m));
  }
  return to_extensions(g, stable);
}

std::vector<Extension> extensions(const ArgumentGraph& g, Semantics s) {
  switch (s) {
    case Semantics::complete: return complete_extensions(g);
    case Semantics::grounded: return {grounded_extension(g)};
    case Semantics::preferred: return preferred_extensions(g);
    case Semantics::stable: return stable_extensions(g);
  }
  return {};
}

}  // namespace defsem
