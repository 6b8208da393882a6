#include "defsem/equivalence.hpp"

#include <algorithm>
#include <iterator>

#include "defsem/error.hpp"

namespace defsem {

ArgumentGraph c_kernel(const ArgumentGraph& g) {
  std::vector<Attack> kept;
  for (auto& att : g.attacks()) {
    const bool between_self_attackers =
        att.from != att.to && g.attacks(att.from, att.from) && g.attacks(att.to, att.to);
    if (!between_self_attackers) kept.push_back(std::move(att));
  }
  return ArgumentGraph({g.arguments().begin(), g.arguments().end()}, std::move(kept));
}

std::string_view to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::standard: return "standard";
    case EquivalenceKind::strong_co: return "strong";
    case EquivalenceKind::defense: return "defense";
    case EquivalenceKind::root: return "root";
    case EquivalenceKind::summarization: return "summarization";
  }
  return "standard";
}

EquivalenceKind parse_equivalence_kind(std::string_view token) {
  if (token == "standard") return EquivalenceKind::standard;
  if (token == "strong") return EquivalenceKind::strong_co;
  if (token == "defense") return EquivalenceKind::defense;
  if (token == "root") return EquivalenceKind::root;
  throw Error(ErrorKind::syntax_error, "unknown equivalence kind '" + std::string(token) + "'");
}

namespace {

// First element of the symmetric difference of two sorted ranges, tagged with
// the side (1 or 2) that holds it.
template <class T>
std::optional<std::pair<T, int>> first_difference(const std::vector<T>& a, const std::vector<T>& b) {
  for (const auto& x : a) {
    if (!std::binary_search(b.begin(), b.end(), x)) return std::pair{x, 1};
  }
  for (const auto& x : b) {
    if (!std::binary_search(a.begin(), a.end(), x)) return std::pair{x, 2};
  }
  return std::nullopt;
}

}  // namespace

EquivalenceVerdict standard_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                       Semantics s) {
  EquivalenceVerdict v{EquivalenceKind::standard, s, true, std::nullopt};
  if (auto diff = first_difference(extensions(g1, s), extensions(g2, s))) {
    v.result = false;
    v.witness = ExtensionWitness{diff->first, diff->second};
  }
  return v;
}

EquivalenceVerdict strong_equivalent_co(const ArgumentGraph& g1, const ArgumentGraph& g2) {
  EquivalenceVerdict v{EquivalenceKind::strong_co, std::nullopt, true, std::nullopt};
  const auto k1 = c_kernel(g1);
  const auto k2 = c_kernel(g2);
  if (k1 == k2) return v;
  KernelWitness w;
  w.arguments_only_in_first = set_difference(k1.argument_set(), k2.argument_set());
  w.arguments_only_in_second = set_difference(k2.argument_set(), k1.argument_set());
  const auto a1 = k1.attacks();
  const auto a2 = k2.attacks();
  std::set_difference(a1.begin(), a1.end(), a2.begin(), a2.end(),
                      std::back_inserter(w.attacks_only_in_first));
  std::set_difference(a2.begin(), a2.end(), a1.begin(), a1.end(),
                      std::back_inserter(w.attacks_only_in_second));
  v.result = false;
  v.witness = std::move(w);
  return v;
}

EquivalenceVerdict defense_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                      Semantics s) {
  EquivalenceVerdict v{EquivalenceKind::defense, s, true, std::nullopt};
  const auto d1 = defense_extensions(build_defense_graph(g1), s);
  const auto d2 = defense_extensions(build_defense_graph(g2), s);
  if (auto diff = first_difference(d1, d2)) {
    v.result = false;
    v.witness = DefenseExtensionWitness{diff->first, diff->second};
  }
  return v;
}

EquivalenceVerdict root_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                   const ArgSet& restriction, Semantics s) {
  if (restriction.empty()) throw Error(ErrorKind::empty_restriction_set, "restriction set is empty");
  for (const auto& a : restriction) {
    if (!g1.contains(a) || !g2.contains(a)) {
      throw Error(ErrorKind::argument_outside_intersection, a.name());
    }
  }
  EquivalenceVerdict v{EquivalenceKind::root, s, true, std::nullopt};
  const auto dg1 = build_defense_graph(g1);
  const auto dg2 = build_defense_graph(g2);
  const auto e1 = defense_extensions(dg1, s);
  const auto e2 = defense_extensions(dg2, s);
  // profiles[i][k] = RR(restriction[k], D_i)
  auto profiles = [&](const ArgumentGraph& g, const std::vector<DefenseExtension>& exts) {
    std::vector<std::vector<ReasonSet>> out;
    for (const auto& d : exts) {
      std::vector<ReasonSet> row;
      for (const auto& a : restriction) row.push_back(root_reason(g, a, d));
      out.push_back(std::move(row));
    }
    return out;
  };
  auto p1 = profiles(g1, e1);
  auto p2 = profiles(g2, e2);

  std::size_t k = 0;
  for (const auto& a : restriction) {
    ReasonBag b1, b2;
    for (const auto& row : p1) b1.push_back(row[k]);
    for (const auto& row : p2) b2.push_back(row[k]);
    ++k;
    if (!same_multiset(b1, b2)) {
      v.result = false;
      v.witness = ReasonWitness{a, std::move(b1), std::move(b2)};
      return v;
    }
  }

  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  if (p1 == p2) return v;
  for (const auto& row : p1) {
    const auto n1 = static_cast<std::size_t>(std::count(p1.begin(), p1.end(), row));
    const auto n2 = static_cast<std::size_t>(std::count(p2.begin(), p2.end(), row));
    if (n1 != n2) {
      v.result = false;
      v.witness = ReasonProfileWitness{{restriction.begin(), restriction.end()}, row, n1, n2};
      return v;
    }
  }
  return v;
}

EquivalenceVerdict is_summarization(const ArgumentGraph& small, const ArgumentGraph& big,
                                    Semantics s) {
  const auto small_args = small.argument_set();
  const auto big_args = big.argument_set();
  if (!small_args.is_subset_of(big_args) || small_args == big_args || small_args.empty()) {
    return {EquivalenceKind::summarization, s, false,
            ArgumentSetWitness{set_difference(small_args, big_args)}};
  }
  auto v = root_equivalent(small, big, small_args, s);
  v.kind = EquivalenceKind::summarization;
  return v;
}

}  // namespace defsem
