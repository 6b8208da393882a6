#include "defsem/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "defsem/error.hpp"

namespace defsem::oracle {

namespace {

using Mask = std::uint64_t;

bool in(Mask m, std::size_t i) { return (m >> i) & 1U; }

// Generic literal checks over an explicit relation `att(i, j)` on `n` items,
// of which only those in `candidates` may be members.
template <class Att>
struct Literal {
  std::size_t n;
  Att att;

  bool conflict_free(Mask m) const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (in(m, i) && in(m, j) && att(i, j)) return false;
    return true;
  }
  bool defended(Mask m, std::size_t x) const {
    for (std::size_t y = 0; y < n; ++y) {
      if (!att(y, x)) continue;
      bool answered = false;
      for (std::size_t z = 0; z < n; ++z)
        if (in(m, z) && att(z, y)) answered = true;
      if (!answered) return false;
    }
    return true;
  }
  bool admissible(Mask m) const {
    if (!conflict_free(m)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (in(m, i) && !defended(m, i)) return false;
    return true;
  }
  bool complete(Mask m, Mask candidates) const {
    if (!admissible(m)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (in(candidates, i) && !in(m, i) && defended(m, i)) return false;
    return true;
  }
  bool stable(Mask m) const {
    if (!conflict_free(m)) return false;
    for (std::size_t x = 0; x < n; ++x) {
      if (in(m, x)) continue;
      bool hit = false;
      for (std::size_t z = 0; z < n; ++z)
        if (in(m, z) && att(z, x)) hit = true;
      if (!hit) return false;
    }
    return true;
  }
};

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

template <class Att>
std::vector<Mask> solve(const Literal<Att>& lit, const std::vector<Mask>& members, Mask candidates,
                        Semantics s) {
  std::vector<Mask> complete, out;
  for (Mask m : members)
    if (lit.complete(m, candidates)) complete.push_back(m);
  switch (s) {
    case Semantics::complete:
      return complete;
    case Semantics::grounded:
      for (Mask m : complete)
        if (std::all_of(complete.begin(), complete.end(), [&](Mask o) { return subset(m, o); }))
          out.push_back(m);
      return out;
    case Semantics::preferred:
      for (Mask m : complete)
        if (std::none_of(complete.begin(), complete.end(),
                         [&](Mask o) { return o != m && subset(m, o); }))
          out.push_back(m);
      return out;
    case Semantics::stable:
      for (Mask m : members)
        if (lit.stable(m)) out.push_back(m);
      return out;
  }
  return out;
}

std::string nth_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

}  // namespace

std::vector<Extension> brute_force_extensions(const ArgumentGraph& g, Semantics s, std::size_t bound) {
  const std::size_t n = g.size();
  if (n > bound) throw Error(ErrorKind::too_large, std::to_string(n) + " arguments");
  auto att = [&](std::size_t i, std::size_t j) { return g.attacks(i, j); };
  Literal<decltype(att)> lit{n, att};
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  const Mask everyone = (Mask{1} << n) - 1;

  std::vector<Extension> out;
  for (Mask m : solve(lit, all, everyone, s)) {
    std::vector<ArgId> members;
    for (std::size_t i = 0; i < n; ++i)
      if (in(m, i)) members.push_back(g.name(i));
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DefenseExtension> brute_force_defense_extensions(const DefenseGraph& dg, Semantics s,
                                                             std::size_t bound) {
  const auto nodes = dg.nodes();
  std::vector<std::size_t> defenses;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind == NodeKind::defense) defenses.push_back(i);
  if (defenses.size() > bound) {
    throw Error(ErrorKind::too_large, std::to_string(defenses.size()) + " defenses");
  }
  if (nodes.size() > 64) throw Error(ErrorKind::too_large, std::to_string(nodes.size()) + " nodes");

  auto att = [&](std::size_t i, std::size_t j) { return dg.attacks(i, j); };
  Literal<decltype(att)> lit{nodes.size(), att};
  Mask candidates = 0;
  for (std::size_t i : defenses) candidates |= Mask{1} << i;
  std::vector<Mask> members;
  for (Mask pick = 0; pick < (Mask{1} << defenses.size()); ++pick) {
    Mask m = 0;
    for (std::size_t k = 0; k < defenses.size(); ++k)
      if (in(pick, k)) m |= Mask{1} << defenses[k];
    members.push_back(m);
  }

  std::vector<DefenseExtension> out;
  for (Mask m : solve(lit, members, candidates, s)) {
    std::vector<DefenseNode> chosen;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (in(m, i)) chosen.push_back(nodes[i]);
    out.emplace_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DefenseNode> literal_defense_nodes(const ArgumentGraph& g) {
  const auto args = g.arguments();
  auto att = [&](const ArgId& a, const ArgId& b) { return g.attacks(a, b); };
  auto conflict_free = [&](const ArgId& a, const ArgId& b) {
    return !att(a, a) && !att(a, b) && !att(b, a) && !att(b, b);
  };
  auto initial = [&](const ArgId& b) {
    return std::none_of(args.begin(), args.end(), [&](const ArgId& x) { return att(x, b); });
  };
  std::vector<DefenseNode> out;
  for (const auto& a : args) {
    for (const auto& b : args) {
      bool any_gamma = false, outer_gamma = false;
      for (const auto& c : args) {
        if (att(a, c) && att(c, b)) {
          any_gamma = true;
          if (c != a && c != b) outer_gamma = true;
        }
      }
      if (conflict_free(a, b) && any_gamma) out.push_back(defense(a, b));
      if (!conflict_free(a, b) && outer_gamma) out.push_back(defeater(a, b));
    }
  }
  for (const auto& b : args) {
    if (initial(b)) out.push_back(defense(DefenderSlot::empty(), b));
    bool tainted = att(b, b);
    for (const auto& x : args)
      if (att(x, x) && att(x, b)) tainted = true;
    if (tainted) out.push_back(defeater(DefenderSlot::empty(), b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReasonSet path_root_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d) {
  if (attackers(g, a).empty()) return ReasonSet({DefenderSlot::empty()});
  std::map<ArgId, std::vector<ArgId>> next;
  for (const auto& node : d) {
    if (!node.defender.is_empty()) next[node.defender.arg()].push_back(node.defendee);
  }
  // non-empty path from x to y
  auto reaches = [&](const ArgId& x, const ArgId& y) {
    std::set<ArgId> seen;
    std::vector<ArgId> stack = {x};
    while (!stack.empty()) {
      const ArgId cur = stack.back();
      stack.pop_back();
      for (const auto& z : next[cur]) {
        if (z == y) return true;
        if (seen.insert(z).second) stack.push_back(z);
      }
    }
    return false;
  };
  const bool cyclic = reaches(a, a);
  std::vector<DefenderSlot> out;
  if (cyclic) out.emplace_back(a);
  for (const auto& b : g.arguments()) {
    if (b == a || !reaches(b, a)) continue;
    if (cyclic && reaches(a, b)) continue;
    if (reaches(b, b) || attackers(g, b).empty()) out.emplace_back(b);
  }
  return ReasonSet(std::move(out));
}

ArgumentGraph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<ArgId> args;
  for (std::size_t i = 0; i < n; ++i) args.emplace_back(nth_name(i));
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1U) attacks.push_back({args[i], args[j]});
  return ArgumentGraph(std::move(args), std::move(attacks));
}

std::vector<ArgumentGraph> enumerate_all_graphs(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::too_large, "exhaustive enumeration needs n <= 4");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<ArgumentGraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) out.push_back(graph_from_code(n, code));
  return out;
}

ArgumentGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<ArgId> args;
  for (std::size_t i = 0; i < n; ++i) args.emplace_back(nth_name(i));
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge(rng)) attacks.push_back({args[i], args[j]});
  return ArgumentGraph(std::move(args), std::move(attacks));
}

}  // namespace defsem::oracle
