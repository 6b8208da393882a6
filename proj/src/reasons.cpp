#include "defsem/reasons.hpp"

#include <algorithm>
#include <cstdint>

#include "defsem/error.hpp"

namespace defsem {

ReasonSet::ReasonSet(std::initializer_list<DefenderSlot> members)
    : ReasonSet(std::vector<DefenderSlot>(members)) {}

ReasonSet::ReasonSet(std::vector<DefenderSlot> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ReasonSet::contains(const DefenderSlot& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::strong_ordering operator<=>(const ReasonSet& a, const ReasonSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

bool same_multiset(const ReasonBag& a, const ReasonBag& b) {
  if (a.size() != b.size()) return false;
  ReasonBag x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::string_view to_string(ReasonKind kind) {
  return kind == ReasonKind::direct ? "direct" : "root";
}

ReasonKind parse_reason_kind(std::string_view token) {
  if (token == "direct") return ReasonKind::direct;
  if (token == "root") return ReasonKind::root;
  throw Error(ErrorKind::syntax_error, "unknown reason kind '" + std::string(token) + "'");
}

std::vector<DefensePair> transitive_closure(const DefenseExtension& d) {
  // local universe: every argument named in d; row `n` stands for ø
  std::vector<ArgId> names;
  for (const auto& node : d) {
    if (!node.defender.is_empty()) names.push_back(node.defender.arg());
    names.push_back(node.defendee);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const std::size_t n = names.size();
  auto idx = [&](const ArgId& a) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), a) - names.begin());
  };

  std::vector<std::uint8_t> rel((n + 1) * n, 0);
  for (const auto& node : d) {
    const std::size_t from = node.defender.is_empty() ? n : idx(node.defender.arg());
    rel[from * n + idx(node.defendee)] = 1;
  }
  for (std::size_t mid = 0; mid < n; ++mid) {
    for (std::size_t from = 0; from <= n; ++from) {
      if (!rel[from * n + mid]) continue;
      for (std::size_t to = 0; to < n; ++to) {
        if (rel[mid * n + to]) rel[from * n + to] = 1;
      }
    }
  }

  std::vector<DefensePair> out;
  for (std::size_t from = 0; from <= n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (!rel[from * n + to]) continue;
      out.push_back({from == n ? DefenderSlot::empty() : DefenderSlot(names[from]), names[to]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReasonSet direct_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d) {
  if (is_initial(g, a)) return ReasonSet::unconditional();
  std::vector<DefenderSlot> out;
  for (const auto& node : d) {
    if (node.defendee == a) out.push_back(node.defender);
  }
  return ReasonSet(std::move(out));
}

ReasonSet root_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d) {
  if (is_initial(g, a)) return ReasonSet::unconditional();
  const auto closure = transitive_closure(d);
  auto in_closure = [&](const DefenderSlot& x, const ArgId& y) {
    return std::binary_search(closure.begin(), closure.end(), DefensePair{x, y});
  };
  std::vector<DefenderSlot> out;
  const bool self_defending = in_closure(a, a);
  if (self_defending) out.push_back(a);
  for (const auto& p : closure) {
    if (p.defendee != a || p.defender.is_empty()) continue;
    const ArgId& b = p.defender.arg();
    // a stands in for the rest of its own defense cycle
    if (self_defending && in_closure(a, b)) continue;
    if (in_closure(b, b) || is_initial(g, b)) out.push_back(b);
  }
  return ReasonSet(std::move(out));
}

ReasonBag reasons(const ArgumentGraph& g, const ArgId& a, ReasonKind kind, Semantics s) {
  g.index_of(a);
  ReasonBag bag;
  for (const auto& d : defense_extensions(build_defense_graph(g), s)) {
    bag.push_back(kind == ReasonKind::direct ? direct_reason(g, a, d) : root_reason(g, a, d));
  }
  return bag;
}

ReasonBag direct_reasons(const ArgumentGraph& g, const ArgId& a, Semantics s) {
  return reasons(g, a, ReasonKind::direct, s);
}

ReasonBag root_reasons(const ArgumentGraph& g, const ArgId& a, Semantics s) {
  return reasons(g, a, ReasonKind::root, s);
}

}  // namespace defsem
