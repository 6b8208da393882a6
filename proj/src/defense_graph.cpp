#include "defsem/defense_graph.hpp"

#include <algorithm>
#include <limits>

#include "defsem/error.hpp"

namespace defsem {

namespace {

constexpr std::size_t no_arg = std::numeric_limits<std::size_t>::max();

// Index-level node: defender (no_arg for ø) and defendee.
struct RawNode {
  std::size_t defender;
  std::size_t defendee;
  NodeKind kind;
};

bool pair_conflict_free(const ArgumentGraph& g, std::size_t a, std::size_t b) {
  return !g.attacks(a, b) && !g.attacks(b, a) && !g.attacks(a, a) && !g.attacks(b, b);
}

bool has_path(const ArgumentGraph& g, std::size_t a, std::size_t b, bool exclude_ends) {
  for (std::size_t c : g.attackees_of(a)) {
    if (exclude_ends && (c == a || c == b)) continue;
    if (g.attacks(c, b)) return true;
  }
  return false;
}

std::vector<RawNode> raw_nodes(const ArgumentGraph& g) {
  std::vector<RawNode> out;
  const std::size_t n = g.size();
  for (std::size_t b = 0; b < n; ++b) {
    if (g.attackers_of(b).empty()) {
      out.push_back({no_arg, b, NodeKind::defense});
    } else {
      const auto& att = g.attackers_of(b);
      const bool self_involved = g.attacks(b, b) ||
          std::any_of(att.begin(), att.end(), [&](std::size_t s) { return g.attacks(s, s); });
      if (self_involved) out.push_back({no_arg, b, NodeKind::defeater});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (pair_conflict_free(g, a, b)) {
        if (has_path(g, a, b, false)) out.push_back({a, b, NodeKind::defense});
      } else if (has_path(g, a, b, true)) {
        out.push_back({a, b, NodeKind::defeater});
      }
    }
  }
  return out;
}

bool raw_attacks(const ArgumentGraph& g, const RawNode& n1, const RawNode& n2) {
  auto att = [&](std::size_t a, std::size_t b) {
    return a != no_arg && b != no_arg && g.attacks(a, b);
  };
  return att(n1.defender, n2.defender) || att(n1.defender, n2.defendee) ||
         att(n1.defendee, n2.defender) || att(n1.defendee, n2.defendee);
}

DefenseNode to_node(const ArgumentGraph& g, const RawNode& r) {
  DefenderSlot slot = r.defender == no_arg ? DefenderSlot::empty() : DefenderSlot(g.name(r.defender));
  return DefenseNode{std::move(slot), g.name(r.defendee), r.kind};
}

std::vector<DefenseNode> nodes_of_kind(const ArgumentGraph& g, NodeKind kind) {
  std::vector<DefenseNode> out;
  for (const auto& r : raw_nodes(g)) {
    if (r.kind == kind) out.push_back(to_node(g, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_defenses(std::span<const DefenseNode> nodes) {
  for (const auto& n : nodes) {
    if (n.kind != NodeKind::defense) throw Error(ErrorKind::defeater_in_input, to_string(n));
  }
}

}  // namespace

std::string to_string(const DefenderSlot& slot) {
  return slot.is_empty() ? std::string("EMPTY") : slot.arg().name();
}

DefenseNode defense(DefenderSlot defender, ArgId defendee) {
  return DefenseNode{std::move(defender), std::move(defendee), NodeKind::defense};
}

DefenseNode defeater(DefenderSlot defender, ArgId defendee) {
  return DefenseNode{std::move(defender), std::move(defendee), NodeKind::defeater};
}

std::string to_string(const DefenseNode& node) {
  const bool d = node.kind == NodeKind::defense;
  return std::string(d ? "<" : "(") + to_string(node.defender) + "," + node.defendee.name() +
         (d ? ">" : ")");
}

bool DefenseGraph::contains(const DefenseNode& node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::size_t DefenseGraph::index_of(const DefenseNode& node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || !(*it == node)) throw Error(ErrorKind::unknown_node, to_string(node));
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> DefenseGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (structure_.attacks(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t DefenseGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) count += structure_.attackees_of(i).size();
  return count;
}

std::vector<DefenseNode> enumerate_defenses(const ArgumentGraph& g) {
  return nodes_of_kind(g, NodeKind::defense);
}

std::vector<DefenseNode> enumerate_defeaters(const ArgumentGraph& g) {
  return nodes_of_kind(g, NodeKind::defeater);
}

bool node_attacks(const ArgumentGraph& g, const DefenseNode& n1, const DefenseNode& n2) {
  const auto raw = raw_nodes(g);
  auto find = [&](const DefenseNode& n) {
    for (const auto& r : raw) {
      if (to_node(g, r) == n) return r;
    }
    throw Error(ErrorKind::node_not_in_graph, to_string(n));
  };
  return raw_attacks(g, find(n1), find(n2));
}

DefenseGraph build_defense_graph(const ArgumentGraph& g) {
  auto raw = raw_nodes(g);
  std::vector<std::pair<DefenseNode, RawNode>> paired;
  paired.reserve(raw.size());
  for (const auto& r : raw) paired.emplace_back(to_node(g, r), r);
  std::sort(paired.begin(), paired.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  DefenseGraph dg;
  dg.source_ = g;
  dg.structure_ = detail::AttackStructure(paired.size());
  for (std::size_t i = 0; i < paired.size(); ++i) {
    dg.nodes_.push_back(paired[i].first);
    dg.structure_.set_eligible(i, paired[i].second.kind == NodeKind::defense);
    for (std::size_t j = 0; j < paired.size(); ++j) {
      if (raw_attacks(g, paired[i].second, paired[j].second)) dg.structure_.add_attack(i, j);
    }
  }
  return dg;
}

ArgSet Decomposition::all() const {
  return set_union(set_union(defeater_arguments, defense_arguments), defense_attackees);
}

Decomposition prop1_decompose(const ArgumentGraph& g) {
  Decomposition out;
  std::vector<ArgId> und_args;
  for (const auto& n : enumerate_defeaters(g)) {
    if (!n.defender.is_empty()) und_args.push_back(n.defender.arg());
    und_args.push_back(n.defendee);
  }
  out.defeater_arguments = ArgSet(std::move(und_args));
  out.defense_arguments = def_of(enumerate_defenses(g));
  std::vector<ArgId> hit;
  for (const auto& a : out.defense_arguments) {
    for (std::size_t j : g.attackees_of(g.index_of(a))) hit.push_back(g.name(j));
  }
  out.defense_attackees = ArgSet(std::move(hit));
  return out;
}

ArgSet defendees(std::span<const DefenseNode> nodes) {
  require_defenses(nodes);
  std::vector<ArgId> out;
  for (const auto& n : nodes) out.push_back(n.defendee);
  return ArgSet(std::move(out));
}

ArgSet defenders(std::span<const DefenseNode> nodes) {
  require_defenses(nodes);
  std::vector<ArgId> out;
  for (const auto& n : nodes) {
    if (!n.defender.is_empty()) out.push_back(n.defender.arg());
  }
  return ArgSet(std::move(out));
}

ArgSet def_of(std::span<const DefenseNode> nodes) {
  return set_union(defendees(nodes), defenders(nodes));
}

}  // namespace defsem
