#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "defsem/graph.hpp"
#include "defsem/labelling.hpp"

namespace defsem {

/// Defender position of a defense: an argument, or the empty marker ø.
/// The empty marker orders before every argument.
class DefenderSlot {
 public:
  static DefenderSlot empty() { return DefenderSlot(); }
  DefenderSlot(ArgId arg) : arg_(std::move(arg)) {}
  DefenderSlot(const char* name) : arg_(ArgId(name)) {}

  bool is_empty() const noexcept { return !arg_.has_value(); }
  const ArgId& arg() const { return *arg_; }

  friend bool operator==(const DefenderSlot&, const DefenderSlot&) = default;
  friend auto operator<=>(const DefenderSlot&, const DefenderSlot&) = default;

 private:
  DefenderSlot() = default;
  std::optional<ArgId> arg_;
};

std::string to_string(const DefenderSlot& slot);

enum class NodeKind { defense, defeater };

/// A node [x, b] of a defense graph. Identity is the (defender, defendee)
/// pair; `kind` is derived from the source graph.
struct DefenseNode {
  DefenderSlot defender;
  ArgId defendee;
  NodeKind kind = NodeKind::defense;

  friend bool operator==(const DefenseNode& a, const DefenseNode& b) {
    return a.defender == b.defender && a.defendee == b.defendee;
  }
  friend auto operator<=>(const DefenseNode& a, const DefenseNode& b) {
    if (auto c = a.defender <=> b.defender; c != 0) return c;
    return a.defendee <=> b.defendee;
  }
};

DefenseNode defense(DefenderSlot defender, ArgId defendee);
DefenseNode defeater(DefenderSlot defender, ArgId defendee);

// "<x,b>" for defenses, "(x,b)" for defeaters, ø written as EMPTY.
std::string to_string(const DefenseNode& node);

class DefenseGraph {
 public:
  DefenseGraph() = default;

  const ArgumentGraph& source() const noexcept { return source_; }
  std::span<const DefenseNode> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(const DefenseNode& node) const;
  // Throws ErrorKind::unknown_node.
  std::size_t index_of(const DefenseNode& node) const;

  bool attacks(std::size_t from, std::size_t to) const {
    return structure_.attacks(from, to);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  const detail::AttackStructure& structure() const noexcept { return structure_; }

 private:
  friend DefenseGraph build_defense_graph(const ArgumentGraph& g);

  ArgumentGraph source_;
  std::vector<DefenseNode> nodes_;
  detail::AttackStructure structure_{0};
};

std::vector<DefenseNode> enumerate_defenses(const ArgumentGraph& g);
std::vector<DefenseNode> enumerate_defeaters(const ArgumentGraph& g);

// Attack between two nodes of dgn(g). The empty marker attacks nothing and is
// attacked by nothing. Throws ErrorKind::node_not_in_graph.
bool node_attacks(const ArgumentGraph& g, const DefenseNode& n1, const DefenseNode& n2);

DefenseGraph build_defense_graph(const ArgumentGraph& g);

struct Decomposition {
  ArgSet defeater_arguments;   // arg(und)
  ArgSet defense_arguments;    // def(nmd)
  ArgSet defense_attackees;    // attacked by def(nmd)

  ArgSet all() const;
};

Decomposition prop1_decompose(const ArgumentGraph& g);

// Inputs must contain defenses only (ErrorKind::defeater_in_input).
ArgSet defendees(std::span<const DefenseNode> nodes);
ArgSet defenders(std::span<const DefenseNode> nodes);
ArgSet def_of(std::span<const DefenseNode> nodes);

}  // namespace defsem
