#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "defsem/defense_graph.hpp"
#include "defsem/semantics.hpp"

namespace defsem {

/// Set of defense nodes, sorted by (defender, defendee). Never holds defeaters.
///
/// Canonical order between extensions: cardinality, then lexicographic over
/// the sorted nodes.
class DefenseExtension {
 public:
  DefenseExtension() = default;
  DefenseExtension(std::initializer_list<DefenseNode> members);
  // Throws ErrorKind::defeater_in_input.
  explicit DefenseExtension(std::vector<DefenseNode> members);

  std::span<const DefenseNode> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const DefenseNode& node) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const DefenseExtension&, const DefenseExtension&) = default;
  friend std::strong_ordering operator<=>(const DefenseExtension& a,
                                          const DefenseExtension& b);

 private:
  std::vector<DefenseNode> members_;
};

inline ArgSet def_of(const DefenseExtension& d) { return def_of(d.members()); }

// Throws ErrorKind::unknown_node.
bool d_conflict_free(const DefenseGraph& dg, const DefenseExtension& d);
// Throws ErrorKind::defeater_as_defendee or ErrorKind::unknown_node.
bool d_defends(const DefenseGraph& dg, const DefenseExtension& d, const DefenseNode& x);

std::vector<DefenseExtension> defense_extensions(const DefenseGraph& dg, Semantics s);

// d(E) = { <x,y> in nmd(g) | x in E or x = ø, y in E }.
DefenseExtension d_of_extension(const ArgumentGraph& g, const Extension& e);

/// Both sides of the two correspondence equations for one graph and semantics.
struct CorrespondenceReport {
  Semantics semantics = Semantics::complete;
  std::vector<Extension> argument_extensions;        // sigma(F)
  std::vector<DefenseExtension> defense_extensions;  // Sigma(DG(F))
  std::vector<DefenseExtension> mapped_arguments;    // d(sigma(F))
  std::vector<Extension> mapped_defenses;            // def(Sigma(DG(F)))

  bool d_map_holds = false;    // d(sigma(F)) = Sigma(DG(F))
  bool def_map_holds = false;  // sigma(F) = def(Sigma(DG(F)))
  std::optional<DefenseExtension> d_map_witness;
  std::optional<Extension> def_map_witness;

  bool holds() const { return d_map_holds && def_map_holds; }
};

CorrespondenceReport correspondence_check(const ArgumentGraph& g, Semantics s);

}  // namespace defsem
