#pragma once

// Per-graph property checks and corpus sweeps. The sweep has an OpenMP kernel
// and a serial reference that must produce identical summaries.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "defsem/graph.hpp"
#include "defsem/semantics.hpp"

namespace defsem {

struct SemanticsChecks {
  bool d_map = true;        // d(sigma(F)) = Sigma(DG(F))
  bool def_map = true;      // sigma(F) = def(Sigma(DG(F)))
  bool soundness = true;    // def(D) in sigma(F) for every D in Sigma(DG(F))
  bool completeness = true; // d(E) in Sigma(DG(F)) for every E in sigma(F)
  bool coverage = true;       // def(D) counter-attacks every attacker of members
  bool defenses_only = true;
};

struct GraphChecks {
  std::array<SemanticsChecks, 4> by_semantics{};  // indexed like all_semantics
  bool round_trips = true;        // def(d(E)) = E, d(def(D)) = D under complete
  bool decomposition = true;      // arg(und) u def(nmd) u attackees = AR
  bool node_kinds = true;         // defenses/defeaters disjoint, ø-node conditions
  bool kernel_defense = true;     // CO(DG(F)) = CO(DG(F^ck))
  bool kernel_complete = true;    // co(F) = co(F^ck)
  bool grounded_unique = true;

  const SemanticsChecks& at(Semantics s) const { return by_semantics[static_cast<std::size_t>(s)]; }
  bool all_pass() const;
};

GraphChecks check_graph(const ArgumentGraph& g);

std::vector<std::string> check_names();
// Flattened pass/fail vector in check_names() order.
std::vector<bool> flatten(const GraphChecks& c);

struct SweepSummary {
  std::size_t graphs = 0;
  std::vector<std::size_t> failures;          // per check_names() entry
  std::vector<std::ptrdiff_t> first_failure;  // corpus index or -1

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

enum class Execution { serial, parallel };

SweepSummary sweep(std::span<const ArgumentGraph> corpus, Execution exec);

}  // namespace defsem
