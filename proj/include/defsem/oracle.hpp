#pragma once

// Naive reference implementations. They read the data types only and share no
// search code with the main engine.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "defsem/defense_semantics.hpp"
#include "defsem/reasons.hpp"

namespace defsem::oracle {

inline constexpr std::size_t default_argument_bound = 12;
inline constexpr std::size_t default_defense_bound = 16;

// Throws ErrorKind::too_large above the bound.
std::vector<Extension> brute_force_extensions(const ArgumentGraph& g, Semantics s,
                                              std::size_t bound = default_argument_bound);
std::vector<DefenseExtension> brute_force_defense_extensions(
    const DefenseGraph& dg, Semantics s, std::size_t bound = default_defense_bound);

// Defenses and defeaters straight from their defining clauses, sorted.
std::vector<DefenseNode> literal_defense_nodes(const ArgumentGraph& g);

// Root reason by depth-first path search over the defense relation.
ReasonSet path_root_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d);

// All 2^(n*n) labelled digraphs on arguments a, b, c, ... (n <= 4).
// Graph number k has attack i->j iff bit (i*n + j) of k is set.
std::vector<ArgumentGraph> enumerate_all_graphs(std::size_t n);
ArgumentGraph graph_from_code(std::size_t n, std::uint64_t code);

// Deterministic random graph on n arguments with edge probability p.
ArgumentGraph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace defsem::oracle
