#include "defsem/verify.hpp"

#include <algorithm>

#include "defsem/defense_semantics.hpp"
#include "defsem/equivalence.hpp"

#ifdef DEFSEM_HAVE_OPENMP
#include <omp.h>
#endif

namespace defsem {

namespace {

template <class T>
bool contains_sorted(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool coverage_holds(const ArgumentGraph& g, const DefenseExtension& d) {
  const ArgSet members = def_of(d);
  std::vector<std::size_t> idx;
  for (const auto& a : members) idx.push_back(g.index_of(a));
  auto countered = [&](std::size_t gamma) {
    return std::any_of(idx.begin(), idx.end(), [&](std::size_t m) { return g.attacks(m, gamma); });
  };
  for (const auto& node : d) {
    std::vector<std::size_t> targets{g.index_of(node.defendee)};
    if (!node.defender.is_empty()) targets.push_back(g.index_of(node.defender.arg()));
    for (std::size_t t : targets) {
      for (std::size_t gamma : g.attackers_of(t)) {
        if (!countered(gamma)) return false;
      }
    }
  }
  return true;
}

SemanticsChecks check_semantics(const ArgumentGraph& g, const DefenseGraph& dg, Semantics s) {
  SemanticsChecks c;
  const auto report = correspondence_check(g, s);
  c.d_map = report.d_map_holds;
  c.def_map = report.def_map_holds;
  for (const auto& d : report.defense_extensions) {
    if (!contains_sorted(report.argument_extensions, def_of(d))) c.soundness = false;
    if (!coverage_holds(g, d)) c.coverage = false;
    for (const auto& n : d) {
      if (dg.nodes()[dg.index_of(n)].kind != NodeKind::defense) c.defenses_only = false;
    }
  }
  for (const auto& e : report.argument_extensions) {
    if (!contains_sorted(report.defense_extensions, d_of_extension(g, e))) c.completeness = false;
  }
  return c;
}

}  // namespace

bool GraphChecks::all_pass() const {
  const auto flat = flatten(*this);
  return std::all_of(flat.begin(), flat.end(), [](bool b) { return b; });
}

GraphChecks check_graph(const ArgumentGraph& g) {
  GraphChecks c;
  const auto dg = build_defense_graph(g);
  for (std::size_t i = 0; i < all_semantics.size(); ++i) {
    c.by_semantics[i] = check_semantics(g, dg, all_semantics[i]);
  }

  const auto co = complete_extensions(g);
  const auto dco = defense_extensions(dg, Semantics::complete);
  for (const auto& e : co) {
    if (def_of(d_of_extension(g, e)) != e) c.round_trips = false;
  }
  for (const auto& d : dco) {
    if (d_of_extension(g, def_of(d)) != d) c.round_trips = false;
  }

  c.decomposition = prop1_decompose(g).all() == g.argument_set();

  const auto defs = enumerate_defenses(g);
  const auto dods = enumerate_defeaters(g);
  for (const auto& n : defs) {
    if (std::binary_search(dods.begin(), dods.end(), n)) c.node_kinds = false;
    if (n.defender.is_empty() && !is_initial(g, n.defendee)) c.node_kinds = false;
  }
  for (const auto& n : dods) {
    if (n.defender.is_empty() && is_initial(g, n.defendee)) c.node_kinds = false;
  }

  const auto kernel = c_kernel(g);
  c.kernel_defense = defense_extensions(build_defense_graph(kernel), Semantics::complete) == dco;
  c.kernel_complete = complete_extensions(kernel) == co;

  const auto gr = defense_extensions(dg, Semantics::grounded);
  c.grounded_unique = gr.size() == 1 && !dco.empty() &&
                      std::all_of(dco.begin(), dco.end(), [&](const DefenseExtension& d) {
                        return std::includes(d.begin(), d.end(), gr[0].begin(), gr[0].end());
                      }) &&
                      contains_sorted(dco, gr[0]) && !co.empty() &&
                      contains_sorted(co, grounded_extension(g)) &&
                      std::all_of(co.begin(), co.end(), [&](const Extension& e) {
                        return grounded_extension(g).is_subset_of(e);
                      });
  return c;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (Semantics s : all_semantics) {
    const std::string tag = std::string(":") + std::string(to_string(s));
    for (const char* base : {"d-map", "def-map", "soundness", "completeness", "coverage",
                             "defenses-only"}) {
      out.push_back(base + tag);
    }
  }
  for (const char* base : {"round-trips", "decomposition", "node-kinds", "kernel-defense",
                           "kernel-complete", "grounded-unique"}) {
    out.emplace_back(base);
  }
  return out;
}

std::vector<bool> flatten(const GraphChecks& c) {
  std::vector<bool> out;
  for (const auto& s : c.by_semantics) {
    out.insert(out.end(), {s.d_map, s.def_map, s.soundness, s.completeness, s.coverage,
                           s.defenses_only});
  }
  out.insert(out.end(), {c.round_trips, c.decomposition, c.node_kinds, c.kernel_defense,
                         c.kernel_complete, c.grounded_unique});
  return out;
}

SweepSummary sweep(std::span<const ArgumentGraph> corpus, Execution exec) {
  const std::size_t checks = check_names().size();
  std::vector<std::vector<bool>> results(corpus.size());
  const auto count = static_cast<std::ptrdiff_t>(corpus.size());

  if (exec == Execution::parallel) {
#ifdef DEFSEM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = flatten(check_graph(corpus[static_cast<std::size_t>(i)]));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = flatten(check_graph(corpus[static_cast<std::size_t>(i)]));
    }
  }

  SweepSummary summary;
  summary.graphs = corpus.size();
  summary.failures.assign(checks, 0);
  summary.first_failure.assign(checks, -1);
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t k = 0; k < checks; ++k) {
      if (results[i][k]) continue;
      if (summary.failures[k]++ == 0) summary.first_failure[k] = static_cast<std::ptrdiff_t>(i);
    }
  }
  return summary;
}

}  // namespace defsem
