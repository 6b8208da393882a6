#include "defsem/defense_semantics.hpp"

#include <algorithm>

#include "defsem/error.hpp"
#include "defsem/labelling.hpp"

namespace defsem {

DefenseExtension::DefenseExtension(std::initializer_list<DefenseNode> members)
    : DefenseExtension(std::vector<DefenseNode>(members)) {}

DefenseExtension::DefenseExtension(std::vector<DefenseNode> members) : members_(std::move(members)) {
  for (const auto& n : members_) {
    if (n.kind != NodeKind::defense) throw Error(ErrorKind::defeater_in_input, to_string(n));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool DefenseExtension::contains(const DefenseNode& node) const {
  return std::binary_search(members_.begin(), members_.end(), node);
}

std::strong_ordering operator<=>(const DefenseExtension& a, const DefenseExtension& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

namespace {

detail::Membership membership_of(const DefenseGraph& dg, const DefenseExtension& d) {
  detail::Membership m(dg.size(), 0);
  for (const auto& n : d) m[dg.index_of(n)] = 1;
  return m;
}

DefenseExtension to_extension(const DefenseGraph& dg, const detail::Membership& m) {
  std::vector<DefenseNode> members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) members.push_back(dg.nodes()[i]);
  }
  return DefenseExtension(std::move(members));
}

template <class T>
bool contains_sorted(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool d_conflict_free(const DefenseGraph& dg, const DefenseExtension& d) {
  return detail::is_conflict_free(dg.structure(), membership_of(dg, d));
}

bool d_defends(const DefenseGraph& dg, const DefenseExtension& d, const DefenseNode& x) {
  const std::size_t xi = dg.index_of(x);
  if (dg.nodes()[xi].kind != NodeKind::defense) {
    throw Error(ErrorKind::defeater_as_defendee, to_string(dg.nodes()[xi]));
  }
  return detail::defends(dg.structure(), membership_of(dg, d), xi);
}

std::vector<DefenseExtension> defense_extensions(const DefenseGraph& dg, Semantics s) {
  const auto& st = dg.structure();
  std::vector<detail::Membership> sets;
  switch (s) {
    case Semantics::complete:
      sets = detail::complete_sets(st);
      break;
    case Semantics::grounded:
      sets.push_back(detail::grounded_set(st));
      break;
    case Semantics::preferred:
      sets = detail::maximal_sets(detail::complete_sets(st));
      break;
    case Semantics::stable:
      // stable sets (attacking every outside node, defeaters included) are complete
      for (auto& m : detail::complete_sets(st)) {
        if (detail::attacks_all_outside(st, m)) sets.push_back(std::move(m));
      }
      break;
  }
  std::vector<DefenseExtension> out;
  out.reserve(sets.size());
  for (const auto& m : sets) out.push_back(to_extension(dg, m));
  std::sort(out.begin(), out.end());
  return out;
}

DefenseExtension d_of_extension(const ArgumentGraph& g, const Extension& e) {
  for (const auto& a : e) g.index_of(a);
  std::vector<DefenseNode> members;
  for (auto& n : enumerate_defenses(g)) {
    const bool defender_ok = n.defender.is_empty() || e.contains(n.defender.arg());
    if (defender_ok && e.contains(n.defendee)) members.push_back(std::move(n));
  }
  return DefenseExtension(std::move(members));
}

CorrespondenceReport correspondence_check(const ArgumentGraph& g, Semantics s) {
  CorrespondenceReport r;
  r.semantics = s;
  r.argument_extensions = extensions(g, s);
  r.defense_extensions = defense_extensions(build_defense_graph(g), s);

  for (const auto& e : r.argument_extensions) r.mapped_arguments.push_back(d_of_extension(g, e));
  std::sort(r.mapped_arguments.begin(), r.mapped_arguments.end());
  r.mapped_arguments.erase(std::unique(r.mapped_arguments.begin(), r.mapped_arguments.end()),
                           r.mapped_arguments.end());
  for (const auto& d : r.defense_extensions) r.mapped_defenses.push_back(def_of(d));
  std::sort(r.mapped_defenses.begin(), r.mapped_defenses.end());
  r.mapped_defenses.erase(std::unique(r.mapped_defenses.begin(), r.mapped_defenses.end()),
                          r.mapped_defenses.end());

  r.d_map_holds = r.mapped_arguments == r.defense_extensions;
  if (!r.d_map_holds) {
    for (const auto& d : r.mapped_arguments) {
      if (!contains_sorted(r.defense_extensions, d)) { r.d_map_witness = d; break; }
    }
    if (!r.d_map_witness) {
      for (const auto& d : r.defense_extensions) {
        if (!contains_sorted(r.mapped_arguments, d)) { r.d_map_witness = d; break; }
      }
    }
  }
  r.def_map_holds = r.mapped_defenses == r.argument_extensions;
  if (!r.def_map_holds) {
    for (const auto& e : r.argument_extensions) {
      if (!contains_sorted(r.mapped_defenses, e)) { r.def_map_witness = e; break; }
    }
    if (!r.def_map_witness) {
      for (const auto& e : r.mapped_defenses) {
        if (!contains_sorted(r.argument_extensions, e)) { r.def_map_witness = e; break; }
      }
    }
  }
  return r;
}

}  // namespace defsem
