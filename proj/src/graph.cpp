#include "defsem/graph.hpp"

#include <algorithm>
#include <iterator>

#include "defsem/error.hpp"

namespace defsem {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
           c == '(' || c == ')' || c == ',';
  });
}

}  // namespace

ArgId::ArgId(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) throw Error(ErrorKind::invalid_name, "'" + name_ + "'");
}

ArgSet::ArgSet(std::initializer_list<ArgId> members) : ArgSet(std::vector<ArgId>(members)) {}

ArgSet::ArgSet(std::vector<ArgId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ArgSet::contains(const ArgId& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

ArgSet set_union(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

ArgSet set_intersection(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

ArgSet set_difference(const ArgSet& a, const ArgSet& b) {
  std::vector<ArgId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ArgSet(std::move(out));
}

ArgumentGraph::ArgumentGraph(std::vector<ArgId> arguments, std::vector<Attack> attacks)
    : names_(std::move(arguments)) {
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw Error(ErrorKind::duplicate_argument, dup->name());
  }
  const std::size_t n = names_.size();
  matrix_.assign(n * n, 0);
  in_.resize(n);
  out_.resize(n);
  for (const auto& att : attacks) {
    const std::size_t from = index_of(att.from);
    const std::size_t to = index_of(att.to);
    matrix_[from * n + to] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i * n + j]) {
        out_[i].push_back(j);
        in_[j].push_back(i);
        ++attack_count_;
      }
    }
  }
}

std::vector<Attack> ArgumentGraph::attacks() const {
  std::vector<Attack> out;
  out.reserve(attack_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : out_[i]) out.push_back({names_[i], names_[j]});
  }
  return out;
}

bool ArgumentGraph::contains(const ArgId& a) const {
  return std::binary_search(names_.begin(), names_.end(), a);
}

std::size_t ArgumentGraph::index_of(const ArgId& a) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), a);
  if (it == names_.end() || *it != a) throw Error(ErrorKind::unknown_argument, a.name());
  return static_cast<std::size_t>(it - names_.begin());
}

bool ArgumentGraph::attacks(const ArgId& from, const ArgId& to) const {
  return attacks(index_of(from), index_of(to));
}

ArgSet attackers(const ArgumentGraph& g, const ArgId& a) {
  std::vector<ArgId> out;
  for (std::size_t i : g.attackers_of(g.index_of(a))) out.push_back(g.name(i));
  return ArgSet(std::move(out));
}

ArgSet attackees(const ArgumentGraph& g, const ArgId& a) {
  std::vector<ArgId> out;
  for (std::size_t i : g.attackees_of(g.index_of(a))) out.push_back(g.name(i));
  return ArgSet(std::move(out));
}

bool is_initial(const ArgumentGraph& g, const ArgId& a) {
  return g.attackers_of(g.index_of(a)).empty();
}

bool is_conflict_free(const ArgumentGraph& g, const ArgSet& s) {
  std::vector<std::size_t> idx;
  for (const auto& a : s) idx.push_back(g.index_of(a));
  for (std::size_t i : idx) {
    for (std::size_t j : idx) {
      if (g.attacks(i, j)) return false;
    }
  }
  return true;
}

bool set_defends(const ArgumentGraph& g, const ArgSet& s, const ArgId& a) {
  std::vector<std::size_t> idx;
  for (const auto& m : s) idx.push_back(g.index_of(m));
  for (std::size_t attacker : g.attackers_of(g.index_of(a))) {
    bool countered = std::any_of(idx.begin(), idx.end(),
                                 [&](std::size_t m) { return g.attacks(m, attacker); });
    if (!countered) return false;
  }
  return true;
}

ArgumentGraph graph_union(const ArgumentGraph& g1, const ArgumentGraph& g2) {
  ArgSet args = set_union(g1.argument_set(), g2.argument_set());
  std::vector<Attack> attacks = g1.attacks();
  auto more = g2.attacks();
  attacks.insert(attacks.end(), more.begin(), more.end());
  return ArgumentGraph({args.begin(), args.end()}, std::move(attacks));
}

}  // namespace defsem
