#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defsem {

/// Argument identifier. Identity is by name, across graphs.
///
/// A name is a non-empty token without whitespace, parentheses or commas.
class ArgId {
 public:
  ArgId(std::string name);
  ArgId(std::string_view name) : ArgId(std::string(name)) {}
  ArgId(const char* name) : ArgId(std::string(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const ArgId&, const ArgId&) = default;
  friend auto operator<=>(const ArgId&, const ArgId&) = default;

 private:
  std::string name_;
};

/// Sorted, duplicate-free set of arguments.
///
/// Ordering between sets is canonical: by cardinality, then lexicographic
/// over the sorted member names.
class ArgSet {
 public:
  ArgSet() = default;
  ArgSet(std::initializer_list<ArgId> members);
  explicit ArgSet(std::vector<ArgId> members);

  std::span<const ArgId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const ArgId& a) const;
  bool is_subset_of(const ArgSet& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ArgSet&, const ArgSet&) = default;
  friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b);

 private:
  std::vector<ArgId> members_;
};

ArgSet set_union(const ArgSet& a, const ArgSet& b);
ArgSet set_intersection(const ArgSet& a, const ArgSet& b);
ArgSet set_difference(const ArgSet& a, const ArgSet& b);

using Extension = ArgSet;

struct Attack {
  ArgId from;
  ArgId to;

  friend bool operator==(const Attack&, const Attack&) = default;
  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Finite argument graph (arguments plus attack relation). Immutable.
///
/// Arguments are stored in lexicographic order; the position of an argument
/// in that order is its index, used by the index-level accessors.
class ArgumentGraph {
 public:
  ArgumentGraph() = default;
  ArgumentGraph(std::vector<ArgId> arguments, std::vector<Attack> attacks);

  std::size_t size() const noexcept { return names_.size(); }
  std::span<const ArgId> arguments() const noexcept { return names_; }
  ArgSet argument_set() const { return ArgSet(names_); }
  std::vector<Attack> attacks() const;
  std::size_t attack_count() const noexcept { return attack_count_; }

  bool contains(const ArgId& a) const;
  // Throws ErrorKind::unknown_argument.
  std::size_t index_of(const ArgId& a) const;
  const ArgId& name(std::size_t index) const { return names_[index]; }

  bool attacks(std::size_t from, std::size_t to) const {
    return matrix_[from * names_.size() + to] != 0;
  }
  bool attacks(const ArgId& from, const ArgId& to) const;
  std::span<const std::size_t> attackers_of(std::size_t index) const {
    return in_[index];
  }
  std::span<const std::size_t> attackees_of(std::size_t index) const {
    return out_[index];
  }

  friend bool operator==(const ArgumentGraph& a, const ArgumentGraph& b) {
    return a.names_ == b.names_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<ArgId> names_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::size_t attack_count_ = 0;
};

ArgSet attackers(const ArgumentGraph& g, const ArgId& a);
ArgSet attackees(const ArgumentGraph& g, const ArgId& a);
bool is_initial(const ArgumentGraph& g, const ArgId& a);
bool is_conflict_free(const ArgumentGraph& g, const ArgSet& s);
bool set_defends(const ArgumentGraph& g, const ArgSet& s, const ArgId& a);

ArgumentGraph graph_union(const ArgumentGraph& g1, const ArgumentGraph& g2);

}  // namespace defsem
