#pragma once

// Index-level extension engine shared by argument graphs and defense graphs.
// Nodes marked ineligible never join a set but still attack and are attacked.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace defsem::detail {

using Membership = std::vector<std::uint8_t>;

class AttackStructure {
 public:
  explicit AttackStructure(std::size_t n);

  void add_attack(std::size_t from, std::size_t to);
  void set_eligible(std::size_t node, bool eligible) { eligible_[node] = eligible; }

  std::size_t size() const noexcept { return n_; }
  bool attacks(std::size_t from, std::size_t to) const {
    return matrix_[from * n_ + to] != 0;
  }
  bool eligible(std::size_t node) const { return eligible_[node] != 0; }
  const std::vector<std::size_t>& attackers_of(std::size_t node) const { return in_[node]; }
  const std::vector<std::size_t>& attackees_of(std::size_t node) const { return out_[node]; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint8_t> eligible_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

bool is_conflict_free(const AttackStructure& s, const Membership& m);
bool defends(const AttackStructure& s, const Membership& m, std::size_t node);
bool is_complete(const AttackStructure& s, const Membership& m);
bool attacks_all_outside(const AttackStructure& s, const Membership& m);

// Three-valued labelling search with in/out propagation. Output order is the
// search order; callers canonicalize.
std::vector<Membership> complete_sets(const AttackStructure& s);

// Least fixpoint of the characteristic function restricted to eligible nodes.
Membership grounded_set(const AttackStructure& s);

std::vector<Membership> maximal_sets(const std::vector<Membership>& sets);

}  // namespace defsem::detail
