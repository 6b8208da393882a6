#include "defsem/labelling.hpp"

#include <algorithm>

namespace defsem::detail {

AttackStructure::AttackStructure(std::size_t n)
    : n_(n), matrix_(n * n, 0), eligible_(n, 1), in_(n), out_(n) {}

void AttackStructure::add_attack(std::size_t from, std::size_t to) {
  auto& cell = matrix_[from * n_ + to];
  if (cell) return;
  cell = 1;
  out_[from].push_back(to);
  in_[to].push_back(from);
}

bool is_conflict_free(const AttackStructure& s, const Membership& m) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!m[i]) continue;
    for (std::size_t j : s.attackees_of(i)) {
      if (m[j]) return false;
    }
  }
  return true;
}

bool defends(const AttackStructure& s, const Membership& m, std::size_t node) {
  for (std::size_t attacker : s.attackers_of(node)) {
    const auto& counter = s.attackers_of(attacker);
    if (std::none_of(counter.begin(), counter.end(), [&](std::size_t z) { return m[z] != 0; })) {
      return false;
    }
  }
  return true;
}

bool is_complete(const AttackStructure& s, const Membership& m) {
  if (!is_conflict_free(s, m)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (m[i] && !s.eligible(i)) return false;
    const bool defended = defends(s, m, i);
    if (m[i] && !defended) return false;
    if (!m[i] && s.eligible(i) && defended) return false;
  }
  return true;
}

bool attacks_all_outside(const AttackStructure& s, const Membership& m) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (m[i]) continue;
    const auto& att = s.attackers_of(i);
    if (std::none_of(att.begin(), att.end(), [&](std::size_t z) { return m[z] != 0; })) {
      return false;
    }
  }
  return true;
}

namespace {

enum Label : std::uint8_t { undec = 0, in = 1, out = 2 };

class Search {
 public:
  explicit Search(const AttackStructure& s) : s_(s) {}

  std::vector<Membership> run() {
    std::vector<std::uint8_t> labels(s_.size(), undec);
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (!s_.eligible(i) || s_.attacks(i, i)) labels[i] = out;
    }
    descend(std::move(labels));
    return std::move(found_);
  }

 private:
  // Applies forced labels until nothing changes. Returns false on a dead end.
  bool propagate(std::vector<std::uint8_t>& labels) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < s_.size(); ++x) {
        if (labels[x] == in) {
          for (std::size_t y : s_.attackers_of(x)) {
            if (labels[y] == in) return false;
            if (labels[y] == undec) { labels[y] = out; changed = true; }
            // y must remain attackable by a member
            const auto& counter = s_.attackers_of(y);
            if (std::none_of(counter.begin(), counter.end(),
                             [&](std::size_t z) { return labels[z] != out; })) {
              return false;
            }
          }
          for (std::size_t y : s_.attackees_of(x)) {
            if (labels[y] == in) return false;
            if (labels[y] == undec) { labels[y] = out; changed = true; }
          }
        } else if (s_.eligible(x) && defended_by_in(labels, x)) {
          // members only grow along a branch, so x stays defended
          if (labels[x] == out) return false;
          labels[x] = in;
          changed = true;
        }
      }
    }
    return true;
  }

  bool defended_by_in(const std::vector<std::uint8_t>& labels, std::size_t x) const {
    for (std::size_t y : s_.attackers_of(x)) {
      const auto& counter = s_.attackers_of(y);
      if (std::none_of(counter.begin(), counter.end(),
                       [&](std::size_t z) { return labels[z] == in; })) {
        return false;
      }
    }
    return true;
  }

  void descend(std::vector<std::uint8_t> labels) {
    if (!propagate(labels)) return;
    auto pick = std::find(labels.begin(), labels.end(), undec);
    if (pick == labels.end()) {
      Membership m(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) m[i] = labels[i] == in;
      if (is_complete(s_, m)) found_.push_back(std::move(m));
      return;
    }
    const auto at = static_cast<std::size_t>(pick - labels.begin());
    auto with = labels;
    with[at] = in;
    descend(std::move(with));
    labels[at] = out;
    descend(std::move(labels));
  }

  const AttackStructure& s_;
  std::vector<Membership> found_;
};

}  // namespace

std::vector<Membership> complete_sets(const AttackStructure& s) { return Search(s).run(); }

Membership grounded_set(const AttackStructure& s) {
  Membership current(s.size(), 0);
  while (true) {
    Membership next(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.eligible(i) && defends(s, current, i)) next[i] = 1;
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<Membership> maximal_sets(const std::vector<Membership>& sets) {
  auto subset = [](const Membership& a, const Membership& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) return false;
    }
    return true;
  };
  std::vector<Membership> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j) {
      if (i != j && sets[i] != sets[j] && subset(sets[i], sets[j])) maximal = false;
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace defsem::detail
