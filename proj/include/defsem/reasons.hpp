#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "defsem/defense_semantics.hpp"

namespace defsem {

/// Reason for accepting an argument: a set of defenders, or exactly {ø}
/// when the argument is initial.
class ReasonSet {
 public:
  ReasonSet() = default;
  ReasonSet(std::initializer_list<DefenderSlot> members);
  explicit ReasonSet(std::vector<DefenderSlot> members);

  static ReasonSet unconditional() { return ReasonSet({DefenderSlot::empty()}); }

  std::span<const DefenderSlot> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const DefenderSlot& s) const;

  friend bool operator==(const ReasonSet&, const ReasonSet&) = default;
  friend std::strong_ordering operator<=>(const ReasonSet& a, const ReasonSet& b);

 private:
  std::vector<DefenderSlot> members_;
};

// One entry per defense extension, in canonical extension order.
using ReasonBag = std::vector<ReasonSet>;

bool same_multiset(const ReasonBag& a, const ReasonBag& b);

enum class ReasonKind { direct, root };
std::string_view to_string(ReasonKind kind);
ReasonKind parse_reason_kind(std::string_view token);

struct DefensePair {
  DefenderSlot defender;
  ArgId defendee;

  friend bool operator==(const DefensePair&, const DefensePair&) = default;
  friend auto operator<=>(const DefensePair&, const DefensePair&) = default;
};

// Closure under <x,y>,<y,z> => <x,z>; ø only ever appears as a source.
// Result is sorted.
std::vector<DefensePair> transitive_closure(const DefenseExtension& d);

ReasonSet direct_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d);
// When a defends itself through D+, the other members of that defense cycle are
// not reported separately; a represents them.
ReasonSet root_reason(const ArgumentGraph& g, const ArgId& a, const DefenseExtension& d);

ReasonBag direct_reasons(const ArgumentGraph& g, const ArgId& a, Semantics s);
ReasonBag root_reasons(const ArgumentGraph& g, const ArgId& a, Semantics s);
ReasonBag reasons(const ArgumentGraph& g, const ArgId& a, ReasonKind kind, Semantics s);

}  // namespace defsem
