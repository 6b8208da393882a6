#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "defsem/reasons.hpp"

namespace defsem {

ArgumentGraph c_kernel(const ArgumentGraph& g);

enum class EquivalenceKind { standard, strong_co, defense, root, summarization };
std::string_view to_string(EquivalenceKind kind);
// Accepts standard, strong, defense, root.
EquivalenceKind parse_equivalence_kind(std::string_view token);

// An extension produced by exactly one of the two graphs (1 or 2).
struct ExtensionWitness {
  Extension extension;
  int present_in = 1;
};

struct DefenseExtensionWitness {
  DefenseExtension extension;
  int present_in = 1;
};

// Difference between the two c-kernels.
struct KernelWitness {
  ArgSet arguments_only_in_first;
  ArgSet arguments_only_in_second;
  std::vector<Attack> attacks_only_in_first;
  std::vector<Attack> attacks_only_in_second;
};

struct ReasonWitness {
  ArgId argument;
  ReasonBag first;
  ReasonBag second;
};

// Every per-argument bag matches, but no pairing of extensions does. `profile`
// lists RR(a, D) for each of `arguments` for one extension D.
struct ReasonProfileWitness {
  std::vector<ArgId> arguments;
  std::vector<ReasonSet> profile;
  std::size_t in_first = 0;
  std::size_t in_second = 0;
};

// The summary's arguments are not a proper subset of the full graph's.
// `missing_from_full` is empty when the two argument sets coincide.
struct ArgumentSetWitness {
  ArgSet missing_from_full;
};

using Witness = std::variant<ExtensionWitness, DefenseExtensionWitness, KernelWitness,
                             ReasonWitness, ReasonProfileWitness, ArgumentSetWitness>;

struct EquivalenceVerdict {
  EquivalenceKind kind = EquivalenceKind::standard;
  std::optional<Semantics> semantics;
  bool result = false;
  std::optional<Witness> witness;  // present iff result is false
};

EquivalenceVerdict standard_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                       Semantics s);
EquivalenceVerdict strong_equivalent_co(const ArgumentGraph& g1, const ArgumentGraph& g2);
EquivalenceVerdict defense_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                      Semantics s);
// True iff some bijection between the two sets of defense extensions preserves
// RR(a, D) for every a in the restriction. Throws ErrorKind::empty_restriction_set
// or ErrorKind::argument_outside_intersection.
EquivalenceVerdict root_equivalent(const ArgumentGraph& g1, const ArgumentGraph& g2,
                                   const ArgSet& restriction, Semantics s);
EquivalenceVerdict is_summarization(const ArgumentGraph& small, const ArgumentGraph& big,
                                    Semantics s);

}  // namespace defsem
