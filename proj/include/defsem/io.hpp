#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "defsem/equivalence.hpp"

namespace defsem {

enum class GraphFormat { tgf, apx };

// Argument names must match [A-Za-z0-9_]+ and must not be EMPTY, the token
// reserved for the empty defender. Violations raise ErrorKind::invalid_name.
ArgumentGraph parse_tgf(std::string_view text);
ArgumentGraph parse_apx(std::string_view text);
ArgumentGraph parse_graph(std::string_view text, GraphFormat format);

std::string to_tgf(const ArgumentGraph& g);
std::string to_apx(const ArgumentGraph& g);

std::string to_dot(const ArgumentGraph& g);
std::string to_dot(const DefenseGraph& dg);

// Plain-text renderings used by the CLI: "{a,c}", "{<EMPTY,a>,<a,c>}".
std::string format_set(const ArgSet& s);
std::string format_set(const DefenseExtension& d);
std::string format_set(const ReasonSet& r);
std::string format_witness(const Witness& w);

// JSON documents; keys and arrays in a fixed order, no floating point.
std::string extensions_to_json(Semantics s, const std::vector<Extension>& exts);
std::string defense_extensions_to_json(Semantics s, const std::vector<DefenseExtension>& exts);
std::string reasons_to_json(const ArgId& a, ReasonKind kind, Semantics s, const ReasonBag& bag);
std::string defense_graph_to_json(const DefenseGraph& dg);
std::string verdict_to_json(const EquivalenceVerdict& v);

}  // namespace defsem
