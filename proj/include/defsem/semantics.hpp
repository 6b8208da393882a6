#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "defsem/graph.hpp"

namespace defsem {

enum class Semantics { complete, grounded, preferred, stable };

inline constexpr std::array<Semantics, 4> all_semantics = {
    Semantics::complete, Semantics::grounded, Semantics::preferred,
    Semantics::stable};

std::string_view to_string(Semantics s);
// Accepts the full names and the short forms co/gr/pr/st.
// Throws ErrorKind::unknown_semantics for anything else.
Semantics parse_semantics(std::string_view token);

// All results are in canonical order (see ArgSet).
Extension grounded_extension(const ArgumentGraph& g);
std::vector<Extension> complete_extensions(const ArgumentGraph& g);
std::vector<Extension> preferred_extensions(const ArgumentGraph& g);
std::vector<Extension> stable_extensions(const ArgumentGraph& g);
std::vector<Extension> extensions(const ArgumentGraph& g, Semantics s);

}  // namespace defsem
