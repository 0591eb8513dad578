#pragma once

// Operad spec files (JSON):
//   {"name": "...",
//    "generators": [{"name": "g", "symmetry": "sym" | "antisym" | {"pair": "h"} | {"swap": {"h": "1/2", ...}}}],
//    "relations": ["(x1 {g} x2) {g} x3 - x1 {g} (x2 {g} x3)", ...]}
// A pair entry declares both g and h = (12)g; h must not be listed separately.

#include <string>

#include "quadop/operad.hpp"

namespace quadop {

/// Throws InputError (including ParseError) on malformed content.
QuadOperad operad_from_spec_json(const std::string& json_text);
QuadOperad load_operad_spec(const std::string& path);

/// Catalog name, catalog name with a trailing "!" (Koszul dual), or spec-file path.
QuadOperad resolve_operad(const std::string& name_or_path);

}  // namespace quadop
