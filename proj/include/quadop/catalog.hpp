#pragma once

// Built-in operads. Textual entries are parsed from their defining identities;
// derived entries are computed from their recipe on first use and cached.

#include <string>
#include <vector>

#include "quadop/operad.hpp"

namespace quadop {

/// Throws InputError for an unknown name. Thread-safe.
QuadOperad catalog(const std::string& name);

bool in_catalog(const std::string& name);

/// Com, Lie, As, Pois, Nov, NP, GD, Alt, Perm, Zinb.
const std::vector<std::string>& textual_catalog_names();
/// Leib, preLie, diAs, preAs, diNov, postLie, ComTriAs.
const std::vector<std::string>& derived_catalog_names();
std::vector<std::string> catalog_names();

}  // namespace quadop
