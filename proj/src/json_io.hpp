#pragma once

#include "fock.hpp"

#include <string>

namespace srur::json_io {

/// Reads a two-mode state from JSON:
///   { "mode_dims": [d1, d2],
///     "entries": [[i, j, k, l, re, im], ...] }
/// where an entry sets rho[(i,k),(j,l)] = re + i im; unlisted entries are
/// zero.  Validates hermiticity and unit trace (1e-6), then renormalizes.
TwoModeState load_state(const std::string& path);
TwoModeState parse_state(const std::string& json_text);

/// Writes a state in the same schema (used by tests and tooling).
void save_state(const TwoModeState& s, const std::string& path);

}  // namespace srur::json_io
