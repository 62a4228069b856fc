#pragma once

#include <optional>
#include <vector>

#include "trexp/types.hpp"

namespace trexp {

/// System of distinct representatives: picks rep[i] in candidates[i], all
/// distinct, by augmenting paths. nullopt if Hall's condition fails.
std::optional<std::vector<Vertex>> find_sdr(const std::vector<Mask>& candidates);

/// The lexicographically least SDR (rep[0] smallest possible, then rep[1], ...).
std::optional<std::vector<Vertex>> lex_least_sdr(const std::vector<Mask>& candidates);

}  // namespace trexp
