#pragma once

#include "knotweed/diagram.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knotweed {

// Strands are numbered 0..strand_count-1. A label says whether a strand is
// lifted above (Level::over) or pushed below (Level::under) the reference arc.
struct LabelProblem {
    int strand_count = 0;
    std::vector<std::optional<Level>> forced;
    // (j, k): strand j passes over strand k somewhere.
    std::vector<std::pair<int, int>> dominance;
};

using Labeling = std::vector<Level>;

// Propagates forced labels through the dominance implications and defaults
// everything left open to under. nullopt means no labeling exists.
std::optional<Labeling> solve(const LabelProblem& problem);

bool satisfies(const LabelProblem& problem, const Labeling& labeling);

enum class ForcedLabel { over, under, conflict, free };

// Combine the levels a strand shows at its meetings with the reference arc.
ForcedLabel forced_label(std::span<const Level> meetings);

} // namespace knotweed
