#pragma once

#include "knotweed/diagram.hpp"
#include "knotweed/labeling.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace knotweed::detail {

// A maximal run of strand inside a region.
struct RegionStrand {
    std::vector<DartId> edges; // edges lying inside, in travel order
    bool circle = false;
    // Levels of this strand where it meets the boundary (arcs only: two entries).
    std::vector<Level> end_levels;
};

struct Region {
    std::vector<std::uint8_t> face_in;
    std::vector<std::uint8_t> crossing_in; // strictly inside
    std::vector<RegionStrand> strands;
    std::vector<int> strand_of_edge; // by outgoing dart; -1 when not inside
    std::vector<std::pair<int, int>> dominance; // (over strand, under strand), one per inside crossing

    int arc_count() const;
    std::vector<FaceId> faces() const;
};

// Region cut out by a closed curve running along diagram edges, taken on the
// side that contains `seed`.
Region region_inside_curve(const Diagram& d, const FaceMap& fm, const DualGraph& g,
                           std::span<const DartId> curve_edges, FaceId seed);

// Labeling problem for a region bounded by diagram arcs: each strand must sit
// on one side of the boundary at both ends. Returns nullopt on a conflict.
std::optional<LabelProblem> boundary_label_problem(const Region& r);

// Flood fill of faces reachable from seed without crossing blocked edges.
std::vector<std::uint8_t> flood_faces(const DualGraph& g, FaceId seed, std::span<const std::uint8_t> blocked_edge);

} // namespace knotweed::detail
