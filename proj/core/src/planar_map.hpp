#pragma once

#include "knotweed/diagram.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace knotweed::detail {

// Mutable rotation system used for surgery. Crossings may temporarily lose
// darts; anything left 2-valent is dissolved into a plain strand by finish().
class PlanarMap {
public:
    static constexpr DartId kNone = -1;
    static constexpr DartId kFreeA = -2; // tail end of a cut arc
    static constexpr DartId kFreeB = -3; // head end of a cut arc

    explicit PlanarMap(const Diagram& d);

    int crossing_count() const { return static_cast<int>(over_axis_.size()); }
    DartId partner(DartId d) const { return link_[d]; }
    bool removed(DartId d) const { return removed_[d] != 0; }
    bool incoming(DartId d) const { return incoming_[d] != 0; }

    void link(DartId a, DartId b);
    // Forget one dart entirely; its old partner is left for the caller to relink.
    void drop_dart(DartId d);

    // Remove the strand through the given edges. For an open cut the tail dart
    // of edges.front() and the head dart of edges.back() stay behind as free
    // ends; otherwise every dart of every listed edge goes.
    void remove_edges(const std::vector<DartId>& edges, bool open_cut);

    // Put a new crossing on the edge (d, partner(d)). The new strand crosses
    // from the face left of d when from_left holds. Returns {in, out} darts of
    // the new strand.
    std::pair<DartId, DartId> split_edge(DartId d, bool from_left, Level level);

    // Replace crossing x by two strands joining the given dart pairs.
    void smooth(CrossingId x, std::pair<DartId, DartId> first, std::pair<DartId, DartId> second);

    // Attach the free ends: free_a -> in, out -> free_b.
    void connect_free_ends(DartId in, DartId out);
    void join_free_ends();

    Diagram finish();

    int extra_loops = 0;

private:
    std::vector<DartId> link_;
    std::vector<std::uint8_t> removed_;
    std::vector<std::uint8_t> incoming_;
    std::vector<std::uint8_t> over_axis_; // 0 or 1: parity of the over slots
    std::vector<std::pair<DartId, DartId>> smoothing_;
    std::vector<std::uint8_t> smoothed_;
    bool pending_ends_ = false;
    DartId pending_in_ = kNone, pending_out_ = kNone;
    bool pending_join_ = false;

    void dissolve(DartId p, DartId q, bool& ends_met);
};

} // namespace knotweed::detail
