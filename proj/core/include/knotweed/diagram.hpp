#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotweed {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

class LabelError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

class EmbeddingError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

class PathError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

class SplitDiagramError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

class MultiComponentError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

enum class Level : std::uint8_t { under, over };

constexpr Level flip(Level l) { return l == Level::over ? Level::under : Level::over; }

// A dart is one of the four half-edges at a crossing: id = 4 * crossing + slot,
// slots numbered counter-clockwise. Slots 0 and 2 carry the under strand,
// 1 and 3 the over strand.
using DartId = int;
using CrossingId = int;
using FaceId = int;

constexpr CrossingId crossing_of(DartId d) { return d >> 2; }
constexpr int slot_of(DartId d) { return d & 3; }
constexpr DartId make_dart(CrossingId c, int slot) { return 4 * c + (slot & 3); }
constexpr DartId ccw_next(DartId d) { return (d & ~3) | ((d + 1) & 3); }
constexpr DartId ccw_prev(DartId d) { return (d & ~3) | ((d + 3) & 3); }
constexpr DartId opposite(DartId d) { return (d & ~3) | ((d + 2) & 3); }
constexpr bool on_over_axis(DartId d) { return (d & 1) != 0; }

// Immutable oriented diagram. Every crossing is stored with its incoming
// under dart in slot 0, so the outgoing under dart is slot 2 and the over
// strand enters at slot 1 or 3. Edges are named by their outgoing dart.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<DartId> pairing, std::vector<std::uint8_t> over_in, int trivial_loops);

    static Diagram unknot() { return Diagram({}, {}, 1); }

    int crossing_count() const { return static_cast<int>(over_in_.size()); }
    int dart_count() const { return static_cast<int>(pairing_.size()); }
    int trivial_loops() const { return trivial_loops_; }
    std::span<const DartId> pairing() const { return pairing_; }

    DartId partner(DartId d) const { return pairing_[d]; }
    int over_in_slot(CrossingId c) const { return over_in_[c]; }
    bool is_over(DartId d) const { return on_over_axis(d); }
    Level level(DartId d) const { return on_over_axis(d) ? Level::over : Level::under; }
    bool is_incoming(DartId d) const
    {
        int s = slot_of(d);
        return s == 0 || s == over_in_[crossing_of(d)];
    }
    // Outgoing dart of the edge that contains dart d.
    DartId edge_of(DartId d) const { return is_incoming(d) ? pairing_[d] : d; }
    DartId next_edge(DartId out) const { return opposite(pairing_[out]); }
    DartId prev_edge(DartId out) const { return pairing_[opposite(out)]; }
    CrossingId tail(DartId out) const { return crossing_of(out); }
    CrossingId head(DartId out) const { return crossing_of(pairing_[out]); }

    // +1 or -1 under the right-hand rule.
    int sign(CrossingId c) const { return over_in_[c] == 3 ? 1 : -1; }

    // Closed strands, each as its cyclic list of edges; trivial loops are not listed.
    std::vector<std::vector<DartId>> strand_cycles() const;
    int component_count() const { return static_cast<int>(strand_cycles().size()) + trivial_loops_; }
    // True when the underlying 4-valent graph (plus loops) is connected.
    bool is_connected() const;
    std::vector<DartId> edges() const;

    Diagram with_trivial_loops(int loops) const;
    Diagram mirror() const;
    Diagram reversed() const;
    // Renumber crossings: crossing c becomes perm[c].
    Diagram relabeled(std::span<const int> perm) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    std::vector<DartId> pairing_;
    std::vector<std::uint8_t> over_in_;
    int trivial_loops_ = 0;
};

struct FaceMap {
    std::vector<std::vector<DartId>> faces; // each face as its cycle of darts
    std::vector<FaceId> face_of;            // face to the left of each dart, looking outward

    int face_count() const { return static_cast<int>(faces.size()); }
    FaceId left_of(DartId edge) const { return face_of[edge]; }
    FaceId right_of(const Diagram& d, DartId edge) const { return face_of[d.partner(edge)]; }
};

FaceMap face_map(const Diagram& d);

struct DualEdge {
    DartId edge;
    FaceId left;
    FaceId right;
};

struct DualGraph {
    int node_count = 0;
    std::vector<DualEdge> edges;
    // Per face: indices into edges.
    std::vector<std::vector<int>> incident;

    FaceId other_end(int e, FaceId f) const { return edges[e].left == f ? edges[e].right : edges[e].left; }
};

DualGraph dual_graph(const Diagram& d, const FaceMap& fm);

// Injective on isomorphism classes of oriented diagrams in the oriented sphere.
using CanonicalCode = std::string;
CanonicalCode canonical_code(const Diagram& d);

// A walk along the strands. For an open arc the ends sit at the midpoints of
// edges.front() and edges.back(); a closed arc starts and ends at the tail of
// edges.front().
struct ArcRef {
    std::vector<DartId> edges;
    bool closed = false;

    std::vector<CrossingId> passes(const Diagram& d) const;
    friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

// Maximal over- (or under-) arcs: runs of consecutive over (under) passes.
// Only arcs with at least one crossing are returned.
std::vector<ArcRef> maximal_arcs(const Diagram& d, Level level);

// A path in the dual graph: starts in face `from`, crosses each edge in turn.
struct DualPath {
    FaceId from = 0;
    FaceId to = 0;
    std::vector<DartId> crossed;
};

// A diagram with an open arc marked for removal, plus the faces on either
// side of the two end edges (where the free ends live).
struct OpenDiagram {
    Diagram source;
    ArcRef removed;
    FaceId start_face_left, start_face_right; // faces beside edges.front()
    FaceId end_face_left, end_face_right;     // faces beside edges.back()
};

OpenDiagram cut_arc(const Diagram& d, const ArcRef& arc);
// Close the gap left by cut_arc with a new arc following the dual path; each
// new crossing takes the matching entry of `levels` (or `level` everywhere).
Diagram insert_arc(const OpenDiagram& open, const DualPath& path, Level level);
Diagram insert_arc(const OpenDiagram& open, const DualPath& path, std::span<const Level> levels);
// Remove a closed arc. A loop based at a crossing is collapsed through that
// crossing; a whole strand cycle is deleted outright.
Diagram delete_arc(const Diagram& d, const ArcRef& loop);

// Cut one edge of each summand and splice tail to head.
Diagram connected_sum(const Diagram& a, DartId edge_a, const Diagram& b, DartId edge_b);
Diagram connected_sum(const Diagram& a, const Diagram& b);

// Keep only the strand cycle `cycle_index` (plus nothing else).
Diagram extract_component(const Diagram& d, int cycle_index);
// Connected pieces of the underlying graph, each as its own diagram.
std::vector<Diagram> split_components(const Diagram& d);

Diagram parse_pd(std::string_view text);
std::string emit_pd(const Diagram& d);

} // namespace knotweed
