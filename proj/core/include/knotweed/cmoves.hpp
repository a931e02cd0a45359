#pragma once

#include "knotweed/diagram.hpp"
#include "knotweed/labeling.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace knotweed {

// A simple closed curve meeting the diagram transversely in edge midpoints.
// edges[i] is crossed going from faces[i] to faces[(i + 1) % size].
struct TransverseCircle {
    std::vector<DartId> edges;
    std::vector<FaceId> faces;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const TransverseCircle&, const TransverseCircle&) = default;
};

// Simple dual cycles with at most max_len edges, one per rotation/reflection
// class. Each cycle starts at its smallest face, with edges.front() < edges.back().
std::vector<TransverseCircle> enumerate_transverse_circles(const Diagram& d, int max_len);

// Crossings on the left of the circle's direction of travel.
std::vector<std::uint8_t> left_side(const Diagram& d, const TransverseCircle& circle);

// Curl-free sub-walk of an open walk: following the walk, a curl is erased as
// soon as the walk returns to a crossing it already passed, and the walk turns
// the corner there instead.
struct Straightened {
    std::vector<DartId> kept;    // surviving edges in walk order
    std::vector<DartId> erased;  // edges of erased curls
    std::vector<CrossingId> corners;
};
Straightened straighten(const Diagram& d, std::span<const DartId> walk);

struct SplitPair {
    Diagram d0;
    Diagram d1;
};

struct CMove {
    TransverseCircle circle;
    bool omega_left = true;          // which side of the circle is the disc
    ArcRef alpha;                    // closed for the split-link variant
    std::vector<ArcRef> betas;       // the other strands inside the disc
    Labeling labeling;               // one label per beta
    std::vector<DartId> gamma;       // circle edges crossed by the chosen half
    bool split = false;
    SplitPair result;
    int total = 0;                   // crossings of d0 plus d1
    CanonicalCode code0, code1;
};

struct CTildeMove {
    TransverseCircle inner, outer;
    bool inner_left = true, outer_left = true;
    std::vector<DartId> alpha;       // walk from the outer circle to the inner one
    std::vector<DartId> beta0;       // rest of alpha's strand inside the outer disc
    Labeling labeling;               // beta0 first, then the other strands
    SplitPair result;
    int total = 0;
    CanonicalCode code0, code1;
};

std::vector<CMove> find_c(const Diagram& d, int max_len);
SplitPair apply_c(const Diagram& d, const CMove& m);

std::vector<CTildeMove> find_ctilde(const Diagram& d, int max_len);
SplitPair apply_ctilde(const Diagram& d, const CTildeMove& m);

std::string describe(const CMove& m, const Diagram& d);
std::string describe(const CTildeMove& m, const Diagram& d);

} // namespace knotweed
