#pragma once

#include "knotweed/diagram.hpp"
#include "knotweed/labeling.hpp"

#include <string>
#include <vector>

namespace knotweed {

enum class MoveClass { decreasing, horizontal, increasing };

constexpr MoveClass classify(int delta_c)
{
    return delta_c < 0 ? MoveClass::decreasing : delta_c == 0 ? MoveClass::horizontal : MoveClass::increasing;
}

// Collapse a simple loop based at a crossing.
struct Z1Move {
    ArcRef alpha; // closed; based at the tail of alpha.edges.front()
    std::vector<FaceId> omega;
    Labeling labeling;
    int arc_count = 0;
    int delta_c = 0;
    Diagram result;
    CanonicalCode result_code;
};

// Swap an under-arc and an over-arc that bound a disc between two crossings.
struct Z2Move {
    ArcRef alpha_under;
    ArcRef alpha_over;
    std::vector<FaceId> omega;
    Labeling labeling;
    int delta_c = -2;
    Diagram result;
    CanonicalCode result_code;
};

// Reroute a maximal over- or under-arc along a shortest dual path.
struct Z3Move {
    ArcRef alpha;
    Level level = Level::over;
    DualPath gamma;
    int delta_c = 0;
    Diagram result;
    CanonicalCode result_code;
};

enum class Z3Filter { non_increasing, decreasing, horizontal };

struct Z3Options {
    int geodesic_cap = 64;
    Z3Filter filter = Z3Filter::non_increasing;
};

std::vector<Z1Move> find_z1(const Diagram& d);
std::vector<Z2Move> find_z2(const Diagram& d);
std::vector<Z3Move> find_z3(const Diagram& d, const Z3Options& options = {});

Diagram apply_z1(const Diagram& d, const Z1Move& m);
Diagram apply_z2(const Diagram& d, const Z2Move& m);
Diagram apply_z3(const Diagram& d, const Z3Move& m);

std::string describe(const Z1Move& m, const Diagram& d);
std::string describe(const Z2Move& m, const Diagram& d);
std::string describe(const Z3Move& m, const Diagram& d);

} // namespace knotweed
