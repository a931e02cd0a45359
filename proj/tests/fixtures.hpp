#pragma once

#include "knotweed/diagram.hpp"

#include <string_view>

namespace fixtures {

inline constexpr std::string_view kink = "X[2,1,1,2]";
inline constexpr std::string_view bigon = "X[3,4,4,1] X[2,2,3,1]";
inline constexpr std::string_view trefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr std::string_view figure_eight = "X[2,7,3,8] X[4,2,5,1] X[6,3,7,4] X[8,6,1,5]";
inline constexpr std::string_view monster =
    "X[1,12,2,13] X[5,19,6,18] X[7,17,8,16] X[9,3,10,2] X[11,20,12,1] X[13,10,14,11] X[14,3,15,4] "
    "X[15,9,16,8] X[17,5,18,4] X[19,7,20,6]";
inline constexpr std::string_view hopf = "X[1,3,2,4] X[3,1,4,2]";

inline knotweed::Diagram load(std::string_view pd) { return knotweed::parse_pd(pd); }

inline knotweed::Diagram granny()
{
    return knotweed::connected_sum(load(trefoil), load(trefoil));
}

inline knotweed::Diagram trefoil_figure_eight()
{
    return knotweed::connected_sum(load(trefoil), load(figure_eight));
}

} // namespace fixtures
