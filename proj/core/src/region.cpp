#include "region.hpp"

namespace knotweed::detail {

int Region::arc_count() const
{
    int n = 0;
    for (const auto& s : strands)
        n += s.circle ? 0 : 1;
    return n;
}

std::vector<FaceId> Region::faces() const
{
    std::vector<FaceId> out;
    for (FaceId f = 0; f < static_cast<FaceId>(face_in.size()); ++f)
        if (face_in[f])
            out.push_back(f);
    return out;
}

std::vector<std::uint8_t> flood_faces(const DualGraph& g, FaceId seed, std::span<const std::uint8_t> blocked_edge)
{
    std::vector<std::uint8_t> in(g.node_count, 0);
    std::vector<FaceId> stack{seed};
    in[seed] = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (int e : g.incident[f]) {
            if (blocked_edge[g.edges[e].edge])
                continue;
            FaceId o = g.other_end(e, f);
            if (!in[o]) {
                in[o] = 1;
                stack.push_back(o);
            }
        }
    }
    return in;
}

Region region_inside_curve(const Diagram& d, const FaceMap& fm, const DualGraph& g,
                           std::span<const DartId> curve_edges, FaceId seed)
{
    Region r;
    std::vector<std::uint8_t> on_curve(d.dart_count(), 0);
    std::vector<std::uint8_t> boundary_crossing(d.crossing_count(), 0);
    for (DartId e : curve_edges) {
        on_curve[e] = 1;
        boundary_crossing[d.tail(e)] = 1;
        boundary_crossing[d.head(e)] = 1;
    }
    r.face_in = flood_faces(g, seed, on_curve);
    r.crossing_in.assign(d.crossing_count(), 0);
    for (CrossingId c = 0; c < d.crossing_count(); ++c)
        r.crossing_in[c] = !boundary_crossing[c] && r.face_in[fm.face_of[make_dart(c, 0)]];

    r.strand_of_edge.assign(d.dart_count(), -1);
    auto inside_edge = [&](DartId e) { return !on_curve[e] && r.face_in[fm.face_of[e]]; };
    for (DartId e0 : d.edges()) {
        if (!inside_edge(e0) || r.strand_of_edge[e0] >= 0)
            continue;
        // Back up to where the strand enters the region.
        DartId first = e0;
        bool circle = false;
        while (r.crossing_in[d.tail(first)]) {
            first = d.prev_edge(first);
            if (first == e0) {
                circle = true;
                break;
            }
        }
        RegionStrand s;
        s.circle = circle;
        int id = static_cast<int>(r.strands.size());
        DartId e = first;
        while (true) {
            s.edges.push_back(e);
            r.strand_of_edge[e] = id;
            if (!r.crossing_in[d.head(e)])
                break;
            e = d.next_edge(e);
            if (e == first)
                break;
        }
        if (!circle) {
            s.end_levels.push_back(d.level(s.edges.front()));
            s.end_levels.push_back(d.level(d.partner(s.edges.back())));
        }
        r.strands.push_back(std::move(s));
    }
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        if (!r.crossing_in[c])
            continue;
        int over = r.strand_of_edge[d.edge_of(make_dart(c, 1))];
        int under = r.strand_of_edge[d.edge_of(make_dart(c, 0))];
        r.dominance.emplace_back(over, under);
    }
    return r;
}

std::optional<LabelProblem> boundary_label_problem(const Region& r)
{
    LabelProblem p;
    p.strand_count = static_cast<int>(r.strands.size());
    p.forced.resize(p.strand_count);
    for (int i = 0; i < p.strand_count; ++i) {
        switch (forced_label(r.strands[i].end_levels)) {
        case ForcedLabel::over:
            p.forced[i] = Level::over;
            break;
        case ForcedLabel::under:
            p.forced[i] = Level::under;
            break;
        case ForcedLabel::conflict:
            return std::nullopt;
        case ForcedLabel::free:
            break;
        }
    }
    for (auto pr : r.dominance)
        if (pr.first != pr.second)
            p.dominance.push_back(pr);
    return p;
}

} // namespace knotweed::detail
