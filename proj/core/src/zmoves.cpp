#include "knotweed/zmoves.hpp"

#include "planar_map.hpp"
#include "region.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace knotweed {

namespace {

void require_connected(const Diagram& d)
{
    if (!d.is_connected())
        throw SplitDiagramError("diagram is split; handle its pieces separately");
}

struct Maps {
    FaceMap fm;
    DualGraph g;
    explicit Maps(const Diagram& d) : fm(face_map(d)), g(dual_graph(d, fm)) {}
};

// Face holding the corner between two adjacent darts at one crossing.
FaceId corner_face(const FaceMap& fm, DartId a, DartId b)
{
    return b == ccw_next(a) ? fm.face_of[a] : fm.face_of[b];
}

template <class Move>
void sort_unique(std::vector<Move>& moves)
{
    std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
        if (a.delta_c != b.delta_c)
            return a.delta_c < b.delta_c;
        return a.result_code < b.result_code;
    });
    moves.erase(std::unique(moves.begin(), moves.end(),
                            [](const Move& a, const Move& b) { return a.result_code == b.result_code; }),
                moves.end());
}

// Walk along the strand from dart `start` at its crossing, recording the
// darts by which each later crossing is entered. Stops before any repeat.
std::vector<DartId> walk_arrivals(const Diagram& d, DartId start, std::vector<int>& stamp, int tag)
{
    std::vector<DartId> arrivals;
    CrossingId x = crossing_of(start);
    stamp[x] = tag;
    DartId leave = start;
    while (true) {
        DartId p = d.partner(leave);
        CrossingId y = crossing_of(p);
        if (stamp[y] == tag)
            break;
        stamp[y] = tag;
        arrivals.push_back(p);
        leave = opposite(p);
    }
    return arrivals;
}

ArcRef arc_from_walk(const Diagram& d, DartId start, std::span<const DartId> arrivals, std::size_t count)
{
    ArcRef arc;
    arc.edges.push_back(d.edge_of(start));
    for (std::size_t i = 0; i + 1 < count; ++i)
        arc.edges.push_back(d.edge_of(opposite(arrivals[i])));
    if (d.is_incoming(start))
        std::reverse(arc.edges.begin(), arc.edges.end());
    return arc;
}

struct Z2Ends {
    DartId under_x, over_x, under_y, over_y;
};

Z2Ends z2_ends(const Diagram& d, const ArcRef& under, const ArcRef& over)
{
    Z2Ends e{};
    e.under_x = under.edges.front();
    e.under_y = d.partner(under.edges.back());
    CrossingId x = crossing_of(e.under_x);
    if (d.tail(over.edges.front()) == x) {
        e.over_x = over.edges.front();
        e.over_y = d.partner(over.edges.back());
    } else {
        e.over_x = d.partner(over.edges.back());
        e.over_y = over.edges.front();
    }
    return e;
}

Diagram smooth_pair(const Diagram& d, const ArcRef& under, const ArcRef& over)
{
    auto e = z2_ends(d, under, over);
    detail::PlanarMap m(d);
    m.smooth(crossing_of(e.under_x), {opposite(e.under_x), e.over_x}, {opposite(e.over_x), e.under_x});
    m.smooth(crossing_of(e.under_y), {opposite(e.under_y), e.over_y}, {opposite(e.over_y), e.under_y});
    return m.finish();
}

void check_count(const Diagram& before, const Diagram& after, int delta)
{
    if (after.crossing_count() != before.crossing_count() + delta)
        throw EmbeddingError("move changed the crossing count unexpectedly");
}

// All shortest dual paths from `from` to `to` that avoid the blocked edges,
// where "shortest" is measured in the full dual graph.
std::vector<DualPath> geodesics(const Maps& maps, FaceId from, FaceId to,
                                std::span<const std::uint8_t> blocked, int cap)
{
    const auto& g = maps.g;
    auto bfs = [&](FaceId s) {
        std::vector<int> dist(g.node_count, -1);
        std::queue<FaceId> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            FaceId f = q.front();
            q.pop();
            for (int e : g.incident[f]) {
                FaceId o = g.other_end(e, f);
                if (dist[o] < 0) {
                    dist[o] = dist[f] + 1;
                    q.push(o);
                }
            }
        }
        return dist;
    };
    auto ds = bfs(from);
    auto dt = bfs(to);
    const int length = ds[to];
    std::vector<DualPath> out;
    std::vector<DartId> stack;
    auto dfs = [&](auto& self, FaceId f) -> void {
        if (static_cast<int>(out.size()) >= cap)
            return;
        if (f == to && static_cast<int>(stack.size()) == length) {
            out.push_back({from, to, stack});
            return;
        }
        for (int e : g.incident[f]) {
            DartId edge = g.edges[e].edge;
            if (blocked[edge])
                continue;
            FaceId o = g.other_end(e, f);
            if (ds[o] != ds[f] + 1 || dt[o] != length - ds[o])
                continue;
            stack.push_back(edge);
            self(self, o);
            stack.pop_back();
        }
    };
    dfs(dfs, from);
    return out;
}

std::string faces_text(const std::vector<FaceId>& faces)
{
    std::ostringstream s;
    s << faces.size() << " face" << (faces.size() == 1 ? "" : "s");
    return s.str();
}

} // namespace

std::vector<Z1Move> find_z1(const Diagram& d)
{
    require_connected(d);
    std::vector<Z1Move> moves;
    if (d.crossing_count() == 0)
        return moves;
    Maps maps(d);
    std::vector<int> stamp(d.crossing_count(), -1);
    int tag = 0;
    for (CrossingId x = 0; x < d.crossing_count(); ++x) {
        for (DartId start : {make_dart(x, 2), opposite(make_dart(x, d.over_in_slot(x)))}) {
            ++tag;
            stamp[x] = tag;
            ArcRef loop;
            loop.closed = true;
            DartId e = start;
            bool simple = true;
            while (true) {
                loop.edges.push_back(e);
                CrossingId h = d.head(e);
                if (h == x)
                    break;
                if (stamp[h] == tag) {
                    simple = false;
                    break;
                }
                stamp[h] = tag;
                e = d.next_edge(e);
            }
            DartId arrival = d.partner(loop.edges.back());
            if (!simple || on_over_axis(arrival) == on_over_axis(start))
                continue;
            auto region = detail::region_inside_curve(d, maps.fm, maps.g, loop.edges,
                                                       corner_face(maps.fm, start, arrival));
            auto problem = detail::boundary_label_problem(region);
            if (!problem)
                continue;
            auto labels = solve(*problem);
            if (!labels)
                continue;
            Z1Move m;
            m.alpha = std::move(loop);
            m.omega = region.faces();
            m.labeling = std::move(*labels);
            m.arc_count = region.arc_count();
            m.delta_c = -(1 + 2 * m.arc_count);
            m.result = delete_arc(d, m.alpha);
            check_count(d, m.result, m.delta_c);
            m.result_code = canonical_code(m.result);
            moves.push_back(std::move(m));
        }
    }
    sort_unique(moves);
    return moves;
}

Diagram apply_z1(const Diagram& d, const Z1Move& m)
{
    Diagram out = delete_arc(d, m.alpha);
    check_count(d, out, m.delta_c);
    return out;
}

std::vector<Z2Move> find_z2(const Diagram& d)
{
    require_connected(d);
    std::vector<Z2Move> moves;
    const int n = d.crossing_count();
    if (n < 2)
        return moves;
    Maps maps(d);
    std::vector<int> stamp_u(n, -1), stamp_o(n, -1), mark(n, -1);
    std::vector<int> pos_o(n, -1);
    int tag = 0, mtag = 0;
    for (CrossingId x = 0; x < n; ++x) {
        const int over_in = d.over_in_slot(x);
        for (DartId su : {make_dart(x, 2), make_dart(x, 0)}) {
            auto walk_u = walk_arrivals(d, su, stamp_u, ++tag);
            for (DartId so : {make_dart(x, over_in), opposite(make_dart(x, over_in))}) {
                auto walk_o = walk_arrivals(d, so, stamp_o, tag);
                std::fill(pos_o.begin(), pos_o.end(), -1);
                for (std::size_t j = 0; j < walk_o.size(); ++j)
                    pos_o[crossing_of(walk_o[j])] = static_cast<int>(j);
                for (std::size_t i = 0; i < walk_u.size(); ++i) {
                    DartId uy = walk_u[i];
                    CrossingId y = crossing_of(uy);
                    if (on_over_axis(uy) || pos_o[y] < 0)
                        continue;
                    const auto j = static_cast<std::size_t>(pos_o[y]);
                    DartId oy = walk_o[j];
                    if (!on_over_axis(oy))
                        continue;
                    ++mtag;
                    for (std::size_t a = 0; a < i; ++a)
                        mark[crossing_of(walk_u[a])] = mtag;
                    bool disjoint = true;
                    for (std::size_t b = 0; b < j && disjoint; ++b)
                        disjoint = mark[crossing_of(walk_o[b])] != mtag;
                    if (!disjoint)
                        continue;
                    ArcRef under = arc_from_walk(d, su, walk_u, i + 1);
                    ArcRef over = arc_from_walk(d, so, walk_o, j + 1);
                    std::vector<DartId> curve = under.edges;
                    curve.insert(curve.end(), over.edges.begin(), over.edges.end());
                    auto region = detail::region_inside_curve(d, maps.fm, maps.g, curve, corner_face(maps.fm, su, so));
                    if (!region.face_in[corner_face(maps.fm, uy, oy)])
                        continue;
                    auto problem = detail::boundary_label_problem(region);
                    if (!problem)
                        continue;
                    auto labels = solve(*problem);
                    if (!labels)
                        continue;
                    Z2Move m;
                    m.alpha_under = std::move(under);
                    m.alpha_over = std::move(over);
                    m.omega = region.faces();
                    m.labeling = std::move(*labels);
                    m.result = smooth_pair(d, m.alpha_under, m.alpha_over);
                    check_count(d, m.result, m.delta_c);
                    m.result_code = canonical_code(m.result);
                    moves.push_back(std::move(m));
                }
            }
        }
    }
    sort_unique(moves);
    return moves;
}

Diagram apply_z2(const Diagram& d, const Z2Move& m)
{
    Diagram out = smooth_pair(d, m.alpha_under, m.alpha_over);
    check_count(d, out, m.delta_c);
    return out;
}

std::vector<Z3Move> find_z3(const Diagram& d, const Z3Options& options)
{
    require_connected(d);
    std::vector<Z3Move> moves;
    if (d.crossing_count() == 0)
        return moves;
    Maps maps(d);
    const auto own_code = canonical_code(d);
    std::vector<std::uint8_t> blocked(d.dart_count(), 0);
    std::set<CanonicalCode> seen;
    for (Level level : {Level::over, Level::under}) {
        for (auto& arc : maximal_arcs(d, level)) {
            if (arc.closed)
                continue;
            const int k = static_cast<int>(arc.edges.size()) - 1;
            for (DartId e : arc.edges)
                blocked[e] = 1;
            DartId first = arc.edges.front(), last = arc.edges.back();
            const FaceId starts[2] = {maps.fm.face_of[first], maps.fm.face_of[d.partner(first)]};
            const FaceId ends[2] = {maps.fm.face_of[last], maps.fm.face_of[d.partner(last)]};
            std::optional<OpenDiagram> open;
            for (FaceId s : starts) {
                for (FaceId t : ends) {
                    for (auto& path : geodesics(maps, s, t, blocked, options.geodesic_cap)) {
                        const int delta = static_cast<int>(path.crossed.size()) - k;
                        bool wanted = options.filter == Z3Filter::non_increasing ? delta <= 0
                                      : options.filter == Z3Filter::decreasing   ? delta < 0
                                                                                 : delta == 0;
                        if (!wanted)
                            continue;
                        if (!open)
                            open = cut_arc(d, arc);
                        Z3Move m;
                        m.result = insert_arc(*open, path, level);
                        check_count(d, m.result, delta);
                        m.result_code = canonical_code(m.result);
                        if (m.result_code == own_code || !seen.insert(m.result_code).second)
                            continue;
                        m.alpha = arc;
                        m.level = level;
                        m.gamma = std::move(path);
                        m.delta_c = delta;
                        moves.push_back(std::move(m));
                    }
                }
            }
            for (DartId e : arc.edges)
                blocked[e] = 0;
        }
    }
    sort_unique(moves);
    return moves;
}

Diagram apply_z3(const Diagram& d, const Z3Move& m)
{
    Diagram out = insert_arc(cut_arc(d, m.alpha), m.gamma, m.level);
    check_count(d, out, m.delta_c);
    return out;
}

std::string describe(const Z1Move& m, const Diagram& d)
{
    std::ostringstream s;
    s << "Z1 loop at crossing " << d.tail(m.alpha.edges.front()) << " through " << m.alpha.edges.size()
      << " edges, " << m.arc_count << " arc(s) inside, " << faces_text(m.omega);
    return s.str();
}

std::string describe(const Z2Move& m, const Diagram& d)
{
    auto e = z2_ends(d, m.alpha_under, m.alpha_over);
    std::ostringstream s;
    s << "Z2 between crossings " << crossing_of(e.under_x) << " and " << crossing_of(e.under_y) << ", arcs of "
      << m.alpha_under.edges.size() << "+" << m.alpha_over.edges.size() << " edges, " << faces_text(m.omega);
    return s.str();
}

std::string describe(const Z3Move& m, const Diagram& d)
{
    std::ostringstream s;
    s << "Z3 " << (m.level == Level::over ? "over" : "under") << "arc leaving crossing " << d.tail(m.alpha.edges.front())
      << " through " << m.alpha.edges.size() - 1 << " crossing(s), rerouted across " << m.gamma.crossed.size()
      << " edge(s)";
    return s.str();
}

} // namespace knotweed
