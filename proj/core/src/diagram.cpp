#include "knotweed/diagram.hpp"

#include "planar_map.hpp"

#include <algorithm>
#include <numeric>

namespace knotweed {

namespace {

// Union-find over crossings joined by edges; returns a piece id per crossing.
std::vector<int> piece_ids(std::span<const DartId> pairing, int n, int& pieces)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (DartId d = 0; d < static_cast<DartId>(pairing.size()); ++d)
        parent[find(crossing_of(d))] = find(crossing_of(pairing[d]));
    std::vector<int> id(n, -1), root_id(n, -1);
    pieces = 0;
    for (int c = 0; c < n; ++c) {
        int r = find(c);
        if (root_id[r] < 0)
            root_id[r] = pieces++;
        id[c] = root_id[r];
    }
    return id;
}

void put(std::string& out, std::int32_t v)
{
    auto u = static_cast<std::uint32_t>(v);
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((u >> shift) & 0xff));
}

} // namespace

Diagram::Diagram(std::vector<DartId> pairing, std::vector<std::uint8_t> over_in, int trivial_loops)
    : pairing_(std::move(pairing)), over_in_(std::move(over_in)), trivial_loops_(trivial_loops)
{
    const int n = crossing_count();
    if (pairing_.size() != 4 * over_in_.size())
        throw DiagramError("pairing must have four darts per crossing");
    if (trivial_loops_ < 0)
        throw DiagramError("negative loop count");
    for (auto o : over_in_)
        if (o != 1 && o != 3)
            throw DiagramError("over strand must enter at slot 1 or 3");
    for (DartId d = 0; d < dart_count(); ++d) {
        DartId p = pairing_[d];
        if (p < 0 || p >= dart_count() || p == d || pairing_[p] != d)
            throw DiagramError("pairing is not a fixed-point-free involution");
        if (is_incoming(d) == is_incoming(p))
            throw DiagramError("edge joins two darts of the same direction");
    }
    if (n == 0)
        return;
    int pieces = 0;
    auto piece = piece_ids(pairing_, n, pieces);
    std::vector<int> faces(pieces, 0), verts(pieces, 0);
    for (int c = 0; c < n; ++c)
        ++verts[piece[c]];
    std::vector<std::uint8_t> seen(dart_count(), 0);
    for (DartId d = 0; d < dart_count(); ++d) {
        if (seen[d])
            continue;
        ++faces[piece[crossing_of(d)]];
        for (DartId x = d; !seen[x]; x = ccw_prev(pairing_[x]))
            seen[x] = 1;
    }
    for (int i = 0; i < pieces; ++i)
        if (faces[i] != verts[i] + 2)
            throw EmbeddingError("rotation system is not planar");
}

std::vector<std::vector<DartId>> Diagram::strand_cycles() const
{
    std::vector<std::vector<DartId>> cycles;
    std::vector<std::uint8_t> seen(dart_count(), 0);
    for (DartId d = 0; d < dart_count(); ++d) {
        if (is_incoming(d) || seen[d])
            continue;
        auto& cyc = cycles.emplace_back();
        DartId e = d;
        do {
            seen[e] = 1;
            cyc.push_back(e);
            e = next_edge(e);
        } while (e != d);
    }
    return cycles;
}

bool Diagram::is_connected() const
{
    if (crossing_count() == 0)
        return trivial_loops_ <= 1;
    int pieces = 0;
    piece_ids(pairing_, crossing_count(), pieces);
    return pieces == 1 && trivial_loops_ == 0;
}

std::vector<DartId> Diagram::edges() const
{
    std::vector<DartId> out;
    out.reserve(pairing_.size() / 2);
    for (DartId d = 0; d < dart_count(); ++d)
        if (!is_incoming(d))
            out.push_back(d);
    return out;
}

Diagram Diagram::mirror() const
{
    // The old over strand becomes the under strand; rotate its incoming dart to slot 0.
    const int n = crossing_count();
    std::vector<DartId> pairing(pairing_.size());
    std::vector<std::uint8_t> over_in(n);
    auto map = [&](DartId d) { return make_dart(crossing_of(d), slot_of(d) - over_in_[crossing_of(d)]); };
    for (DartId d = 0; d < dart_count(); ++d)
        pairing[map(d)] = map(pairing_[d]);
    for (int c = 0; c < n; ++c)
        over_in[c] = static_cast<std::uint8_t>(4 - over_in_[c]);
    return Diagram(std::move(pairing), std::move(over_in), trivial_loops_);
}

Diagram Diagram::with_trivial_loops(int loops) const
{
    Diagram out = *this;
    if (loops < 0)
        throw DiagramError("negative loop count");
    out.trivial_loops_ = loops;
    return out;
}

Diagram Diagram::reversed() const
{
    std::vector<DartId> pairing(pairing_.size());
    for (DartId d = 0; d < dart_count(); ++d)
        pairing[opposite(d)] = opposite(pairing_[d]);
    return Diagram(std::move(pairing), over_in_, trivial_loops_);
}

Diagram Diagram::relabeled(std::span<const int> perm) const
{
    const int n = crossing_count();
    if (static_cast<int>(perm.size()) != n)
        throw DiagramError("permutation size mismatch");
    std::vector<DartId> pairing(pairing_.size());
    std::vector<std::uint8_t> over_in(n);
    auto map = [&](DartId d) { return make_dart(perm[crossing_of(d)], slot_of(d)); };
    for (DartId d = 0; d < dart_count(); ++d)
        pairing[map(d)] = map(pairing_[d]);
    for (int c = 0; c < n; ++c)
        over_in[perm[c]] = over_in_[c];
    return Diagram(std::move(pairing), std::move(over_in), trivial_loops_);
}

FaceMap face_map(const Diagram& d)
{
    FaceMap fm;
    if (d.crossing_count() == 0) {
        fm.faces.resize(std::max(2, d.trivial_loops() + 1));
        return fm;
    }
    fm.face_of.assign(d.dart_count(), -1);
    for (DartId s = 0; s < d.dart_count(); ++s) {
        if (fm.face_of[s] >= 0)
            continue;
        auto id = static_cast<FaceId>(fm.faces.size());
        auto& face = fm.faces.emplace_back();
        for (DartId x = s; fm.face_of[x] < 0; x = ccw_prev(d.partner(x))) {
            fm.face_of[x] = id;
            face.push_back(x);
        }
    }
    return fm;
}

DualGraph dual_graph(const Diagram& d, const FaceMap& fm)
{
    DualGraph g;
    g.node_count = fm.face_count();
    g.incident.resize(g.node_count);
    for (DartId e : d.edges()) {
        int idx = static_cast<int>(g.edges.size());
        g.edges.push_back({e, fm.face_of[e], fm.face_of[d.partner(e)]});
        g.incident[fm.face_of[e]].push_back(idx);
        g.incident[fm.face_of[d.partner(e)]].push_back(idx);
    }
    return g;
}

namespace {

std::string connected_code(const Diagram& d)
{
    const int n = d.crossing_count();
    std::vector<std::int32_t> best, cur;
    std::vector<int> num(n);
    std::vector<int> order;
    order.reserve(n);
    for (int start = 0; start < n; ++start) {
        std::fill(num.begin(), num.end(), -1);
        order.clear();
        num[start] = 0;
        order.push_back(start);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int c = order[head];
            for (int s = 0; s < 4; ++s) {
                int nb = crossing_of(d.partner(make_dart(c, s)));
                if (num[nb] < 0) {
                    num[nb] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        cur.clear();
        bool worse = false, better = best.empty();
        auto emit = [&](std::int32_t v) {
            if (!better && !worse) {
                auto i = cur.size();
                if (v < best[i])
                    better = true;
                else if (v > best[i])
                    worse = true;
            }
            cur.push_back(v);
        };
        for (int c : order) {
            if (worse)
                break;
            emit(d.over_in_slot(c));
            for (int s = 0; s < 4; ++s) {
                DartId p = d.partner(make_dart(c, s));
                emit(num[crossing_of(p)]);
                emit(slot_of(p));
            }
        }
        if (better)
            best = cur;
    }
    std::string out;
    out.reserve(best.size() * 4);
    for (auto v : best)
        put(out, v);
    return out;
}

} // namespace

CanonicalCode canonical_code(const Diagram& d)
{
    std::string out;
    put(out, d.crossing_count());
    put(out, d.trivial_loops());
    if (d.crossing_count() == 0) {
        put(out, 0);
        return out;
    }
    std::vector<std::string> parts;
    if (d.trivial_loops() == 0 && d.is_connected()) {
        parts.push_back(connected_code(d));
    } else {
        for (const auto& piece : split_components(d))
            if (piece.crossing_count() > 0)
                parts.push_back(connected_code(piece));
        std::sort(parts.begin(), parts.end());
    }
    put(out, static_cast<std::int32_t>(parts.size()));
    for (const auto& p : parts) {
        put(out, static_cast<std::int32_t>(p.size()));
        out += p;
    }
    return out;
}

std::vector<CrossingId> ArcRef::passes(const Diagram& d) const
{
    std::vector<CrossingId> out;
    if (edges.empty())
        return out;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        out.push_back(d.head(edges[i]));
    if (closed && d.next_edge(edges.back()) == edges.front())
        out.push_back(d.head(edges.back()));
    return out;
}

std::vector<ArcRef> maximal_arcs(const Diagram& d, Level level)
{
    std::vector<ArcRef> arcs;
    for (const auto& cyc : d.strand_cycles()) {
        const auto m = cyc.size();
        auto pass_ok = [&](std::size_t i) { return d.level(d.partner(cyc[i % m])) == level; };
        std::size_t first_bad = m;
        for (std::size_t i = 0; i < m; ++i)
            if (!pass_ok(i)) {
                first_bad = i;
                break;
            }
        if (first_bad == m) {
            arcs.push_back({cyc, true});
            continue;
        }
        // Walk once around starting just after a pass of the other level.
        std::size_t i = first_bad + 1;
        const std::size_t stop = first_bad + 1 + m;
        while (i < stop) {
            if (!pass_ok(i)) {
                ++i;
                continue;
            }
            ArcRef arc;
            arc.edges.push_back(cyc[i % m]);
            while (pass_ok(i)) {
                ++i;
                arc.edges.push_back(cyc[i % m]);
            }
            arcs.push_back(std::move(arc));
        }
    }
    return arcs;
}

namespace {

void check_open_arc(const Diagram& d, const ArcRef& arc)
{
    if (arc.edges.empty() || arc.closed)
        throw DiagramError("expected a non-empty open arc");
    for (std::size_t i = 0; i + 1 < arc.edges.size(); ++i)
        if (d.next_edge(arc.edges[i]) != arc.edges[i + 1])
            throw DiagramError("arc edges are not consecutive");
}

} // namespace

OpenDiagram cut_arc(const Diagram& d, const ArcRef& arc)
{
    check_open_arc(d, arc);
    auto fm = face_map(d);
    DartId a = arc.edges.front(), b = arc.edges.back();
    return {d, arc, fm.face_of[a], fm.face_of[d.partner(a)], fm.face_of[b], fm.face_of[d.partner(b)]};
}

Diagram insert_arc(const OpenDiagram& open, const DualPath& path, Level level)
{
    std::vector<Level> levels(path.crossed.size(), level);
    return insert_arc(open, path, levels);
}

Diagram insert_arc(const OpenDiagram& open, const DualPath& path, std::span<const Level> levels)
{
    const Diagram& d = open.source;
    if (levels.size() != path.crossed.size())
        throw PathError("one level is needed per crossed edge");
    if (path.from != open.start_face_left && path.from != open.start_face_right)
        throw PathError("path does not start beside the arc's first edge");
    if (path.to != open.end_face_left && path.to != open.end_face_right)
        throw PathError("path does not end beside the arc's last edge");
    auto fm = face_map(d);
    std::vector<std::uint8_t> on_arc(d.dart_count(), 0);
    for (DartId e : open.removed.edges)
        on_arc[e] = 1;
    std::vector<std::uint8_t> used(d.dart_count(), 0);
    std::vector<std::uint8_t> from_left(path.crossed.size());
    FaceId cur = path.from;
    for (std::size_t i = 0; i < path.crossed.size(); ++i) {
        DartId e = path.crossed[i];
        if (e < 0 || e >= d.dart_count() || d.is_incoming(e))
            throw PathError("crossed edge must be named by its outgoing dart");
        if (on_arc[e])
            throw PathError("path crosses the arc being replaced");
        if (used[e])
            throw PathError("path crosses an edge twice");
        used[e] = 1;
        if (fm.face_of[e] == cur) {
            from_left[i] = 1;
            cur = fm.face_of[d.partner(e)];
        } else if (fm.face_of[d.partner(e)] == cur) {
            from_left[i] = 0;
            cur = fm.face_of[e];
        } else {
            throw PathError("consecutive faces of the path are not adjacent");
        }
    }
    if (cur != path.to)
        throw PathError("path does not reach its final face");

    detail::PlanarMap m(d);
    m.remove_edges(open.removed.edges, true);
    if (path.crossed.empty()) {
        m.join_free_ends();
    } else {
        DartId first_in = detail::PlanarMap::kNone, prev_out = detail::PlanarMap::kNone;
        for (std::size_t i = 0; i < path.crossed.size(); ++i) {
            auto [in, out] = m.split_edge(path.crossed[i], from_left[i] != 0, levels[i]);
            if (i == 0)
                first_in = in;
            else
                m.link(prev_out, in);
            prev_out = out;
        }
        m.connect_free_ends(first_in, prev_out);
    }
    return m.finish();
}

Diagram delete_arc(const Diagram& d, const ArcRef& loop)
{
    if (!loop.closed || loop.edges.empty())
        throw DiagramError("delete_arc expects a closed arc");
    for (std::size_t i = 0; i + 1 < loop.edges.size(); ++i)
        if (d.next_edge(loop.edges[i]) != loop.edges[i + 1])
            throw DiagramError("arc edges are not consecutive");
    if (d.head(loop.edges.back()) != d.tail(loop.edges.front()))
        throw DiagramError("arc does not close up");
    detail::PlanarMap m(d);
    m.remove_edges(loop.edges, false);
    return m.finish();
}

Diagram connected_sum(const Diagram& a, DartId edge_a, const Diagram& b, DartId edge_b)
{
    const int off = a.dart_count();
    std::vector<DartId> pairing(a.pairing().begin(), a.pairing().end());
    for (DartId p : b.pairing())
        pairing.push_back(p + off);
    std::vector<std::uint8_t> over_in;
    for (int c = 0; c < a.crossing_count(); ++c)
        over_in.push_back(static_cast<std::uint8_t>(a.over_in_slot(c)));
    for (int c = 0; c < b.crossing_count(); ++c)
        over_in.push_back(static_cast<std::uint8_t>(b.over_in_slot(c)));
    DartId ta = edge_a, ha = a.partner(edge_a);
    DartId tb = edge_b + off, hb = b.partner(edge_b) + off;
    pairing[ta] = hb;
    pairing[hb] = ta;
    pairing[tb] = ha;
    pairing[ha] = tb;
    return Diagram(std::move(pairing), std::move(over_in), a.trivial_loops() + b.trivial_loops());
}

Diagram connected_sum(const Diagram& a, const Diagram& b)
{
    if (a.crossing_count() == 0 && b.crossing_count() == 0)
        return Diagram({}, {}, std::max(1, a.trivial_loops() + b.trivial_loops() - 1));
    if (a.crossing_count() == 0)
        return b.with_trivial_loops(b.trivial_loops() + std::max(0, a.trivial_loops() - 1));
    if (b.crossing_count() == 0)
        return a.with_trivial_loops(a.trivial_loops() + std::max(0, b.trivial_loops() - 1));
    return connected_sum(a, a.edges().front(), b, b.edges().front());
}

Diagram extract_component(const Diagram& d, int cycle_index)
{
    auto cycles = d.strand_cycles();
    if (cycle_index < 0 || cycle_index >= static_cast<int>(cycles.size()))
        throw DiagramError("no such strand cycle");
    detail::PlanarMap m(d);
    m.extra_loops = 0;
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
        if (i != cycle_index)
            m.remove_edges(cycles[i], false);
    return m.finish();
}

std::vector<Diagram> split_components(const Diagram& d)
{
    std::vector<Diagram> out;
    const int n = d.crossing_count();
    int pieces = 0;
    auto piece = n > 0 ? piece_ids(d.pairing(), n, pieces) : std::vector<int>{};
    for (int p = 0; p < pieces; ++p) {
        std::vector<int> local(n, -1);
        int k = 0;
        for (int c = 0; c < n; ++c)
            if (piece[c] == p)
                local[c] = k++;
        std::vector<DartId> pairing(4 * static_cast<std::size_t>(k));
        std::vector<std::uint8_t> over_in(k);
        for (int c = 0; c < n; ++c) {
            if (local[c] < 0)
                continue;
            over_in[local[c]] = static_cast<std::uint8_t>(d.over_in_slot(c));
            for (int s = 0; s < 4; ++s) {
                DartId q = d.partner(make_dart(c, s));
                pairing[make_dart(local[c], s)] = make_dart(local[crossing_of(q)], slot_of(q));
            }
        }
        out.emplace_back(std::move(pairing), std::move(over_in), 0);
    }
    for (int i = 0; i < d.trivial_loops(); ++i)
        out.push_back(Diagram::unknot());
    return out;
}

} // namespace knotweed
