#include "knotweed/cmoves.hpp"

#include "planar_map.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace knotweed {

namespace {

void require_connected(const Diagram& d)
{
    if (!d.is_connected())
        throw SplitDiagramError("diagram is split; handle its pieces separately");
}

// Strand pieces inside a set of crossings, cut at the given boundary edges.
// Arcs run from a boundary edge entering the side to one leaving it.
struct Pieces {
    std::vector<std::vector<DartId>> edges;
    std::vector<std::uint8_t> circle;
    std::vector<int> owner; // piece of each edge, or -1

    int size() const { return static_cast<int>(edges.size()); }
};

Pieces pieces_inside(const Diagram& d, std::span<const std::uint8_t> side, std::span<const std::uint8_t> cut)
{
    Pieces p;
    p.owner.assign(d.dart_count(), -1);
    auto add = [&](DartId first, bool circle) {
        const int id = p.size();
        std::vector<DartId> walk;
        DartId e = first;
        while (true) {
            walk.push_back(e);
            p.owner[e] = id;
            if (!side[d.head(e)])
                break;
            e = d.next_edge(e);
            if (e == first)
                break;
        }
        p.edges.push_back(std::move(walk));
        p.circle.push_back(circle ? 1 : 0);
    };
    for (DartId e : d.edges())
        if (cut[e] && side[d.head(e)])
            add(e, false);
    for (DartId e : d.edges())
        if (p.owner[e] < 0 && side[d.tail(e)] && side[d.head(e)])
            add(e, true);
    return p;
}

// Who passes over whom at the crossings of a side, relative to one piece.
struct Interaction {
    std::vector<int> over_alpha;  // crossings where the piece is over alpha
    std::vector<int> under_alpha; // ... and under alpha
    int self = 0;                 // self-crossings of alpha
    std::vector<std::pair<int, int>> dominance;
};

Interaction interact(const Diagram& d, std::span<const CrossingId> crossings, std::span<const int> owner, int alpha,
                     int piece_count)
{
    Interaction r;
    r.over_alpha.assign(piece_count, 0);
    r.under_alpha.assign(piece_count, 0);
    for (CrossingId c : crossings) {
        int over = owner[d.edge_of(make_dart(c, d.over_in_slot(c)))];
        int under = owner[d.edge_of(make_dart(c, 0))];
        if (over == alpha && under == alpha)
            ++r.self;
        else if (over == alpha)
            ++r.under_alpha[under];
        else if (under == alpha)
            ++r.over_alpha[over];
        else if (over != under)
            r.dominance.emplace_back(over, under);
    }
    return r;
}

// Labels for every piece but alpha, in piece order.
std::optional<Labeling> label_others(const Interaction& in, int alpha, int piece_count)
{
    auto index = [&](int piece) { return piece < alpha ? piece : piece - 1; };
    LabelProblem problem;
    problem.strand_count = piece_count - 1;
    problem.forced.resize(problem.strand_count);
    for (int j = 0; j < piece_count; ++j) {
        if (j == alpha)
            continue;
        if (in.over_alpha[j] && in.under_alpha[j])
            return std::nullopt;
        if (in.over_alpha[j])
            problem.forced[index(j)] = Level::over;
        else if (in.under_alpha[j])
            problem.forced[index(j)] = Level::under;
    }
    for (auto [o, u] : in.dominance)
        problem.dominance.emplace_back(index(o), index(u));
    return solve(problem);
}

// The walk `keep` (plus any other kept edges) closed up outside the disc:
// everything else is deleted and the outer ends of the first and last edges
// are joined directly.
Diagram close_walk(const Diagram& d, std::span<const DartId> keep, DartId first, DartId last)
{
    std::vector<std::uint8_t> kept(d.dart_count(), 0);
    for (DartId e : keep)
        kept[e] = 1;
    std::vector<DartId> drop;
    for (DartId e : d.edges())
        if (!kept[e])
            drop.push_back(e);
    detail::PlanarMap m(d);
    m.extra_loops = 0;
    if (!drop.empty())
        m.remove_edges(drop, false);
    DartId inner = d.partner(first);
    m.drop_dart(first);
    m.drop_dart(d.partner(last));
    m.link(last, inner);
    return m.finish();
}

Diagram straightened_diagram(const Diagram& d, const Straightened& s)
{
    if (s.erased.empty())
        return d;
    detail::PlanarMap m(d);
    m.remove_edges(s.erased, false);
    return m.finish();
}

int cycle_index_of(const Diagram& d, DartId edge)
{
    auto cycles = d.strand_cycles();
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
        if (std::find(cycles[i].begin(), cycles[i].end(), edge) != cycles[i].end())
            return i;
    throw DiagramError("edge lies on no strand cycle");
}

void set_mask(const TransverseCircle& circle, std::vector<std::uint8_t>& mask, std::uint8_t value)
{
    for (DartId e : circle.edges)
        mask[e] = value;
}

std::size_t circle_length(const CMove& m) { return m.circle.size(); }
std::size_t circle_length(const CTildeMove& m) { return m.inner.size() + m.outer.size(); }

// Among moves with the same factors the one with the shortest circle wins.
template <class Move>
void sort_unique(std::vector<Move>& moves)
{
    auto key = [](const Move& m) {
        return std::tuple<int, const CanonicalCode&, const CanonicalCode&, std::size_t>(m.total, m.code0, m.code1,
                                                                                        circle_length(m));
    };
    std::stable_sort(moves.begin(), moves.end(), [&](const Move& a, const Move& b) { return key(a) < key(b); });
    moves.erase(std::unique(moves.begin(), moves.end(),
                            [](const Move& a, const Move& b) { return a.code0 == b.code0 && a.code1 == b.code1; }),
                moves.end());
}

std::vector<CrossingId> members(std::span<const std::uint8_t> side)
{
    std::vector<CrossingId> out;
    for (CrossingId c = 0; c < static_cast<CrossingId>(side.size()); ++c)
        if (side[c])
            out.push_back(c);
    return out;
}

} // namespace

std::vector<TransverseCircle> enumerate_transverse_circles(const Diagram& d, int max_len)
{
    std::vector<TransverseCircle> out;
    if (d.crossing_count() == 0 || max_len < 2)
        return out;
    const auto fm = face_map(d);
    const auto g = dual_graph(d, fm);
    std::vector<std::uint8_t> on_path(g.node_count, 0);
    TransverseCircle cur;
    for (FaceId s = 0; s < g.node_count; ++s) {
        auto dfs = [&](auto& self, FaceId f, int via) -> void {
            for (int e : g.incident[f]) {
                if (e == via)
                    continue;
                const auto& de = g.edges[e];
                if (de.left == de.right)
                    continue;
                FaceId o = g.other_end(e, f);
                if (o == s) {
                    if (cur.faces.size() >= 2 && cur.edges.front() < de.edge) {
                        out.push_back(cur);
                        out.back().edges.push_back(de.edge);
                    }
                    continue;
                }
                if (o < s || on_path[o] || static_cast<int>(cur.faces.size()) >= max_len)
                    continue;
                on_path[o] = 1;
                cur.faces.push_back(o);
                cur.edges.push_back(de.edge);
                self(self, o, e);
                cur.faces.pop_back();
                cur.edges.pop_back();
                on_path[o] = 0;
            }
        };
        on_path[s] = 1;
        cur.faces.assign(1, s);
        cur.edges.clear();
        dfs(dfs, s, -1);
        on_path[s] = 0;
    }
    return out;
}

std::vector<std::uint8_t> left_side(const Diagram& d, const TransverseCircle& circle)
{
    const auto fm = face_map(d);
    std::vector<std::uint8_t> cut(d.dart_count(), 0);
    std::vector<std::uint8_t> side(d.crossing_count(), 0);
    std::vector<CrossingId> stack;
    const std::size_t n = circle.size();
    for (std::size_t i = 0; i < n; ++i) {
        DartId e = circle.edges[i];
        cut[e] = 1;
        CrossingId left = fm.face_of[e] == circle.faces[i] ? d.head(e) : d.tail(e);
        if (!side[left]) {
            side[left] = 1;
            stack.push_back(left);
        }
    }
    while (!stack.empty()) {
        CrossingId c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            DartId x = make_dart(c, s);
            if (cut[d.edge_of(x)])
                continue;
            CrossingId y = crossing_of(d.partner(x));
            if (!side[y]) {
                side[y] = 1;
                stack.push_back(y);
            }
        }
    }
    for (DartId e : circle.edges)
        if (side[d.tail(e)] == side[d.head(e)])
            throw EmbeddingError("transverse circle does not separate the ends of an edge it crosses");
    return side;
}

Straightened straighten(const Diagram& d, std::span<const DartId> walk)
{
    Straightened s;
    std::vector<int> pos(d.crossing_count(), -1);
    std::vector<std::pair<CrossingId, int>> corners;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        DartId e = walk[i];
        s.kept.push_back(e);
        if (i + 1 == walk.size())
            break;
        CrossingId x = d.head(e);
        if (pos[x] < 0) {
            pos[x] = static_cast<int>(s.kept.size()) - 1;
            continue;
        }
        const auto j = static_cast<std::size_t>(pos[x]);
        for (std::size_t t = j + 1; t < s.kept.size(); ++t) {
            s.erased.push_back(s.kept[t]);
            if (t + 1 < s.kept.size())
                pos[d.head(s.kept[t])] = -1;
        }
        s.kept.resize(j + 1);
        std::erase_if(corners, [&](const auto& c) { return c.second > static_cast<int>(j); });
        corners.emplace_back(x, static_cast<int>(j));
    }
    for (auto [x, at] : corners)
        s.corners.push_back(x);
    std::sort(s.erased.begin(), s.erased.end());
    return s;
}

std::vector<CMove> find_c(const Diagram& d, int max_len)
{
    require_connected(d);
    std::vector<CMove> moves;
    const int total = d.crossing_count();
    if (total == 0)
        return moves;
    std::vector<std::uint8_t> cut(d.dart_count(), 0);
    std::vector<int> position(d.dart_count(), -1);
    for (auto& circle : enumerate_transverse_circles(d, max_len)) {
        const int len = static_cast<int>(circle.size());
        for (int i = 0; i < len; ++i) {
            cut[circle.edges[i]] = 1;
            position[circle.edges[i]] = i;
        }
        auto left = left_side(d, circle);
        for (bool omega_left : {true, false}) {
            std::vector<std::uint8_t> side(left);
            if (!omega_left)
                for (auto& v : side)
                    v = !v;
            auto pieces = pieces_inside(d, side, cut);
            auto crossings = members(side);
            for (int a = 0; a < pieces.size(); ++a) {
                auto in = interact(d, crossings, pieces.owner, a, pieces.size());
                int crossing_alpha = 0;
                for (int j = 0; j < pieces.size(); ++j)
                    crossing_alpha += in.over_alpha[j] + in.under_alpha[j];
                const bool split = pieces.circle[a] != 0;
                int p = 0, q = 0;
                if (!split) {
                    p = position[pieces.edges[a].front()];
                    q = position[pieces.edges[a].back()];
                    auto inside = [&](int r) { return ((r - p + len) % len) < ((q - p + len) % len); };
                    bool ok = true;
                    for (int j = 0; j < pieces.size() && ok; ++j) {
                        if (j == a || pieces.circle[j])
                            continue;
                        int r = position[pieces.edges[j].front()], s = position[pieces.edges[j].back()];
                        bool separates = inside(r) != inside(s);
                        ok = separates || in.over_alpha[j] + in.under_alpha[j] >= 2;
                    }
                    if (!ok)
                        continue;
                }
                auto labels = label_others(in, a, pieces.size());
                if (!labels)
                    continue;
                if (in.self >= total)
                    continue;

                CMove m;
                m.circle = circle;
                m.omega_left = omega_left;
                m.split = split;
                m.alpha.edges = pieces.edges[a];
                m.alpha.closed = split;
                for (int j = 0; j < pieces.size(); ++j)
                    if (j != a)
                        m.betas.push_back(ArcRef{pieces.edges[j], pieces.circle[j] != 0});
                m.labeling = std::move(*labels);
                if (split) {
                    if (total - in.self - crossing_alpha >= total)
                        continue;
                } else {
                    // Both halves of the circle between alpha's ends; keep the one
                    // crossing fewer strands.
                    std::vector<DartId> forward, backward;
                    for (int r = (p + 1) % len; r != q; r = (r + 1) % len)
                        forward.push_back(circle.edges[r]);
                    for (int r = (p - 1 + len) % len; r != q; r = (r - 1 + len) % len)
                        backward.push_back(circle.edges[r]);
                    m.gamma = backward.size() < forward.size() ? backward : forward;
                    const int c1 = total - in.self - crossing_alpha + static_cast<int>(m.gamma.size());
                    if (c1 >= total)
                        continue;
                    if (in.self + c1 > total)
                        throw EmbeddingError("C move would add crossings");
                }
                m.result = apply_c(d, m);
                if (m.result.d0.crossing_count() != in.self ||
                    (!split && m.result.d1.crossing_count() != total - in.self - crossing_alpha +
                                                                 static_cast<int>(m.gamma.size())))
                    throw EmbeddingError("C move produced unexpected crossing counts");
                m.total = m.result.d0.crossing_count() + m.result.d1.crossing_count();
                m.code0 = canonical_code(m.result.d0);
                m.code1 = canonical_code(m.result.d1);
                moves.push_back(std::move(m));
            }
        }
        for (DartId e : circle.edges) {
            cut[e] = 0;
            position[e] = -1;
        }
    }
    sort_unique(moves);
    return moves;
}

SplitPair apply_c(const Diagram& d, const CMove& m)
{
    if (m.split) {
        int index = cycle_index_of(d, m.alpha.edges.front());
        SplitPair out{extract_component(d, index), delete_arc(d, m.alpha)};
        return out;
    }
    const auto& edges = m.alpha.edges;
    SplitPair out{close_walk(d, edges, edges.front(), edges.back()), Diagram::unknot()};

    // The replacement follows the circle from alpha's entry to its exit.
    const int len = static_cast<int>(m.circle.size());
    auto pos = [&](DartId e) {
        return static_cast<int>(std::find(m.circle.edges.begin(), m.circle.edges.end(), e) - m.circle.edges.begin());
    };
    const int p = pos(edges.front()), q = pos(edges.back());
    if (p == len || q == len)
        throw PathError("alpha does not end on the circle");
    const bool forward = m.gamma.empty() ? (p + 1) % len == q : pos(m.gamma.front()) == (p + 1) % len;
    DualPath path;
    path.from = forward ? m.circle.faces[(p + 1) % len] : m.circle.faces[p];
    path.to = forward ? m.circle.faces[q] : m.circle.faces[(q + 1) % len];
    path.crossed = m.gamma;
    std::vector<Level> levels;
    for (DartId e : m.gamma) {
        auto it = std::find_if(m.betas.begin(), m.betas.end(), [&](const ArcRef& b) {
            return !b.closed && (b.edges.front() == e || b.edges.back() == e);
        });
        if (it == m.betas.end())
            throw PathError("circle edge belongs to no strand");
        Level beta = m.labeling[static_cast<std::size_t>(it - m.betas.begin())];
        levels.push_back(flip(beta));
    }
    out.d1 = insert_arc(cut_arc(d, m.alpha), path, levels);
    return out;
}

namespace {

// Two circles are disjoint when they share no edge and their chords through
// any common face do not interleave along the face boundary.
bool circles_disjoint(const Diagram& d, const FaceMap& fm, std::span<const int> face_pos, const TransverseCircle& a,
                      const TransverseCircle& b)
{
    for (DartId e : a.edges)
        if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end())
            return false;
    auto chord = [&](const TransverseCircle& c, std::size_t i) {
        FaceId f = c.faces[i];
        auto at = [&](DartId e) { return face_pos[fm.face_of[e] == f ? e : d.partner(e)]; };
        return std::pair(at(c.edges[(i + c.size() - 1) % c.size()]), at(c.edges[i]));
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a.faces[i] != b.faces[j])
                continue;
            auto [p, q] = chord(a, i);
            auto [r, s] = chord(b, j);
            if (p > q)
                std::swap(p, q);
            bool r_in = p < r && r < q, s_in = p < s && s < q;
            if (r_in != s_in)
                return false;
        }
    }
    return true;
}

struct SideInfo {
    int circle;
    bool left;
    std::vector<std::uint8_t> side;
    std::vector<std::uint64_t> bits;
    int count;
};

bool subset(const SideInfo& a, const SideInfo& b)
{
    for (std::size_t w = 0; w < a.bits.size(); ++w)
        if (a.bits[w] & ~b.bits[w])
            return false;
    return true;
}

} // namespace

std::vector<CTildeMove> find_ctilde(const Diagram& d, int max_len)
{
    require_connected(d);
    std::vector<CTildeMove> moves;
    const int total = d.crossing_count();
    if (total == 0)
        return moves;
    const auto fm = face_map(d);
    std::vector<int> face_pos(d.dart_count(), -1);
    for (const auto& face : fm.faces)
        for (std::size_t i = 0; i < face.size(); ++i)
            face_pos[face[i]] = static_cast<int>(i);

    const auto circles = enumerate_transverse_circles(d, max_len);
    std::vector<SideInfo> sides;
    for (int i = 0; i < static_cast<int>(circles.size()); ++i) {
        auto left = left_side(d, circles[i]);
        for (bool l : {true, false}) {
            SideInfo s{i, l, left, std::vector<std::uint64_t>((total + 63) / 64, 0), 0};
            if (!l)
                for (auto& v : s.side)
                    v = !v;
            for (CrossingId c = 0; c < total; ++c)
                if (s.side[c]) {
                    s.bits[c / 64] |= std::uint64_t{1} << (c % 64);
                    ++s.count;
                }
            sides.push_back(std::move(s));
        }
    }

    std::vector<std::uint8_t> inner_cut(d.dart_count(), 0), outer_cut(d.dart_count(), 0);
    for (const auto& inner : sides) {
        for (const auto& outer : sides) {
            if (inner.circle == outer.circle || inner.count >= outer.count || !subset(inner, outer))
                continue;
            const auto& ci = circles[inner.circle];
            const auto& co = circles[outer.circle];
            if (!circles_disjoint(d, fm, face_pos, ci, co))
                continue;
            set_mask(ci, inner_cut, 1);
            set_mask(co, outer_cut, 1);
            auto pieces = pieces_inside(d, outer.side, outer_cut);
            auto crossings = members(outer.side);
            for (int a = 0; a < pieces.size(); ++a) {
                if (pieces.circle[a])
                    continue;
                const auto& walk = pieces.edges[a];
                const int m_last = static_cast<int>(walk.size()) - 1;
                int first_inner = -1, last_inner = -1;
                for (int k = 0; k <= m_last; ++k)
                    if (inner_cut[walk[k]]) {
                        if (first_inner < 0)
                            first_inner = k;
                        last_inner = k;
                    }
                if (first_inner < 0)
                    continue;
                for (bool from_front : {true, false}) {
                    const int k = from_front ? first_inner : last_inner;
                    // Piece ids: the other pieces keep theirs, alpha takes
                    // `alpha_id` and beta0 keeps `a`.
                    const int alpha_id = pieces.size();
                    std::vector<int> owner = pieces.owner;
                    std::vector<DartId> alpha, beta0;
                    for (int t = 0; t <= m_last; ++t) {
                        bool in_alpha = from_front ? t < k : t >= k;
                        if (in_alpha)
                            owner[walk[t]] = alpha_id;
                        if (from_front ? t <= k : t >= k)
                            alpha.push_back(walk[t]);
                        if (from_front ? t >= k : t <= k)
                            beta0.push_back(walk[t]);
                    }
                    auto in = interact(d, crossings, owner, alpha_id, pieces.size() + 1);
                    auto labels = label_others(in, alpha_id, pieces.size() + 1);
                    if (!labels)
                        continue;
                    CTildeMove mv;
                    mv.inner = ci;
                    mv.outer = co;
                    mv.inner_left = inner.left;
                    mv.outer_left = outer.left;
                    mv.alpha = std::move(alpha);
                    mv.beta0 = std::move(beta0);
                    // beta0 first, then the other strands in piece order.
                    mv.labeling.push_back((*labels)[a]);
                    for (int j = 0; j < pieces.size(); ++j)
                        if (j != a)
                            mv.labeling.push_back((*labels)[j]);
                    if (straighten(d, mv.alpha).erased.empty())
                        continue; // the second factor would be D itself
                    mv.result = apply_ctilde(d, mv);
                    // alpha may keep crossings with beta0 after straightening,
                    // which then count in both factors; such splits do not simplify.
                    if (mv.result.d0.crossing_count() >= total || mv.result.d1.crossing_count() >= total ||
                        mv.result.d0.crossing_count() + mv.result.d1.crossing_count() > total)
                        continue;
                    mv.total = mv.result.d0.crossing_count() + mv.result.d1.crossing_count();
                    mv.code0 = canonical_code(mv.result.d0);
                    mv.code1 = canonical_code(mv.result.d1);
                    moves.push_back(std::move(mv));
                }
            }
            set_mask(ci, inner_cut, 0);
            set_mask(co, outer_cut, 0);
        }
    }
    sort_unique(moves);
    return moves;
}

SplitPair apply_ctilde(const Diagram& d, const CTildeMove& m)
{
    if (m.alpha.size() < 2 || m.beta0.size() < 2)
        throw PathError("C-tilde pieces are too short");
    // Orient the whole strand piece as one walk from outer end to outer end.
    const bool alpha_first = m.alpha.back() == m.beta0.front();
    if (!alpha_first && m.beta0.back() != m.alpha.front())
        throw PathError("alpha and beta0 do not meet");
    auto straight_beta = straighten(d, m.beta0);
    std::vector<DartId> keep = m.alpha;
    keep.insert(keep.end(), straight_beta.kept.begin(), straight_beta.kept.end());
    DartId first = alpha_first ? m.alpha.front() : m.beta0.front();
    DartId last = alpha_first ? m.beta0.back() : m.alpha.back();
    SplitPair out{close_walk(d, keep, first, last), straightened_diagram(d, straighten(d, m.alpha))};
    return out;
}

std::string describe(const CMove& m, const Diagram&)
{
    std::ostringstream s;
    if (m.split)
        s << "C split-link: circle of " << m.alpha.edges.size() << " edges";
    else
        s << "C across a circle of " << m.circle.size() << " edges, arc of " << m.alpha.edges.size() << " edges, "
          << m.betas.size() << " other strand(s), closing half crosses " << m.gamma.size();
    s << " -> " << m.result.d0.crossing_count() << " + " << m.result.d1.crossing_count() << " crossings";
    return s.str();
}

std::string describe(const CTildeMove& m, const Diagram&)
{
    std::ostringstream s;
    s << "C-tilde between circles of " << m.inner.size() << " and " << m.outer.size() << " edges, arc of "
      << m.alpha.size() << " edges -> " << m.result.d0.crossing_count() << " + " << m.result.d1.crossing_count()
      << " crossings";
    return s.str();
}

} // namespace knotweed
