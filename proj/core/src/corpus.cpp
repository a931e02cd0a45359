#include "knotweed/corpus.hpp"

#include "knotweed/zmoves.hpp"
#include "planar_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#ifndef KNOTWEED_DEFAULT_CORPUS_DIR
#define KNOTWEED_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace knotweed {

Diagram CorpusEntry::diagram() const
{
    if (!transcribed)
        throw CorpusError("corpus entry '" + name + "' has no diagram in this repository");
    return parse_pd(pd);
}

std::filesystem::path corpus_dir()
{
    if (const char* env = std::getenv("KNOTWEED_CORPUS_DIR"); env && *env)
        return env;
    return KNOTWEED_DEFAULT_CORPUS_DIR;
}

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw CorpusError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::optional<int> optional_int(const nlohmann::json& j, const char* key)
{
    if (auto it = j.find(key); it != j.end() && !it->is_null())
        return it->get<int>();
    return std::nullopt;
}

} // namespace

std::vector<CorpusEntry> corpus_entries()
{
    const auto dir = corpus_dir();
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(std::string("bad corpus manifest: ") + e.what());
    }
    std::vector<CorpusEntry> out;
    for (const auto& j : manifest.at("entries")) {
        CorpusEntry e;
        e.name = j.at("name").get<std::string>();
        e.tier = j.at("tier").get<std::string>() == "stretch" ? Tier::stretch : Tier::core;
        e.expected_c = optional_int(j, "expected_c");
        e.expected_final_c = optional_int(j, "expected_final_c");
        e.expected_moves = optional_int(j, "expected_moves");
        e.expected_det = optional_int(j, "expected_det");
        e.expected_horizontal = optional_int(j, "expected_horizontal");
        e.provenance = j.value("provenance", "");
        if (auto f = j.find("file"); f != j.end() && !f->is_null()) {
            e.transcribed = true;
            e.pd = read_file(dir / f->get<std::string>());
        }
        out.push_back(std::move(e));
    }
    return out;
}

CorpusEntry builtin(const std::string& name)
{
    for (auto& e : corpus_entries())
        if (e.name == name)
            return e;
    throw CorpusError("unknown corpus entry '" + name + "'");
}

namespace {

struct Pass {
    int segment;
    double t;
    int crossing;
};

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

} // namespace

std::string polyline_pd(std::span<const PolyPoint> pts)
{
    const int n = static_cast<int>(pts.size());
    if (n < 3)
        throw CorpusError("a closed polyline needs at least three points");
    struct Crossing {
        int seg[2];
        double t[2];
        double x, y;
    };
    std::vector<Crossing> crossings;
    constexpr double eps = 1e-9;
    for (int i = 0; i < n; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % n];
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            const auto& c = pts[j];
            const auto& d = pts[(j + 1) % n];
            double rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
            double den = cross2(rx, ry, sx, sy);
            double t = cross2(c.x - a.x, c.y - a.y, sx, sy);
            double u = cross2(c.x - a.x, c.y - a.y, rx, ry);
            if (std::abs(den) < eps) {
                if (std::abs(t) > eps)
                    continue;
                // Collinear: project onto r and test the intervals.
                double rr = rx * rx + ry * ry;
                double t0 = ((c.x - a.x) * rx + (c.y - a.y) * ry) / rr;
                double t1 = ((d.x - a.x) * rx + (d.y - a.y) * ry) / rr;
                if (std::max(t0, t1) > eps && std::min(t0, t1) < 1 - eps)
                    throw CorpusError("polyline has overlapping collinear segments");
                continue;
            }
            t /= den;
            u /= den;
            if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps)
                continue;
            if (t < eps || t > 1 - eps || u < eps || u > 1 - eps)
                throw CorpusError("polyline crosses itself at a vertex");
            crossings.push_back({{i, j}, {t, u}, a.x + t * rx, a.y + t * ry});
        }
    }
    const int v = static_cast<int>(crossings.size());
    if (v == 0)
        return "unknots: 1\n";
    std::vector<Pass> passes;
    for (int k = 0; k < v; ++k)
        for (int s = 0; s < 2; ++s)
            passes.push_back({crossings[k].seg[s], crossings[k].t[s], k});
    std::sort(passes.begin(), passes.end(),
              [](const Pass& a, const Pass& b) { return std::tie(a.segment, a.t) < std::tie(b.segment, b.t); });
    const int m = 2 * v;
    // Edge arriving at pass p is labelled p + 1; the one leaving is p + 2.
    auto arrive = [&](int p) { return p + 1; };
    auto leave = [&](int p) { return (p + 1) % m + 1; };
    std::vector<std::vector<int>> at(v);
    for (int p = 0; p < m; ++p)
        at[passes[p].crossing].push_back(p);
    auto height = [&](int p) {
        const auto& a = pts[passes[p].segment];
        const auto& b = pts[(passes[p].segment + 1) % n];
        return a.z + passes[p].t * (b.z - a.z);
    };
    auto direction = [&](int p) {
        const auto& a = pts[passes[p].segment];
        const auto& b = pts[(passes[p].segment + 1) % n];
        return std::pair(b.x - a.x, b.y - a.y);
    };
    std::ostringstream out;
    std::vector<int> order(v);
    for (int k = 0; k < v; ++k)
        order[k] = k;
    for (int k = 0; k < v; ++k) {
        int p = at[k][0], q = at[k][1];
        double hp = height(p), hq = height(q);
        if (std::abs(hp - hq) < eps)
            throw CorpusError("two passes at the same height");
        int under = hp < hq ? p : q, over = hp < hq ? q : p;
        auto [ux, uy] = direction(under);
        auto [ox, oy] = direction(over);
        bool over_out_next = cross2(-ux, -uy, ox, oy) > 0;
        out << (k ? " " : "") << "X[" << arrive(under) << "," << (over_out_next ? leave(over) : arrive(over)) << ","
            << leave(under) << "," << (over_out_next ? arrive(over) : leave(over)) << "]";
    }
    out << "\n";
    return out.str();
}

Diagram polyline_diagram(std::span<const PolyPoint> points) { return parse_pd(polyline_pd(points)); }

std::vector<PolyPoint> hass_nowik_polyline(int n)
{
    if (n < 1)
        throw CorpusError("the family starts at n = 1");
    std::vector<PolyPoint> p;
    auto add = [&](double x, double y, double z) { p.push_back({x, y, z}); };
    auto tongue_y = [](int i) { return 4.0 + 2.0 * i; };
    const double top = tongue_y(n - 1) + 2.0;

    // The loop: through the base crossing, round the disc, back through it.
    add(-1, -1, 1);
    add(1, 1, 0);
    add(6, 3, 0);
    add(6, top, 0);
    add(-6, top, 0);
    add(-6, 3, 0);
    add(-1, 1, 0);
    add(1, -1, 0);
    // Lower strand, then up to the tongues.
    add(8, -1, 0);
    for (int i = 0; i < n; ++i) {
        const double y = tongue_y(i);
        if (i > 0)
            add(12, y - 0.2, 1);
        // Tongue into the disc, over the loop.
        add(8, y - 0.2, 1);
        add(4, y - 0.2, 1);
        add(4, y + 0.2, 1);
        add(8, y + 0.2, 1);
        // A kink.
        add(9, y + 0.3, 1);
        add(11, y + 0.3, 1);
        add(11, y + 0.8, 2);
        add(10, y + 0.8, 2);
        add(10, y + 0.1, 2);
        add(12, y + 0.1, 1);
    }
    add(16, tongue_y(n - 1) + 0.1, 0);
    add(16, -3, 0);
    // Back left along the bottom, with clasps over and under the lower strand.
    const int clasps = 2 * n - 1;
    const double pitch = 6.0 / clasps;
    for (int k = clasps - 1; k >= 0; --k) {
        const double x = 1.5 + k * pitch;
        const double z = k % 2 ? -2 : 2;
        add(x + 0.4 * pitch, -3, z);
        add(x + 0.4 * pitch, 0, z);
        add(x, 0, z);
        add(x, -3, z);
    }
    add(-1, -3, 0);
    return p;
}

Diagram hass_nowik(int n)
{
    auto pts = hass_nowik_polyline(n);
    return polyline_diagram(pts);
}

Diagram add_kink(const Diagram& d, DartId edge, bool left, bool first_over)
{
    const int n = d.crossing_count();
    std::vector<DartId> pairing(d.pairing().begin(), d.pairing().end());
    std::vector<std::uint8_t> over_in;
    for (CrossingId c = 0; c < n; ++c)
        over_in.push_back(static_cast<std::uint8_t>(d.over_in_slot(c)));
    pairing.resize(4 * static_cast<std::size_t>(n + 1));
    auto z = [&](int s) { return make_dart(n, s); };
    auto pair = [&](DartId a, DartId b) {
        pairing[a] = b;
        pairing[b] = a;
    };
    // Slots (entry, exit) of the first and second pass.
    int first_in, first_out, second_in, second_out, over_slot;
    if (!first_over) {
        first_in = 0;
        first_out = 2;
        second_in = left ? 3 : 1;
        second_out = (second_in + 2) % 4;
        over_slot = second_in;
    } else {
        first_in = left ? 1 : 3;
        first_out = (first_in + 2) % 4;
        second_in = 0;
        second_out = 2;
        over_slot = first_in;
    }
    over_in.push_back(static_cast<std::uint8_t>(over_slot));
    pair(z(first_out), z(second_in));
    int loops = d.trivial_loops();
    if (n == 0) {
        if (loops == 0)
            throw DiagramError("no strand to put a kink on");
        --loops;
        pair(z(second_out), z(first_in));
    } else {
        DartId h = d.partner(edge);
        if (d.is_incoming(edge))
            throw DiagramError("edges are named by their outgoing dart");
        pair(edge, z(first_in));
        pair(z(second_out), h);
    }
    return Diagram(std::move(pairing), std::move(over_in), loops);
}

Diagram add_finger(const Diagram& d, DartId mover, bool left, DartId target, Level level)
{
    if (mover == target)
        throw DiagramError("a finger needs two different edges");
    const auto fm = face_map(d);
    const FaceId f = left ? fm.face_of[mover] : fm.face_of[d.partner(mover)];
    const bool target_left = fm.face_of[target] == f;
    if (!target_left && fm.face_of[d.partner(target)] != f)
        throw DiagramError("finger target does not border the mover's face");
    detail::PlanarMap m(d);
    m.remove_edges({mover}, true);
    // Going round the face, the mover's tail end must meet the crossing
    // nearer the target's head when both edges run the same way round it.
    const bool tail_first = left != target_left;
    auto near_tail = m.split_edge(target, tail_first == target_left, level);
    auto near_head = m.split_edge(make_dart(crossing_of(near_tail.first), 2), tail_first != target_left, level);
    auto [first, second] = tail_first ? std::pair(near_tail, near_head) : std::pair(near_head, near_tail);
    m.link(first.second, second.first);
    m.connect_free_ends(first.first, second.second);
    return m.finish();
}

Diagram inverse_move_scramble(const Diagram& d, int k, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    Diagram cur = d;
    for (int step = 0; step < k; ++step) {
        if (cur.crossing_count() == 0) {
            cur = add_kink(cur, 0, rng() & 1, rng() & 1);
            continue;
        }
        int op = static_cast<int>(pick(3));
        if (op == 2) {
            auto slides = find_z3(cur, {8, Z3Filter::horizontal});
            if (!slides.empty()) {
                cur = slides[pick(slides.size())].result;
                continue;
            }
            op = 1;
        }
        if (op == 0) {
            auto edges = cur.edges();
            cur = add_kink(cur, edges[pick(edges.size())], rng() & 1, rng() & 1);
            continue;
        }
        // Finger: two different edges on one face, the target with
        // different faces on its two sides.
        const auto fm = face_map(cur);
        std::vector<std::pair<DartId, DartId>> options;
        for (const auto& face : fm.faces)
            for (DartId a : face)
                for (DartId b : face) {
                    DartId ea = cur.edge_of(a), eb = cur.edge_of(b);
                    if (ea != eb && fm.face_of[eb] != fm.face_of[cur.partner(eb)])
                        options.emplace_back(a, eb);
                }
        if (options.empty()) {
            auto edges = cur.edges();
            cur = add_kink(cur, edges[pick(edges.size())], rng() & 1, rng() & 1);
            continue;
        }
        auto [a, target] = options[pick(options.size())];
        DartId mover = cur.edge_of(a);
        bool left = mover == a;
        cur = add_finger(cur, mover, left, target, (rng() & 1) ? Level::over : Level::under);
    }
    return cur;
}

} // namespace knotweed
