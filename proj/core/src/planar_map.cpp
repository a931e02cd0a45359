#include "planar_map.hpp"

#include <algorithm>

namespace knotweed::detail {

namespace {

bool is_sentinel(DartId d) { return d == PlanarMap::kFreeA || d == PlanarMap::kFreeB; }

} // namespace

PlanarMap::PlanarMap(const Diagram& d)
    : link_(d.pairing().begin(), d.pairing().end()),
      removed_(d.dart_count(), 0),
      incoming_(d.dart_count(), 0),
      over_axis_(d.crossing_count(), 1),
      smoothed_(d.crossing_count(), 0)
{
    extra_loops = d.trivial_loops();
    for (DartId x = 0; x < d.dart_count(); ++x)
        incoming_[x] = d.is_incoming(x) ? 1 : 0;
}

void PlanarMap::link(DartId a, DartId b)
{
    if (a >= 0)
        link_[a] = b;
    if (b >= 0)
        link_[b] = a;
}

void PlanarMap::drop_dart(DartId d)
{
    removed_[d] = 1;
    link_[d] = kNone;
}

void PlanarMap::remove_edges(const std::vector<DartId>& edges, bool open_cut)
{
    const std::size_t last = edges.size() - 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        DartId t = edges[i];
        DartId h = link_[t];
        if (t < 0 || h < 0 || removed_[t] || removed_[h])
            throw EmbeddingError("arc runs over an edge that is already gone");
        if (open_cut && i == 0) {
            link_[t] = kFreeA;
        } else {
            removed_[t] = 1;
            link_[t] = kNone;
        }
        if (open_cut && i == last) {
            link_[h] = kFreeB;
        } else {
            removed_[h] = 1;
            link_[h] = kNone;
        }
    }
}

std::pair<DartId, DartId> PlanarMap::split_edge(DartId d, bool from_left, Level level)
{
    DartId e = link_[d];
    if (d < 0 || e < 0 || removed_[d] || removed_[e])
        throw PathError("cannot place a crossing on a removed edge");
    CrossingId z = crossing_count();
    link_.resize(link_.size() + 4, kNone);
    removed_.resize(removed_.size() + 4, 0);
    incoming_.resize(incoming_.size() + 4, 0);
    over_axis_.push_back(level == Level::over ? 1 : 0);
    smoothed_.push_back(0);

    DartId z0 = make_dart(z, 0), z2 = make_dart(z, 2);
    link(d, z0);
    link(e, z2);
    incoming_[z0] = incoming_[d] ? 0 : 1;
    incoming_[z2] = incoming_[e] ? 0 : 1;
    DartId in = make_dart(z, from_left ? 3 : 1);
    DartId out = opposite(in);
    incoming_[in] = 1;
    incoming_[out] = 0;
    return {in, out};
}

void PlanarMap::smooth(CrossingId x, std::pair<DartId, DartId> first, std::pair<DartId, DartId> second)
{
    smoothed_[x] = 1;
    smoothing_.push_back(first);
    smoothing_.push_back(second);
}

void PlanarMap::connect_free_ends(DartId in, DartId out)
{
    pending_ends_ = true;
    pending_in_ = in;
    pending_out_ = out;
}

void PlanarMap::join_free_ends() { pending_join_ = true; }

void PlanarMap::dissolve(DartId p, DartId q, bool& ends_met)
{
    DartId a = link_[p];
    DartId b = link_[q];
    removed_[p] = removed_[q] = 1;
    link_[p] = link_[q] = kNone;
    if (a == q)
        return void(++extra_loops);
    if (is_sentinel(a) && is_sentinel(b)) {
        ends_met = true;
        return;
    }
    link(a, b);
}

Diagram PlanarMap::finish()
{
    const int n = crossing_count();
    std::vector<std::pair<DartId, DartId>> pairs;
    for (CrossingId c = 0; c < n; ++c) {
        if (smoothed_[c])
            continue;
        std::vector<DartId> live;
        for (int s = 0; s < 4; ++s)
            if (!removed_[make_dart(c, s)])
                live.push_back(make_dart(c, s));
        if (live.size() == 2)
            pairs.emplace_back(live[0], live[1]);
        else if (live.size() != 0 && live.size() != 4)
            throw EmbeddingError("surgery left a crossing with an odd number of strands");
    }
    pairs.insert(pairs.end(), smoothing_.begin(), smoothing_.end());

    DartId fa = kNone, fb = kNone;
    bool ends_met = false;
    for (auto [p, q] : pairs)
        dissolve(p, q, ends_met);
    for (CrossingId c = 0; c < n; ++c)
        if (smoothed_[c])
            for (int s = 0; s < 4; ++s)
                removed_[make_dart(c, s)] = 1;

    for (DartId x = 0; x < static_cast<DartId>(link_.size()); ++x) {
        if (removed_[x])
            continue;
        if (link_[x] == kFreeA)
            fa = x;
        else if (link_[x] == kFreeB)
            fb = x;
    }
    bool have_ends = fa != kNone || fb != kNone || ends_met;
    if (pending_ends_) {
        if (ends_met) {
            link(pending_out_, pending_in_);
        } else {
            if (fa == kNone || fb == kNone)
                throw EmbeddingError("missing free end");
            link(fa, pending_in_);
            link(pending_out_, fb);
        }
    } else if (pending_join_) {
        if (ends_met)
            ++extra_loops;
        else if (fa == kNone || fb == kNone)
            throw EmbeddingError("missing free end");
        else
            link(fa, fb);
    } else if (have_ends) {
        throw EmbeddingError("free ends left unattached");
    }

    // Compact live crossings.
    std::vector<int> new_id(n, -1);
    int count = 0;
    for (CrossingId c = 0; c < n; ++c) {
        bool alive = !smoothed_[c];
        for (int s = 0; s < 4 && alive; ++s)
            alive = !removed_[make_dart(c, s)];
        if (alive)
            new_id[c] = count++;
    }

    // Orient each strand by majority vote with the surviving flags.
    const auto total = static_cast<DartId>(link_.size());
    std::vector<std::uint8_t> seen(total, 0);
    std::vector<std::uint8_t> is_in(total, 0);
    std::vector<DartId> walk;
    for (DartId start = 0; start < total; ++start) {
        if (removed_[start] || seen[start] || new_id[crossing_of(start)] < 0)
            continue;
        walk.clear();
        int agree = 0, disagree = 0;
        DartId d = start;
        do {
            DartId p = link_[d];
            if (p < 0 || removed_[p])
                throw EmbeddingError("dangling dart after surgery");
            seen[d] = seen[p] = 1;
            walk.push_back(d);
            (incoming_[d] ? disagree : agree) += 1;
            (incoming_[p] ? agree : disagree) += 1;
            d = opposite(p);
        } while (d != start);
        bool forward = agree >= disagree;
        for (DartId x : walk) {
            is_in[x] = forward ? 0 : 1;
            is_in[link_[x]] = forward ? 1 : 0;
        }
    }

    std::vector<int> rot(n, 0);
    std::vector<std::uint8_t> over_in(count, 1);
    for (CrossingId c = 0; c < n; ++c) {
        if (new_id[c] < 0)
            continue;
        int under_parity = over_axis_[c] ^ 1;
        int in_under = is_in[make_dart(c, under_parity)] ? under_parity : under_parity + 2;
        int in_over = is_in[make_dart(c, over_axis_[c])] ? over_axis_[c] : over_axis_[c] + 2;
        rot[c] = in_under;
        over_in[new_id[c]] = static_cast<std::uint8_t>((in_over - in_under) & 3);
    }
    std::vector<DartId> pairing(4 * static_cast<std::size_t>(count), kNone);
    auto map_dart = [&](DartId x) { return make_dart(new_id[crossing_of(x)], slot_of(x) - rot[crossing_of(x)]); };
    for (DartId x = 0; x < total; ++x) {
        if (new_id[crossing_of(x)] < 0)
            continue;
        pairing[map_dart(x)] = map_dart(link_[x]);
    }
    return Diagram(std::move(pairing), std::move(over_in), extra_loops);
}

} // namespace knotweed::detail
