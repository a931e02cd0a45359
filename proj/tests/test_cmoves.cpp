#include "fixtures.hpp"
#include "oracles.hpp"

#include "knotweed/cmoves.hpp"
#include "knotweed/corpus.hpp"
#include "knotweed/invariants.hpp"

#include <doctest.h>

#include <set>

using namespace knotweed;

namespace {

std::set<std::vector<DartId>> edge_sets(const std::vector<TransverseCircle>& circles)
{
    std::set<std::vector<DartId>> out;
    for (const auto& c : circles) {
        auto e = c.edges;
        std::sort(e.begin(), e.end());
        out.insert(e);
    }
    return out;
}

void check_split(const Diagram& d, const SplitPair& p)
{
    CHECK(p.d0.crossing_count() + p.d1.crossing_count() <= d.crossing_count());
    CHECK(p.d0.crossing_count() < d.crossing_count());
    CHECK(p.d1.crossing_count() < d.crossing_count());
    CHECK(determinant(p.d0) * determinant(p.d1) == determinant(d));
    CHECK(alexander(p.d0) * alexander(p.d1) == alexander(d));
}

} // namespace

TEST_CASE("transverse circles match exhaustive dual-cycle search")
{
    std::vector<Diagram> diagrams{fixtures::load(fixtures::trefoil), fixtures::load(fixtures::figure_eight),
                                  fixtures::granny(), fixtures::load(fixtures::monster)};
    for (const auto& d : diagrams) {
        auto fm = face_map(d);
        for (int len = 2; len <= 4; ++len) {
            auto circles = enumerate_transverse_circles(d, len);
            CHECK(circles.size() == edge_sets(circles).size());
            CHECK(edge_sets(circles) == oracle::brute_dual_cycles(d, fm, len));
        }
    }
}

TEST_CASE("trefoil circles")
{
    Diagram t = fixtures::load(fixtures::trefoil);
    CHECK(enumerate_transverse_circles(t, 3).empty());
    CHECK(enumerate_transverse_circles(t, 4).size() == 3);
}

TEST_CASE("a circle walks face to face and splits the crossings")
{
    Diagram d = fixtures::trefoil_figure_eight();
    auto fm = face_map(d);
    for (const auto& c : enumerate_transverse_circles(d, 6)) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            DartId e = c.edges[i];
            std::set<FaceId> sides{fm.face_of[e], fm.face_of[d.partner(e)]};
            CHECK(sides == std::set<FaceId>{c.faces[i], c.faces[(i + 1) % c.size()]});
        }
        auto left = left_side(d, c);
        CHECK(static_cast<int>(left.size()) == d.crossing_count());
        // No diagram edge joins the two sides except the ones the circle crosses.
        for (DartId e : d.edges()) {
            bool on_circle = std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
            if (!on_circle)
                CHECK(left[d.tail(e)] == left[d.head(e)]);
        }
    }
}

TEST_CASE("straightening erases curls as they form")
{
    Diagram t = fixtures::load(fixtures::trefoil);
    for (DartId e : t.edges()) {
        Diagram k = add_kink(t, e, true, false);
        const CrossingId z = t.crossing_count();
        // Walk from the edge entering the kink to the edge leaving it.
        DartId in = k.edge_of(make_dart(z, 0));
        std::vector<DartId> walk{in};
        while (walk.size() < 4)
            walk.push_back(k.next_edge(walk.back()));
        auto s = straighten(k, walk);
        CHECK(s.kept.front() == walk.front());
        CHECK(s.kept.back() == walk.back());
        CHECK(s.kept.size() + s.erased.size() == walk.size());
        std::set<CrossingId> seen;
        for (std::size_t i = 1; i < s.kept.size(); ++i)
            CHECK(seen.insert(k.tail(s.kept[i])).second);
        CHECK(std::find(s.corners.begin(), s.corners.end(), z) != s.corners.end());
    }
    // A simple walk is left alone.
    Diagram f = fixtures::load(fixtures::figure_eight);
    std::vector<DartId> walk{f.edges().front()};
    walk.push_back(f.next_edge(walk.back()));
    auto s = straighten(f, walk);
    CHECK(s.kept == walk);
    CHECK(s.erased.empty());
}

TEST_CASE("prime minimal diagrams admit no C move")
{
    CHECK(find_c(fixtures::load(fixtures::trefoil), 8).empty());
    CHECK(find_c(fixtures::load(fixtures::figure_eight), 8).empty());
}

TEST_CASE("C splits the granny into two trefoils")
{
    Diagram g = fixtures::granny();
    auto moves = find_c(g, 8);
    REQUIRE_FALSE(moves.empty());
    const auto& m = moves.front();
    CHECK(m.circle.size() == 2);
    CHECK(m.result.d0.crossing_count() == 3);
    CHECK(m.result.d1.crossing_count() == 3);
    check_split(g, m.result);
    auto again = apply_c(g, m);
    CHECK(canonical_code(again.d0) == m.code0);
    CHECK(canonical_code(again.d1) == m.code1);
}

TEST_CASE("C splits trefoil # figure-eight")
{
    Diagram d = fixtures::trefoil_figure_eight();
    auto moves = find_c(d, 8);
    REQUIRE_FALSE(moves.empty());
    std::multiset<int> sizes{moves.front().result.d0.crossing_count(), moves.front().result.d1.crossing_count()};
    CHECK(sizes == std::multiset<int>{3, 4});
    for (const auto& m : moves)
        check_split(d, m.result);
}

TEST_CASE("C moves on scrambled composites respect the invariants")
{
    int seen = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Diagram d = inverse_move_scramble(fixtures::trefoil_figure_eight(), 3, seed);
        for (const auto& m : find_c(d, 6)) {
            check_split(d, m.result);
            ++seen;
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("C-tilde splits a scrambled composite")
{
    Diagram d = inverse_move_scramble(fixtures::trefoil_figure_eight(), 3, 3);
    REQUIRE(d.crossing_count() == 9);
    auto moves = find_ctilde(d, 6);
    REQUIRE_FALSE(moves.empty());
    bool nontrivial = false;
    for (const auto& m : moves) {
        check_split(d, m.result);
        CHECK_FALSE(straighten(d, m.alpha).erased.empty());
        auto again = apply_ctilde(d, m);
        CHECK(canonical_code(again.d0) == m.code0);
        CHECK(canonical_code(again.d1) == m.code1);
        nontrivial = nontrivial || (m.result.d0.crossing_count() >= 3 && m.result.d1.crossing_count() >= 3);
    }
    CHECK(nontrivial);
}

TEST_CASE("C refuses split diagrams")
{
    Diagram two = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\nunknots: 1");
    CHECK_THROWS_AS(find_c(two, 4), SplitDiagramError);
}
