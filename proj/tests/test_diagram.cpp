#include "fixtures.hpp"

#include "knotweed/invariants.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace knotweed;

TEST_CASE("fixtures parse with the expected crossing counts")
{
    CHECK(fixtures::load(fixtures::kink).crossing_count() == 1);
    CHECK(fixtures::load(fixtures::bigon).crossing_count() == 2);
    CHECK(fixtures::load(fixtures::trefoil).crossing_count() == 3);
    CHECK(fixtures::load(fixtures::figure_eight).crossing_count() == 4);
    CHECK(fixtures::load(fixtures::monster).crossing_count() == 10);
    CHECK(fixtures::load(fixtures::hopf).component_count() == 2);
}

TEST_CASE("connected diagrams satisfy Euler's formula")
{
    for (auto pd : {fixtures::kink, fixtures::bigon, fixtures::trefoil, fixtures::figure_eight, fixtures::monster,
                    fixtures::hopf}) {
        Diagram d = fixtures::load(pd);
        auto fm = face_map(d);
        // V - E + F = 2 with E = 2V.
        CHECK(fm.face_count() == d.crossing_count() + 2);
        int darts = 0;
        for (const auto& f : fm.faces)
            darts += static_cast<int>(f.size());
        CHECK(darts == d.dart_count());
    }
}

TEST_CASE("PD round trip keeps the canonical code")
{
    for (auto pd : {fixtures::kink, fixtures::bigon, fixtures::trefoil, fixtures::figure_eight, fixtures::monster}) {
        Diagram d = fixtures::load(pd);
        Diagram back = parse_pd(emit_pd(d));
        CHECK(back.crossing_count() == d.crossing_count());
        CHECK(canonical_code(back) == canonical_code(d));
    }
}

TEST_CASE("canonical code ignores crossing numbering")
{
    std::mt19937_64 rng(11);
    for (auto pd : {fixtures::trefoil, fixtures::figure_eight, fixtures::monster}) {
        Diagram d = fixtures::load(pd);
        const auto code = canonical_code(d);
        std::vector<int> perm(d.crossing_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 10; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_code(d.relabeled(perm)) == code);
        }
    }
}

TEST_CASE("canonical code separates different diagrams")
{
    Diagram t = fixtures::load(fixtures::trefoil);
    CHECK(canonical_code(t) != canonical_code(t.mirror()));
    CHECK(canonical_code(t) != canonical_code(fixtures::load(fixtures::figure_eight)));
    CHECK(canonical_code(fixtures::granny()) != canonical_code(connected_sum(t, t.mirror())));
}

TEST_CASE("mirror negates every sign")
{
    Diagram t = fixtures::load(fixtures::trefoil);
    CHECK(writhe(t.mirror()) == -writhe(t));
    CHECK(t.mirror().mirror() == t);
}

TEST_CASE("connected sum adds crossings and keeps one component")
{
    Diagram s = fixtures::trefoil_figure_eight();
    CHECK(s.crossing_count() == 7);
    CHECK(s.component_count() == 1);
    CHECK(face_map(s).face_count() == 9);
}

TEST_CASE("malformed PD is rejected")
{
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), LabelError);
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"), ParseError);
    CHECK_NOTHROW(parse_pd("PD[X[1, 4, 2, 5], X[3, 6, 4, 1], X[5, 2, 6, 3]]"));
}

TEST_CASE("the unknot header gives crossingless diagrams")
{
    Diagram u = parse_pd("unknots: 2");
    CHECK(u.crossing_count() == 0);
    CHECK(u.component_count() == 2);
    CHECK(Diagram::unknot().component_count() == 1);
}
