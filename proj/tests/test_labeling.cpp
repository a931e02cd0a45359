#include "oracles.hpp"

#include "knotweed/labeling.hpp"

#include <doctest.h>

#include <random>

using namespace knotweed;

TEST_CASE("solve agrees with exhaustive search on random problems")
{
    std::mt19937_64 rng(5);
    int solvable = 0, unsolvable = 0;
    for (int round = 0; round < 2000; ++round) {
        LabelProblem p;
        p.strand_count = 1 + static_cast<int>(rng() % 8);
        p.forced.resize(p.strand_count);
        for (auto& f : p.forced) {
            switch (rng() % 4) {
            case 0:
                f = Level::over;
                break;
            case 1:
                f = Level::under;
                break;
            default:
                break;
            }
        }
        const int edges = static_cast<int>(rng() % (2 * p.strand_count + 1));
        for (int e = 0; e < edges; ++e)
            p.dominance.emplace_back(static_cast<int>(rng() % p.strand_count), static_cast<int>(rng() % p.strand_count));
        auto result = solve(p);
        const bool expected = oracle::brute_satisfiable(p);
        CHECK(result.has_value() == expected);
        if (result) {
            CHECK(satisfies(p, *result));
            ++solvable;
        } else {
            ++unsolvable;
        }
    }
    CHECK(solvable > 100);
    CHECK(unsolvable > 100);
}

TEST_CASE("forced labels from meetings with the reference arc")
{
    using L = Level;
    CHECK(forced_label(std::vector<L>{}) == ForcedLabel::free);
    CHECK(forced_label(std::vector<L>{L::over, L::over}) == ForcedLabel::over);
    CHECK(forced_label(std::vector<L>{L::under}) == ForcedLabel::under);
    CHECK(forced_label(std::vector<L>{L::over, L::under}) == ForcedLabel::conflict);
}

TEST_CASE("dominance forces the partner of a lifted strand")
{
    // 0 over 1 and 1 forced over: 0 must be over too.
    LabelProblem p{2, {std::nullopt, Level::over}, {{0, 1}}};
    auto l = solve(p);
    REQUIRE(l);
    CHECK((*l)[0] == Level::over);
    // ... which contradicts forcing 0 under.
    p.forced[0] = Level::under;
    CHECK_FALSE(solve(p));
}
