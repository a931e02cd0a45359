#include "fixtures.hpp"
#include "oracles.hpp"

#include "knotweed/corpus.hpp"
#include "knotweed/invariants.hpp"

#include <doctest.h>

using namespace knotweed;

TEST_CASE("determinants of standard knots")
{
    CHECK(determinant(Diagram::unknot()) == 1);
    CHECK(determinant(fixtures::load(fixtures::kink)) == 1);
    CHECK(determinant(fixtures::load(fixtures::trefoil)) == 3);
    CHECK(determinant(fixtures::load(fixtures::figure_eight)) == 5);
    CHECK(determinant(fixtures::load(fixtures::monster)) == 1);
}

TEST_CASE("Alexander polynomials of standard knots")
{
    CHECK(alexander(Diagram::unknot()) == IntPoly::one());
    CHECK(alexander(fixtures::load(fixtures::trefoil)).to_string() == "t^2 - t + 1");
    CHECK(alexander(fixtures::load(fixtures::figure_eight)).to_string() == "t^2 - 3t + 1");
    CHECK(alexander(fixtures::load(fixtures::monster)) == IntPoly::one());
}

TEST_CASE("Goeritz determinant agrees with Fox colourings")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Diagram base = seed % 2 ? fixtures::load(fixtures::trefoil) : fixtures::trefoil_figure_eight();
        Diagram d = inverse_move_scramble(base, 6, seed);
        CHECK(determinant(d) == oracle::fox_determinant(d));
        BigInt at_minus_one = alexander(d).evaluate(-1);
        CHECK(abs(at_minus_one) == determinant(d));
    }
    CHECK(oracle::fox_determinant(fixtures::load(fixtures::monster)) == 1);
}

TEST_CASE("invariants multiply under connected sum")
{
    Diagram t = fixtures::load(fixtures::trefoil), f = fixtures::load(fixtures::figure_eight);
    Diagram s = connected_sum(t, f);
    CHECK(determinant(s) == determinant(t) * determinant(f));
    CHECK(alexander(s) == alexander(t) * alexander(f));
}

TEST_CASE("writhe and mirror")
{
    Diagram t = fixtures::load(fixtures::trefoil);
    CHECK(std::abs(writhe(t)) == 3);
    CHECK(writhe(fixtures::load(fixtures::figure_eight)) == 0);
    CHECK(determinant(t.mirror()) == 3);
    CHECK(alexander(t.mirror()) == alexander(t));
}

TEST_CASE("link invariants are refused")
{
    Diagram h = fixtures::load(fixtures::hopf);
    CHECK_THROWS_AS(determinant(h), MultiComponentError);
    CHECK_THROWS_AS(alexander(h), MultiComponentError);
}
