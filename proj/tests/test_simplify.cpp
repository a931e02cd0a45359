#include "fixtures.hpp"

#include "knotweed/corpus.hpp"
#include "knotweed/invariants.hpp"
#include "knotweed/simplify.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace knotweed;

TEST_CASE("minimal diagrams are fixed points")
{
    for (auto pd : {fixtures::trefoil, fixtures::figure_eight}) {
        auto t = procedure_p(fixtures::load(pd));
        CHECK(t.steps.empty());
        CHECK(t.status == Status::reduced);
        CHECK(t.outcome == fixtures::load(pd));
    }
}

TEST_CASE("the monster untangles in three decreasing moves")
{
    auto t = procedure_p(fixtures::load(fixtures::monster));
    CHECK(t.outcome.crossing_count() == 0);
    CHECK(t.steps.size() == 3);
    int c = t.c_before;
    for (const auto& s : t.steps) {
        CHECK(s.c_after == c + s.delta_c);
        CHECK(s.delta_c <= 0);
        c = s.c_after;
    }
}

TEST_CASE("traces are monotone and their codes track the diagrams")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Diagram d = inverse_move_scramble(fixtures::load(fixtures::trefoil), 8, seed);
        auto t = procedure_p(d);
        int c = d.crossing_count();
        for (const auto& s : t.steps) {
            CHECK(s.c_after <= c);
            c = s.c_after;
        }
        CHECK(t.outcome.crossing_count() == c);
        if (!t.steps.empty())
            CHECK(t.steps.back().code_after == canonical_code(t.outcome));
        CHECK(determinant(t.outcome) == 3);
    }
}

TEST_CASE("parallel search gives the same trace")
{
    Diagram d = inverse_move_scramble(fixtures::trefoil_figure_eight(), 8, 4);
    Budget one, four;
    four.threads = 4;
    CHECK(to_json(procedure_p(d, one)) == to_json(procedure_p(d, four)));
}

TEST_CASE("a tiny visiting budget is reported")
{
    // The composite has horizontal slides but no decreasing move.
    Budget b;
    b.max_visited = 1;
    auto t = procedure_p(fixtures::trefoil_figure_eight(), b);
    CHECK(t.status == Status::budget_exhausted);
    CHECK(procedure_p(fixtures::trefoil_figure_eight()).status == Status::reduced);
}

TEST_CASE("budget validation")
{
    Budget b;
    b.threads = 0;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    CHECK_THROWS_AS(procedure_p(fixtures::load(fixtures::trefoil), b), std::invalid_argument);
}

TEST_CASE("complete simplification splits the granny")
{
    auto tree = complete_simplify(fixtures::granny());
    REQUIRE(tree.children.size() == 2);
    CHECK(tree.split_type == MoveType::c);
    auto ls = leaves(tree);
    REQUIRE(ls.size() == 2);
    for (const Trace* l : ls) {
        CHECK(l->outcome.crossing_count() == 3);
        CHECK(l->status == Status::stuck);
        CHECK(determinant(l->outcome) == 3);
    }
    CHECK(leaf_crossing_total(tree) == 6);
    CHECK(total_is_conditional(tree));
}

TEST_CASE("complete simplification of an unknot is a single leaf")
{
    auto tree = complete_simplify(fixtures::load(fixtures::monster));
    CHECK(tree.is_leaf());
    CHECK(is_untangled(tree.node.outcome));
    CHECK_FALSE(total_is_conditional(tree));
}

TEST_CASE("JSON trace layout")
{
    auto t = procedure_p(fixtures::load(fixtures::monster));
    auto j = nlohmann::json::parse(to_json(t));
    CHECK(j["status"] == "reduced");
    CHECK(j["steps"].size() == 3);
    CHECK(j["input_code"] == code_hex(canonical_code(fixtures::load(fixtures::monster))));
    for (const auto& s : j["steps"]) {
        CHECK(s.contains("move"));
        CHECK(s.contains("type"));
        CHECK(s.contains("delta_c"));
        CHECK(s.contains("c_after"));
    }
    CHECK(j["children"].empty());
    CHECK(to_json(t) == to_json(procedure_p(fixtures::load(fixtures::monster))));

    auto tree = nlohmann::json::parse(to_json(complete_simplify(fixtures::granny())));
    CHECK(tree["split"]["type"] == "C");
    CHECK(tree["children"].size() == 2);
}

TEST_CASE("names")
{
    CHECK(to_string(MoveType::ctilde) == "C~");
    CHECK(to_string(Status::budget_exhausted) == "budget-exhausted");
    CHECK(code_hex(std::string("\x01\xab", 2)) == "01ab");
}
