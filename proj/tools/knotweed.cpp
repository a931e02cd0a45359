#include "knotweed/corpus.hpp"
#include "knotweed/invariants.hpp"
#include "knotweed/simplify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace knotweed;

enum Exit { ok = 0, parse_failure = 1, invariant_violation = 2, budget_exhausted = 3, multi_component = 4 };

struct Failure {
    int code;
    std::string message;
};

Diagram load(const std::string& input)
{
    try {
        if (input.starts_with("corpus:"))
            return builtin(input.substr(7)).diagram();
        std::string text;
        if (input == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            text = s.str();
        } else {
            std::ifstream in(input, std::ios::binary);
            if (!in)
                throw Failure{parse_failure, "cannot read " + input};
            std::ostringstream s;
            s << in.rdbuf();
            text = s.str();
        }
        return parse_pd(text);
    } catch (const CorpusError& e) {
        throw Failure{parse_failure, e.what()};
    } catch (const DiagramError& e) {
        throw Failure{parse_failure, e.what()};
    }
}

struct SimplifyArgs {
    std::string input;
    std::string mode = "reduced";
    std::string output = "pd";
    bool trace = false;
    bool no_ctilde = false;
    Budget budget;
};

BigInt leaf_determinant_product(const SumTree& t)
{
    BigInt p = 1;
    for (const Trace* l : leaves(t))
        p *= determinant(l->outcome);
    return p;
}

bool any_exhausted(const SumTree& t)
{
    for (const Trace* l : leaves(t))
        if (l->status == Status::budget_exhausted)
            return true;
    return false;
}

int cmd_simplify(const SimplifyArgs& a)
{
    Diagram d = load(a.input);
    Budget b = a.budget;
    b.use_ctilde = !a.no_ctilde;
    if (d.component_count() > 1)
        throw Failure{multi_component, "simplification needs a knot diagram"};
    SumTree tree;
    std::string trace_text;
    if (a.mode == "complete") {
        tree = complete_simplify(d, b);
        trace_text = to_json(tree);
    } else {
        tree.node = procedure_p(d, b);
        trace_text = to_json(tree.node);
    }
    const BigInt det = determinant(d);
    if (leaf_determinant_product(tree) != det)
        throw Failure{invariant_violation, "determinant changed during simplification"};
    const auto finals = leaves(tree);
    if (a.output == "json") {
        nlohmann::ordered_json j;
        j["final"] = nlohmann::ordered_json::array();
        for (const Trace* l : finals)
            j["final"].push_back(emit_pd(l->outcome));
        j["crossings"] = leaf_crossing_total(tree);
        j["trace"] = nlohmann::ordered_json::parse(trace_text);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Trace* l : finals)
            std::cout << emit_pd(l->outcome);
        if (a.trace)
            std::cout << trace_text << "\n";
    }
    return any_exhausted(tree) ? budget_exhausted : ok;
}

int cmd_invariants(const std::string& input)
{
    Diagram d = load(input);
    if (d.component_count() > 1)
        throw Failure{multi_component, "invariants need a single-component diagram"};
    std::cout << "crossings: " << d.crossing_count() << "\n"
              << "writhe: " << writhe(d) << "\n"
              << "determinant: " << determinant(d) << "\n"
              << "alexander: " << alexander(d).to_string() << "\n";
    return ok;
}

int cmd_validate(const std::string& input)
{
    Diagram d = load(input);
    std::cout << "valid: " << d.crossing_count() << " crossings, " << d.component_count() << " component(s)"
              << (d.is_connected() ? "" : ", split") << "\n";
    return ok;
}

struct GenerateArgs {
    std::string family;
    std::string argument;
    int k = 10;
    std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& a)
{
    if (a.family == "hass-nowik") {
        int n = 0;
        try {
            n = std::stoi(a.argument);
        } catch (const std::exception&) {
            throw Failure{parse_failure, "hass-nowik needs a positive integer"};
        }
        if (n < 1)
            throw Failure{parse_failure, "hass-nowik needs a positive integer"};
        std::cout << emit_pd(hass_nowik(n));
        return ok;
    }
    if (a.family == "scramble") {
        if (a.argument.empty())
            throw Failure{parse_failure, "scramble needs an input diagram"};
        if (a.k < 0)
            throw Failure{parse_failure, "--k must be non-negative"};
        std::cout << emit_pd(inverse_move_scramble(load(a.argument), a.k, a.seed));
        return ok;
    }
    throw Failure{parse_failure, "unknown family '" + a.family + "' (expected hass-nowik or scramble)"};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Knot diagram simplification"};
    app.require_subcommand(1);

    SimplifyArgs simplify;
    auto* s = app.add_subcommand("simplify", "Simplify a diagram and print the result as PD");
    s->add_option("input", simplify.input, "PD file, corpus:<name>, or - for stdin")->required();
    s->add_option("--mode", simplify.mode, "reduced: Z moves only; complete: also split connected sums")
        ->check(CLI::IsMember({"reduced", "complete"}));
    s->add_flag("--trace", simplify.trace, "Print the move trace as JSON after the PD");
    s->add_option("--output", simplify.output, "Output format")->check(CLI::IsMember({"pd", "json"}));
    s->add_option("--max-visited", simplify.budget.max_visited, "Diagrams visited per horizontal search")
        ->check(CLI::PositiveNumber);
    s->add_option("--c-max-len", simplify.budget.c_max_len, "Longest transverse circle for C moves")
        ->check(CLI::PositiveNumber);
    s->add_option("--geodesic-cap", simplify.budget.geodesic_cap, "Shortest paths tried per Z3 arc")
        ->check(CLI::PositiveNumber);
    s->add_option("--threads", simplify.budget.threads, "Worker threads for the search")->check(CLI::Range(1, 256));
    s->add_flag("--no-ctilde", simplify.no_ctilde, "Skip the C-tilde split");

    std::string inv_input;
    auto* inv = app.add_subcommand("invariants", "Print crossings, writhe, determinant and Alexander polynomial");
    inv->add_option("input", inv_input, "PD file, corpus:<name>, or -")->required();

    std::string val_input;
    auto* val = app.add_subcommand("validate", "Parse a diagram and check that it is planar");
    val->add_option("input", val_input, "PD file, corpus:<name>, or -")->required();

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Emit a generated diagram as PD");
    g->add_option("family", gen.family, "hass-nowik or scramble")->required();
    g->add_option("argument", gen.argument, "n for hass-nowik; input diagram for scramble");
    g->add_option("--k", gen.k, "Number of random insertions (scramble)");
    g->add_option("--seed", gen.seed, "Random seed (scramble)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failure;
    }

    try {
        if (*s)
            return cmd_simplify(simplify);
        if (*inv)
            return cmd_invariants(inv_input);
        if (*val)
            return cmd_validate(val_input);
        return cmd_generate(gen);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const MultiComponentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return multi_component;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return invariant_violation;
    }
}
