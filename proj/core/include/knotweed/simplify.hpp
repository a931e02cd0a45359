#pragma once

#include "knotweed/cmoves.hpp"
#include "knotweed/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotweed {

struct Budget {
    int max_visited = 10000; // diagrams reached by horizontal moves in one search
    int c_max_len = 8;       // longest transverse circle tried by C and C-tilde
    int geodesic_cap = 64;
    int threads = 1;
    bool use_ctilde = true;

    void validate() const; // throws std::invalid_argument
};

enum class MoveType { z1, z2, z3, c, ctilde };
std::string to_string(MoveType t);

struct TraceStep {
    MoveType type = MoveType::z3;
    std::string move;
    int delta_c = 0;
    int c_after = 0;
    CanonicalCode code_after;
};

enum class Status { reduced, stuck, budget_exhausted };
std::string to_string(Status s);

struct Trace {
    CanonicalCode input_code;
    int c_before = 0;
    std::vector<TraceStep> steps;
    Diagram outcome;
    Status status = Status::reduced;
};

// One search from a diagram: horizontal Z3 steps then one decreasing step.
struct StepResult {
    std::optional<std::vector<TraceStep>> steps; // empty when nothing decreases
    Diagram result;
    bool exhausted = false; // the visited cap was hit
};

StepResult reduce_step(const Diagram& d, const Budget& b = {});
Trace procedure_p(const Diagram& d, const Budget& b = {});

struct SumTree {
    Trace node;
    std::string split;              // description of the C or C-tilde move, if any
    MoveType split_type = MoveType::c;
    std::vector<SumTree> children;  // empty or two

    bool is_leaf() const { return children.empty(); }
};

SumTree complete_simplify(const Diagram& d, const Budget& b = {});

bool is_untangled(const Diagram& d);

std::vector<const Trace*> leaves(const SumTree& t);
int leaf_crossing_total(const SumTree& t);
// The total is only a crossing-number statement if crossing numbers add
// under connected sum, which is unproven; true when two or more leaves
// remain tangled.
bool total_is_conditional(const SumTree& t);

std::string code_hex(const CanonicalCode& code);
std::string to_json(const Trace& t, int indent = 2);
std::string to_json(const SumTree& t, int indent = 2);

} // namespace knotweed
