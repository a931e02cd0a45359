#include "knotweed/simplify.hpp"

#include "knotweed/zmoves.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <stdexcept>
#include <unordered_set>

namespace knotweed {

void Budget::validate() const
{
    if (max_visited <= 0 || c_max_len <= 0 || geodesic_cap <= 0 || threads <= 0)
        throw std::invalid_argument("budget values must be positive");
}

std::string to_string(MoveType t)
{
    switch (t) {
    case MoveType::z1:
        return "Z1";
    case MoveType::z2:
        return "Z2";
    case MoveType::z3:
        return "Z3";
    case MoveType::c:
        return "C";
    case MoveType::ctilde:
        return "C~";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::reduced:
        return "reduced";
    case Status::stuck:
        return "stuck";
    case Status::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

bool is_untangled(const Diagram& d) { return d.crossing_count() < 3; }

namespace {

struct Candidate {
    MoveType type;
    std::string move;
    int delta_c;
    Diagram result;
    CanonicalCode code;
};

struct Analysis {
    std::optional<Candidate> best;   // best decreasing move
    std::vector<Candidate> horizontal;
};

Analysis analyse(const Diagram& d, const Budget& b)
{
    Analysis a;
    if (d.crossing_count() == 0)
        return a;
    auto consider = [&](MoveType type, std::string text, int delta, const Diagram& result, const CanonicalCode& code) {
        if (!a.best || delta < a.best->delta_c)
            a.best = Candidate{type, std::move(text), delta, result, code};
    };
    // Each list is sorted by (delta_c, code), so the first entry of each
    // is its best; earlier move types win ties.
    if (auto z1 = find_z1(d); !z1.empty())
        consider(MoveType::z1, describe(z1.front(), d), z1.front().delta_c, z1.front().result, z1.front().result_code);
    if (auto z2 = find_z2(d); !z2.empty())
        consider(MoveType::z2, describe(z2.front(), d), z2.front().delta_c, z2.front().result, z2.front().result_code);
    auto z3 = find_z3(d, {b.geodesic_cap, Z3Filter::non_increasing});
    if (!z3.empty() && z3.front().delta_c < 0)
        consider(MoveType::z3, describe(z3.front(), d), z3.front().delta_c, z3.front().result, z3.front().result_code);
    for (auto& m : z3)
        if (m.delta_c == 0)
            a.horizontal.push_back({MoveType::z3, describe(m, d), 0, std::move(m.result), std::move(m.result_code)});
    return a;
}

struct Node {
    Diagram diagram;
    int parent;
    std::optional<Candidate> via;
};

} // namespace

StepResult reduce_step(const Diagram& d, const Budget& b)
{
    b.validate();
    StepResult out{std::nullopt, d, false};
    std::vector<Node> nodes;
    nodes.push_back({d, -1, std::nullopt});
    std::unordered_set<CanonicalCode> visited{canonical_code(d)};
    std::size_t next = 0;
    while (next < nodes.size()) {
        // Analyse a batch of queued diagrams (in parallel when allowed), then
        // consume the results strictly in queue order.
        const std::size_t batch = std::min(nodes.size() - next, static_cast<std::size_t>(b.threads));
        std::vector<Analysis> results(batch);
        if (batch == 1) {
            results[0] = analyse(nodes[next].diagram, b);
        } else {
            std::vector<std::future<Analysis>> jobs;
            for (std::size_t i = 0; i < batch; ++i)
                jobs.push_back(std::async(std::launch::async, analyse, std::cref(nodes[next + i].diagram), std::cref(b)));
            for (std::size_t i = 0; i < batch; ++i)
                results[i] = jobs[i].get();
        }
        for (std::size_t i = 0; i < batch; ++i, ++next) {
            auto& a = results[i];
            if (a.best) {
                std::vector<TraceStep> steps;
                int c = nodes[next].diagram.crossing_count();
                steps.push_back({a.best->type, a.best->move, a.best->delta_c, c + a.best->delta_c, a.best->code});
                for (int at = static_cast<int>(next); nodes[at].parent >= 0; at = nodes[at].parent) {
                    const auto& via = *nodes[at].via;
                    steps.push_back({via.type, via.move, 0, c, via.code});
                }
                std::reverse(steps.begin(), steps.end());
                out.steps = std::move(steps);
                out.result = std::move(a.best->result);
                return out;
            }
            for (auto& h : a.horizontal) {
                if (visited.contains(h.code))
                    continue;
                if (static_cast<int>(visited.size()) >= b.max_visited) {
                    out.exhausted = true;
                    break;
                }
                visited.insert(h.code);
                Diagram child = h.result;
                nodes.push_back({std::move(child), static_cast<int>(next), std::move(h)});
            }
        }
    }
    return out;
}

Trace procedure_p(const Diagram& d, const Budget& b)
{
    Trace t;
    t.input_code = canonical_code(d);
    t.c_before = d.crossing_count();
    Diagram cur = d;
    while (true) {
        auto r = reduce_step(cur, b);
        if (!r.steps) {
            t.status = r.exhausted ? Status::budget_exhausted : Status::reduced;
            break;
        }
        for (auto& s : *r.steps)
            t.steps.push_back(std::move(s));
        cur = std::move(r.result);
    }
    t.outcome = std::move(cur);
    return t;
}

SumTree complete_simplify(const Diagram& d, const Budget& b)
{
    SumTree tree;
    tree.node = procedure_p(d, b);
    const Diagram& out = tree.node.outcome;
    if (is_untangled(out))
        return tree;
    std::optional<SplitPair> pair;
    if (auto c = find_c(out, b.c_max_len); !c.empty()) {
        tree.split = describe(c.front(), out);
        tree.split_type = MoveType::c;
        pair = std::move(c.front().result);
    } else if (b.use_ctilde) {
        if (auto ct = find_ctilde(out, b.c_max_len); !ct.empty()) {
            tree.split = describe(ct.front(), out);
            tree.split_type = MoveType::ctilde;
            pair = std::move(ct.front().result);
        }
    }
    if (!pair) {
        if (tree.node.status == Status::reduced)
            tree.node.status = Status::stuck;
        return tree;
    }
    tree.children.push_back(complete_simplify(pair->d0, b));
    tree.children.push_back(complete_simplify(pair->d1, b));
    return tree;
}

std::vector<const Trace*> leaves(const SumTree& t)
{
    if (t.is_leaf())
        return {&t.node};
    std::vector<const Trace*> out;
    for (const auto& c : t.children) {
        auto sub = leaves(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

int leaf_crossing_total(const SumTree& t)
{
    int total = 0;
    for (const Trace* l : leaves(t))
        total += l->outcome.crossing_count();
    return total;
}

bool total_is_conditional(const SumTree& t)
{
    int tangled = 0;
    for (const Trace* l : leaves(t))
        tangled += is_untangled(l->outcome) ? 0 : 1;
    return tangled >= 2;
}

std::string code_hex(const CanonicalCode& code)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char ch : code) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 15]);
    }
    return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json trace_json(const Trace& t)
{
    Json j;
    j["input_code"] = code_hex(t.input_code);
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"move", s.move}, {"type", to_string(s.type)}, {"delta_c", s.delta_c}, {"c_after", s.c_after}});
    j["steps"] = std::move(steps);
    j["status"] = to_string(t.status);
    return j;
}

Json tree_json(const SumTree& t)
{
    Json j = trace_json(t.node);
    if (!t.is_leaf())
        j["split"] = {{"move", t.split}, {"type", to_string(t.split_type)}};
    Json children = Json::array();
    for (const auto& c : t.children)
        children.push_back(tree_json(c));
    j["children"] = std::move(children);
    return j;
}

} // namespace

std::string to_json(const Trace& t, int indent)
{
    Json j = trace_json(t);
    j["children"] = Json::array();
    return j.dump(indent);
}

std::string to_json(const SumTree& t, int indent) { return tree_json(t).dump(indent); }

} // namespace knotweed
