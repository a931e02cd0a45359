#include "knotweed/labeling.hpp"

namespace knotweed {

std::optional<Labeling> solve(const LabelProblem& problem)
{
    const int n = problem.strand_count;
    std::vector<std::optional<Level>> value(n);
    std::vector<std::vector<int>> over_of(n), under_of(n); // k -> j with (j over k); j -> k
    for (auto [j, k] : problem.dominance) {
        over_of[k].push_back(j);
        under_of[j].push_back(k);
    }
    std::vector<int> queue;
    bool ok = true;
    auto set = [&](int s, Level l) {
        if (value[s]) {
            ok = ok && *value[s] == l;
            return;
        }
        value[s] = l;
        queue.push_back(s);
    };
    for (int s = 0; s < n && s < static_cast<int>(problem.forced.size()); ++s)
        if (problem.forced[s])
            set(s, *problem.forced[s]);
    while (ok && !queue.empty()) {
        int s = queue.back();
        queue.pop_back();
        // An over strand lifts everything passing over it; an under strand
        // pushes down everything it passes over.
        if (*value[s] == Level::over)
            for (int j : over_of[s])
                set(j, Level::over);
        else
            for (int k : under_of[s])
                set(k, Level::under);
    }
    if (!ok)
        return std::nullopt;
    Labeling out(n, Level::under);
    for (int s = 0; s < n; ++s)
        if (value[s])
            out[s] = *value[s];
    return out;
}

bool satisfies(const LabelProblem& problem, const Labeling& labeling)
{
    if (static_cast<int>(labeling.size()) != problem.strand_count)
        return false;
    for (int s = 0; s < problem.strand_count && s < static_cast<int>(problem.forced.size()); ++s)
        if (problem.forced[s] && *problem.forced[s] != labeling[s])
            return false;
    for (auto [j, k] : problem.dominance)
        if (labeling[j] == Level::under && labeling[k] == Level::over)
            return false;
    return true;
}

ForcedLabel forced_label(std::span<const Level> meetings)
{
    if (meetings.empty())
        return ForcedLabel::free;
    for (Level l : meetings)
        if (l != meetings.front())
            return ForcedLabel::conflict;
    return meetings.front() == Level::over ? ForcedLabel::over : ForcedLabel::under;
}

} // namespace knotweed
