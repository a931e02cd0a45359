#include "knotweed/diagram.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace knotweed {

namespace {

struct Tokens {
    std::vector<std::array<long, 4>> crossings;
    int unknots = 0;
    bool saw_header = false;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

class Scanner {
public:
    explicit Scanner(std::string_view s, int line) : s_(s), line_(line) {}

    bool done()
    {
        skip();
        return pos_ >= s_.size();
    }
    bool accept(std::string_view word)
    {
        skip();
        if (s_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }
    void expect(std::string_view word)
    {
        if (!accept(word))
            fail("expected '" + std::string(word) + "'");
    }
    long number(long min = 1)
    {
        skip();
        long v = 0;
        auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc() || p == s_.data() + pos_)
            fail("expected a label");
        pos_ = static_cast<std::size_t>(p - s_.data());
        if (v < min)
            fail(min == 1 ? "labels must be positive" : "count must not be negative");
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + what);
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ','))
            ++pos_;
    }
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

Tokens tokenize(std::string_view text)
{
    Tokens t;
    int line_no = 0;
    int open_pd = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.starts_with("unknots:")) {
            if (t.saw_header)
                throw ParseError("line " + std::to_string(line_no) + ": repeated unknots header");
            Scanner sc(line.substr(8), line_no);
            t.unknots = static_cast<int>(sc.number(0));
            if (!sc.done())
                sc.fail("trailing text after unknots count");
            t.saw_header = true;
            continue;
        }
        Scanner sc(line, line_no);
        while (!sc.done()) {
            if (sc.accept("PD[")) {
                ++open_pd;
                continue;
            }
            if (open_pd > 0 && sc.accept("]")) {
                --open_pd;
                continue;
            }
            sc.expect("X[");
            std::array<long, 4> x{};
            for (auto& v : x)
                v = sc.number();
            sc.expect("]");
            t.crossings.push_back(x);
        }
    }
    if (open_pd != 0)
        throw ParseError("unbalanced PD[ ... ] wrapper");
    return t;
}

} // namespace

Diagram parse_pd(std::string_view text)
{
    Tokens t = tokenize(text);
    const int n = static_cast<int>(t.crossings.size());
    if (n == 0 && !t.saw_header)
        throw ParseError("no crossings and no unknots header");

    std::map<long, std::vector<int>> where; // label -> dart ids (slot as listed)
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            where[t.crossings[c][s]].push_back(make_dart(c, s));
    std::vector<DartId> pairing(4 * static_cast<std::size_t>(n), -1);
    for (const auto& [label, darts] : where) {
        if (darts.size() != 2)
            throw LabelError("label " + std::to_string(label) + " appears " + std::to_string(darts.size()) +
                             " time(s); every label must appear exactly twice");
        pairing[darts[0]] = darts[1];
        pairing[darts[1]] = darts[0];
    }

    // Direction of each dart: 1 incoming, 0 outgoing, -1 unknown.
    std::vector<int> dir(pairing.size(), -1);
    std::vector<DartId> queue;
    auto assign = [&](DartId d, int v) {
        if (dir[d] == v)
            return;
        if (dir[d] >= 0)
            throw ParseError("strand orientation is inconsistent at crossing " + std::to_string(crossing_of(d) + 1));
        dir[d] = v;
        queue.push_back(d);
    };
    auto propagate = [&] {
        while (!queue.empty()) {
            DartId d = queue.back();
            queue.pop_back();
            assign(pairing[d], 1 - dir[d]);
            assign(opposite(d), 1 - dir[d]);
        }
    };
    for (int c = 0; c < n; ++c) {
        assign(make_dart(c, 0), 1);
        assign(make_dart(c, 2), 0);
    }
    propagate();
    // Components that only pass over: fall back to increasing labels.
    for (int c = 0; c < n; ++c) {
        if (dir[make_dart(c, 1)] >= 0)
            continue;
        long b = t.crossings[c][1], d = t.crossings[c][3];
        bool b_in = (std::abs(b - d) == 1) ? b < d : b > d;
        assign(make_dart(c, 1), b_in ? 1 : 0);
        propagate();
    }

    std::vector<std::uint8_t> over_in(n);
    for (int c = 0; c < n; ++c)
        over_in[c] = static_cast<std::uint8_t>(dir[make_dart(c, 1)] == 1 ? 1 : 3);
    return Diagram(std::move(pairing), std::move(over_in), t.unknots);
}

std::string emit_pd(const Diagram& d)
{
    std::ostringstream out;
    const int n = d.crossing_count();
    if (d.trivial_loops() > 0 || n == 0)
        out << "unknots: " << d.trivial_loops() << '\n';
    if (n == 0)
        return out.str();
    std::vector<long> label(d.dart_count(), 0);
    long next = 1;
    for (const auto& cyc : d.strand_cycles()) {
        // Number each strand from the edge that enters its lowest dart.
        std::size_t start = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            if (d.partner(cyc[i]) < d.partner(cyc[start]))
                start = i;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            DartId e = cyc[(start + k) % cyc.size()];
            label[e] = label[d.partner(e)] = next++;
        }
    }
    for (int c = 0; c < n; ++c) {
        if (c > 0)
            out << ' ';
        out << "X[" << label[make_dart(c, 0)] << ',' << label[make_dart(c, 1)] << ',' << label[make_dart(c, 2)]
            << ',' << label[make_dart(c, 3)] << ']';
    }
    out << '\n';
    return out.str();
}

} // namespace knotweed
