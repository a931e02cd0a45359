#pragma once

#include "knotweed/diagram.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotweed {

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Tier { core, stretch };

struct CorpusEntry {
    std::string name;
    Tier tier = Tier::core;
    bool transcribed = false;    // false: expectations only, no diagram shipped
    std::string pd;              // PD text (empty when not transcribed)
    std::optional<int> expected_c;
    std::optional<int> expected_final_c;
    std::optional<int> expected_moves;
    std::optional<int> expected_det;
    std::optional<int> expected_horizontal; // horizontal Z3 moves in the reported sequence
    std::string provenance;

    Diagram diagram() const;     // throws CorpusError when not transcribed
};

// KNOTWEED_CORPUS_DIR if set, else the directory chosen at build time.
std::filesystem::path corpus_dir();
std::vector<CorpusEntry> corpus_entries();
CorpusEntry builtin(const std::string& name);

// Closed polygon in the plane with a height per vertex; crossings are the
// proper intersections of non-adjacent segments, and the pass with the larger
// interpolated height goes over.
struct PolyPoint {
    double x = 0, y = 0, z = 0;
};
std::string polyline_pd(std::span<const PolyPoint> points);
Diagram polyline_diagram(std::span<const PolyPoint> points);

// Unknot family with 7n - 1 crossings: a loop whose disc is entered by n
// tongues, each followed by a kink, plus a row of 2n - 1 clasps.
std::vector<PolyPoint> hass_nowik_polyline(int n);
Diagram hass_nowik(int n);

// Elementary insertions.
Diagram add_kink(const Diagram& d, DartId edge, bool left, bool first_over);
// Push a finger of edge `mover` across edge `target` out of the face on the
// given side of `mover`. Both new crossings put the finger at `level`.
Diagram add_finger(const Diagram& d, DartId mover, bool left, DartId target, Level level);

// k random insertions of kinks, fingers and horizontal slides, reproducible
// from the seed.
Diagram inverse_move_scramble(const Diagram& d, int k, std::uint64_t seed);

} // namespace knotweed
