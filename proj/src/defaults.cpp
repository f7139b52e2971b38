#include "baton/error.hpp"
#include "baton/pattern_io.hpp"

#include <map>
#include <string>

namespace baton {

namespace {

// Conductor view, y up, roughly within [-1, 1]. Shapes follow the usual
// pedagogical beat patterns; the numbers themselves are editorial.

constexpr const char* kTwoBeat = R"({
  "format_version": 1,
  "beats": 2,
  "view": "conductor",
  "name": "2-beat",
  "description": "Down, then a rebound to the right and back up.",
  "anchors": [
    {"role": "prep",  "beat": 1, "x": 0.0,  "y": 1.0,  "roundness": 0.2},
    {"role": "ictus", "beat": 1, "x": 0.0,  "y": -1.0, "roundness": 0.5},
    {"role": "prep",  "beat": 2, "x": 0.45, "y": -0.1, "roundness": -0.4},
    {"role": "ictus", "beat": 2, "x": 0.1,  "y": -0.55, "roundness": -0.4}
  ]
})";

constexpr const char* kThreeBeat = R"({
  "format_version": 1,
  "beats": 3,
  "view": "conductor",
  "name": "3-beat",
  "description": "Down, out to the right, up.",
  "anchors": [
    {"role": "prep",  "beat": 1, "x": 0.0,  "y": 1.0,  "roundness": 0.2},
    {"role": "ictus", "beat": 1, "x": 0.0,  "y": -1.0, "roundness": 0.5},
    {"role": "prep",  "beat": 2, "x": 0.3,  "y": -0.2, "roundness": 0.4},
    {"role": "ictus", "beat": 2, "x": 0.9,  "y": -0.6, "roundness": 0.4},
    {"role": "prep",  "beat": 3, "x": 0.8,  "y": 0.0,  "roundness": -0.5},
    {"role": "ictus", "beat": 3, "x": 0.3,  "y": -0.4, "roundness": -0.4}
  ]
})";

constexpr const char* kFourBeat = R"({
  "format_version": 1,
  "beats": 4,
  "view": "conductor",
  "name": "4-beat",
  "description": "Down, left, right, up. The top preparation is a cusp.",
  "anchors": [
    {"role": "prep",  "beat": 1, "x": 0.0,  "y": 1.0,  "roundness": 0.0},
    {"role": "ictus", "beat": 1, "x": 0.0,  "y": -1.0, "roundness": 0.6},
    {"role": "prep",  "beat": 2, "x": 0.2,  "y": -0.2, "roundness": -0.5},
    {"role": "ictus", "beat": 2, "x": -0.8, "y": -0.7, "roundness": -0.4},
    {"role": "prep",  "beat": 3, "x": -0.6, "y": -0.1, "roundness": 0.6},
    {"role": "ictus", "beat": 3, "x": 0.8,  "y": -0.7, "roundness": 0.5},
    {"role": "prep",  "beat": 4, "x": 0.7,  "y": 0.0,  "roundness": -0.4},
    {"role": "ictus", "beat": 4, "x": 0.1,  "y": -0.4, "roundness": -0.4}
  ]
})";

constexpr const char* kSixBeat = R"({
  "format_version": 1,
  "beats": 6,
  "view": "conductor",
  "name": "6-beat",
  "description": "Down, two beats to the left, two to the right, up.",
  "anchors": [
    {"role": "prep",  "beat": 1, "x": 0.0,  "y": 1.0,  "roundness": 0.2},
    {"role": "ictus", "beat": 1, "x": 0.0,  "y": -1.0, "roundness": -0.4},
    {"role": "prep",  "beat": 2, "x": -0.3, "y": -0.3, "roundness": -0.3},
    {"role": "ictus", "beat": 2, "x": -0.6, "y": -0.7, "roundness": -0.3},
    {"role": "prep",  "beat": 3, "x": -0.75, "y": -0.3, "roundness": -0.2},
    {"role": "ictus", "beat": 3, "x": -0.95, "y": -0.6, "roundness": -0.3},
    {"role": "prep",  "beat": 4, "x": -0.5, "y": -0.1, "roundness": 0.6},
    {"role": "ictus", "beat": 4, "x": 0.6,  "y": -0.7, "roundness": 0.4},
    {"role": "prep",  "beat": 5, "x": 0.75, "y": -0.3, "roundness": 0.3},
    {"role": "ictus", "beat": 5, "x": 0.95, "y": -0.6, "roundness": 0.3},
    {"role": "prep",  "beat": 6, "x": 0.7,  "y": -0.1, "roundness": -0.5},
    {"role": "ictus", "beat": 6, "x": 0.2,  "y": -0.5, "roundness": -0.4}
  ]
})";

const std::map<int, const char*>& sources() {
    static const std::map<int, const char*> table = {
        {2, kTwoBeat}, {3, kThreeBeat}, {4, kFourBeat}, {6, kSixBeat}};
    return table;
}

} // namespace

const std::vector<int>& default_beat_counts() {
    static const std::vector<int> counts = {2, 3, 4, 6};
    return counts;
}

PatternDocument default_document(int beats) {
    const auto it = sources().find(beats);
    if (it == sources().end()) {
        throw DomainError("no built-in pattern for " + std::to_string(beats) +
                          " beats (available: 2, 3, 4, 6)");
    }
    return parse_document(it->second);
}

Pattern default_pattern(int beats) { return default_document(beats).pattern; }

} // namespace baton
