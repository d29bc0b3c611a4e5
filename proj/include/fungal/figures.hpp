#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fungal/engine.hpp"

// Worked configurations with their published evolutions, kept as fixtures for replay tests.
namespace fungal::figures {

struct Replay {
    std::string name;
    RuleSpec rule;
    Schedule schedule;
    std::vector<Configuration> frames;  // frames[t] is the configuration after t steps
};

Replay f3_spread();          // single 1 in a 0 sea under f3
Replay f5_staircase();       // staircase next to a 2x2 block under f5
Replay f2_corridors();       // cross-shaped corridors under f2
Replay maj15_wire();         // signal moving along a horizontal wire
Replay maj15_cross();        // one horizontal and one vertical update of the majority rule
std::vector<Replay> replays();

// Alliance under f1 with background 1: every 0-cell is stable.
Configuration alliance();
// The cells of the alliance drawn with explicit labels: two blocks joined by a staircase.
std::vector<CellRef> alliance_labeled();

// Two diagonal isolated 0s in a sea of 1s: a fixpoint of f2.
Configuration f2_stable();

using Edge = std::pair<CellRef, CellRef>;
struct GraphFigure {
    Configuration config{1, 1, 1};
    std::vector<Edge> h, v, d;
    Edge excluded;  // diagonal pair drawn dotted: no mediating 0-cell
};
GraphFigure underlying_graph();

}  // namespace fungal::figures
