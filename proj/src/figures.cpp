#include "fungal/figures.hpp"

namespace fungal::figures {

namespace {

Replay make(std::string name, RuleSpec rule, State bg, const std::vector<std::vector<std::string>>& frames) {
    Replay r{std::move(name), std::move(rule), Schedule::hv(), {}};
    for (const auto& f : frames) r.frames.push_back(from_rows(f, bg));
    return r;
}

}  // namespace

Replay f3_spread() {
    return make("f3-spread", table_rule(3), 0,
                {{"00000", "00000", "00100", "00000", "00000"},
                 {"00000", "00000", "01110", "00000", "00000"},
                 {"00000", "01110", "01110", "01110", "00000"},
                 {"00000", "11111", "11111", "11111", "00000"}});
}

Replay f5_staircase() {
    // The figure labels the 0-cells; everything unlabeled is 1.
    return make("f5-staircase", table_rule(5), 1,
                {{"11111111", "10111001", "10011001", "11001111", "11100111", "11111111"},
                 {"11111111", "11111001", "10011001", "11001111", "11100111", "11111111"},
                 {"11111111", "11111001", "11011001", "11001111", "11101111", "11111111"},
                 {"11111111", "11111001", "11111001", "11001111", "11111111", "11111111"}});
}

Replay f2_corridors() {
    return make("f2-corridors", table_rule(2), 1,
                {{"1101111011111", "1101111011111", "1101110000011", "1101111011111", "1101111011111",
                  "0000000000000", "1101111011111", "1101111011111", "1101111011111", "1101111111111"},
                 {"1101111011111", "1101111011111", "1101111000111", "1101111011111", "1101111011111",
                  "1000000000001", "1101111011111", "1101111011111", "1101111011111", "1101111111111"},
                 {"1111111111111", "1101111011111", "1101111000111", "1101111011111", "1101111011111",
                  "1000000000001", "1101111011111", "1101111011111", "1101111111111", "1111111111111"},
                 {"1111111111111", "1101111011111", "1101111101111", "1101111011111", "1101111011111",
                  "1100000000011", "1101111011111", "1101111011111", "1101111111111", "1111111111111"},
                 {"1111111111111", "1111111011111", "1101111101111", "1101111111111", "1101111011111",
                  "1100000000011", "1101111011111", "1101111111111", "1111111111111", "1111111111111"},
                 {"1111111111111", "1111111011111", "1101111101111", "1101111111111", "1101111011111",
                  "1110000000111", "1101111011111", "1101111111111", "1111111111111", "1111111111111"},
                 {"1111111111111", "1111111011111", "1111111101111", "1101111111111", "1111111111111",
                  "1110000000111", "1111111111111", "1111111111111", "1111111111111", "1111111111111"},
                 {"1111111111111", "1111111011111", "1111111101111", "1101111111111", "1111111111111",
                  "1111000001111", "1111111111111", "1111111111111", "1111111111111", "1111111111111"},
                 {"1111111111111", "1111111011111", "1111111101111", "1101111111111", "1111111111111",
                  "1111000001111", "1111111111111", "1111111111111", "1111111111111", "1111111111111"}});
}

Replay maj15_wire() {
    return make("maj15-wire", maj15(), 0,
                {{"00000000", "00000000", "11010101", "00000000", "00000000"},
                 {"00000000", "00000000", "11110101", "00000000", "00000000"},
                 {"00000000", "00000000", "11110101", "00000000", "00000000"},
                 {"00000000", "00000000", "11111101", "00000000", "00000000"}});
}

Replay maj15_cross() {
    return make("maj15-cross", maj15(), 0,
                {{"01000", "00000", "11010", "01000", "00000"},
                 {"01000", "00000", "11110", "01000", "00000"},
                 {"01000", "01000", "11110", "01000", "00000"}});
}

std::vector<Replay> replays() { return {f3_spread(), f5_staircase(), f2_corridors(), maj15_wire(), maj15_cross()}; }

Configuration alliance() {
    return from_rows({"1111110001",
                      "1110010001",
                      "1110010001",
                      "1111110011",
                      "1111100111",
                      "1111001111",
                      "1110011111",
                      "1110011111",
                      "1111111111"},
                     1);
}

std::vector<CellRef> alliance_labeled() {
    return {{2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 4}, {5, 5}, {6, 3}, {6, 4}, {7, 3}, {7, 4}};
}

Configuration f2_stable() { return from_rows({"11111", "10111", "11011", "11111", "11111"}, 1); }

GraphFigure underlying_graph() {
    GraphFigure g;
    g.config = from_rows({"1111111", "1000001", "1001101", "1001101", "1101101", "1100011", "1111111"}, 1);
    g.h = {{{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 3}, {1, 4}}, {{1, 4}, {1, 5}},
           {{2, 1}, {2, 2}}, {{3, 1}, {3, 2}}, {{5, 2}, {5, 3}}, {{5, 3}, {5, 4}}};
    g.v = {{{1, 1}, {2, 1}}, {{2, 1}, {3, 1}}, {{1, 2}, {2, 2}}, {{2, 2}, {3, 2}}, {{3, 2}, {4, 2}},
           {{4, 2}, {5, 2}}, {{1, 5}, {2, 5}}, {{2, 5}, {3, 5}}, {{3, 5}, {4, 5}}};
    g.d = {{{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{1, 3}, {2, 2}}, {{1, 4}, {2, 5}},
           {{2, 1}, {3, 2}}, {{2, 2}, {3, 1}}, {{3, 1}, {4, 2}}, {{4, 2}, {5, 3}}};
    g.excluded = {{4, 5}, {5, 4}};
    return g;
}

}  // namespace fungal::figures
