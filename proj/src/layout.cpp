#include "fungal/compiler.hpp"

namespace fungal {

TileGeometry tile_geometry(int lanes) {
    if (lanes < 1) throw std::invalid_argument("a tile needs at least one lane");
    TileGeometry g;
    g.lanes = lanes;
    g.gate_row = g.out_top + (lanes - 1) * g.lane_spacing + 7;  // odd: tap verticals end on it
    g.in_top = g.gate_row + 7;
    g.coordinator = g.riser(lanes - 1) + 5;  // even, and clear of the last riser's crossing
    g.cols = g.coordinator + 6;
    g.rows = g.in_top + (lanes - 1) * g.lane_spacing + 4;
    return g;
}

namespace {

constexpr int kMargin = 4;

void check_compilable(const Circuit& c) {
    validate(c);
    if (!is_monotone(c)) throw CompileError("monotone circuits only");
    if (c.gate_count() < 1) throw CompileError("circuit has no gates");
}

}  // namespace

LayoutPlan plan_layout(const Circuit& c) {
    check_compilable(c);
    LayoutPlan plan;
    const int m = c.gate_count();
    const TileGeometry g = tile_geometry(c.n + m);
    plan.geometry = g;
    // Tile i sits rise() rows above tile i-1 so that its outgoing lanes line up with the next tile's
    // incoming lanes. The top-left corner of every tile has even row+col, keeping the wire parity global.
    const int top1 = (m - 1) * g.rise() + kMargin;
    const int left1 = kMargin + 1 + plan.lead_in;
    for (int i = 1; i <= m; ++i) {
        TilePlan t;
        t.index = i;
        t.gate = c.n + i;
        t.origin = {top1 - long(i - 1) * g.rise(), left1 + long(i - 1) * g.cols};
        t.rows = g.rows;
        t.cols = g.cols;
        const int k = c.n + i - 1;
        for (int j = 0; j < k; ++j) t.in_ports.push_back({j, {t.origin.row + g.in_row(j), t.origin.col}});
        for (int j = 0; j <= k; ++j)
            t.out_ports.push_back({j, {t.origin.row + g.out_row(j), t.origin.col + g.cols - 1}});
        plan.tiles.push_back(t);
    }
    plan.grid_rows = top1 + g.rows + kMargin;
    plan.grid_cols = left1 + m * g.cols + kMargin;
    return plan;
}

std::vector<TilePlan> layout_tiles(const Circuit& c) { return plan_layout(c).tiles; }

}  // namespace fungal
