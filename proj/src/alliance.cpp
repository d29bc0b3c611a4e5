#include <set>

#include "fungal/predictors.hpp"

namespace fungal {

namespace {

constexpr int kMargin = 3;

// Top-left corner of some 2x2 all-0 block containing (r, c), if any.
std::optional<CellRef> block_corner(const Configuration& p, long r, long c) {
    for (long dr = -1; dr <= 0; ++dr) {
        for (long dc = -1; dc <= 0; ++dc) {
            const long r0 = r + dr, c0 = c + dc;
            if (!p.contains(r0, c0) || !p.contains(r0 + 1, c0 + 1)) continue;
            if (!p.at(int(r0), int(c0)) && !p.at(int(r0), int(c0 + 1)) && !p.at(int(r0 + 1), int(c0)) &&
                !p.at(int(r0 + 1), int(c0 + 1)))
                return CellRef{r0, c0};
        }
    }
    return std::nullopt;
}

void add_block(std::vector<CellRef>& out, CellRef corner) {
    for (long dr = 0; dr <= 1; ++dr)
        for (long dc = 0; dc <= 1; ++dc) out.push_back({corner.row + dr, corner.col + dc});
}

std::vector<CellRef> unpad(std::vector<CellRef> cells) {
    std::set<CellRef> uniq;
    for (CellRef& x : cells) uniq.insert({x.row - kMargin, x.col - kMargin});
    return {uniq.begin(), uniq.end()};
}

}  // namespace

// Staircase walker. A 0-cell never flips under f1 exactly when it belongs to the largest set of 0-cells
// in which every member keeps a horizontal and a vertical neighbor; such cells are either in a 2x2 block
// or on an alternating H/V walk joining two blocks.
//
// Differences from the textbook pseudocode, each needed for agreement with the simulation oracle:
//  * every cell of the area is a candidate start (the printed loop advances its index by two and
//    so only ever visits cells of one parity);
//  * both first-step orders (H first and V first) are tried for every (lambda1, lambda2);
//  * the "passed x" flag is set when the walk steps onto x, and the block test is applied to every
//    later cell, not only where the walk stops;
//  * walks may start in the block that contains x.
std::pair<bool, std::optional<AllianceWitness>> detect_alliance_f1(const PredictionInstance& inst) {
    if (!inst.config.contains(inst.target)) throw std::invalid_argument("prediction target lies outside the rectangle");
    // Background 0 padding supplies blocks along the border, so both backgrounds share one walker.
    const Configuration p = inst.config.padded(kMargin);
    const CellRef t{inst.target.row + kMargin, inst.target.col + kMargin};
    if (p.get(t)) return {false, std::nullopt};

    if (auto corner = block_corner(p, t.row, t.col)) {
        AllianceWitness w;
        w.kind = AllianceWitness::Kind::block;
        add_block(w.cells, *corner);
        w.cells = unpad(std::move(w.cells));
        return {true, w};
    }

    std::vector<CellRef> path;
    for (long r = 0; r < p.rows(); ++r) {
        for (long c = 0; c < p.cols(); ++c) {
            if (p.at(int(r), int(c))) continue;
            const auto start_block = block_corner(p, r, c);
            if (!start_block) continue;
            for (int l1 : {-1, 1}) {
                for (int l2 : {-1, 1}) {
                    for (bool h_first : {true, false}) {
                        path.assign(1, CellRef{r, c});
                        bool passed = false;
                        bool h = h_first;
                        CellRef cur{r, c};
                        for (;;) {
                            const CellRef next = h ? CellRef{cur.row, cur.col + l1} : CellRef{cur.row + l2, cur.col};
                            if (!p.contains(next) || p.get(next)) break;
                            path.push_back(next);
                            if (next == t) {
                                passed = true;
                            } else if (passed) {
                                if (auto end_block = block_corner(p, next.row, next.col)) {
                                    AllianceWitness w;
                                    w.kind = AllianceWitness::Kind::staircase;
                                    w.lambdas = {l1, l2};
                                    w.cells = path;
                                    add_block(w.cells, *start_block);
                                    add_block(w.cells, *end_block);
                                    w.cells = unpad(std::move(w.cells));
                                    w.endpoints = {{r - kMargin, c - kMargin},
                                                   {next.row - kMargin, next.col - kMargin}};
                                    return {true, w};
                                }
                            }
                            cur = next;
                            h = !h;
                        }
                    }
                }
            }
        }
    }
    return {false, std::nullopt};
}

}  // namespace fungal
