#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fungal/circuit.hpp"
#include "fungal/engine.hpp"

namespace fungal {

// ---------------------------------------------------------------- gadgets

enum class PortDir { in_left, in_bottom, out_right, out_top };

struct Port {
    std::string name;
    CellRef offset;       // boundary cell of the pattern where the wire attaches
    PortDir dir;
    int sum_parity = 0;   // parity of row+col of the attached wire's 1-cells
    int line_parity = 0;  // parity of the wire's row (horizontal ports) or column (vertical ports)
    bool is_input() const { return dir == PortDir::in_left || dir == PortDir::in_bottom; }
};

struct GadgetStamp {
    std::string name;
    std::vector<std::string> pattern;  // rows of '0'/'1'
    std::vector<std::string> mask;     // 'x' where the gadget owns the cell, '.' for surrounding background
    std::vector<Port> ports;

    int rows() const { return int(pattern.size()); }
    int cols() const { return pattern.empty() ? 0 : int(pattern[0].size()); }
    State cell(long r, long c) const { return State(pattern[size_t(r)][size_t(c)] == '1'); }
    bool owns(long r, long c) const { return mask[size_t(r)][size_t(c)] == 'x'; }
    std::vector<Port> inputs() const;
    std::vector<Port> outputs() const;
    const Port& port(std::string_view name) const;
    // Expected out-port values for the given in-port values.
    std::vector<bool> truth(const std::vector<bool>& in) const;
};

class UnknownGadget : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Catalog names: h-wire, v-wire, turn-up, turn-right, coordinator, and, or, crossing, duplicator.
// `length` applies to the two straight wires.
GadgetStamp gadget(std::string_view name, int length = 8);
std::vector<std::string> gadget_names();

struct GadgetRun {
    bool passed = false;
    std::vector<bool> expected, fired;
    std::string detail;
};

// Embeds the stamp alone with lead-in and lead-out wires, seeds inputs set to 1 (delays[i] extra
// sub-steps for input i by lengthening its lead-in), runs maj15/HV to the fixpoint and compares.
GadgetRun run_gadget(const GadgetStamp& stamp, const std::vector<bool>& inputs, const std::vector<int>& delays = {});
bool verify_gadget(const GadgetStamp& stamp, const std::vector<bool>& inputs, const std::vector<int>& delays = {});

// ---------------------------------------------------------------- layout

// Tile-local constants; every tile of a circuit with `lanes` bus lanes uses the same geometry.
struct TileGeometry {
    int lanes = 0;
    int lane_spacing = 6;   // S: distance between neighbouring bus lanes (even)
    int riser_spacing = 4;  // distance between neighbouring rising columns (even)
    int out_top = 4;        // row of outgoing lane 0
    int gate_row = 0;       // row of the gate gadget
    int in_top = 0;         // row of incoming lane 0
    int tap_left = 5, tap_right = 13;  // tap cell columns of the two duplicators
    int gate_turn = 24;     // column where the gate output turns upward
    int riser0 = 29;        // column where lane 0 rises
    int coordinator = 0;    // column of the coordinator's input cell
    int rows = 0, cols = 0;

    int out_row(int lane) const { return out_top + lane * lane_spacing; }
    int in_row(int lane) const { return in_top + lane * lane_spacing; }
    int riser(int lane) const { return riser0 + lane * riser_spacing; }
    int rise() const { return in_top - out_top; }  // vertical offset between consecutive tiles
};

TileGeometry tile_geometry(int lanes);

struct PortPlacement {
    int lane = 0;
    CellRef cell;
};

struct TilePlan {
    int index = 0;  // 1-based
    int gate = 0;   // gate number served
    CellRef origin; // top-left corner
    int rows = 0, cols = 0;
    std::vector<PortPlacement> in_ports, out_ports;
};

struct LayoutPlan {
    TileGeometry geometry;
    std::vector<TilePlan> tiles;
    int grid_rows = 0, grid_cols = 0;
    int lead_in = 3;  // cells of input wire left of tile 1
};

class CompileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<TilePlan> layout_tiles(const Circuit& c);
LayoutPlan plan_layout(const Circuit& c);

// ---------------------------------------------------------------- compilation

struct WireSegment {
    CellRef from, to;  // straight and inclusive
};

struct PlacedStamp {
    std::string name;
    CellRef anchor;
    int tile = 0;
};

struct Embedding {
    Configuration config{1, 1, 0};
    CellRef target;
    std::vector<TilePlan> tiles;
    std::map<int, std::vector<WireSegment>> wire_map;  // gate or input number -> plain wire pieces
    std::vector<CellRef> input_heads;                  // seed cell of input i+1
    std::map<int, CellRef> gate_heads;                 // first 0-cell after each gate gadget
    std::vector<PlacedStamp> stamps;
    int wire_parity = 0;                               // row+col parity of every wire 1-cell
};

struct CompileOptions {
    bool background_one = false;  // surround the rectangle with 0s and use background 1
};

Embedding compile(const Circuit& c, const std::vector<bool>& assignment, const CompileOptions& opt = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

// Checks parity, lane spacing, quiescence with no input seeded, per-gate values and the target.
VerificationReport verify_embedding(const Embedding& e, const Circuit& c, const std::vector<bool>& assignment);

// Sidecar map: tile boxes, ports, input heads, gate heads and `target <row> <col>`.
std::string write_map(const Embedding& e);
struct EmbeddingMap {
    std::vector<TilePlan> tiles;
    std::vector<CellRef> input_heads;
    std::map<int, CellRef> gate_heads;
    CellRef target;
};
EmbeddingMap parse_map(std::string_view text);

}  // namespace fungal
