#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fungal/compiler.hpp"

using namespace fungal;

namespace {

const char* kExample = "1 IN 0 0\n2 IN 0 0\n3 OR 1 2\n4 AND 3 2\n";

std::vector<bool> bits(unsigned v, int n) {
    std::vector<bool> out;
    for (int i = 0; i < n; ++i) out.push_back((v >> (n - 1 - i)) & 1);
    return out;
}

// x1, then a chain of m ORs each folding in the previous gate and x1.
Circuit chain(int m) {
    std::string text = "1 IN 0 0\n";
    for (int g = 2; g <= m + 1; ++g) text += std::to_string(g) + " OR " + std::to_string(g - 1) + " 1\n";
    return parse_circuit(text);
}

}  // namespace

// ---------------------------------------------------------------- catalog

TEST(Gadget, HorizontalWireAlternates) {
    const GadgetStamp w = gadget("h-wire", 8);
    ASSERT_EQ(w.rows(), 1);
    EXPECT_EQ(w.pattern[0], "01010101");
    EXPECT_EQ(w.inputs().size(), 1u);
    EXPECT_EQ(w.outputs().size(), 1u);
}

TEST(Gadget, VerticalWireHeadAtBottom) {
    const GadgetStamp w = gadget("v-wire", 5);
    ASSERT_EQ(w.rows(), 5);
    EXPECT_EQ(w.cell(4, 0), 0);
    EXPECT_EQ(w.cell(3, 0), 1);
    EXPECT_EQ(w.inputs()[0].dir, PortDir::in_bottom);
}

TEST(Gadget, DuplicatorPorts) {
    const GadgetStamp d = gadget("duplicator");
    ASSERT_EQ(d.inputs().size(), 1u);
    ASSERT_EQ(d.outputs().size(), 2u);
    EXPECT_EQ(d.port("right").dir, PortDir::out_right);
    EXPECT_EQ(d.port("up").dir, PortDir::out_top);
}

TEST(Gadget, CoordinatorShiftsLineParity) {
    const GadgetStamp k = gadget("coordinator");
    EXPECT_NE(k.port("in").line_parity, k.port("out").line_parity);
    EXPECT_EQ(std::abs(k.port("in").offset.row - k.port("out").offset.row), 1);
}

TEST(Gadget, UnknownName) {
    EXPECT_THROW(gadget("xor"), UnknownGadget);
    EXPECT_THROW(gadget("duplicator")
                     .port("down"),
                 std::invalid_argument);
}

TEST(Gadget, PatternsAreBinaryAndPortsOwned) {
    for (const std::string& name : gadget_names()) {
        const GadgetStamp g = gadget(name);
        ASSERT_EQ(g.mask.size(), g.pattern.size()) << name;
        for (int r = 0; r < g.rows(); ++r)
            for (char ch : g.pattern[size_t(r)]) EXPECT_TRUE(ch == '0' || ch == '1') << name;
        for (const Port& p : g.ports) EXPECT_TRUE(g.owns(p.offset.row, p.offset.col)) << name << " " << p.name;
    }
}

TEST(Gadget, SingleWirePartsShareParity) {
    // Along a straight stretch the 1-cells alternate with the 0-cells, so their row+col parity agrees.
    const GadgetStamp w = gadget("h-wire", 11);
    for (int c = 0; c < w.cols(); ++c) EXPECT_EQ(w.cell(0, c), State(c % 2 == 1));
}

// ---------------------------------------------------------------- truth tables

TEST(GadgetRuns, AndTable) {
    const GadgetStamp g = gadget("and");
    EXPECT_TRUE(run_gadget(g, {true, true}).fired[0]);
    for (auto in : {std::vector<bool>{true, false}, {false, true}, {false, false}}) {
        const GadgetRun r = run_gadget(g, in);
        EXPECT_TRUE(r.passed) << r.detail;
        EXPECT_FALSE(r.fired[0]);
    }
}

TEST(GadgetRuns, CrossingDoesNotInterfere) {
    const GadgetRun r = run_gadget(gadget("crossing"), {true, false});
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.fired, (std::vector<bool>{true, false}));
}

TEST(GadgetRuns, IdleWireIsFixpoint) {
    for (const char* name : {"h-wire", "v-wire"}) {
        const GadgetRun r = run_gadget(gadget(name), {false});
        EXPECT_TRUE(r.passed) << name << ": " << r.detail;
        EXPECT_FALSE(r.fired[0]);
    }
}

TEST(GadgetRuns, EveryCombinationAndDelay) {
    for (const std::string& name : gadget_names()) {
        const GadgetStamp g = gadget(name);
        const size_t k = g.inputs().size();
        for (unsigned v = 0; v < (1u << k); ++v) {
            std::vector<bool> in;
            for (size_t i = 0; i < k; ++i) in.push_back((v >> i) & 1);
            for (size_t late = 0; late < k; ++late)
                for (int delay : {0, 2, 4, 8}) {
                    std::vector<int> delays(k, 0);
                    delays[late] = delay;
                    const GadgetRun r = run_gadget(g, in, delays);
                    EXPECT_TRUE(r.passed) << name << " v=" << v << " late=" << late << " delay=" << delay << ": "
                                          << r.detail;
                    EXPECT_EQ(r.fired, g.truth(in)) << name;
                }
        }
    }
}

// ---------------------------------------------------------------- layout

TEST(Layout, OneGateOneTile) { EXPECT_EQ(layout_tiles(parse_circuit("1 IN 0 0\n2 OR 1 1\n")).size(), 1u); }

TEST(Layout, WorkedExampleClimbsRight) {
    const auto tiles = layout_tiles(parse_circuit(kExample));
    ASSERT_EQ(tiles.size(), 2u);
    EXPECT_EQ(tiles[0].gate, 3);
    EXPECT_EQ(tiles[1].gate, 4);
    EXPECT_LT(tiles[1].origin.row, tiles[0].origin.row);
    EXPECT_GE(tiles[1].origin.col, tiles[0].origin.col + tiles[0].cols);
}

TEST(Layout, TilesDisjointIdenticalConstantOffset) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + int(rng() % 6);
        const Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 15));
        const auto tiles = layout_tiles(c);
        ASSERT_EQ(int(tiles.size()), c.gate_count());
        for (size_t i = 1; i < tiles.size(); ++i) {
            EXPECT_EQ(tiles[i].rows, tiles[0].rows);
            EXPECT_EQ(tiles[i].cols, tiles[0].cols);
            EXPECT_EQ(tiles[i].origin.row - tiles[i - 1].origin.row, tiles[1].origin.row - tiles[0].origin.row);
            EXPECT_EQ(tiles[i].origin.col - tiles[i - 1].origin.col, tiles[1].origin.col - tiles[0].origin.col);
            EXPECT_LT(tiles[i].origin.row, tiles[i - 1].origin.row);
            EXPECT_GE(tiles[i].origin.col, tiles[i - 1].origin.col + tiles[i - 1].cols);
        }
        // Lanes per tile: every input and every earlier gate output.
        for (const TilePlan& tp : tiles) EXPECT_EQ(int(tp.in_ports.size()), n + tp.index - 1);
    }
}

TEST(Layout, TileSizeLinearInNodes) {
    const TileGeometry a = tile_geometry(10), b = tile_geometry(20), d = tile_geometry(40);
    EXPECT_EQ(b.rows - a.rows, (d.rows - b.rows) / 2);
    EXPECT_EQ(b.cols - a.cols, (d.cols - b.cols) / 2);
    EXPECT_EQ(a.lane_spacing % 2, 0);
}

TEST(Layout, GrowthExponents) {
    // Each tile is O(m) x O(m), so the tiles cover Θ(m³) cells. The staircase bounding box is
    // Θ(m) tiles high and wide, hence Θ(m⁴).
    auto fit = [](auto measure) {
        const double lo = std::log(measure(64)), hi = std::log(measure(256));
        return (hi - lo) / std::log(4.0);
    };
    const double tiles = fit([](int m) {
        const LayoutPlan p = plan_layout(chain(m));
        return double(p.tiles.size()) * p.tiles[0].rows * p.tiles[0].cols;
    });
    const double box = fit([](int m) {
        const LayoutPlan p = plan_layout(chain(m));
        return double(p.grid_rows) * p.grid_cols;
    });
    EXPECT_NEAR(tiles, 3.0, 0.2);
    EXPECT_NEAR(box, 4.0, 0.2);
    // Exact dimensions follow from the tile constants.
    const LayoutPlan p = plan_layout(chain(9));
    const TileGeometry& g = p.geometry;
    EXPECT_EQ(p.grid_cols, 8 + 9 * g.cols + 4);
    EXPECT_EQ(p.grid_rows, 8 * g.rise() + 4 + g.rows + 4);
}

// ---------------------------------------------------------------- compile

TEST(Compile, WorkedExampleAllAssignments) {
    const Circuit c = parse_circuit(kExample);
    for (unsigned v = 0; v < 4; ++v) {
        const auto x = bits(v, 2);
        const Embedding e = compile(c, x);
        EXPECT_EQ(e.config.background(), 0);
        const VerificationReport rep = verify_embedding(e, c, x);
        for (const CheckResult& r : rep.checks) EXPECT_TRUE(r.passed) << "v=" << v << " " << r.name << ": " << r.detail;
        const FixpointResult f = run_to_fixpoint(e.config, maj15(), Schedule::hv());
        EXPECT_EQ(f.config.get(e.target) == 1, evaluate(c, x)) << "v=" << v;
    }
}

TEST(Compile, SingleInputIdentity) {
    const Circuit c = parse_circuit("1 IN 0 0\n2 OR 1 1\n");
    const Embedding on = compile(c, {true}), off = compile(c, {false});
    EXPECT_EQ(run_to_fixpoint(on.config, maj15(), Schedule::hv()).config.get(on.target), 1);
    EXPECT_EQ(run_to_fixpoint(off.config, maj15(), Schedule::hv()).config.get(off.target), 0);
    EXPECT_TRUE(verify_embedding(on, c, {true}).passed());
}

TEST(Compile, TargetIsFinalGateHead) {
    const Embedding e = compile(parse_circuit(kExample), {true, true});
    EXPECT_EQ(e.target, e.gate_heads.at(4));
    EXPECT_EQ(e.config.get(e.target), 0);
}

TEST(Compile, RejectsNot) {
    try {
        compile(parse_circuit("1 IN 0 0\n2 NOT 1 1\n"), {true});
        FAIL() << "expected CompileError";
    } catch (const CompileError& e) {
        EXPECT_NE(std::string(e.what()).find("monotone circuits only"), std::string::npos);
    }
}

TEST(Compile, RejectsWrongAssignmentLength) {
    EXPECT_THROW(compile(parse_circuit(kExample), {true}), CompileError);
}

TEST(Compile, Deterministic) {
    const Circuit c = parse_circuit(kExample);
    const Embedding a = compile(c, {true, false}), b = compile(c, {true, false});
    EXPECT_EQ(a.config, b.config);
    EXPECT_EQ(write_map(a), write_map(b));
}

TEST(Compile, StampsDoNotOverlapOutsidePorts) {
    // Canvas placement throws on overlaps; random layouts exercise many stamp neighbourhoods.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + int(rng() % 6);
        const Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 10));
        EXPECT_NO_THROW(compile(c, std::vector<bool>(size_t(n), true)));
    }
}

TEST(Compile, RandomCircuitsMatchEvaluate) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 15; ++t) {
        const int n = 1 + int(rng() % 6);
        const Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 8));
        std::vector<bool> x;
        for (int i = 0; i < n; ++i) x.push_back(rng() & 1);
        const VerificationReport rep = verify_embedding(compile(c, x), c, x);
        for (const CheckResult& r : rep.checks) EXPECT_TRUE(r.passed) << serialize(c) << r.name << ": " << r.detail;
    }
}

TEST(Verify, ShiftedWireBreaksParity) {
    const Circuit c = parse_circuit(kExample);
    Embedding e = compile(c, {true, true});
    ASSERT_TRUE(verify_embedding(e, c, {true, true}).find("parity")->passed);

    // Move the longest horizontal piece one row down, cells and map entry together.
    WireSegment* best = nullptr;
    for (auto& [signal, segs] : e.wire_map)
        for (WireSegment& s : segs)
            if (s.from.row == s.to.row && (!best || std::abs(s.to.col - s.from.col) > std::abs(best->to.col - best->from.col)))
                best = &s;
    ASSERT_NE(best, nullptr);
    const long r = best->from.row;
    for (long col = std::min(best->from.col, best->to.col); col <= std::max(best->from.col, best->to.col); ++col) {
        const State v = e.config.at(int(r), int(col));
        e.config.set(int(r), int(col), 0);
        e.config.set(int(r + 1), int(col), v);
    }
    best->from.row += 1;
    best->to.row += 1;
    const VerificationReport rep = verify_embedding(e, c, {true, true});
    EXPECT_FALSE(rep.find("parity")->passed);
    EXPECT_FALSE(rep.passed());
}

TEST(Verify, ReportNamesChecks) {
    const Circuit c = parse_circuit(kExample);
    const VerificationReport rep = verify_embedding(compile(c, {false, true}), c, {false, true});
    for (const char* name : {"parity", "spacing", "quiescent", "gates", "target"}) EXPECT_NE(rep.find(name), nullptr) << name;
    EXPECT_EQ(rep.find("bogus"), nullptr);
}

TEST(Compile, BackgroundOneVariant) {
    const Circuit c = parse_circuit(kExample);
    for (unsigned v = 0; v < 4; ++v) {
        const auto x = bits(v, 2);
        const Embedding e = compile(c, x, CompileOptions{true});
        EXPECT_EQ(e.config.background(), 1);
        // The outer ring is all 0, separating the layout from the 1-background.
        for (int col = 0; col < e.config.cols(); ++col) {
            EXPECT_EQ(e.config.at(0, col), 0);
            EXPECT_EQ(e.config.at(e.config.rows() - 1, col), 0);
        }
        const OracleFrame f = oracle_fixpoint(e.config, maj15(), Schedule::hv());
        EXPECT_EQ(f.changed(e.target), evaluate(c, x)) << "v=" << v;
        EXPECT_TRUE(verify_embedding(e, c, x).find("target")->passed);
    }
}

// ---------------------------------------------------------------- sidecar map

TEST(Map, RoundTrip) {
    const Embedding e = compile(parse_circuit(kExample), {true, false});
    const EmbeddingMap m = parse_map(write_map(e));
    EXPECT_EQ(m.target, e.target);
    EXPECT_EQ(m.input_heads, e.input_heads);
    EXPECT_EQ(m.gate_heads, e.gate_heads);
    ASSERT_EQ(m.tiles.size(), e.tiles.size());
    for (size_t i = 0; i < m.tiles.size(); ++i) {
        EXPECT_EQ(m.tiles[i].origin, e.tiles[i].origin);
        EXPECT_EQ(m.tiles[i].gate, e.tiles[i].gate);
        EXPECT_EQ(m.tiles[i].in_ports.size(), e.tiles[i].in_ports.size());
    }
    EXPECT_NE(write_map(e).find("target " + std::to_string(e.target.row) + " " + std::to_string(e.target.col)),
              std::string::npos);
}

TEST(Map, Errors) {
    EXPECT_THROW(parse_map("grid 3 3\n"), std::runtime_error);
    EXPECT_THROW(parse_map("target 1\n"), std::runtime_error);
    EXPECT_THROW(parse_map("bogus 1 2\ntarget 1 2\n"), std::runtime_error);
    EXPECT_EQ(parse_map("# only the target\ntarget 4 5\n").target, (CellRef{4, 5}));
}
