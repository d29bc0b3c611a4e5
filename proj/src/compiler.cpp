#include <algorithm>
#include <sstream>

#include "fungal/compiler.hpp"

namespace fungal {

namespace {

State on_wire(long r, long c) { return State((r + c) % 2 == 0); }  // every wire 1-cell has even row+col

// Grid under construction. Each cell remembers which stamp claimed it; two stamps may only share a
// cell that is a port of both and agrees on its state.
class Canvas {
public:
    Canvas(int rows, int cols) : rows_(rows), cols_(cols), val_(size_t(rows) * cols, 0), owner_(val_.size(), -1),
                                 port_(val_.size(), 0) {}

    // Stamps a gadget with its top-left corner at `anchor`; returns its index.
    int place(const GadgetStamp& s, CellRef anchor, int tile) {
        const int id = int(stamps_.size());
        stamps_.push_back({s.name, anchor, tile});
        shapes_.push_back(s);
        for (int r = 0; r < s.rows(); ++r)
            for (int c = 0; c < s.cols(); ++c) {
                if (!s.owns(r, c)) continue;
                const bool is_port = std::any_of(s.ports.begin(), s.ports.end(),
                                                 [&](const Port& p) { return p.offset == CellRef{r, c}; });
                claim({anchor.row + r, anchor.col + c}, s.cell(r, c), is_port, id);
            }
        return id;
    }

    CellRef port(int stamp, std::string_view name) const {
        const Port& p = shapes_[size_t(stamp)].port(name);
        const CellRef a = stamps_[size_t(stamp)].anchor;
        return {a.row + p.offset.row, a.col + p.offset.col};
    }

    // Straight wire between two port cells, both inclusive; nothing to do when the ports coincide.
    void wire(int signal, CellRef from, CellRef to, int tile) {
        if (from == to) return;
        if (from.row != to.row && from.col != to.col)
            throw CompileError("routing: ports " + str(from) + " and " + str(to) + " are not aligned");
        const bool horizontal = from.row == to.row;
        const int len = int(horizontal ? std::abs(to.col - from.col) : std::abs(to.row - from.row)) + 1;
        const CellRef lo{std::min(from.row, to.row), std::min(from.col, to.col)};
        const int id = int(stamps_.size());
        stamps_.push_back({horizontal ? "h-wire" : "v-wire", lo, tile});
        shapes_.push_back(GadgetStamp{});
        for (int k = 0; k < len; ++k) {
            const long r = lo.row + (horizontal ? 0 : k), c = lo.col + (horizontal ? k : 0);
            claim({r, c}, on_wire(r, c), k == 0 || k == len - 1, id);
        }
        segments_[signal].push_back({from, to});
    }

    Configuration finish(State bg) const { return Configuration(rows_, cols_, bg, val_); }
    std::vector<PlacedStamp> stamps() const { return stamps_; }
    std::map<int, std::vector<WireSegment>> segments() const { return segments_; }

    static std::string str(CellRef x) { return "(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")"; }

private:
    void claim(CellRef x, State v, bool is_port, int id) {
        if (x.row < 0 || x.col < 0 || x.row >= rows_ || x.col >= cols_)
            throw CompileError("routing: cell " + str(x) + " outside the grid");
        const size_t i = size_t(x.row) * cols_ + size_t(x.col);
        if (owner_[i] >= 0) {
            if (!port_[i] || !is_port)
                throw CompileError("overlap at " + str(x) + " between " + stamps_[size_t(owner_[i])].name + " and " +
                                   stamps_[size_t(id)].name);
            if (val_[i] != v) throw CompileError("port parity mismatch at " + str(x));
            return;
        }
        owner_[i] = id;
        port_[i] = is_port;
        val_[i] = v;
    }

    int rows_, cols_;
    std::vector<State> val_;
    std::vector<int> owner_;
    std::vector<char> port_;
    std::vector<PlacedStamp> stamps_;
    std::vector<GadgetStamp> shapes_;
    std::map<int, std::vector<WireSegment>> segments_;
};

}  // namespace

Embedding compile(const Circuit& c, const std::vector<bool>& assignment, const CompileOptions& opt) {
    const LayoutPlan plan = plan_layout(c);
    if (int(assignment.size()) != c.n)
        throw CompileError("assignment has " + std::to_string(assignment.size()) + " bits, circuit has " +
                           std::to_string(c.n) + " inputs");
    const TileGeometry& g = plan.geometry;
    Canvas canvas(plan.grid_rows, plan.grid_cols);
    Embedding e;
    e.tiles = plan.tiles;

    // cursor[j]: last out-port cell on lane j; the next gadget on that lane connects to it.
    std::vector<CellRef> cursor;
    const TilePlan& first = plan.tiles.front();
    for (int j = 0; j < c.n; ++j) {
        const CellRef head{first.in_ports[size_t(j)].cell.row, first.origin.col - plan.lead_in};
        cursor.push_back(head);
        e.input_heads.push_back(head);
    }
    auto lane_to = [&](int j, CellRef in_port, int tile) {
        canvas.wire(j + 1, cursor[size_t(j)], in_port, tile);
    };

    const GadgetStamp cross = gadget("crossing"), dup = gadget("duplicator"), up = gadget("turn-up"),
                      right = gadget("turn-right"), coord = gadget("coordinator");

    for (const TilePlan& t : plan.tiles) {
        const Gate& gate = c.gate(t.gate);
        const int k = t.gate - 1;  // lanes already on the bus
        const long T = t.origin.row, Lf = t.origin.col;
        const int a = std::min(gate.g1, gate.g2) - 1, b = std::max(gate.g1, gate.g2) - 1;
        const bool is_and = gate.kind == GateKind::and_ && gate.g1 != gate.g2;
        const long G = T + g.gate_row;
        const long vL = Lf + g.tap_left + 1, vR = Lf + g.tap_right + 1;
        auto row = [&](int j) { return T + g.in_row(j); };

        // Gate gadget first so the tap branches can run into its ports.
        const int gate_id = is_and ? canvas.place(gadget("and"), {G - 1, vR - 3}, t.index)
                                   : canvas.place(gadget("or"), {G - 1, vR - 4}, t.index);
        e.gate_heads[t.gate] = {G, vR + 2};

        // Lanes pass the taps and their crossings in column order.
        std::vector<int> cross_l(size_t(k), -1), cross_r(size_t(k), -1);
        int dup_l = -1, dup_r = -1;
        for (int j = 0; j < k; ++j) {
            const long r = row(j);
            auto pass = [&](int id, const char* in, const char* out) {
                lane_to(j, canvas.port(id, in), t.index);
                cursor[size_t(j)] = canvas.port(id, out);
            };
            if (j < a) pass(cross_l[size_t(j)] = canvas.place(cross, {r - 3, vL - 2}, t.index), "x", "x_out");
            if (j == a) pass(dup_l = canvas.place(dup, {r - 3, vL - 4}, t.index), "in", "right");
            if (j < b) pass(cross_r[size_t(j)] = canvas.place(cross, {r - 3, vR - 2}, t.index), "x", "x_out");
            if (j == b) pass(dup_r = canvas.place(dup, {r - 3, vR - 4}, t.index), "in", "right");
        }

        // Tap branches rise to the gate: left one turns into x, right one meets y from below.
        const int gx = gate.g1 < gate.g2 ? gate.g1 : gate.g2, gy = gate.g1 < gate.g2 ? gate.g2 : gate.g1;
        CellRef vcur = canvas.port(dup_l, "up");
        for (int j = a - 1; j >= 0; --j) {
            canvas.wire(gx, vcur, canvas.port(cross_l[size_t(j)], "y"), t.index);
            vcur = canvas.port(cross_l[size_t(j)], "y_out");
        }
        const int tr = canvas.place(right, {G - 1, vL}, t.index);
        canvas.wire(gx, vcur, canvas.port(tr, "in"), t.index);
        canvas.wire(gx, canvas.port(tr, "out"), canvas.port(gate_id, "x"), t.index);
        vcur = canvas.port(dup_r, "up");
        for (int j = b - 1; j >= 0; --j) {
            canvas.wire(gy, vcur, canvas.port(cross_r[size_t(j)], "y"), t.index);
            vcur = canvas.port(cross_r[size_t(j)], "y_out");
        }
        canvas.wire(gy, vcur, canvas.port(gate_id, "y"), t.index);

        // Incoming lanes turn up at their risers and continue one lane spacing higher.
        const long xk = T + g.out_row(k) + 1;  // the gate output crosses the risers on an off-lane row
        std::vector<int> rise_cross(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            const long U = Lf + g.riser(j);
            const int tu = canvas.place(up, {row(j) - 3, U - 2}, t.index);
            lane_to(j, canvas.port(tu, "in"), t.index);
            const int x = rise_cross[size_t(j)] = canvas.place(cross, {xk - 3, U - 2}, t.index);
            canvas.wire(j + 1, canvas.port(tu, "out"), canvas.port(x, "y"), t.index);
            const int turn = canvas.place(right, {T + g.out_row(j) - 1, U}, t.index);
            canvas.wire(j + 1, canvas.port(x, "y_out"), canvas.port(turn, "in"), t.index);
            cursor[size_t(j)] = canvas.port(turn, "out");
        }

        // Gate output: up to row xk, across the risers, then onto its own lane.
        const int s = t.gate;
        const int gu = canvas.place(up, {G - 3, Lf + g.gate_turn - 2}, t.index);
        canvas.wire(s, canvas.port(gate_id, "out"), canvas.port(gu, "in"), t.index);
        const int gr = canvas.place(right, {xk - 1, Lf + g.gate_turn}, t.index);
        canvas.wire(s, canvas.port(gu, "out"), canvas.port(gr, "in"), t.index);
        CellRef hcur = canvas.port(gr, "out");
        for (int j = 0; j < k; ++j) {
            canvas.wire(s, hcur, canvas.port(rise_cross[size_t(j)], "x"), t.index);
            hcur = canvas.port(rise_cross[size_t(j)], "x_out");
        }
        const long lane_row = T + g.out_row(k);
        if (hcur.row != lane_row) {
            // Off by one row: the lane rows of the bus have the other line parity.
            const long K = Lf + g.coordinator;
            const int co = canvas.place(coord, {hcur.row - 2, K - 2}, t.index);
            canvas.wire(s, hcur, canvas.port(co, "in"), t.index);
            hcur = canvas.port(co, "out");
            if (hcur.row != lane_row) throw CompileError("routing: gate output cannot reach its lane");
        }
        cursor.push_back(hcur);
    }

    // Bus lanes end at the right edge of the last tile.
    const TilePlan& last = plan.tiles.back();
    for (size_t j = 0; j < cursor.size(); ++j) {
        const CellRef end{cursor[j].row, last.origin.col + last.cols - 1};
        if (end.col > cursor[j].col) canvas.wire(int(j) + 1, cursor[j], end, last.index);
    }

    e.config = canvas.finish(opt.background_one ? 1 : 0);
    e.wire_map = canvas.segments();
    e.stamps = canvas.stamps();
    e.target = e.gate_heads.at(c.n + c.gate_count());
    e.wire_parity = 0;
    for (int i = 0; i < c.n; ++i)
        if (assignment[size_t(i)]) e.config.set(int(e.input_heads[size_t(i)].row), int(e.input_heads[size_t(i)].col), 1);
    return e;
}

// ---------------------------------------------------------------- verification

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    for (const CheckResult& r : checks)
        if (r.name == name) return &r;
    return nullptr;
}

VerificationReport verify_embedding(const Embedding& e, const Circuit& c, const std::vector<bool>& assignment) {
    VerificationReport rep;
    Configuration idle = e.config;
    for (CellRef h : e.input_heads)
        if (idle.contains(h)) idle.set(int(h.row), int(h.col), 0);

    // (a) parity: along every plain wire piece 1-cells share one coordinate-sum parity and alternate.
    {
        CheckResult r{"parity", true, ""};
        for (const auto& [signal, segs] : e.wire_map) {
            for (const WireSegment& s : segs) {
                const long dr = (s.to.row > s.from.row) - (s.to.row < s.from.row);
                const long dc = (s.to.col > s.from.col) - (s.to.col < s.from.col);
                for (CellRef x = s.from;; x = {x.row + dr, x.col + dc}) {
                    const State v = idle.get(x);
                    if (v != State((x.row + x.col) % 2 == e.wire_parity)) {
                        r.passed = false;
                        r.detail = "wire " + std::to_string(signal) + " breaks parity at (" + std::to_string(x.row) +
                                   "," + std::to_string(x.col) + ")";
                        break;
                    }
                    if (x == s.to) break;
                }
                if (!r.passed) break;
            }
            if (!r.passed) break;
        }
        rep.checks.push_back(r);
    }

    // (b) spacing: parallel bus lanes at every tile boundary sit at even mutual distance.
    {
        CheckResult r{"spacing", true, ""};
        for (const TilePlan& t : e.tiles)
            for (const auto* ports : {&t.in_ports, &t.out_ports})
                for (size_t i = 1; i < ports->size(); ++i) {
                    const long d = (*ports)[i].cell.row - (*ports)[i - 1].cell.row;
                    if (d % 2 || d < 4) {
                        r.passed = false;
                        r.detail = "tile " + std::to_string(t.index) + " lanes " + std::to_string(i - 1) + "," +
                                   std::to_string(i) + " at distance " + std::to_string(d);
                    }
                }
        rep.checks.push_back(r);
    }

    // (c) quiescence: with no input seeded the layout is already a fixpoint.
    {
        const FixpointResult res = run_to_fixpoint(idle, maj15(), Schedule::hv());
        rep.checks.push_back({"quiescent", res.steps == 0,
                              res.steps == 0 ? "" : "idle layout changes for " + std::to_string(res.steps) + " steps"});
    }

    // (d) per-gate values and (e) target, on the oracle's fixpoint.
    const std::vector<bool> values = evaluate_all(c, assignment);
    const OracleFrame f = oracle_fixpoint(e.config, maj15(), Schedule::hv());
    {
        CheckResult r{"gates", true, ""};
        for (const auto& [gate, head] : e.gate_heads) {
            const bool fired = f.final.get(head) != f.initial.get(head);
            if (fired != values[size_t(gate - 1)]) {
                r.passed = false;
                r.detail = "gate " + std::to_string(gate) + (fired ? " fired, expected 0" : " idle, expected 1");
                break;
            }
        }
        rep.checks.push_back(r);
    }
    {
        const bool fired = f.changed(e.target);
        const bool want = evaluate(c, assignment);
        rep.checks.push_back({"target", fired == want,
                              fired == want ? "" : std::string("target ") + (fired ? "flipped" : "stayed") +
                                                       ", circuit value " + (want ? "1" : "0")});
    }
    return rep;
}

// ---------------------------------------------------------------- sidecar map

std::string write_map(const Embedding& e) {
    std::ostringstream o;
    o << "grid " << e.config.rows() << ' ' << e.config.cols() << ' ' << int(e.config.background()) << '\n';
    for (const TilePlan& t : e.tiles) {
        o << "tile " << t.index << ' ' << t.gate << ' ' << t.origin.row << ' ' << t.origin.col << ' ' << t.rows << ' '
          << t.cols << '\n';
        for (const PortPlacement& p : t.in_ports) o << "in " << t.index << ' ' << p.lane << ' ' << p.cell.row << ' ' << p.cell.col << '\n';
        for (const PortPlacement& p : t.out_ports) o << "out " << t.index << ' ' << p.lane << ' ' << p.cell.row << ' ' << p.cell.col << '\n';
    }
    for (size_t i = 0; i < e.input_heads.size(); ++i)
        o << "input " << i + 1 << ' ' << e.input_heads[i].row << ' ' << e.input_heads[i].col << '\n';
    for (const auto& [g, h] : e.gate_heads) o << "gate " << g << ' ' << h.row << ' ' << h.col << '\n';
    o << "target " << e.target.row << ' ' << e.target.col << '\n';
    return o.str();
}

EmbeddingMap parse_map(std::string_view text) {
    EmbeddingMap m;
    std::istringstream in{std::string(text)};
    std::string line;
    long lineno = 0;
    bool have_target = false;
    auto bad = [&](const std::string& why) { return std::runtime_error(why + " at line " + std::to_string(lineno)); };
    auto tile = [&](long idx) -> TilePlan& {
        for (TilePlan& t : m.tiles)
            if (t.index == idx) return t;
        throw bad("port of unknown tile " + std::to_string(idx));
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::vector<long> v;
        for (long x; ls >> x;) v.push_back(x);
        if (!ls.eof()) throw bad("malformed map entry");
        auto need = [&](size_t n) {
            if (v.size() != n) throw bad("'" + key + "' takes " + std::to_string(n) + " numbers");
        };
        if (key == "grid") {
            need(3);
        } else if (key == "tile") {
            need(6);
            TilePlan t;
            t.index = int(v[0]);
            t.gate = int(v[1]);
            t.origin = {v[2], v[3]};
            t.rows = int(v[4]);
            t.cols = int(v[5]);
            m.tiles.push_back(t);
        } else if (key == "in" || key == "out") {
            need(4);
            auto& ports = key == "in" ? tile(v[0]).in_ports : tile(v[0]).out_ports;
            ports.push_back({int(v[1]), {v[2], v[3]}});
        } else if (key == "input") {
            need(3);
            if (v[0] != long(m.input_heads.size()) + 1) throw bad("inputs out of order");
            m.input_heads.push_back({v[1], v[2]});
        } else if (key == "gate") {
            need(3);
            m.gate_heads[int(v[0])] = {v[1], v[2]};
        } else if (key == "target") {
            need(2);
            m.target = {v[0], v[1]};
            have_target = true;
        } else {
            throw bad("unknown map entry '" + key + "'");
        }
    }
    if (!have_target) throw std::runtime_error("map has no target");
    return m;
}

}  // namespace fungal
