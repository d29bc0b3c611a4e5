#include <algorithm>
#include <set>

#include "fungal/compiler.hpp"

namespace fungal {

namespace {

// Fixture texts: '1' and '0' are cells the gadget owns, '.' is surrounding background (state 0).
// Straight wire ends drawn around each gadget in the figures are left to wire segments.
struct Fixture {
    const char* name;
    std::vector<const char*> rows;
    // (name, row, col, direction)
    std::vector<std::tuple<const char*, int, int, PortDir>> ports;
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"turn-up",  // right -> up: the horizontal wire overshoots the corner by one cell
         {"..1.",
          "..0.",
          "..1.",
          "0101"},
         {{"in", 3, 0, PortDir::in_left}, {"out", 0, 2, PortDir::out_top}}},
        {"turn-right",  // up -> right: the vertical wire overshoots the corner by one cell
         {"1...",
          "0101",
          "1...",
          "0..."},
         {{"in", 3, 0, PortDir::in_bottom}, {"out", 1, 3, PortDir::out_right}}},
        {"coordinator",  // moves a horizontal wire up by one row
         {"..1...",
          ".10010",
          "0101..",
          "..1..."},
         {{"in", 2, 0, PortDir::in_left}, {"out", 1, 5, PortDir::out_right}}},
        {"or",  // y joins the horizontal wire at one of its 0-cells
         {"....1..",
          "0101010",
          "....1..",
          "....0..",
          "....1..",
          "....0.."},
         {{"x", 1, 0, PortDir::in_left}, {"y", 5, 4, PortDir::in_bottom}, {"out", 1, 6, PortDir::out_right}}},
        {"and",  // y must fill the blocking 0 at the junction before x can pass
         {"....1...",
          "10100010",
          "...11...",
          "..1001..",
          "...1....",
          "...0...."},
         {{"x", 1, 0, PortDir::in_left}, {"y", 5, 3, PortDir::in_bottom}, {"out", 1, 7, PortDir::out_right}}},
        {"crossing",  // wires of equal parity cross at a shared 1-cell
         {"..0..",
          "..1..",
          "..0..",
          "10101",
          "..0..",
          "..1..",
          "..0.."},
         {{"x", 3, 0, PortDir::in_left},
          {"y", 6, 2, PortDir::in_bottom},
          {"x_out", 3, 4, PortDir::out_right},
          {"y_out", 0, 2, PortDir::out_top}}},
        {"duplicator",  // taps a horizontal wire; the 1 below the tap cell completes the upward branch
         {"....0...",
          "...11...",
          "..1001..",
          "10101010",
          "...1...."},
         {{"in", 3, 0, PortDir::in_left}, {"right", 3, 7, PortDir::out_right}, {"up", 0, 4, PortDir::out_top}}},
    };
    return all;
}

Port make_port(const GadgetStamp& s, const std::string& name, int r, int c, PortDir dir) {
    Port p{name, {r, c}, dir, 0, 0};
    // Parity of the wire's 1-cells: the port cell itself if it is 1, its neighbors otherwise.
    p.sum_parity = (r + c + (s.cell(r, c) ? 0 : 1)) % 2;
    const bool horizontal = dir == PortDir::in_left || dir == PortDir::out_right;
    p.line_parity = (horizontal ? r : c) % 2;
    return p;
}

GadgetStamp from_fixture(const Fixture& f) {
    GadgetStamp s;
    s.name = f.name;
    for (const char* row : f.rows) {
        std::string pat(row), mask(row);
        for (size_t i = 0; i < pat.size(); ++i) {
            mask[i] = pat[i] == '.' ? '.' : 'x';
            if (pat[i] == '.') pat[i] = '0';
        }
        s.pattern.push_back(pat);
        s.mask.push_back(mask);
    }
    for (auto& [name, r, c, dir] : f.ports) s.ports.push_back(make_port(s, name, r, c, dir));
    return s;
}

GadgetStamp straight_wire(bool horizontal, int length) {
    if (length < 2) throw std::invalid_argument("wires need at least two cells");
    GadgetStamp s;
    s.name = horizontal ? "h-wire" : "v-wire";
    if (horizontal) {
        std::string row(size_t(length), '0');
        for (int c = 1; c < length; c += 2) row[size_t(c)] = '1';  // head cell (col 0) is 0
        s.pattern = {row};
        s.mask = {std::string(size_t(length), 'x')};
        s.ports = {make_port(s, "in", 0, 0, PortDir::in_left), make_port(s, "out", 0, length - 1, PortDir::out_right)};
    } else {
        for (int r = 0; r < length; ++r) {
            s.pattern.push_back((length - 1 - r) % 2 ? "1" : "0");  // head cell (bottom) is 0
            s.mask.push_back("x");
        }
        s.ports = {make_port(s, "in", length - 1, 0, PortDir::in_bottom), make_port(s, "out", 0, 0, PortDir::out_top)};
    }
    return s;
}

}  // namespace

std::vector<Port> GadgetStamp::inputs() const {
    std::vector<Port> out;
    for (const Port& p : ports)
        if (p.is_input()) out.push_back(p);
    return out;
}

std::vector<Port> GadgetStamp::outputs() const {
    std::vector<Port> out;
    for (const Port& p : ports)
        if (!p.is_input()) out.push_back(p);
    return out;
}

const Port& GadgetStamp::port(std::string_view n) const {
    for (const Port& p : ports)
        if (p.name == n) return p;
    throw std::invalid_argument("gadget " + name + " has no port " + std::string(n));
}

std::vector<bool> GadgetStamp::truth(const std::vector<bool>& in) const {
    if (name == "and") return {in[0] && in[1]};
    if (name == "or") return {in[0] || in[1]};
    if (name == "crossing") return {in[0], in[1]};
    if (name == "duplicator") return {in[0], in[0]};
    return {in[0]};  // wires, turns, coordinator
}

GadgetStamp gadget(std::string_view name, int length) {
    if (name == "h-wire") return straight_wire(true, length);
    if (name == "v-wire") return straight_wire(false, length);
    for (const Fixture& f : fixtures())
        if (name == f.name) return from_fixture(f);
    throw UnknownGadget("unknown gadget '" + std::string(name) + "'");
}

std::vector<std::string> gadget_names() {
    std::vector<std::string> out = {"h-wire", "v-wire"};
    for (const Fixture& f : fixtures()) out.push_back(f.name);
    return out;
}

// ---------------------------------------------------------------- single-gadget harness

namespace {

struct Lead {
    std::vector<CellRef> cells;  // ordered away from the gadget
};

CellRef step_away(PortDir d, CellRef p, int k) {
    switch (d) {
        case PortDir::in_left: return {p.row, p.col - k};
        case PortDir::in_bottom: return {p.row + k, p.col};
        case PortDir::out_right: return {p.row, p.col + k};
        case PortDir::out_top: return {p.row - k, p.col};
    }
    return p;
}

}  // namespace

GadgetRun run_gadget(const GadgetStamp& s, const std::vector<bool>& inputs, const std::vector<int>& delays) {
    const auto ins = s.inputs();
    const auto outs = s.outputs();
    if (inputs.size() != ins.size()) throw std::invalid_argument("wrong number of gadget inputs for " + s.name);
    int max_delay = 0;
    for (int d : delays) {
        if (d < 0 || d % 2) throw std::invalid_argument("delays must be even and non-negative");
        max_delay = std::max(max_delay, d);
    }

    const int pad = 12 + max_delay;
    const CellRef anchor{pad, pad};
    Configuration cfg(s.rows() + 2 * pad, s.cols() + 2 * pad, 0);
    for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < s.cols(); ++c) cfg.set(r + pad, c + pad, s.cell(r, c));

    auto on_wire = [&](const Port& p, CellRef x) {
        return State((x.row + x.col) % 2 == p.sum_parity);  // anchor row+col is even
    };
    auto lead = [&](const Port& p, int base, bool end_on_one) {
        const CellRef at{p.offset.row + anchor.row, p.offset.col + anchor.col};
        int len = base;
        // Lead-ins end in a 0 head cell; lead-outs end in a 1 so their last 0 can still flip.
        if (on_wire(p, step_away(p.dir, at, len)) != State(end_on_one)) ++len;
        Lead l;
        for (int k = 1; k <= len; ++k) {
            CellRef x = step_away(p.dir, at, k);
            cfg.set(int(x.row), int(x.col), on_wire(p, x));
            l.cells.push_back(x);
        }
        return l;
    };

    std::vector<Lead> in_leads, out_leads;
    for (size_t i = 0; i < ins.size(); ++i) {
        const int delay = i < delays.size() ? delays[i] : 0;
        in_leads.push_back(lead(ins[i], 6 + delay, false));
    }
    for (const Port& p : outs) out_leads.push_back(lead(p, 6, true));
    const Configuration idle = cfg;
    for (size_t i = 0; i < ins.size(); ++i)
        if (inputs[i]) cfg.set(int(in_leads[i].cells.back().row), int(in_leads[i].cells.back().col), 1);

    const FixpointResult res = run_to_fixpoint(cfg, maj15(), Schedule::hv());
    const Configuration& fin = res.config;

    GadgetRun run;
    run.expected = s.truth(inputs);
    run.passed = true;
    auto fail = [&](const std::string& why) {
        if (run.passed) run.detail = why;
        run.passed = false;
    };

    std::set<CellRef> allowed;  // cells that may change: the stamp box and the leads of firing wires
    for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < s.cols(); ++c) allowed.insert({r + pad, c + pad});
    for (size_t i = 0; i < ins.size(); ++i)
        if (inputs[i]) allowed.insert(in_leads[i].cells.begin(), in_leads[i].cells.end());

    for (size_t o = 0; o < outs.size(); ++o) {
        int zeros = 0, flipped = 0;
        for (CellRef x : out_leads[o].cells) {
            if (idle.get(x)) continue;
            ++zeros;
            flipped += fin.get(x);
        }
        const bool fired = flipped > 0;
        run.fired.push_back(fired);
        if (flipped != 0 && flipped != zeros) fail("out-port " + outs[o].name + " partially fired");
        if (fired != run.expected[o]) fail("out-port " + outs[o].name + (fired ? " fired unexpectedly" : " stayed idle"));
        if (fired) allowed.insert(out_leads[o].cells.begin(), out_leads[o].cells.end());
    }
    for (size_t i = 0; i < ins.size(); ++i) {
        if (inputs[i]) continue;
        for (CellRef x : in_leads[i].cells)
            if (fin.get(x) != idle.get(x)) fail("idle in-port " + ins[i].name + " changed");
    }
    for (int r = 0; r < cfg.rows(); ++r)
        for (int c = 0; c < cfg.cols(); ++c)
            if (fin.at(r, c) != cfg.at(r, c) && !allowed.count({r, c}))
                fail("spurious flip at " + std::to_string(r - pad) + "," + std::to_string(c - pad));
    bool any_input = std::find(inputs.begin(), inputs.end(), true) != inputs.end();
    if (!any_input && res.steps != 0) fail("idle gadget is not a fixpoint");
    return run;
}

bool verify_gadget(const GadgetStamp& s, const std::vector<bool>& inputs, const std::vector<int>& delays) {
    return run_gadget(s, inputs, delays).passed;
}

}  // namespace fungal
