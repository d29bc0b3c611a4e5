#include "fungal/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace fungal {

std::string_view kind_token(GateKind k) {
    switch (k) {
        case GateKind::input: return "IN";
        case GateKind::and_: return "AND";
        case GateKind::or_: return "OR";
        case GateKind::not_: return "NOT";
    }
    return "?";
}

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i <= line.size()) {
        size_t j = line.find(' ', i);
        if (j == std::string_view::npos) j = line.size();
        out.push_back(line.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

// Structural checks shared by the parser (with line numbers) and validate().
void check_gate(const Gate& g, int expected, bool inputs_done, long line) {
    if (g.number != expected) throw CircuitError("non-consecutive numbering (expected gate " + std::to_string(expected) + ")", line);
    if (g.kind == GateKind::input) {
        if (inputs_done) throw CircuitError("input gate after a non-input gate", line);
        if (g.g1 != 0 || g.g2 != 0) throw CircuitError("input gates take predecessors 0 0", line);
        return;
    }
    if (g.g1 >= g.number || g.g2 >= g.number) throw CircuitError("forward reference", line);
    if (g.g1 < 1 || g.g2 < 1) throw CircuitError("predecessor must be a gate number", line);
    if (g.kind == GateKind::not_ && g.g1 != g.g2) throw CircuitError("NOT gates take one predecessor (g2 = g1)", line);
}

int find_output(const std::vector<Gate>& gates) {
    std::vector<bool> used(gates.size() + 1, false);
    for (const Gate& g : gates)
        if (g.kind != GateKind::input) used[size_t(g.g1)] = used[size_t(g.g2)] = true;
    int output = 0, sinks = 0;
    for (const Gate& g : gates)
        if (!used[size_t(g.number)]) ++sinks, output = g.number;
    if (sinks != 1) throw CircuitError(sinks ? "multiple sinks" : "no output gate", 0);
    return output;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
    Circuit c;
    std::string line;
    long lineno = 0;
    bool inputs_done = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto f = split_spaces(line);
        if (f.size() != 4) throw CircuitError("expected '<g> <kind> <g1> <g2>'", lineno);
        Gate g;
        if (!parse_int(f[0], g.number) || !parse_int(f[2], g.g1) || !parse_int(f[3], g.g2))
            throw CircuitError("malformed gate numbers", lineno);
        if (f[1] == "IN") g.kind = GateKind::input;
        else if (f[1] == "AND") g.kind = GateKind::and_;
        else if (f[1] == "OR") g.kind = GateKind::or_;
        else if (f[1] == "NOT") g.kind = GateKind::not_;
        else throw CircuitError("bad kind '" + std::string(f[1]) + "'", lineno);
        check_gate(g, int(c.gates.size()) + 1, inputs_done, lineno);
        if (g.kind == GateKind::input) ++c.n;
        else inputs_done = true;
        c.gates.push_back(g);
    }
    if (c.gates.empty()) throw CircuitError("empty circuit", 0);
    c.output = find_output(c.gates);
    return c;
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_circuit(in);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CircuitError("cannot open " + path, 0);
    return parse_circuit(in);
}

std::string serialize(const Circuit& c) {
    std::string out;
    for (const Gate& g : c.gates)
        out += std::to_string(g.number) + ' ' + std::string(kind_token(g.kind)) + ' ' + std::to_string(g.g1) + ' ' +
               std::to_string(g.g2) + '\n';
    return out;
}

void validate(const Circuit& c) {
    bool inputs_done = false;
    int n = 0;
    for (size_t i = 0; i < c.gates.size(); ++i) {
        check_gate(c.gates[i], int(i) + 1, inputs_done, 0);
        if (c.gates[i].kind == GateKind::input) ++n;
        else inputs_done = true;
    }
    if (c.gates.empty()) throw CircuitError("empty circuit", 0);
    if (n != c.n) throw CircuitError("input count does not match the input gates", 0);
    if (find_output(c.gates) != c.output) throw CircuitError("output is not the unique sink", 0);
}

std::vector<bool> parse_assignment(std::string_view bits, int n) {
    if (int(bits.size()) != n)
        throw CircuitError("assignment has " + std::to_string(bits.size()) + " bits, circuit has " +
                               std::to_string(n) + " inputs", 0);
    std::vector<bool> x;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw CircuitError("assignment must use only 0 and 1", 0);
        x.push_back(ch == '1');
    }
    return x;
}

std::vector<bool> evaluate_all(const Circuit& c, const std::vector<bool>& x) {
    if (int(x.size()) != c.n) throw CircuitError("assignment length does not match input count", 0);
    std::vector<bool> v(c.gates.size());
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        switch (g.kind) {
            case GateKind::input: v[i] = x[i]; break;
            case GateKind::and_: v[i] = v[size_t(g.g1 - 1)] && v[size_t(g.g2 - 1)]; break;
            case GateKind::or_: v[i] = v[size_t(g.g1 - 1)] || v[size_t(g.g2 - 1)]; break;
            case GateKind::not_: v[i] = !v[size_t(g.g1 - 1)]; break;
        }
    }
    return v;
}

bool evaluate(const Circuit& c, const std::vector<bool>& x) { return evaluate_all(c, x)[size_t(c.output - 1)]; }

bool evaluate_recursive(const Circuit& c, const std::vector<bool>& x) {
    if (int(x.size()) != c.n) throw CircuitError("assignment length does not match input count", 0);
    std::vector<int> memo(c.gates.size(), -1);
    std::function<bool(int)> value = [&](int number) -> bool {
        int& m = memo[size_t(number - 1)];
        if (m >= 0) return m;
        const Gate& g = c.gate(number);
        bool r = false;
        if (g.kind == GateKind::input) r = x[size_t(number - 1)];
        else if (g.kind == GateKind::not_) r = !value(g.g1);
        else if (g.kind == GateKind::and_) r = value(g.g1) && value(g.g2);
        else r = value(g.g1) || value(g.g2);
        m = r;
        return r;
    };
    return value(c.output);
}

bool is_monotone(const Circuit& c) {
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::not_) return false;
    return true;
}

Circuit random_monotone_circuit(std::mt19937_64& rng, int n, int m) {
    if (n < 1 || m < 1 || n > m + 1) throw std::invalid_argument("random circuit needs 1 <= n <= m + 1");
    Circuit c;
    c.n = n;
    for (int i = 1; i <= n; ++i) c.gates.push_back({i, GateKind::input, 0, 0});
    std::vector<int> unused(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) unused[size_t(i)] = i + 1;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int g = n + 1; g <= n + m; ++g) {
        const int left = n + m - g + 1;  // gates still to place, this one included
        const int u = int(unused.size());
        // Each later gate can lower the unused count by at most one; the last one must consume all.
        const int need = std::max(0, u - left + 1);
        const int take = pick(need, std::min(2, u));
        std::vector<int> ops;
        for (int k = 0; k < take; ++k) {
            const int i = pick(0, int(unused.size()) - 1);
            ops.push_back(unused[size_t(i)]);
            unused.erase(unused.begin() + i);
        }
        while (ops.size() < 2) ops.push_back(pick(1, g - 1));
        if (pick(0, 1)) std::swap(ops[0], ops[1]);
        c.gates.push_back({g, pick(0, 1) ? GateKind::and_ : GateKind::or_, ops[0], ops[1]});
        unused.push_back(g);
    }
    c.output = n + m;
    validate(c);
    return c;
}

}  // namespace fungal
