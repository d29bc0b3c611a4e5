#include "fungal/suites.hpp"

#include <algorithm>
#include <random>

#include "fungal/compiler.hpp"
#include "fungal/figures.hpp"
#include "fungal/predictors.hpp"

namespace fungal::suites {

std::vector<std::string> names() { return {"gadgets", "predictors", "reduction", "figures"}; }

std::vector<Row> run(std::string_view suite, std::uint64_t seed) {
    if (suite == "gadgets") return gadgets();
    if (suite == "predictors") return predictors(seed);
    if (suite == "reduction") return reduction(seed);
    if (suite == "figures") return figures();
    throw UnknownSuite("unknown suite '" + std::string(suite) + "'");
}

std::vector<Row> gadgets() {
    std::vector<Row> rows;
    for (const std::string& name : gadget_names()) {
        const GadgetStamp s = gadget(name);
        const int k = int(s.inputs().size());
        Row row{name, true, ""};
        int cases = 0;
        for (int bits = 0; bits < (1 << k); ++bits) {
            std::vector<bool> in;
            for (int i = 0; i < k; ++i) in.push_back((bits >> i) & 1);
            for (int late = 0; late < k; ++late)
                for (int d : {0, 2, 4, 8}) {
                    std::vector<int> delays(size_t(k), 0);
                    delays[size_t(late)] = d;
                    const GadgetRun r = run_gadget(s, in, delays);
                    ++cases;
                    if (!r.passed && row.passed) {
                        row.passed = false;
                        row.detail = "inputs " + std::to_string(bits) + " delay " + std::to_string(d) + ": " + r.detail;
                    }
                }
        }
        if (row.passed) row.detail = std::to_string(cases) + " cases";
        rows.push_back(row);
    }
    return rows;
}

namespace {

Configuration random_grid(std::mt19937_64& rng, int rows, int cols, State bg) {
    std::vector<State> cells(size_t(rows) * cols);
    for (State& v : cells) v = State(rng() & 1);
    return Configuration(rows, cols, bg, std::move(cells));
}

Configuration grid_from_bits(unsigned bits, int rows, int cols, State bg) {
    std::vector<State> cells(size_t(rows) * cols);
    for (size_t i = 0; i < cells.size(); ++i) cells[i] = State((bits >> i) & 1);
    return Configuration(rows, cols, bg, std::move(cells));
}

}  // namespace

std::vector<Row> predictors(std::uint64_t seed, int random_instances) {
    std::vector<Row> rows;
    std::mt19937_64 rng(seed);
    for (const char* id : {"f0", "f1", "f3", "f4", "f5", "f6", "f7"}) {
        const RuleSpec rule = RuleSpec::named(id);
        for (State bg : {State(0), State(1)}) {
            Row row{std::string(id) + " bg" + std::to_string(bg), true, ""};
            long checked = 0;
            auto check = [&](const Configuration& c) {
                for (int r = 0; r < c.rows(); ++r)
                    for (int col = 0; col < c.cols(); ++col) {
                        const PredictionInstance inst{c, rule, Schedule::hv(), {r, col}};
                        ++checked;
                        if (predict(inst) != oracle_predict(inst).answer && row.passed) {
                            row.passed = false;
                            row.detail = "mismatch at (" + std::to_string(r) + "," + std::to_string(col) + ") of\n" +
                                         serialize(c);
                        }
                    }
            };
            for (unsigned bits = 0; bits < 512; ++bits) check(grid_from_bits(bits, 3, 3, bg));
            for (int i = 0; i < random_instances; ++i) check(random_grid(rng, 6, 6, bg));
            if (row.passed) row.detail = std::to_string(checked) + " targets";
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Row> reduction(std::uint64_t seed, int random_circuits) {
    std::vector<Row> rows;
    auto check = [&](const std::string& name, const Circuit& c, const std::vector<bool>& x) {
        const Embedding e = compile(c, x);
        const VerificationReport rep = verify_embedding(e, c, x);
        Row row{name, rep.passed(), ""};
        for (const CheckResult& r : rep.checks)
            if (!r.passed) row.detail += (row.detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
        if (row.passed)
            row.detail = std::to_string(e.config.rows()) + "x" + std::to_string(e.config.cols()) + ", value " +
                         (evaluate(c, x) ? "1" : "0");
        rows.push_back(row);
    };
    const Circuit example = parse_circuit("1 IN 0 0\n2 IN 0 0\n3 OR 1 2\n4 AND 3 2\n");
    for (int bits = 0; bits < 4; ++bits) {
        const std::vector<bool> x{bool(bits & 2), bool(bits & 1)};
        check(std::string("(x|y)&y with ") + (x[0] ? "1" : "0") + (x[1] ? "1" : "0"), example, x);
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_circuits; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const int m = std::uniform_int_distribution<int>(std::max(1, n - 1), 15)(rng);
        const Circuit c = random_monotone_circuit(rng, n, m);
        std::vector<bool> x;
        for (int j = 0; j < n; ++j) x.push_back(rng() & 1);
        check("random " + std::to_string(i) + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")", c, x);
    }
    return rows;
}

std::vector<Row> figures() {
    std::vector<Row> rows;
    for (const figures::Replay& r : figures::replays()) {
        const Trajectory t = run(r.frames.front(), r.rule, r.schedule, long(r.frames.size()) - 1);
        Row row{r.name, true, std::to_string(r.frames.size() - 1) + " steps"};
        for (size_t i = 0; i < r.frames.size(); ++i)
            if (!(t.frames[i] == r.frames[i])) {
                row.passed = false;
                row.detail = "frame " + std::to_string(i) + " differs";
                break;
            }
        rows.push_back(row);
    }
    {
        const Configuration a = figures::alliance();
        Row row{"f1-alliance", true, ""};
        for (int r = 0; r < a.rows() && row.passed; ++r)
            for (int c = 0; c < a.cols(); ++c) {
                if (a.at(r, c)) continue;
                const PredictionInstance inst{a, table_rule(1), Schedule::hv(), {r, c}};
                if (predict(inst) || !detect_alliance_f1(inst).first) {
                    row.passed = false;
                    row.detail = "cell (" + std::to_string(r) + "," + std::to_string(c) + ") not stable";
                    break;
                }
            }
        rows.push_back(row);
    }
    {
        const Configuration s = figures::f2_stable();
        const FixpointResult f = run_to_fixpoint(s, table_rule(2), Schedule::hv());
        rows.push_back({"f2-stable", f.steps == 0 && f.config == s, f.steps == 0 ? "" : "configuration changed"});
    }
    {
        const figures::GraphFigure fig = figures::underlying_graph();
        const UnderlyingGraph g = build_underlying_graph(fig.config);
        auto same = [&](const std::vector<std::pair<int, int>>& got, const std::vector<figures::Edge>& want) {
            if (got.size() != want.size()) return false;
            for (const auto& [x, y] : want) {
                int a = g.index_of(x), b = g.index_of(y);
                if (a > b) std::swap(a, b);
                if (std::find(got.begin(), got.end(), std::pair{a, b}) == got.end()) return false;
            }
            return true;
        };
        const bool ok = same(g.edges_h, fig.h) && same(g.edges_v, fig.v) && same(g.edges_d, fig.d);
        rows.push_back({"underlying-graph", ok,
                        std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges_d.size()) +
                            " diagonal edges"});
    }
    return rows;
}

}  // namespace fungal::suites
