#include <gtest/gtest.h>

#include <random>

#include "fungal/circuit.hpp"

using namespace fungal;

namespace {

const char* kExample = "1 IN 0 0\n2 IN 0 0\n3 OR 1 2\n4 AND 3 2\n";

std::string error_of(const std::string& text) {
    try {
        parse_circuit(text);
    } catch (const CircuitError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(ParseCircuit, SmallestBinaryGate) {
    const Circuit c = parse_circuit("1 IN 0 0\n2 IN 0 0\n3 AND 1 2\n");
    EXPECT_EQ(c.n, 2);
    EXPECT_EQ(c.gates.size(), 3u);
    EXPECT_EQ(c.output, 3);
    EXPECT_EQ(c.gate(3).kind, GateKind::and_);
}

TEST(ParseCircuit, WorkedExample) {
    const Circuit c = parse_circuit(kExample);
    EXPECT_EQ(c.output, 4);
    EXPECT_EQ(c.gate_count(), 2);
    EXPECT_EQ(c.gate(4), (Gate{4, GateKind::and_, 3, 2}));
}

TEST(ParseCircuit, CommentsAndBlankLines) {
    const Circuit c = parse_circuit("# (x|y)&y\n1 IN 0 0\n2 IN 0 0\n\n3 OR 1 2\n# last\n4 AND 3 2\n");
    EXPECT_EQ(c, parse_circuit(kExample));
}

TEST(ParseCircuit, Errors) {
    EXPECT_NE(error_of("1 IN 0 0\n2 IN 0 0\n3 AND 4 1\n4 OR 3 2\n").find("forward reference"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 0\n3 IN 0 0\n").find("non-consecutive numbering"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 0\n2 IN 0 0\n3 OR 1 1\n").find("multiple sinks"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 0\n2 XOR 1 1\n").find("bad kind 'XOR'"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 0\n2 IN 0 0\n3 NOT 1 2\n").find("NOT gates take one predecessor"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 1\n").find("input gates take predecessors 0 0"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0 0\n2 OR 1 1\n3 IN 0 0\n").find("input gate after a non-input gate"), std::string::npos);
    EXPECT_NE(error_of("1 IN 0\n").find("expected"), std::string::npos);
    EXPECT_NE(error_of("# nothing\n").find("empty circuit"), std::string::npos);
}

TEST(ParseCircuit, ErrorNamesLine) {
    EXPECT_EQ(error_of("1 IN 0 0\n2 IN 0 0\n3 AND 4 1\n4 OR 3 2\n"), "forward reference at line 3");
}

TEST(Evaluate, WorkedExample) {
    const Circuit c = parse_circuit(kExample);
    EXPECT_FALSE(evaluate(c, {true, false}));
    EXPECT_TRUE(evaluate(c, {false, true}));
    EXPECT_TRUE(evaluate(c, {true, true}));
    EXPECT_FALSE(evaluate(c, {false, false}));
    EXPECT_EQ(evaluate_all(c, {true, false}), (std::vector<bool>{true, false, true, false}));
}

TEST(Evaluate, TrivialCircuits) {
    const Circuit id = parse_circuit("1 IN 0 0\n");
    EXPECT_TRUE(evaluate(id, {true}));
    EXPECT_FALSE(evaluate(id, {false}));
    EXPECT_TRUE(evaluate(parse_circuit("1 IN 0 0\n2 AND 1 1\n"), {true}));
    EXPECT_TRUE(evaluate(parse_circuit("1 IN 0 0\n2 NOT 1 1\n"), {false}));
    EXPECT_THROW(evaluate(id, {true, true}), CircuitError);
}

TEST(Assignment, Parse) {
    EXPECT_EQ(parse_assignment("10", 2), (std::vector<bool>{true, false}));
    EXPECT_THROW(parse_assignment("1", 2), CircuitError);
    EXPECT_THROW(parse_assignment("12", 2), CircuitError);
}

TEST(IsMonotone, Examples) {
    EXPECT_TRUE(is_monotone(parse_circuit(kExample)));
    EXPECT_FALSE(is_monotone(parse_circuit("1 IN 0 0\n2 NOT 1 1\n")));
    EXPECT_TRUE(is_monotone(parse_circuit("1 IN 0 0\n")));
}

TEST(Properties, MonotoneCircuitsAreMonotoneFunctions) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + int(rng() % 6);
        const Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 8));
        for (unsigned a = 0; a < (1u << n); ++a)
            for (unsigned b = 0; b < (1u << n); ++b) {
                if ((a & b) != a) continue;
                std::vector<bool> xa, xb;
                for (int i = 0; i < n; ++i) {
                    xa.push_back((a >> i) & 1);
                    xb.push_back((b >> i) & 1);
                }
                ASSERT_LE(evaluate(c, xa), evaluate(c, xb));
            }
    }
}

TEST(Properties, RecursiveEvaluatorAgrees) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + int(rng() % 6);
        Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 10));
        for (Gate& g : c.gates)
            if (g.kind != GateKind::input && rng() % 4 == 0 && g.g1 == g.g2) g.kind = GateKind::not_;
        validate(c);
        std::vector<bool> x;
        for (int i = 0; i < n; ++i) x.push_back(rng() & 1);
        ASSERT_EQ(evaluate(c, x), evaluate_recursive(c, x)) << serialize(c);
    }
}

TEST(Properties, SerializeRoundTrip) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + int(rng() % 6);
        const Circuit c = random_monotone_circuit(rng, n, std::max(1, n - 1) + int(rng() % 10));
        const std::string text = serialize(c);
        EXPECT_EQ(parse_circuit(text), c);
        EXPECT_EQ(serialize(parse_circuit(text)), text);
    }
    EXPECT_EQ(serialize(parse_circuit(kExample)), kExample);
}

TEST(RandomCircuit, ShapeConstraints) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + int(rng() % 6), m = std::max(1, n - 1) + int(rng() % 15);
        const Circuit c = random_monotone_circuit(rng, n, m);
        EXPECT_EQ(c.n, n);
        EXPECT_EQ(c.gate_count(), m);
        EXPECT_TRUE(is_monotone(c));
    }
    EXPECT_THROW(random_monotone_circuit(rng, 5, 2), std::invalid_argument);
}
