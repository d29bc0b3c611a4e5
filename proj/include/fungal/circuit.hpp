#pragma once

#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fungal {

enum class GateKind { input, and_, or_, not_ };

std::string_view kind_token(GateKind k);

// One line of a circuit description: gate g of kind t fed by g1 and g2 (0 for inputs, g2 = g1 for NOT).
struct Gate {
    int number = 0;
    GateKind kind = GateKind::input;
    int g1 = 0;
    int g2 = 0;
    friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
    int n = 0;                 // inputs are gates 1..n
    std::vector<Gate> gates;   // gates[i].number == i + 1
    int output = 0;            // the unique gate that feeds nothing

    int gate_count() const { return int(gates.size()) - n; }
    const Gate& gate(int number) const { return gates[size_t(number - 1)]; }
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

class CircuitError : public std::runtime_error {
public:
    CircuitError(const std::string& what, long line)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) : what) {}
};

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::string& path);
std::string serialize(const Circuit& c);

// Checks every structural invariant; throws CircuitError naming the first violation.
void validate(const Circuit& c);

// Assignment strings list input 1 first.
std::vector<bool> parse_assignment(std::string_view bits, int n);

// Values of all gates, indexed by gate number - 1, computed in increasing gate order.
std::vector<bool> evaluate_all(const Circuit& c, const std::vector<bool>& x);
bool evaluate(const Circuit& c, const std::vector<bool>& x);
// Independent top-down evaluator with memoization, used to cross-check evaluate.
bool evaluate_recursive(const Circuit& c, const std::vector<bool>& x);

bool is_monotone(const Circuit& c);

// Uniformly shaped random AND/OR circuit with n inputs and m gates in which every gate but the
// last feeds some later gate. Needs 1 <= n <= m + 1.
Circuit random_monotone_circuit(std::mt19937_64& rng, int n, int m);

}  // namespace fungal
