#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fungal/engine.hpp"

namespace fungal {

enum class Method { auto_, oracle };

class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Decides whether the target ever changes state. `auto_` uses the per-rule decider (oracle for f2).
bool predict(const PredictionInstance& inst, Method method = Method::auto_);

bool predict_f3(const PredictionInstance& inst);
bool predict_two_step(const PredictionInstance& inst);  // f4, f6
bool predict_f5(const PredictionInstance& inst);
bool predict_f1(const PredictionInstance& inst);

struct AllianceWitness {
    enum class Kind { block, staircase };
    Kind kind = Kind::block;
    std::vector<CellRef> cells;      // every cell of the alliance, including anchor blocks
    std::vector<CellRef> endpoints;  // empty for a block, two block-anchored cells for a staircase
    std::pair<int, int> lambdas{1, 1};
};

// True iff the target lies in an alliance of 0-cells: a 2x2 block, or a staircase walk that starts in
// a 2x2 block and reaches another block after passing the target. Coordinates are rectangle coordinates.
std::pair<bool, std::optional<AllianceWitness>> detect_alliance_f1(const PredictionInstance& inst);

// Center of F_V(F_H(patch)) under f2; patch indexed [row][col].
State f2_prime_local(const std::array<std::array<State, 3>, 3>& patch);

struct UnderlyingGraph {
    std::vector<CellRef> vertices;  // 0-cells in row-major order
    std::vector<std::pair<int, int>> edges_h, edges_v, edges_d;  // vertex index pairs, first < second

    int index_of(CellRef x) const;  // -1 if not a vertex
};

// Underlying graph of the 0-cells. A diagonal pair {x, y} is joined when some vertex z is a horizontal
// neighbor of one and a vertical neighbor of the other.
UnderlyingGraph build_underlying_graph(const Configuration& c);

// True iff the orthogonal adjacency graph on 0-cells is a forest.
bool is_acyclic_configuration(const Configuration& c);

// Automata network on the underlying graph whose synchronous step reproduces one HV period of f2.
class UnderlyingNetwork {
public:
    explicit UnderlyingNetwork(const Configuration& c);
    const UnderlyingGraph& graph() const { return graph_; }
    const std::vector<State>& states() const { return states_; }
    void step();
    // Writes the current vertex states back into (a copy of) the source rectangle.
    Configuration to_config() const;

private:
    Configuration source_;
    UnderlyingGraph graph_;
    std::vector<State> states_;
    // For each vertex, the vertex index at each of the 8 surrounding patch positions (-1 = not a vertex).
    std::vector<std::array<int, 9>> patch_;
};

}  // namespace fungal
