#include <numeric>

#include "fungal/predictors.hpp"

namespace fungal {

int UnderlyingGraph::index_of(CellRef x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    return it != vertices.end() && *it == x ? int(it - vertices.begin()) : -1;
}

UnderlyingGraph build_underlying_graph(const Configuration& c) {
    UnderlyingGraph g;
    for (int r = 0; r < c.rows(); ++r)
        for (int col = 0; col < c.cols(); ++col)
            if (!c.at(r, col)) g.vertices.push_back({r, col});

    auto zero = [&](long r, long col) { return c.contains(r, col) && !c.at(int(r), int(col)); };
    auto edge = [&](auto& set, CellRef a, CellRef b) {
        int i = g.index_of(a), j = g.index_of(b);
        set.emplace_back(std::min(i, j), std::max(i, j));
    };
    for (const CellRef& x : g.vertices) {
        const long r = x.row, col = x.col;
        if (zero(r, col + 1)) edge(g.edges_h, x, {r, col + 1});
        if (zero(r + 1, col)) edge(g.edges_v, x, {r + 1, col});
        // Diagonal pairs need a mediating vertex z: one of the two cells completing the square.
        for (int dc : {-1, 1}) {
            if (!zero(r + 1, col + dc)) continue;
            if (zero(r, col + dc) || zero(r + 1, col)) edge(g.edges_d, x, {r + 1, col + dc});
        }
    }
    std::sort(g.edges_h.begin(), g.edges_h.end());
    std::sort(g.edges_v.begin(), g.edges_v.end());
    std::sort(g.edges_d.begin(), g.edges_d.end());
    return g;
}

bool is_acyclic_configuration(const Configuration& c) {
    const UnderlyingGraph g = build_underlying_graph(c);
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    for (const auto* set : {&g.edges_h, &g.edges_v}) {
        for (auto [a, b] : *set) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return false;
            parent[size_t(ra)] = rb;
        }
    }
    return true;
}

UnderlyingNetwork::UnderlyingNetwork(const Configuration& c)
    : source_(c), graph_(build_underlying_graph(c)), states_(graph_.vertices.size(), 0),
      patch_(graph_.vertices.size()) {
    for (auto& p : patch_) p.fill(-1);
    // Patch slots are labelled from the edge sets alone, by the relative position of the neighbor.
    auto link = [&](int a, int b) {
        const CellRef& x = graph_.vertices[size_t(a)];
        const CellRef& y = graph_.vertices[size_t(b)];
        patch_[size_t(a)][size_t((y.row - x.row + 1) * 3 + (y.col - x.col + 1))] = b;
        patch_[size_t(b)][size_t((x.row - y.row + 1) * 3 + (x.col - y.col + 1))] = a;
    };
    for (const auto* set : {&graph_.edges_h, &graph_.edges_v, &graph_.edges_d})
        for (auto [a, b] : *set) link(a, b);
}

void UnderlyingNetwork::step() {
    std::vector<State> next(states_.size());
    for (size_t v = 0; v < states_.size(); ++v) {
        if (states_[v]) {
            next[v] = 1;
            continue;
        }
        std::array<std::array<State, 3>, 3> patch;
        for (int i = 0; i < 9; ++i) {
            const int u = patch_[v][size_t(i)];
            patch[size_t(i / 3)][size_t(i % 3)] = i == 4 ? states_[v] : u < 0 ? State{1} : states_[size_t(u)];
        }
        next[v] = f2_prime_local(patch);
    }
    states_.swap(next);
}

Configuration UnderlyingNetwork::to_config() const {
    Configuration out = source_;
    for (size_t v = 0; v < states_.size(); ++v)
        out.set(int(graph_.vertices[v].row), int(graph_.vertices[v].col), states_[v]);
    return out;
}

}  // namespace fungal
