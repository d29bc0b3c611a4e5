#pragma once

// Word-packed rows shared by the engine's kernels. Not part of the public API.

#include <cstdint>
#include <vector>

#include "fungal/engine.hpp"

namespace fungal::detail {

using Word = std::uint64_t;

struct BitGrid {
    int rows = 0, cols = 0, words = 0;
    State bg = 0;
    Word tail = ~Word{0};  // valid bits of the last word
    std::vector<Word> bits;

    explicit BitGrid(const Configuration& c);
    Word* row(int r) { return bits.data() + size_t(r) * words; }
    const Word* row(int r) const { return bits.data() + size_t(r) * words; }
    Configuration to_config() const;
};

// Rule compiled for word-parallel evaluation.
struct RulePlan {
    std::vector<int> offsets;  // non-center offsets
    std::vector<bool> flip;    // flip[s]: a 0-cell with sum s becomes 1
    int max_offset = 0;
    explicit RulePlan(const RuleSpec& rule);
};

// Computes one row of f_H. Returns true if any cell changed. `in` and `out` may not alias.
bool step_row_h(const RulePlan& plan, const BitGrid& g, const Word* in, Word* out);
// Computes row r of f_V from the rows of g.
bool step_row_v(const RulePlan& plan, const BitGrid& g, int r, Word* out, const Word* bg_row);

}  // namespace fungal::detail
