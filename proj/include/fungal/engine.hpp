#pragma once

#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fungal/grid.hpp"

namespace fungal {

enum class Direction { H, V };

// One-dimensional totalistic freezing rule. A 0-cell takes h_table[s], where s is the number of
// 1s among the non-center offsets; a 1-cell stays 1.
struct RuleSpec {
    std::string id;
    std::vector<int> offsets;     // distinct, contains 0
    std::vector<State> h_table;   // indexed by sum, size = offsets.size()

    static RuleSpec custom(std::string id, std::vector<int> offsets, std::vector<State> h_table);
    // f0..f7 (Table-style triple rules) or maj15.
    static RuleSpec named(std::string_view id);

    int neighbor_count() const { return int(offsets.size()) - 1; }
    int max_offset() const;
    bool monotone() const;
    friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

RuleSpec table_rule(int k);  // f_k with h = binary digits of k, h(0) most significant
RuleSpec maj15();

struct Schedule {
    std::vector<Direction> word;

    static Schedule parse(std::string_view word);
    static Schedule hv() { return parse("HV"); }
    long period() const { return long(word.size()); }
    // Direction applied at step t >= 1.
    Direction at(long t) const { return word[size_t((t - 1) % period())]; }
    std::string str() const;
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct PredictionInstance {
    Configuration config;
    RuleSpec rule;
    Schedule schedule;
    CellRef target;
};

struct Trajectory {
    std::vector<Configuration> frames;
    std::optional<long> converged_at;
};

struct FixpointResult {
    Configuration config;
    long steps = 0;          // last step that changed anything (0 if the input is already fixed)
    bool converged = false;  // false only when max_steps ran out first
};

// Applies f_H or f_V to every cell of the rectangle; reads outside use the background.
Configuration apply_direction(const Configuration& c, const RuleSpec& rule, Direction d);
Configuration step(const Configuration& c, const RuleSpec& rule, const Schedule& s, long t);
Trajectory run(const Configuration& c, const RuleSpec& rule, const Schedule& s, long steps);

// Guaranteed termination bound for freezing rules: (cells + 1) * |word|.
long convergence_bound(const Configuration& c, const Schedule& s);

// Sparse fixpoint iteration that revisits only rows whose inputs changed.
// flip_time, when given, receives per cell the first step it changed (-1 if never).
FixpointResult run_to_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s,
                               std::optional<long> max_steps = {}, std::vector<long>* flip_time = nullptr);

class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    bool answer = false;
    std::optional<long> flip_time;
};

// Fixpoint of the whole rectangle as embedded in its infinite background.
struct OracleFrame {
    Configuration initial;
    Configuration final;
    std::vector<long> flip_time;  // per rectangle cell, -1 if unchanged
    int margin = 0;               // padding that produced the accepted answer
    bool certified = false;       // true when the padding ring provably never left the background

    bool changed(CellRef x) const { return flip_time[size_t(x.row) * initial.cols() + x.col] >= 0; }
    OracleResult at(CellRef x) const;
};

// Brute-force referee. Throws InconclusiveError when margin escalation does not settle.
OracleResult oracle_predict(const PredictionInstance& inst);
OracleFrame oracle_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s);

// Counters fed by every kernel call; the acceptance harness reads them.
struct EngineStats {
    std::atomic<long> fixpoint_runs{0};
    std::atomic<long> monotonicity_violations{0};
    std::atomic<long> bound_violations{0};
    std::atomic<long> max_steps_seen{0};
    void reset();
};
EngineStats& engine_stats();

namespace kernels {

enum class Exec { serial, parallel };
// Word-packed full-frame update; `parallel` splits rows across OpenMP threads.
Configuration apply_direction(const Configuration& c, const RuleSpec& rule, Direction d, Exec exec);
// Full-frame fixpoint loop (every row every step); kept for benchmarking against the sparse one.
FixpointResult run_to_fixpoint_dense(const Configuration& c, const RuleSpec& rule, const Schedule& s, Exec exec);

}  // namespace kernels

// Scalar cell-by-cell implementation used as the testing referee for the packed kernels.
namespace reference {

Configuration apply_direction(const Configuration& c, const RuleSpec& rule, Direction d);
FixpointResult run_to_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s);

}  // namespace reference

}  // namespace fungal
