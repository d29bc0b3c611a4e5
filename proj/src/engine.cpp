#include "fungal/engine.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "bitgrid.hpp"

namespace fungal {

// ---------------------------------------------------------------- rules and schedules

RuleSpec RuleSpec::custom(std::string id, std::vector<int> offsets, std::vector<State> h_table) {
    std::set<int> seen(offsets.begin(), offsets.end());
    if (seen.size() != offsets.size()) throw std::invalid_argument("rule offsets must be distinct");
    if (!seen.count(0)) throw std::invalid_argument("rule offsets must contain 0");
    if (h_table.size() != offsets.size()) throw std::invalid_argument("h table must cover sums 0..|N|-1");
    for (int o : offsets)
        if (o <= -64 || o >= 64) throw std::invalid_argument("rule offsets must lie in (-64, 64)");
    for (State v : h_table)
        if (v > 1) throw std::invalid_argument("h table entries must be 0 or 1");
    return RuleSpec{std::move(id), std::move(offsets), std::move(h_table)};
}

RuleSpec table_rule(int k) {
    if (k < 0 || k > 7) throw std::invalid_argument("table rules are f0..f7");
    return RuleSpec::custom("f" + std::to_string(k), {-1, 0, 1},
                            {State((k >> 2) & 1), State((k >> 1) & 1), State(k & 1)});
}

RuleSpec maj15() { return RuleSpec::custom("maj15", {-2, -1, 0, 1}, {0, 0, 0, 1}); }

RuleSpec RuleSpec::named(std::string_view id) {
    if (id == "maj15") return maj15();
    if (id.size() == 2 && id[0] == 'f' && id[1] >= '0' && id[1] <= '7') return table_rule(id[1] - '0');
    throw std::invalid_argument("unknown rule '" + std::string(id) + "'");
}

int RuleSpec::max_offset() const {
    int m = 0;
    for (int o : offsets) m = std::max(m, std::abs(o));
    return m;
}

bool RuleSpec::monotone() const { return std::is_sorted(h_table.begin(), h_table.end()); }

Schedule Schedule::parse(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("schedule word must be nonempty");
    Schedule s;
    for (char ch : word) {
        if (ch == 'H') s.word.push_back(Direction::H);
        else if (ch == 'V') s.word.push_back(Direction::V);
        else throw std::invalid_argument("schedule word must use only H and V");
    }
    return s;
}

std::string Schedule::str() const {
    std::string out;
    for (Direction d : word) out.push_back(d == Direction::H ? 'H' : 'V');
    return out;
}

void EngineStats::reset() {
    fixpoint_runs = 0;
    monotonicity_violations = 0;
    bound_violations = 0;
    max_steps_seen = 0;
}

EngineStats& engine_stats() {
    static EngineStats stats;
    return stats;
}

long convergence_bound(const Configuration& c, const Schedule& s) {
    return (long(c.rows()) * c.cols() + 1) * s.period();
}

namespace detail {

// ---------------------------------------------------------------- packed rows

BitGrid::BitGrid(const Configuration& c)
    : rows(c.rows()), cols(c.cols()), words((c.cols() + 63) / 64), bg(c.background()) {
    if (cols % 64) tail = (Word{1} << (cols % 64)) - 1;
    bits.assign(size_t(rows) * words, 0);
    const State* src = c.cells().data();
    for (int r = 0; r < rows; ++r, src += cols) {
        Word* w = row(r);
        for (int b = 0; b < words; ++b) {
            const int n = std::min(64, cols - 64 * b);
            const State* p = src + 64 * b;
            Word acc = 0;
            for (int i = 0; i < n; ++i) acc |= Word(p[i] & 1) << i;
            w[b] = acc;
        }
    }
}

Configuration BitGrid::to_config() const {
    std::vector<State> cells(size_t(rows) * cols);
    State* dst = cells.data();
    for (int r = 0; r < rows; ++r) {
        const Word* w = row(r);
        for (int col = 0; col < cols; ++col) *dst++ = State((w[col >> 6] >> (col & 63)) & 1);
    }
    return Configuration(rows, cols, bg, std::move(cells));
}

RulePlan::RulePlan(const RuleSpec& rule) : flip(rule.h_table.begin(), rule.h_table.end()) {
    for (int o : rule.offsets)
        if (o != 0) offsets.push_back(o);
    max_offset = rule.max_offset();
}

namespace {

// Word w of a row extended on both sides by background bits.
inline Word virtual_word(const BitGrid& g, const Word* row, long w) {
    const Word fill = g.bg ? ~Word{0} : 0;
    if (w < 0 || w >= g.words) return fill;
    if (w == g.words - 1) return row[w] | (fill & ~g.tail);
    return row[w];
}

// Bits of cells c+o for the 64 cells c of word w.
inline Word shifted_word(const BitGrid& g, const Word* row, long w, int o) {
    const long t = 64 * w + o;
    const long base = t >= 0 ? t / 64 : -((-t + 63) / 64);
    const int r = int(t - 64 * base);
    Word lo = virtual_word(g, row, base);
    if (r == 0) return lo;
    return (lo >> r) | (virtual_word(g, row, base + 1) << (64 - r));
}

// Applies the sum table to a word of state bits given the neighbor words.
inline Word combine(const RulePlan& plan, Word self, const Word* nb) {
    const int k = int(plan.offsets.size());
    Word ge[17];  // ge[j]: at least j neighbors are 1
    ge[0] = ~Word{0};
    for (int j = 1; j <= k; ++j) ge[j] = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j >= 1; --j) ge[j] |= ge[j - 1] & nb[i];
    Word flip = 0;
    for (int s = 0; s <= k; ++s) {
        if (!plan.flip[s]) continue;
        flip |= s == k ? ge[s] : ge[s] & ~ge[s + 1];
    }
    return self | flip;
}

inline bool finish_row(const BitGrid& g, const Word* in, Word* out) {
    out[g.words - 1] &= g.tail;
    bool changed = false;
    for (int w = 0; w < g.words; ++w) {
        if ((in[w] & ~out[w]) != 0) ++engine_stats().monotonicity_violations;
        changed |= in[w] != out[w];
    }
    return changed;
}

}  // namespace

bool step_row_h(const RulePlan& plan, const BitGrid& g, const Word* in, Word* out) {
    Word nb[16];
    const int k = int(plan.offsets.size());
    for (int w = 0; w < g.words; ++w) {
        for (int i = 0; i < k; ++i) nb[i] = shifted_word(g, in, w, plan.offsets[i]);
        out[w] = combine(plan, in[w], nb);
    }
    return finish_row(g, in, out);
}

bool step_row_v(const RulePlan& plan, const BitGrid& g, int r, Word* out, const Word* bg_row) {
    const int k = int(plan.offsets.size());
    const Word* src[16];
    for (int i = 0; i < k; ++i) {
        // Vertical offset o reads row r - o, so positive offsets look upward.
        const long rr = long(r) - plan.offsets[i];
        src[i] = rr >= 0 && rr < g.rows ? g.row(int(rr)) : bg_row;
    }
    const Word* in = g.row(r);
    Word nb[16];
    for (int w = 0; w < g.words; ++w) {
        for (int i = 0; i < k; ++i) nb[i] = src[i][w];
        out[w] = combine(plan, in[w], nb);
    }
    return finish_row(g, in, out);
}

}  // namespace detail

using detail::BitGrid;
using detail::RulePlan;
using detail::Word;

namespace {

void check_rule(const RuleSpec& rule) {
    if (rule.neighbor_count() > 15) throw std::invalid_argument("rules with more than 15 neighbors are unsupported");
}

// Full-frame update of g in place; returns true if anything changed.
bool apply_packed(BitGrid& g, const RulePlan& plan, Direction d, kernels::Exec exec) {
    std::vector<Word> next(g.bits.size());
    std::vector<Word> bg_row(size_t(g.words), g.bg ? ~Word{0} : 0);
    int changed = 0;
    const bool par = exec == kernels::Exec::parallel;
#pragma omp parallel for schedule(static) reduction(| : changed) if (par)
    for (int r = 0; r < g.rows; ++r) {
        Word* out = next.data() + size_t(r) * g.words;
        bool ch = d == Direction::H ? detail::step_row_h(plan, g, g.row(r), out)
                                    : detail::step_row_v(plan, g, r, out, bg_row.data());
        changed |= int(ch);
    }
    g.bits.swap(next);
    return changed != 0;
}

void note_run(long steps, long bound) {
    auto& st = engine_stats();
    ++st.fixpoint_runs;
    if (steps > bound) ++st.bound_violations;
    long prev = st.max_steps_seen.load();
    while (steps > prev && !st.max_steps_seen.compare_exchange_weak(prev, steps)) {}
}

}  // namespace

Configuration kernels::apply_direction(const Configuration& c, const RuleSpec& rule, Direction d, Exec exec) {
    check_rule(rule);
    BitGrid g(c);
    apply_packed(g, RulePlan(rule), d, exec);
    return g.to_config();
}

Configuration apply_direction(const Configuration& c, const RuleSpec& rule, Direction d) {
    const long cells = long(c.rows()) * c.cols();
    return kernels::apply_direction(c, rule, d, cells >= (1L << 16) ? kernels::Exec::parallel : kernels::Exec::serial);
}

Configuration step(const Configuration& c, const RuleSpec& rule, const Schedule& s, long t) {
    if (t < 1) throw std::invalid_argument("step index must be at least 1");
    return apply_direction(c, rule, s.at(t));
}

Trajectory run(const Configuration& c, const RuleSpec& rule, const Schedule& s, long steps) {
    if (steps < 0) throw std::invalid_argument("step count must be non-negative");
    Trajectory tr;
    tr.frames.reserve(size_t(steps) + 1);
    tr.frames.push_back(c);
    long last_change = 0;
    for (long t = 1; t <= steps; ++t) {
        tr.frames.push_back(step(tr.frames.back(), rule, s, t));
        if (!(tr.frames[size_t(t)] == tr.frames[size_t(t - 1)])) last_change = t;
        if (t - last_change >= s.period() && !tr.converged_at) tr.converged_at = last_change;
    }
    return tr;
}

FixpointResult run_to_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s,
                               std::optional<long> max_steps, std::vector<long>* flip_time) {
    check_rule(rule);
    const RulePlan plan(rule);
    BitGrid g(c);
    const int R = g.rows, W = g.words;
    std::vector<Word> bg_row(size_t(W), g.bg ? ~Word{0} : 0);
    if (flip_time) flip_time->assign(size_t(R) * g.cols, -1);

    // Worklists of rows whose inputs changed since they were last computed in each direction.
    std::vector<char> dirty_h(size_t(R), 1), dirty_v(size_t(R), 1);
    std::vector<int> list_h(static_cast<size_t>(R)), list_v(static_cast<size_t>(R));
    for (int r = 0; r < R; ++r) list_h[size_t(r)] = list_v[size_t(r)] = r;

    std::vector<int> todo, changed_rows;
    std::vector<Word> staged;
    const long bound = convergence_bound(c, s);
    long t = 0, last_change = 0;

    auto mark = [&](int r) {
        if (!dirty_h[size_t(r)]) { dirty_h[size_t(r)] = 1; list_h.push_back(r); }
        for (int o : rule.offsets) {
            const long x = long(r) + o;  // rows that read row r vertically
            if (x < 0 || x >= R || dirty_v[size_t(x)]) continue;
            dirty_v[size_t(x)] = 1;
            list_v.push_back(int(x));
        }
    };

    while (t - last_change < s.period()) {
        if (max_steps && t >= *max_steps) {
            note_run(t, bound);
            return {g.to_config(), last_change, false};
        }
        ++t;
        const Direction d = s.at(t);
        auto& list = d == Direction::H ? list_h : list_v;
        auto& dirty = d == Direction::H ? dirty_h : dirty_v;
        todo.swap(list);
        list.clear();
        for (int r : todo) dirty[size_t(r)] = 0;

        // Compute every dirty row from the old frame, then commit.
        staged.resize(todo.size() * size_t(W));
        changed_rows.clear();
        for (size_t i = 0; i < todo.size(); ++i) {
            const int r = todo[i];
            Word* out = staged.data() + i * W;
            bool ch = d == Direction::H ? detail::step_row_h(plan, g, g.row(r), out)
                                        : detail::step_row_v(plan, g, r, out, bg_row.data());
            if (ch) changed_rows.push_back(int(i));
        }
        for (int i : changed_rows) {
            const int r = todo[size_t(i)];
            Word* dst = g.row(r);
            const Word* src = staged.data() + size_t(i) * W;
            if (flip_time) {
                for (int w = 0; w < W; ++w) {
                    Word fresh = src[w] & ~dst[w];
                    while (fresh) {
                        int b = __builtin_ctzll(fresh);
                        fresh &= fresh - 1;
                        (*flip_time)[size_t(r) * g.cols + size_t(w) * 64 + b] = t;
                    }
                }
            }
            std::memcpy(dst, src, sizeof(Word) * W);
        }
        for (int i : changed_rows) mark(todo[size_t(i)]);
        if (!changed_rows.empty()) last_change = t;
        if (t > bound + s.period()) {
            ++engine_stats().bound_violations;
            throw std::logic_error("freezing dynamics exceeded the convergence bound");
        }
    }
    note_run(last_change, bound);
    return {g.to_config(), last_change, true};
}

FixpointResult kernels::run_to_fixpoint_dense(const Configuration& c, const RuleSpec& rule, const Schedule& s,
                                              Exec exec) {
    check_rule(rule);
    const RulePlan plan(rule);
    BitGrid g(c);
    long t = 0, last_change = 0;
    while (t - last_change < s.period()) {
        ++t;
        if (apply_packed(g, plan, s.at(t), exec)) last_change = t;
    }
    note_run(last_change, convergence_bound(c, s));
    return {g.to_config(), last_change, true};
}

// ---------------------------------------------------------------- scalar reference

Configuration reference::apply_direction(const Configuration& c, const RuleSpec& rule, Direction d) {
    Configuration out = c;
    for (int r = 0; r < c.rows(); ++r) {
        for (int col = 0; col < c.cols(); ++col) {
            if (c.at(r, col)) continue;
            int sum = 0;
            for (int o : rule.offsets) {
                if (o == 0) continue;
                sum += d == Direction::H ? c.get(r, long(col) + o) : c.get(long(r) - o, col);
            }
            out.set(r, col, rule.h_table[size_t(sum)]);
        }
    }
    return out;
}

FixpointResult reference::run_to_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s) {
    Configuration cur = c;
    long t = 0, last_change = 0;
    while (t - last_change < s.period()) {
        ++t;
        Configuration next = reference::apply_direction(cur, rule, s.at(t));
        if (!(next == cur)) last_change = t;
        cur = std::move(next);
    }
    return {cur, last_change, true};
}

}  // namespace fungal
