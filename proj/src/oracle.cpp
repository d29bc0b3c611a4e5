#include <optional>

#include "fungal/engine.hpp"

namespace fungal {

OracleResult OracleFrame::at(CellRef x) const {
    const long t = flip_time[size_t(x.row) * initial.cols() + x.col];
    if (t < 0) return {false, std::nullopt};
    return {true, t};
}

namespace {

struct PaddedRun {
    OracleFrame frame;
    bool ring_touched = false;
};

PaddedRun simulate_padded(const Configuration& c, const RuleSpec& rule, const Schedule& s, int margin) {
    const Configuration p = c.padded(margin);
    std::vector<long> ft;
    FixpointResult res = run_to_fixpoint(p, rule, s, std::nullopt, &ft);

    PaddedRun out{OracleFrame{c, c, std::vector<long>(size_t(c.rows()) * c.cols(), -1), margin, false}, false};
    for (int r = 0; r < p.rows(); ++r) {
        for (int col = 0; col < p.cols(); ++col) {
            const long t = ft[size_t(r) * p.cols() + col];
            const int ir = r - margin, ic = col - margin;
            if (!c.contains(ir, ic)) {
                out.ring_touched |= t >= 0;
                continue;
            }
            out.frame.final.set(ir, ic, res.config.at(r, col));
            out.frame.flip_time[size_t(ir) * c.cols() + ic] = t;
        }
    }
    return out;
}

bool agree(const OracleFrame& a, const OracleFrame& b, const std::optional<CellRef>& target) {
    if (target) return a.final.get(*target) == b.final.get(*target);
    return a.final == b.final;
}

OracleFrame oracle_impl(const Configuration& c, const RuleSpec& rule, const Schedule& s,
                        const std::optional<CellRef>& target) {
    // Exactness certificate: if a background cell surrounded by background stays put, and the padding
    // ring never leaves the background, cells beyond the padding never change either, so the padded run
    // equals the infinite one. With background 1 this holds with no padding at all (1s are frozen).
    const bool background_stable = c.background() == 1 || rule.h_table[0] == 0;
    if (background_stable) {
        PaddedRun first = simulate_padded(c, rule, s, c.background() == 1 ? 0 : rule.max_offset());
        if (!first.ring_touched) {
            first.frame.certified = true;
            return first.frame;
        }
    }

    // Margin escalation: accept once two consecutive margins agree.
    const long m0 = s.period() * std::max(rule.max_offset(), 1) * (long(c.rows()) + c.cols());
    if (m0 > (1L << 14)) throw InconclusiveError("padding escalation would exceed memory limits");
    PaddedRun prev = simulate_padded(c, rule, s, int(m0));
    for (int k = 1; k <= 3; ++k) {
        PaddedRun cur = simulate_padded(c, rule, s, int(m0 << k));
        if (agree(prev.frame, cur.frame, target)) return cur.frame;
        prev = std::move(cur);
    }
    throw InconclusiveError("oracle inconclusive: padded runs disagree after escalation");
}

}  // namespace

OracleFrame oracle_fixpoint(const Configuration& c, const RuleSpec& rule, const Schedule& s) {
    return oracle_impl(c, rule, s, std::nullopt);
}

OracleResult oracle_predict(const PredictionInstance& inst) {
    if (!inst.config.contains(inst.target)) throw std::invalid_argument("prediction target lies outside the rectangle");
    return oracle_impl(inst.config, inst.rule, inst.schedule, inst.target).at(inst.target);
}

}  // namespace fungal
