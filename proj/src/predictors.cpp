#include "fungal/predictors.hpp"

#include <algorithm>

namespace fungal {

namespace {

// Index k of a triple rule f_k, or -1 if the rule is not of that family.
int table_index(const RuleSpec& rule) {
    std::vector<int> offs = rule.offsets;
    std::sort(offs.begin(), offs.end());
    if (offs != std::vector<int>{-1, 0, 1}) return -1;
    return rule.h_table[0] * 4 + rule.h_table[1] * 2 + rule.h_table[2];
}

void require(const PredictionInstance& inst, int k) {
    if (!inst.config.contains(inst.target)) throw std::invalid_argument("prediction target lies outside the rectangle");
    if (table_index(inst.rule) != k) throw UnsupportedError("decider called with the wrong rule");
    if (!(inst.schedule == Schedule::hv())) throw UnsupportedError("per-rule deciders assume the HV schedule");
}

bool in_zero_block(const Configuration& c, long r, long col) {
    for (long dr = -1; dr <= 0; ++dr) {
        for (long dc = -1; dc <= 0; ++dc) {
            const long r0 = r + dr, c0 = col + dc;
            if (!c.contains(r0, c0) || !c.contains(r0 + 1, c0 + 1)) continue;
            if (!c.at(int(r0), int(c0)) && !c.at(int(r0), int(c0 + 1)) && !c.at(int(r0 + 1), int(c0)) &&
                !c.at(int(r0 + 1), int(c0 + 1)))
                return true;
        }
    }
    return false;
}

// H then V on a padded view; returns the padded F^2.
Configuration two_sub_steps(const Configuration& c, const RuleSpec& rule, int margin) {
    Configuration p = c.padded(margin);
    p = apply_direction(p, rule, Direction::H);
    return apply_direction(p, rule, Direction::V);
}

}  // namespace

bool predict_f3(const PredictionInstance& inst) {
    require(inst, 3);
    // f3 is OR of the two neighbors: any 1 (including a background of 1s) floods every 0.
    const Configuration& c = inst.config;
    if (c.get(inst.target)) return false;
    return c.background() == 1 || c.count_ones() > 0;
}

bool predict_two_step(const PredictionInstance& inst) {
    const int k = table_index(inst.rule);
    if (k != 4 && k != 6) throw UnsupportedError("two-step decider handles f4 and f6 only");
    require(inst, k);
    // The dynamics is stable from F^2 on; two sub-steps need a margin of 2 to see the true background.
    const int m = 2;
    const Configuration f2 = two_sub_steps(inst.config, inst.rule, m);
    return f2.at(int(inst.target.row) + m, int(inst.target.col) + m) != inst.config.get(inst.target);
}

bool predict_f5(const PredictionInstance& inst) {
    require(inst, 5);
    if (inst.config.get(inst.target)) return false;
    const int m = 3;
    const Configuration f2 = two_sub_steps(inst.config, inst.rule, m);
    const long r = inst.target.row + m, col = inst.target.col + m;
    if (f2.at(int(r), int(col))) return true;
    // After two sub-steps the 0-cells form staircases and 2x2 blocks; only the blocks survive.
    return !in_zero_block(f2, r, col);
}

bool predict_f1(const PredictionInstance& inst) {
    require(inst, 1);
    if (inst.config.get(inst.target)) return false;
    return !detect_alliance_f1(inst).first;
}

bool predict(const PredictionInstance& inst, Method method) {
    if (!inst.config.contains(inst.target)) throw std::invalid_argument("prediction target lies outside the rectangle");
    if (method == Method::oracle) return oracle_predict(inst).answer;

    const int k = table_index(inst.rule);
    if (k < 0) throw UnsupportedError("automatic prediction supports rules f0..f7 only");
    if (!(inst.schedule == Schedule::hv())) throw UnsupportedError("automatic prediction requires the HV schedule");
    switch (k) {
        case 0: return false;                      // identity
        case 7: return inst.config.get(inst.target) == 0;  // every 0 flips at once
        case 1: return predict_f1(inst);
        case 3: return predict_f3(inst);
        case 4:
        case 6: return predict_two_step(inst);
        case 5: return predict_f5(inst);
        default: return oracle_predict(inst).answer;  // f2 has no known efficient characterization
    }
}

State f2_prime_local(const std::array<std::array<State, 3>, 3>& p) {
    // f2 flips a 0 exactly when one of its two neighbors is 1.
    State col[3];
    for (int i = 0; i < 3; ++i) col[i] = p[i][1] ? 1 : State((p[i][0] + p[i][2]) == 1);
    if (col[1]) return 1;
    return State((col[0] + col[2]) == 1);
}

}  // namespace fungal
