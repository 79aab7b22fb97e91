#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cafcon/cnf.hpp"

namespace cafcon {

/// Small complete DPLL solver: two-watched-literal unit propagation and
/// chronological backtracking. Branches on the lowest-index unassigned
/// variable, false first, so results are fully deterministic. No learning,
/// no restarts.
class DpllSolver {
public:
    explicit DpllSolver(const CnfFormula& f) : n_vars_(f.n_vars), value_(f.n_vars + 1, kUnassigned), watches_(2 * (f.n_vars + 1)) {
        for (const auto& c : f.clauses) {
            if (c.empty()) {
                trivially_unsat_ = true;
                continue;
            }
            std::vector<std::uint32_t> lits;
            lits.reserve(c.size());
            for (const auto& l : c) lits.push_back(code(l));
            if (lits.size() == 1) {
                units_.push_back(lits[0]);
                continue;
            }
            const auto idx = clauses_.size();
            watches_[lits[0]].push_back(idx);
            watches_[lits[1]].push_back(idx);
            clauses_.push_back(std::move(lits));
        }
    }

    std::optional<Assignment> solve() {
        if (trivially_unsat_) return std::nullopt;
        for (auto u : units_) {
            auto v = lit_value(u);
            if (v == kFalse) return std::nullopt;
            if (v == kUnassigned) assign(u);
        }
        std::uint32_t next_var = 1;
        while (true) {
            if (!propagate()) {
                while (!levels_.empty() && levels_.back().flipped) {
                    undo_to(levels_.back().trail_start);
                    levels_.pop_back();
                }
                if (levels_.empty()) return std::nullopt;
                auto& lv = levels_.back();
                undo_to(lv.trail_start);
                lv.flipped = true;
                lv.decision ^= 1U;
                assign(lv.decision);
                next_var = 1;
                continue;
            }
            while (next_var <= n_vars_ && value_[next_var] != kUnassigned) ++next_var;
            if (next_var > n_vars_) break;
            const std::uint32_t lit = 2 * next_var + 1;  // negative literal: try false first
            levels_.push_back({trail_.size(), lit, false});
            assign(lit);
        }
        Assignment m(n_vars_);
        for (std::size_t v = 1; v <= n_vars_; ++v) m.set(v, value_[v] == kTrue);
        return m;
    }

private:
    static constexpr std::int8_t kUnassigned = -1, kFalse = 0, kTrue = 1;

    struct Level {
        std::size_t trail_start;
        std::uint32_t decision;
        bool flipped;
    };

    // literal code: 2*var for x, 2*var+1 for not-x
    static std::uint32_t code(Literal l) { return 2 * l.var + (l.positive ? 0U : 1U); }

    std::int8_t lit_value(std::uint32_t lit) const {
        auto v = value_[lit >> 1];
        if (v == kUnassigned) return kUnassigned;
        return ((lit & 1U) == 0) == (v == kTrue) ? kTrue : kFalse;
    }

    void assign(std::uint32_t lit) {
        value_[lit >> 1] = (lit & 1U) ? kFalse : kTrue;
        trail_.push_back(lit);
    }

    void undo_to(std::size_t size) {
        while (trail_.size() > size) {
            value_[trail_.back() >> 1] = kUnassigned;
            trail_.pop_back();
        }
        qhead_ = std::min(qhead_, size);
    }

    bool propagate() {
        while (qhead_ < trail_.size()) {
            const std::uint32_t false_lit = trail_[qhead_++] ^ 1U;
            auto& ws = watches_[false_lit];
            std::size_t i = 0, j = 0;
            bool conflict = false;
            while (i < ws.size()) {
                const auto ci = ws[i++];
                auto& c = clauses_[ci];
                if (c[0] == false_lit) std::swap(c[0], c[1]);
                if (lit_value(c[0]) == kTrue) {
                    ws[j++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (lit_value(c[k]) != kFalse) {
                        std::swap(c[1], c[k]);
                        watches_[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = ci;
                if (lit_value(c[0]) == kFalse) {
                    conflict = true;
                    while (i < ws.size()) ws[j++] = ws[i++];
                    break;
                }
                assign(c[0]);
            }
            ws.resize(j);
            if (conflict) return false;
        }
        return true;
    }

    std::size_t n_vars_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<std::vector<std::uint32_t>> clauses_;
    std::vector<std::uint32_t> units_;
    std::vector<std::uint32_t> trail_;
    std::vector<Level> levels_;
    std::size_t qhead_ = 0;
    bool trivially_unsat_ = false;
};

inline std::optional<Assignment> solve_cnf(const CnfFormula& f) { return DpllSolver(f).solve(); }

}  // namespace cafcon
