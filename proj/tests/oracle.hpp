#pragma once

// Brute-force reference implementations used as ground truth by the tests.
// Everything here works from the raw attack list and subset masks and never
// calls into the library's semantics, solver or bitset code.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cafcon/model.hpp"

namespace oracle {

using Mask = std::uint64_t;
using LabelSet = std::set<std::string>;
using Family = std::set<LabelSet>;

inline bool conflict_free(const cafcon::Caf& caf, Mask s) {
    for (const auto& at : caf.af().attacks())
        if (((s >> at.from) & 1U) && ((s >> at.to) & 1U)) return false;
    return true;
}

/// All subsets of A, filtered by the definition of naive: conflict-free and
/// no conflict-free strict superset. (cf is closed under subsets, so adding
/// one argument at a time is enough to detect a superset.)
inline std::vector<Mask> naive(const cafcon::Caf& caf) {
    const std::size_t n = caf.n_args();
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (!conflict_free(caf, s)) continue;
        bool maximal = true;
        for (std::size_t a = 0; a < n && maximal; ++a)
            if (!((s >> a) & 1U) && conflict_free(caf, s | (Mask{1} << a))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

inline LabelSet labels(const cafcon::Caf& caf, Mask s) {
    LabelSet out;
    for (std::size_t a = 0; a < caf.n_args(); ++a)
        if ((s >> a) & 1U) out.insert(caf.claim_label_of(a));
    return out;
}

inline bool strict_subset(const LabelSet& x, const LabelSet& y) {
    if (x.size() >= y.size()) return false;
    for (const auto& l : x)
        if (!y.count(l)) return false;
    return true;
}

inline Family inherited(const cafcon::Caf& caf) {
    Family out;
    for (auto s : naive(caf)) out.insert(labels(caf, s));
    return out;
}

/// Maximal elements of cf_c = { cl(E) | E conflict-free }, built from every subset.
inline Family claim_level(const cafcon::Caf& caf) {
    Family cfc;
    for (Mask s = 0; s < (Mask{1} << caf.n_args()); ++s)
        if (conflict_free(caf, s)) cfc.insert(labels(caf, s));
    Family out;
    for (const auto& x : cfc) {
        bool maximal = true;
        for (const auto& y : cfc)
            if (strict_subset(x, y)) maximal = false;
        if (maximal) out.insert(x);
    }
    return out;
}

inline bool concurrent(const cafcon::Caf& caf) { return inherited(caf) == claim_level(caf); }

/// Same-claim arguments attack the same targets, checked on the attack list.
inline bool well_formed(const cafcon::Caf& caf) {
    const std::size_t n = caf.n_args();
    auto targets = [&](std::size_t a) {
        std::set<std::size_t> t;
        for (const auto& at : caf.af().attacks())
            if (at.from == a) t.insert(at.to);
        return t;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (caf.claim_label_of(a) == caf.claim_label_of(b) && targets(a) != targets(b)) return false;
    return true;
}

/// Truth-table satisfiability over DIMACS-style integer clauses.
inline bool satisfiable(std::size_t n_vars, const std::vector<std::vector<long long>>& clauses) {
    for (Mask m = 0; m < (Mask{1} << n_vars); ++m) {
        bool all = true;
        for (const auto& c : clauses) {
            bool any = false;
            for (auto l : c) {
                const bool v = (m >> ((l < 0 ? -l : l) - 1)) & 1U;
                if ((l > 0) == v) any = true;
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

template <typename Formula>
std::vector<std::vector<long long>> to_ints(const Formula& f) {
    std::vector<std::vector<long long>> out;
    for (const auto& c : f.clauses) {
        std::vector<long long> cl;
        for (const auto& l : c) cl.push_back(l.to_dimacs());
        out.push_back(std::move(cl));
    }
    return out;
}

}  // namespace oracle
