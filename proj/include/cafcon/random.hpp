#pragma once

// Seeded instance generators.
//
// The bit stream is std::mt19937_64 (fully specified by the standard), and
// every derived value is computed here rather than through <random>
// distributions, whose output is implementation-defined. A seed therefore
// yields the same instance on every platform.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cafcon/cnf.hpp"
#include "cafcon/model.hpp"

namespace cafcon {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Random CAF with 0..max_args arguments named a0, a1, ... and claims drawn
/// from k0..k<c-1>, where c is itself drawn from 1..min(max_claims, n).
/// Attack density is drawn per instance from [0, 0.6), self-attack rate
/// from [0, 0.15).
inline Caf random_caf(Rng& rng, std::size_t max_args, std::size_t max_claims) {
    const std::size_t n = static_cast<std::size_t>(rng.below(max_args + 1));
    const std::size_t k = n == 0 ? 0 : 1 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(1, std::min(max_claims, n))));
    const double density = rng.unit() * 0.6;
    const double self_rate = rng.unit() * 0.15;

    std::vector<std::string> names, claims;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("a" + std::to_string(a));
        claims.push_back("k" + std::to_string(rng.below(k)));
    }
    std::vector<Attack> attacks;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rng.chance(a == b ? self_rate : density)) attacks.push_back({a, b});
    return Caf(std::move(names), claims, std::move(attacks));
}

/// Random CNF with 1..max_vars variables and 0..max_clauses clauses of 1..3
/// distinct variables each, so no clause is tautological or empty.
inline CnfFormula random_cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses) {
    CnfFormula f;
    f.n_vars = 1 + static_cast<std::size_t>(rng.below(max_vars));
    const std::size_t m = static_cast<std::size_t>(rng.below(max_clauses + 1));
    std::vector<std::uint32_t> vars(f.n_vars);
    for (std::size_t i = 0; i < f.n_vars; ++i) vars[i] = static_cast<std::uint32_t>(i + 1);
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t width = 1 + static_cast<std::size_t>(rng.below(std::min<std::size_t>(3, f.n_vars)));
        for (std::size_t i = 0; i < width; ++i)
            std::swap(vars[i], vars[i + static_cast<std::size_t>(rng.below(f.n_vars - i))]);
        Clause cl;
        for (std::size_t i = 0; i < width; ++i) cl.push_back(Literal{vars[i], rng.chance(0.5)});
        f.clauses.push_back(std::move(cl));
    }
    return f;
}

}  // namespace cafcon
