#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cafcon/model.hpp"
#include "cafcon/random.hpp"
#include "cafcon/sat_concurrence.hpp"
#include "cafcon/semantics.hpp"

namespace cafcon {

struct FuzzOptions {
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t max_args = 10;
    std::size_t max_claims = 6;
    unsigned jobs = 1;
};

struct FuzzFailure {
    std::size_t instance = 0;
    std::uint64_t instance_seed = 0;
    std::string invariant;
    std::string detail;
};

struct FuzzReport {
    std::size_t instances = 0;
    std::size_t concurrent = 0;
    std::vector<FuzzFailure> failures;  // ordered by instance
};

/// Instance i of a run with seed s is generated from seed s + i, so any
/// single instance can be replayed as a run of count 1.
inline Caf fuzz_instance(std::uint64_t instance_seed, std::size_t max_args, std::size_t max_claims) {
    Rng rng(instance_seed);
    return random_caf(rng, max_args, max_claims);
}

struct InvariantViolation {
    std::string invariant;
    std::string detail;
};

/// Cross-checks the semantics and both concurrence engines on one CAF.
/// Sets `concurrent` to the agreed verdict when no violation is found.
inline std::optional<InvariantViolation> check_invariants(const Caf& caf, bool* concurrent = nullptr) {
    const auto exts = naive_extensions(caf, caf.n_args());
    for (std::size_t i = 0; i < exts.size(); ++i) {
        if (!is_naive(caf, exts[i])) return InvariantViolation{"naive", "enumerated set is not naive"};
        for (std::size_t j = 0; j < exts.size(); ++j)
            if (i != j && exts[i].is_subset_of(exts[j])) return InvariantViolation{"antichain", "nested naive extensions"};
    }

    const auto inherited = inherited_naive(caf, caf.n_args());
    const auto claim_level = claim_level_naive(caf, caf.n_args());
    for (const auto& s : claim_level)
        if (!std::binary_search(inherited.begin(), inherited.end(), s))
            return InvariantViolation{"inclusion", "cl-naive member missing from i-naive"};

    const bool incomparable = is_incomparable(inherited).incomparable;
    if (incomparable != (inherited == claim_level))
        return InvariantViolation{"incomparability-equivalence",
                                  std::string("incomparable=") + (incomparable ? "true" : "false") +
                                      " but families " + (inherited == claim_level ? "equal" : "differ")};

    const auto brute = is_concurrent_brute(caf, caf.n_args());
    const auto sat = is_concurrent_sat(caf);
    if (brute.concurrent != sat.concurrent)
        return InvariantViolation{"engine-agreement", std::string("brute says ") +
                                                          (brute.concurrent ? "concurrent" : "not-concurrent") +
                                                          ", sat says " + (sat.concurrent ? "concurrent" : "not-concurrent")};
    if (brute.concurrent != incomparable)
        return InvariantViolation{"engine-agreement", "brute verdict disagrees with incomparability"};
    for (const auto* v : {&brute, &sat})
        if (v->witness && !verify_witness(caf, *v->witness))
            return InvariantViolation{"witness", "returned witness does not verify"};
    if (concurrent) *concurrent = brute.concurrent;
    return std::nullopt;
}

inline FuzzReport run_fuzz(const FuzzOptions& opt) {
    struct Slot {
        std::optional<InvariantViolation> violation;
        bool concurrent = false;
    };
    std::vector<Slot> slots(opt.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < opt.count; i = next++) {
            const Caf caf = fuzz_instance(opt.seed + i, opt.max_args, opt.max_claims);
            try {
                slots[i].violation = check_invariants(caf, &slots[i].concurrent);
            } catch (const Error& e) {
                slots[i].violation = InvariantViolation{"exception", e.what()};
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::max<std::size_t>(1, opt.count))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    FuzzReport rep;
    rep.instances = opt.count;
    for (std::size_t i = 0; i < opt.count; ++i) {
        if (slots[i].violation)
            rep.failures.push_back({i, opt.seed + i, slots[i].violation->invariant, slots[i].violation->detail});
        else if (slots[i].concurrent)
            ++rep.concurrent;
    }
    return rep;
}

}  // namespace cafcon
