#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cafcon/cnf.hpp"
#include "cafcon/dpll.hpp"
#include "cafcon/error.hpp"
#include "cafcon/model.hpp"
#include "cafcon/semantics.hpp"

namespace cafcon {

enum class WitnessVar { InE, InG, ClaimE, ClaimG, Strict };

inline const char* to_string(WitnessVar r) {
    switch (r) {
    case WitnessVar::InE: return "in-E";
    case WitnessVar::InG: return "in-G";
    case WitnessVar::ClaimE: return "claim-E";
    case WitnessVar::ClaimG: return "claim-G";
    case WitnessVar::Strict: return "strict";
    }
    return "?";
}

/// Propositional encoding of "there are naive E, G with cl(E) strictly
/// inside cl(G)". Its models are exactly the non-concurrence witnesses.
///
/// Variable layout for n arguments and k claims (1-based):
///   d_c  = 1 + c              c in cl(G) but not in cl(E)
///   cE_c = 1 + k + 2c         claim c in cl(E)
///   cG_c = 2 + k + 2c         claim c in cl(G)
///   e_a  = 1 + 3k + 2a        membership of a in E
///   g_a  = 2 + 3k + 2a        membership of a in G
/// The solver branches on the lowest index first, so it picks the
/// distinguishing claim before any argument, and decides E and G membership
/// of each argument side by side. Both keep refutations short.
struct WitnessEncoding {
    std::size_t n_args = 0;
    std::size_t n_claims = 0;
    CnfFormula cnf;

    std::uint32_t strict(ClaimKey c) const { return static_cast<std::uint32_t>(1 + c); }
    std::uint32_t claim_e(ClaimKey c) const { return static_cast<std::uint32_t>(1 + n_claims + 2 * c); }
    std::uint32_t claim_g(ClaimKey c) const { return static_cast<std::uint32_t>(2 + n_claims + 2 * c); }
    std::uint32_t in_e(ArgumentId a) const { return static_cast<std::uint32_t>(1 + 3 * n_claims + 2 * a); }
    std::uint32_t in_g(ArgumentId a) const { return static_cast<std::uint32_t>(2 + 3 * n_claims + 2 * a); }

    /// Role and argument/claim index of a variable.
    std::pair<WitnessVar, std::size_t> describe(std::uint32_t var) const {
        std::size_t i = var - 1;
        if (i < n_claims) return {WitnessVar::Strict, i};
        i -= n_claims;
        if (i < 2 * n_claims) return {i % 2 == 0 ? WitnessVar::ClaimE : WitnessVar::ClaimG, i / 2};
        i -= 2 * n_claims;
        return {i % 2 == 0 ? WitnessVar::InE : WitnessVar::InG, i / 2};
    }

    Witness decode(const Assignment& m) const {
        Witness w{Extension(n_args), Extension(n_args)};
        for (ArgumentId a = 0; a < n_args; ++a) {
            if (m.value(in_e(a))) w.smaller.set(a);
            if (m.value(in_g(a))) w.larger.set(a);
        }
        return w;
    }
};

inline WitnessEncoding encode_nonconcurrence(const Caf& caf) {
    WitnessEncoding enc;
    enc.n_args = caf.n_args();
    enc.n_claims = caf.n_claims();
    enc.cnf.n_vars = 2 * enc.n_args + 3 * enc.n_claims;
    auto& clauses = enc.cnf.clauses;
    auto pos = [](std::uint32_t v) { return Literal{v, true}; };
    auto neg = [](std::uint32_t v) { return Literal{v, false}; };
    const Af& af = caf.af();

    auto side = [&](auto member, auto claim) {
        for (const auto& [a, b] : af.attacks()) {
            if (a == b)
                clauses.push_back({neg(member(a))});
            else
                clauses.push_back({neg(member(a)), neg(member(b))});
        }
        for (ArgumentId a = 0; a < caf.n_args(); ++a) {
            if (af.self_attackers().test(a)) continue;
            Clause c{pos(member(a))};
            af.conflicts_of(a).for_each([&](ArgumentId b) { c.push_back(pos(member(b))); });
            clauses.push_back(std::move(c));
        }
        for (ClaimKey k = 0; k < caf.n_claims(); ++k) {
            Clause c{neg(claim(k))};
            caf.arguments_with_claim(k).for_each([&](ArgumentId a) { c.push_back(pos(member(a))); });
            clauses.push_back(std::move(c));
        }
        for (ArgumentId a = 0; a < caf.n_args(); ++a) clauses.push_back({neg(member(a)), pos(claim(caf.claim(a)))});
    };
    side([&](ArgumentId a) { return enc.in_e(a); }, [&](ClaimKey k) { return enc.claim_e(k); });
    side([&](ArgumentId a) { return enc.in_g(a); }, [&](ClaimKey k) { return enc.claim_g(k); });

    Clause some_strict;
    for (ClaimKey k = 0; k < caf.n_claims(); ++k) {
        clauses.push_back({neg(enc.claim_e(k)), pos(enc.claim_g(k))});
        clauses.push_back({neg(enc.strict(k)), pos(enc.claim_g(k))});
        clauses.push_back({neg(enc.strict(k)), neg(enc.claim_e(k))});
        some_strict.push_back(pos(enc.strict(k)));
    }
    clauses.push_back(std::move(some_strict));
    return enc;
}

inline std::optional<Assignment> solve_encoding(const WitnessEncoding& enc) { return solve_cnf(enc.cnf); }

/// Decides concurrence through the witness encoding. A decoded witness is
/// re-verified against the argument-level semantics before being returned.
inline ConcurrenceVerdict is_concurrent_sat(const Caf& caf) {
    const auto enc = encode_nonconcurrence(caf);
    const auto model = solve_encoding(enc);
    if (!model) return {};
    Witness w = enc.decode(*model);
    if (!verify_witness(caf, w)) throw InternalError("decoded witness failed verification");
    return {false, std::move(w)};
}

/// DIMACS text for the encoding, preceded by a comment block of the form
/// "c var <index> <role> <argument-or-claim>".
inline std::string export_encoding_dimacs(const WitnessEncoding& enc, const Caf& caf) {
    std::string out = "c non-concurrence witness encoding\n";
    out += "c arguments " + std::to_string(enc.n_args) + " claims " + std::to_string(enc.n_claims) + "\n";
    for (std::uint32_t v = 1; v <= enc.cnf.n_vars; ++v) {
        auto [role, idx] = enc.describe(v);
        const bool is_arg = role == WitnessVar::InE || role == WitnessVar::InG;
        out += "c var " + std::to_string(v) + " " + to_string(role) + " " +
               (is_arg ? caf.name(idx) : caf.claim_label(idx)) + "\n";
    }
    return out + emit_dimacs(enc.cnf);
}

}  // namespace cafcon
