#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cafcon/cnf.hpp"
#include "cafcon/error.hpp"
#include "cafcon/model.hpp"
#include "cafcon/semantics.hpp"

namespace cafcon {

enum class ArgRole { PositiveLiteral, NegativeLiteral, Clause, Formula, Aux1, Aux2 };

struct ArgOrigin {
    ArgRole role;
    /// Variable number for literal arguments, clause number (1-based) for
    /// clause arguments, 0 otherwise.
    std::size_t index = 0;

    friend bool operator==(const ArgOrigin&, const ArgOrigin&) = default;
};

/// A CAF built from a CNF, with the origin of every argument.
///
/// Argument order: x1, nx1, x2, nx2, ..., c1, ..., cm, phi, a1, a2.
struct ReductionArtifact {
    Caf caf;
    std::vector<ArgOrigin> origins;
    std::size_t n_vars = 0;
    std::size_t n_clauses = 0;

    ArgumentId positive(std::size_t var) const { return 2 * (var - 1); }
    ArgumentId negative(std::size_t var) const { return 2 * (var - 1) + 1; }
    ArgumentId literal(Literal l) const { return l.positive ? positive(l.var) : negative(l.var); }
    ArgumentId clause(std::size_t number) const { return 2 * n_vars + number - 1; }
    ArgumentId formula() const { return 2 * n_vars + n_clauses; }
    ArgumentId aux1() const { return formula() + 1; }
    ArgumentId aux2() const { return formula() + 2; }

    /// Literal arguments made true by m: x if m(x), nx otherwise.
    Extension literals_of(const Assignment& m) const {
        Extension e(caf.n_args());
        for (std::size_t v = 1; v <= n_vars; ++v) e.set(m.value(v) ? positive(v) : negative(v));
        return e;
    }
};

/// Builds the well-formed CAF whose concurrence is equivalent to the
/// unsatisfiability of f:
///   arguments  x, nx per variable; c<i> per clause; phi; a1, a2
///   attacks    x -> c<i> if x in clause i, nx -> c<i> if not-x in clause i,
///              x <-> nx, c<i> -> phi, phi -> a2
///   claims     each argument's own name, except cl(a1) = cl(a2) = "a"
/// Throws PreconditionError on a tautological or empty clause.
inline ReductionArtifact reduce_unsat(const CnfFormula& f) {
    if (auto taut = has_tautological_clause(f))
        throw PreconditionError(*taut, "clause c" + std::to_string(*taut + 1) + " (index " + std::to_string(*taut) +
                                           ") is tautological");
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        if (f.clauses[i].empty())
            throw PreconditionError(i, "clause c" + std::to_string(i + 1) + " (index " + std::to_string(i) + ") is empty");

    ReductionArtifact art;
    art.n_vars = f.n_vars;
    art.n_clauses = f.clauses.size();

    std::vector<std::string> names;
    std::vector<std::string> claims;
    auto add = [&](std::string name, std::string claim, ArgOrigin origin) {
        names.push_back(std::move(name));
        claims.push_back(std::move(claim));
        art.origins.push_back(origin);
    };
    for (std::size_t v = 1; v <= f.n_vars; ++v) {
        const auto s = std::to_string(v);
        add("x" + s, "x" + s, {ArgRole::PositiveLiteral, v});
        add("nx" + s, "nx" + s, {ArgRole::NegativeLiteral, v});
    }
    for (std::size_t i = 1; i <= f.clauses.size(); ++i) {
        const auto s = "c" + std::to_string(i);
        add(s, s, {ArgRole::Clause, i});
    }
    add("phi", "phi", {ArgRole::Formula, 0});
    add("a1", "a", {ArgRole::Aux1, 0});
    add("a2", "a", {ArgRole::Aux2, 0});

    std::vector<Attack> attacks;
    attacks.reserve(f.literal_occurrences() + 2 * f.n_vars + f.clauses.size() + 1);
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (const auto& l : f.clauses[i]) attacks.push_back({art.literal(l), art.clause(i + 1)});
    for (std::size_t v = 1; v <= f.n_vars; ++v) {
        attacks.push_back({art.positive(v), art.negative(v)});
        attacks.push_back({art.negative(v), art.positive(v)});
    }
    for (std::size_t i = 1; i <= f.clauses.size(); ++i) attacks.push_back({art.clause(i), art.formula()});
    attacks.push_back({art.formula(), art.aux2()});

    art.caf = Caf(std::move(names), claims, std::move(attacks));
    return art;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ReductionReport {
    bool satisfiable = false;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Re-derives the facts the hardness argument relies on for one formula:
/// construction sizes, well-formedness, sat(f) iff not concurrent, the two
/// model-induced naive extensions, a1 in every naive extension, and
/// literal consistency of naive extensions that contain phi.
inline ReductionReport verify_reduction(const ReductionArtifact& art, const CnfFormula& f,
                                        std::size_t max_args = kDefaultMaxArgs,
                                        std::size_t max_vars = kDefaultOracleMaxVars) {
    check_capacity(art.caf.n_args(), max_args);
    ReductionReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const std::size_t want_args = 2 * f.n_vars + f.clauses.size() + 3;
    const std::size_t want_attacks = f.literal_occurrences() + 2 * f.n_vars + f.clauses.size() + 1;
    const bool sizes_ok = art.caf.n_args() == want_args && art.caf.af().attacks().size() == want_attacks &&
                          art.caf == reduce_unsat(f).caf;
    add("construction", sizes_ok,
        std::to_string(art.caf.n_args()) + " arguments (expected " + std::to_string(want_args) + "), " +
            std::to_string(art.caf.af().attacks().size()) + " attacks (expected " + std::to_string(want_attacks) +
            ")");

    const auto wf = is_well_formed(art.caf);
    add("well-formed", wf.well_formed,
        wf ? std::string{} : "arguments " + art.caf.name(wf.witness->first) + " and " + art.caf.name(wf.witness->second));

    const auto model = sat_oracle(f, max_vars);
    rep.satisfiable = model.has_value();
    const auto verdict = is_concurrent_brute(art.caf, max_args);
    add("sat-iff-not-concurrent", rep.satisfiable == !verdict.concurrent,
        std::string(rep.satisfiable ? "satisfiable" : "unsatisfiable") + ", " +
            (verdict.concurrent ? "concurrent" : "not concurrent"));

    if (model) {
        Extension with_phi = art.literals_of(*model);
        Extension with_aux = with_phi;
        with_phi.set(art.formula());
        with_phi.set(art.aux1());
        with_aux.set(art.aux1());
        with_aux.set(art.aux2());
        const bool ok = is_naive(art.caf, with_phi) && is_naive(art.caf, with_aux);
        add("model-extensions-naive", ok, ok ? "" : "an extension induced by the oracle model is not naive");
    } else {
        add("model-extensions-naive", true, "n/a (unsatisfiable)");
    }

    const auto exts = naive_extensions(art.caf, max_args);
    bool a1_everywhere = true;
    bool consistent = true;
    for (const auto& e : exts) {
        if (!e.test(art.aux1())) a1_everywhere = false;
        if (!e.test(art.formula())) continue;
        for (std::size_t v = 1; v <= art.n_vars; ++v)
            if (e.test(art.positive(v)) == e.test(art.negative(v))) consistent = false;
    }
    add("a1-in-every-naive", a1_everywhere, std::to_string(exts.size()) + " naive extensions");
    add("phi-extensions-literal-consistent", consistent);
    return rep;
}

}  // namespace cafcon
