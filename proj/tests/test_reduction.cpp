#include <gtest/gtest.h>

#include <algorithm>

#include "cafcon/cafcon.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cafcon;
using fixtures::ext;

TEST(Reduce, Figure1Sizes) {
    const auto art = reduce_unsat(fixtures::figure1_formula());
    EXPECT_EQ(art.caf.n_args(), 14u);
    EXPECT_EQ(art.caf.af().attacks().size(), 21u);
    EXPECT_EQ(art.caf.attackers_of(*art.caf.find("c2")), ext(art.caf, {"nx3", "nx4", "nx2"}));
    EXPECT_TRUE(is_well_formed(art.caf));
}

TEST(Reduce, NoClauses) {
    const auto art = reduce_unsat(CnfFormula::from_ints(1, {}));
    EXPECT_EQ(art.caf.names(), (std::vector<std::string>{"x1", "nx1", "phi", "a1", "a2"}));
    EXPECT_EQ(art.caf.af().attacks().size(), 3u);
}

TEST(Reduce, RolesAndClaims) {
    const auto art = reduce_unsat(fixtures::figure1_formula());
    EXPECT_EQ(art.origins[art.positive(3)], (ArgOrigin{ArgRole::PositiveLiteral, 3}));
    EXPECT_EQ(art.origins[art.negative(2)], (ArgOrigin{ArgRole::NegativeLiteral, 2}));
    EXPECT_EQ(art.origins[art.clause(3)], (ArgOrigin{ArgRole::Clause, 3}));
    EXPECT_EQ(art.origins[art.formula()].role, ArgRole::Formula);
    EXPECT_EQ(art.caf.claim_label_of(art.aux1()), "a");
    EXPECT_EQ(art.caf.claim_label_of(art.aux2()), "a");
    EXPECT_EQ(art.caf.n_claims(), 13u);
    EXPECT_EQ(art.caf.name(art.negative(4)), "nx4");
    EXPECT_EQ(art.caf.claim_label_of(art.negative(4)), "nx4");
}

TEST(Reduce, RejectsTautologyWithIndex) {
    try {
        reduce_unsat(CnfFormula::from_ints(2, {{1}, {2, -2}}));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.clause_index(), 1u);
    }
    CnfFormula f = CnfFormula::from_ints(1, {{1}});
    f.clauses.push_back({});
    EXPECT_THROW(reduce_unsat(f), PreconditionError);
}

TEST(Verify, Figure1AllPass) {
    const auto f = fixtures::figure1_formula();
    const auto art = reduce_unsat(f);
    const auto rep = verify_reduction(art, f);
    EXPECT_TRUE(rep.satisfiable);
    EXPECT_EQ(rep.checks.size(), 6u);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;

    // The model shown with the construction: x1, x2, x3 true, x4 false.
    Assignment m(4);
    m.set(1, true);
    m.set(2, true);
    m.set(3, true);
    auto with_phi = art.literals_of(m);
    auto with_aux = with_phi;
    with_phi.set(art.formula());
    with_phi.set(art.aux1());
    with_aux.set(art.aux1());
    with_aux.set(art.aux2());
    EXPECT_EQ(with_phi, ext(art.caf, {"a1", "phi", "x1", "x2", "x3", "nx4"}));
    EXPECT_TRUE(is_naive(art.caf, with_phi));
    EXPECT_TRUE(is_naive(art.caf, with_aux));
}

TEST(Verify, UnsatBranch) {
    const auto f = CnfFormula::from_ints(1, {{1}, {-1}});
    const auto rep = verify_reduction(reduce_unsat(f), f);
    EXPECT_FALSE(rep.satisfiable);
    EXPECT_TRUE(rep.all_passed());
    EXPECT_TRUE(is_concurrent_brute(reduce_unsat(f).caf).concurrent);
}

TEST(Verify, SingleUnitClauseIsNotConcurrent) {
    const auto f = CnfFormula::from_ints(1, {{1}});
    const auto art = reduce_unsat(f);
    EXPECT_EQ(art.caf.n_args(), 6u);
    EXPECT_FALSE(oracle::concurrent(art.caf));
    EXPECT_FALSE(is_concurrent_brute(art.caf).concurrent);
    EXPECT_TRUE(verify_reduction(art, f).all_passed());
}

TEST(Verify, DetectsMismatchedArtifact) {
    const auto f = fixtures::figure1_formula();
    const auto other = reduce_unsat(CnfFormula::from_ints(4, {{1, 3, 4}, {-3, -4, -2}, {-1, -3, -2}}));
    EXPECT_FALSE(verify_reduction(other, f).checks[0].passed);
}

TEST(Verify, CapacityPropagates) {
    CnfFormula f;
    f.n_vars = 40;
    EXPECT_THROW(verify_reduction(reduce_unsat(f), f), CapacityError);
}

TEST(ReductionProperty, SizesWellFormedAndBiconditional) {
    Rng rng(42);
    for (int i = 0; i < 150; ++i) {
        const auto f = random_cnf(rng, 3, 5);
        const auto art = reduce_unsat(f);
        EXPECT_EQ(art.caf.n_args(), 2 * f.n_vars + f.clauses.size() + 3);
        EXPECT_EQ(art.caf.af().attacks().size(), f.literal_occurrences() + 2 * f.n_vars + f.clauses.size() + 1);
        EXPECT_TRUE(is_well_formed(art.caf));
        EXPECT_TRUE(art.caf.attackers_of(art.aux1()).none() && art.caf.attacked_by(art.aux1()).none());
        const bool sat = oracle::satisfiable(f.n_vars, oracle::to_ints(f));
        EXPECT_EQ(sat, !oracle::concurrent(art.caf)) << emit_dimacs(f);
        EXPECT_TRUE(verify_reduction(art, f).all_passed()) << emit_dimacs(f);
    }
}

// Above the enumeration cap only the SAT engine applies; check it against
// the exhaustive oracle on near-threshold random 3-CNFs.
TEST(ReductionProperty, SatEngineBeyondBruteCap) {
    Rng rng(606);
    int sat_count = 0;
    for (int i = 0; i < 40; ++i) {
        CnfFormula f;
        f.n_vars = 12 + static_cast<std::size_t>(rng.below(5));
        const std::size_t m = f.n_vars * 43 / 10;
        for (std::size_t c = 0; c < m; ++c) {
            Clause cl;
            while (cl.size() < 3) {
                const Literal l{static_cast<std::uint32_t>(1 + rng.below(f.n_vars)), rng.chance(0.5)};
                if (std::none_of(cl.begin(), cl.end(), [&](const Literal& x) { return x.var == l.var; }))
                    cl.push_back(l);
            }
            f.clauses.push_back(std::move(cl));
        }
        const auto art = reduce_unsat(f);
        ASSERT_GT(art.caf.n_args(), kDefaultMaxArgs);
        const bool sat = sat_oracle(f).has_value();
        sat_count += sat;
        EXPECT_EQ(sat, !is_concurrent_sat(art.caf).concurrent) << emit_dimacs(f);
    }
    EXPECT_GT(sat_count, 0);
    EXPECT_LT(sat_count, 40);
}
