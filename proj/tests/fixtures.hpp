#pragma once

#include <string>
#include <vector>

#include "cafcon/cafcon.hpp"

namespace fixtures {

/// ({a1,a2,phi}, {(phi,a2)}) with cl(a1) = cl(a2) = a.
inline cafcon::Caf three_arg_caf() {
    return cafcon::Caf({"a1", "a2", "phi"}, {"a", "a", "phi"}, {{2, 1}});
}

/// {x1,x3,x4}, {-x3,-x4,-x2}, {-x1,-x3,x2}
inline cafcon::CnfFormula figure1_formula() {
    return cafcon::CnfFormula::from_ints(4, {{1, 3, 4}, {-3, -4, -2}, {-1, -3, 2}});
}

inline const char* figure1_dimacs = "p cnf 4 3\n1 3 4 0\n-3 -4 -2 0\n-1 -3 2 0\n";
inline const char* three_arg_document = "arg a1\narg a2\narg phi\nclaim a1 a\nclaim a2 a\nclaim phi phi\natt phi a2\n";

inline cafcon::Extension ext(const cafcon::Caf& caf, const std::vector<std::string>& names) {
    cafcon::Extension e(caf.n_args());
    for (const auto& n : names) e.set(*caf.find(n));
    return e;
}

inline cafcon::ClaimSet claims(const cafcon::Caf& caf, const std::vector<std::string>& labels) {
    cafcon::ClaimSet s(caf.n_claims());
    for (const auto& l : labels)
        for (cafcon::ClaimKey k = 0; k < caf.n_claims(); ++k)
            if (caf.claim_label(k) == l) s.set(k);
    return s;
}

/// Injective claim function: every argument claims its own name.
inline cafcon::Caf injective(const cafcon::Caf& caf) {
    std::vector<cafcon::Attack> atts(caf.af().attacks().begin(), caf.af().attacks().end());
    return cafcon::Caf(caf.names(), caf.names(), std::move(atts));
}

}  // namespace fixtures
