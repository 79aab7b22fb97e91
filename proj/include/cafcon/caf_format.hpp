#pragma once

// Line-oriented CAF text format:
//
//   arg <name>              declare an argument (ids follow declaration order)
//   claim <name> <label>    assign the claim of a declared argument (exactly once)
//   att <name> <name>       attack between declared arguments
//   # ...                   comment (to end of line)
//
// Names and labels use [A-Za-z0-9_]. Blank lines are ignored, CRLF is accepted.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cafcon/cnf.hpp"
#include "cafcon/error.hpp"
#include "cafcon/model.hpp"

namespace cafcon {

inline bool is_format_name(std::string_view s) noexcept {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

/// Parses the CAF text format. Any error aborts the whole parse.
inline Caf parse_caf(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::size_t> declared_at;
    std::vector<std::optional<std::string>> claims;
    std::vector<Attack> attacks;
    std::unordered_map<std::string, ArgumentId> ids;

    auto lookup = [&](std::size_t lineno, std::string_view name) {
        auto it = ids.find(std::string(name));
        if (it == ids.end()) throw ParseError(lineno, "undeclared argument '" + std::string(name) + "'");
        return it->second;
    };
    auto check_name = [](std::size_t lineno, std::string_view name, const char* what) {
        if (!is_format_name(name))
            throw ParseError(lineno, std::string("invalid ") + what + " '" + std::string(name) + "'");
    };

    std::size_t lineno = 0;
    for (auto raw : detail::split_lines(text)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto toks = detail::split_ws(raw);
        if (toks.empty()) continue;
        const auto& d = toks[0];
        auto arity = [&](std::size_t n) {
            if (toks.size() != n)
                throw ParseError(lineno, "'" + std::string(d) + "' takes " + std::to_string(n - 1) + " operand(s)");
        };
        if (d == "arg") {
            arity(2);
            check_name(lineno, toks[1], "argument name");
            std::string name(toks[1]);
            if (ids.count(name)) throw ParseError(lineno, "duplicate argument '" + name + "'");
            ids.emplace(name, names.size());
            names.push_back(std::move(name));
            declared_at.push_back(lineno);
            claims.emplace_back();
        } else if (d == "claim") {
            arity(3);
            const auto a = lookup(lineno, toks[1]);
            check_name(lineno, toks[2], "claim label");
            if (claims[a]) throw ParseError(lineno, "second claim for argument '" + names[a] + "'");
            claims[a] = std::string(toks[2]);
        } else if (d == "att") {
            arity(3);
            attacks.push_back({lookup(lineno, toks[1]), lookup(lineno, toks[2])});
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(d) + "'");
        }
    }

    std::vector<std::string> labels;
    labels.reserve(claims.size());
    for (ArgumentId a = 0; a < claims.size(); ++a) {
        if (!claims[a]) throw ParseError(declared_at[a], "argument '" + names[a] + "' has no claim");
        labels.push_back(std::move(*claims[a]));
    }
    return Caf(std::move(names), labels, std::move(attacks));
}

/// Canonical document: args in id order, then claims, then attacks ordered
/// by (attacker id, target id). LF line endings.
inline std::string emit_caf(const Caf& caf) {
    std::string out;
    for (ArgumentId a = 0; a < caf.n_args(); ++a) out += "arg " + caf.name(a) + "\n";
    for (ArgumentId a = 0; a < caf.n_args(); ++a) out += "claim " + caf.name(a) + " " + caf.claim_label_of(a) + "\n";
    for (const auto& [from, to] : caf.af().attacks()) out += "att " + caf.name(from) + " " + caf.name(to) + "\n";
    return out;
}

/// "{a1,phi}": member names in id order.
inline std::string format_extension(const Caf& caf, const Extension& e) {
    std::string out = "{";
    e.for_each([&](ArgumentId a) {
        if (out.size() > 1) out += ',';
        out += caf.name(a);
    });
    return out + "}";
}

/// "{a,phi}": claim labels in interned-key order.
inline std::string format_claims(const Caf& caf, const ClaimSet& s) {
    std::string out = "{";
    s.for_each([&](ClaimKey k) {
        if (out.size() > 1) out += ',';
        out += caf.claim_label(k);
    });
    return out + "}";
}

}  // namespace cafcon
