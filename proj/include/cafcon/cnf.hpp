#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cafcon/error.hpp"

namespace cafcon {

struct Literal {
    std::uint32_t var = 0;  // >= 1
    bool positive = true;

    static Literal from_dimacs(long long v) {
        return Literal{static_cast<std::uint32_t>(v < 0 ? -v : v), v > 0};
    }
    long long to_dimacs() const { return positive ? static_cast<long long>(var) : -static_cast<long long>(var); }
    Literal operator~() const { return Literal{var, !positive}; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Clause list over variables 1..n_vars. Clause order is significant: the
/// reduction names argument c<i+1> after clauses[i].
struct CnfFormula {
    std::size_t n_vars = 0;
    std::vector<Clause> clauses;

    /// Builds a formula from DIMACS-style signed literals. Duplicate literals
    /// inside a clause are dropped (first occurrence kept).
    static CnfFormula from_ints(std::size_t n_vars, std::initializer_list<std::initializer_list<long long>> clauses) {
        CnfFormula f;
        f.n_vars = n_vars;
        for (const auto& c : clauses) {
            Clause cl;
            for (long long v : c) {
                if (v == 0 || static_cast<std::size_t>(std::llabs(v)) > n_vars)
                    throw StructuralError("literal " + std::to_string(v) + " out of range");
                push_unique(cl, Literal::from_dimacs(v));
            }
            f.clauses.push_back(std::move(cl));
        }
        return f;
    }

    static void push_unique(Clause& c, Literal l) {
        for (const auto& x : c)
            if (x == l) return;
        c.push_back(l);
    }

    std::size_t literal_occurrences() const {
        std::size_t n = 0;
        for (const auto& c : clauses) n += c.size();
        return n;
    }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Total truth assignment over 1..n_vars.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n_vars) : values_(n_vars + 1, false) {}

    std::size_t n_vars() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
    bool value(std::size_t var) const { return values_.at(var); }
    void set(std::size_t var, bool v) { values_.at(var) = v; }
    bool satisfies(Literal l) const { return value(l.var) == l.positive; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<bool> values_;
};

inline bool satisfies(const Assignment& m, const Clause& c) {
    for (const auto& l : c)
        if (m.satisfies(l)) return true;
    return false;
}

inline bool satisfies(const Assignment& m, const CnfFormula& f) {
    for (const auto& c : f.clauses)
        if (!satisfies(m, c)) return false;
    return true;
}

/// Index of the first clause containing both x and not-x, if any.
inline std::optional<std::size_t> has_tautological_clause(const CnfFormula& f) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k)
                if (c[j].var == c[k].var && c[j].positive != c[k].positive) return i;
    }
    return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < s.size()) {
        while (i < s.size() && is_ws(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_ws(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Splits on '\n'; a trailing '\r' stays on the line and is treated as whitespace.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view tok) {
    Int v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

}  // namespace detail

/// Parses DIMACS CNF. Accepts 'c' comments, one "p cnf V C" header, and
/// 0-terminated clauses that may span lines. A line starting with '%'
/// ends the input (SATLIB convention). LF and CRLF are both accepted.
inline CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    std::size_t header_line = 0;
    std::size_t declared_clauses = 0;
    Clause current;
    std::size_t clause_start_line = 0;

    auto lines = detail::split_lines(text);
    std::size_t lineno = 0;
    for (auto raw : lines) {
        ++lineno;
        auto line = detail::trim(raw);
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == '%') break;
        if (line[0] == 'p') {
            if (have_header) throw ParseError(lineno, "duplicate problem line (first at line " + std::to_string(header_line) + ")");
            auto toks = detail::split_ws(line);
            if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf")
                throw ParseError(lineno, "malformed problem line, expected 'p cnf <vars> <clauses>'");
            auto nv = detail::parse_int<std::size_t>(toks[2]);
            auto nc = detail::parse_int<std::size_t>(toks[3]);
            if (!nv || !nc) throw ParseError(lineno, "malformed counts in problem line");
            f.n_vars = *nv;
            declared_clauses = *nc;
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
        for (auto tok : detail::split_ws(line)) {
            auto v = detail::parse_int<long long>(tok);
            if (!v) throw ParseError(lineno, "invalid literal '" + std::string(tok) + "'");
            if (*v == 0) {
                if (current.empty()) throw ParseError(lineno, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<unsigned long long>(std::llabs(*v)) > f.n_vars)
                throw ParseError(lineno, "literal " + std::to_string(*v) + " out of range (vars = " +
                                             std::to_string(f.n_vars) + ")");
            if (current.empty()) clause_start_line = lineno;
            CnfFormula::push_unique(current, Literal::from_dimacs(*v));
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(clause_start_line, "clause not terminated by 0");
    if (f.clauses.size() != declared_clauses)
        throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) + " clauses but " +
                                          std::to_string(f.clauses.size()) + " were read");
    return f;
}

inline std::string emit_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.n_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& c : f.clauses) {
        for (const auto& l : c) {
            out += std::to_string(l.to_dimacs());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

inline constexpr std::size_t kDefaultOracleMaxVars = 24;

/// Exhaustive satisfiability check. Assignments are visited in
/// lexicographic order over (x1, ..., xn) with false before true; the first
/// model found is returned. Throws CapacityError above max_vars.
inline std::optional<Assignment> sat_oracle(const CnfFormula& f, std::size_t max_vars = kDefaultOracleMaxVars) {
    const std::size_t n = f.n_vars;
    if (n > max_vars || n > 62)
        throw CapacityError("exhaustive SAT oracle limited to " + std::to_string(max_vars < 62 ? max_vars : 62) +
                            " variables, formula has " + std::to_string(n));
    // x_i lives at bit (n - i), so counting upward walks the lexicographic order.
    struct Masks {
        std::uint64_t pos = 0, neg = 0;
    };
    std::vector<Masks> masks;
    masks.reserve(f.clauses.size());
    for (const auto& c : f.clauses) {
        Masks m;
        for (const auto& l : c) (l.positive ? m.pos : m.neg) |= std::uint64_t{1} << (n - l.var);
        masks.push_back(m);
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        bool ok = true;
        for (const auto& m : masks) {
            if (((bits & m.pos) | (~bits & m.neg)) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Assignment a(n);
            for (std::size_t v = 1; v <= n; ++v) a.set(v, (bits >> (n - v)) & 1U);
            return a;
        }
    }
    return std::nullopt;
}

}  // namespace cafcon
