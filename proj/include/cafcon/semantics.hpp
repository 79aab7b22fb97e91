#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cafcon/bitset.hpp"
#include "cafcon/error.hpp"
#include "cafcon/model.hpp"

namespace cafcon {

inline constexpr std::size_t kDefaultMaxArgs = 64;

/// Naive extensions in ascending Bitset order.
using NaiveFamily = std::vector<Extension>;
/// Distinct claim-sets in ascending Bitset order (a set of sets).
using ClaimFamily = std::vector<ClaimSet>;

inline bool is_conflict_free(const Af& af, const Extension& s) {
    for (auto a = s.first(); a < s.size(); a = s.next(a + 1))
        if (af.attacked_by(a).intersects(s)) return false;
    return true;
}
inline bool is_conflict_free(const Caf& caf, const Extension& s) { return is_conflict_free(caf.af(), s); }

/// Conflict-free and no outside argument can be added.
inline bool is_naive(const Af& af, const Extension& s) {
    if (!is_conflict_free(af, s)) return false;
    for (ArgumentId a = 0; a < af.n_args(); ++a) {
        if (s.test(a) || af.self_attackers().test(a)) continue;
        if (!af.conflicts_of(a).intersects(s)) return false;
    }
    return true;
}
inline bool is_naive(const Caf& caf, const Extension& s) { return is_naive(caf.af(), s); }

inline void check_capacity(std::size_t n_args, std::size_t max_args) {
    if (n_args > max_args)
        throw CapacityError("framework has " + std::to_string(n_args) + " arguments, enumeration cap is " +
                            std::to_string(max_args));
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting on the compatibility graph (the
// complement of the symmetrized conflict graph). Its maximal cliques are the
// maximal conflict-free sets. Self-attackers are removed up front.
class NaiveEnumerator {
public:
    explicit NaiveEnumerator(const Af& af) : af_(af), n_(af.n_args()) {
        const Bitset usable = Bitset::full(n_) - af.self_attackers();
        compatible_.reserve(n_);
        for (ArgumentId a = 0; a < n_; ++a) {
            Bitset c = usable - af.conflicts_of(a);
            c.reset(a);
            compatible_.push_back(std::move(c));
        }
        usable_ = usable;
    }

    NaiveFamily run() {
        NaiveFamily out;
        Bitset r(n_);
        expand(r, usable_, Bitset(n_), out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void expand(Bitset& r, Bitset p, Bitset x, NaiveFamily& out) {
        if (p.none() && x.none()) {
            out.push_back(r);
            return;
        }
        ArgumentId pivot = n_;
        std::size_t best = 0;
        auto consider = [&](ArgumentId u) {
            std::size_t k = (p & compatible_[u]).count();
            if (pivot == n_ || k > best) {
                pivot = u;
                best = k;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bitset candidates = p - compatible_[pivot];
        for (auto v = candidates.first(); v < n_; v = candidates.next(v + 1)) {
            r.set(v);
            expand(r, p & compatible_[v], x & compatible_[v], out);
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    const Af& af_;
    std::size_t n_;
    std::vector<Bitset> compatible_;
    Bitset usable_;
};

// True iff some conflict-free set carries every claim in `targets`
// (one representative per claim suffices, since subsets of conflict-free
// sets are conflict-free).
inline bool cover_claims(const Caf& caf, const std::vector<Extension>& candidates,
                         const std::vector<ClaimKey>& order, std::size_t idx, const Bitset& allowed) {
    if (idx == order.size()) return true;
    const Extension options = candidates[order[idx]] & allowed;
    for (auto a = options.first(); a < options.size(); a = options.next(a + 1)) {
        if (cover_claims(caf, candidates, order, idx + 1, allowed - caf.af().conflicts_of(a))) return true;
    }
    return false;
}

}  // namespace detail

/// All maximal conflict-free sets. Throws CapacityError above max_args.
inline NaiveFamily naive_extensions(const Af& af, std::size_t max_args = kDefaultMaxArgs) {
    check_capacity(af.n_args(), max_args);
    return detail::NaiveEnumerator(af).run();
}
inline NaiveFamily naive_extensions(const Caf& caf, std::size_t max_args = kDefaultMaxArgs) {
    return naive_extensions(caf.af(), max_args);
}

inline ClaimFamily normalize(ClaimFamily fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

/// i-naive: { cl(E) | E naive }.
inline ClaimFamily inherited_naive(const Caf& caf, std::size_t max_args = kDefaultMaxArgs) {
    ClaimFamily fam;
    for (const auto& e : naive_extensions(caf, max_args)) fam.push_back(caf.claim_set(e));
    return normalize(std::move(fam));
}

/// True iff some conflict-free E has cl(E) = claims.
inline bool is_claim_realizable(const Caf& caf, const ClaimSet& claims) {
    const Bitset usable = Bitset::full(caf.n_args()) - caf.af().self_attackers();
    std::vector<Extension> candidates;
    candidates.reserve(caf.n_claims());
    for (ClaimKey k = 0; k < caf.n_claims(); ++k) candidates.push_back(caf.arguments_with_claim(k) & usable);

    std::vector<ClaimKey> order = claims.members();
    // Most constrained claim first.
    std::stable_sort(order.begin(), order.end(),
                     [&](ClaimKey a, ClaimKey b) { return candidates[a].count() < candidates[b].count(); });
    return detail::cover_claims(caf, candidates, order, 0, usable);
}

/// cl-naive: the subset-maximal claim-sets of conflict-free sets.
///
/// Only members of the inherited family can be maximal, so each of them is
/// tested for a one-claim extension that some conflict-free set realizes.
inline ClaimFamily claim_level_naive(const Caf& caf, std::size_t max_args = kDefaultMaxArgs) {
    ClaimFamily out;
    for (const auto& s : inherited_naive(caf, max_args)) {
        bool maximal = true;
        for (ClaimKey k = 0; k < caf.n_claims() && maximal; ++k) {
            if (s.test(k)) continue;
            ClaimSet bigger = s;
            bigger.set(k);
            if (is_claim_realizable(caf, bigger)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

struct Incomparability {
    bool incomparable = true;
    /// (S, S') with S strictly contained in S'.
    std::optional<std::pair<ClaimSet, ClaimSet>> witness;

    explicit operator bool() const noexcept { return incomparable; }
};

/// Checks whether no member of the family strictly contains another.
inline Incomparability is_incomparable(const ClaimFamily& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
            if (i != j && fam[i].is_strict_subset_of(fam[j])) return {false, std::pair{fam[i], fam[j]}};
    return {};
}

/// Two naive extensions with cl(smaller) strictly inside cl(larger).
struct Witness {
    Extension smaller;
    Extension larger;
};

struct ConcurrenceVerdict {
    bool concurrent = true;
    std::optional<Witness> witness;
};

inline bool verify_witness(const Caf& caf, const Witness& w) {
    return w.smaller.size() == caf.n_args() && w.larger.size() == caf.n_args() && is_naive(caf, w.smaller) &&
           is_naive(caf, w.larger) && caf.claim_set(w.smaller).is_strict_subset_of(caf.claim_set(w.larger));
}

/// Decides concurrence by enumerating naive extensions and testing the
/// inherited family for incomparability.
inline ConcurrenceVerdict is_concurrent_brute(const Caf& caf, std::size_t max_args = kDefaultMaxArgs) {
    const NaiveFamily exts = naive_extensions(caf, max_args);
    ClaimFamily fam;
    fam.reserve(exts.size());
    for (const auto& e : exts) fam.push_back(caf.claim_set(e));
    auto inc = is_incomparable(normalize(fam));
    if (inc) return {};

    auto pick = [&](const ClaimSet& s) -> const Extension& {
        for (std::size_t i = 0; i < exts.size(); ++i)
            if (fam[i] == s) return exts[i];
        throw InternalError("claim-set without a naive extension");
    };
    return {false, Witness{pick(inc.witness->first), pick(inc.witness->second)}};
}

}  // namespace cafcon
