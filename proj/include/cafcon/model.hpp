#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cafcon/bitset.hpp"
#include "cafcon/error.hpp"

namespace cafcon {

/// Dense argument index, contiguous from 0 within one framework.
using ArgumentId = std::size_t;
/// Interned claim key, contiguous from 0 within one framework.
using ClaimKey = std::size_t;

/// A set of arguments, one bit per ArgumentId.
using Extension = Bitset;
/// A set of claims, one bit per ClaimKey.
using ClaimSet = Bitset;

struct Attack {
    ArgumentId from;
    ArgumentId to;

    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Labels must be non-empty and free of whitespace and '#'.
inline bool is_valid_label(std::string_view s) noexcept {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](char c) {
        return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    });
}

/// Argumentation framework (A, R) over arguments 0..n_args-1.
class Af {
public:
    Af() = default;

    /// Duplicate attacks are dropped; the stored relation is sorted.
    Af(std::size_t n_args, std::vector<Attack> attacks) : n_args_(n_args), attacks_(std::move(attacks)) {
        for (const auto& at : attacks_) {
            if (at.from >= n_args_ || at.to >= n_args_)
                throw StructuralError("attack (" + std::to_string(at.from) + "," + std::to_string(at.to) +
                                      ") references an argument outside 0.." +
                                      std::to_string(n_args_ == 0 ? 0 : n_args_ - 1));
        }
        std::sort(attacks_.begin(), attacks_.end());
        attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

        out_.assign(n_args_, Bitset(n_args_));
        in_.assign(n_args_, Bitset(n_args_));
        conflicts_.assign(n_args_, Bitset(n_args_));
        self_attackers_ = Bitset(n_args_);
        for (const auto& [a, b] : attacks_) {
            out_[a].set(b);
            in_[b].set(a);
            if (a == b) {
                self_attackers_.set(a);
            } else {
                conflicts_[a].set(b);
                conflicts_[b].set(a);
            }
        }
    }

    std::size_t n_args() const noexcept { return n_args_; }
    const std::vector<Attack>& attacks() const noexcept { return attacks_; }

    /// { b | (b,a) in R }
    const Bitset& attackers_of(ArgumentId a) const {
        check(a);
        return in_[a];
    }
    /// { b | (a,b) in R }, written a+ in the literature.
    const Bitset& attacked_by(ArgumentId a) const {
        check(a);
        return out_[a];
    }
    /// Arguments in conflict with a in either direction, excluding a itself.
    const Bitset& conflicts_of(ArgumentId a) const {
        check(a);
        return conflicts_[a];
    }
    const Bitset& self_attackers() const noexcept { return self_attackers_; }
    bool attacks(ArgumentId a, ArgumentId b) const { return attacked_by(a).test(b); }

    friend bool operator==(const Af& x, const Af& y) { return x.n_args_ == y.n_args_ && x.attacks_ == y.attacks_; }

private:
    void check(ArgumentId a) const {
        if (a >= n_args_) throw StructuralError("argument id " + std::to_string(a) + " out of range");
    }

    std::size_t n_args_ = 0;
    std::vector<Attack> attacks_;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
    std::vector<Bitset> conflicts_;
    Bitset self_attackers_;
};

/// Claim-augmented framework (A, R, cl).
///
/// Claims are interned in order of first occurrence by argument id, so two
/// Cafs built from the same names, labels and attacks are identical.
class Caf {
public:
    Caf() = default;

    Caf(std::vector<std::string> names, const std::vector<std::string>& claim_labels, std::vector<Attack> attacks)
        : names_(std::move(names)) {
        if (claim_labels.size() != names_.size())
            throw StructuralError("claim function must be total: " + std::to_string(names_.size()) +
                                  " arguments but " + std::to_string(claim_labels.size()) + " claims");
        std::unordered_map<std::string, ArgumentId> seen;
        for (ArgumentId a = 0; a < names_.size(); ++a) {
            if (!is_valid_label(names_[a])) throw StructuralError("invalid argument name '" + names_[a] + "'");
            if (!seen.emplace(names_[a], a).second)
                throw StructuralError("duplicate argument name '" + names_[a] + "'");
        }
        by_name_ = std::move(seen);

        std::unordered_map<std::string, ClaimKey> keys;
        claims_.reserve(claim_labels.size());
        for (const auto& label : claim_labels) {
            if (!is_valid_label(label)) throw StructuralError("invalid claim label '" + label + "'");
            auto [it, inserted] = keys.emplace(label, labels_.size());
            if (inserted) labels_.push_back(label);
            claims_.push_back(it->second);
        }
        af_ = Af(names_.size(), std::move(attacks));
    }

    const Af& af() const noexcept { return af_; }
    std::size_t n_args() const noexcept { return names_.size(); }
    std::size_t n_claims() const noexcept { return labels_.size(); }

    const std::string& name(ArgumentId a) const { return names_.at(a); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    ClaimKey claim(ArgumentId a) const { return claims_.at(a); }
    const std::string& claim_label(ClaimKey k) const { return labels_.at(k); }
    const std::string& claim_label_of(ArgumentId a) const { return labels_[claim(a)]; }

    std::optional<ArgumentId> find(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    const Bitset& attackers_of(ArgumentId a) const { return af_.attackers_of(a); }
    const Bitset& attacked_by(ArgumentId a) const { return af_.attacked_by(a); }

    Extension empty_extension() const { return Extension(n_args()); }
    ClaimSet empty_claim_set() const { return ClaimSet(n_claims()); }

    /// cl(S) = { cl(a) | a in S }
    ClaimSet claim_set(const Extension& s) const {
        ClaimSet out(n_claims());
        s.for_each([&](ArgumentId a) { out.set(claims_[a]); });
        return out;
    }

    /// Arguments carrying claim k.
    Extension arguments_with_claim(ClaimKey k) const {
        Extension out(n_args());
        for (ArgumentId a = 0; a < claims_.size(); ++a)
            if (claims_[a] == k) out.set(a);
        return out;
    }

    friend bool operator==(const Caf& x, const Caf& y) {
        return x.names_ == y.names_ && x.claims_ == y.claims_ && x.labels_ == y.labels_ && x.af_ == y.af_;
    }

private:
    std::vector<std::string> names_;
    std::vector<ClaimKey> claims_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ArgumentId> by_name_;
    Af af_;
};

struct WellFormedness {
    bool well_formed = true;
    /// Two arguments sharing a claim whose attack targets differ.
    std::optional<std::pair<ArgumentId, ArgumentId>> witness;

    explicit operator bool() const noexcept { return well_formed; }
};

/// A CAF is well-formed iff arguments with equal claims attack the same arguments.
inline WellFormedness is_well_formed(const Caf& caf) {
    std::vector<std::optional<ArgumentId>> representative(caf.n_claims());
    for (ArgumentId a = 0; a < caf.n_args(); ++a) {
        auto& rep = representative[caf.claim(a)];
        if (!rep) {
            rep = a;
        } else if (caf.attacked_by(*rep) != caf.attacked_by(a)) {
            return {false, std::pair{*rep, a}};
        }
    }
    return {};
}

}  // namespace cafcon
