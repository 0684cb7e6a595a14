#pragma once

#include <difflat/enumerate.hpp>

#include <compare>
#include <optional>
#include <vector>

namespace difflat {

/// A witness f with f∘d = d'∘f, or nullopt. Throws DifferentLattices.
auto are_isomorphic_derivations(const Derivation & d, const Derivation & other) -> std::optional<Permutation>;

/// f∘d∘f⁻¹.
auto conjugate(const Derivation & d, const Permutation & f) -> OperatorMap;

struct ClassInvariant {
    std::size_t fix_size = 0;
    bool top_is_zero = false;

    auto operator<=>(const ClassInvariant &) const = default;
};

struct DerivationClass {
    ClassInvariant invariant;
    /// Indices into the DerivationSet, ascending.
    std::vector<std::size_t> members;
    /// Smallest image array in the class (= members.front()).
    std::size_t representative = 0;
    /// witnesses[i] conjugates the representative onto members[i].
    std::vector<Permutation> witnesses;
};

class IsoClassification {
public:
    IsoClassification(std::vector<DerivationClass> classes, std::vector<std::size_t> class_of);

    [[nodiscard]] auto classes() const -> const std::vector<DerivationClass> & { return _classes; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _classes.size(); }
    [[nodiscard]] auto class_of(std::size_t derivation) const -> std::size_t { return _class_of[derivation]; }

    /// An automorphism f with f∘d_i = d_j∘f, when i and j share a class.
    [[nodiscard]] auto witness(std::size_t i, std::size_t j) const -> std::optional<Permutation>;

private:
    std::vector<DerivationClass> _classes;
    std::vector<std::size_t> _class_of;
    std::vector<std::size_t> _slot; // position of each derivation inside its class
};

/**
 * Orbits of DO(L) under conjugation by Aut(L), sorted by (invariant, least
 * member). Every conjugate is re-validated; a missing one raises Internal.
 */
auto classify(const DerivationSet & set) -> IsoClassification;

/// Equal fix-point counts and equal zero/nonzero status of d(1). Throws WrongShape off M_n.
auto mn_class_predicate(const Derivation & d, const Derivation & other) -> bool;

/// Guaranteed minimum number of classes: |L| = 1 → 1, 2 → 2, 3 → 4, otherwise 5.
auto class_lower_bound(const FinLattice & lattice) -> std::size_t;

/// 2^(n-1) for C_n, 2(n-1) for M_n (n >= 3).
auto chain_class_count(std::size_t n) -> std::uint64_t;
auto mn_class_count(std::size_t n) -> std::uint64_t;

} // namespace difflat
