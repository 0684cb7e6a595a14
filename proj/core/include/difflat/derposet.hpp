#pragma once

#include <difflat/enumerate.hpp>
#include <difflat/poset.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace difflat {

/// (DO(L), ⪯) with d ⪯ d' iff d(x) <= d'(x) for all x. Element i is set[i].
auto build_do_poset(const DerivationSet & set) -> FinPoset;

auto pointwise_join(const OperatorMap & d, const OperatorMap & e) -> OperatorMap;
auto pointwise_meet(const OperatorMap & d, const OperatorMap & e) -> OperatorMap;
/// x ↦ x ∧ (d(1) ∨ e(1)).
auto cup(const OperatorMap & d, const OperatorMap & e) -> OperatorMap;
/// x ↦ d(e(x)).
auto compose(const OperatorMap & d, const OperatorMap & e) -> OperatorMap;

struct OpAlgebraResult {
    OperatorMap pointwise_join;
    OperatorMap pointwise_meet;
    OperatorMap cup;
    OperatorMap compose;
    bool join_is_derivation = false;
    bool meet_is_derivation = false;
    bool cup_is_derivation = false;
    bool compose_is_derivation = false;
};

/// The four combinations of d and e; membership flags come from is_derivation.
/// Throws DifferentLattices.
auto op_algebra(const OperatorMap & d, const OperatorMap & e) -> OpAlgebraResult;

struct ClosureCheck {
    bool closed = true;
    /// Indices of the first pair whose combination leaves DO(L).
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Exhaustive over all pairs of DO(L).
auto check_join_closed(const DerivationSet & set) -> ClosureCheck;
auto check_meet_closed(const DerivationSet & set) -> ClosureCheck;

enum class CheckMode { Exhaustive, Sampled, NotApplicable };
auto to_string(CheckMode mode) -> std::string;

struct FamilyJoinReport {
    CheckMode mode = CheckMode::NotApplicable;
    bool closed = false;
    std::uint64_t subsets_checked = 0;
    /// Members of a subset whose pointwise join is not a derivation.
    std::optional<std::vector<std::size_t>> violation;
};

/**
 * Whether the pointwise join of every subset of DO(L) is a derivation. Every
 * subset is visited when |DO(L)| <= 20; above that all pairs, triples (when
 * affordable) and seeded random subsets are tried and the mode is Sampled.
 * NotApplicable on non-distributive lattices.
 */
auto family_join_closed(const DerivationSet & set, std::uint64_t seed = 0x5eed) -> FamilyJoinReport;

struct IdoWitness {
    /// Indices into the derivation set of the isotone derivations, ordered by d(1).
    std::vector<std::size_t> derivations;
    /// top_values[i] = derivations[i](1); a permutation-like table onto L.
    std::vector<Elem> top_values;
};

/// d ↦ d(1) from the isotone derivations onto L, checked to be a bijection
/// carrying ∪ to ∨ and ∧ to ∧. Throws IsoFailure.
auto ido_lattice_iso(const DerivationSet & set) -> IdoWitness;

struct ChiReport {
    bool all_derivations = false; // every χ^(u) lies in DO(L)
    bool bijective = false;       // u ↦ χ^(u) is injective
    bool join_law = false;        // χ^(u) ∨ χ^(v) = χ^(u∨v)
    bool meet_law = false;        // χ^(u) ∧ χ^(v) = χ^(u∧v)
    bool compose_law = false;     // χ^(u) ∘ χ^(v) = χ^(v) for v ≠ 1
    bool upward_closed = false;   // within (DO(L), ⪯)
    /// Present when DO(L) is a lattice: upward closed and closed under its meet.
    std::optional<bool> filter;
    /// Indices of the χ^(u), by u.
    std::vector<std::size_t> members;

    [[nodiscard]] auto ok() const -> bool;
};

auto chi_sublattice_check(const DerivationSet & set) -> ChiReport;

struct TransferReport {
    bool do_distributive = false;
    bool lattice_distributive = false;
    /// do_distributive implies lattice_distributive.
    bool implication_holds = false;
    /// A triple of DO(L) breaking distributivity, when there is one.
    std::optional<std::array<std::size_t, 3>> violating_triple;
};

/// Throws PosetNotLattice when DO(L) is not a lattice.
auto distributivity_transfer(const DerivationSet & set) -> TransferReport;

struct DoChainReport {
    bool do_is_chain = false;
    /// L is a chain with at most three elements.
    bool predicted = false;
};

auto do_chain_criterion(const DerivationSet & set) -> DoChainReport;

struct ConjectureReport {
    std::size_t order = 0;
    std::string canonical_key;
    std::size_t do_size = 0;
    bool do_is_lattice = false;
    /// Failure certificate in terms of derivation images.
    std::optional<LatticeCertificate> certificate;
    std::vector<std::vector<Elem>> certificate_images;
    std::string do_poset_key;
};

auto conjecture_probe(const FinLattice & lattice) -> ConjectureReport;
auto conjecture_probe(const DerivationSet & set, std::string canonical_key) -> ConjectureReport;

} // namespace difflat
