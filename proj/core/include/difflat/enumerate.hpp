#pragma once

#include <difflat/derivation.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace difflat {

/// DO(L): every derivation of a lattice, sorted by image array.
class DerivationSet {
public:
    DerivationSet(FinLattice lattice, std::vector<Derivation> derivations);

    [[nodiscard]] auto lattice() const -> const FinLattice & { return _lattice; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _items.size(); }
    [[nodiscard]] auto items() const -> std::span<const Derivation> { return _items; }
    auto operator[](std::size_t i) const -> const Derivation & { return _items[i]; }
    [[nodiscard]] auto begin() const { return _items.begin(); }
    [[nodiscard]] auto end() const { return _items.end(); }

    [[nodiscard]] auto index_of(std::span<const Elem> image) const -> std::optional<std::size_t>;
    [[nodiscard]] auto contains(std::span<const Elem> image) const -> bool { return index_of(image).has_value(); }
    [[nodiscard]] auto isotone_count() const -> std::size_t;

    auto operator==(const DerivationSet & other) const -> bool { return _items == other._items; }

private:
    FinLattice _lattice;
    std::vector<Derivation> _items;
};

struct EnumerateOptions {
    /// Worker threads; the result does not depend on this.
    unsigned jobs = 1;
};

/**
 * Depth-first search assigning d along the lattice's linear extension. d(x)
 * ranges over x and the already-fixed elements below x; every pair whose
 * values are known is checked against the Leibniz identity as soon as
 * possible. Emitted maps are re-validated in full.
 */
auto enumerate_derivations(const FinLattice & lattice, EnumerateOptions options = {}) -> DerivationSet;

/// From the chain description: a fixed initial segment and a non-increasing
/// tail into it. Throws WrongShape unless the lattice is a chain.
auto enumerate_chain_fast(const FinLattice & lattice) -> DerivationSet;

/// Whether every element other than bottom and top is both an atom and a coatom.
auto is_mn_shape(const FinLattice & lattice) -> bool;

/// From the M_n description: fix a set S of atoms, send the other atoms to 0,
/// and pick d(1) in S or 0; plus the identity. Throws WrongShape.
auto enumerate_mn_fast(const FinLattice & lattice) -> DerivationSet;
auto enumerate_mn_fast(std::size_t n) -> DerivationSet;

/// C(k+l-1, k), the number of monotone maps from a k-chain to an l-chain.
/// Throws BadSize for k or l below 1 and Overflow past 64 bits.
auto isotone_count_formula(std::uint64_t k, std::uint64_t l) -> std::uint64_t;

/// |DO(C_n)| = 2^(n-1).
auto chain_derivation_count(std::size_t n) -> std::uint64_t;
/// |DO(M_n)| = 2 + sum over k = 1..n-2 of (k+1) C(n-2, k), for n >= 4.
auto mn_derivation_count(std::size_t n) -> std::uint64_t;

} // namespace difflat
