#pragma once

// Brute-force reference computations. Everything here is deliberately naive
// and shares no search code with the core library, so the two can referee
// each other at small sizes.

#include <difflat/lattice.hpp>

#include <cstdint>
#include <vector>

namespace difflat::reference {

/**
 * Number of lattices of order n up to isomorphism, counted from scratch:
 * every labeled partial order on the n-2 inner elements is extended by a
 * bottom and a top, kept if every pair has a unique glb and lub, and the
 * survivors are bucketed by the minimum of their order matrices over all
 * relabelings. Practical for n <= 7.
 */
auto lattice_count(std::size_t n) -> std::uint64_t;

/// Monotone maps from a k-chain to an l-chain, by trying all l^k maps.
auto monotone_map_count(std::size_t k, std::size_t l) -> std::uint64_t;

/// Every bijection preserving meet and join, by trying all n! permutations.
auto automorphisms(const FinLattice & lattice) -> std::vector<std::vector<Elem>>;

/// Every self-map satisfying the Leibniz identity, out of all n^n maps, in lexicographic order.
auto derivations(const FinLattice & lattice) -> std::vector<std::vector<Elem>>;

/// Orbit count of derivations under conjugation, using the brute-force automorphisms.
auto derivation_class_count(const FinLattice & lattice) -> std::size_t;

} // namespace difflat::reference
