#pragma once

// Shared machinery for lattice and poset isomorphism: colour refinement over
// the Hasse diagram and a colour-respecting backtracking search.

#include <difflat/lattice.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace difflat::detail {

struct OrderGraph {
    std::size_t n = 0;
    std::vector<char> leq; // row-major n*n
    std::vector<std::vector<Elem>> lower, upper;

    [[nodiscard]] auto le(Elem x, Elem y) const -> bool { return leq[x * n + y] != 0; }
};

auto order_graph(const FinLattice & lattice) -> OrderGraph;
/// Builds the Hasse neighbour lists from a reflexive-transitive relation.
auto order_graph(std::size_t n, std::vector<char> leq) -> OrderGraph;

/// Per-element (height, depth, down-set size, up-set size, #lower covers, #upper covers).
auto level_signature(const OrderGraph & g) -> std::vector<std::vector<std::uint64_t>>;

/// Dense ranks of the signatures in sorted order.
auto rank_signatures(const std::vector<std::vector<std::uint64_t>> & sigs) -> std::vector<std::uint32_t>;

/**
 * Iterates colour := rank(colour, lower-cover colours, upper-cover colours)
 * until the number of colours stops growing. Colour order only ever splits
 * cells, so the initial order is kept. If trace is given, a hash of every
 * round's signature multiset is folded into it.
 */
auto refine(const OrderGraph & g, std::vector<std::uint32_t> colour, std::uint64_t * trace = nullptr)
    -> std::vector<std::uint32_t>;

auto colour_count(const std::vector<std::uint32_t> & colour) -> std::size_t;

/**
 * Visits every order isomorphism a -> b mapping colour ca[x] to colour cb[y].
 * The visitor returns false to stop the search.
 */
auto for_each_order_iso(const OrderGraph & a, const std::vector<std::uint32_t> & ca, const OrderGraph & b,
    const std::vector<std::uint32_t> & cb, const std::function<bool(const std::vector<Elem> &)> & visit) -> void;

auto fnv1a(std::uint64_t h, std::uint64_t v) -> std::uint64_t;
inline constexpr std::uint64_t fnv_offset = 14695981039346656037ULL;

} // namespace difflat::detail
