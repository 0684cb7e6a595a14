#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace difflat {

namespace detail {
    struct LatticeData;
}

/// Lattice elements are dense ids 0..n-1.
using Elem = std::uint32_t;

/// A (lower, upper) pair of the Hasse diagram.
using Cover = std::pair<Elem, Elem>;

/// A bijection on element ids. image[x] is the image of x.
struct Permutation {
    std::vector<Elem> image;

    static auto identity(std::size_t n) -> Permutation;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return image.size(); }
    auto operator()(Elem x) const -> Elem { return image[x]; }
    [[nodiscard]] auto inverse() const -> Permutation;
    [[nodiscard]] auto is_identity() const -> bool;
    [[nodiscard]] auto is_bijection() const -> bool;

    auto operator<=>(const Permutation &) const = default;
};

/// (f ∘ g)(x) = f(g(x)).
auto compose(const Permutation & f, const Permutation & g) -> Permutation;

/**
 * An immutable bounded finite lattice.
 *
 * Instances are cheap handles onto shared, validated tables: copying a
 * FinLattice never copies the meet/join tables, and every instance may be
 * read concurrently. Construction always goes through lattice_from_covers
 * (or one of the make_* factories), which rejects anything that is not a
 * bounded lattice. Bottom and top are discovered from the order, so they
 * need not be ids 0 and n-1.
 *
 * Equality is structural: two handles compare equal when they have the same
 * size and the same meet table. Names and labels do not participate.
 */
class FinLattice {
public:
    [[nodiscard]] auto size() const noexcept -> std::size_t;

    [[nodiscard]] auto meet(Elem x, Elem y) const -> Elem;
    [[nodiscard]] auto join(Elem x, Elem y) const -> Elem;
    [[nodiscard]] auto leq(Elem x, Elem y) const -> bool;

    [[nodiscard]] auto bottom() const noexcept -> Elem;
    [[nodiscard]] auto top() const noexcept -> Elem;

    /// Hasse diagram, sorted lexicographically.
    [[nodiscard]] auto covers() const -> std::span<const Cover>;
    [[nodiscard]] auto is_cover(Elem lower, Elem upper) const -> bool;
    [[nodiscard]] auto lower_covers(Elem x) const -> std::span<const Elem>;
    [[nodiscard]] auto upper_covers(Elem x) const -> std::span<const Elem>;

    /// Length of the longest chain from bottom to x.
    [[nodiscard]] auto height(Elem x) const -> std::size_t;
    /// Length of the longest chain from x to top.
    [[nodiscard]] auto depth(Elem x) const -> std::size_t;
    [[nodiscard]] auto down_size(Elem x) const -> std::size_t;
    [[nodiscard]] auto up_size(Elem x) const -> std::size_t;

    /// Elements ordered by (height, id); bottom first, top last.
    [[nodiscard]] auto linear_extension() const -> std::span<const Elem>;

    [[nodiscard]] auto is_distributive() const noexcept -> bool;
    [[nodiscard]] auto is_modular() const noexcept -> bool;
    [[nodiscard]] auto is_chain() const noexcept -> bool;

    [[nodiscard]] auto name() const -> const std::string &;
    [[nodiscard]] auto label(Elem x) const -> const std::string &;
    [[nodiscard]] auto labels() const -> std::span<const std::string>;
    [[nodiscard]] auto has_custom_labels() const noexcept -> bool;

    [[nodiscard]] auto with_name(std::string name) const -> FinLattice;

    auto operator==(const FinLattice & other) const -> bool;

private:
    explicit FinLattice(std::shared_ptr<const detail::LatticeData> data);
    std::shared_ptr<const detail::LatticeData> _data;

    friend auto lattice_from_covers(std::size_t, std::span<const Cover>, std::string, std::vector<std::string>) -> FinLattice;
    friend auto try_lattice_from_covers(std::size_t, std::span<const Cover>) -> std::optional<FinLattice>;
};

/**
 * Builds a lattice from a cover (Hasse) relation. Redundant transitive pairs
 * are accepted; the stored cover relation is recomputed from the order.
 *
 * Throws Error with kind BadSize (n == 0), BadInput (ids out of range or
 * wrong label count), CyclicCovers, NotBounded, or NotALattice.
 */
auto lattice_from_covers(std::size_t n, std::span<const Cover> covers, std::string name = {},
    std::vector<std::string> labels = {}) -> FinLattice;

/// Non-throwing variant for search loops; nullopt whenever lattice_from_covers would throw.
auto try_lattice_from_covers(std::size_t n, std::span<const Cover> covers) -> std::optional<FinLattice>;

auto make_chain(std::size_t n) -> FinLattice;
/// Diamond-type lattice with n-2 atoms; ids: 0 bottom, 1..n-2 atoms, n-1 top.
auto make_mn(std::size_t n) -> FinLattice;
/// Boolean lattice of 2^k subsets (k <= 6); element ids are the subset bitmasks.
auto make_boolean(std::size_t k) -> FinLattice;
/// Pentagon; ids 0=0, 1=v, 2=u, 3=w, 4=1 with 0 < v < u < 1 and 0 < w < 1.
auto make_n5() -> FinLattice;

/// Order dual: meet and join swap roles, bottom and top swap.
auto dual(const FinLattice & lattice) -> FinLattice;
/// Direct product; the pair (a, b) gets id a * |right| + b.
auto product(const FinLattice & left, const FinLattice & right) -> FinLattice;
/// The isomorphic copy in which element x is renamed f(x).
auto relabel(const FinLattice & lattice, const Permutation & f) -> FinLattice;

auto is_distributive(const FinLattice & lattice) -> bool;
auto is_modular(const FinLattice & lattice) -> bool;
auto is_chain(const FinLattice & lattice) -> bool;

/// Checks preservation of meet and join for every pair.
auto is_automorphism(const FinLattice & lattice, const Permutation & f) -> bool;

/// The full automorphism group, lexicographically sorted by image array.
auto automorphisms(const FinLattice & lattice) -> std::vector<Permutation>;

/// A witness f with f(x ∧ y) = f(x) ∧' f(y), or nullopt.
auto are_isomorphic(const FinLattice & left, const FinLattice & right) -> std::optional<Permutation>;

struct CanonicalForm {
    std::string key;
    /// Maps each original id to its canonical id.
    Permutation labeling;
};

/**
 * Canonical labeling: the lexicographically least meet table (read as its
 * lower triangle, row by row) over every relabeling that respects the ordered
 * colour partition obtained by refining (height, depth, down-set size, up-set
 * size, cover degrees). Isomorphic lattices get identical keys.
 */
auto canonical_form(const FinLattice & lattice) -> CanonicalForm;
auto canonical_key(const FinLattice & lattice) -> std::string;

/// Independent key: minimum over every relabeling that sends bottom to 0 and
/// top to n-1, with no refinement. Factorial cost, n <= 10. The key differs
/// from canonical_key but induces the same equivalence.
auto brute_force_canonical_key(const FinLattice & lattice) -> std::string;

} // namespace difflat
