#pragma once

#include <difflat/lattice.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace difflat {

/// A finite partial order on 0..size-1; labels are external ids.
class FinPoset {
public:
    /// leq is row-major size*size. Throws BadInput unless it is a partial order.
    FinPoset(std::size_t size, std::vector<char> leq, std::vector<std::size_t> labels = {});

    [[nodiscard]] auto size() const noexcept -> std::size_t { return _size; }
    [[nodiscard]] auto leq(std::size_t x, std::size_t y) const -> bool { return _leq[x * _size + y] != 0; }
    [[nodiscard]] auto less(std::size_t x, std::size_t y) const -> bool { return x != y && leq(x, y); }
    [[nodiscard]] auto comparable(std::size_t x, std::size_t y) const -> bool { return leq(x, y) || leq(y, x); }
    [[nodiscard]] auto label(std::size_t x) const -> std::size_t { return _labels[x]; }
    [[nodiscard]] auto labels() const -> const std::vector<std::size_t> & { return _labels; }
    [[nodiscard]] auto relation() const -> const std::vector<char> & { return _leq; }

    /// Hasse diagram, lexicographic.
    [[nodiscard]] auto covers() const -> std::vector<std::pair<std::size_t, std::size_t>>;
    [[nodiscard]] auto bottom() const -> std::optional<std::size_t>;
    [[nodiscard]] auto top() const -> std::optional<std::size_t>;
    [[nodiscard]] auto is_chain() const -> bool;

    [[nodiscard]] auto minimal_upper_bounds(std::size_t x, std::size_t y) const -> std::vector<std::size_t>;
    [[nodiscard]] auto maximal_lower_bounds(std::size_t x, std::size_t y) const -> std::vector<std::size_t>;

private:
    std::size_t _size;
    std::vector<char> _leq;
    std::vector<std::size_t> _labels;
};

struct LatticeCertificate {
    enum class Kind { MissingJoin, MissingMeet };
    Kind kind = Kind::MissingJoin;
    std::size_t x = 0, y = 0;
    /// The incomparable minimal upper (or maximal lower) bounds; empty if none exist.
    std::vector<std::size_t> bounds;
};

struct LatticeCheck {
    bool is_lattice = false;
    std::optional<LatticeCertificate> certificate;
};

/// Every pair has a unique minimal upper bound and a unique maximal lower bound.
auto poset_is_lattice(const FinPoset & p) -> LatticeCheck;

/// Meet/join tables of a poset that is a lattice; throws PosetNotLattice otherwise.
struct PosetLatticeTables {
    std::size_t n = 0;
    std::vector<std::size_t> meet, join;
    [[nodiscard]] auto m(std::size_t x, std::size_t y) const -> std::size_t { return meet[x * n + y]; }
    [[nodiscard]] auto j(std::size_t x, std::size_t y) const -> std::size_t { return join[x * n + y]; }
};
auto poset_lattice_tables(const FinPoset & p) -> PosetLatticeTables;

/// The poset as a FinLattice (same ids); throws PosetNotLattice.
auto poset_as_lattice(const FinPoset & p) -> FinLattice;

/// Isomorphism-invariant key from iterated up/down degree refinement.
/// Equal posets up to isomorphism share keys; the converse needs find_poset_isomorphism.
auto poset_invariant_key(const FinPoset & p) -> std::string;

/// An order isomorphism a -> b (as image array), or nullopt.
auto find_poset_isomorphism(const FinPoset & a, const FinPoset & b) -> std::optional<std::vector<std::size_t>>;

/// Reflexive-transitive closure of cover pairs on 0..n-1; throws BadInput on cycles.
auto poset_from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> & covers) -> FinPoset;

} // namespace difflat
