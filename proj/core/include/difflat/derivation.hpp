#pragma once

#include <difflat/lattice.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace difflat {

/// An arbitrary self-map of a lattice; image[x] = d(x).
class OperatorMap {
public:
    /// Throws BadInput when the image has the wrong length or ids out of range.
    OperatorMap(FinLattice lattice, std::vector<Elem> image);

    static auto zero(const FinLattice & lattice) -> OperatorMap;
    static auto identity(const FinLattice & lattice) -> OperatorMap;
    /// The constant map onto top.
    static auto one(const FinLattice & lattice) -> OperatorMap;

    [[nodiscard]] auto lattice() const -> const FinLattice & { return _lattice; }
    [[nodiscard]] auto image() const -> std::span<const Elem> { return _image; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return _image.size(); }
    auto operator()(Elem x) const -> Elem { return _image[x]; }

    /// Pointwise order: d(x) <= other(x) for every x.
    [[nodiscard]] auto precedes(const OperatorMap & other) const -> bool;

    auto operator==(const OperatorMap & other) const -> bool { return _image == other._image; }
    auto operator<=>(const OperatorMap & other) const -> std::strong_ordering { return _image <=> other._image; }

private:
    FinLattice _lattice;
    std::vector<Elem> _image;
};

/// d(x∧y) = (d(x)∧y) ∨ (x∧d(y)) for every ordered pair.
auto is_derivation(const OperatorMap & op) -> bool;

struct Violation {
    enum class Axiom { ZeroFixed, Contraction, Leibniz };
    Axiom axiom = Axiom::Leibniz;
    Elem x = 0, y = 0;
    /// For Leibniz: d(x∧y) and (d(x)∧y) ∨ (x∧d(y)).
    Elem lhs = 0, rhs = 0;
};

/// The first failing axiom, checked in the order d(0)=0, d(x)<=x, Leibniz.
/// Any failure of the first two is also a Leibniz failure at (x, x).
auto find_violation(const OperatorMap & op) -> std::optional<Violation>;
auto describe(const Violation & v, const FinLattice & lattice) -> std::string;

/**
 * A validated derivation with cached fix points, d(1) and isotonicity.
 * Compared and hashed by image.
 */
class Derivation {
public:
    static auto validate(OperatorMap op) -> std::optional<Derivation>;
    /// Throws NotADerivation naming the violated axiom.
    static auto from(OperatorMap op) -> Derivation;
    static auto from_image(const FinLattice & lattice, std::vector<Elem> image) -> Derivation;

    [[nodiscard]] auto map() const -> const OperatorMap & { return _map; }
    [[nodiscard]] auto lattice() const -> const FinLattice & { return _map.lattice(); }
    [[nodiscard]] auto image() const -> std::span<const Elem> { return _map.image(); }
    auto operator()(Elem x) const -> Elem { return _map(x); }

    /// Sorted fix-point set; equals the image set.
    [[nodiscard]] auto fix_points() const -> std::span<const Elem> { return _fix; }
    [[nodiscard]] auto top_value() const noexcept -> Elem { return _top_value; }
    [[nodiscard]] auto isotone() const noexcept -> bool { return _isotone; }

    auto operator==(const Derivation & other) const -> bool { return _map == other._map; }
    auto operator<=>(const Derivation & other) const -> std::strong_ordering { return _map <=> other._map; }

private:
    explicit Derivation(OperatorMap op);
    OperatorMap _map;
    std::vector<Elem> _fix;
    Elem _top_value = 0;
    bool _isotone = false;
};

struct DerivationHash {
    auto operator()(const Derivation & d) const noexcept -> std::size_t;
};

/// d_u(x) = x ∧ u.
auto inner(const FinLattice & lattice, Elem u) -> Derivation;
/// Identity except 1 ↦ u.
auto chi(const FinLattice & lattice, Elem u) -> Derivation;
/// x ↦ u when u <= x, else x.
auto eta(const FinLattice & lattice, Elem u) -> Derivation;

/// x ↦ x when x <= u, else 0, as a raw map.
auto lambda_cut_map(const FinLattice & lattice, Elem u) -> OperatorMap;
/**
 * The cut map, present exactly when every pair x, y outside the down-set of u
 * has x∧y outside it too or x∧y = 0.
 */
auto lambda_cut(const FinLattice & lattice, Elem u) -> std::optional<Derivation>;
/// Whether the pair condition for lambda_cut holds.
auto lambda_cut_condition(const FinLattice & lattice, Elem u) -> bool;

/// x ↦ x when x <= u, else v, as a raw map (any lattice).
auto lambda_band_map(const FinLattice & lattice, Elem v, Elem u) -> OperatorMap;
/// Chains only; throws NotAChain, or BadPair when v is not below u.
auto lambda_band(const FinLattice & lattice, Elem v, Elem u) -> Derivation;

/// d with its value at 1 lowered to u; throws BadBound unless u <= d(1).
auto lower_top(const Derivation & d, Elem u) -> Derivation;

/// Monotone on comparable pairs. Cross-checked against d = inner(d(1)).
auto is_isotone(const Derivation & d) -> bool;
auto is_inner(const Derivation & d) -> bool;
/// d(x∧y) = x ∧ d(y) for all pairs.
auto is_meet_translation(const OperatorMap & op) -> bool;
/// d(x∨y) = d(x) ∨ d(y) for all pairs.
auto is_join_preserving(const OperatorMap & op) -> bool;
/// d(x∧y) = d(x) ∧ d(y) for all pairs.
auto is_meet_preserving(const OperatorMap & op) -> bool;

} // namespace difflat
