#pragma once

#include <difflat/catalog.hpp>
#include <difflat/derposet.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <vector>

namespace difflat {

struct PosetCollision {
    /// Indices into ConjectureRun::lattices; first < second.
    std::size_t first = 0, second = 0;
    std::string do_poset_key;
    bool posets_isomorphic = false;
    /// Whether the underlying lattices are isomorphic.
    bool lattices_isomorphic = false;
};

struct ConjectureRun {
    std::size_t min_order = 1, max_order = 0;
    /// Ordered by (order, canonical key).
    std::vector<ConjectureReport> lattices;
    std::vector<PosetCollision> collisions;

    [[nodiscard]] auto counterexamples() const -> std::size_t;
    /// Largest order up to which every DO poset was a lattice.
    [[nodiscard]] auto verified_up_to() const -> std::size_t;
    /// Collisions between posets that are isomorphic while the lattices are not.
    [[nodiscard]] auto determination_failures() const -> std::size_t;
};

struct ConjectureOptions {
    std::size_t min_order = 1;
    std::size_t max_order = 6;
    unsigned jobs = 1;
    CatalogOptions catalog;
    /// Called after each order finishes.
    std::function<void(std::size_t order, std::size_t lattices)> progress;
};

/**
 * Probes every catalogued lattice in the order range: whether DO(L) is a
 * lattice, with certificates, and a scan over DO-poset invariant keys in which
 * every equal-key pair is resolved by an exact poset isomorphism and an
 * isomorphism test of the underlying lattices.
 */
auto run_conjecture(const ConjectureOptions & options) -> ConjectureRun;

auto to_json(const ConjectureReport & report) -> nlohmann::json;
auto to_json(const ConjectureRun & run) -> nlohmann::json;

} // namespace difflat
