#pragma once

#include <difflat/lattice.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace difflat {

struct CatalogEntry {
    std::string key;
    /// Relabelled so that ids are canonical positions (bottom 0, top n-1).
    FinLattice lattice;
};

struct CatalogProvenance {
    std::string generator;
    std::size_t candidates = 0;
    std::size_t unfiltered_count = 0;
    std::string filter;
    bool from_cache = false;
};

/// Every lattice of one order up to isomorphism, sorted by canonical key.
struct LatticeCatalog {
    std::size_t order = 0;
    std::vector<CatalogEntry> entries;
    CatalogProvenance provenance;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return entries.size(); }
};

enum class KeyAlgorithm {
    /// canonical_form: refined colour classes, exact minimum inside them.
    Refined,
    /// brute_force_canonical_key; slow, for cross-checking.
    BruteForce,
};

struct CatalogOptions {
    unsigned jobs = 1;
    KeyAlgorithm keys = KeyAlgorithm::Refined;
    /// Read and write JSON-lines catalogs here when set.
    std::optional<std::filesystem::path> cache_dir;
};

/**
 * Lattices of order n >= 3 are grown from those of order n-1 by adding a new
 * coatom above a nonempty antichain; every lattice arises this way because
 * removing a coatom leaves a lattice. Duplicates are rejected by canonical key.
 * Throws BadSize for n == 0 and TooLarge for n > 9.
 */
auto enumerate_lattices(std::size_t n, const CatalogOptions & options = {}) -> LatticeCatalog;

/// Options with cache_dir taken from DIFFLAT_CACHE_DIR, if set.
auto catalog_options_from_env(unsigned jobs = 1) -> CatalogOptions;

enum class CatalogFilter { Distributive, Modular, Chain };
auto parse_catalog_filter(const std::string & name) -> CatalogFilter;
auto to_string(CatalogFilter filter) -> std::string;
auto catalog_filter(const LatticeCatalog & catalog, CatalogFilter filter) -> LatticeCatalog;

/// One JSON lattice per line (with its canonical key) and a closing summary line.
auto write_catalog_jsonl(const LatticeCatalog & catalog, std::ostream & out) -> void;
auto read_catalog_jsonl(std::istream & in) -> LatticeCatalog;

} // namespace difflat
