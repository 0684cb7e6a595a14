#include <difflat/catalog.hpp>
#include <difflat/error.hpp>
#include <difflat/reference.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace difflat;

namespace {
auto jobs(unsigned k) -> CatalogOptions
{
    CatalogOptions o;
    o.jobs = k;
    return o;
}
} // namespace

TEST(Catalog, CountsMatchReferenceSearch)
{
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(enumerate_lattices(n).size(), reference::lattice_count(n)) << n;
}

TEST(Catalog, PublishedCounts)
{
    const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53, 222, 1078};
    for (std::size_t n = 1; n <= 9; ++n)
        EXPECT_EQ(enumerate_lattices(n, jobs(4)).size(), expected[n - 1]) << n;
}

TEST(Catalog, EntriesAreCanonicalAndDistinct)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        auto cat = enumerate_lattices(n);
        EXPECT_EQ(cat.order, n);
        std::set<std::string> keys;
        std::string previous;
        for (const auto & e : cat.entries) {
            EXPECT_EQ(e.lattice.size(), n);
            EXPECT_EQ(canonical_key(e.lattice), e.key);
            EXPECT_EQ(e.lattice.bottom(), 0U);
            EXPECT_EQ(e.lattice.top(), n - 1);
            EXPECT_LT(previous, e.key);
            previous = e.key;
            keys.insert(e.key);
        }
        EXPECT_EQ(keys.size(), cat.size());
    }
}

TEST(Catalog, BruteForceKeysGiveSameCounts)
{
    CatalogOptions options;
    options.keys = KeyAlgorithm::BruteForce;
    for (std::size_t n = 1; n <= 7; ++n)
        EXPECT_EQ(enumerate_lattices(n, options).size(), enumerate_lattices(n).size());
}

TEST(Catalog, Deterministic)
{
    auto a = enumerate_lattices(7, jobs(1));
    auto b = enumerate_lattices(7, jobs(4));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.entries[i].key, b.entries[i].key);
        EXPECT_EQ(a.entries[i].lattice, b.entries[i].lattice);
    }
}

TEST(Catalog, SizeErrors)
{
    try {
        enumerate_lattices(0);
        ADD_FAILURE();
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadSize);
    }
    try {
        enumerate_lattices(10);
        ADD_FAILURE();
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(Catalog, Filters)
{
    auto cat = enumerate_lattices(6);
    auto dist = catalog_filter(cat, parse_catalog_filter("distributive"));
    auto mod = catalog_filter(cat, parse_catalog_filter("modular"));
    auto chain = catalog_filter(cat, CatalogFilter::Chain);
    std::size_t d = 0, m = 0;
    for (const auto & e : cat.entries) {
        d += is_distributive(e.lattice);
        m += is_modular(e.lattice);
    }
    EXPECT_EQ(dist.size(), d);
    EXPECT_EQ(mod.size(), m);
    EXPECT_EQ(chain.size(), 1U);
    EXPECT_EQ(dist.provenance.filter, "distributive");
    EXPECT_EQ(dist.provenance.unfiltered_count, cat.size());
    EXPECT_THROW(parse_catalog_filter("planar"), Error);
}

TEST(Catalog, JsonLinesRoundTrip)
{
    auto cat = enumerate_lattices(6);
    std::stringstream buf;
    write_catalog_jsonl(cat, buf);
    std::size_t lines = 0;
    for (std::string line; std::getline(buf, line);)
        ++lines;
    EXPECT_EQ(lines, cat.size() + 1);

    buf.clear();
    buf.seekg(0);
    auto back = read_catalog_jsonl(buf);
    ASSERT_EQ(back.size(), cat.size());
    EXPECT_EQ(back.order, cat.order);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(back.entries[i].key, cat.entries[i].key);
        EXPECT_EQ(back.entries[i].lattice, cat.entries[i].lattice);
    }
}

TEST(Catalog, RejectsCorruptLines)
{
    std::stringstream bad("{\"n\": 2, \"covers\": [[0, 1]], \"canonical_key\": \"2:001\"}\n{oops\n");
    EXPECT_THROW(read_catalog_jsonl(bad), Error);
}

TEST(Catalog, CacheDirectory)
{
    auto dir = std::filesystem::temp_directory_path() / "difflat-catalog-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    CatalogOptions options;
    options.cache_dir = dir;
    auto first = enumerate_lattices(6, options);
    EXPECT_FALSE(first.provenance.from_cache);
    EXPECT_TRUE(std::filesystem::exists(dir / "lattices-6.jsonl"));
    auto second = enumerate_lattices(6, options);
    EXPECT_TRUE(second.provenance.from_cache);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        EXPECT_EQ(first.entries[i].key, second.entries[i].key);
    std::filesystem::remove_all(dir);
}

TEST(Catalog, OptionsFromEnvironment)
{
    ::setenv("DIFFLAT_CACHE_DIR", "/tmp/somewhere", 1);
    auto o = catalog_options_from_env(3);
    EXPECT_EQ(o.jobs, 3U);
    ASSERT_TRUE(o.cache_dir.has_value());
    EXPECT_EQ(o.cache_dir->string(), "/tmp/somewhere");
    ::unsetenv("DIFFLAT_CACHE_DIR");
    EXPECT_FALSE(catalog_options_from_env().cache_dir.has_value());
}
