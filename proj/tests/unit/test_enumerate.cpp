#include <difflat/enumerate.hpp>
#include <difflat/error.hpp>
#include <difflat/reference.hpp>

#include <gtest/gtest.h>

#include "testing.hpp"

using namespace difflat;
using difflat::support::catalog_range;
using difflat::support::image_vec;

namespace {
auto images(const DerivationSet & set) -> std::vector<std::vector<Elem>>
{
    std::vector<std::vector<Elem>> out;
    for (const auto & d : set)
        out.push_back(image_vec(d.image()));
    return out;
}

auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST(Enumerate, MatchesExhaustiveSearch)
{
    for (const auto & l : catalog_range(1, 6))
        ASSERT_EQ(images(enumerate_derivations(l)), reference::derivations(l)) << canonical_key(l);
}

TEST(Enumerate, MatchesExhaustiveSearchOnNamedLattices)
{
    for (const auto & l : {make_mn(6), make_mn(7), make_n5(), make_chain(7)})
        EXPECT_EQ(images(enumerate_derivations(l)), reference::derivations(l));
}

TEST(Enumerate, IndependentOfLabeling)
{
    std::mt19937 rng(3);
    for (const auto & l : catalog_range(2, 7)) {
        auto base = enumerate_derivations(l).size();
        auto r = relabel(l, support::random_permutation(l.size(), rng));
        EXPECT_EQ(enumerate_derivations(r).size(), base);
    }
}

TEST(Enumerate, ThreadCountDoesNotMatter)
{
    for (const auto & l : catalog_range(6, 7)) {
        auto one = enumerate_derivations(l, {1});
        EXPECT_EQ(enumerate_derivations(l, {4}), one);
        EXPECT_EQ(enumerate_derivations(l, {3}), one);
    }
    EXPECT_EQ(enumerate_derivations(make_boolean(4), {8}), enumerate_derivations(make_boolean(4), {1}));
}

TEST(Enumerate, SetLookup)
{
    auto set = enumerate_derivations(make_chain(4));
    ASSERT_EQ(set.size(), 8U);
    std::vector<Elem> x5{0, 1, 2, 1}, bad{0, 2, 2, 2};
    EXPECT_TRUE(set.contains(x5));
    EXPECT_FALSE(set.contains(bad));
    EXPECT_EQ(set.isotone_count(), 4U);
    EXPECT_TRUE(std::is_sorted(set.begin(), set.end()));
}

TEST(ChainFast, AgreesWithGeneric)
{
    for (std::size_t n = 1; n <= 10; ++n) {
        auto l = make_chain(n);
        auto fast = enumerate_chain_fast(l);
        EXPECT_EQ(fast, enumerate_derivations(l));
        EXPECT_EQ(fast.size(), std::uint64_t{1} << (n - 1));
        EXPECT_EQ(chain_derivation_count(n), std::uint64_t{1} << (n - 1));
    }
    EXPECT_THROW(enumerate_chain_fast(make_mn(4)), Error);
}

TEST(MnFast, AgreesWithGeneric)
{
    for (std::size_t n = 3; n <= 9; ++n) {
        auto l = make_mn(n);
        auto fast = enumerate_mn_fast(l);
        EXPECT_EQ(fast, enumerate_derivations(l));
        EXPECT_EQ(fast, enumerate_mn_fast(n));
        std::uint64_t formula = 2;
        for (std::uint64_t k = 1; k <= n - 2; ++k)
            formula += (k + 1) * binomial(n - 2, k);
        EXPECT_EQ(fast.size(), formula);
        EXPECT_EQ(mn_derivation_count(n), formula);
    }
    EXPECT_FALSE(is_mn_shape(make_n5()));
    EXPECT_TRUE(is_mn_shape(make_mn(6)));
    EXPECT_THROW(enumerate_mn_fast(make_n5()), Error);
}

TEST(IsotoneCount, MatchesBruteForce)
{
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::size_t l = 1; l <= 6; ++l)
            EXPECT_EQ(isotone_count_formula(k, l), reference::monotone_map_count(k, l)) << k << "," << l;
}

TEST(IsotoneCount, Errors)
{
    try {
        isotone_count_formula(0, 3);
        ADD_FAILURE();
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadSize);
    }
    try {
        isotone_count_formula(200, 200);
        ADD_FAILURE();
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::Overflow);
    }
    EXPECT_EQ(isotone_count_formula(30, 30), binomial(59, 30));
}

TEST(Enumerate, IsotoneCountIsOrder)
{
    for (const auto & l : catalog_range(1, 7))
        EXPECT_EQ(enumerate_derivations(l).isotone_count(), l.size());
}
