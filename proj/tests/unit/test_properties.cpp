// Randomised properties. Each test draws from a fixed-seed std::mt19937 so
// failures reproduce; the seed is printed on failure.
#include <difflat/classification.hpp>
#include <difflat/derposet.hpp>

#include <gtest/gtest.h>

#include "testing.hpp"

#include <set>

using namespace difflat;
using difflat::support::catalog_range;
using difflat::support::image_vec;

namespace {
constexpr int rounds = 60;

auto random_lattice(std::mt19937 & rng, std::size_t lo, std::size_t hi) -> FinLattice
{
    static const auto pool = catalog_range(1, 8);
    std::vector<const FinLattice *> fit;
    for (const auto & l : pool)
        if (l.size() >= lo && l.size() <= hi)
            fit.push_back(&l);
    const auto & l = *fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
    return relabel(l, support::random_permutation(l.size(), rng));
}

auto random_contracting_map(const FinLattice & l, std::mt19937 & rng) -> std::vector<Elem>
{
    std::vector<Elem> img(l.size());
    for (Elem x = 0; x < l.size(); ++x) {
        std::vector<Elem> below;
        for (Elem y = 0; y < l.size(); ++y)
            if (l.leq(y, x))
                below.push_back(y);
        img[x] = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    }
    return img;
}
} // namespace

TEST(Properties, CountInvariantUnderRelabeling)
{
    std::mt19937 rng(101);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 2, 8);
        auto f = support::random_permutation(l.size(), rng);
        auto r = relabel(l, f);
        auto a = enumerate_derivations(l), b = enumerate_derivations(r);
        ASSERT_EQ(a.size(), b.size()) << canonical_key(l);
        // Transport every derivation along f.
        for (const auto & d : a) {
            std::vector<Elem> moved(l.size());
            for (Elem x = 0; x < l.size(); ++x)
                moved[f(x)] = f(d(x));
            ASSERT_TRUE(b.contains(moved));
        }
        EXPECT_EQ(canonical_key(l), canonical_key(r));
        EXPECT_EQ(classify(a).size(), classify(b).size());
    }
}

TEST(Properties, DerivationsAreIdempotentContractions)
{
    std::mt19937 rng(202);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 1, 8);
        for (const auto & d : enumerate_derivations(l)) {
            std::vector<Elem> fixed;
            std::set<Elem> image;
            for (Elem x = 0; x < l.size(); ++x) {
                ASSERT_TRUE(l.leq(d(x), x));
                ASSERT_EQ(d(d(x)), d(x));
                image.insert(d(x));
                if (d(x) == x)
                    fixed.push_back(x);
            }
            ASSERT_EQ(fixed, std::vector<Elem>(image.begin(), image.end()));
            ASSERT_EQ(image_vec(d.fix_points()), fixed);
        }
    }
}

TEST(Properties, RandomMapsAgreeWithLeibniz)
{
    std::mt19937 rng(303);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 2, 8);
        auto set = enumerate_derivations(l);
        for (int k = 0; k < 200; ++k) {
            auto img = random_contracting_map(l, rng);
            bool ok = support::leibniz(l, img);
            ASSERT_EQ(is_derivation(OperatorMap(l, img)), ok);
            ASSERT_EQ(set.contains(img), ok);
        }
    }
}

TEST(Properties, LoweringTheTopStaysInside)
{
    std::mt19937 rng(404);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 2, 8);
        auto set = enumerate_derivations(l);
        const auto & d = set[std::uniform_int_distribution<std::size_t>(0, set.size() - 1)(rng)];
        for (Elem w = 0; w < l.size(); ++w) {
            if (l.leq(w, d.top_value())) {
                ASSERT_TRUE(set.contains(lower_top(d, w).image()));
            }
        }
    }
}

TEST(Properties, FixOfMeetIsIntersection)
{
    std::mt19937 rng(505);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 2, 8);
        auto set = enumerate_derivations(l);
        std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
        for (int k = 0; k < 20; ++k) {
            const auto & d = set[pick(rng)];
            const auto & e = set[pick(rng)];
            auto m = pointwise_meet(d.map(), e.map());
            for (Elem x = 0; x < l.size(); ++x)
                ASSERT_EQ(m(x) == x, d(x) == x && e(x) == x);
        }
    }
}

TEST(Properties, DualIsInvolution)
{
    std::mt19937 rng(606);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 1, 8);
        auto dd = dual(dual(l));
        EXPECT_EQ(canonical_key(dd), canonical_key(l));
        auto d = dual(l);
        for (Elem x = 0; x < l.size(); ++x)
            for (Elem y = 0; y < l.size(); ++y)
                ASSERT_EQ(d.meet(x, y), l.join(x, y));
    }
}

TEST(Properties, ProductsOfSmallLattices)
{
    std::mt19937 rng(707);
    for (int i = 0; i < 25; ++i) {
        auto a = random_lattice(rng, 1, 5), b = random_lattice(rng, 1, 2);
        auto p = product(a, b);
        ASSERT_EQ(p.size(), a.size() * b.size());
        EXPECT_EQ(p.is_distributive(), a.is_distributive() && b.is_distributive());
        auto set = enumerate_derivations(p);
        EXPECT_EQ(set.isotone_count(), p.size());
        EXPECT_TRUE(chi_sublattice_check(set).ok());
    }
}

TEST(Properties, ClassesRespectInvariants)
{
    std::mt19937 rng(808);
    for (int i = 0; i < rounds; ++i) {
        auto l = random_lattice(rng, 1, 7);
        auto set = enumerate_derivations(l);
        auto cls = classify(set);
        for (const auto & c : cls.classes())
            for (auto m : c.members) {
                EXPECT_EQ(set[m].fix_points().size(), c.invariant.fix_size);
                EXPECT_EQ(set[m].top_value() == l.bottom(), c.invariant.top_is_zero);
            }
    }
}
