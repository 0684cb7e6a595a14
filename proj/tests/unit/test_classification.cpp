#include <difflat/classification.hpp>
#include <difflat/error.hpp>
#include <difflat/reference.hpp>

#include <gtest/gtest.h>

#include "testing.hpp"

using namespace difflat;
using difflat::support::catalog_range;

TEST(Classify, OrbitCountMatchesBruteForce)
{
    for (const auto & l : catalog_range(1, 6))
        EXPECT_EQ(classify(enumerate_derivations(l)).size(), reference::derivation_class_count(l)) << canonical_key(l);
    for (std::size_t n = 3; n <= 7; ++n)
        EXPECT_EQ(classify(enumerate_derivations(make_mn(n))).size(), reference::derivation_class_count(make_mn(n)));
}

TEST(Classify, ClassesPartitionTheSet)
{
    for (const auto & l : catalog_range(1, 7)) {
        auto set = enumerate_derivations(l);
        auto cls = classify(set);
        std::vector<int> seen(set.size(), 0);
        for (std::size_t c = 0; c < cls.size(); ++c)
            for (auto m : cls.classes()[c].members) {
                ++seen[m];
                EXPECT_EQ(cls.class_of(m), c);
            }
        EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
        EXPECT_GE(cls.size(), class_lower_bound(l));
    }
}

TEST(Classify, WitnessesConjugate)
{
    for (const auto & l : {make_mn(5), make_mn(6), make_boolean(3)}) {
        auto set = enumerate_derivations(l);
        auto cls = classify(set);
        for (const auto & c : cls.classes()) {
            ASSERT_EQ(c.representative, c.members.front());
            for (std::size_t i = 0; i < c.members.size(); ++i) {
                const auto & f = c.witnesses[i];
                EXPECT_TRUE(is_automorphism(l, f));
                EXPECT_EQ(conjugate(set[c.representative], f), set[c.members[i]].map());
            }
            for (auto i : c.members)
                for (auto j : c.members) {
                    auto w = cls.witness(i, j);
                    ASSERT_TRUE(w.has_value());
                    // f∘d_i = d_j∘f
                    for (Elem x = 0; x < l.size(); ++x)
                        EXPECT_EQ((*w)(set[i](x)), set[j]((*w)(x)));
                }
        }
        if (cls.size() > 1) {
            auto a = cls.classes()[0].members.front(), b = cls.classes()[1].members.front();
            EXPECT_FALSE(cls.witness(a, b).has_value());
        }
    }
}

TEST(Classify, PairwiseIsomorphismAgrees)
{
    auto l = make_mn(5);
    auto set = enumerate_derivations(l);
    auto cls = classify(set);
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = 0; j < set.size(); ++j) {
            auto w = are_isomorphic_derivations(set[i], set[j]);
            EXPECT_EQ(w.has_value(), cls.class_of(i) == cls.class_of(j));
            EXPECT_EQ(mn_class_predicate(set[i], set[j]), cls.class_of(i) == cls.class_of(j));
        }
    EXPECT_THROW(are_isomorphic_derivations(set[0], enumerate_derivations(make_chain(5))[0]), Error);
    auto c = enumerate_derivations(make_chain(4));
    EXPECT_THROW(mn_class_predicate(c[0], c[1]), Error);
}

TEST(Classify, ChainsAreRigid)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        auto set = enumerate_derivations(make_chain(n));
        auto cls = classify(set);
        EXPECT_EQ(cls.size(), set.size());
        EXPECT_EQ(cls.size(), chain_class_count(n));
    }
}

TEST(Classify, MnClassCount)
{
    for (std::size_t n = 3; n <= 9; ++n) {
        auto cls = classify(enumerate_derivations(make_mn(n)));
        EXPECT_EQ(cls.size(), 2 * (n - 1));
        EXPECT_EQ(mn_class_count(n), 2 * (n - 1));
    }
}

TEST(Classify, LowerBound)
{
    EXPECT_EQ(class_lower_bound(make_chain(1)), 1U);
    EXPECT_EQ(class_lower_bound(make_chain(2)), 2U);
    EXPECT_EQ(class_lower_bound(make_chain(3)), 4U);
    EXPECT_EQ(class_lower_bound(make_mn(5)), 5U);
}
