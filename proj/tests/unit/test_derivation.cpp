#include <difflat/derivation.hpp>
#include <difflat/error.hpp>

#include <gtest/gtest.h>

#include "testing.hpp"

using namespace difflat;
using difflat::support::catalog_range;
using difflat::support::image_vec;

namespace {
auto expect_error(ErrorKind kind, auto && fn)
{
    try {
        fn();
        ADD_FAILURE() << "no error raised";
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

// B_8 ids are bitmasks over the atoms a=1, b=2, c=4.
constexpr Elem a = 1, u = 3, v = 5;
} // namespace

TEST(OperatorMap, ValidatesShape)
{
    auto l = make_chain(3);
    expect_error(ErrorKind::BadInput, [&] { OperatorMap(l, {0, 1}); });
    expect_error(ErrorKind::BadInput, [&] { OperatorMap(l, {0, 1, 3}); });
    EXPECT_TRUE(OperatorMap::zero(l).precedes(OperatorMap::identity(l)));
    EXPECT_FALSE(OperatorMap::one(l).precedes(OperatorMap::identity(l)));
}

TEST(Derivation, ZeroAndIdentity)
{
    for (const auto & l : catalog_range(1, 6)) {
        EXPECT_TRUE(is_derivation(OperatorMap::zero(l)));
        EXPECT_TRUE(is_derivation(OperatorMap::identity(l)));
        EXPECT_EQ(is_derivation(OperatorMap::one(l)), l.size() == 1);
    }
}

TEST(Derivation, ViolationsNameTheAxiom)
{
    auto l = make_chain(3);
    auto v1 = find_violation(OperatorMap(l, {1, 1, 2}));
    ASSERT_TRUE(v1);
    EXPECT_EQ(v1->axiom, Violation::Axiom::ZeroFixed);
    auto v2 = find_violation(OperatorMap(l, {0, 2, 2}));
    ASSERT_TRUE(v2);
    EXPECT_EQ(v2->axiom, Violation::Axiom::Contraction);
    EXPECT_EQ(v2->x, 1U);

    auto m4 = make_mn(4);
    // Contracting but not Leibniz: b1 fixed, top sent to b2.
    auto v3 = find_violation(OperatorMap(m4, {0, 1, 0, 2}));
    ASSERT_TRUE(v3);
    EXPECT_EQ(v3->axiom, Violation::Axiom::Leibniz);
    EXPECT_FALSE(describe(*v3, m4).empty());

    try {
        Derivation::from(OperatorMap(l, {1, 1, 2}));
        ADD_FAILURE();
    } catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotADerivation);
        EXPECT_NE(std::string(e.what()).find("d(0)"), std::string::npos);
    }
}

TEST(Derivation, CheckerMatchesLeibnizOnAllMaps)
{
    for (const auto & l : catalog_range(1, 5)) {
        auto n = l.size();
        std::vector<Elem> img(n, 0);
        while (true) {
            ASSERT_EQ(is_derivation(OperatorMap(l, img)), support::leibniz(l, img));
            ASSERT_EQ(find_violation(OperatorMap(l, img)).has_value(), ! support::leibniz(l, img));
            std::size_t i = 0;
            while (i < n && ++img[i] == n)
                img[i++] = 0;
            if (i == n)
                break;
        }
    }
}

TEST(Derivation, CachedData)
{
    auto l = make_chain(4);
    auto d = Derivation::from_image(l, {0, 1, 2, 1});
    EXPECT_EQ(image_vec(d.fix_points()), (std::vector<Elem>{0, 1, 2}));
    EXPECT_EQ(d.top_value(), 1U);
    EXPECT_FALSE(d.isotone());
    auto e = Derivation::from_image(l, {0, 1, 1, 1});
    EXPECT_TRUE(e.isotone());
    EXPECT_LT(e, d);
    EXPECT_NE(DerivationHash{}(d), DerivationHash{}(e));
}

TEST(Families, Inner)
{
    for (const auto & l : catalog_range(1, 6))
        for (Elem w = 0; w < l.size(); ++w) {
            auto d = inner(l, w);
            for (Elem x = 0; x < l.size(); ++x)
                EXPECT_EQ(d(x), l.meet(x, w));
            EXPECT_TRUE(is_inner(d));
            EXPECT_TRUE(is_isotone(d));
            EXPECT_TRUE(is_meet_translation(d.map()));
            EXPECT_TRUE(is_meet_preserving(d.map()));
        }
}

TEST(Families, ChiAndEta)
{
    for (const auto & l : catalog_range(2, 6))
        for (Elem w = 0; w < l.size(); ++w) {
            auto c = chi(l, w);
            for (Elem x = 0; x < l.size(); ++x)
                EXPECT_EQ(c(x), x == l.top() ? w : x);
            auto e = eta(l, w);
            for (Elem x = 0; x < l.size(); ++x)
                EXPECT_EQ(e(x), l.leq(w, x) ? w : x);
        }
}

TEST(Families, LambdaCutOnBoolean)
{
    auto b8 = make_boolean(3);
    for (Elem e : {1U, 2U, 4U})
        EXPECT_FALSE(lambda_cut(b8, e).has_value());
    for (Elem e : {3U, 5U, 6U}) {
        auto d = lambda_cut(b8, e);
        ASSERT_TRUE(d.has_value());
        for (Elem x = 0; x < 8; ++x)
            EXPECT_EQ((*d)(x), b8.leq(x, e) ? x : 0U);
    }
}

TEST(Families, LambdaCutConditionMatchesChecker)
{
    for (const auto & l : catalog_range(1, 7))
        for (Elem w = 0; w < l.size(); ++w)
            EXPECT_EQ(lambda_cut_condition(l, w), support::leibniz(l, image_vec(lambda_cut_map(l, w).image())));
}

TEST(Families, LambdaBand)
{
    auto c5 = make_chain(5);
    for (Elem hi = 0; hi < 5; ++hi)
        for (Elem lo = 0; lo <= hi; ++lo) {
            auto d = lambda_band(c5, lo, hi);
            for (Elem x = 0; x < 5; ++x)
                EXPECT_EQ(d(x), x <= hi ? x : lo);
        }
    expect_error(ErrorKind::BadPair, [&] { lambda_band(c5, 3, 1); });
    expect_error(ErrorKind::NotAChain, [] { lambda_band(make_n5(), 0, 1); });
}

TEST(Families, LowerTop)
{
    auto l = make_mn(5);
    auto id = Derivation::from(OperatorMap::identity(l));
    for (Elem w = 0; w < l.size(); ++w) {
        auto d = lower_top(id, w);
        EXPECT_EQ(d.top_value(), w);
        EXPECT_EQ(d, chi(l, w));
    }
    auto d1 = inner(l, 1);
    expect_error(ErrorKind::BadBound, [&] { lower_top(d1, 2); });
    EXPECT_EQ(lower_top(d1, 0).top_value(), 0U);
}

TEST(Predicates, B8CutComposition)
{
    auto b8 = make_boolean(3);
    auto lu = lambda_cut_map(b8, u), lv = lambda_cut_map(b8, v), la = lambda_cut_map(b8, a);
    EXPECT_TRUE(is_derivation(lu));
    EXPECT_TRUE(is_derivation(lv));
    EXPECT_FALSE(is_derivation(la));
    EXPECT_FALSE(is_join_preserving(lu));
}

TEST(Predicates, IsotoneEqualsInnerEverywhere)
{
    for (const auto & l : catalog_range(1, 6)) {
        auto n = l.size();
        std::vector<Elem> img(n, 0);
        while (true) {
            OperatorMap op(l, img);
            if (auto d = Derivation::validate(op)) {
                bool monotone = true;
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y)
                        if (l.leq(x, y) && ! l.leq(img[x], img[y]))
                            monotone = false;
                EXPECT_EQ(is_isotone(*d), monotone);
                EXPECT_EQ(is_inner(*d), monotone);
                EXPECT_EQ(is_meet_translation(op), monotone);
            }
            std::size_t i = 0;
            while (i < n && ++img[i] == n)
                img[i++] = 0;
            if (i == n)
                break;
        }
    }
}
