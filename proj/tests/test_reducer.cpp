#include <gtest/gtest.h>

#include <mzr/reducer.hpp>

#include "support/faulhaber_oracle.hpp"
#include "support/generators.hpp"

using namespace mzr;
namespace gen = mzr::testing;

namespace {

MzvCombination combo(std::initializer_list<std::pair<std::vector<long>, Rational>> terms)
{
    MzvCombination c;
    for (const auto &[e, q] : terms) {
        c.add(MzvIndex(e), q);
    }
    return c;
}

bool ends_in_one(const MzvIndex &m)
{
    return !m.empty() && m.entries().back() == 1;
}

} // namespace

TEST(MzvIndex, Admissibility)
{
    EXPECT_NO_THROW(MzvIndex({1, 2}));
    EXPECT_THROW(MzvIndex({1}), std::invalid_argument);
    EXPECT_THROW(MzvIndex({2, 1}), std::invalid_argument);
    EXPECT_THROW(MzvIndex({0, 2}), std::invalid_argument);
    EXPECT_TRUE(MzvIndex{}.empty());
    EXPECT_EQ(MzvIndex({2, 3}).weight(), 5);
}

TEST(MzvCombination, Serialization)
{
    const MzvCombination c = combo({{{}, Rational(1, 6)}, {{2}, Rational(1, 120)}});
    EXPECT_EQ(c.to_json(), R"({"terms":[{"index":[],"coeff":"1/6"},{"index":[2],"coeff":"1/120"}]})");
    EXPECT_EQ(c.to_latex(), R"(\frac{1}{6} + \frac{1}{120}\zeta(2))");
    EXPECT_EQ(c.to_plain(), "1/6 + 1/120*zeta(2)");
    EXPECT_EQ(MzvCombination::constant(Rational(-1, 240)).to_latex(), R"(-\frac{1}{240})");
    EXPECT_EQ(MzvCombination{}.to_json(), R"({"terms":[]})");
    EXPECT_EQ(MzvCombination{}.to_plain(), "0");
    EXPECT_EQ(MzvCombination::from_json(c.to_json()), c);
    EXPECT_THROW(MzvCombination::from_json("{"), std::invalid_argument);
    EXPECT_THROW(MzvCombination::from_json(R"({"terms":[{"index":[1],"coeff":"1"}]})"), std::invalid_argument);
    EXPECT_THROW(MzvCombination::from_json(R"({"terms":[{"index":[2],"coeff":"x"}]})"), std::invalid_argument);
}

TEST(MzvCombination, DropsZeroCoefficients)
{
    MzvCombination c = combo({{{2}, Rational(1)}});
    c.add(MzvIndex{2}, Rational(-1));
    EXPECT_TRUE(c.is_zero());
    c.add(MzvIndex{3}, Rational(0));
    EXPECT_TRUE(c.is_zero());
}

TEST(Reduce, Examples)
{
    Engine engine;
    EXPECT_EQ(engine.value(IndexPoint{1, 2}), combo({{{1, 2}, Rational(1)}}));
    EXPECT_EQ(engine.value(IndexPoint{-1, -2}), MzvCombination::constant(Rational(-1, 240)));
    EXPECT_EQ(engine.value(IndexPoint{2, -3}), combo({{{}, Rational(1, 6)}, {{2}, Rational(1, 120)}}));
    // zeta_2(-2, s) = (zeta(s-3) / 3 - zeta(s-2) / 2 + zeta(s-1) / 6) by the power sum of m^2.
    EXPECT_EQ(engine.value(IndexPoint{-2, 5}),
              combo({{{2}, Rational(1, 3)}, {{3}, Rational(-1, 2)}, {{4}, Rational(1, 6)}}));
    // zeta_2(0, s) = zeta(s-1) - zeta(s).
    EXPECT_EQ(engine.value(IndexPoint{0, -3}), MzvCombination::constant(Rational(-1, 120)));
    EXPECT_EQ(engine.value(IndexPoint{0, 3}), combo({{{2}, Rational(1)}, {{3}, Rational(-1)}}));
    EXPECT_EQ(engine.value(IndexPoint{-3}), MzvCombination::constant(Rational(1, 120)));
}

TEST(Reduce, SingularInputCarriesVerdict)
{
    Engine engine;
    try {
        engine.reduce(IndexPoint{-1, -1});
        FAIL() << "expected SingularInput";
    } catch (const SingularInput &e) {
        EXPECT_EQ(e.verdict().to_json(), R"({"status":"singular","condition":"b","k":2})");
        EXPECT_EQ(e.point(), (IndexPoint{-1, -1}));
    }
    EXPECT_THROW(engine.reduce(IndexPoint{1}), SingularInput);
    EXPECT_THROW(engine.reduce(IndexPoint{1, -2, 4}), SingularInput);
}

TEST(Reduce, ExplicitPivot)
{
    Engine engine;
    const IndexPoint p{-1, 6, -1};
    EXPECT_EQ(engine.value(p, PivotStrategy::at(3)), engine.value(p, PivotStrategy::rightmost()));
    EXPECT_NO_THROW(engine.value(p, PivotStrategy::at(1)));
    EXPECT_THROW(engine.value(p, PivotStrategy::at(2)), std::invalid_argument);
    EXPECT_THROW(engine.value(p, PivotStrategy::at(4)), std::invalid_argument);
}

TEST(Reduce, RecurrenceChildrenPrunesZeroMultipliers)
{
    // At (2, -3) the zeta(1)-child would carry C(3,2) zeta(-2) = 0.
    const auto children = recurrence_children(IndexPoint{2, -3}, 2);
    for (const auto &[child, mult] : children) {
        EXPECT_FALSE(mult.is_zero());
        EXPECT_NE(child, (IndexPoint{1}));
    }
    EXPECT_THROW(recurrence_children(IndexPoint{2}, 1), std::invalid_argument);
    EXPECT_THROW(recurrence_children(IndexPoint{2, 3}, 1), std::invalid_argument);
}

TEST(Reduce, TraceReplaysExactly)
{
    Engine engine;
    for (int i = 0; i < 60; ++i) {
        const IndexPoint p = gen::mixed_regular_point(gen::uniform(2, 4), -4, 6);
        const Reduction r = engine.reduce(p, i % 2 ? PivotStrategy::leftmost() : PivotStrategy::rightmost());
        EXPECT_EQ(r.trace.replay(), r.combination) << p;
        ASSERT_FALSE(r.trace.steps.empty());
        EXPECT_EQ(r.trace.steps.back().point, p);
    }
}

TEST(Reduce, TraceJsonListsSteps)
{
    Engine engine;
    const Reduction r = engine.reduce(IndexPoint{2, -3});
    const std::string json = r.trace.to_json();
    EXPECT_NE(json.find(R"("point":[2,-3],"pivot":2)"), std::string::npos) << json;
    EXPECT_NE(json.find(R"("multiplier":"1/120")"), std::string::npos) << json;
}

TEST(Reduce, MemoIsKeyedByStrategy)
{
    Engine engine;
    engine.value(IndexPoint{-1, 6, -1}, PivotStrategy::leftmost());
    const std::size_t after_left = engine.memo_size();
    engine.value(IndexPoint{-1, 6, -1}, PivotStrategy::rightmost());
    EXPECT_GT(engine.memo_size(), after_left);
    engine.clear();
    EXPECT_EQ(engine.memo_size(), 0u);
}

TEST(Reduce, JsonRoundTripOfOutputs)
{
    Engine engine;
    for (long a = -4; a <= 5; ++a) {
        for (long b = -4; b <= 5; ++b) {
            for (long c = -4; c <= 5; ++c) {
                const IndexPoint p{a, b, c};
                if (!classify(p).is_regular()) {
                    continue;
                }
                const MzvCombination &v = engine.value(p);
                ASSERT_EQ(MzvCombination::from_json(v.to_json()), v) << p;
            }
        }
    }
}

TEST(Reduce, BoundAndNoZetaOne)
{
    Engine engine;
    std::size_t checked = 0;
    for (std::size_t depth = 2; depth <= 4; ++depth) {
        for (int i = 0; i < 80; ++i) {
            const IndexPoint p = gen::mixed_regular_point(depth, -4, 5);
            for (auto s : {PivotStrategy::rightmost(), PivotStrategy::leftmost()}) {
                const MzvCombination &v = engine.value(p, s);
                EXPECT_TRUE(bound_check(p, v)) << p;
                for (const auto &[m, c] : v.terms()) {
                    EXPECT_FALSE(ends_in_one(m)) << p;
                }
                ++checked;
            }
        }
    }
    EXPECT_EQ(checked, 480u);
}

TEST(Reduce, AgreesWithPowerSumOracle)
{
    Engine engine;
    std::size_t compared = 0;
    auto check = [&](const std::vector<long> &n) {
        const IndexPoint p(n);
        if (!classify(p).is_regular()) {
            return;
        }
        const auto oracle = gen::faulhaber_value(n);
        if (!oracle) {
            return;
        }
        ++compared;
        EXPECT_EQ(engine.value(p, PivotStrategy::rightmost()), *oracle) << p;
        if (n.size() == 2) {
            EXPECT_EQ(engine.value(p, PivotStrategy::leftmost()), *oracle) << p;
        }
    };
    for (long a = -8; a <= 8; ++a) {
        for (long b = -8; b <= 8; ++b) {
            check({a, b});
        }
    }
    for (long a = -5; a <= 0; ++a) {
        for (long b = -5; b <= 6; ++b) {
            for (long c = -5; c <= 6; ++c) {
                check({a, b, c});
            }
        }
    }
    for (long a = -3; a <= 0; ++a) {
        for (long b = -3; b <= 0; ++b) {
            for (long c = -3; c <= 5; ++c) {
                for (long d = 2; d <= 5; ++d) {
                    check({a, b, c, d});
                }
            }
        }
    }
    EXPECT_GT(compared, 300u);
}

TEST(BoundCheck, Examples)
{
    const MzvCombination listed = combo({{{2}, Rational(1, 3)}, {{3}, Rational(-3, 2)}, {{4}, Rational(-1, 6)}});
    EXPECT_TRUE(bound_check(IndexPoint{-2, 5}, listed));
    EXPECT_TRUE(bound_check(IndexPoint{-1, -2}, MzvCombination::constant(Rational(-1, 240))));
    EXPECT_FALSE(bound_check(IndexPoint{-2, 5}, combo({{{2, 3}, Rational(1)}})));
    EXPECT_FALSE(bound_check(IndexPoint{-1, -2}, combo({{{2}, Rational(1)}})));
}

TEST(StuffleExpand, Examples)
{
    EXPECT_EQ(stuffle_expand(MzvIndex{2}, MzvIndex{3}),
              combo({{{2, 3}, Rational(1)}, {{3, 2}, Rational(1)}, {{5}, Rational(1)}}));
    EXPECT_EQ(stuffle_expand(MzvIndex{2}, MzvIndex{2}), combo({{{2, 2}, Rational(2)}, {{4}, Rational(1)}}));
    EXPECT_EQ(stuffle_expand(MzvIndex{}, MzvIndex{3}), combo({{{3}, Rational(1)}}));
    EXPECT_EQ(stuffle_expand(MzvIndex{1, 2}, MzvIndex{2}),
              combo({{{1, 2, 2}, Rational(2)}, {{2, 1, 2}, Rational(1)}, {{3, 2}, Rational(1)}, {{1, 4}, Rational(1)}}));
}
