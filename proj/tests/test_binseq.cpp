#include "ppg/binseq.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ppg;

namespace {

FinSeq F(const char* s) { return FinSeq::parse(s); }
EpSeq E(const char* s) { return EpSeq::parse(s); }

} // namespace

TEST(SeqLess, Examples)
{
    EXPECT_TRUE(seq_less(F("00"), F("01")));
    EXPECT_TRUE(seq_less(F("01"), F("0")));
    EXPECT_FALSE(seq_less(F("1"), F("10")));
    EXPECT_TRUE(seq_less(F("10"), F("1")));
}

TEST(SeqLess, SortsLeavesLeftToRight)
{
    PrefixSet p = validate_prefix_set({F("1"), F("011"), F("00"), F("010")});
    std::vector<std::string> got;
    for (const auto& l : p.leaves())
        got.push_back(l.bits());
    EXPECT_EQ(got, (std::vector<std::string>{"00", "010", "011", "1"}));
}

TEST(Independent, Examples)
{
    EXPECT_TRUE(is_independent(F("01"), F("10")));
    EXPECT_TRUE(is_independent(F("10"), F("10")));
    EXPECT_FALSE(is_independent(F("1"), F("10")));
}

TEST(Dominates, Examples)
{
    EXPECT_TRUE(dominates(F("110"), {F("10"), F("11")}));
    EXPECT_FALSE(dominates(F("10"), {F("100")}));
    EXPECT_TRUE(dominates(F("e"), {}));
}

TEST(Consecutiveness, Examples)
{
    EXPECT_EQ(consecutiveness(F("011"), F("100")), Consecutiveness::consecutive);
    EXPECT_EQ(consecutiveness(F("00"), F("1")), Consecutiveness::cyclically_consecutive_only);
    EXPECT_EQ(consecutiveness(F("01"), F("00")), Consecutiveness::neither);
    EXPECT_THROW(consecutiveness(F("e"), F("1")), Error);
}

TEST(Consecutiveness, ConsecutiveImpliesIndependent)
{
    for (int a = 1; a < 64; ++a)
        for (int b = 1; b < 64; ++b) {
            auto bits = [](int v) {
                std::string s;
                for (; v > 1; v >>= 1)
                    s.insert(s.begin(), v & 1 ? '1' : '0');
                return s;
            };
            std::string sa = bits(a), sb = bits(b);
            if (sa.empty() || sb.empty())
                continue;
            if (consecutiveness(FinSeq(sa), FinSeq(sb)) == Consecutiveness::consecutive)
                EXPECT_TRUE(is_independent(FinSeq(sa), FinSeq(sb))) << sa << " " << sb;
        }
}

TEST(EpSeq, Canonical)
{
    EXPECT_EQ(E("0101(01)"), E("(01)"));
    EXPECT_EQ(E("1(0101)").str(), "(10)");
    EXPECT_EQ(E("0(0110)").str(), "(0011)");
    EXPECT_EQ(E("00(0)").str(), "(0)");
    EXPECT_EQ(E("01(1)").str(), "0(1)");
    EXPECT_EQ(E("1(01)").str(), "(10)");
}

TEST(EpSeq, CanonicalRespectsPointEquality)
{
    std::mt19937 rng(7);
    auto rnd = [&](std::size_t maxlen, std::size_t minlen) {
        std::size_t n = minlen + rng() % (maxlen - minlen + 1);
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            s.push_back(rng() % 2 ? '1' : '0');
        return FinSeq(s);
    };
    for (int it = 0; it < 2000; ++it) {
        EpSeq a(rnd(5, 0), rnd(3, 1)), b(rnd(5, 0), rnd(3, 1));
        std::size_t n = a.prefix().size() + b.prefix().size() +
                        2 * std::lcm(a.period().size(), b.period().size());
        EXPECT_EQ(a == b, a.digits(n) == b.digits(n));
        EXPECT_EQ(EpSeq(a.prefix(), a.period()), a);
    }
}

TEST(TailEquivalent, Examples)
{
    EXPECT_TRUE(tail_equivalent(E("0(1)"), E("(1)")));
    EXPECT_FALSE(tail_equivalent(E("(0)"), E("(1)")));
    EXPECT_TRUE(tail_equivalent(E("(01)"), E("1(10)")));
    EXPECT_EQ(E("(01)").digits(8), E("1(10)").digits(10).substr(2));
}

TEST(TailEquivalent, IsEquivalenceOnSample)
{
    auto pts = enumerate_points(5);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            EXPECT_EQ(tail_equivalent(a, b), tail_equivalent(b, a));
            if (!tail_equivalent(a, b))
                continue;
            for (std::size_t k = 0; k < pts.size(); k += 7)
                if (tail_equivalent(b, pts[k]))
                    EXPECT_TRUE(tail_equivalent(a, pts[k]));
        }
}

TEST(RationalPoint, Examples)
{
    EXPECT_TRUE(is_rational_point(E("10(0)")));
    EXPECT_FALSE(is_rational_point(E("(01)")));
    EXPECT_TRUE(is_rational_point(E("(1)")));
}

TEST(PrefixSet, Validation)
{
    EXPECT_EQ(validate_prefix_set({F("00"), F("01"), F("1")}).size(), 3u);
    EXPECT_EQ(validate_prefix_set({F("1"), F("0")})[0], F("0"));
    try {
        validate_prefix_set({F("00"), F("1")});
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("01"), std::string::npos);
    }
    EXPECT_THROW(validate_prefix_set({F("0"), F("00"), F("01"), F("1")}), Error);
    EXPECT_THROW(validate_prefix_set({F("0"), F("1"), F("1")}), Error);
}

TEST(PrefixSet, TreeWithLeaves)
{
    PrefixSet p = tree_with_leaves({F("10"), F("110")});
    std::vector<std::string> got;
    for (const auto& l : p.leaves())
        got.push_back(l.bits());
    EXPECT_EQ(got, (std::vector<std::string>{"0", "10", "110", "111"}));
    EXPECT_THROW(tree_with_leaves({F("1"), F("10")}), Error);
    EXPECT_THROW(tree_with_leaves({F("10"), F("1")}), Error);
}

TEST(Points, Enumerate)
{
    auto pts = enumerate_points(3);
    for (const auto& p : pts)
        EXPECT_LE(p.description_size(), 3u);
    EXPECT_NE(std::find(pts.begin(), pts.end(), E("1(01)")), pts.end());
}
