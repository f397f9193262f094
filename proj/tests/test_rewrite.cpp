#include "ppg/eval.hpp"
#include "ppg/rewrite.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace ppg;
using ppg::testing::random_s_word;
using ppg::testing::random_w;

namespace {

FinSeq F(const char* s) { return FinSeq::parse(s); }
GroupWord W(const char* s) { return GroupWord::parse(s); }

const std::vector<EpSeq>& points6()
{
    static const std::vector<EpSeq> pts = enumerate_points(6);
    return pts;
}

bool same(const GroupWord& a, const GroupWord& b)
{
    CompiledWord ca(a), cb(b);
    for (const auto& xi : points6())
        if (ca(xi) != cb(xi))
            return false;
    return true;
}

SStandardForm S(const char* w) { return to_standard_form(W(w)); }

} // namespace

TEST(SStandardForm, Metrics)
{
    SMetrics m = metrics(S("w_{10,110}"));
    EXPECT_EQ(m.depth, 2u);
    EXPECT_EQ(m.length, 1);
    EXPECT_EQ(m.unevenness, 0);
    EXPECT_TRUE(m.balanced);

    m = metrics(S("w_{01,10}"));
    EXPECT_EQ(m.unevenness, 1);
    EXPECT_FALSE(m.balanced);

    m = metrics(SStandardForm());
    EXPECT_FALSE(m.depth.has_value());
    EXPECT_EQ(m.length, 0);
    EXPECT_TRUE(m.balanced);
}

TEST(SStandardForm, ConstructorValidates)
{
    EXPECT_THROW(SStandardForm(TElem(), {{F("10"), F("110"), 0}}), Error);
    EXPECT_THROW(SStandardForm(TElem(), {{F("10"), F("110"), 1}, {F("100"), F("01"), 1}}), Error);
    EXPECT_NO_THROW(SStandardForm(TElem(), {{F("100"), F("01"), 1}, {F("10"), F("110"), 1}}));
}

TEST(ToStandardForm, Examples)
{
    SStandardForm a = S("w_{10,110} x");
    EXPECT_EQ(a.head, TElem::x(FinSeq()));
    ASSERT_EQ(a.factors.size(), 1u);
    EXPECT_EQ(a.factors[0], (WFactor{F("110"), F("1110"), 1}));

    SStandardForm b = S("x");
    EXPECT_EQ(b.head, TElem::x(FinSeq()));
    EXPECT_TRUE(b.factors.empty());

    SStandardForm c = S("w_{10,110}");
    EXPECT_TRUE(c.head.is_identity());
    EXPECT_EQ(c.str(), "w_{10,110}");

    EXPECT_THROW(S("y_10"), Error);
}

TEST(ToStandardForm, RandomWordsAreEquivalent)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        GroupWord w = random_s_word(rng, 1 + rng() % 6, 4);
        SStandardForm f = to_standard_form(w);
        EXPECT_NO_THROW(f.validate());
        ASSERT_TRUE(same(w, f.word())) << w.str() << " -> " << f.str();
    }
}

TEST(ApplyMove, Examples)
{
    SStandardForm a = apply_move(S("w_{10,110}"), {MoveKind::amplification, 0, Side::first, {}});
    EXPECT_EQ(a.head, TElem::x(F("10")));
    EXPECT_EQ(a.str(), "x_10 w_{100,1010} w_{1011,110}");
    EXPECT_TRUE(same(a.word(), W("w_{10,110}")));

    SStandardForm c(TElem(), {{F("00"), F("01"), 1}, {F("01"), F("11"), 1}});
    EXPECT_EQ(apply_move(c, {MoveKind::cancellation, 0, Side::first, {}}).str(), "w_{00,11}");

    SStandardForm d(TElem(), {{F("100"), F("01"), 1}, {F("10"), F("110"), 1}});
    EXPECT_THROW(apply_move(d, {MoveKind::commuting, 0, Side::first, {}}), Error);
    EXPECT_THROW(apply_move(d, {MoveKind::amplification, 1, Side::first, {}}), Error);

    SStandardForm r = apply_move(S("w_{10,110}"), {MoveKind::rearrangement, 0, Side::first, Letter::x(FinSeq())});
    EXPECT_EQ(r.str(), S("w_{10,110} x").str());
}

TEST(ApplyMove, RandomMovesAreSound)
{
    std::mt19937 rng(5);
    int applied = 0;
    for (int i = 0; i < 200; ++i) {
        SStandardForm f = to_standard_form(random_s_word(rng, 1 + rng() % 5, 3, false));
        for (int step = 0; step < 6 && !f.factors.empty(); ++step) {
            Move m;
            m.kind = static_cast<MoveKind>(1 + rng() % 5);
            m.index = rng() % f.factors.size();
            m.side = rng() % 2 ? Side::first : Side::second;
            SStandardForm g;
            try {
                g = apply_move(f, m);
            } catch (const Error&) {
                continue;
            }
            ++applied;
            ASSERT_TRUE(same(f.word(), g.word())) << f.str() << " " << m.str() << " -> " << g.str();
            if (m.kind == MoveKind::ar || m.kind == MoveKind::cancellation)
                EXPECT_LE(metrics(g).unevenness, metrics(f).unevenness);
            f = g;
        }
    }
    EXPECT_GT(applied, 100);
}

TEST(Classify, Examples)
{
    Classification a = classify(S("w_{10,110}"), 0, Side::first);
    EXPECT_FALSE(a.sheltered);
    EXPECT_TRUE(a.free);

    SStandardForm d(TElem(), {{F("100"), F("1010"), 1}, {F("10"), F("110"), 1}});
    Classification b = classify(d, 1, Side::first);
    EXPECT_FALSE(b.free);
    ASSERT_TRUE(b.barrier.has_value());
    EXPECT_EQ(b.barrier->first, 0u);
    EXPECT_EQ(b.barrier->second, Side::first);
    EXPECT_TRUE(classify(d, 1, Side::second).free);

    SStandardForm e(TElem(), {{F("100"), F("01"), 1}, {F("101"), F("00"), 1}, {F("10"), F("11"), 1}});
    EXPECT_TRUE(classify(e, 2, Side::first).sheltered);
    EXPECT_FALSE(classify(e, 2, Side::second).sheltered);
}

TEST(RaiseDepth, Examples)
{
    SStandardForm r = raise_depth(S("w_{10,110}"), 3);
    EXPECT_GE(*metrics(r).depth, 3u);
    EXPECT_TRUE(same(r.word(), W("w_{10,110}")));

    SStandardForm deep = S("w_{10000,11000}");
    EXPECT_EQ(raise_depth(deep, 3), deep);
    EXPECT_EQ(raise_depth(SStandardForm(), 99), SStandardForm());
}

TEST(LiteralTranslate, Examples)
{
    GStandardForm g = literal_translate(S("w_{10,110}"));
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.factors[0], std::make_pair(F("10"), 1LL));
    EXPECT_EQ(g.factors[1], std::make_pair(F("110"), -1LL));
    EXPECT_TRUE(literal_translate(S("x")).factors.empty());
    EXPECT_THROW(literal_translate(S("p0")), Error);
}

TEST(Balance, Examples)
{
    BalanceResult a = balance(S("w_{10,110} w_{00,01}"));
    EXPECT_FALSE(a.blocked);
    EXPECT_EQ(metrics(a.form).unevenness, 0);

    SStandardForm in(TElem(), {{F("01"), F("10"), 1}, {F("10"), F("01"), 1}});
    BalanceResult b = balance(in);
    EXPECT_FALSE(b.blocked);
    EXPECT_EQ(metrics(b.form).unevenness, 0);
    EXPECT_TRUE(same(b.form.word(), GroupWord()));

    BalanceResult c = balance(S("w_{01,10}"));
    EXPECT_TRUE(c.blocked);
    EXPECT_FALSE(c.report.empty());
}

TEST(Balance, RandomPairsAreBalancedAndEquivalent)
{
    std::mt19937 rng(3);
    int tested = 0;
    for (int i = 0; i < 400; ++i) {
        GroupWord w = random_s_word(rng, 2 + rng() % 6, 4);
        SStandardForm f = to_standard_form(w);
        Trace tr;
        BalanceResult b = balance(f, &tr);
        EXPECT_NO_THROW(b.form.validate());
        ASSERT_TRUE(same(f.word(), b.form.word())) << f.str() << " -> " << b.form.str();
        if (b.blocked)
            continue;
        ++tested;
        EXPECT_EQ(metrics(b.form).unevenness, 0) << f.str();
    }
    EXPECT_GT(tested, 100);
}

TEST(SplitHalves, Examples)
{
    SStandardForm f(TElem(), {{F("11"), F("10"), 1}, {F("00"), F("01"), 1}});
    Halves h = split_halves(f);
    ASSERT_EQ(h.zero.size(), 1u);
    ASSERT_EQ(h.one.size(), 1u);
    EXPECT_EQ(h.zero[0].s, F("00"));
    EXPECT_EQ(h.one[0].s, F("11"));
    EXPECT_TRUE(split_halves(S("w_{10,110}")).zero.empty());
    EXPECT_THROW(split_halves(S("w_{01,10}")), Error);
}

TEST(ReduceHalf, Examples)
{
    Reduction a = reduce_half({{F("01"), F("00"), 1}, {F("00"), F("01"), 1}});
    EXPECT_TRUE(a.form.factors.empty());
    EXPECT_TRUE(a.form.head.is_identity());

    Reduction b = reduce_half({{F("10"), F("110"), 1}});
    EXPECT_FALSE(b.form.factors.empty());

    Reduction c = reduce_half({});
    EXPECT_TRUE(c.form.factors.empty());
    EXPECT_EQ(c.manipulations, 0u);
}

TEST(ReduceHalf, RandomHalvesRespectBounds)
{
    std::mt19937 rng(17);
    for (int i = 0; i < 150; ++i) {
        GroupWord w = random_s_word(rng, 1 + rng() % 6, 4);
        BalanceResult b = balance(to_standard_form(w));
        if (b.blocked)
            continue;
        Halves h = split_halves(b.form);
        for (const auto* half : {&h.zero, &h.one}) {
            Reduction r = reduce_half(*half);
            EXPECT_LE(r.manipulations, r.bound) << w.str();
            EXPECT_LE(r.max_subscript, r.leaf_bound) << w.str();
            GroupWord orig;
            for (const auto& f : *half)
                orig *= Letter{Gen::W, f.s, f.t, 0, f.power};
            ASSERT_TRUE(same(orig, r.form.word())) << w.str();
        }
    }
}

TEST(IsTrivial, Examples)
{
    EXPECT_TRUE(is_trivial(GroupWord()).trivial);
    EXPECT_TRUE(is_trivial(W("w_{01,10} w_{10,01}")).trivial);
    TrivialityResult r = is_trivial(W("w_{10,110}"));
    EXPECT_FALSE(r.trivial);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(eval(W("w_{10,110}"), *r.witness), *r.witness);
    EXPECT_TRUE(is_trivial(W("x_110 w_{10,110} w_{11001,11000}^-1 w_{10,1101}^-1")).trivial);
}

TEST(IsTrivial, AgreesWithOracle)
{
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        GroupWord w = random_s_word(rng, 1 + rng() % 6, 3);
        if (rng() % 2)
            w = w * word_inverse(random_s_word(rng, 0, 3)) * word_inverse(w);
        TrivialityResult r = is_trivial(w);
        bool oracle = !find_moved_point(w, 8).has_value();
        ASSERT_EQ(r.trivial, oracle) << w.str();
        if (!r.trivial) {
            ASSERT_TRUE(r.witness.has_value()) << w.str();
            EXPECT_NE(eval(w, *r.witness), *r.witness);
        }
    }
}

TEST(WordsEqual, Examples)
{
    EXPECT_TRUE(words_equal(W("x"), W("x")));
    EXPECT_TRUE(words_equal(W("w_{10,110} x"), W("x w_{110,1110}")));
    EXPECT_FALSE(words_equal(W("x"), W("p0")));
}
