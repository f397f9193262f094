#include "ppg/presentation.hpp"
#include "ppg/rewrite.hpp"

#include "random_words.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ppg;

namespace {

FinSeq S(const char* s) { return FinSeq(s); }
GroupWord one(const Letter& l) { return GroupWord{{l}}; }

bool has(const std::vector<Relator>& rs, const std::string& family, const GroupWord& lhs, const GroupWord& rhs)
{
    return std::any_of(rs.begin(), rs.end(),
                       [&](const Relator& r) { return r.family == family && r.lhs == lhs && r.rhs == rhs; });
}

bool same_map(const GroupWord& a, const GroupWord& b, std::size_t size)
{
    return !find_moved_point(a * word_inverse(b), size);
}

} // namespace

TEST(InstantiateR, Examples)
{
    auto rs = instantiate_R(3);
    GroupWord x = one(Letter::x(FinSeq()));
    EXPECT_TRUE(has(rs, "R(1)", one(Letter::x(FinSeq(), 2)), one(Letter::x(S("0"))) * x * one(Letter::x(S("1")))));
    EXPECT_TRUE(has(rs, "R(10)", one(Letter::w(S("10"), S("10"))), GroupWord()));
    EXPECT_EQ(rs.front().family, "R(1)");
    EXPECT_EQ(rs.back().family, "R(10)");
}

TEST(InstantiateR, SideConditionsHold)
{
    for (const auto& r : instantiate_R(3)) {
        if (r.family != "R(4)")
            continue;
        const Letter& w = r.lhs.letters[0];
        TElem x = letter_elem(r.lhs.letters[1]);
        ASSERT_TRUE(x.acts_on(w.s) && x.acts_on(w.t)) << r.str();
        EXPECT_EQ(r.rhs.letters[1].s, *x.act(w.s));
    }
}

TEST(InstantiateR, LengthThreeVerifies)
{
    auto rep = verify_relators(instantiate_R(3));
    EXPECT_EQ(rep.failures, 0u);
    EXPECT_EQ(rep.disagreements, 0u);
    EXPECT_GT(rep.rows.size(), 1000u);
}

TEST(InstantiateR, TupleSamplesVerify)
{
    auto rs = sample_R_tuples(5, 60, 7);
    ASSERT_EQ(rs.size(), 60u);
    EXPECT_TRUE(verify_relators(rs).ok());
}

TEST(InstantiateR, ConjugationClauseDirection)
{
    auto conj = [](std::size_t m, std::size_t n) {
        GroupWord w{{Letter::x(FinSeq::repeat('1', m), -1), Letter::p(n), Letter::x(FinSeq::repeat('1', m + 1))}};
        return tree_pair_of(w) == TElem::p(n + 1);
    };
    for (std::size_t n = 0; n < 5; ++n)
        for (std::size_t m = 0; m < 5; ++m)
            EXPECT_EQ(conj(m, n), m < n) << "m=" << m << " n=" << n;
}

TEST(R1, Examples)
{
    auto rs = r1_relators_untranslated();
    EXPECT_TRUE(has(rs, "R1(9)", one(Letter::w(S("10"), S("10"))), GroupWord()));
    GroupWord w = one(Letter::w(S("00"), S("01"))), x1 = one(Letter::x(S("1")));
    EXPECT_TRUE(has(rs, "R1(3)", w * x1, x1 * w));
    std::size_t amp = std::count_if(rs.begin(), rs.end(), [](const Relator& r) {
        return r.family == "R1(7)" && r.lhs == one(Letter::w(S("10"), S("110")));
    });
    EXPECT_EQ(amp, 2u);
}

TEST(R1, SpelledOverFiniteGenerators)
{
    auto rs = r1_relators();
    EXPECT_EQ(rs.size(), r1_relators_untranslated().size());
    for (const auto& r : rs)
        ASSERT_TRUE(is_X1_word(r.lhs) && is_X1_word(r.rhs)) << r.params;
}

TEST(R1, NonTupleItemsVerify)
{
    std::vector<Relator> some;
    std::size_t k = 0;
    for (auto& r : r1_relators())
        if (r.family != "R1(5)" && r.family != "R1(6)" && r.family != "R1(8)")
            some.push_back(r);
        else if (k++ % 97 == 0)
            some.push_back(r);
    auto rep = verify_relators(some);
    for (const auto& row : rep.rows)
        EXPECT_TRUE(row.pipeline && row.oracle) << row.family << " " << row.relator;
    EXPECT_EQ(rep.disagreements, 0u);
}

TEST(R1, SecondCommutatorConjugatesByInverseSquare)
{
    GroupWord x = one(Letter::x(FinSeq())), x1 = one(Letter::x(S("1")));
    GroupWord a = x * word_inverse(x1);
    GroupWord used = word_inverse(x * x) * x1 * x * x;
    GroupWord other = x * x * x1 * word_inverse(x * x);
    EXPECT_TRUE(tree_pair_of(commutator(a, used)).is_identity());
    EXPECT_FALSE(tree_pair_of(commutator(a, other)).is_identity());
}

TEST(R1, TupleSamplesVerify)
{
    auto rs = r1_sample_tuples(12, 3);
    EXPECT_TRUE(verify_relators(rs).ok());
}

TEST(VerifyRelators, CorruptedRelatorFails)
{
    GroupWord w = one(Letter::w(S("00"), S("01"))), x = one(Letter::x(FinSeq()));
    auto rep = verify_relators({{w * x, x * w, "test", ""}});
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_FALSE(rep.rows[0].pipeline);
    EXPECT_FALSE(rep.rows[0].oracle);
    EXPECT_TRUE(rep.rows[0].witness.has_value());
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(verify_relators({{one(Letter::w(S("10"), S("10"))), GroupWord(), "test", ""}}).ok());
}

TEST(PairType, Examples)
{
    EXPECT_EQ(pair_type(S("10"), S("10")), PairType::diagonal);
    EXPECT_EQ(pair_type(S("10"), S("110")), PairType::forward);
    EXPECT_EQ(pair_type(S("110"), S("10")), PairType::backward);
    EXPECT_EQ(pair_type(S("10"), S("1110")), PairType::separated);
    EXPECT_EQ(pair_type(S("0"), S("1")), PairType::both);
    EXPECT_EQ(pair_type(S("1"), S("0")), PairType::both);
    EXPECT_EQ(pair_type(S("00"), S("1")), PairType::backward);
    EXPECT_THROW(pair_type(S("1"), S("10")), Error);
}

TEST(TAction, Examples)
{
    EXPECT_TRUE(taction_map({S("10"), S("110")}, {S("10"), S("110")}).is_identity());
    TElem f = taction_map({S("01"), S("10")}, {S("001"), S("01")});
    EXPECT_EQ(f.act(S("01")), S("001"));
    EXPECT_EQ(f.act(S("10")), S("01"));
    EXPECT_THROW(taction_map({S("00"), S("1")}, {S("01"), S("10")}), Error);
    EXPECT_EQ(taction_map({S("0"), S("1")}, {S("1"), S("0")}).act(S("0")), S("1"));
}

TEST(TAction, RandomPairsOfEqualType)
{
    std::mt19937 rng(11);
    int done = 0;
    for (int it = 0; it < 4000 && done < 300; ++it) {
        FinSeq a = ppg::testing::random_seq(rng, 1, 6), b = ppg::testing::random_seq(rng, 1, 6);
        FinSeq c = ppg::testing::random_seq(rng, 1, 6), d = ppg::testing::random_seq(rng, 1, 6);
        if (rng() % 4 == 0) {
            b = a;
            d = c;
        }
        if (!is_independent(a, b) || !is_independent(c, d) || pair_type(a, b) != pair_type(c, d))
            continue;
        TElem f = taction_map({a, b}, {c, d});
        ASSERT_EQ(f.act(a), c);
        ASSERT_EQ(f.act(b), d);
        ++done;
    }
    EXPECT_GT(done, 100);
}

TEST(ASt, Examples)
{
    const ASt& a = a_st(S("10"), S("110"));
    EXPECT_TRUE(a.a.is_identity());
    EXPECT_EQ(a.base, Letter::w(S("10"), S("110")));
    const ASt& b = a_st(S("10"), S("1110"));
    EXPECT_TRUE(b.a.is_identity());
    EXPECT_EQ(b.base, Letter::w(S("10"), S("1110")));
    const ASt& c = a_st(S("00"), S("01"));
    EXPECT_EQ(c.a.act(S("10")), S("00"));
    EXPECT_EQ(c.a.act(S("110")), S("01"));
    EXPECT_EQ(&c, &a_st(S("00"), S("01")));
    EXPECT_THROW(a_st(S("10"), S("10")), Error);
    EXPECT_THROW(a_st(S("110"), S("10")), Error);
}

TEST(Translate, Examples)
{
    Letter x = Letter::x(FinSeq()), x1 = Letter::x(S("1"));
    EXPECT_EQ(translate_to_X1(Letter::p(1)), (GroupWord{{x.inverse(), Letter::p(0)}}));
    EXPECT_EQ(translate_to_X1(Letter::w(S("10"), S("110"))), one(Letter::w(S("10"), S("110"))));
    EXPECT_EQ(translate_to_X1(Letter::x(S("11"))), (GroupWord{{x.inverse(), x1, x}}));
    EXPECT_TRUE(translate_to_X1(Letter::w(S("10"), S("10"))).empty());
    EXPECT_THROW(translate_to_X1(Letter::y(S("1"))), Error);
}

TEST(Translate, FaithfulOnRandomLetters)
{
    std::mt19937 rng(5);
    for (int it = 0; it < 150; ++it) {
        GroupWord w = ppg::testing::random_s_word(rng, 1, 4);
        if (rng() % 4 == 0)
            w = one(Letter::p(rng() % 5, rng() % 2 ? 1 : -2));
        if (it % 25 == 0)
            w = one(Letter::w(S(it % 50 ? "0" : "1"), S(it % 50 ? "1" : "0")));
        GroupWord t = translate_to_X1(w);
        ASSERT_TRUE(is_X1_word(t)) << w.str();
        ASSERT_TRUE(same_map(w, t, 6)) << w.str() << " vs " << t.str();
    }
}

TEST(Orbits, FiniteAndTypeDetermined)
{
    auto classes = pair_orbits(4);
    EXPECT_EQ(classes.size(), 5u);
    std::vector<PairType> types;
    for (const auto& c : classes) {
        EXPECT_TRUE(c.homogeneous) << c.representative.first.str() << "," << c.representative.second.str();
        types.push_back(c.type);
    }
    std::sort(types.begin(), types.end());
    EXPECT_EQ(std::unique(types.begin(), types.end()), types.end());
}

TEST(Orbits, Membership)
{
    auto o = orbit_of({S("10"), S("110")}, 4);
    EXPECT_NE(std::find(o.begin(), o.end(), SeqPair{S("00"), S("01")}), o.end());
    EXPECT_EQ(std::find(o.begin(), o.end(), SeqPair{S("110"), S("10")}), o.end());
    auto q = orbit_of({S("10"), S("1110")}, 4);
    EXPECT_NE(std::find(q.begin(), q.end(), SeqPair{S("01"), S("11")}), q.end());
    auto z = orbit_of({S("0"), S("1")}, 4);
    EXPECT_EQ(z.size(), 2u);
    EXPECT_THROW(orbit_of({S("1"), S("10")}, 4), Error);
}
