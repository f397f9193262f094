#include "ppg/embed.hpp"
#include "ppg/rewrite.hpp"

#include "random_words.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ppg;

namespace {

FinSeq S(const char* s) { return FinSeq(s); }
GStandardForm G(const char* s) { return GStandardForm::parse(s); }

bool same_map(const GroupWord& a, const GroupWord& b, std::size_t size = 8)
{
    return !find_moved_point(a * word_inverse(b), size);
}

// A G_0 standard form built from a random word in x_s and y_s.
GStandardForm random_g0(std::mt19937& rng, std::size_t len)
{
    GroupWord w;
    for (std::size_t i = 0; i < len; ++i) {
        long long e = rng() % 2 ? 1 : -1;
        FinSeq s = ppg::testing::random_seq(rng, 0, 3);
        w *= rng() % 2 ? Letter::x(s, e) : Letter::y(s, e);
    }
    return g_standardize(w);
}

// A form meeting the commutator-subgroup criterion.
GStandardForm random_g0prime(std::mt19937& rng)
{
    for (;;) {
        GroupWord w;
        long long sum = 0;
        std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 3 == 0)
                w *= Letter::x(ppg::testing::random_seq(rng, 0, 2), rng() % 2 ? 1 : -1);
            FinSeq s = ppg::testing::random_seq(rng, 2, 4);
            long long e = rng() % 2 ? 1 : -1;
            sum += e;
            w *= Letter::y(s, e);
        }
        if (sum != 0)
            w *= Letter::y(S("0110"), -sum);
        GStandardForm f = g_standardize(w);
        if (satisfies_g0prime_criterion(f))
            return f;
    }
}

} // namespace

TEST(Criterion, Examples)
{
    EXPECT_TRUE(satisfies_g0prime_criterion(G("y_10 y_110^-1")));
    EXPECT_FALSE(satisfies_g0prime_criterion(G("y_10")));
    EXPECT_FALSE(satisfies_g0prime_criterion(G("y_0 y_1^-1")));
    EXPECT_TRUE(satisfies_g0prime_criterion(GStandardForm()));
}

TEST(G0PrimeToS, Examples)
{
    EXPECT_EQ(g0prime_to_sword(G("y_10 y_110^-1")), (GroupWord{{Letter::w(S("10"), S("110"))}}));
    EXPECT_TRUE(g0prime_to_sword(GStandardForm()).empty());
    EXPECT_THROW(g0prime_to_sword(G("y_10")), Error);

    GStandardForm nested = G("y_101 y_10^-1");
    EXPECT_EQ(fresh_subscripts(nested), (std::vector<FinSeq>{S("01"), S("001")}));
    GroupWord w = g0prime_to_sword(nested);
    EXPECT_EQ(w.str(), "w_{01,001} w_{101,01} w_{001,10}");
    EXPECT_TRUE(same_map(w, nested.word()));
}

TEST(G0PrimeToS, EvaluationEqualOnRandomForms)
{
    std::mt19937 rng(21);
    for (int it = 0; it < 60; ++it) {
        GStandardForm f = random_g0prime(rng);
        GroupWord w = g0prime_to_sword(f);
        for (const auto& l : w.letters)
            ASSERT_NE(l.gen, Gen::Y);
        ASSERT_TRUE(same_map(w, f.word())) << f.str() << " -> " << w.str();
    }
}

TEST(Phi, Examples)
{
    GroupWord y = phi_g0_to_s(G("y"));
    EXPECT_EQ(y, (GroupWord{{Letter::y(S("110"), -1), Letter::y(S("10"))}}));
    EXPECT_TRUE(same_map(y, GroupWord{{Letter::w(S("10"), S("110"))}}));
    EXPECT_TRUE(phi_g0_to_s(GStandardForm()).empty());
    GroupWord x = phi_g0_to_s(G("x"));
    EXPECT_EQ(tree_pair_of(x), TElem::x(S("10")));
}

TEST(Phi, Homomorphism)
{
    std::mt19937 rng(8);
    for (int it = 0; it < 40; ++it) {
        GStandardForm g = random_g0(rng, 1 + rng() % 3), h = random_g0(rng, 1 + rng() % 3);
        GStandardForm gh = g_standardize(g.word() * h.word());
        ASSERT_TRUE(same_map(phi_g0_to_s(g) * phi_g0_to_s(h), phi_g0_to_s(gh))) << g.str() << " | " << h.str();
    }
}

TEST(Phi, InjectiveOnSamples)
{
    std::mt19937 rng(9);
    int tested = 0;
    for (int it = 0; it < 80; ++it) {
        GStandardForm g = random_g0(rng, 1 + rng() % 3);
        if (!find_moved_point(g.word(), 8))
            continue;
        ++tested;
        EXPECT_TRUE(find_moved_point(phi_g0_to_s(g), 10)) << g.str();
    }
    EXPECT_GT(tested, 40);
}

TEST(Phi, SWordSpelling)
{
    std::mt19937 rng(10);
    for (int it = 0; it < 30; ++it) {
        GStandardForm g = random_g0(rng, 1 + rng() % 3);
        GroupWord s = phi_g0_to_sword(g);
        ASSERT_TRUE(same_map(s, phi_g0_to_s(g))) << g.str();
    }
}

TEST(BB12, Generators)
{
    auto [x, a, b] = bb12_generators();
    EXPECT_EQ(x.str(), "x_10");
    EXPECT_TRUE(same_map(commutator(a, b), GroupWord()));
    for (const auto& g : {x, a, b})
        EXPECT_TRUE(find_moved_point(g, 8));
    for (const auto& g : {x * a, x * b, a * b})
        EXPECT_TRUE(find_moved_point(g, 8));
    EXPECT_TRUE(bb12_projective_commute());
}
