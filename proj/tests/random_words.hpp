#pragma once

#include "ppg/word.hpp"

#include <random>
#include <string>

namespace ppg::testing {

inline FinSeq random_seq(std::mt19937& rng, std::size_t min_len, std::size_t max_len)
{
    std::string s;
    std::size_t n = min_len + rng() % (max_len - min_len + 1);
    for (std::size_t k = 0; k < n; ++k)
        s.push_back(rng() % 2 ? '1' : '0');
    return FinSeq(s);
}

inline Letter random_w(std::mt19937& rng, std::size_t max_len)
{
    for (;;) {
        FinSeq s = random_seq(rng, 1, max_len), t = random_seq(rng, 1, max_len);
        if (s != t && is_independent(s, t))
            return Letter::w(s, t, rng() % 2 ? 1 : -1);
    }
}

// Letters over x_s, p_n and w_{s,t} with subscripts of at most max_len digits.
inline GroupWord random_s_word(std::mt19937& rng, std::size_t len, std::size_t max_len, bool with_p = true)
{
    GroupWord w;
    for (std::size_t i = 0; i < len; ++i) {
        long long e = rng() % 2 ? 1 : -1;
        switch (rng() % (with_p ? 5 : 4)) {
        case 0: w *= Letter::x(random_seq(rng, 0, max_len), e); break;
        case 4: w *= Letter::p(rng() % 3, e); break;
        default: w *= random_w(rng, max_len); break;
        }
    }
    return w;
}

} // namespace ppg::testing
