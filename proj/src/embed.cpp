#include "ppg/embed.hpp"

#include "ppg/projective.hpp"

#include <algorithm>

namespace ppg {

namespace {

GroupWord one(const Letter& l) { return GroupWord{{l}}; }

// w_{a,b}^e with a positive exponent, swapping the subscripts for e < 0.
Letter w_pos(const FinSeq& a, const FinSeq& b, long long e)
{
    return e > 0 ? Letter::w(a, b, e) : Letter::w(b, a, -e);
}

// Π_{i<n} w_{k_i,k_n}^{t_i}: the product of commuting y_{k_i}^{t_i} with Σ t_i = 0.
GroupWord pair_off(const std::vector<FinSeq>& ks, const std::vector<long long>& ts)
{
    GroupWord out;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i)
        out *= w_pos(ks[i], ks.back(), ts[i]);
    return out;
}

bool pairwise_independent(const std::vector<FinSeq>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j] || !is_independent(v[i], v[j]))
                return false;
    return true;
}

} // namespace

bool satisfies_g0prime_criterion(const GStandardForm& form)
{
    return form.exponent_sum() == 0 &&
           std::all_of(form.factors.begin(), form.factors.end(), [](const auto& f) { return !f.first.is_constant(); });
}

std::vector<FinSeq> fresh_subscripts(const GStandardForm& form)
{
    std::vector<FinSeq> taken, out;
    for (const auto& [s, t] : form.factors)
        taken.push_back(s);
    for (std::size_t len = 1; out.size() < form.factors.size(); ++len)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len) && out.size() < form.factors.size(); ++bits) {
            std::string d(len, '0');
            for (std::size_t k = 0; k < len; ++k)
                if (bits >> (len - 1 - k) & 1)
                    d[k] = '1';
            FinSeq k(d);
            if (k.is_constant())
                continue;
            bool ok = std::all_of(taken.begin(), taken.end(),
                                  [&](const FinSeq& u) { return u != k && is_independent(u, k); });
            if (ok) {
                taken.push_back(k);
                out.push_back(k);
            }
        }
    return out;
}

GroupWord g0prime_to_sword(const GStandardForm& form)
{
    if (!satisfies_g0prime_criterion(form))
        throw Error("g0prime_to_sword: " + form.str() + " fails the commutator-subgroup criterion");
    GroupWord out = word_of(form.f);
    std::vector<FinSeq> ss;
    std::vector<long long> ts;
    for (const auto& [s, t] : form.factors) {
        ss.push_back(s);
        ts.push_back(t);
    }
    if (pairwise_independent(ss))
        return out * pair_off(ss, ts);
    std::vector<FinSeq> ks = fresh_subscripts(form);
    out *= pair_off(ks, ts);
    for (std::size_t i = 0; i < ss.size(); ++i)
        out *= w_pos(ss[i], ks[i], ts[i]);
    return out;
}

GroupWord phi_g0_to_s(const GStandardForm& form)
{
    const FinSeq at("10");
    GroupWord out;
    if (long long t = form.exponent_sum(); t != 0)
        out *= Letter::y(FinSeq("110"), -t);
    for (const auto& l : word_of(form.f).letters) {
        if (l.gen != Gen::X)
            throw Error("phi_g0_to_s: head must lie in F");
        out *= Letter::x(at + l.s, l.e);
    }
    for (const auto& [s, t] : form.factors)
        out *= Letter::y(at + s, t);
    return out;
}

GroupWord phi_g0_to_sword(const GStandardForm& form)
{
    return g0prime_to_sword(g_standardize(phi_g0_to_s(form)));
}

std::array<GroupWord, 3> bb12_generators()
{
    return {one(Letter::x(FinSeq("10"))), one(Letter::y(FinSeq("100"))), one(Letter::y(FinSeq("101")))};
}

bool bb12_projective_commute()
{
    PiecewiseMap a = named_generator("nu1", 2), b = named_generator("nu2", 2);
    return compose_all({a.inverse(), b.inverse(), a, b}).is_identity();
}

} // namespace ppg
