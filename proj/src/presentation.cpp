#include "ppg/presentation.hpp"

#include "ppg/rewrite.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

namespace ppg {

namespace {

GroupWord one(const Letter& l) { return GroupWord{{l}}; }

GroupWord word_pow(const GroupWord& w, long long e)
{
    GroupWord base = e < 0 ? word_inverse(w) : w;
    GroupWord out;
    for (long long k = 0; k < (e < 0 ? -e : e); ++k)
        out *= base;
    return out;
}

FinSeq seq(const char* bits) { return FinSeq(bits); }
FinSeq ones(std::size_t k) { return FinSeq::repeat('1', k); }

Relator rel(GroupWord lhs, GroupWord rhs, std::string family, std::string params)
{
    return {std::move(lhs), std::move(rhs), std::move(family), std::move(params)};
}

Letter W(const FinSeq& s, const FinSeq& t, long long e = 1) { return Letter::w(s, t, e); }

bool all_independent(std::initializer_list<FinSeq> ss)
{
    std::vector<FinSeq> v(ss);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!is_independent(v[i], v[j]))
                return false;
    return true;
}

std::string join(std::initializer_list<FinSeq> ss)
{
    std::string out;
    for (const auto& s : ss)
        out += (out.empty() ? "" : ",") + s.str();
    return out;
}

// Commuting and relabelling instances for one 4-tuple.
void quad_relators(std::vector<Relator>& out, const FinSeq& s1, const FinSeq& t1, const FinSeq& s2,
                   const FinSeq& t2, const char* commuting, const char* relabelling)
{
    std::string p = join({s1, t1, s2, t2});
    GroupWord lhs = one(W(s1, t1)) * one(W(s2, t2));
    out.push_back(rel(lhs, one(W(s2, t2)) * one(W(s1, t1)), commuting, p));
    out.push_back(rel(lhs, one(W(s1, t2)) * one(W(s2, t1)), relabelling, p));
}

void cancel_relator(std::vector<Relator>& out, const FinSeq& s, const FinSeq& t, const FinSeq& v, const char* family)
{
    out.push_back(rel(one(W(s, t)) * one(W(t, v)), one(W(s, v)), family, join({s, t, v})));
}

void amplification_relators(std::vector<Relator>& out, const FinSeq& s, const FinSeq& t, std::size_t max_len,
                            const char* family)
{
    GroupWord lhs = one(W(s, t));
    if (s.size() + 2 <= max_len)
        out.push_back(rel(lhs,
                          one(Letter::x(s)) * one(W(s + '0', s + seq("10"))) * one(W(s + seq("11"), t)),
                          family, join({s, t}) + ",first"));
    if (t.size() + 2 <= max_len)
        out.push_back(rel(lhs,
                          one(Letter::x(t, -1)) * one(W(s, t + '1')) * one(W(t + seq("01"), t + seq("00"))),
                          family, join({s, t}) + ",second"));
}

bool valid_quad(const FinSeq& s1, const FinSeq& t1, const FinSeq& s2, const FinSeq& t2)
{
    return s1 != t1 && s2 != t2 && all_independent({s1, t1, s2, t2});
}

bool valid_triple(const FinSeq& s, const FinSeq& t, const FinSeq& v)
{
    return s != t && t != v && all_independent({s, t, v});
}

FinSeq random_nonempty(std::mt19937& rng, std::size_t max_len)
{
    std::string s;
    std::size_t n = 1 + rng() % max_len;
    for (std::size_t k = 0; k < n; ++k)
        s.push_back(rng() % 2 ? '1' : '0');
    return FinSeq(s);
}

std::vector<FinSeq> comb(std::size_t kmax)
{
    std::vector<FinSeq> v;
    for (std::size_t k = 0; k <= kmax; ++k)
        v.push_back(FinSeq::repeat('0', k) + '1');
    return v;
}

// a immediately followed by b on the circle
bool adjacent(const FinSeq& a, const FinSeq& b)
{
    std::string x = a.bits(), y = b.bits();
    while (!x.empty() && x.back() == '1')
        x.pop_back();
    while (!y.empty() && y.back() == '0')
        y.pop_back();
    if (x.empty() && y.empty())
        return true;
    return x.size() == y.size() && !x.empty() && x.back() == '0' && y.back() == '1' &&
           x.compare(0, x.size() - 1, y, 0, y.size() - 1) == 0;
}

std::string pair_str(const SeqPair& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

// Leaves strictly between a and b, going forward from a.
std::size_t arc(const PrefixSet& p, const FinSeq& a, const FinSeq& b)
{
    std::size_t n = p.size(), ia = p.index_of(a), ib = p.index_of(b);
    if (a == b)
        return n - 1;
    return (ib + n - ia - 1) % n;
}

// Split leaves right after `a` until the forward arc a→b holds `want` leaves.
PrefixSet widen(PrefixSet p, const FinSeq& a, const FinSeq& b, std::size_t want)
{
    while (arc(p, a, b) < want)
        p = split_leaf(p, (p.index_of(a) + 1) % p.size());
    return p;
}

} // namespace

std::string Relator::str() const
{
    auto side = [](const GroupWord& w) { return w.empty() ? std::string("1") : w.str(); };
    return side(lhs) + " = " + side(rhs);
}

std::vector<FinSeq> all_seqs(std::size_t min_len, std::size_t max_len)
{
    std::vector<FinSeq> v;
    for (std::size_t n = min_len; n <= max_len; ++n)
        for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
            std::string s(n, '0');
            for (std::size_t k = 0; k < n; ++k)
                if (bits >> (n - 1 - k) & 1)
                    s[k] = '1';
            v.emplace_back(s);
        }
    return v;
}

std::vector<Relator> instantiate_R(std::size_t max_len, std::size_t tuple_len)
{
    if (max_len < 1)
        throw Error("instantiate_R: max_len must be at least 1");
    const std::size_t L = max_len, C = std::min(max_len, tuple_len);
    std::vector<Relator> out;
    std::vector<FinSeq> seqs = all_seqs(0, L), nonempty = all_seqs(1, L), short_ones = all_seqs(1, C);
    std::vector<TElem> xs;
    for (const auto& s : seqs)
        xs.push_back(TElem::x(s));

    for (const auto& s : seqs)
        if (s.size() + 1 <= L)
            out.push_back(rel(one(Letter::x(s, 2)),
                              one(Letter::x(s + '0')) * one(Letter::x(s)) * one(Letter::x(s + '1')), "R(1)", s.str()));

    for (const auto& s : nonempty)
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            auto img = xs[j].act(s);
            if (img && img->size() <= L)
                out.push_back(rel(one(Letter::x(s)) * one(Letter::x(seqs[j])),
                                  one(Letter::x(seqs[j])) * one(Letter::x(*img)), "R(2)",
                                  join({s, seqs[j]})));
        }

    for (std::size_t n = 0; n + 1 <= L; ++n) {
        for (std::size_t m = 0; m + 1 <= L; ++m)
            if (m < n)
                out.push_back(rel(one(Letter::x(ones(m), -1)) * one(Letter::p(n)) * one(Letter::x(ones(m + 1))),
                                  one(Letter::p(n + 1)), "R(3)", "conjugation,m=" + std::to_string(m) + ",n=" + std::to_string(n)));
        out.push_back(rel(one(Letter::p(n)) * one(Letter::x(FinSeq())), one(Letter::p(n + 1, 2)), "R(3)",
                          "square,n=" + std::to_string(n)));
        out.push_back(rel(one(Letter::p(n)), one(Letter::x(ones(n))) * one(Letter::p(n + 1)), "R(3)",
                          "descent,n=" + std::to_string(n)));
    }
    for (std::size_t n = 0; n <= L; ++n)
        out.push_back(rel(one(Letter::p(n, static_cast<long long>(n + 2))), GroupWord(), "R(3)",
                          "order,n=" + std::to_string(n)));

    std::vector<SeqPair> pairs;
    for (const auto& s : nonempty)
        for (const auto& t : nonempty)
            if (s != t && is_independent(s, t))
                pairs.emplace_back(s, t);

    for (const auto& [s, t] : pairs)
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            auto a = xs[j].act(s), b = xs[j].act(t);
            if (a && b && a->size() <= L && b->size() <= L)
                out.push_back(rel(one(W(s, t)) * one(Letter::x(seqs[j])), one(Letter::x(seqs[j])) * one(W(*a, *b)),
                                  "R(4)", join({s, t, seqs[j]})));
        }

    for (std::size_t n = 0; n <= L; ++n) {
        TElem p = TElem::p(n);
        for (const auto& [s, t] : pairs) {
            auto a = p.act(s), b = p.act(t);
            if (a && b && a->size() <= L && b->size() <= L)
                out.push_back(rel(one(W(s, t)) * one(Letter::p(n)), one(Letter::p(n)) * one(W(*a, *b)), "R(5)",
                                  join({s, t}) + ",n=" + std::to_string(n)));
        }
    }

    for (const auto& s1 : short_ones)
        for (const auto& t1 : short_ones)
            for (const auto& s2 : short_ones)
                for (const auto& t2 : short_ones)
                    if (valid_quad(s1, t1, s2, t2))
                        quad_relators(out, s1, t1, s2, t2, "R(6)", "R(7)");

    for (const auto& [s, t] : pairs)
        amplification_relators(out, s, t, L, "R(8)");

    for (const auto& s : short_ones)
        for (const auto& t : short_ones)
            for (const auto& v : short_ones)
                if (valid_triple(s, t, v))
                    cancel_relator(out, s, t, v, "R(9)");

    for (const auto& s : seqs)
        out.push_back(rel(one(W(s, s)), GroupWord(), "R(10)", s.str()));

    // The (6)/(7) pass emits commuting and relabelling interleaved; keep families contiguous.
    std::stable_sort(out.begin(), out.end(), [](const Relator& a, const Relator& b) {
        auto num = [](const std::string& f) { return std::stoi(f.substr(2)); };
        return num(a.family) < num(b.family);
    });
    return out;
}

std::vector<Relator> sample_R_tuples(std::size_t max_len, std::size_t count, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<Relator> out;
    while (out.size() < count) {
        FinSeq a = random_nonempty(rng, max_len), b = random_nonempty(rng, max_len),
               c = random_nonempty(rng, max_len), d = random_nonempty(rng, max_len);
        if (rng() % 3 == 0) {
            if (valid_triple(a, b, c))
                cancel_relator(out, a, b, c, "R(9)");
        } else if (valid_quad(a, b, c, d)) {
            quad_relators(out, a, b, c, d, "R(6)", "R(7)");
        }
    }
    out.resize(count);
    return out;
}

std::vector<Relator> r1_relators_untranslated()
{
    std::vector<Relator> out;
    const Letter x = Letter::x(FinSeq()), x1 = Letter::x(seq("1"));
    GroupWord a = one(x) * one(x1.inverse());
    GroupWord b = one(x.inverse()) * one(x1) * one(x);
    GroupWord c = one(Letter::x(FinSeq(), -2)) * one(x1) * one(Letter::x(FinSeq(), 2));
    out.push_back(rel(commutator(a, b), GroupWord(), "R1(1)", "first"));
    out.push_back(rel(commutator(a, c), GroupWord(), "R1(1)", "second"));

    // c_n read as p_n, x_n as x_{1^n}, c as c_1
    out.push_back(rel(one(x1) * one(Letter::p(3)), one(Letter::p(2)) * one(Letter::x(seq("11"))), "R1(2)", "x1c3=c2x2"));
    out.push_back(rel(one(Letter::p(1)) * one(x), one(Letter::p(2, 2)), "R1(2)", "c1x0=c2^2"));
    out.push_back(rel(one(x1) * one(Letter::p(2)), one(Letter::p(1)), "R1(2)", "x1c2=c"));
    out.push_back(rel(one(Letter::p(1, 3)), GroupWord(), "R1(2)", "c^3=1"));

    for (const char* s : {"1", "11"})
        out.push_back(rel(one(W(seq("00"), seq("01"))) * one(Letter::x(seq(s))),
                          one(Letter::x(seq(s))) * one(W(seq("00"), seq("01"))), "R1(3)", s));
    for (const char* t : {"010", "0101", "1", "11"})
        out.push_back(rel(one(W(seq("00"), seq("011"))) * one(Letter::x(seq(t))),
                          one(Letter::x(seq(t))) * one(W(seq("00"), seq("011"))), "R1(4)", t));

    std::vector<Relator> commuting, relabelling;
    std::vector<FinSeq> c7 = comb(6);
    for (const auto& s1 : c7)
        for (const auto& t1 : c7)
            for (const auto& s2 : c7)
                for (const auto& t2 : c7)
                    if (valid_quad(s1, t1, s2, t2)) {
                        std::vector<Relator> two;
                        quad_relators(two, s1, t1, s2, t2, "R1(5)", "R1(6)");
                        commuting.push_back(two[0]);
                        relabelling.push_back(two[1]);
                    }
    out.insert(out.end(), commuting.begin(), commuting.end());
    out.insert(out.end(), relabelling.begin(), relabelling.end());

    for (const char* t : {"110", "1110"})
        amplification_relators(out, seq("10"), seq(t), 8, "R1(7)");

    std::vector<FinSeq> c5 = comb(4);
    for (const auto& s : c5)
        for (const auto& t : c5)
            for (const auto& v : c5)
                if (valid_triple(s, t, v))
                    cancel_relator(out, s, t, v, "R1(8)");

    out.push_back(rel(one(W(seq("10"), seq("10"))), GroupWord(), "R1(9)", "10"));
    return out;
}

namespace {

std::vector<Relator> translated(std::vector<Relator> rs)
{
    for (auto& r : rs) {
        r.params = r.str() + (r.params.empty() ? "" : " [" + r.params + "]");
        r.lhs = translate_to_X1(r.lhs);
        r.rhs = translate_to_X1(r.rhs);
    }
    return rs;
}

} // namespace

std::vector<Relator> r1_relators() { return translated(r1_relators_untranslated()); }

std::vector<Relator> r1_sample_tuples(std::size_t count, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<Relator> out;
    while (out.size() < count) {
        if (rng() % 3 == 0) {
            FinSeq a = random_nonempty(rng, 5), b = random_nonempty(rng, 5), c = random_nonempty(rng, 5);
            if (valid_triple(a, b, c))
                cancel_relator(out, a, b, c, "R1(8)");
        } else {
            FinSeq a = random_nonempty(rng, 7), b = random_nonempty(rng, 7), c = random_nonempty(rng, 7),
                   d = random_nonempty(rng, 7);
            if (valid_quad(a, b, c, d))
                quad_relators(out, a, b, c, d, "R1(5)", "R1(6)");
        }
    }
    out.resize(count);
    return translated(std::move(out));
}

PairType pair_type(const FinSeq& s, const FinSeq& t)
{
    if (!is_independent(s, t))
        throw Error("pair " + pair_str({s, t}) + " is not independent");
    if (s == t)
        return PairType::diagonal;
    bool f = adjacent(s, t), b = adjacent(t, s);
    if (f && b)
        return PairType::both;
    if (f)
        return PairType::forward;
    if (b)
        return PairType::backward;
    return PairType::separated;
}

std::string to_string(PairType p)
{
    switch (p) {
    case PairType::diagonal: return "diagonal";
    case PairType::forward: return "forward";
    case PairType::backward: return "backward";
    case PairType::both: return "both";
    case PairType::separated: return "separated";
    }
    return "?";
}

TElem taction_map(const SeqPair& from, const SeqPair& to)
{
    PairType a = pair_type(from.first, from.second), b = pair_type(to.first, to.second);
    if (a != b)
        throw Error("taction_map: " + pair_str(from) + " is " + to_string(a) + " but " + pair_str(to) + " is " +
                    to_string(b));
    const auto& [s1, s2] = from;
    const auto& [t1, t2] = to;
    if (s1.empty() || t1.empty()) {
        if (s1 == t1)
            return TElem::identity();
        throw Error("taction_map: the empty sequence is fixed by T");
    }
    PrefixSet d = tree_with_leaves({s1, s2}), r = tree_with_leaves({t1, t2});
    std::size_t want = std::max(arc(d, s1, s2), arc(r, t1, t2));
    d = widen(d, s1, s2, want);
    r = widen(r, t1, t2, want);
    if (a != PairType::diagonal) {
        want = std::max(arc(d, s2, s1), arc(r, t2, t1));
        d = widen(d, s2, s1, want);
        r = widen(r, t2, t1, want);
    }
    std::size_t n = d.size(), i = d.index_of(s1), j = r.index_of(t1);
    std::vector<TElem::Pair> pairs;
    for (std::size_t k = 0; k < n; ++k)
        pairs.emplace_back(d[(i + k) % n], r[(j + k) % n]);
    TElem f = TElem::from_pairs(std::move(pairs));
    if (f.act(s1) != t1 || f.act(s2) != t2)
        throw Error("taction_map: constructed element misses its targets");
    return f;
}

const ASt& a_st(const FinSeq& s, const FinSeq& t)
{
    static std::mutex mu;
    static std::map<SeqPair, ASt> cache;
    if (s == t)
        throw Error("a_st: w_{" + s.str() + "," + s.str() + "} is trivial");
    PairType type = pair_type(s, t);
    std::lock_guard lock(mu);
    if (auto it = cache.find({s, t}); it != cache.end())
        return it->second;
    FinSeq tail;
    if (type == PairType::forward)
        tail = seq("110");
    else if (type == PairType::separated)
        tail = seq("1110");
    else
        throw Error("a_st: " + pair_str({s, t}) + " is " + to_string(type) +
                    ", outside the orbits of (10,110) and (10,1110)");
    ASt a{taction_map({seq("10"), tail}, {s, t}), W(seq("10"), tail)};
    return cache.emplace(SeqPair{s, t}, std::move(a)).first->second;
}

namespace {

GroupWord x_power_word(std::size_t k, long long e)
{
    const Letter x = Letter::x(FinSeq());
    if (k == 0)
        return one(Letter::x(FinSeq(), e));
    GroupWord mid = one(Letter::x(seq("1"), e));
    if (k == 1)
        return mid;
    auto kk = static_cast<long long>(k - 1);
    return one(Letter::x(FinSeq(), -kk)) * mid * one(Letter::x(FinSeq(), kk));
}

GroupWord translate_w(const FinSeq& s, const FinSeq& t)
{
    static std::mutex mu;
    static std::map<SeqPair, GroupWord> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({s, t}); it != cache.end())
            return it->second;
    }
    GroupWord out;
    switch (pair_type(s, t)) {
    case PairType::diagonal: break;
    case PairType::backward: out = word_inverse(translate_w(t, s)); break;
    case PairType::both:
        if (s == seq("0"))
            out = translate_to_X1(Letter::x(s)) * translate_w(seq("00"), seq("010")) * translate_w(seq("011"), t);
        else
            out = word_inverse(translate_w(t, s));
        break;
    default: {
        const ASt& a = a_st(s, t);
        GroupWord aw = translate_to_X1(word_of(a.a));
        out = word_inverse(aw) * one(a.base) * aw;
    }
    }
    std::lock_guard lock(mu);
    cache.emplace(SeqPair{s, t}, out);
    return out;
}

} // namespace

GroupWord translate_to_X1(const Letter& l)
{
    switch (l.gen) {
    case Gen::X: {
        const std::string& b = l.s.bits();
        if (std::all_of(b.begin(), b.end(), [](char c) { return c == '1'; }))
            return x_power_word(b.size(), l.e);
        return word_pow(translate_to_X1(word_of(TElem::x(l.s))), l.e);
    }
    case Gen::P: {
        if (l.n == 0)
            return one(l);
        GroupWord w = x_power_word(l.n - 1, -1) * translate_to_X1(Letter::p(l.n - 1));
        return word_pow(w, l.e);
    }
    case Gen::Y: throw Error("translate_to_X1: y letters lie outside the generating set");
    case Gen::W: return word_pow(translate_w(l.s, l.t), l.e);
    }
    return {};
}

GroupWord translate_to_X1(const GroupWord& w)
{
    GroupWord out;
    for (const auto& l : w.letters)
        out *= translate_to_X1(l);
    return out;
}

bool is_X1_word(const GroupWord& w)
{
    return std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) {
        switch (l.gen) {
        case Gen::X: return l.s.empty() || l.s == FinSeq("1");
        case Gen::P: return l.n == 0;
        case Gen::W: return l.s == FinSeq("10") && (l.t == FinSeq("110") || l.t == FinSeq("1110"));
        default: return false;
        }
    });
}

VerificationReport verify_relators(const std::vector<Relator>& rs, std::size_t oracle_size)
{
    VerificationReport rep;
    for (const auto& r : rs) {
        GroupWord w = r.word();
        RelatorVerdict v;
        v.relator = r.str();
        v.family = r.family;
        v.pipeline = is_trivial(w).trivial;
        v.witness = find_moved_point(w, oracle_size);
        v.oracle = !v.witness;
        rep.failures += !(v.pipeline && v.oracle);
        rep.disagreements += v.disagree();
        rep.rows.push_back(std::move(v));
    }
    return rep;
}

namespace {

struct OrbitData {
    std::vector<SeqPair> nodes;
    std::vector<std::size_t> root;
};

OrbitData orbit_data(std::size_t max_len)
{
    OrbitData d;
    std::vector<FinSeq> seqs = all_seqs(1, max_len);
    std::unordered_map<std::string, std::size_t> index;
    auto key = [](const FinSeq& a, const FinSeq& b) { return a.bits() + "," + b.bits(); };
    for (const auto& s : seqs)
        for (const auto& t : seqs)
            if (is_independent(s, t)) {
                index[key(s, t)] = d.nodes.size();
                d.nodes.emplace_back(s, t);
            }
    std::vector<std::size_t> parent(d.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<TElem> gens;
    for (const auto& s : all_seqs(0, max_len))
        gens.push_back(TElem::x(s));
    for (std::size_t n = 0; n <= max_len; ++n)
        gens.push_back(TElem::p(n));
    for (std::size_t i = 0, m = gens.size(); i < m; ++i)
        gens.push_back(gens[i].inverse());
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        for (const auto& g : gens) {
            auto a = g.act(d.nodes[i].first), b = g.act(d.nodes[i].second);
            if (!a || !b)
                continue;
            auto it = index.find(key(*a, *b));
            if (it != index.end())
                parent[find(i)] = find(it->second);
        }
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        d.root.push_back(find(i));
    return d;
}

} // namespace

std::vector<OrbitClass> pair_orbits(std::size_t max_len)
{
    OrbitData d = orbit_data(max_len);
    std::map<std::size_t, std::size_t> slot;
    std::vector<OrbitClass> out;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        PairType type = pair_type(d.nodes[i].first, d.nodes[i].second);
        auto [it, fresh] = slot.emplace(d.root[i], out.size());
        if (fresh)
            out.push_back({d.nodes[i], type, 0, true});
        OrbitClass& c = out[it->second];
        ++c.size;
        c.homogeneous = c.homogeneous && c.type == type;
    }
    return out;
}

std::vector<SeqPair> orbit_of(const SeqPair& p, std::size_t max_len)
{
    OrbitData d = orbit_data(max_len);
    auto it = std::find(d.nodes.begin(), d.nodes.end(), p);
    if (it == d.nodes.end())
        throw Error("orbit_of: " + pair_str(p) + " is not an independent pair of nonempty sequences within " +
                    std::to_string(max_len) + " digits");
    std::size_t r = d.root[static_cast<std::size_t>(it - d.nodes.begin())];
    std::vector<SeqPair> out;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        if (d.root[i] == r)
            out.push_back(d.nodes[i]);
    return out;
}

} // namespace ppg
