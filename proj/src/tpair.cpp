#include "ppg/tpair.hpp"

#include <algorithm>

namespace ppg {

namespace {

bool pair_less(const TElem::Pair& a, const TElem::Pair& b) { return seq_less(a.first, b.first); }

FinSeq sibling(const FinSeq& u)
{
    FinSeq p = u.prefix(u.size() - 1);
    return p + (u.back() == '0' ? '1' : '0');
}

// Leaves hanging off the path to s, each mapped to itself.
void add_path_complement(const FinSeq& s, std::vector<TElem::Pair>& out)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        FinSeq c = s.prefix(i) + (s[i] == '0' ? '1' : '0');
        out.emplace_back(c, c);
    }
}

} // namespace

TElem::TElem(std::vector<Pair> pairs, bool) : pairs_(reduce(std::move(pairs))) {}

std::vector<TElem::Pair> TElem::reduce(std::vector<Pair> pairs)
{
    std::sort(pairs.begin(), pairs.end(), pair_less);
    std::vector<Pair> st;
    for (auto& pr : pairs) {
        st.push_back(std::move(pr));
        while (st.size() >= 2) {
            const Pair& a = st[st.size() - 2];
            const Pair& b = st.back();
            if (a.first.empty() || b.first.empty() || a.second.empty() || b.second.empty())
                break;
            if (a.first.back() != '0' || a.second.back() != '0' || sibling(a.first) != b.first ||
                sibling(a.second) != b.second)
                break;
            Pair m{a.first.prefix(a.first.size() - 1), a.second.prefix(a.second.size() - 1)};
            st.pop_back();
            st.back() = std::move(m);
        }
    }
    return st;
}

TElem TElem::from_pairs(std::vector<Pair> pairs)
{
    std::vector<FinSeq> dom, ran;
    for (const auto& [d, r] : pairs) {
        dom.push_back(d);
        ran.push_back(r);
    }
    validate_prefix_set(dom);
    PrefixSet rs = validate_prefix_set(ran);
    std::sort(pairs.begin(), pairs.end(), pair_less);
    std::size_t n = pairs.size();
    std::size_t rot = rs.index_of(pairs[0].second);
    for (std::size_t i = 0; i < n; ++i)
        if (rs[(i + rot) % n] != pairs[i].second)
            throw Error("leaf correspondence does not preserve cyclic order");
    return TElem(std::move(pairs), true);
}

TElem TElem::from_tree_pair(const TreePair& tp)
{
    if (tp.domain.size() != tp.range.size())
        throw Error("tree pair leaf counts differ");
    std::size_t n = tp.domain.size();
    if (tp.rotation >= n)
        throw Error("rotation out of range");
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        pairs.emplace_back(tp.domain[i], tp.range[(i + tp.rotation) % n]);
    return from_pairs(std::move(pairs));
}

TElem TElem::x(const FinSeq& s)
{
    std::vector<Pair> v;
    add_path_complement(s, v);
    v.emplace_back(s + FinSeq("00"), s + '0');
    v.emplace_back(s + FinSeq("01"), s + FinSeq("10"));
    v.emplace_back(s + '1', s + FinSeq("11"));
    return TElem(std::move(v), true);
}

TElem TElem::p(std::size_t n)
{
    std::vector<Pair> v;
    for (std::size_t k = 0; k < n; ++k)
        v.emplace_back(FinSeq::repeat('1', k) + '0', FinSeq::repeat('1', k + 1) + '0');
    v.emplace_back(FinSeq::repeat('1', n) + '0', FinSeq::repeat('1', n + 1));
    v.emplace_back(FinSeq::repeat('1', n + 1), FinSeq("0"));
    return TElem(std::move(v), true);
}

TreePair TElem::tree_pair() const
{
    std::vector<FinSeq> dom, ran;
    for (const auto& [d, r] : pairs_) {
        dom.push_back(d);
        ran.push_back(r);
    }
    TreePair tp{validate_prefix_set(dom), validate_prefix_set(ran), 0};
    tp.rotation = tp.range.index_of(pairs_[0].second);
    return tp;
}

std::size_t TElem::rotation() const
{
    const FinSeq& r0 = pairs_[0].second;
    std::size_t k = 0;
    for (const auto& pr : pairs_)
        if (seq_less(pr.second, r0))
            ++k;
    return k;
}

TElem TElem::then(const TElem& g) const
{
    std::vector<Pair> out;
    for (const auto& [d, r] : pairs_) {
        for (const auto& [d2, r2] : g.pairs_) {
            if (d2.is_prefix_of(r))
                out.emplace_back(d, r2 + r.drop(d2.size()));
            else if (r.is_proper_prefix_of(d2))
                out.emplace_back(d + d2.drop(r.size()), r2);
        }
    }
    return TElem(std::move(out), true);
}

TElem TElem::inverse() const
{
    std::vector<Pair> v;
    for (const auto& [d, r] : pairs_)
        v.emplace_back(r, d);
    return TElem(std::move(v), true);
}

TElem TElem::pow(long long k) const
{
    TElem base = k < 0 ? inverse() : *this;
    TElem r;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i)
        r = r.then(base);
    return r;
}

std::optional<FinSeq> TElem::act(const FinSeq& s) const
{
    for (const auto& [d, r] : pairs_)
        if (d.is_prefix_of(s))
            return r + s.drop(d.size());
    return std::nullopt;
}

EpSeq TElem::act(const EpSeq& xi) const
{
    for (const auto& [d, r] : pairs_)
        if (xi.starts_with(d))
            return xi.drop(d.size()).prepend(r);
    throw Error("leaf set does not cover point");
}

TElem TElem::localized(const FinSeq& s) const
{
    if (!in_F())
        throw Error("only elements of F can be localized");
    std::vector<Pair> v;
    add_path_complement(s, v);
    for (const auto& [d, r] : pairs_)
        v.emplace_back(s + d, s + r);
    return TElem(std::move(v), true);
}

std::string TElem::str() const
{
    std::string out;
    for (const auto& [d, r] : pairs_) {
        if (!out.empty())
            out += ", ";
        out += d.str() + "->" + r.str();
    }
    return "{" + out + "}";
}

std::string to_string(const TreePair& tp)
{
    std::string d, r;
    for (const auto& l : tp.domain.leaves())
        d += (d.empty() ? "" : ",") + l.str();
    for (const auto& l : tp.range.leaves())
        r += (r.empty() ? "" : ",") + l.str();
    return "({" + d + "}, {" + r + "}, rotation " + std::to_string(tp.rotation) + ")";
}

} // namespace ppg
