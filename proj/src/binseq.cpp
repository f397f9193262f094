#include "ppg/binseq.hpp"

#include <algorithm>
#include <set>

namespace ppg {

FinSeq::FinSeq(std::string bits) : d_(std::move(bits))
{
    for (char c : d_)
        if (c != '0' && c != '1')
            throw Error("not a binary digit: '" + std::string(1, c) + "'");
}

FinSeq FinSeq::parse(std::string_view text)
{
    if (text == "e" || text == "ε")
        return FinSeq();
    if (text.empty())
        throw Error("empty bit string (use \"e\" for the empty sequence)");
    return FinSeq(std::string(text));
}

FinSeq FinSeq::repeat(char bit, std::size_t n) { return FinSeq(std::string(n, bit)); }

FinSeq FinSeq::flipped() const
{
    std::string r = d_;
    for (char& c : r)
        c = c == '0' ? '1' : '0';
    return FinSeq(std::move(r));
}

bool FinSeq::is_prefix_of(const FinSeq& o) const
{
    return d_.size() <= o.d_.size() && o.d_.compare(0, d_.size(), d_) == 0;
}

bool FinSeq::is_proper_prefix_of(const FinSeq& o) const
{
    return d_.size() < o.d_.size() && is_prefix_of(o);
}

bool FinSeq::is_constant() const
{
    return std::all_of(d_.begin(), d_.end(), [&](char c) { return c == d_.front(); });
}

bool seq_less(const FinSeq& s, const FinSeq& t)
{
    if (t.is_proper_prefix_of(s))
        return true;
    std::size_t n = std::min(s.size(), t.size());
    for (std::size_t i = 0; i < n; ++i)
        if (s[i] != t[i])
            return s[i] < t[i];
    return false;
}

bool is_independent(const FinSeq& s, const FinSeq& t)
{
    return s == t || (!s.is_prefix_of(t) && !t.is_prefix_of(s));
}

bool dominates(const FinSeq& u, const std::vector<FinSeq>& vs)
{
    return std::all_of(vs.begin(), vs.end(), [&](const FinSeq& v) {
        return is_independent(u, v) || v.is_proper_prefix_of(u);
    });
}

Consecutiveness consecutiveness(const FinSeq& s, const FinSeq& t)
{
    if (s.empty() || t.empty())
        throw Error("consecutiveness needs nonempty sequences");
    const std::string& a = s.bits();
    std::size_t z = a.find_last_of('0');
    if (z != std::string::npos) {
        std::string u = a.substr(0, z);
        const std::string& b = t.bits();
        if (b.size() > u.size() && b.compare(0, u.size(), u) == 0 && b[u.size()] == '1' &&
            b.find('1', u.size() + 1) == std::string::npos)
            return Consecutiveness::consecutive;
    }
    if (s == FinSeq::repeat('0', s.size()) && t == FinSeq::repeat('1', t.size()))
        return Consecutiveness::cyclically_consecutive_only;
    return Consecutiveness::neither;
}

std::string to_string(Consecutiveness c)
{
    switch (c) {
    case Consecutiveness::consecutive: return "consecutive";
    case Consecutiveness::cyclically_consecutive_only: return "cyclically_consecutive_only";
    default: return "neither";
    }
}

namespace {

std::size_t primitive_period_length(const std::string& p)
{
    std::size_t n = p.size();
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && p[i] != p[k])
            k = fail[k];
        if (p[i] == p[k])
            ++k;
        fail[i + 1] = k;
    }
    std::size_t k = n - fail[n];
    return n % k == 0 ? k : n;
}

} // namespace

EpSeq::EpSeq(FinSeq prefix, FinSeq period)
{
    if (period.empty())
        throw Error("period must be nonempty");
    std::string per = period.bits();
    per.resize(primitive_period_length(per));
    std::string pre = prefix.bits();
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    }
    pre_ = FinSeq(std::move(pre));
    per_ = FinSeq(std::move(per));
}

EpSeq EpSeq::parse(std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw Error("expected prefix(period): " + std::string(text));
    std::string_view pre = text.substr(0, open);
    std::string_view per = text.substr(open + 1, text.size() - open - 2);
    if (per.empty())
        throw Error("period must be nonempty: " + std::string(text));
    return EpSeq(pre.empty() || pre == "e" ? FinSeq() : FinSeq(std::string(pre)), FinSeq(std::string(per)));
}

char EpSeq::digit(std::size_t i) const
{
    if (i < pre_.size())
        return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

std::string EpSeq::digits(std::size_t n) const
{
    std::string r;
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.push_back(digit(i));
    return r;
}

bool EpSeq::starts_with(const FinSeq& s) const
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (digit(i) != s[i])
            return false;
    return true;
}

EpSeq EpSeq::drop(std::size_t n) const
{
    if (n <= pre_.size())
        return EpSeq(pre_.drop(n), per_);
    std::size_t r = (n - pre_.size()) % per_.size();
    return EpSeq(FinSeq(), per_.drop(r) + per_.prefix(r));
}

bool tail_equivalent(const EpSeq& a, const EpSeq& b)
{
    const std::string& p = a.period().bits();
    const std::string& q = b.period().bits();
    return p.size() == q.size() && (p + p).find(q) != std::string::npos;
}

bool is_rational_point(const EpSeq& x) { return x.period().size() == 1; }

std::vector<EpSeq> enumerate_points(std::size_t n)
{
    std::set<EpSeq> seen;
    std::vector<EpSeq> out;
    for (std::size_t total = 1; total <= n; ++total) {
        for (std::size_t plen = 1; plen <= total; ++plen) {
            std::size_t qlen = total - plen;
            for (std::size_t a = 0; a < (std::size_t(1) << qlen); ++a) {
                for (std::size_t b = 0; b < (std::size_t(1) << plen); ++b) {
                    std::string pre, per;
                    for (std::size_t i = qlen; i-- > 0;)
                        pre.push_back((a >> i) & 1 ? '1' : '0');
                    for (std::size_t i = plen; i-- > 0;)
                        per.push_back((b >> i) & 1 ? '1' : '0');
                    EpSeq e{FinSeq(pre), FinSeq(per)};
                    if (seen.insert(e).second)
                        out.push_back(e);
                }
            }
        }
    }
    return out;
}

std::size_t PrefixSet::find_prefix_of(const FinSeq& s) const
{
    for (std::size_t i = 0; i < leaves_.size(); ++i)
        if (leaves_[i].is_prefix_of(s))
            return i;
    return npos;
}

std::size_t PrefixSet::index_of(const FinSeq& s) const
{
    auto it = std::find(leaves_.begin(), leaves_.end(), s);
    return it == leaves_.end() ? npos : static_cast<std::size_t>(it - leaves_.begin());
}

namespace {

void check_cover(const FinSeq& node, const std::vector<FinSeq>& leaves)
{
    std::vector<FinSeq> below;
    std::size_t exact = 0;
    for (const auto& l : leaves) {
        if (l == node)
            ++exact;
        else if (node.is_proper_prefix_of(l))
            below.push_back(l);
    }
    if (exact > 1)
        throw Error("overlapping leaves: " + node.str() + " has two initial segments");
    if (exact == 1) {
        if (!below.empty())
            throw Error("overlapping leaves: " + below.front().str() + " has two initial segments");
        return;
    }
    if (below.empty())
        throw Error("incomplete leaf set: " + node.str() + " has no initial segment");
    check_cover(node + '0', below);
    check_cover(node + '1', below);
}

bool leaf_less(const FinSeq& a, const FinSeq& b) { return seq_less(a, b); }

} // namespace

PrefixSet validate_prefix_set(std::vector<FinSeq> leaves)
{
    check_cover(FinSeq(), leaves);
    std::sort(leaves.begin(), leaves.end(), leaf_less);
    PrefixSet p;
    p.leaves_ = std::move(leaves);
    return p;
}

PrefixSet split_leaf(const PrefixSet& p, std::size_t i)
{
    PrefixSet r;
    r.leaves_ = p.leaves_;
    FinSeq l = r.leaves_[i];
    r.leaves_[i] = l + '0';
    r.leaves_.insert(r.leaves_.begin() + static_cast<std::ptrdiff_t>(i) + 1, l + '1');
    return r;
}

PrefixSet tree_with_leaves(const std::vector<FinSeq>& must)
{
    PrefixSet p;
    for (const auto& s : must) {
        std::size_t i = p.find_prefix_of(s);
        if (i == PrefixSet::npos)
            throw Error("dependent leaves requested: " + s.str());
        while (p[i].size() < s.size()) {
            char next = s[p[i].size()];
            p = split_leaf(p, i);
            if (next == '1')
                ++i;
        }
    }
    for (const auto& s : must)
        if (p.index_of(s) == PrefixSet::npos)
            throw Error("dependent leaves requested: " + s.str());
    return p;
}

} // namespace ppg
