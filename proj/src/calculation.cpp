#include "ppg/calculation.hpp"

#include "ensure.hpp"
#include "ppg/eval.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace ppg {

namespace {

struct YUnit {
    FinSeq s;
    int e = 1;

    std::vector<FinSeq> subs() const { return {s}; }
    static std::pair<TElem, std::vector<YUnit>> amplify(const YUnit& u, std::size_t)
    {
        const FinSeq& s = u.s;
        if (u.e > 0)
            return {TElem::x(s), {{s + '0', 1}, {s + FinSeq("10"), -1}, {s + FinSeq("11"), 1}}};
        return {TElem::x(s).inverse(), {{s + FinSeq("00"), -1}, {s + FinSeq("01"), 1}, {s + '1', -1}}};
    }
    YUnit mapped(const TElem& g) const { return {*g.act(s), e}; }
};

void push_unit(std::vector<YUnit>& v, YUnit u)
{
    if (!v.empty() && v.back().s == u.s && v.back().e == -u.e)
        v.pop_back();
    else
        v.push_back(std::move(u));
}

void check_ordering(const std::vector<std::pair<FinSeq, long long>>& fs)
{
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].second == 0)
            throw Error("zero exponent in standard form");
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (fs[i].first.is_proper_prefix_of(fs[j].first))
                throw Error("ordering violated: " + fs[i].first.str() + " precedes " + fs[j].first.str());
    }
}

} // namespace

GStandardForm::GStandardForm(TElem head, std::vector<std::pair<FinSeq, long long>> fs)
    : f(std::move(head)), factors(std::move(fs))
{
    if (!f.in_F())
        throw Error("head of a G standard form must lie in F");
    check_ordering(factors);
}

GStandardForm GStandardForm::parse(std::string_view text)
{
    GroupWord w = GroupWord::parse(text);
    std::size_t k = 0;
    TElem head;
    while (k < w.size() && w.letters[k].is_T())
        head = head.then(letter_elem(w.letters[k++]));
    std::vector<std::pair<FinSeq, long long>> fs;
    bool literal = head.in_F();
    for (std::size_t i = k; i < w.size() && literal; ++i) {
        if (w.letters[i].gen != Gen::Y)
            literal = false;
        else
            fs.emplace_back(w.letters[i].s, w.letters[i].e);
    }
    if (literal) {
        try {
            return GStandardForm(head, fs);
        } catch (const Error&) {
        }
    }
    return g_standardize(w);
}

GroupWord GStandardForm::y_word() const
{
    GroupWord w;
    for (const auto& [s, e] : factors)
        w *= Letter::y(s, e);
    return w;
}

GroupWord GStandardForm::word() const { return word_of(f) * y_word(); }

std::string GStandardForm::str() const
{
    std::string h = f.is_identity() ? "" : word_of(f).str();
    std::string y = y_word().str();
    if (h.empty())
        return y;
    return y.empty() ? h : h + " " + y;
}

long long GStandardForm::exponent_sum() const
{
    long long t = 0;
    for (const auto& fa : factors)
        t += fa.second;
    return t;
}

GStandardForm g_standardize(const GroupWord& w)
{
    TElem head;
    std::vector<YUnit> lam;
    detail::EnsureBudget budget;
    auto append_y = [&](const FinSeq& s, int e) {
        detail::SeqPred pred = [&](const FinSeq& u) { return !u.is_proper_prefix_of(s); };
        auto r = detail::ensure(lam, pred, budget);
        head = head.then(r.g);
        lam = std::move(r.list);
        push_unit(lam, {s, e});
    };
    for (const auto& l : w.letters) {
        long long k = l.e < 0 ? -l.e : l.e;
        int sg = l.e < 0 ? -1 : 1;
        for (long long i = 0; i < k; ++i) {
            switch (l.gen) {
            case Gen::X:
            case Gen::P: {
                TElem h = letter_elem(Letter{l.gen, l.s, l.t, l.n, sg});
                detail::SeqPred pred = [&](const FinSeq& u) { return h.acts_on(u); };
                auto r = detail::ensure(lam, pred, budget);
                head = head.then(r.g).then(h);
                lam.clear();
                for (const auto& u : r.list)
                    lam.push_back(u.mapped(h));
                break;
            }
            case Gen::Y: append_y(l.s, sg); break;
            case Gen::W:
                append_y(sg > 0 ? l.s : l.t, 1);
                append_y(sg > 0 ? l.t : l.s, -1);
                break;
            }
        }
    }
    std::vector<std::pair<FinSeq, long long>> fs;
    for (const auto& u : lam) {
        if (!fs.empty() && fs.back().first == u.s) {
            fs.back().second += u.e;
            if (fs.back().second == 0)
                fs.pop_back();
        } else {
            fs.emplace_back(u.s, u.e);
        }
    }
    return GStandardForm(head, std::move(fs));
}

// --- calculations -----------------------------------------------------------

Calculation::Calculation(std::vector<CalcToken> stream, EpSeq residual)
    : stream_(std::move(stream)), residual_(std::move(residual))
{
}

void Calculation::pull(std::size_t upto)
{
    while (stream_.size() < upto) {
        stream_.push_back({residual_.digit(0), 0});
        residual_ = residual_.drop(1);
    }
}

std::string Calculation::emitted() const
{
    std::string r;
    for (const auto& t : stream_) {
        if (t.is_symbol())
            break;
        r += t.digit;
    }
    return r;
}

std::size_t Calculation::exponent() const
{
    return static_cast<std::size_t>(
        std::count_if(stream_.begin(), stream_.end(), [](const CalcToken& t) { return t.is_symbol(); }));
}

bool Calculation::has_adjacent_cancellation() const
{
    for (std::size_t i = 0; i + 1 < stream_.size(); ++i)
        if (stream_[i].is_symbol() && stream_[i].sign == -stream_[i + 1].sign)
            return true;
    return false;
}

namespace {

// One substitution: the symbol consumes `consumed` digits and leaves `out` followed by
// a symbol of sign `sign`.
struct Rule {
    std::size_t consumed;
    std::string out;
    int sign;
};

std::optional<Rule> rule_for(int sign, char d0, char d1)
{
    if (sign > 0) {
        if (d0 == '1')
            return Rule{1, "11", 1};
        if (d0 == '0' && d1 == '0')
            return Rule{2, "0", 1};
        if (d0 == '0' && d1 == '1')
            return Rule{2, "10", -1};
    } else {
        if (d0 == '0')
            return Rule{1, "00", -1};
        if (d0 == '1' && d1 == '0')
            return Rule{2, "01", 1};
        if (d0 == '1' && d1 == '1')
            return Rule{2, "1", -1};
    }
    return std::nullopt;
}

void apply_rule(std::vector<CalcToken>& ts, std::size_t i, const Rule& r)
{
    std::vector<CalcToken> repl;
    for (char c : r.out)
        repl.push_back({c, 0});
    repl.push_back({0, r.sign});
    ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i),
             ts.begin() + static_cast<std::ptrdiff_t>(i + 1 + r.consumed));
    ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
}

char token_digit(const std::vector<CalcToken>& ts, std::size_t i)
{
    if (i >= ts.size() || ts[i].is_symbol())
        return 0;
    return ts[i].digit;
}

} // namespace

bool Calculation::step(std::size_t k)
{
    std::size_t i = 0, seen = 0;
    for (; i < stream_.size(); ++i)
        if (stream_[i].is_symbol() && seen++ == k)
            break;
    if (i == stream_.size())
        return false;
    pull(i + 3);
    auto r = rule_for(stream_[i].sign, token_digit(stream_, i + 1), token_digit(stream_, i + 2));
    if (!r)
        return false;
    apply_rule(stream_, i, *r);
    return true;
}

std::string Calculation::render(std::size_t tail_digits) const
{
    std::size_t last = stream_.size();
    for (std::size_t i = 0; i < stream_.size(); ++i)
        if (stream_[i].is_symbol())
            last = i;
    std::string out;
    std::size_t i = 0;
    if (last != stream_.size()) {
        for (; i <= last; ++i)
            out += stream_[i].is_symbol() ? (stream_[i].sign > 0 ? "y" : "y⁻¹") : std::string(1, stream_[i].digit);
    }
    std::size_t d = 0;
    for (; i < stream_.size() && d < tail_digits; ++i, ++d)
        out += stream_[i].digit;
    for (std::size_t j = 0; d < tail_digits; ++j, ++d)
        out += residual_.digit(j);
    return out + "…";
}

EpSeq Calculation::point() const
{
    EpSeq r = residual_;
    for (auto it = stream_.rbegin(); it != stream_.rend(); ++it) {
        if (it->is_symbol())
            r = eval(GroupWord{{Letter::y(FinSeq(), it->sign)}}, r);
        else
            r = r.prepend(FinSeq(std::string(1, it->digit)));
    }
    return r;
}

namespace {

// Inserts the symbols of each factor whose subscript is a prefix of the known digits.
std::vector<CalcToken> initial_stream(const std::string& digits,
                                      const std::vector<std::pair<FinSeq, long long>>& factors)
{
    std::vector<CalcToken> ts;
    for (char c : digits)
        ts.push_back({c, 0});
    for (const auto& [s, t] : factors) {
        if (digits.compare(0, s.size(), s.bits()) != 0)
            continue;
        std::size_t pos = 0, count = 0;
        while (count < s.size()) {
            if (!ts[pos].is_symbol())
                ++count;
            ++pos;
        }
        long long k = t < 0 ? -t : t;
        for (long long j = 0; j < k; ++j)
            ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(pos), CalcToken{0, t < 0 ? -1 : 1});
    }
    return ts;
}

std::size_t max_subscript(const GStandardForm& form)
{
    std::size_t m = 0;
    for (const auto& fa : form.factors)
        m = std::max(m, fa.first.size());
    return m;
}

} // namespace

Calculation calculation_of(const GStandardForm& form, const EpSeq& xi)
{
    EpSeq eta = form.f.act(xi);
    std::size_t L = max_subscript(form);
    return Calculation(initial_stream(eta.digits(L), form.factors), eta.drop(L));
}

std::size_t exponent_of(const Calculation& c) { return c.exponent(); }

std::size_t default_cancellation_depth(const GStandardForm& form)
{
    std::size_t d = 4;
    for (const auto& [s, t] : form.factors)
        d += s.size() + 2 * static_cast<std::size_t>(t < 0 ? -t : t);
    return std::min<std::size_t>(d, 12);
}

namespace {

class CancellationSearch {
public:
    // True if some substitution sequence from `ts`, reading at most `extra` more
    // input digits, brings two opposite symbols together; `input` collects the
    // digits read.
    bool run(std::vector<CalcToken> ts, std::size_t extra, std::string& input)
    {
        std::size_t lead = 0;
        while (lead < ts.size() && !ts[lead].is_symbol())
            ++lead;
        ts.erase(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(lead));
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            if (ts[i].is_symbol() && ts[i].sign == -ts[i + 1].sign)
                return true;
        std::string key = state_key(ts, extra);
        if (dead_.count(key))
            return false;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!ts[i].is_symbol())
                continue;
            if (auto r = rule_for(ts[i].sign, token_digit(ts, i + 1), token_digit(ts, i + 2))) {
                std::vector<CalcToken> nt = ts;
                apply_rule(nt, i, *r);
                std::string ni = input;
                if (run(std::move(nt), extra, ni)) {
                    input = std::move(ni);
                    return true;
                }
                continue;
            }
            std::size_t j = i + 1;
            while (j < ts.size() && !ts[j].is_symbol())
                ++j;
            if (j == ts.size() && extra > 0)
                for (char c : {'0', '1'}) {
                    std::vector<CalcToken> nt = ts;
                    nt.push_back({c, 0});
                    std::string ni = input + c;
                    if (run(std::move(nt), extra - 1, ni)) {
                        input = std::move(ni);
                        return true;
                    }
                }
        }
        dead_.insert(std::move(key));
        return false;
    }

private:
    static std::string state_key(const std::vector<CalcToken>& ts, std::size_t extra)
    {
        std::string k = std::to_string(extra) + ":";
        for (const auto& t : ts)
            k += t.is_symbol() ? (t.sign > 0 ? 'Y' : 'I') : t.digit;
        return k;
    }

    std::unordered_set<std::string> dead_;
};

} // namespace

std::optional<EpSeq> find_potential_cancellation(const GStandardForm& form, std::size_t depth_bound)
{
    if (depth_bound < 1)
        throw Error("depth bound must be at least 1");
    if (form.factors.empty())
        return std::nullopt;
    std::size_t L = max_subscript(form);
    CancellationSearch search;
    TElem finv = form.f.inverse();
    for (std::size_t code = 0; code < (std::size_t(1) << L); ++code) {
        std::string digits;
        for (std::size_t i = L; i-- > 0;)
            digits.push_back((code >> i) & 1 ? '1' : '0');
        std::vector<CalcToken> ts = initial_stream(digits, form.factors);
        std::string input = digits;
        if (search.run(ts, depth_bound, input))
            return finv.act(EpSeq(FinSeq(input), FinSeq("0")));
    }
    return std::nullopt;
}

std::optional<EpSeq> tail_eq_witness(const GStandardForm& form, const FinSeq& region, std::size_t search_bound)
{
    if (form.factors.empty())
        throw Error("empty support: the form has no percolating factors");
    bool meets = false;
    for (const auto& [d, r] : form.f.pairs()) {
        FinSeq piece;
        if (d.is_prefix_of(region))
            piece = r + region.drop(d.size());
        else if (region.is_proper_prefix_of(d))
            piece = r;
        else
            continue;
        for (const auto& fa : form.factors)
            if (!is_independent(piece, fa.first) || piece == fa.first)
                meets = true;
    }
    if (!meets)
        throw Error("region " + region.str() + " lies outside the support");
    CompiledWord w(form.word());
    for (std::size_t total = 1; total <= search_bound; ++total)
        for (std::size_t plen = 1; plen <= total; ++plen) {
            std::size_t ulen = total - plen;
            for (std::size_t a = 0; a < (std::size_t(1) << ulen); ++a)
                for (std::size_t b = 0; b < (std::size_t(1) << plen); ++b) {
                    std::string u, v;
                    for (std::size_t i = ulen; i-- > 0;)
                        u.push_back((a >> i) & 1 ? '1' : '0');
                    for (std::size_t i = plen; i-- > 0;)
                        v.push_back((b >> i) & 1 ? '1' : '0');
                    EpSeq tau(region + FinSeq(u), FinSeq(v));
                    if (!tail_equivalent(w(tau), tau))
                        return tau;
                }
        }
    return std::nullopt;
}

} // namespace ppg
