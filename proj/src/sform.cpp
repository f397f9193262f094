#include "ppg/sform.hpp"

#include "sbuilder.hpp"

#include <algorithm>

namespace ppg {

std::string WFactor::str() const
{
    return Letter{Gen::W, s, t, 0, power}.str();
}

SStandardForm::SStandardForm(TElem h, std::vector<WFactor> fs) : head(std::move(h)), factors(std::move(fs))
{
    validate();
}

void SStandardForm::validate() const
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const WFactor& f = factors[i];
        if (f.power <= 0)
            throw Error("factor " + f.str() + " has nonpositive power");
        if (f.s.empty() || f.t.empty() || f.s == f.t || !is_independent(f.s, f.t))
            throw Error("factor " + f.str() + " has dependent subscripts");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            for (const auto& u : {f.s, f.t})
                for (const auto& v : {factors[j].s, factors[j].t})
                    if (u.is_proper_prefix_of(v))
                        throw Error("factor " + factors[j].str() + " is not dominated by " + f.str());
    }
}

std::vector<FinSeq> SStandardForm::subscripts() const
{
    std::vector<FinSeq> r;
    for (const auto& f : factors) {
        r.push_back(f.s);
        r.push_back(f.t);
    }
    return r;
}

namespace {

// A single x_s^{±1} letter when the head is one, else the generic F/T spelling.
GroupWord head_word(const TElem& h)
{
    if (h.is_identity())
        return {};
    if (h.in_F()) {
        std::size_t depth = 0;
        for (const auto& pr : h.pairs())
            depth = std::max({depth, pr.first.size(), pr.second.size()});
        std::vector<FinSeq> layer = {FinSeq()};
        for (std::size_t len = 0; len < depth && len < 12; ++len) {
            std::vector<FinSeq> next;
            for (const auto& s : layer) {
                TElem x = TElem::x(s);
                if (x == h)
                    return GroupWord{{Letter::x(s)}};
                if (x.inverse() == h)
                    return GroupWord{{Letter::x(s, -1)}};
                next.push_back(s + '0');
                next.push_back(s + '1');
            }
            layer = std::move(next);
        }
    }
    return word_of(h);
}

} // namespace

GroupWord SStandardForm::word() const
{
    GroupWord w = head_word(head);
    for (const auto& f : factors)
        w *= Letter{Gen::W, f.s, f.t, 0, f.power};
    return w;
}

std::string SStandardForm::str() const
{
    std::string r = word().str();
    return r.empty() ? "1" : r;
}

SMetrics metrics(const SStandardForm& form)
{
    SMetrics m;
    for (const auto& f : form.factors) {
        std::size_t d = std::min(f.s.size(), f.t.size());
        if (!m.depth || d < *m.depth)
            m.depth = d;
        m.length += f.power;
        if (!f.balanced())
            m.unevenness += f.power;
    }
    m.balanced = m.unevenness == 0;
    return m;
}

namespace {

const char* side_name(Side s) { return s == Side::first ? "first" : "second"; }

} // namespace

std::vector<WFactor> detail::normalize(std::vector<WFactor> fs)
{
    std::vector<WFactor> out;
    for (auto& f : fs) {
        if (f.power <= 0 || f.s == f.t)
            continue;
        while (!out.empty() && f.power > 0) {
            WFactor& last = out.back();
            if (last.s == f.s && last.t == f.t) {
                last.power += f.power;
                f.power = 0;
            } else if (last.s == f.t && last.t == f.s) {
                long long c = std::min(last.power, f.power);
                last.power -= c;
                f.power -= c;
                if (last.power == 0)
                    out.pop_back();
            } else {
                break;
            }
        }
        if (f.power > 0)
            out.push_back(f);
    }
    return out;
}

namespace {

void need_pair(const SStandardForm& form, std::size_t i)
{
    if (i + 1 >= form.factors.size())
        throw Error("move needs factors " + std::to_string(i) + " and " + std::to_string(i + 1));
}

TElem amplifier(const WFactor& f, Side side)
{
    return side == Side::first ? TElem::x(f.s) : TElem::x(f.t).inverse();
}

std::vector<WFactor> offspring(const WFactor& f, Side side)
{
    std::vector<WFactor> r;
    if (side == Side::first)
        r = {{f.s + '0', f.s + FinSeq("10"), 1}, {f.s + FinSeq("11"), f.t, 1}};
    else
        r = {{f.s, f.t + '1', 1}, {f.t + FinSeq("01"), f.t + FinSeq("00"), 1}};
    if (f.power > 1)
        r.push_back({f.s, f.t, f.power - 1});
    return r;
}

std::optional<std::size_t> first_unacted(const SStandardForm& form, std::size_t upto, const TElem& x,
                                         Side* which)
{
    for (std::size_t j = 0; j < upto; ++j) {
        if (!x.acts_on(form.factors[j].s)) {
            *which = Side::first;
            return j;
        }
        if (!x.acts_on(form.factors[j].t)) {
            *which = Side::second;
            return j;
        }
    }
    return std::nullopt;
}

bool covered(const FinSeq& p, const std::vector<FinSeq>& E)
{
    bool deeper = false;
    for (const auto& u : E) {
        if (u.is_prefix_of(p))
            return true;
        if (p.is_proper_prefix_of(u))
            deeper = true;
    }
    return deeper && covered(p + '0', E) && covered(p + '1', E);
}

} // namespace

std::string Move::str() const
{
    std::string i = std::to_string(index);
    switch (kind) {
    case MoveKind::rearrangement: return "rearrangement(" + letter.str() + ")";
    case MoveKind::commuting: return "commuting(" + i + ")";
    case MoveKind::relabelling: return "relabelling(" + i + ")";
    case MoveKind::amplification: return std::string("amplification(") + i + "," + side_name(side) + ")";
    case MoveKind::cancellation: return "cancellation(" + i + ")";
    case MoveKind::ar: return std::string("AR(") + i + "," + side_name(side) + ")";
    }
    return "?";
}

SStandardForm apply_move(const SStandardForm& form, const Move& m)
{
    std::vector<WFactor> fs = form.factors;
    TElem head = form.head;
    switch (m.kind) {
    case MoveKind::rearrangement: {
        if (!m.letter.is_T())
            throw Error("rearrangement needs an x or p letter");
        TElem h = letter_elem(m.letter);
        for (auto& f : fs) {
            auto s = h.act(f.s), t = h.act(f.t);
            if (!s || !t)
                throw Error(m.letter.str() + " does not act on " + f.str());
            f = {*s, *t, f.power};
        }
        head = head.then(h);
        break;
    }
    case MoveKind::commuting: {
        need_pair(form, m.index);
        const WFactor &a = fs[m.index], &b = fs[m.index + 1];
        if (!detail::independent_all({a.s, a.t, b.s, b.t}))
            throw Error("commuting " + a.str() + " and " + b.str() + ": subscripts are not independent");
        std::swap(fs[m.index], fs[m.index + 1]);
        break;
    }
    case MoveKind::relabelling: {
        need_pair(form, m.index);
        WFactor a = fs[m.index], b = fs[m.index + 1];
        if (!detail::independent_all({a.s, a.t, b.s, b.t}))
            throw Error("relabelling " + a.str() + " and " + b.str() + ": subscripts are not independent");
        std::vector<WFactor> mid = {{a.s, a.t, a.power - 1}, {a.s, b.t, 1}, {b.s, a.t, 1}, {b.s, b.t, b.power - 1}};
        fs.erase(fs.begin() + m.index, fs.begin() + m.index + 2);
        fs.insert(fs.begin() + m.index, mid.begin(), mid.end());
        break;
    }
    case MoveKind::cancellation: {
        need_pair(form, m.index);
        WFactor a = fs[m.index], b = fs[m.index + 1];
        if (a.t != b.s || !is_independent(a.s, b.t))
            throw Error("no cancellation between " + a.str() + " and " + b.str());
        std::vector<WFactor> mid = {{a.s, a.t, a.power - 1}, {a.s, b.t, 1}, {b.s, b.t, b.power - 1}};
        fs.erase(fs.begin() + m.index, fs.begin() + m.index + 2);
        fs.insert(fs.begin() + m.index, mid.begin(), mid.end());
        break;
    }
    case MoveKind::amplification:
        if (m.index != 0)
            throw Error("amplification inside the word leaves a T letter between factors; use AR");
        [[fallthrough]];
    case MoveKind::ar: {
        if (m.index >= fs.size())
            throw Error("no factor " + std::to_string(m.index));
        TElem x = amplifier(fs[m.index], m.side);
        for (std::size_t j = 0; j < m.index; ++j) {
            auto s = x.act(fs[j].s), t = x.act(fs[j].t);
            if (!s || !t)
                throw Error("subscript is not free: barrier at factor " + std::to_string(j));
            fs[j] = {*s, *t, fs[j].power};
        }
        std::vector<WFactor> kids = offspring(fs[m.index], m.side);
        fs.erase(fs.begin() + m.index);
        fs.insert(fs.begin() + m.index, kids.begin(), kids.end());
        head = head.then(x);
        break;
    }
    }
    return SStandardForm(head, detail::normalize(std::move(fs)));
}

std::string Classification::str() const
{
    std::string r = sheltered ? "sheltered" : "exposed";
    r += free ? ", free" : ", not free";
    if (barrier)
        r += ", barrier at factor " + std::to_string(barrier->first) + " (" + side_name(barrier->second) + ")";
    return r;
}

Classification classify(const SStandardForm& form, std::size_t i, Side which)
{
    if (i >= form.factors.size())
        throw Error("no factor " + std::to_string(i));
    const WFactor& f = form.factors[i];
    const FinSeq& x = which == Side::first ? f.s : f.t;
    std::vector<FinSeq> E;
    for (std::size_t j = 0; j < i; ++j)
        for (const auto& u : {form.factors[j].s, form.factors[j].t})
            if (x.is_proper_prefix_of(u))
                E.push_back(u);
    Classification c;
    c.sheltered = covered(x + '0', E) && covered(x + '1', E);
    Side bs = Side::first;
    if (auto j = first_unacted(form, i, amplifier(f, which), &bs))
        c.barrier = std::make_pair(*j, bs);
    c.free = !c.barrier;
    return c;
}

namespace detail {

bool independent_all(std::initializer_list<FinSeq> seqs)
{
    for (auto a = seqs.begin(); a != seqs.end(); ++a)
        for (auto b = a + 1; b != seqs.end(); ++b)
            if (!is_independent(*a, *b))
                return false;
    return true;
}

SBuilder::SBuilder(const SStandardForm& form, Trace* trace) : head_(form.head), trace_(trace)
{
    for (const auto& f : form.factors)
        list_.push_back({f});
}

void SBuilder::record(const std::string& label)
{
    if (trace_)
        trace_->push_back({label, form().str()});
}

void SBuilder::apply(const TElem& h, const std::string& label)
{
    if (h.is_identity())
        return;
    Ensured<SUnit> r = ensure(list_, [&](const FinSeq& u) { return h.acts_on(u); }, budget_);
    head_ = head_.then(r.g).then(h);
    list_.clear();
    for (const auto& u : r.list)
        list_.push_back(u.mapped(h));
    record(label);
}

void SBuilder::append(const WFactor& f0)
{
    WFactor f = f0;
    if (f.power < 0) {
        std::swap(f.s, f.t);
        f.power = -f.power;
    }
    if (f.power == 0 || f.s == f.t)
        return;
    if (!list_.empty()) {
        WFactor& last = list_.back().f;
        if (last.s == f.s && last.t == f.t) {
            last.power += f.power;
            record("append " + f0.str());
            return;
        }
        if (last.s == f.t && last.t == f.s) {
            long long c = std::min(last.power, f.power);
            last.power -= c;
            f.power -= c;
            if (last.power == 0)
                list_.pop_back();
            if (f.power == 0) {
                record("cancel " + f0.str());
                return;
            }
            append(f);
            return;
        }
    }
    std::vector<FinSeq> subs = {f.s, f.t};
    Ensured<SUnit> r = ensure(list_, [&](const FinSeq& u) { return properly_extends_none(u, subs); }, budget_);
    head_ = head_.then(r.g);
    list_ = std::move(r.list);
    list_.push_back({f});
    record("append " + f0.str());
}

void SBuilder::ensure_all(const SeqPred& pred, const std::string& label)
{
    Ensured<SUnit> r = ensure(list_, pred, budget_);
    head_ = head_.then(r.g);
    list_ = std::move(r.list);
    record(label);
}

SStandardForm SBuilder::form() const
{
    std::vector<WFactor> fs;
    for (const auto& u : list_)
        fs.push_back(u.f);
    return SStandardForm(head_, normalize(std::move(fs)));
}

} // namespace detail

SStandardForm raise_depth(const SStandardForm& form, std::size_t m)
{
    detail::SBuilder b(form);
    b.ensure_all([m](const FinSeq& u) { return u.size() >= m; }, "raise depth");
    return b.form();
}

SStandardForm to_standard_form(const GroupWord& w, Trace* trace)
{
    detail::SBuilder b(TElem(), trace);
    for (const auto& l : w.letters) {
        switch (l.gen) {
        case Gen::X:
        case Gen::P: b.apply(letter_elem(l), "rearrange " + l.str()); break;
        case Gen::W: b.append({l.s, l.t, l.e}); break;
        case Gen::Y: throw Error("letter " + l.str() + " is not a generator of S");
        }
    }
    return b.form();
}

GStandardForm literal_translate(const SStandardForm& form)
{
    if (!form.head.in_F())
        throw Error("literal translation needs a head in F");
    std::vector<std::pair<FinSeq, long long>> ys;
    for (const auto& f : form.factors) {
        ys.push_back({f.s, f.power});
        ys.push_back({f.t, -f.power});
    }
    return GStandardForm(form.head, std::move(ys));
}

} // namespace ppg
