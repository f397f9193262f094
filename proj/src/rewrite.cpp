#include "ppg/rewrite.hpp"

#include "ppg/eval.hpp"
#include "sbuilder.hpp"

#include <map>
#include <mutex>
#include <set>

namespace ppg {

using detail::independent_all;
using detail::SBuilder;

namespace {

void check(bool ok, const char* what)
{
    if (!ok)
        throw Error(std::string("rewriting invariant failed: ") + what);
}

FinSeq operator+(const FinSeq& s, const char* bits) { return s + FinSeq(bits); }

// The trailing unbalanced factor w_{u,v} carried through a balanced segment.
struct Pending {
    FinSeq u, v;
};

// P·F = (T letter)·(balanced factors)·P' for one copy of a balanced F dominated by P.
void push_past(SBuilder& b, Pending& P, const WFactor& F)
{
    const FinSeq& s = F.s;
    const FinSeq& t = F.t;
    bool pu = P.u[0] == s[0];
    const FinSeq& p = pu ? P.u : P.v;
    if (is_independent(p, s) && is_independent(p, t)) {
        b.append({s, t, 1});
        return;
    }
    if (s.is_prefix_of(p)) {
        TElem x = TElem::x(t).inverse();
        check(x.act(P.u) == P.u && x.act(P.v) == P.v, "x_t^-1 fixes the carried factor");
        b.apply(x, "amplify " + F.str() + " on its second side");
        if (pu) {
            check(independent_all({P.u, P.v, t + "01", t + "00"}), "relabel");
            b.append({P.u, t + "00", 1});
            b.append({s, t + '1', 1});
            P.u = t + "01";
        } else {
            check(independent_all({P.u, P.v, t + "01", t + "00"}), "relabel");
            b.append({t + "01", P.v, 1});
            b.append({s, t + '1', 1});
            P.v = t + "00";
        }
        return;
    }
    check(t.is_prefix_of(p), "carried factor dominates the segment");
    TElem x = TElem::x(s);
    check(x.act(P.u) == P.u && x.act(P.v) == P.v, "x_s fixes the carried factor");
    b.apply(x, "amplify " + F.str() + " on its first side");
    check(independent_all({P.u, P.v, s + '0', s + "10"}), "relabel");
    if (pu) {
        b.append({P.u, s + "10", 1});
        b.append({s + "11", t, 1});
        P.u = s + '0';
    } else {
        b.append({s + '0', P.v, 1});
        b.append({s + "11", t, 1});
        P.v = s + "10";
    }
}

// P·N for unbalanced factors of opposite parity, N dominated by P.
void pair_off(SBuilder& b, Pending P, Pending N)
{
    // N = w_{a,c}: c shares its half with P.u, a with P.v.
    if (!is_independent(P.u, N.v)) {
        const FinSeq c = N.v;
        check(c.is_proper_prefix_of(P.u), "carried factor dominates its partner");
        while (P.u.size() < c.size() + 4) {
            b.apply(TElem::x(P.u), "amplify w_{" + P.u.str() + "," + P.v.str() + "} on its first side");
            b.append({P.u + '0', P.u + "10", 1});
            P.u = P.u + "11";
        }
        TElem g = TElem::x(c).inverse().then(TElem::x(c + '1').inverse());
        auto us = g.act(P.u);
        check(us && g.act(P.v) == P.v, "partner amplifiers act on the carried factor");
        b.apply(g, "amplify w_{" + N.u.str() + "," + c.str() + "} twice on its second side");
        if ((c + "00").is_prefix_of(*us) || (c + "01").is_prefix_of(*us)) {
            b.append({*us, c + "100", 1});
            b.append({c + "01", c + "00", 1});
            P.u = c + "101";
        } else {
            b.append({*us, c + "00", 1});
            b.append({c + "101", c + "100", 1});
            P.u = c + "01";
        }
        N.v = c + "11";
    }
    if (!is_independent(P.v, N.u)) {
        const FinSeq a = N.u;
        check(a.is_proper_prefix_of(P.v), "carried factor dominates its partner");
        while (P.v.size() < a.size() + 4) {
            b.apply(TElem::x(P.v).inverse(), "amplify w_{" + P.u.str() + "," + P.v.str() + "} on its second side");
            b.append({P.v + "01", P.v + "00", 1});
            P.v = P.v + '1';
        }
        TElem g = TElem::x(a).then(TElem::x(a + "11"));
        auto vs = g.act(P.v);
        check(vs && g.act(P.u) == P.u, "partner amplifiers act on the carried factor");
        b.apply(g, "amplify w_{" + a.str() + "," + N.v.str() + "} twice on its first side");
        if ((a + '0').is_prefix_of(*vs) || (a + "10").is_prefix_of(*vs)) {
            b.append({a + "110", *vs, 1});
            b.append({a + '0', a + "10", 1});
            P.v = a + "1110";
        } else {
            b.append({a + '0', *vs, 1});
            b.append({a + "110", a + "1110", 1});
            P.v = a + "10";
        }
        N.u = a + "1111";
    }
    check(independent_all({P.u, P.v, N.u, N.v}), "final relabel");
    b.append({P.u, N.v, 1});
    b.append({N.u, P.v, 1});
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > UINT64_MAX / a)
        return UINT64_MAX;
    return a * b;
}

std::size_t tree_leaves(const std::vector<FinSeq>& subs)
{
    std::set<FinSeq> internal;
    for (const auto& s : subs)
        for (std::size_t k = 0; k < s.size(); ++k)
            internal.insert(s.prefix(k));
    return internal.size() + 1;
}

std::size_t longest(const std::vector<WFactor>& fs)
{
    std::size_t m = 0;
    for (const auto& f : fs)
        m = std::max({m, f.s.size(), f.t.size()});
    return m;
}

// Replaces each factor missing the pivot by w_{σ,p} w_{p,τ} (one pair per copy).
std::vector<WFactor> pad(const std::vector<WFactor>& fs, const FinSeq& p)
{
    std::vector<WFactor> out;
    for (const auto& f : fs) {
        if (f.s == p || f.t == p) {
            out.push_back(f);
            continue;
        }
        for (long long c = 0; c < f.power; ++c) {
            out.push_back({f.s, p, 1});
            out.push_back({p, f.t, 1});
        }
    }
    return detail::normalize(std::move(out));
}

bool try_cancel(SStandardForm& L, const FinSeq& p, Trace* trace)
{
    auto& fs = L.factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const FinSeq& sigma = fs[i].s == p ? fs[i].t : fs[i].s;
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!(fs[j].s == fs[i].t && fs[j].t == fs[i].s)) {
                if (!is_independent(fs[j].s, sigma) || !is_independent(fs[j].t, sigma))
                    break;
                continue;
            }
            std::string label = "cancel " + fs[i].str() + " with " + fs[j].str();
            long long c = std::min(fs[i].power, fs[j].power);
            std::vector<WFactor> nf = fs;
            nf[i].power -= c;
            nf[j].power -= c;
            L = SStandardForm(L.head, detail::normalize(std::move(nf)));
            if (trace)
                trace->push_back({label, L.str()});
            return true;
        }
    }
    return false;
}

bool try_ar(SStandardForm& L, const FinSeq& p, Trace* trace)
{
    for (std::size_t i = 0; i < L.factors.size(); ++i)
        for (Side side : {Side::first, Side::second}) {
            const FinSeq& x = side == Side::first ? L.factors[i].s : L.factors[i].t;
            if (x == p)
                continue;
            Classification c = classify(L, i, side);
            if (!c.sheltered || !c.free)
                continue;
            Move m{MoveKind::ar, i, side, {}};
            SStandardForm r = apply_move(L, m);
            L = SStandardForm(r.head, pad(r.factors, p));
            if (trace)
                trace->push_back({m.str() + " on " + x.str(), L.str()});
            return true;
        }
    return false;
}

std::optional<EpSeq> moved_by(const TElem& g, std::size_t max_size)
{
    for (const auto& xi : enumerate_points(max_size))
        if (g.act(xi) != xi)
            return xi;
    return std::nullopt;
}

} // namespace

BalanceResult balance(const SStandardForm& form, Trace* trace)
{
    SStandardForm cur = form;
    for (;;) {
        const auto& fs = cur.factors;
        std::optional<std::size_t> prev;
        std::size_t i = fs.size(), j = fs.size();
        long long uneven = 0;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (fs[k].balanced())
                continue;
            uneven += fs[k].power;
            if (j == fs.size() && prev && fs[*prev].s[0] != fs[k].s[0]) {
                i = *prev;
                j = k;
            }
            prev = k;
        }
        if (uneven == 0)
            return {cur, false, ""};
        if (j == fs.size()) {
            std::string par = fs[*prev].s[0] == '0' ? "(0,1)" : "(1,0)";
            return {cur, true,
                    std::to_string(uneven) + " unbalanced factor copies, all of parity " + par +
                        "; no balanced form exists"};
        }
        SBuilder b(cur.head, trace);
        for (std::size_t k = 0; k < i; ++k)
            b.append(fs[k]);
        b.append({fs[i].s, fs[i].t, fs[i].power - 1});
        Pending P{fs[i].s, fs[i].t};
        for (std::size_t k = i + 1; k < j; ++k)
            for (long long c = 0; c < fs[k].power; ++c)
                push_past(b, P, {fs[k].s, fs[k].t, 1});
        pair_off(b, P, {fs[j].s, fs[j].t});
        b.append({fs[j].s, fs[j].t, fs[j].power - 1});
        for (std::size_t k = j + 1; k < fs.size(); ++k)
            b.append(fs[k]);
        cur = b.form();
        if (trace)
            trace->push_back({"balanced one pair", cur.str()});
    }
}

Halves split_halves(const SStandardForm& form)
{
    Halves h{form.head, {}, {}};
    for (const auto& f : form.factors) {
        if (!f.balanced())
            throw Error("split_halves needs a balanced form; " + f.str() + " is unbalanced");
        (f.s[0] == '0' ? h.zero : h.one).push_back(f);
    }
    return h;
}

Reduction reduce_half(const std::vector<WFactor>& half, Trace* trace)
{
    Reduction r;
    if (half.empty())
        return r;
    char side = half[0].s[0];
    FinSeq p(side == '0' ? "1" : "0");
    for (const auto& f : half)
        if (f.s[0] != side || f.t[0] != side)
            throw Error("reduce_half: " + f.str() + " is not in the " + std::string(1, side) + "-half");
    SStandardForm L(TElem(), pad(half, p));
    r.initial_factors = L.factors.size();
    r.leaf_bound = tree_leaves(L.subscripts());
    std::uint64_t pw = 1;
    for (std::size_t k = 0; k <= r.leaf_bound; ++k)
        pw = sat_mul(pw, 3);
    r.bound = sat_mul(sat_mul(2, r.initial_factors), pw);
    r.max_subscript = longest(L.factors);
    if (trace)
        trace->push_back({"pad with w_{" + p.str() + "," + p.str() + "}", L.str()});
    for (;;) {
        if (try_cancel(L, p, trace) || try_ar(L, p, trace)) {
            ++r.manipulations;
            r.max_subscript = std::max(r.max_subscript, longest(L.factors));
            if (r.manipulations > r.bound)
                break;
            continue;
        }
        break;
    }
    r.form = L;
    return r;
}

std::string TrivialityResult::str() const
{
    if (trivial)
        return "trivial";
    std::string r = "nontrivial";
    if (parity_blocked)
        r += " (unbalanced parity)";
    if (witness)
        r += ", moves " + witness->str();
    return r;
}

namespace {

const std::vector<EpSeq>& points_up_to(std::size_t max_size)
{
    static std::mutex mu;
    static std::map<std::size_t, std::vector<EpSeq>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(max_size);
    if (it == cache.end())
        it = cache.emplace(max_size, enumerate_points(max_size)).first;
    return it->second;
}

} // namespace

std::optional<EpSeq> find_moved_point(const GroupWord& w, std::size_t max_size)
{
    CompiledWord cw(w);
    for (const auto& xi : points_up_to(max_size))
        if (cw(xi) != xi)
            return xi;
    return std::nullopt;
}

TrivialityResult is_trivial(const GroupWord& w, bool with_trace)
{
    TrivialityResult r;
    Trace* tr = with_trace ? &r.trace : nullptr;
    SStandardForm f = to_standard_form(w, tr);
    BalanceResult br = balance(f, tr);
    if (br.blocked) {
        r.parity_blocked = true;
        if (tr)
            tr->push_back({br.report, br.form.str()});
        r.witness = find_moved_point(w, 10);
        return r;
    }
    Halves h = split_halves(br.form);
    Reduction r0 = reduce_half(h.zero, tr);
    Reduction r1 = reduce_half(h.one, tr);
    if (r0.form.factors.empty() && r1.form.factors.empty()) {
        TElem total = h.head.then(r0.form.head).then(r1.form.head);
        r.trivial = total.is_identity();
        if (!r.trivial) {
            r.witness = moved_by(total, 10);
            if (!r.witness)
                r.witness = find_moved_point(w, 10);
        }
        return r;
    }
    CompiledWord cw(w);
    TElem back = h.head.inverse();
    for (const Reduction* rd : {&r0, &r1}) {
        if (rd->form.factors.empty())
            continue;
        GStandardForm g = literal_translate(rd->form);
        for (const auto& region : rd->form.subscripts()) {
            std::optional<EpSeq> tau;
            try {
                tau = tail_eq_witness(g, region, 8);
            } catch (const Error&) {
                continue;
            }
            if (!tau)
                continue;
            EpSeq xi = back.act(*tau);
            if (cw(xi) != xi) {
                r.witness = xi;
                return r;
            }
        }
    }
    r.witness = find_moved_point(w, 10);
    return r;
}

bool words_equal(const GroupWord& a, const GroupWord& b)
{
    return is_trivial(a * word_inverse(b)).trivial;
}

} // namespace ppg
