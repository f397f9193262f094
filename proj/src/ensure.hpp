#pragma once

// Shared depth-raising machinery for y-products (G forms) and w-products (S forms).
//
// A factor type Fa provides
//   std::vector<FinSeq> subs() const;
//   static std::pair<TElem, std::vector<Fa>> amplify(const Fa&, std::size_t side);
//       (f = x · kids, kids pairwise independent and deeper than the amplified subscript)
//   Fa mapped(const TElem& g) const;   (g⁻¹ f g, g acting on every subscript)

#include "ppg/binseq.hpp"
#include "ppg/tpair.hpp"

#include <deque>
#include <functional>
#include <vector>

namespace ppg::detail {

using SeqPred = std::function<bool(const FinSeq&)>;

inline bool properly_extends_none(const FinSeq& u, const std::vector<FinSeq>& vs)
{
    for (const auto& v : vs)
        if (u.is_proper_prefix_of(v))
            return false;
    return true;
}

template <class Fa>
std::vector<FinSeq> all_subs(const std::vector<Fa>& fs)
{
    std::vector<FinSeq> r;
    for (const auto& f : fs)
        for (auto& s : f.subs())
            r.push_back(std::move(s));
    return r;
}

template <class Fa>
struct Ensured {
    TElem g;
    std::vector<Fa> list;
};

struct EnsureBudget {
    std::size_t steps = 0;
    std::size_t limit = 2'000'000;
};

// Returns (g, L') with L = g·L' as group elements, L' domination-ordered and
// pred true on every subscript of L'. pred must hold on all long enough
// sequences and be inherited by extensions.
template <class Fa>
Ensured<Fa> ensure(const std::vector<Fa>& L, const SeqPred& pred, EnsureBudget& budget)
{
    TElem g;
    std::vector<Fa> D;
    std::deque<Fa> queue(L.begin(), L.end());
    while (!queue.empty()) {
        if (++budget.steps > budget.limit)
            throw Error("depth raising exceeded its step budget");
        Fa lam = queue.front();
        queue.pop_front();
        std::vector<FinSeq> subs = lam.subs();
        std::size_t bad = subs.size();
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (!pred(subs[i])) {
                bad = i;
                break;
            }
        if (bad < subs.size()) {
            auto [x, kids] = Fa::amplify(lam, bad);
            std::vector<FinSeq> ks = all_subs(kids);
            SeqPred moved = [&, x = x, ks = ks](const FinSeq& u) {
                auto v = x.act(u);
                return v && pred(*v) && properly_extends_none(*v, ks);
            };
            Ensured<Fa> r = ensure(D, moved, budget);
            g = g.then(r.g).then(x);
            D.clear();
            for (const auto& f : r.list)
                D.push_back(f.mapped(x));
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                queue.push_front(*it);
            continue;
        }
        bool ordered = true;
        for (const auto& u : all_subs(D))
            if (!properly_extends_none(u, subs)) {
                ordered = false;
                break;
            }
        if (!ordered) {
            SeqPred deeper = [&, subs](const FinSeq& u) { return pred(u) && properly_extends_none(u, subs); };
            Ensured<Fa> r = ensure(D, deeper, budget);
            g = g.then(r.g);
            D = std::move(r.list);
        }
        D.push_back(std::move(lam));
    }
    return {g, std::move(D)};
}

} // namespace ppg::detail
