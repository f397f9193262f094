#include "ppg/semiconj.hpp"

#include "ppg/eval.hpp"

#include <algorithm>

namespace ppg {

ProjPoint phi(const EpSeq& xi)
{
    if (!is_rational_point(xi))
        throw Error("phi is only computed at points with a constant tail: " + xi.str());
    const Mobius one(1, 1, 0, 1), zero(1, 0, 1, 1);
    ProjPoint v = xi.period()[0] == '0' ? ProjPoint(0) : ProjPoint::infinity();
    const std::string& pre = xi.prefix().bits();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it)
        v = (*it == '1' ? one : zero).apply(v);
    return v;
}

ProjPoint Phi(const EpSeq& xi)
{
    if (!is_rational_point(xi))
        throw Error("Phi is only computed at points with a constant tail: " + xi.str());
    if (xi.digit(0) == '1')
        return phi(xi.drop(1));
    ProjPoint v = phi(xi.drop(1).flipped());
    return v.is_inf() ? v : ProjPoint(Rational(-v.value()));
}

bool SemiconjReport::all_pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const SemiconjEntry& e) { return e.pass; });
}

std::size_t SemiconjReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const SemiconjEntry& e) { return !e.pass; }));
}

SemiconjReport check_semiconjugacy(const GroupWord& cantor_word, const PiecewiseMap& circle_map,
                                   const std::vector<EpSeq>& points)
{
    CompiledWord w(cantor_word);
    SemiconjReport rep;
    for (const auto& xi : points) {
        SemiconjEntry e{xi, circle_map.apply(Phi(xi)), Phi(w(xi))};
        e.pass = e.circle_side == e.cantor_side;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::vector<EpSeq> rational_points(std::size_t max_prefix)
{
    std::vector<EpSeq> out;
    for (std::size_t len = 0; len <= max_prefix; ++len)
        for (std::size_t code = 0; code < (std::size_t(1) << len); ++code) {
            std::string s;
            for (std::size_t i = len; i-- > 0;)
                s.push_back((code >> i) & 1 ? '1' : '0');
            for (const char* tail : {"0", "1"}) {
                EpSeq p{FinSeq(s), FinSeq(tail)};
                if (p.prefix().size() == len)
                    out.push_back(p);
            }
        }
    return out;
}

} // namespace ppg
