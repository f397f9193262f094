#include "ppg/projective.hpp"

#include "ppg/binseq.hpp"

#include <algorithm>
#include <sstream>

namespace ppg {

ProjPoint ProjPoint::infinity()
{
    ProjPoint p;
    p.inf_ = true;
    return p;
}

ProjPoint ProjPoint::parse(std::string_view text)
{
    if (text == "inf" || text == "∞")
        return infinity();
    try {
        Rational v(std::string{text});
        return ProjPoint(v);
    } catch (const std::exception&) {
        throw Error("not a rational or inf: " + std::string(text));
    }
}

std::string ProjPoint::str() const
{
    if (inf_)
        return "inf";
    std::ostringstream os;
    os << v_;
    return os.str();
}

bool ProjPoint::operator<(const ProjPoint& o) const
{
    if (inf_)
        return false;
    if (o.inf_)
        return true;
    return v_ < o.v_;
}

Mobius::Mobius(BigInt p_, BigInt q_, BigInt r_, BigInt s_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_))
{
    if (p * s - q * r == 0)
        throw Error("degenerate Mobius map");
    BigInt g = gcd(gcd(abs(p), abs(q)), gcd(abs(r), abs(s)));
    p /= g;
    q /= g;
    r /= g;
    s /= g;
    const BigInt& lead = p != 0 ? p : q != 0 ? q : r;
    if (lead < 0) {
        p = -p;
        q = -q;
        r = -r;
        s = -s;
    }
}

ProjPoint Mobius::apply(const ProjPoint& t) const
{
    if (t.is_inf()) {
        if (r == 0)
            return ProjPoint::infinity();
        return ProjPoint(r < 0 ? Rational(-p, -r) : Rational(p, r));
    }
    Rational den = Rational(r) * t.value() + Rational(s);
    if (den == 0)
        return ProjPoint::infinity();
    return ProjPoint((Rational(p) * t.value() + Rational(q)) / den);
}

Mobius Mobius::inverse() const { return Mobius(s, -q, -r, p); }

Mobius Mobius::then(const Mobius& n) const
{
    return Mobius(n.p * p + n.q * r, n.p * q + n.q * s, n.r * p + n.s * r, n.r * q + n.s * s);
}

std::string Mobius::str() const
{
    std::ostringstream os;
    os << "(" << p << "t+" << q << ")/(" << r << "t+" << s << ")";
    return os.str();
}

PiecewiseMap::PiecewiseMap(std::vector<ProjPoint> bps, std::vector<Mobius> pieces)
    : bps_(std::move(bps)), pieces_(std::move(pieces))
{
    if (bps_.empty() ? pieces_.size() != 1 : pieces_.size() != bps_.size())
        throw Error("piece count does not match breakpoints");
    if (!std::is_sorted(bps_.begin(), bps_.end()) ||
        std::adjacent_find(bps_.begin(), bps_.end()) != bps_.end())
        throw Error("breakpoints must be strictly increasing in circle order");
    for (std::size_t i = 0; i < bps_.size(); ++i) {
        const Mobius& prev = pieces_[(i + bps_.size() - 1) % bps_.size()];
        if (!(prev.apply(bps_[i]) == pieces_[i].apply(bps_[i])))
            throw Error("pieces disagree at breakpoint " + bps_[i].str());
    }
    canonicalize();
}

void PiecewiseMap::canonicalize()
{
    bool changed = true;
    while (changed && !bps_.empty()) {
        changed = false;
        if (bps_.size() == 1) {
            bps_.clear();
            pieces_.resize(1);
            break;
        }
        for (std::size_t i = 0; i < bps_.size(); ++i) {
            std::size_t prev = (i + bps_.size() - 1) % bps_.size();
            if (pieces_[prev] == pieces_[i]) {
                bps_.erase(bps_.begin() + static_cast<std::ptrdiff_t>(i));
                pieces_.erase(pieces_.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (bps_.empty())
        pieces_.resize(1);
}

const Mobius& PiecewiseMap::piece_at(const ProjPoint& t) const
{
    if (bps_.empty())
        return pieces_[0];
    // last breakpoint not exceeding t; points below the first one lie on the wrap arc
    auto it = std::upper_bound(bps_.begin(), bps_.end(), t);
    if (it == bps_.begin())
        return pieces_.back();
    return pieces_[static_cast<std::size_t>(it - bps_.begin()) - 1];
}

ProjPoint PiecewiseMap::apply(const ProjPoint& t) const { return piece_at(t).apply(t); }

namespace {

// A point strictly inside the arc from bps[i] to bps[i+1] (cyclically).
ProjPoint arc_sample(const std::vector<ProjPoint>& bps, std::size_t i)
{
    if (bps.empty())
        return ProjPoint(0);
    const ProjPoint& a = bps[i];
    if (bps.size() == 1)
        return a.is_inf() ? ProjPoint(0) : ProjPoint(a.value() + 1);
    const ProjPoint& b = bps[(i + 1) % bps.size()];
    if (i + 1 < bps.size()) {
        if (b.is_inf())
            return ProjPoint(a.value() + 1);
        return ProjPoint((a.value() + b.value()) / 2);
    }
    if (a.is_inf())
        return ProjPoint(b.value() - 1);
    return ProjPoint::infinity();
}

} // namespace

PiecewiseMap PiecewiseMap::inverse() const
{
    if (bps_.empty())
        return PiecewiseMap({}, {pieces_[0].inverse()});
    std::vector<std::pair<ProjPoint, Mobius>> arcs;
    for (std::size_t i = 0; i < bps_.size(); ++i)
        arcs.emplace_back(pieces_[i].apply(bps_[i]), pieces_[i].inverse());
    std::sort(arcs.begin(), arcs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<ProjPoint> b;
    std::vector<Mobius> m;
    for (auto& [p, mob] : arcs) {
        b.push_back(p);
        m.push_back(mob);
    }
    return PiecewiseMap(std::move(b), std::move(m));
}

bool PiecewiseMap::is_identity() const { return bps_.empty() && pieces_[0] == Mobius::identity(); }

std::string PiecewiseMap::str() const
{
    if (bps_.empty())
        return pieces_[0].str();
    std::ostringstream os;
    for (std::size_t i = 0; i < bps_.size(); ++i)
        os << "[" << bps_[i].str() << ", " << bps_[(i + 1) % bps_.size()].str() << "]: " << pieces_[i].str()
           << (i + 1 < bps_.size() ? "; " : "");
    return os.str();
}

PiecewiseMap compose(const PiecewiseMap& m1, const PiecewiseMap& m2)
{
    std::vector<ProjPoint> b = m1.breakpoints();
    PiecewiseMap inv1 = m1.inverse();
    for (const auto& q : m2.breakpoints())
        b.push_back(inv1.apply(q));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<Mobius> pieces;
    std::size_t n = std::max<std::size_t>(b.size(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        ProjPoint t = arc_sample(b, i);
        pieces.push_back(m1.piece_at(t).then(m2.piece_at(m1.apply(t))));
    }
    return PiecewiseMap(std::move(b), std::move(pieces));
}

PiecewiseMap compose_all(const std::vector<PiecewiseMap>& ms)
{
    PiecewiseMap r;
    for (const auto& m : ms)
        r = compose(r, m);
    return r;
}

PiecewiseMap power(const PiecewiseMap& m, long long k)
{
    PiecewiseMap base = k < 0 ? m.inverse() : m;
    PiecewiseMap r;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i)
        r = compose(r, base);
    return r;
}

bool pw_equal(const PiecewiseMap& m1, const PiecewiseMap& m2) { return m1 == m2; }

PiecewiseMap named_generator(std::string_view name, std::optional<long long> n)
{
    auto P = [](long long v) { return ProjPoint(v); };
    auto half = ProjPoint(Rational(1, 2));
    auto inf = ProjPoint::infinity();
    Mobius id;
    if ((name == "nu1" || name == "nu2") && (!n || *n <= 1))
        throw Error("nu1/nu2 need a slope parameter n > 1");
    if (name == "a" || name == "eta")
        return PiecewiseMap({}, {Mobius(1, 1, 0, 1)});
    if (name == "b")
        return PiecewiseMap({P(0), half, P(1), inf},
                            {Mobius(1, 0, -1, 1), Mobius(3, -1, 1, 0), Mobius(1, 1, 0, 1), id});
    if (name == "c")
        return PiecewiseMap({P(0), P(1)}, {Mobius(2, 0, 1, 1), id});
    if (name == "d1")
        return PiecewiseMap({P(0), inf}, {Mobius(2, 0, 0, 1), id});
    if (name == "d2")
        return PiecewiseMap({P(0), inf}, {id, Mobius(2, 0, 0, 1)});
    if (name == "l")
        return PiecewiseMap({}, {Mobius(0, -1, 1, 0)});
    if (name == "s")
        return PiecewiseMap({P(0), P(1), P(2)}, {Mobius(2, 0, 1, 1), Mobius(0, 2, -1, 3), id});
    if (name == "nu1")
        return PiecewiseMap({P(0), inf}, {Mobius(*n, 0, 0, 1), id});
    if (name == "nu2")
        return PiecewiseMap({P(0), inf}, {id, Mobius(*n, 0, 0, 1)});
    throw Error("unknown map name: " + std::string(name));
}

PiecewiseMap parse_map_word(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tok;
    PiecewiseMap r;
    while (in >> tok) {
        long long e = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            try {
                e = std::stoll(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw Error("bad exponent in " + tok);
            }
            tok.resize(caret);
        }
        std::optional<long long> n;
        if (auto colon = tok.find(':'); colon != std::string::npos) {
            try {
                n = std::stoll(tok.substr(colon + 1));
            } catch (const std::exception&) {
                throw Error("bad parameter in " + tok);
            }
            tok.resize(colon);
        }
        if (tok == "id")
            continue;
        r = compose(r, power(named_generator(tok, n), e));
    }
    return r;
}

} // namespace ppg
