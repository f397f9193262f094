#include "ppg/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ppg {

Letter Letter::w(FinSeq s, FinSeq t, long long e)
{
    if (!is_independent(s, t))
        throw Error("w_{" + s.str() + "," + t.str() + "}: subscripts are not independent");
    return {Gen::W, std::move(s), std::move(t), 0, e};
}

Letter Letter::inverse() const
{
    Letter l = *this;
    l.e = -e;
    return l;
}

std::string Letter::str() const
{
    std::string g;
    switch (gen) {
    case Gen::X: g = s.empty() ? "x" : "x_" + s.bits(); break;
    case Gen::P: g = "p" + std::to_string(n); break;
    case Gen::Y: g = "y_" + s.str(); break;
    case Gen::W: g = "w_{" + s.str() + "," + t.str() + "}"; break;
    }
    return e == 1 ? g : g + "^" + std::to_string(e);
}

namespace {

FinSeq parse_bits(std::string_view b, std::string_view tok)
{
    if (b.empty())
        throw Error("missing subscript in '" + std::string(tok) + "'");
    try {
        return FinSeq::parse(b);
    } catch (const Error&) {
        throw Error("bad subscript in '" + std::string(tok) + "'");
    }
}

Letter parse_term(std::string_view tok)
{
    long long e = 1;
    std::string_view g = tok;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        std::string ex(tok.substr(caret + 1));
        if (ex.size() >= 2 && ex.front() == '{' && ex.back() == '}')
            ex = ex.substr(1, ex.size() - 2);
        std::size_t used = 0;
        try {
            e = std::stoll(ex, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != ex.size())
            throw Error("bad exponent in '" + std::string(tok) + "'");
        if (e == 0)
            throw Error("zero exponent in '" + std::string(tok) + "'");
        g = tok.substr(0, caret);
    }
    if (g == "x")
        return Letter::x(FinSeq(), e);
    if (g == "y")
        return Letter::y(FinSeq(), e);
    if (g.starts_with("x_"))
        return Letter::x(parse_bits(g.substr(2), tok), e);
    if (g.starts_with("y_"))
        return Letter::y(parse_bits(g.substr(2), tok), e);
    if (g.starts_with("w_{") && g.back() == '}') {
        std::string_view inner = g.substr(3, g.size() - 4);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos)
            throw Error("w needs two subscripts: '" + std::string(tok) + "'");
        return Letter::w(parse_bits(inner.substr(0, comma), tok), parse_bits(inner.substr(comma + 1), tok), e);
    }
    if (g.size() >= 2 && g[0] == 'p' &&
        std::all_of(g.begin() + 1, g.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Letter::p(std::stoull(std::string(g.substr(1))), e);
    throw Error("unrecognized generator '" + std::string(tok) + "'");
}

} // namespace

GroupWord GroupWord::parse(std::string_view text)
{
    std::string norm(text);
    for (char& c : norm)
        if (c == '*' || c == '.')
            c = ' ';
    std::istringstream in(norm);
    GroupWord w;
    std::string tok;
    while (in >> tok)
        w.letters.push_back(parse_term(tok));
    return w;
}

std::string GroupWord::str() const
{
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty())
            out += ' ';
        out += l.str();
    }
    return out;
}

GroupWord& GroupWord::operator*=(const GroupWord& o)
{
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
}

GroupWord GroupWord::operator*(const GroupWord& o) const
{
    GroupWord r = *this;
    r *= o;
    return r;
}

GroupWord& GroupWord::operator*=(const Letter& l)
{
    letters.push_back(l);
    return *this;
}

GroupWord word_inverse(const GroupWord& w)
{
    GroupWord r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(it->inverse());
    return r;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b)
{
    return word_inverse(a) * word_inverse(b) * a * b;
}

TElem letter_elem(const Letter& l)
{
    switch (l.gen) {
    case Gen::X: return TElem::x(l.s).pow(l.e);
    case Gen::P: return TElem::p(l.n).pow(l.e);
    default: throw Error("letter " + l.str() + " is not in T");
    }
}

TElem tree_pair_of(const GroupWord& w)
{
    TElem r;
    for (const auto& l : w.letters)
        r = r.then(letter_elem(l));
    return r;
}

std::optional<FinSeq> act_finite(const GroupWord& w, const FinSeq& s)
{
    if (s.empty())
        throw Error("act_finite needs a nonempty sequence");
    std::optional<FinSeq> cur = s;
    for (const auto& l : w.letters) {
        TElem unit = letter_elem(Letter{l.gen, l.s, l.t, l.n, l.e > 0 ? 1 : -1});
        for (long long i = 0; i < (l.e < 0 ? -l.e : l.e); ++i) {
            cur = unit.act(*cur);
            if (!cur)
                return std::nullopt;
        }
    }
    return cur;
}

namespace {

// Spine rotations carrying the tree with the given leaves to the right vine.
std::vector<std::size_t> to_vine(std::vector<FinSeq> leaves)
{
    std::vector<std::size_t> ks;
    for (;;) {
        std::optional<std::size_t> k;
        for (const auto& l : leaves) {
            std::size_t ones = 0;
            while (ones < l.size() && l[ones] == '1')
                ++ones;
            if (ones + 1 < l.size() && (!k || ones < *k))
                k = ones;
        }
        if (!k)
            return ks;
        TElem x = TElem::x(FinSeq::repeat('1', *k));
        for (auto& l : leaves)
            l = *x.act(l);
        ks.push_back(*k);
    }
}

void push_merged(GroupWord& w, const Letter& l)
{
    if (!w.letters.empty()) {
        Letter& b = w.letters.back();
        if (b.gen == l.gen && b.s == l.s && b.t == l.t && b.n == l.n) {
            b.e += l.e;
            if (b.e == 0)
                w.letters.pop_back();
            return;
        }
    }
    w.letters.push_back(l);
}

} // namespace

GroupWord word_of(const TElem& f)
{
    TreePair tp = f.tree_pair();
    GroupWord w;
    for (std::size_t k : to_vine(tp.domain.leaves()))
        push_merged(w, Letter::x(FinSeq::repeat('1', k)));
    if (tp.rotation != 0)
        push_merged(w, Letter::p(tp.domain.size() - 2, static_cast<long long>(tp.rotation)));
    std::vector<std::size_t> back = to_vine(tp.range.leaves());
    for (auto it = back.rbegin(); it != back.rend(); ++it)
        push_merged(w, Letter::x(FinSeq::repeat('1', *it), -1));
    return w;
}

} // namespace ppg
