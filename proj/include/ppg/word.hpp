#pragma once

#include "ppg/binseq.hpp"
#include "ppg/tpair.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ppg {

enum class Gen { X, P, Y, W };

struct Letter {
    Gen gen = Gen::X;
    FinSeq s;           // subscript of x/y, first subscript of w
    FinSeq t;           // second subscript of w
    std::size_t n = 0;  // index of p
    long long e = 1;    // nonzero exponent

    static Letter x(FinSeq s, long long e = 1) { return {Gen::X, std::move(s), {}, 0, e}; }
    static Letter p(std::size_t n, long long e = 1) { return {Gen::P, {}, {}, n, e}; }
    static Letter y(FinSeq s, long long e = 1) { return {Gen::Y, std::move(s), {}, 0, e}; }
    static Letter w(FinSeq s, FinSeq t, long long e = 1);

    Letter inverse() const;
    bool is_T() const { return gen == Gen::X || gen == Gen::P; }
    std::string str() const;
    bool operator==(const Letter&) const = default;
};

struct GroupWord {
    std::vector<Letter> letters;

    static GroupWord parse(std::string_view text);
    std::string str() const;
    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    GroupWord& operator*=(const GroupWord& o);
    GroupWord operator*(const GroupWord& o) const;
    GroupWord& operator*=(const Letter& l);
    bool operator==(const GroupWord&) const = default;
};

GroupWord word_inverse(const GroupWord& w);
GroupWord commutator(const GroupWord& a, const GroupWord& b); // a⁻¹ b⁻¹ a b

// Element of T named by a single x/p letter (with its exponent).
TElem letter_elem(const Letter& l);
TElem tree_pair_of(const GroupWord& w);
std::optional<FinSeq> act_finite(const GroupWord& w, const FinSeq& s);

// A word over the letters x_{1^k} (k >= 0) and p_n spelling the given element.
GroupWord word_of(const TElem& f);

} // namespace ppg
