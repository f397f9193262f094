#pragma once

#include "ppg/binseq.hpp"
#include "ppg/tpair.hpp"
#include "ppg/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppg {

struct Relator {
    GroupWord lhs;
    GroupWord rhs;
    std::string family; // "R(1)".."R(10)" or "R1(1)".."R1(9)"
    std::string params;

    GroupWord word() const { return lhs * word_inverse(rhs); }
    std::string str() const;
};

// Bounded instances of the ten relation families over x_s, p_n, w_{s,t}.
// Families quantified over three or four subscripts (commuting, relabelling,
// cancellation) are enumerated up to min(max_len, tuple_len) digits only;
// sample_R_tuples covers them at the full length.
std::vector<Relator> instantiate_R(std::size_t max_len, std::size_t tuple_len = 3);
std::vector<Relator> sample_R_tuples(std::size_t max_len, std::size_t count, std::uint32_t seed);

// The finite relation list over {x, x1, p0, w_{10,110}, w_{10,1110}}.
// The commuting/relabelling/cancellation items range over the comb
// subscripts 0^k1; r1_sample_tuples draws them from all subscripts.
std::vector<Relator> r1_relators();
std::vector<Relator> r1_sample_tuples(std::size_t count, std::uint32_t seed);
std::vector<Relator> r1_relators_untranslated();

// Gap structure of an ordered pair of independent sequences on the circle.
enum class PairType {
    diagonal,   // s = t
    forward,    // s immediately followed by t, with a gap after t
    backward,   // t immediately followed by s, with a gap after s
    both,       // s and t cover the circle
    separated,  // gaps on both sides
};
PairType pair_type(const FinSeq& s, const FinSeq& t);
std::string to_string(PairType p);

using SeqPair = std::pair<FinSeq, FinSeq>;

// An element f of T with from.first·f = to.first and from.second·f = to.second.
TElem taction_map(const SeqPair& from, const SeqPair& to);

struct ASt {
    TElem a;
    Letter base; // w_{10,110} or w_{10,1110}
};
// 10·A = s and 110·A = t (or 1110·A = t); cached per argument pair.
const ASt& a_st(const FinSeq& s, const FinSeq& t);

GroupWord translate_to_X1(const Letter& l);
GroupWord translate_to_X1(const GroupWord& w);
bool is_X1_word(const GroupWord& w);

struct RelatorVerdict {
    std::string relator;
    std::string family;
    bool pipeline = false;
    bool oracle = false;
    std::optional<EpSeq> witness;
    bool disagree() const { return pipeline != oracle; }
};

struct VerificationReport {
    std::vector<RelatorVerdict> rows;
    std::size_t failures = 0;
    std::size_t disagreements = 0;
    bool ok() const { return failures == 0 && disagreements == 0; }
};

VerificationReport verify_relators(const std::vector<Relator>& rs, std::size_t oracle_size = 6);

// Classes of ordered pairs of independent nonempty sequences with at most
// max_len digits, joined whenever some x_s or p_n (indices within max_len)
// maps one pair onto the other.
struct OrbitClass {
    SeqPair representative;
    PairType type;
    std::size_t size = 0;
    bool homogeneous = true; // every member has the representative's type
};
std::vector<OrbitClass> pair_orbits(std::size_t max_len);
std::vector<SeqPair> orbit_of(const SeqPair& p, std::size_t max_len);

// Every sequence with min_len..max_len digits, shortest first.
std::vector<FinSeq> all_seqs(std::size_t min_len, std::size_t max_len);

} // namespace ppg
