#pragma once

#include "ppg/binseq.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppg {

struct TreePair {
    PrefixSet domain;
    PrefixSet range;
    std::size_t rotation = 0;
};

// Element of Thompson's group T, held as a reduced list of leaf pairs
// (domain leaf -> range leaf) sorted by domain leaf.
class TElem {
public:
    using Pair = std::pair<FinSeq, FinSeq>;

    TElem() : pairs_{{FinSeq(), FinSeq()}} {}
    static TElem identity() { return TElem(); }
    // Validates both leaf sets and the cyclic order of the correspondence.
    static TElem from_pairs(std::vector<Pair> pairs);
    static TElem from_tree_pair(const TreePair& tp);

    static TElem x(const FinSeq& s);
    static TElem p(std::size_t n);

    const std::vector<Pair>& pairs() const { return pairs_; }
    TreePair tree_pair() const;
    std::size_t rotation() const;
    bool is_identity() const { return pairs_.size() == 1 && pairs_[0].first.empty(); }
    bool in_F() const { return rotation() == 0; }

    // first this, then g
    TElem then(const TElem& g) const;
    TElem inverse() const;
    TElem pow(long long k) const;

    std::optional<FinSeq> act(const FinSeq& s) const;
    bool acts_on(const FinSeq& s) const { return act(s).has_value(); }
    EpSeq act(const EpSeq& xi) const;

    // Copy of an F element acting on the cone at s (s·u ↦ s·(u·f)), identity elsewhere.
    TElem localized(const FinSeq& s) const;

    std::string str() const;

    bool operator==(const TElem& o) const { return pairs_ == o.pairs_; }

private:
    explicit TElem(std::vector<Pair> pairs, bool);
    static std::vector<Pair> reduce(std::vector<Pair> pairs);
    std::vector<Pair> pairs_;
};

std::string to_string(const TreePair& tp);

} // namespace ppg
