#pragma once

#include "ppg/binseq.hpp"
#include "ppg/calculation.hpp"
#include "ppg/tpair.hpp"
#include "ppg/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppg {

// w_{s,t}^power with power > 0.
struct WFactor {
    FinSeq s;
    FinSeq t;
    long long power = 1;

    bool balanced() const { return s[0] == t[0]; }
    std::string str() const;
    bool operator==(const WFactor&) const = default;
};

// head · w_{s1,t1}^{l1} ⋯ w_{sn,tn}^{ln}, head in T, each (s_i,t_i) dominating every later pair.
struct SStandardForm {
    TElem head;
    std::vector<WFactor> factors;

    SStandardForm() = default;
    SStandardForm(TElem h, std::vector<WFactor> fs); // validates

    void validate() const;
    std::vector<FinSeq> subscripts() const;
    GroupWord word() const;
    std::string str() const;
    bool operator==(const SStandardForm&) const = default;
};

struct SMetrics {
    std::optional<std::size_t> depth; // none means ∞
    long long length = 0;
    long long unevenness = 0;
    bool balanced = true;
};

SMetrics metrics(const SStandardForm& form);

enum class Side { first, second };

enum class MoveKind { rearrangement, commuting, relabelling, amplification, cancellation, ar };

struct Move {
    MoveKind kind = MoveKind::commuting;
    std::size_t index = 0;
    Side side = Side::first;
    Letter letter; // rearrangement only: the trailing x/p letter moved into the head

    std::string str() const;
};

// Rearrangement(h) rewrites form·h; every other move preserves the element.
// Commuting / relabelling act on factors index, index+1 (one copy each);
// cancellation merges w_{σ,τ} w_{τ,ν} at index, index+1 (one copy each);
// amplification is only defined at the first factor, AR anywhere the subscript is free.
SStandardForm apply_move(const SStandardForm& form, const Move& m);

struct Classification {
    bool sheltered = false;
    bool free = false;
    std::optional<std::pair<std::size_t, Side>> barrier;
    std::string str() const;
};

Classification classify(const SStandardForm& form, std::size_t i, Side which);

struct TraceStep {
    std::string move;
    std::string form;
};
using Trace = std::vector<TraceStep>;

SStandardForm raise_depth(const SStandardForm& form, std::size_t m);
SStandardForm to_standard_form(const GroupWord& w, Trace* trace = nullptr);
GStandardForm literal_translate(const SStandardForm& form);

} // namespace ppg
