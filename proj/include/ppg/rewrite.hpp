#pragma once

#include "ppg/sform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppg {

struct BalanceResult {
    SStandardForm form;
    bool blocked = false; // unbalanced factors left, all of one parity
    std::string report;
};

// Rewrites to an equal S standard form with unevenness 0 where the parity
// of the unbalanced factors permits; otherwise stops as soon as every
// remaining unbalanced factor has the same parity.
BalanceResult balance(const SStandardForm& form, Trace* trace = nullptr);

struct Halves {
    TElem head;
    std::vector<WFactor> zero; // both subscripts start with 0
    std::vector<WFactor> one;  // both subscripts start with 1
};

Halves split_halves(const SStandardForm& balanced_form);

struct Reduction {
    SStandardForm form;            // head in F, remaining factors
    std::size_t manipulations = 0; // cancellations plus AR moves
    std::uint64_t bound = 0;       // 2·n·3^(m+1), saturating
    std::size_t initial_factors = 0;
    std::size_t leaf_bound = 0;    // m: leaves of the smallest tree holding every initial subscript
    std::size_t max_subscript = 0;
};

// Cancels and amplifies one half of a balanced form until no cancellable
// pair and no sheltered free subscript remain.
Reduction reduce_half(const std::vector<WFactor>& half, Trace* trace = nullptr);

struct TrivialityResult {
    bool trivial = false;
    bool parity_blocked = false;
    std::optional<EpSeq> witness; // a point moved by the word
    Trace trace;
    std::string str() const;
};

TrivialityResult is_trivial(const GroupWord& w, bool with_trace = false);
bool words_equal(const GroupWord& a, const GroupWord& b);

// Evaluation oracle: the first point of description size <= max_size moved by w.
std::optional<EpSeq> find_moved_point(const GroupWord& w, std::size_t max_size);

} // namespace ppg
