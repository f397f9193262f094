#pragma once

#include "ppg/binseq.hpp"
#include "ppg/tpair.hpp"
#include "ppg/word.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppg {

// f · y_{s1}^{t1} ⋯ y_{sn}^{tn} with f in F and, for i < j, s_j ⊆ s_i or independent.
struct GStandardForm {
    TElem f;
    std::vector<std::pair<FinSeq, long long>> factors;

    GStandardForm() = default;
    GStandardForm(TElem head, std::vector<std::pair<FinSeq, long long>> fs);

    static GStandardForm parse(std::string_view text); // a word over x and y letters
    GroupWord word() const;
    GroupWord y_word() const; // the percolating part alone
    std::string str() const;
    long long exponent_sum() const;
};

// Concatenate-and-normalize: any word over x/p/y letters whose T-part lies in F.
GStandardForm g_standardize(const GroupWord& w);

// One token of a calculation stream: a digit '0'/'1', or a y symbol of sign ±1.
struct CalcToken {
    char digit = 0;   // '0' or '1' for digits, 0 for symbols
    int sign = 0;     // +1 for y, -1 for y⁻¹
    bool is_symbol() const { return sign != 0; }
    bool operator==(const CalcToken&) const = default;
};

class Calculation {
public:
    Calculation(std::vector<CalcToken> stream, EpSeq residual);

    const std::vector<CalcToken>& stream() const { return stream_; }
    const EpSeq& residual() const { return residual_; }
    std::string emitted() const; // digits before the first symbol
    std::size_t exponent() const;
    // Apply the substitution rule at the k-th symbol; false if no rule applies.
    bool step(std::size_t k);
    bool has_adjacent_cancellation() const;
    // Tokens up to the last symbol, then `tail_digits` more digits and an ellipsis.
    std::string render(std::size_t tail_digits = 4) const;
    EpSeq point() const; // the denoted point, by evaluation of the remaining symbols

private:
    void pull(std::size_t upto);
    std::vector<CalcToken> stream_;
    EpSeq residual_;
};

Calculation calculation_of(const GStandardForm& form, const EpSeq& xi);
std::size_t exponent_of(const Calculation& c);

// 4 + sum of |s| + 2|t| over the factors, capped at 12.
std::size_t default_cancellation_depth(const GStandardForm& form);
std::optional<EpSeq> find_potential_cancellation(const GStandardForm& form, std::size_t depth_bound);
std::optional<EpSeq> tail_eq_witness(const GStandardForm& form, const FinSeq& region, std::size_t search_bound);

} // namespace ppg
