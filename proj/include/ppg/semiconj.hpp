#pragma once

#include "ppg/binseq.hpp"
#include "ppg/projective.hpp"
#include "ppg/word.hpp"

#include <vector>

namespace ppg {

// Continued-fraction coordinate [0,∞] of a point with constant tail.
ProjPoint phi(const EpSeq& xi);
// Circle coordinate R ∪ {∞} of a point with constant tail.
ProjPoint Phi(const EpSeq& xi);

struct SemiconjEntry {
    EpSeq xi;
    ProjPoint circle_side;  // Phi(ξ) under the circle map
    ProjPoint cantor_side;  // Phi(ξ under the word)
    bool pass = false;
};

struct SemiconjReport {
    std::vector<SemiconjEntry> entries;
    bool all_pass() const;
    std::size_t failures() const;
};

SemiconjReport check_semiconjugacy(const GroupWord& cantor_word, const PiecewiseMap& circle_map,
                                   const std::vector<EpSeq>& points);

// All rational points with prefix length at most n (both constant tails).
std::vector<EpSeq> rational_points(std::size_t max_prefix);

} // namespace ppg
