#pragma once

#include "ppg/calculation.hpp"
#include "ppg/word.hpp"

#include <array>
#include <vector>

namespace ppg {

// Exponent sum zero and every subscript contains both digits.
bool satisfies_g0prime_criterion(const GStandardForm& form);

// The k_i used to move the percolating factors onto independent subscripts:
// shortest first, lexicographic within a length, non-constant, independent
// of every subscript of the form and of each other.
std::vector<FinSeq> fresh_subscripts(const GStandardForm& form);

// A word over x_s, p_n and w_{s,t} equal to the form as a homeomorphism.
GroupWord g0prime_to_sword(const GStandardForm& form);

// y_110^-t · f localized at 10 · y_{10 s_1}^{t_1} ⋯ y_{10 s_n}^{t_n}, t the exponent sum.
GroupWord phi_g0_to_s(const GStandardForm& form);
// The same element spelled over x_s, p_n and w_{s,t}.
GroupWord phi_g0_to_sword(const GStandardForm& form);

// x_10, y_100, y_101
std::array<GroupWord, 3> bb12_generators();

// [ν₁, ν₂] = 1 for the slope-2 maps, as exact piecewise projective maps.
bool bb12_projective_commute();

} // namespace ppg
