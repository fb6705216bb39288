#pragma once

#include <optional>
#include <vector>

#include "jsperfect/exactmath.hpp"

namespace jsp {

// Binomial moments sum_i C(i, w-j) Delta_{i,l} of a 2-perfect code in J(2w,w),
// for translate leader l in {1,2}, by the two-step recursion. Entry j is the
// moment at k = w - j; entries 0 and 1 are the seeds 1 and w-1 (l=1) or w (l=2).
std::vector<ExactRational> two_perfect_moments(const ExactInt& w, unsigned jmax, unsigned leader);
ExactRational delta_moment_2perfect(const ExactInt& w, const ExactInt& k, unsigned leader);

enum class PrintedOrCorrected { corrected, printed };

// Closed forms for j = 2..7. The printed j=5, leader 1 form differs from the
// corrected one in a single coefficient; elsewhere both agree.
std::optional<ExactRational> two_perfect_closed_form(const ExactInt& w, unsigned j, unsigned leader,
                                                     PrintedOrCorrected which = PrintedOrCorrected::corrected);

// Integer polynomial factors and denominator of a corrected closed form, for
// fast modular scans. Coefficients are low degree first.
struct ClosedFormPoly {
    std::vector<std::vector<long>> factors;
    long denominator = 1;
};
const ClosedFormPoly& two_perfect_poly(unsigned j, unsigned leader);

// 1/4(...) M_k + 1/2(1-k+w)^2(4+k^2+w^2-2k(1+w)) M_{k-1} + 1/4(1-k+w)^2(2-k+w)^2 M_{k-2}
ExactRational two_perfect_relation_residual(const ExactInt& w, const ExactInt& k,
                                            const ExactRational& m_k, const ExactRational& m_km1,
                                            const ExactRational& m_km2);

}  // namespace jsp
