#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"
#include "jsperfect/johnson.hpp"
#include "jsperfect/verdict.hpp"

namespace jsp {

ExactInt sigma_e(const ExactInt& n, const ExactInt& w, const ExactInt& t, const ExactInt& e);

// One sign branch of the e=2, n=2w strength formula:
// phi = (-1 + 2w -/+ s)/2 with s^2 = 8w - 11 +/- 4r and r^2 = 2w^2 - 6w + 5.
struct StrengthBranch {
    int inner_sign = +1;          // sign in front of 4r
    ExactInt s_squared;
    std::optional<ExactInt> s;
    std::vector<ExactInt> phis;   // integral candidates that are genuine roots
};

struct StrengthResult {
    std::optional<ExactInt> phi;
    std::string path;             // "eq1", "e2-radical", "scan"
    std::vector<Field> values;    // discriminants and intermediate radicals
    std::vector<StrengthBranch> branches;  // e2-radical only
    // e=1: 2*alpha = n - 2w and 2*beta + 1 = sqrt(D), when D is a square
    std::optional<ExactRational> alpha, beta;
};

// Expects n >= 2w (complement first otherwise). phi absent means sigma_e has
// no integer root t = phi+1 in [1, w+1].
StrengthResult strength(const ExactInt& n, const ExactInt& w, const ExactInt& e);

enum class RecurrenceForm { corrected, printed };

// Solves the three-term configuration recurrence for a perfect 1-code downward
// from values at `top` and `top-1` (value above top taken as 0). n = 2w + a.
struct RecurrenceSolution {
    long lowest = 0, top = 0;
    std::vector<ExactRational> values;  // values[i - lowest]
    bool consistent = true;             // the equation at i = top holds
    bool integral = true;
    bool nonnegative = true;
    std::optional<long> first_bad;      // largest i with a negative or fractional value
    const ExactRational& at(long i) const { return values.at(static_cast<std::size_t>(i - lowest)); }
};

RecurrenceSolution config_recurrence_solve(long n, long w, long k, long top,
                                           const ExactRational& v_top,
                                           const ExactRational& v_below, long lowest = 0,
                                           RecurrenceForm form = RecurrenceForm::corrected);

// Left side minus right side of the recurrence equation at index i.
ExactRational recurrence_residual(long n, long w, long k, long i, const ExactRational& a_up,
                                  const ExactRational& a_i, const ExactRational& a_down,
                                  RecurrenceForm form = RecurrenceForm::corrected);

// The three binomial moments sum_i C(i,k) X_i of a 1-perfect code, X in {Delta, A, B},
// A counted against the block of a codeword and B against a translate block.
struct OnePerfectMoments {
    ExactRational delta, A, B;
};

// The printed A and B forms take sum_i C(i,k)C(w,i)C(n-w,i) = C(n-w,k)C(n-k,w-k), which
// counts i as a distance; with i counting ones inside the block the sum is
// C(w,k)C(n-k,w-k). The two agree only for n = 2w.
enum class MomentForm { corrected, printed };
OnePerfectMoments moments_1perfect_closed(const ExactInt& n, const ExactInt& w, const ExactInt& k,
                                          MomentForm form = MomentForm::corrected);
// Delta-moment by stepping the two-term relation down from k = w.
ExactRational delta_moment_stepped(const ExactInt& n, const ExactInt& w, const ExactInt& k);
// 0 = [1+k^2-k(1+n)+nw-w^2] M_k + (1-k+w)^2 M_{k-1}; returns the right side
ExactRational delta_relation_residual(const ExactInt& n, const ExactInt& w, const ExactInt& k,
                                      const ExactRational& m_k, const ExactRational& m_km1);

// Same moments from the recurrence-solved distributions (A_w=1, A_{w-1}=0 and
// B_w=0, B_{w-1}=1), for every k = 0..w.
std::vector<OnePerfectMoments> moments_1perfect_recurrence(long n, long w);

// The four quantities of the mod-60 tables, via the recurrence:
// Delta-moment at k=w-5, A_{w-5}, B_{w-5} (block w-2) and C_{w-3} (block w+2).
struct TableExpressions {
    ExactRational delta, A, B, C;
    bool all_integral() const;
};
TableExpressions table_expressions(long w, long a);

// Moment identity for e-perfect codes in J(2w,w). A and Delta are indexed by
// distance i (configuration (w-i, i)).
struct IdentityCheck {
    ExactRational lhs, rhs;
    bool holds() const { return lhs == rhs; }
};
IdentityCheck moment_identity_J2w(unsigned w, unsigned k, const std::vector<ExactInt>& A,
                                  const std::vector<ExactInt>& delta);
// raw four-term sum against its rearranged form (needs A_i = A_{w-i})
IdentityCheck rearranged_sum_J2w(unsigned w, unsigned k, const std::vector<ExactInt>& A);

struct CodeIdentity {
    std::vector<ExactInt> A, B, delta;   // distance-indexed
    IdentityCheck identity;
    IdentityCheck rearranged;
};
// Needs a perfect, self-complementary code in J(2w,w); throws std::invalid_argument otherwise.
CodeIdentity moment_identity_J2w(const Code& code, unsigned e, unsigned k,
                                 const EnumGuard& g = {});

struct StirlingEquivalence {
    bool power_moments_vanish = false;
    bool binomial_moments_vanish = false;
    bool conversion_exact = false;  // power moments rebuilt from binomial ones match
    bool equivalent() const { return power_moments_vanish == binomial_moments_vanish; }
};
StirlingEquivalence stirling_moment_equivalence(const std::vector<ExactInt>& delta, unsigned t);

}  // namespace jsp
