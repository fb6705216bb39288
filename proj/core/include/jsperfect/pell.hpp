#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"

namespace jsp {

// x^2 - 2y^2 = -1 with (x + y sqrt2) = (1 + sqrt2)^k, k odd
struct PellSolution {
    unsigned k = 1;
    ExactInt x, y;
};

// every solution with x <= x_max, increasing k
std::vector<PellSolution> pell_solutions(const ExactInt& x_max);

// The subfamily k = 4t + 1 (x = 1 mod 4), t = 0, 1, ...
struct FamilyRow {
    unsigned t = 0;
    ExactInt x, y, w;
    ExactInt c2, d2;  // 1 + 4(x+y), 1 + 4(x-y)
};
std::vector<FamilyRow> pell_family(unsigned t_max);

// The same quantities from the binomial sums in t, and from powers of 3+2sqrt2.
ExactInt family_x_binomial(unsigned t);
ExactInt family_c2_binomial(unsigned t);
ExactInt family_d2_binomial(unsigned t);
ExactInt family_c2_power(unsigned t);
ExactInt family_d2_power(unsigned t);

// Odd-index minus even-index (from 2 on) sum of C(2m+1, 2j); 0 mod 3 iff x = 1 mod 3.
ExactInt mod3_sum(unsigned m);

// The four conditions for a 2-perfect code in J(2w, w).
struct PellConditions {
    ExactInt w, x;
    std::optional<ExactInt> y;         // set when 2w^2 - 6w + 5 is a square
    std::optional<unsigned> k;         // exponent when y is set
    bool family = false;               // Pell solution with x = 1 mod 4
    bool mod3 = false;                 // x = 1 mod 3
    std::optional<bool> c_square, d_square;  // only when y is set
    bool below_min_weight = false;     // w < 5
    // the square tests exclude only when neither holds
    bool excluded() const;
    // every condition that fails on its own, "c-square" and "d-square" separately
    std::vector<std::string> failed() const;
};
PellConditions pell_conditions(const ExactInt& w);

struct ExclusionScan {
    ExactInt n_limit;
    std::vector<PellConditions> rows;  // every Pell solution with 2w < n_limit
    bool all_excluded() const;
};
ExclusionScan exclusion_scan(const ExactInt& n_limit);

// Rows t with 2w < n_limit, columns t, 1+4(x-y), 1+4(x+y), x, w.
std::string table3_tsv(const ExactInt& n_limit);

}  // namespace jsp
