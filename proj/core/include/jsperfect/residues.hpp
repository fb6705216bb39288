#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"

namespace jsp {

// a*k + b*y = c (mod 5), with w = 60k + i and w+a = 60y + j
struct Congruence5 {
    int a = 0, b = 0, c = 0;
    bool operator==(const Congruence5&) const = default;
};
std::string render(const Congruence5& c);
// every (k,y) in Z5 x Z5 satisfying the congruence, as k*5+y
std::vector<int> solutions(const Congruence5& c);

struct Refinement {
    int w_class = 0, wa_class = 0;  // residues of w and w+a mod 60
    std::vector<int> allowed;       // (k mod 5)*5 + (y mod 5) that pass the 5-adic test
    std::optional<Congruence5> linear;  // set when `allowed` is a single line
    bool a_mod24 = false;               // 2-adic test forces a = 0 (mod 24)
    std::string text() const;
};

struct ResidueTable {
    int base = 1;                      // 1 or 7 (mod 12)
    std::array<int, 5> classes{};      // row and column labels mod 60
    std::array<std::array<bool, 5>, 5> dash{};  // [w row][w+a column]
};

struct RigorNote {
    int w_class = 0, wa_class = 0;
    long w = 0, a = 0;  // concrete witness with all four expressions integral
    std::string text;
};

struct ResidueTables1 {
    long modulus = 300;
    std::array<ResidueTable, 2> tables;
    std::vector<Refinement> refinements;  // surviving cells with a 5-adic restriction
    bool table2_all_mod24 = false;        // a = 0 (mod 24) in every surviving Table 2 cell
    std::vector<RigorNote> notes;
};

// modulus must be a multiple of 60; the scan visits every (w, w+a) pair of
// representatives below it, skipping w < 3.
ResidueTables1 residue_tables_1perfect(long modulus = 300);

struct ClassStage {
    long modulus = 60;
    unsigned jmax = 5;
    long period = 0;                 // scan length, a multiple of every denominator
    std::vector<long> input;         // classes (mod 60) fed into the stage
    std::vector<long> survivors;     // classes mod `modulus`
};

struct ResidueClasses2 {
    std::vector<long> prior;                    // earlier necessary classes mod 60
    ClassStage mod60, mod420;
    std::vector<long> mod60_without_prior;
    // for each eliminated prior class, the smallest j that kills it
    std::vector<std::pair<long, unsigned>> eliminated_at;
};

ResidueClasses2 residue_classes_2perfect();

// all j in [2, jmax] closed forms integral at w, both leaders
bool two_perfect_integral(long w, unsigned jmax);

}  // namespace jsp
