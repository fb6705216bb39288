#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"
#include "jsperfect/johnson.hpp"
#include "jsperfect/verdict.hpp"

namespace jsp {

struct BlockDesign {
    unsigned n = 0;
    unsigned w = 0;
    std::vector<Word> blocks;
};

// throws std::invalid_argument on unequal block sizes or repeated blocks
BlockDesign make_design(unsigned n, std::vector<Word> blocks);

// lambda if every t-subset of points lies in exactly lambda blocks.
// t = 0 gives the block count. throws std::length_error past max_subsets.
std::optional<ExactInt> verify_design(const BlockDesign& d, unsigned t,
                                      std::uint64_t max_subsets = 50000000);

// largest t <= w with verify_design succeeding (0 when none does)
unsigned code_strength(const BlockDesign& d);

struct SteinerCheck {
    std::vector<Verdict> verdicts;        // one per i = 0..t, then the Tits bound
    std::optional<ExactInt> block_count;  // when every ratio is integral
    bool admissible() const;
};

// Necessary conditions for S(t,w,n): C(n-i,t-i)/C(w-i,t-i) integral for
// 0 <= i <= t, and n >= (t+1)(w-t+1) when w < n. Rule ids "steiner.div.i"
// and "steiner.tits".
SteinerCheck steiner_conditions(const ExactInt& t, const ExactInt& w, const ExactInt& n);

// Blocks through `point` with the point removed, renumbered onto n-1 points.
// throws std::invalid_argument unless d is a Steiner system for some t >= 1.
BlockDesign derived_design(const BlockDesign& d, unsigned point);

std::vector<std::vector<std::uint8_t>> incidence_matrix(const BlockDesign& d);

struct DoublySteinerParams {
    unsigned t1 = 0, t2 = 0, w1 = 0, w2 = 0, n1 = 0, n2 = 0;
};

struct DoublySteinerBounds {
    long n1_raw_a = 0, n1_raw_b = 0;  // w1(t2+1)-t1t2, (w1-t1+1)(t1+1)
    long n2_raw_a = 0, n2_raw_b = 0;  // w2(t1+1)-t1t2, (w2-t2+1)(t2+1)
    long n1_bound = 0, n2_bound = 0;  // the maxima
    std::string label;                // "theorem", "by symmetry", "hypothesis unmet"
};
DoublySteinerBounds doubly_steiner_bounds(const DoublySteinerParams& p);

struct DoublySteinerReport {
    std::vector<Verdict> verdicts;
    DoublySteinerBounds bounds;
    ExactRational size;               // C(n1,t1)C(n2,t2)/(C(w1,t1)C(w2,t2))
    std::optional<Word> uncovered;    // set when a supplied code misses a (t1,t2) word
    bool ok() const;
};

// Without a code: size integrality and the length bounds. With a code: also
// the exact-cover property (enumerated) and the diameter-perfect equality.
DoublySteinerReport doubly_steiner_check(const DoublySteinerParams& p,
                                         const DoublyCode* code = nullptr,
                                         std::uint64_t max_subsets = 20000000);

}  // namespace jsp
