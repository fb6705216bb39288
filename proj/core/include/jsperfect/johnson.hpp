#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"

namespace jsp {

// A w-subset of {0..n-1}, indices strictly increasing.
class Word {
public:
    Word() = default;
    // sorts; throws std::invalid_argument on duplicates or indices >= n
    Word(unsigned n, std::vector<unsigned> support);

    unsigned n() const { return n_; }
    unsigned weight() const { return static_cast<unsigned>(support_.size()); }
    const std::vector<unsigned>& support() const { return support_; }
    bool contains(unsigned i) const;
    std::string str() const;  // "{0,1,2}"

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    unsigned n_ = 0;
    std::vector<unsigned> support_;
};

// throws std::invalid_argument unless n and w agree
unsigned j_distance(const Word& u, const Word& v);
unsigned h_distance(const Word& u, const Word& v);

struct Code {
    unsigned n = 0, w = 0;
    std::vector<Word> words;
};
// checks parameters and rejects duplicate words
Code make_code(unsigned n, unsigned w, std::vector<Word> words);

// Words over n1+n2 coordinates with w1 ones below n1 and w2 at or above n1.
struct DoublyCode {
    unsigned n1 = 0, w1 = 0, n2 = 0, w2 = 0;
    std::vector<Word> words;
    unsigned n() const { return n1 + n2; }
};
DoublyCode make_doubly_code(unsigned n1, unsigned w1, unsigned n2, unsigned w2,
                            std::vector<Word> words);

ExactInt sphere_size(const ExactInt& n, const ExactInt& w, const ExactInt& e);
ExactInt sphere_size_doubly(const ExactInt& n1, const ExactInt& w1, const ExactInt& n2,
                            const ExactInt& w2, const ExactInt& e);

// Limits for anything that walks a whole space.
struct EnumGuard {
    unsigned max_n = 40;
    std::uint64_t max_space = 50000000;
};

enum class PerfectStatus { perfect, not_perfect, refused };
const char* to_string(PerfectStatus s);

struct PerfectVerdict {
    PerfectStatus status = PerfectStatus::refused;
    std::optional<Word> witness;     // a vector covered 0 or >= 2 times
    unsigned cover_count = 0;        // how often the witness is covered
    std::optional<unsigned> min_distance;  // min J-distance between codewords
    ExactInt space_size = 0;
    std::string message;
};

PerfectVerdict verify_perfect(const Code& code, unsigned e, const EnumGuard& g = {});
PerfectVerdict verify_perfect_doubly(const DoublyCode& code, unsigned e, const EnumGuard& g = {});

// All words within J-distance e of c (brute force; same guards apply to callers).
std::vector<Word> ball(const Word& c, unsigned e);
std::uint64_t ball_count_doubly(const DoublyCode& shape, const Word& c, unsigned e);

Code complement_code(const Code& code);
enum class Block { first, second, whole };
DoublyCode complement_code(const DoublyCode& code, Block which);

struct TranslateRequest {
    unsigned leader;  // j in 1..e
    unsigned e;
};

// Counts by the number of ones inside a k-block.
struct ConfigDistribution {
    unsigned k = 0;
    std::vector<ExactInt> A;             // block = {0..k-1}
    std::optional<unsigned> leader;
    std::vector<unsigned> translate_block;  // the chosen block for the translate
    std::vector<ExactInt> B;             // same counts w.r.t. translate_block
};

// With a translate request (k must equal w) the block is the lexicographically
// least k-subset that holds exactly one codeword in configuration (w-j, j) and
// none in (w-i, i) for the other i <= e. B stays empty when none exists.
ConfigDistribution configuration_distribution(const Code& code, unsigned k,
                                              std::optional<TranslateRequest> translate = {},
                                              const EnumGuard& g = {});

// Relabels coordinates so that the first codeword becomes {0..w-1}
// (order-preserving on both sides).
Code align_to_prefix(const Code& code);

enum class AnticodeFlavor { fixed_subset, s_intersecting };

struct Anticode {
    std::vector<Word> words;
    ExactInt formula_size;
    unsigned diameter = 0;
    bool diameter_checked = false;
};

// fixed_subset: every w-subset containing {0..t-1}.
// s_intersecting: every w-subset meeting S = {0..t+1} in at least t+1 points.
// throws std::length_error when the size exceeds the guard.
Anticode anticode_ball(unsigned n, unsigned w, unsigned t, AnticodeFlavor flavor,
                       std::uint64_t max_words = 200000, std::uint64_t max_pairs = 20000000);

// Fixed t1 coordinates in the first block, t2 in the second, completed freely.
struct DoublyAnticode {
    std::vector<Word> words;
    ExactInt formula_size;
    unsigned diameter = 0;
};
DoublyAnticode doubly_anticode(unsigned n1, unsigned w1, unsigned n2, unsigned w2, unsigned t1,
                               unsigned t2, std::uint64_t max_words = 200000);

// Enumerates k-subsets of {0..n-1} in lexicographic order; f returns false to stop.
template <class F>
void for_each_subset(unsigned n, unsigned k, F&& f) {
    if (k > n) return;
    std::vector<unsigned> s(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i;
    while (true) {
        if (!f(static_cast<const std::vector<unsigned>&>(s))) return;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return;
        ++s[i];
        for (unsigned j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace jsp
