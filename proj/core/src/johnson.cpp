#include "jsperfect/johnson.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace jsp {

namespace {

// C(n,k) for n <= 64 as uint64 (C(64,32) < 2^63)
const std::array<std::array<std::uint64_t, 65>, 65>& small_binom() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (unsigned n = 0; n <= 64; ++n) {
            t[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

std::uint64_t cb(unsigned n, unsigned k) { return k > n ? 0 : small_binom()[n][k]; }

// colex rank of a sorted subset, indices relative to `base`
std::uint64_t colex_rank(const unsigned* s, unsigned len, unsigned base) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < len; ++i) r += cb(s[i] - base, i + 1);
    return r;
}

void colex_unrank(std::uint64_t r, unsigned k, unsigned base, std::vector<unsigned>& out) {
    std::vector<unsigned> tmp(k);
    for (unsigned i = k; i-- > 0;) {
        unsigned c = i;
        while (cb(c + 1, i + 1) <= r) ++c;
        r -= cb(c, i + 1);
        tmp[i] = c + base;
    }
    out.insert(out.end(), tmp.begin(), tmp.end());
}

// Space split into two blocks; the single-block space is n2 = w2 = 0.
struct Shape {
    unsigned n1, w1, n2, w2;
    std::uint64_t size1() const { return cb(n1, w1); }
    std::uint64_t size2() const { return cb(n2, w2); }
    std::uint64_t rank(const std::vector<unsigned>& s) const {
        return colex_rank(s.data(), w1, 0) * size2() + colex_rank(s.data() + w1, w2, n1);
    }
    std::vector<unsigned> unrank(std::uint64_t r) const {
        std::vector<unsigned> s;
        s.reserve(w1 + w2);
        colex_unrank(r / size2(), w1, 0, s);
        colex_unrank(r % size2(), w2, n1, s);
        return s;
    }
};

// Calls f(sorted support) for every word within distance e of c,
// swapping i coordinates in block 1 and j in block 2 with i + j <= e.
template <class F>
void for_each_in_ball(const Shape& sh, const std::vector<unsigned>& c, unsigned e, F&& f) {
    std::vector<unsigned> in1(c.begin(), c.begin() + sh.w1), in2(c.begin() + sh.w1, c.end());
    std::vector<unsigned> out1, out2;
    for (unsigned x = 0; x < sh.n1; ++x)
        if (!std::binary_search(in1.begin(), in1.end(), x)) out1.push_back(x);
    for (unsigned x = sh.n1; x < sh.n1 + sh.n2; ++x)
        if (!std::binary_search(in2.begin(), in2.end(), x)) out2.push_back(x);

    // all words in one block at swap count i
    auto block_variants = [](const std::vector<unsigned>& in, const std::vector<unsigned>& out,
                             unsigned i) {
        std::vector<std::vector<unsigned>> res;
        if (i > in.size() || i > out.size()) return res;
        for_each_subset(static_cast<unsigned>(in.size()), i, [&](const std::vector<unsigned>& del) {
            for_each_subset(static_cast<unsigned>(out.size()), i,
                            [&](const std::vector<unsigned>& add) {
                                std::vector<unsigned> v;
                                v.reserve(in.size());
                                std::size_t d = 0;
                                for (std::size_t p = 0; p < in.size(); ++p) {
                                    if (d < del.size() && del[d] == p) {
                                        ++d;
                                        continue;
                                    }
                                    v.push_back(in[p]);
                                }
                                for (unsigned a : add) v.push_back(out[a]);
                                std::sort(v.begin(), v.end());
                                res.push_back(std::move(v));
                                return true;
                            });
            return true;
        });
        return res;
    };

    for (unsigned i = 0; i <= e; ++i) {
        auto v1 = block_variants(in1, out1, i);
        if (v1.empty()) continue;
        for (unsigned j = 0; i + j <= e; ++j) {
            auto v2 = block_variants(in2, out2, j);
            for (const auto& a : v1)
                for (const auto& b : v2) {
                    std::vector<unsigned> s(a);
                    s.insert(s.end(), b.begin(), b.end());
                    f(s);
                }
        }
    }
}

unsigned distance_sorted(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<unsigned>(a.size()) - common;
}

PerfectVerdict verify_shape(const Shape& sh, const std::vector<Word>& words, unsigned e,
                            const EnumGuard& g) {
    PerfectVerdict v;
    unsigned n = sh.n1 + sh.n2;
    v.space_size = binom(long(sh.n1), long(sh.w1)) * binom(long(sh.n2), long(sh.w2));
    if (n > g.max_n || n > 64) {
        v.message = "length " + std::to_string(n) + " exceeds the enumeration guard";
        return v;
    }
    if (v.space_size > ExactInt(std::to_string(g.max_space))) {
        v.message = "space of " + to_string(v.space_size) + " words exceeds the enumeration guard";
        return v;
    }
    std::uint64_t total = sh.size1() * sh.size2();
    std::vector<std::uint8_t> cover(total, 0);
    for (const auto& w : words)
        for_each_in_ball(sh, w.support(), e, [&](const std::vector<unsigned>& s) {
            auto& c = cover[sh.rank(s)];
            if (c < 255) ++c;
        });

    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            unsigned d = distance_sorted(words[i].support(), words[j].support());
            if (!v.min_distance || d < *v.min_distance) v.min_distance = d;
        }

    for (std::uint64_t r = 0; r < total; ++r) {
        if (cover[r] != 1) {
            v.status = PerfectStatus::not_perfect;
            v.witness = Word(n, sh.unrank(r));
            v.cover_count = cover[r];
            v.message = cover[r] == 0 ? "vector not covered" : "vector covered more than once";
            return v;
        }
    }
    v.status = PerfectStatus::perfect;
    v.cover_count = 1;
    if (v.min_distance && *v.min_distance != 2 * e + 1)
        v.message = "perfect, but minimum distance differs from 2e+1";
    return v;
}

}  // namespace

Word::Word(unsigned n, std::vector<unsigned> support) : n_(n), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw std::invalid_argument("word has a repeated coordinate");
    if (!support_.empty() && support_.back() >= n_)
        throw std::invalid_argument("coordinate " + std::to_string(support_.back()) +
                                    " out of range for n=" + std::to_string(n_));
}

bool Word::contains(unsigned i) const {
    return std::binary_search(support_.begin(), support_.end(), i);
}

std::string Word::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(support_[i]);
    }
    return s + "}";
}

unsigned j_distance(const Word& u, const Word& v) {
    if (u.n() != v.n() || u.weight() != v.weight())
        throw std::invalid_argument("j_distance: words from different spaces");
    return distance_sorted(u.support(), v.support());
}

unsigned h_distance(const Word& u, const Word& v) { return 2 * j_distance(u, v); }

Code make_code(unsigned n, unsigned w, std::vector<Word> words) {
    for (const auto& x : words)
        if (x.n() != n || x.weight() != w)
            throw std::invalid_argument("word " + x.str() + " does not lie in J(" +
                                        std::to_string(n) + "," + std::to_string(w) + ")");
    std::vector<Word> sorted(words);
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw std::invalid_argument("duplicate word " + dup->str());
    return Code{n, w, std::move(words)};
}

DoublyCode make_doubly_code(unsigned n1, unsigned w1, unsigned n2, unsigned w2,
                            std::vector<Word> words) {
    if (w1 > n1 || w2 > n2) throw std::invalid_argument("weights exceed block lengths");
    for (const auto& x : words) {
        if (x.n() != n1 + n2 || x.weight() != w1 + w2)
            throw std::invalid_argument("word " + x.str() + " has the wrong length or weight");
        auto low = std::count_if(x.support().begin(), x.support().end(),
                                 [&](unsigned i) { return i < n1; });
        if (static_cast<unsigned>(low) != w1)
            throw std::invalid_argument("word " + x.str() + " has " + std::to_string(low) +
                                        " ones in the first block, expected " +
                                        std::to_string(w1));
    }
    std::vector<Word> sorted(words);
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw std::invalid_argument("duplicate word " + dup->str());
    return DoublyCode{n1, w1, n2, w2, std::move(words)};
}

ExactInt sphere_size(const ExactInt& n, const ExactInt& w, const ExactInt& e) {
    ExactInt s = 0;
    for (ExactInt i = 0; i <= e; ++i) s += binom(w, i) * binom(n - w, i);
    return s;
}

ExactInt sphere_size_doubly(const ExactInt& n1, const ExactInt& w1, const ExactInt& n2,
                            const ExactInt& w2, const ExactInt& e) {
    ExactInt s = 0;
    for (ExactInt i = 0; i <= e; ++i) {
        ExactInt first = binom(w1, i) * binom(n1 - w1, i);
        if (first == 0) continue;
        for (ExactInt j = 0; i + j <= e; ++j) s += first * binom(w2, j) * binom(n2 - w2, j);
    }
    return s;
}

const char* to_string(PerfectStatus s) {
    switch (s) {
        case PerfectStatus::perfect: return "PERFECT";
        case PerfectStatus::not_perfect: return "NOT_PERFECT";
        case PerfectStatus::refused: return "REFUSED";
    }
    return "?";
}

PerfectVerdict verify_perfect(const Code& code, unsigned e, const EnumGuard& g) {
    return verify_shape(Shape{code.n, code.w, 0, 0}, code.words, e, g);
}

PerfectVerdict verify_perfect_doubly(const DoublyCode& code, unsigned e, const EnumGuard& g) {
    return verify_shape(Shape{code.n1, code.w1, code.n2, code.w2}, code.words, e, g);
}

std::vector<Word> ball(const Word& c, unsigned e) {
    std::vector<Word> out;
    if (c.n() > 64) throw std::length_error("ball: n above 64");
    Shape sh{c.n(), c.weight(), 0, 0};
    for_each_in_ball(sh, c.support(), e,
                     [&](const std::vector<unsigned>& s) { out.emplace_back(c.n(), s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ball_count_doubly(const DoublyCode& shape, const Word& c, unsigned e) {
    Shape sh{shape.n1, shape.w1, shape.n2, shape.w2};
    std::uint64_t count = 0;
    for_each_in_ball(sh, c.support(), e, [&](const std::vector<unsigned>&) { ++count; });
    return count;
}

namespace {
Word complement_range(const Word& x, unsigned lo, unsigned hi) {
    std::vector<unsigned> s;
    for (unsigned i : x.support())
        if (i < lo || i >= hi) s.push_back(i);
    for (unsigned i = lo; i < hi; ++i)
        if (!x.contains(i)) s.push_back(i);
    return Word(x.n(), std::move(s));
}
}  // namespace

Code complement_code(const Code& code) {
    Code out{code.n, code.n - code.w, {}};
    for (const auto& x : code.words) out.words.push_back(complement_range(x, 0, code.n));
    return out;
}

DoublyCode complement_code(const DoublyCode& code, Block which) {
    DoublyCode out = code;
    out.words.clear();
    unsigned lo = 0, hi = code.n();
    if (which == Block::first) hi = code.n1;
    if (which == Block::second) lo = code.n1;
    if (which != Block::second) out.w1 = code.n1 - code.w1;
    if (which != Block::first) out.w2 = code.n2 - code.w2;
    for (const auto& x : code.words) out.words.push_back(complement_range(x, lo, hi));
    return out;
}

namespace {
std::vector<ExactInt> counts_inside(const Code& code, const std::vector<unsigned>& block) {
    unsigned k = static_cast<unsigned>(block.size());
    std::vector<ExactInt> A(std::min(k, code.w) + 1, 0);
    for (const auto& x : code.words) {
        unsigned inside = 0;
        for (unsigned i : block) inside += x.contains(i);
        A[inside] += 1;
    }
    return A;
}
}  // namespace

ConfigDistribution configuration_distribution(const Code& code, unsigned k,
                                              std::optional<TranslateRequest> translate,
                                              const EnumGuard& g) {
    if (k > code.n) throw std::invalid_argument("block larger than n");
    ConfigDistribution d;
    d.k = k;
    std::vector<unsigned> prefix(k);
    for (unsigned i = 0; i < k; ++i) prefix[i] = i;
    d.A = counts_inside(code, prefix);
    if (!translate) return d;

    if (k != code.w) throw std::invalid_argument("translates need a block of size w");
    if (translate->leader > translate->e) throw std::invalid_argument("leader above e");
    if (code.n > g.max_n || binom(long(code.n), long(k)) > ExactInt(std::to_string(g.max_space)))
        throw std::length_error("translate search exceeds the enumeration guard");
    d.leader = translate->leader;
    const unsigned w = code.w, j = translate->leader, e = translate->e;
    for_each_subset(code.n, k, [&](const std::vector<unsigned>& block) {
        auto B = counts_inside(code, block);
        // B is indexed by ones inside the block; configuration (w-i, i) is B[w-i]
        bool ok = true;
        for (unsigned i = 0; i <= e && i <= w && ok; ++i)
            ok = B[w - i] == (i == j ? 1 : 0);
        if (!ok) return true;
        d.translate_block = block;
        d.B = std::move(B);
        return false;
    });
    return d;
}

Code align_to_prefix(const Code& code) {
    if (code.words.empty()) return code;
    const Word& first = code.words.front();
    std::vector<unsigned> perm(code.n);
    unsigned in = 0, out = code.w;
    for (unsigned i = 0; i < code.n; ++i) perm[i] = first.contains(i) ? in++ : out++;
    Code res{code.n, code.w, {}};
    for (const auto& x : code.words) {
        std::vector<unsigned> s;
        for (unsigned i : x.support()) s.push_back(perm[i]);
        res.words.emplace_back(code.n, std::move(s));
    }
    return res;
}

namespace {
unsigned diameter_of(const std::vector<Word>& ws) {
    unsigned d = 0;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            d = std::max(d, distance_sorted(ws[i].support(), ws[j].support()));
    return d;
}
}  // namespace

Anticode anticode_ball(unsigned n, unsigned w, unsigned t, AnticodeFlavor flavor,
                       std::uint64_t max_words, std::uint64_t max_pairs) {
    if (t > w || w > n) throw std::invalid_argument("anticode needs t <= w <= n");
    Anticode a;
    if (flavor == AnticodeFlavor::fixed_subset) {
        a.formula_size = binom(long(n - t), long(w - t));
    } else {
        if (t + 2 > n) throw std::invalid_argument("S-intersecting anticode needs t+2 <= n");
        a.formula_size = binom(long(n) - t - 2, long(w) - t - 2) +
                         ExactInt(t + 2) * binom(long(n) - t - 2, long(w) - t - 1);
    }
    if (a.formula_size > ExactInt(std::to_string(max_words)))
        throw std::length_error("anticode larger than the enumeration guard");
    if (n > 64) throw std::length_error("anticode: n above 64");

    if (flavor == AnticodeFlavor::fixed_subset) {
        for_each_subset(n - t, w - t, [&](const std::vector<unsigned>& rest) {
            std::vector<unsigned> s;
            for (unsigned i = 0; i < t; ++i) s.push_back(i);
            for (unsigned r : rest) s.push_back(r + t);
            a.words.emplace_back(n, std::move(s));
            return true;
        });
    } else {
        // at least t+1 of the t+2 points of S
        for (unsigned inS = t + 1; inS <= std::min(t + 2, w); ++inS)
            for_each_subset(t + 2, inS, [&](const std::vector<unsigned>& head) {
                for_each_subset(n - t - 2, w - inS, [&](const std::vector<unsigned>& rest) {
                    std::vector<unsigned> s(head);
                    for (unsigned r : rest) s.push_back(r + t + 2);
                    a.words.emplace_back(n, std::move(s));
                    return true;
                });
                return true;
            });
        std::sort(a.words.begin(), a.words.end());
    }
    std::uint64_t m = a.words.size();
    if (m * (m ? m - 1 : 0) / 2 <= max_pairs) {
        a.diameter = diameter_of(a.words);
        a.diameter_checked = true;
    }
    return a;
}

DoublyAnticode doubly_anticode(unsigned n1, unsigned w1, unsigned n2, unsigned w2, unsigned t1,
                               unsigned t2, std::uint64_t max_words) {
    if (t1 > w1 || w1 > n1 || t2 > w2 || w2 > n2)
        throw std::invalid_argument("doubly anticode needs t1 <= w1 <= n1 and t2 <= w2 <= n2");
    DoublyAnticode a;
    a.formula_size = binom(long(n1 - t1), long(w1 - t1)) * binom(long(n2 - t2), long(w2 - t2));
    if (a.formula_size > ExactInt(std::to_string(max_words)) || n1 + n2 > 64)
        throw std::length_error("doubly anticode larger than the enumeration guard");
    for_each_subset(n1 - t1, w1 - t1, [&](const std::vector<unsigned>& r1) {
        for_each_subset(n2 - t2, w2 - t2, [&](const std::vector<unsigned>& r2) {
            std::vector<unsigned> s;
            for (unsigned i = 0; i < t1; ++i) s.push_back(i);
            for (unsigned r : r1) s.push_back(r + t1);
            for (unsigned i = 0; i < t2; ++i) s.push_back(n1 + i);
            for (unsigned r : r2) s.push_back(n1 + t2 + r);
            a.words.emplace_back(n1 + n2, std::move(s));
            return true;
        });
        return true;
    });
    a.diameter = diameter_of(a.words);
    return a;
}

}  // namespace jsp
