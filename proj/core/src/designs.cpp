#include "jsperfect/designs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jsp {

namespace {

ExactInt guard_value(std::uint64_t g) { return ExactInt(std::to_string(g)); }

// index of a sorted subset of {0..n-1} in colex order
std::uint64_t colex(const std::vector<unsigned>& s) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom(long(s[i]), long(i + 1)).get_ui();
    return r;
}

}  // namespace

BlockDesign make_design(unsigned n, std::vector<Word> blocks) {
    BlockDesign d{n, blocks.empty() ? 0 : blocks.front().weight(), {}};
    for (const auto& b : blocks) {
        if (b.n() != n) throw std::invalid_argument("block " + b.str() + " has a different n");
        if (b.weight() != d.w) throw std::invalid_argument("blocks of unequal size");
    }
    std::vector<Word> sorted(blocks);
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw std::invalid_argument("repeated block " + dup->str());
    d.blocks = std::move(blocks);
    return d;
}

std::optional<ExactInt> verify_design(const BlockDesign& d, unsigned t,
                                      std::uint64_t max_subsets) {
    if (t > d.w) return std::nullopt;
    if (t == 0) return ExactInt(static_cast<unsigned long>(d.blocks.size()));
    ExactInt total = binom(long(d.n), long(t));
    if (total > guard_value(max_subsets))
        throw std::length_error("verify_design: too many t-subsets to enumerate");
    std::vector<std::uint32_t> count(total.get_ui(), 0);
    for (const auto& b : d.blocks) {
        const auto& s = b.support();
        for_each_subset(d.w, t, [&](const std::vector<unsigned>& pos) {
            std::vector<unsigned> sub;
            sub.reserve(t);
            for (unsigned p : pos) sub.push_back(s[p]);
            ++count[colex(sub)];
            return true;
        });
    }
    std::uint32_t lambda = count.empty() ? 0 : count.front();
    for (auto c : count)
        if (c != lambda) return std::nullopt;
    return ExactInt(lambda);
}

unsigned code_strength(const BlockDesign& d) {
    unsigned best = 0;
    for (unsigned t = 1; t <= d.w; ++t)
        if (verify_design(d, t)) best = t;
    return best;
}

bool SteinerCheck::admissible() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.status != Status::fail; });
}

SteinerCheck steiner_conditions(const ExactInt& t, const ExactInt& w, const ExactInt& n) {
    if (t < 0 || t > w || w > n) throw std::invalid_argument("steiner_conditions: need t <= w <= n");
    SteinerCheck out;
    bool integral = true;
    for (ExactInt i = 0; i <= t; ++i) {
        ExactRational r = make_rational(binom(n - i, t - i), binom(w - i, t - i));
        Verdict v("steiner.div." + to_string(i), is_integer(r) ? Status::pass : Status::fail);
        v.with("i", i).with("ratio", r);
        integral = integral && is_integer(r);
        if (i == 0 && is_integer(r)) out.block_count = r.get_num();
        out.verdicts.push_back(std::move(v));
    }
    if (!integral) out.block_count.reset();
    ExactInt tits = (t + 1) * (w - t + 1);
    if (w < n) {
        Verdict v("steiner.tits", n >= tits ? Status::pass : Status::fail);
        v.with("n", n).with("bound", tits);
        out.verdicts.push_back(std::move(v));
    } else {
        out.verdicts.emplace_back("steiner.tits", Status::not_applicable);
        out.verdicts.back().because("w = n");
    }
    return out;
}

BlockDesign derived_design(const BlockDesign& d, unsigned point) {
    if (point >= d.n) throw std::invalid_argument("derived_design: point out of range");
    unsigned t = 0;
    for (unsigned s = 1; s <= d.w; ++s) {
        auto lam = verify_design(d, s);
        if (lam && *lam == 1) t = s;
    }
    if (t == 0) throw std::invalid_argument("derived_design: not a Steiner system with t >= 1");
    BlockDesign out{d.n - 1, d.w - 1, {}};
    for (const auto& b : d.blocks) {
        if (!b.contains(point)) continue;
        std::vector<unsigned> s;
        for (unsigned x : b.support())
            if (x != point) s.push_back(x > point ? x - 1 : x);
        out.blocks.emplace_back(d.n - 1, std::move(s));
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> incidence_matrix(const BlockDesign& d) {
    std::vector<std::vector<std::uint8_t>> m(d.blocks.size(), std::vector<std::uint8_t>(d.n, 0));
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        for (unsigned x : d.blocks[i].support()) m[i][x] = 1;
    return m;
}

DoublySteinerBounds doubly_steiner_bounds(const DoublySteinerParams& p) {
    DoublySteinerBounds b;
    long t1 = p.t1, t2 = p.t2, w1 = p.w1, w2 = p.w2;
    b.n1_raw_a = w1 * (t2 + 1) - t1 * t2;
    b.n1_raw_b = (w1 - t1 + 1) * (t1 + 1);
    b.n2_raw_a = w2 * (t1 + 1) - t1 * t2;
    b.n2_raw_b = (w2 - t2 + 1) * (t2 + 1);
    b.n1_bound = std::max(b.n1_raw_a, b.n1_raw_b);
    b.n2_bound = std::max(b.n2_raw_a, b.n2_raw_b);
    if (p.t1 == p.t2)
        b.label = "hypothesis unmet";
    else if (p.t2 > p.t1 && p.t1 < p.w1)
        b.label = "theorem";
    else if (p.t1 > p.t2 && p.t2 < p.w2)
        b.label = "by symmetry";
    else
        b.label = "hypothesis unmet";
    return b;
}

bool DoublySteinerReport::ok() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.status != Status::fail; });
}

DoublySteinerReport doubly_steiner_check(const DoublySteinerParams& p, const DoublyCode* code,
                                         std::uint64_t max_subsets) {
    if (p.t1 > p.w1 || p.w1 > p.n1 || p.t2 > p.w2 || p.w2 > p.n2)
        throw std::invalid_argument("doubly Steiner parameters need t <= w <= n in each block");
    DoublySteinerReport r;
    r.size = make_rational(binom(long(p.n1), long(p.t1)) * binom(long(p.n2), long(p.t2)),
                           binom(long(p.w1), long(p.t1)) * binom(long(p.w2), long(p.t2)));
    {
        Verdict v("dsteiner.size", is_integer(r.size) ? Status::pass : Status::fail);
        v.with("size", r.size);
        r.verdicts.push_back(std::move(v));
    }
    r.bounds = doubly_steiner_bounds(p);
    bool degenerate = p.t1 == p.w1 && p.t2 == p.w2;
    for (int side = 1; side <= 2; ++side) {
        long n = side == 1 ? p.n1 : p.n2;
        long bound = side == 1 ? r.bounds.n1_bound : r.bounds.n2_bound;
        Verdict v(side == 1 ? "dsteiner.n1" : "dsteiner.n2",
                  degenerate ? Status::not_applicable : (n >= bound ? Status::pass : Status::fail));
        v.with(side == 1 ? "n1" : "n2", n).with("bound", bound);
        v.because(degenerate ? "whole space" : r.bounds.label);
        r.verdicts.push_back(std::move(v));
    }
    if (!code) return r;

    if (code->n1 != p.n1 || code->n2 != p.n2 || code->w1 != p.w1 || code->w2 != p.w2)
        throw std::invalid_argument("code does not match the doubly Steiner parameters");
    ExactInt subsets = binom(long(p.n1), long(p.t1)) * binom(long(p.n2), long(p.t2));
    if (subsets > guard_value(max_subsets))
        throw std::length_error("doubly_steiner_check: too many (t1,t2) words to enumerate");

    std::map<std::vector<unsigned>, unsigned> hits;
    for (const auto& c : code->words) {
        const auto& s = c.support();
        std::vector<unsigned> lo(s.begin(), s.begin() + p.w1), hi(s.begin() + p.w1, s.end());
        for_each_subset(p.w1, p.t1, [&](const std::vector<unsigned>& a) {
            for_each_subset(p.w2, p.t2, [&](const std::vector<unsigned>& b) {
                std::vector<unsigned> key;
                for (unsigned i : a) key.push_back(lo[i]);
                for (unsigned i : b) key.push_back(hi[i]);
                ++hits[key];
                return true;
            });
            return true;
        });
    }
    bool cover_ok = true;
    for_each_subset(p.n1, p.t1, [&](const std::vector<unsigned>& a) {
        for_each_subset(p.n2, p.t2, [&](const std::vector<unsigned>& b) {
            std::vector<unsigned> key(a);
            for (unsigned i : b) key.push_back(p.n1 + i);
            auto it = hits.find(key);
            if (it == hits.end() || it->second != 1) {
                cover_ok = false;
                r.uncovered = Word(p.n1 + p.n2, key);
                Verdict v("dsteiner.cover", Status::fail);
                v.with("word", r.uncovered->str())
                    .with("covered", long(it == hits.end() ? 0 : it->second));
                r.verdicts.push_back(std::move(v));
            }
            return cover_ok;
        });
        return cover_ok;
    });
    if (cover_ok) r.verdicts.emplace_back("dsteiner.cover", Status::pass);

    ExactInt lhs = ExactInt(static_cast<unsigned long>(code->words.size())) *
                   binom(long(p.n1 - p.t1), long(p.w1 - p.t1)) *
                   binom(long(p.n2 - p.t2), long(p.w2 - p.t2));
    ExactInt rhs = binom(long(p.n1), long(p.w1)) * binom(long(p.n2), long(p.w2));
    Verdict v("dsteiner.diameter_perfect", lhs == rhs ? Status::pass : Status::fail);
    v.with("lhs", lhs).with("rhs", rhs);
    r.verdicts.push_back(std::move(v));
    return r;
}

}  // namespace jsp
