#include <doctest.h>

#include "jsperfect/twoperfect.hpp"
#include "oracle.hpp"

using namespace jsp;

namespace {

// Words with i ones in the first w coordinates at distance <= 2 from a fixed
// word with ip ones there, in J(2w,w).
ExactInt near_count(long w, long ip, long i) {
    ExactInt t = 0;
    for (long d = 0; d <= 2; ++d)
        for (long r = 0; r <= d; ++r) {
            long s = i - ip + r;
            if (0 <= s && s <= d)
                t += oracle::C(ip, r) * oracle::C(w - ip, d - r) * oracle::C(w - ip, s) * oracle::C(ip, d - s);
        }
    return t;
}

// same count by enumeration
long near_count_brute(unsigned w, unsigned ip, unsigned i) {
    unsigned n = 2 * w;
    oracle::Set x;
    for (unsigned q = 0; q < ip; ++q) x.push_back(q);
    for (unsigned q = 0; q < w - ip; ++q) x.push_back(w + q);
    long cnt = 0;
    for (const auto& y : oracle::subsets(n, w)) {
        unsigned inside = 0;
        for (unsigned v : y)
            if (v < w) ++inside;
        if (inside == i && oracle::jdist(x, y) <= 2) ++cnt;
    }
    return cnt;
}

// Solve the covering system top-down for the difference of the distributions.
std::map<long, ExactRational> deltas(long w, unsigned leader) {
    std::map<long, ExactRational> D;
    D[w] = 1;
    D[w - 1] = leader == 1 ? -1 : 0;
    for (long row = w; row > 1; --row) {
        ExactRational s = 0;
        for (long ip = row - 1; ip <= std::min(row + 2, w); ++ip) s += D[ip] * ExactRational(near_count(w, ip, row));
        D[row - 2] = -s / ExactRational(near_count(w, row - 2, row));
    }
    return D;
}

ExactRational moment(long w, unsigned leader, long j) {
    auto D = deltas(w, leader);
    ExactRational m = 0;
    for (long i = 0; i <= w; ++i) m += ExactRational(oracle::C(i, w - j)) * D[i];
    return m;
}

}  // namespace

TEST_SUITE("twoperfect") {

TEST_CASE("the neighbourhood count") {
    for (unsigned w = 2; w <= 6; ++w)
        for (unsigned ip = 0; ip <= w; ++ip)
            for (unsigned i = 0; i <= w; ++i) REQUIRE(near_count(w, ip, i) == near_count_brute(w, ip, i));
}

TEST_CASE("recursion agrees with the covering system") {
    for (long w = 8; w <= 24; ++w)
        for (unsigned l : {1u, 2u}) {
            auto m = two_perfect_moments(w, 7, l);
            REQUIRE(m.size() == 8);
            for (long j = 0; j <= 7; ++j) CHECK(m[j] == moment(w, l, j));
        }
}

TEST_CASE("closed forms") {
    for (long w = 8; w <= 60; ++w) {
        auto m1 = two_perfect_moments(w, 7, 1);
        auto m2 = two_perfect_moments(w, 7, 2);
        for (unsigned j = 2; j <= 7; ++j) {
            CHECK(*two_perfect_closed_form(w, j, 1) == m1[j]);
            CHECK(*two_perfect_closed_form(w, j, 2) == m2[j]);
            CHECK(delta_moment_2perfect(w, w - j, 1) == m1[j]);
        }
        CHECK(*two_perfect_closed_form(w, 2, 1) == make_rational((w - 1) * (w - 2), 2));
        CHECK(*two_perfect_closed_form(w, 3, 2) == make_rational((w - 2) * (3 * w * w - 5 * w - 14), 18));
    }
    CHECK(!two_perfect_closed_form(20, 8, 1));
}

TEST_CASE("misprinted j=5 form") {
    CHECK(*two_perfect_closed_form(8, 5, 1) == make_rational(189, 100));
    CHECK(*two_perfect_closed_form(8, 5, 1, PrintedOrCorrected::printed) == make_rational(-2051, 100));
    for (long w = 8; w <= 30; ++w)
        for (unsigned j = 2; j <= 7; ++j)
            for (unsigned l : {1u, 2u}) {
                bool same = *two_perfect_closed_form(w, j, l) ==
                            *two_perfect_closed_form(w, j, l, PrintedOrCorrected::printed);
                CHECK(same == !(j == 5 && l == 1));
            }
}

TEST_CASE("integer polynomial form") {
    for (unsigned j = 2; j <= 7; ++j)
        for (unsigned l : {1u, 2u}) {
            const auto& p = two_perfect_poly(j, l);
            for (long w = 8; w <= 40; ++w) {
                ExactInt num = 1;
                for (const auto& f : p.factors) {
                    ExactInt v = 0;
                    for (size_t d = f.size(); d-- > 0;) v = v * w + f[d];
                    num *= v;
                }
                CHECK(make_rational(num, p.denominator) == *two_perfect_closed_form(w, j, l));
            }
        }
}

TEST_CASE("three-term relation annihilates the moments") {
    for (long w = 3; w <= 50; ++w)
        for (unsigned l : {1u, 2u}) {
            auto m = two_perfect_moments(w, static_cast<unsigned>(w), l);
            // m[j] is the moment at k = w - j
            for (long j = 2; j <= w; ++j) {
                long k = w - j + 2;
                CHECK(two_perfect_relation_residual(w, k, m[j - 2], m[j - 1], m[j]) == 0);
            }
        }
}

}
