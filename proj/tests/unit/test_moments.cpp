#include <doctest.h>

#include "jsperfect/johnson.hpp"
#include "jsperfect/moments.hpp"
#include "oracle.hpp"

using namespace jsp;

namespace {
ExactRational Q(long p, long q = 1) { return make_rational(p, q); }

Code pair63() { return make_code(6, 3, {Word(6, {0, 1, 2}), Word(6, {3, 4, 5})}); }
}  // namespace

TEST_SUITE("moments") {

TEST_CASE("sigma_e matches its double sum") {
    for (long n = 2; n <= 24; ++n)
        for (long w = 1; 2 * w <= n; ++w)
            for (long e = 0; e <= std::min(w, 3L); ++e)
                for (long t = 0; t <= w + 1; ++t) REQUIRE(sigma_e(n, w, t, e) == oracle::sigma(n, w, t, e));
}

TEST_CASE("e=1 strength is the first root") {
    for (long n = 2; n <= 60; ++n)
        for (long w = 1; 2 * w <= n; ++w) {
            auto s = strength(n, w, 1);
            std::optional<long> first;
            for (long t = 1; t <= w + 1 && !first; ++t)
                if (oracle::sigma(n, w, t, 1) == 0) first = t - 1;
            if (s.phi) {
                REQUIRE(first);
                CHECK(to_long(*s.phi) == *first);
                CHECK(*s.alpha == Q(n - 2 * w, 2));
            }
            // a square discriminant is the only way to get a root
            ExactInt D = ExactInt((n - 2 * w + 1) * (n - 2 * w + 1) + 4 * (w - 1));
            if (!is_square(D)) CHECK(!first);
        }
    // (15,7): D = 2^2 + 24 = 28
    CHECK(!strength(15, 7, 1).phi);
    CHECK(*strength(6, 3, 1).phi == 1);
}

TEST_CASE("e=2 strength at n=2w agrees with the root scan") {
    for (long w = 2; w <= 200; ++w) {
        auto s = strength(2 * w, w, 2);
        CHECK(s.path == "e2-radical");
        if (w > 40) continue;
        std::optional<long> first;
        for (long t = 1; t <= w + 1 && !first; ++t)
            if (oracle::sigma(2 * w, w, t, 2) == 0) first = t - 1;
        CHECK(s.phi.has_value() == first.has_value());
        if (s.phi && first) CHECK(to_long(*s.phi) == *first);
    }
}

TEST_CASE("relation root reproduces the e=1 strength") {
    for (long n = 2; n <= 60; ++n)
        for (long w = 1; 2 * w <= n; ++w) {
            auto s = strength(n, w, 1);
            if (!s.phi) continue;
            ExactInt k = *s.phi + 1;
            CHECK(1 + k * k - k * (1 + n) + n * w - w * w == 0);
        }
}

TEST_CASE("recurrence on the pair code, and the misprinted coefficient") {
    auto s = config_recurrence_solve(6, 3, 3, 3, 1, 0);
    CHECK(s.consistent);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) == 1);
    auto cd = configuration_distribution(pair63(), 3);
    for (long i = 0; i <= 3; ++i) CHECK(s.at(i) == ExactRational(cd.A[i]));

    auto p = config_recurrence_solve(6, 3, 3, 3, 1, 0, 0, RecurrenceForm::printed);
    CHECK(!p.consistent);
    CHECK(recurrence_residual(6, 3, 3, 3, 0, 1, 0, RecurrenceForm::corrected) == 0);
    CHECK(recurrence_residual(6, 3, 3, 3, 0, 1, 0, RecurrenceForm::printed) != 0);
}

TEST_CASE("delta moments") {
    for (long w = 3; w <= 30; ++w)
        for (long a = 0; a <= 20; ++a) {
            long n = 2 * w + a;
            CHECK(delta_moment_stepped(n, w, w) == 1);
            CHECK(delta_moment_stepped(n, w, w - 1) == Q(w - 1));
            for (long k = 1; k <= w; ++k)
                CHECK(delta_relation_residual(n, w, k, delta_moment_stepped(n, w, k),
                                              delta_moment_stepped(n, w, k - 1)) == 0);
        }
    for (long w = 6; w <= 30; ++w)
        for (long a = 0; a <= 20; ++a)
            CHECK(delta_moment_stepped(2 * w + a, w, w - 5) ==
                  Q((w - 1) * (a - w + 3) * (2 * a - w + 7) * (3 * a - w + 13) * (4 * a - w + 21), 14400));
}

TEST_CASE("closed forms agree with the recurrence path") {
    for (long n = 2; n <= 40; ++n)
        for (long w = 1; 2 * w <= n; ++w) {
            auto rec = moments_1perfect_recurrence(n, w);
            REQUIRE(rec.size() == static_cast<size_t>(w + 1));
            for (long k = 1; k <= w; ++k) {
                auto c = moments_1perfect_closed(n, w, k);
                REQUIRE(c.delta == rec[k].delta);
                REQUIRE(c.A == rec[k].A);
                REQUIRE(c.B == rec[k].B);
                REQUIRE(c.delta == delta_moment_stepped(n, w, k));
            }
        }
}

TEST_CASE("printed A and B only agree at n = 2w") {
    auto c = moments_1perfect_closed(12, 5, 5);
    auto p = moments_1perfect_closed(12, 5, 5, MomentForm::printed);
    CHECK(c.A == 1);
    CHECK(p.A == Q(14, 9));
    for (long w = 2; w <= 12; ++w)
        for (long k = 1; k <= w; ++k) {
            auto cc = moments_1perfect_closed(2 * w, w, k);
            auto pp = moments_1perfect_closed(2 * w, w, k, MomentForm::printed);
            CHECK(cc.A == pp.A);
            CHECK(cc.B == pp.B);
        }
}

TEST_CASE("summation identity in distance indexing") {
    for (long n = 0; n <= 40; ++n)
        for (long w = 0; w <= n; ++w)
            for (long k = 0; k <= w; ++k) {
                ExactInt s = 0;
                for (long i = 0; i <= w; ++i) s += oracle::C(i, k) * oracle::C(w, i) * oracle::C(n - w, i);
                REQUIRE(s == oracle::C(n - w, k) * oracle::C(n - k, w - k));
            }
}

TEST_CASE("table expressions against the printed polynomials") {
    for (long w = 13; w <= 40; ++w)
        for (long a = 0; a <= 30; ++a) {
            auto t = table_expressions(w, a);
            CHECK(t.delta == Q((w - 1) * (a - w + 3) * (2 * a - w + 7) * (3 * a - w + 13) * (4 * a - w + 21), 14400));
            ExactRational pa = Q(w * (w - 1) * (w + a) * (w + a - 1), 14400) *
                               Q(a * a * (26 + (w - 9) * w) + (w - 3) * (-181 + w * (87 + (w - 15) * w)) +
                                 a * (-221 + w * (132 + w * (2 * w - 27))));
            CHECK(t.A == pa);
            ExactRational pb = Q((w + a - 1) * (w + a), 720) *
                               Q(a * a * (26 + (w - 9) * w) + (w - 3) * (19 + w * (-3 + (w - 5) * w)) +
                                 a * (-21 + w * (42 + w * (2 * w - 17))));
            CHECK(t.B == pb);
            // the a(...) term sits at the top level of the bracket
            ExactRational pc = Q(w * (w - 1), 720) *
                               Q(a * a * (-4 + (w + 1) * w) + (w - 3) * (19 + w * (-3 + (w - 5) * w)) +
                                 a * (49 + w * (-18 + w * (2 * w - 7))));
            CHECK(t.C == pc);
        }
}

TEST_CASE("identity for codes in J(2w,w)") {
    for (unsigned k = 2; k <= 3; ++k) {
        auto r = moment_identity_J2w(pair63(), 1, k);
        CHECK(r.identity.holds());
        CHECK(r.rearranged.holds());
    }
    auto one = make_code(6, 3, {Word(6, {0, 1, 2})});
    CHECK_THROWS_AS(moment_identity_J2w(one, 1, 2), std::invalid_argument);
}

TEST_CASE("elementary binomial identities") {
    for (long i = 0; i <= 60; ++i)
        for (long k = 0; k <= i; ++k) {
            ExactInt c = oracle::C(i, k);
            REQUIRE(c * (i + 1) == (k + 1) * oracle::C(i + 1, k + 1));
            // i C(i,k) = (k+1) C(i,k+1) + k C(i,k)
            REQUIRE(c * i == (k + 1) * oracle::C(i, k + 1) + k * c);
            // i^2 C(i,k) by applying the step twice
            ExactInt sq = (k + 1) * (k + 2) * oracle::C(i, k + 2) + (k + 1) * (2 * k + 1) * oracle::C(i, k + 1) + k * k * c;
            REQUIRE(c * i * i == sq);
            ExactInt four = 0;
            for (long v = 0; v <= 4; ++v) four += stirling2(4, v) * factorial(v) * oracle::C(i, v);
            REQUIRE(four == ExactInt(i * i * i * i));
        }
}

TEST_CASE("power and binomial moments vanish together") {
    auto z = stirling_moment_equivalence({0, 0, 0, 0}, 3);
    CHECK(z.power_moments_vanish);
    CHECK(z.binomial_moments_vanish);
    CHECK(z.equivalent());
    auto a0 = stirling_moment_equivalence({1, -1}, 0);
    CHECK(a0.power_moments_vanish);
    CHECK(a0.equivalent());
    auto a1 = stirling_moment_equivalence({1, -1}, 1);
    CHECK(!a1.power_moments_vanish);
    CHECK(!a1.binomial_moments_vanish);
    CHECK(a1.equivalent());
    CHECK(a1.conversion_exact);
    // delta of the pair code by distance from one codeword, against the ball
    auto e = stirling_moment_equivalence({1, -9, 9, -1}, 3);
    CHECK(e.conversion_exact);
    CHECK(e.equivalent());
}

}
