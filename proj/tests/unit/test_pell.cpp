#include <doctest.h>

#include <sstream>

#include "jsperfect/pell.hpp"
#include "oracle.hpp"

using namespace jsp;

TEST_SUITE("pell") {

TEST_CASE("solutions against a direct search") {
    std::vector<std::pair<long, long>> found;
    for (long y = 1; y <= 200000; ++y) {
        long x2 = 2 * y * y - 1;
        auto r = is_square(x2);
        if (r) found.emplace_back(to_long(*r), y);
    }
    auto s = pell_solutions(ExactInt(2 * 200000) * 2);
    std::vector<std::pair<long, long>> got;
    for (const auto& p : s)
        if (p.y <= 200000) got.emplace_back(to_long(p.x), to_long(p.y));
    // x = 1, y = 1 is k = 1
    CHECK(got == found);
    for (size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].k == 2 * i + 1);
        CHECK(s[i].x * s[i].x - 2 * s[i].y * s[i].y == -1);
    }
}

TEST_CASE("the x = 1 mod 4 family") {
    auto f = pell_family(12);
    REQUIRE(f.size() == 13);
    CHECK(f[0].x == 1);
    CHECK(f[0].w == 2);
    CHECK(f[1].x == 41);
    CHECK(f[1].w == 22);
    CHECK(f[2].x == 1393);
    auto all = pell_solutions(f.back().x);
    for (const auto& r : f) {
        // k = 4t+1 in the full solution list
        CHECK(all[2 * r.t].x == r.x);
        CHECK(all[2 * r.t].y == r.y);
        CHECK(r.x % 4 == 1);
        CHECK(2 * r.w == r.x + 3);
        CHECK(r.c2 == 1 + 4 * (r.x + r.y));
        CHECK(r.d2 == 1 + 4 * (r.x - r.y));
        CHECK(family_x_binomial(r.t) == r.x);
        CHECK(family_c2_binomial(r.t) == r.c2);
        CHECK(family_d2_binomial(r.t) == r.d2);
        CHECK(family_c2_power(r.t) == r.c2);
        CHECK(family_d2_power(r.t) == r.d2);
        // w = 2 (mod 12) exactly when x = 1 (mod 24)
        CHECK((r.w % 12 == 2) == (r.x % 24 == 1));
    }
}

TEST_CASE("binomial sums written out") {
    for (unsigned t = 0; t <= 12; ++t) {
        unsigned m = 2 * t;
        ExactInt x = 0;
        for (unsigned j = 0; j <= m; ++j) x += oracle::C(2 * m + 1, 2 * j) * (ExactInt(1) << j);
        CHECK(family_x_binomial(t) == x);
        ExactInt c2 = 1;
        for (unsigned j = 0; j <= 2 * t; ++j) c2 += oracle::C(4 * t + 2, 2 * j + 1) * (ExactInt(1) << (j + 2));
        CHECK(family_c2_binomial(t) == c2);
    }
}

TEST_CASE("the mod 3 sum") {
    CHECK(mod3_sum(6) == 65);
    for (unsigned m = 0; m <= 30; ++m) {
        ExactInt x = 0;
        for (unsigned j = 0; j <= m; ++j) x += oracle::C(2 * m + 1, 2 * j) * (ExactInt(1) << j);
        CHECK((mod3_sum(m) % 3 == 0) == (x % 3 == 1));
    }
}

TEST_CASE("conditions for small rows") {
    auto t1 = pell_conditions(22);
    CHECK(t1.family);
    REQUIRE(t1.c_square);
    CHECK(!*t1.c_square);
    CHECK(*t1.d_square);
    CHECK(t1.excluded());
    auto fails = t1.failed();
    CHECK(std::find(fails.begin(), fails.end(), "c-square") != fails.end());
    CHECK(std::find(fails.begin(), fails.end(), "d-square") == fails.end());
    CHECK(std::find(fails.begin(), fails.end(), "mod3") != fails.end());

    auto t0 = pell_conditions(2);
    CHECK(t0.below_min_weight);
    CHECK(t0.failed() == std::vector<std::string>{"min-weight"});

    auto none = pell_conditions(10);
    CHECK(!none.y);
    CHECK(none.excluded());
}

TEST_CASE("exclusion up to the threshold") {
    auto s = exclusion_scan(ExactInt("2500000000000000"));
    CHECK(s.all_excluded());
    long fam = 0;
    for (const auto& r : s.rows) {
        CHECK(2 * r.w < ExactInt("2500000000000000"));
        if (r.family) ++fam;
    }
    CHECK(fam == 11);
}

TEST_CASE("table text") {
    auto t = table3_tsv(ExactInt("2500000000000000"));
    std::istringstream in(t);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t\t1+4(x-y)\t1+4(x+y)\tx\tw");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 11);
}

}
