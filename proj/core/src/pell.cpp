#include "jsperfect/pell.hpp"

#include <sstream>

namespace jsp {

std::vector<PellSolution> pell_solutions(const ExactInt& x_max) {
    std::vector<PellSolution> out;
    PellSolution s{1, 1, 1};
    while (s.x <= x_max) {
        out.push_back(s);
        // multiply by (1+sqrt2)^2 = 3 + 2 sqrt2
        ExactInt x = 3 * s.x + 4 * s.y, y = 2 * s.x + 3 * s.y;
        s = {s.k + 2, x, y};
    }
    return out;
}

std::vector<FamilyRow> pell_family(unsigned t_max) {
    std::vector<FamilyRow> out;
    ExactInt x = 1, y = 1;
    for (unsigned t = 0; t <= t_max; ++t) {
        FamilyRow r;
        r.t = t;
        r.x = x;
        r.y = y;
        r.w = (x + 3) / 2;
        r.c2 = 1 + 4 * (x + y);
        r.d2 = 1 + 4 * (x - y);
        out.push_back(r);
        ExactInt nx = 17 * x + 24 * y, ny = 12 * x + 17 * y;
        x = nx;
        y = ny;
    }
    return out;
}

namespace {

ExactInt pow2(unsigned long e) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// (3 + 2 sqrt2)^e = a + b sqrt2; returns b
ExactInt sqrt2_part(unsigned long e) {
    ExactInt a = 1, b = 0;
    for (unsigned long i = 0; i < e; ++i) {
        ExactInt na = 3 * a + 4 * b, nb = 2 * a + 3 * b;
        a = na;
        b = nb;
    }
    return b;
}

}  // namespace

ExactInt family_x_binomial(unsigned t) {
    const long k = 4L * t + 1;
    ExactInt s = 0;
    for (long j = 0; 2 * j <= k; ++j) s += binom(k, 2 * j) * pow2(j);
    return s;
}

ExactInt family_c2_binomial(unsigned t) {
    ExactInt s = 1;
    for (long j = 0; j <= 2L * t; ++j) s += binom(4L * t + 2, 2 * j + 1) * pow2(j + 2);
    return s;
}

ExactInt family_d2_binomial(unsigned t) {
    ExactInt s = 1;
    for (long j = 0; j <= 2L * t - 1; ++j) s += binom(4L * t, 2 * j + 1) * pow2(j + 2);
    return s;
}

// sqrt2 [(a + b sqrt2) - (a - b sqrt2)] = 4b
ExactInt family_c2_power(unsigned t) { return 1 + 4 * sqrt2_part(2ul * t + 1); }
ExactInt family_d2_power(unsigned t) { return 1 + 4 * sqrt2_part(2ul * t); }

ExactInt mod3_sum(unsigned m) {
    const long n = 2L * m + 1;
    ExactInt s = 0;
    for (long j = 1; 2 * j <= n; ++j) {
        if (j % 2) s += binom(n, 2 * j);
        else s -= binom(n, 2 * j);
    }
    return s;
}

// Each branch of the strength radical needs its own square, so the square
// tests only exclude when both fail.
bool PellConditions::excluded() const {
    if (below_min_weight || !y || !family || !mod3) return true;
    return !c_square.value_or(false) && !d_square.value_or(false);
}

std::vector<std::string> PellConditions::failed() const {
    std::vector<std::string> f;
    if (below_min_weight) f.push_back("min-weight");
    if (!y) {
        f.push_back("pell");
        return f;
    }
    if (!family) f.push_back("family");
    if (!mod3) f.push_back("mod3");
    if (!c_square.value_or(false)) f.push_back("c-square");
    if (!d_square.value_or(false)) f.push_back("d-square");
    return f;
}

PellConditions pell_conditions(const ExactInt& w) {
    PellConditions c;
    c.w = w;
    c.x = 2 * w - 3;
    c.below_min_weight = w < 5;
    c.y = is_square(2 * w * w - 6 * w + 5);
    ExactInt r3;
    mpz_fdiv_r_ui(r3.get_mpz_t(), c.x.get_mpz_t(), 3);
    c.mod3 = r3 == 1;
    if (!c.y || c.x < 1) {
        c.y.reset();
        return c;
    }
    for (const auto& s : pell_solutions(c.x))
        if (s.x == c.x) c.k = s.k;
    ExactInt r4;
    mpz_fdiv_r_ui(r4.get_mpz_t(), c.x.get_mpz_t(), 4);
    c.family = r4 == 1;
    c.c_square = is_square(1 + 4 * (c.x + *c.y)).has_value();
    c.d_square = is_square(1 + 4 * (c.x - *c.y)).has_value();
    return c;
}

bool ExclusionScan::all_excluded() const {
    for (const auto& r : rows)
        if (!r.excluded()) return false;
    return true;
}

ExclusionScan exclusion_scan(const ExactInt& n_limit) {
    ExclusionScan s;
    s.n_limit = n_limit;
    // 2w = x + 3 < n_limit
    for (const auto& sol : pell_solutions(n_limit - 4)) {
        ExactInt w = (sol.x + 3) / 2;
        if (2 * w >= n_limit) break;
        s.rows.push_back(pell_conditions(w));
    }
    return s;
}

std::string table3_tsv(const ExactInt& n_limit) {
    std::ostringstream os;
    os << "t\t1+4(x-y)\t1+4(x+y)\tx\tw\n";
    for (unsigned t_max = 0;; ++t_max) {
        auto r = pell_family(t_max).back();
        if (2 * r.w >= n_limit) break;
        os << r.t << '\t' << to_string(r.d2) << '\t' << to_string(r.c2) << '\t' << to_string(r.x) << '\t'
           << to_string(r.w) << '\n';
    }
    return os.str();
}

}  // namespace jsp
