#include "jsperfect/exactmath.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jsp {

namespace {

constexpr std::uint32_t kSieveLimit = 1000000;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

// Brent's variant of Pollard rho, f(x) = x^2 + c. Returns 0 on failure or when
// the iteration budget runs out.
ExactInt brent(const ExactInt& n, unsigned long c, unsigned long& budget) {
    ExactInt y = 2, x, ys, q = 1, g = 1, t;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](ExactInt& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) {
            if (budget == 0) return 0;
            --budget;
            step(y);
        }
        unsigned long k = 0;
        do {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                if (budget == 0) return 0;
                --budget;
                step(y);
                t = abs(x - y);
                q = q * t;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        // the batch overshot; replay one step at a time
        do {
            if (budget == 0) return 0;
            --budget;
            step(ys);
            t = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

// Splits m (no small factors) into primes; what cannot be split is multiplied
// into `left`.
void split_large(const ExactInt& m, std::map<ExactInt, unsigned long>& acc, ExactInt& left,
                 unsigned long& budget) {
    std::vector<ExactInt> stack{m};
    while (!stack.empty()) {
        ExactInt c = stack.back();
        stack.pop_back();
        if (c == 1) continue;
        if (is_probable_prime(c)) {
            acc[c]++;
            continue;
        }
        if (auto r = is_square(c)) {
            stack.push_back(*r);
            stack.push_back(*r);
            continue;
        }
        ExactInt d = 0;
        for (unsigned long cc = 1; cc < 40 && d == 0 && budget > 0; cc += 2) d = brent(c, cc, budget);
        if (d == 0) {
            left *= c;
            continue;
        }
        stack.push_back(d);
        stack.push_back(c / d);
    }
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = sieve(kSieveLimit);
    return primes;
}

bool is_probable_prime(const ExactInt& x) {
    if (x < 2) return false;
    // GMP: trial division, Baillie-PSW, then extra Miller-Rabin rounds
    return mpz_probab_prime_p(x.get_mpz_t(), 30) > 0;
}

Factorization factorize(const ExactInt& x, const FactorBudget& b) {
    if (x == 0) throw std::domain_error("factorize(0)");
    ExactInt m = abs(x);
    std::map<ExactInt, unsigned long> acc;
    const auto& primes = small_primes();
    bool reached_sqrt = false;
    std::uint32_t last = 1;
    for (std::uint32_t p : primes) {
        if (p > b.trial_bound) break;
        if (ExactInt(p) * p > m) {
            reached_sqrt = true;
            break;
        }
        last = p;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned long e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            acc[ExactInt(p)] = e;
        }
    }
    Factorization f;
    if (m > 1) {
        ExactInt lim = ExactInt(last) + 1;
        if (reached_sqrt || m < lim * lim) {
            acc[m]++;
        } else {
            unsigned long budget = b.rho_iterations;
            split_large(m, acc, f.unfactored, budget);
        }
    }
    for (auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

Tri is_squarefree(const ExactInt& x, const FactorBudget& b) {
    if (x == 0) throw std::domain_error("is_squarefree(0)");
    ExactInt m = abs(x);
    const auto& primes = small_primes();
    std::uint32_t last = 1;
    for (std::uint32_t p : primes) {
        if (p > b.trial_bound) break;
        if (ExactInt(p) * p > m) return Tri::yes;  // m is 1 or prime
        last = p;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return Tri::no;
        }
    }
    if (m == 1) return Tri::yes;
    // every prime factor of m exceeds `last`
    ExactInt lim = ExactInt(last) + 1;
    if (m < lim * lim) return Tri::yes;
    if (is_square(m)) return Tri::no;
    if (m < lim * lim * lim) return Tri::yes;  // p*q with p != q, or prime
    if (is_probable_prime(m)) return Tri::yes;
    std::map<ExactInt, unsigned long> acc;
    ExactInt left = 1;
    unsigned long budget = b.rho_iterations;
    split_large(m, acc, left, budget);
    for (auto& [p, e] : acc) {
        if (e >= 2) return Tri::no;
        if (left > 1 && mpz_divisible_p(left.get_mpz_t(), p.get_mpz_t())) return Tri::no;
    }
    if (left == 1) return Tri::yes;
    if (is_square(left)) return Tri::no;
    return Tri::unknown;
}

}  // namespace jsp
