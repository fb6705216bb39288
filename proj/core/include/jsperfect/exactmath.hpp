#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jsp {

// GMP-backed exact types. mpq_class is kept canonical by every helper here.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Decimal only: optional leading '-', then digits. No '+', no blanks, no separators.
std::optional<ExactInt> parse_int(std::string_view s);
std::string to_string(const ExactInt& x);
// "p" when integral, "p/q" otherwise.
std::string to_string(const ExactRational& q);

// throws std::domain_error on a zero denominator
ExactRational make_rational(const ExactInt& num, const ExactInt& den);
inline bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

// C(n,k). k < 0 gives 0; for n >= 0 and k > n gives 0; negative n uses the
// polynomial extension n(n-1)...(n-k+1)/k!.
ExactInt binom(const ExactInt& n, const ExactInt& k);
ExactInt binom(long n, long k);
ExactInt factorial(unsigned long n);
ExactInt stirling2(unsigned r, unsigned v);

std::optional<ExactInt> is_square(const ExactInt& x);

bool fits_long(const ExactInt& x);
long to_long(const ExactInt& x);  // throws std::overflow_error

// Three-valued answer for tests that may run out of budget.
enum class Tri { no, yes, unknown };
const char* to_string(Tri t);

struct FactorBudget {
    unsigned long trial_bound = 1000000;
    // total Brent iterations allowed across one factorization
    unsigned long rho_iterations = 1ul << 22;
};

struct PrimePower {
    ExactInt p;
    unsigned long e;
};

struct Factorization {
    std::vector<PrimePower> factors;  // increasing p
    ExactInt unfactored = 1;          // > 1 only when the budget ran out
    bool complete() const { return unfactored == 1; }
};

// |x| is factored; x = 0 throws std::domain_error.
Factorization factorize(const ExactInt& x, const FactorBudget& b = {});
Tri is_squarefree(const ExactInt& x, const FactorBudget& b = {});
bool is_probable_prime(const ExactInt& x);

unsigned long valuation(const ExactInt& x, const ExactInt& p);
// v_p(C(n,k)) for 0 <= k <= n (Kummer: number of carries adding k and n-k in base p)
unsigned long binom_valuation(const ExactInt& n, const ExactInt& k, const ExactInt& p);

// Decides d | C(n,k) prime by prime. On failure, fills the witness prime and the
// two valuations. unknown only if d cannot be factored within the budget and
// C(n,k) is too large to divide directly.
struct BinomDivisibility {
    Tri divides = Tri::unknown;
    ExactInt p;                 // failing prime when divides == no
    unsigned long need = 0;     // v_p(d)
    unsigned long have = 0;     // v_p(C(n,k))
};
BinomDivisibility divides_binom(const Factorization& d, const ExactInt& dval,
                                const ExactInt& n, const ExactInt& k);
BinomDivisibility divides_binom(const ExactInt& d, const ExactInt& n, const ExactInt& k,
                                const FactorBudget& b = {});

// Primes below 10^6, sieved once on first use.
const std::vector<std::uint32_t>& small_primes();

}  // namespace jsp
