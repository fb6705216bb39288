#include "jsperfect/exactmath.hpp"

#include <climits>
#include <stdexcept>

namespace jsp {

std::optional<ExactInt> parse_int(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    ExactInt r;
    if (r.set_str(std::string(s), 10) != 0) return std::nullopt;
    return r;
}

std::string to_string(const ExactInt& x) { return x.get_str(10); }

std::string to_string(const ExactRational& q) { return q.get_str(10); }

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

bool fits_long(const ExactInt& x) { return x.fits_slong_p(); }

long to_long(const ExactInt& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("value does not fit in long: " + to_string(x));
    return x.get_si();
}

ExactInt binom(const ExactInt& n, const ExactInt& k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    ExactInt kk = k;
    if (n >= 0 && 2 * k > n) kk = n - k;
    if (!kk.fits_ulong_p()) throw std::overflow_error("binomial lower index too large");
    ExactInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), kk.get_ui());
    return r;
}

ExactInt binom(long n, long k) { return binom(ExactInt(n), ExactInt(k)); }

ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactInt stirling2(unsigned r, unsigned v) {
    if (v > r) return 0;
    if (r == 0) return 1;  // S(0,0)
    if (v == 0) return 0;
    // row-by-row: S(i,j) = S(i-1,j-1) + j S(i-1,j)
    std::vector<ExactInt> row(v + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= r; ++i) {
        unsigned top = i < v ? i : v;
        for (unsigned j = top; j >= 1; --j) row[j] = row[j - 1] + j * row[j];
        row[0] = 0;
    }
    return row[v];
}

std::optional<ExactInt> is_square(const ExactInt& x) {
    if (x < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_mpz_t())) return std::nullopt;
    ExactInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::no: return "no";
        case Tri::yes: return "yes";
        default: return "unknown";
    }
}

unsigned long valuation(const ExactInt& x, const ExactInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    if (p < 2) throw std::domain_error("valuation base must be >= 2");
    ExactInt y = abs(x);
    unsigned long v = 0;
    while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

unsigned long binom_valuation(const ExactInt& n, const ExactInt& k, const ExactInt& p) {
    if (k < 0 || k > n || n < 0) throw std::domain_error("binom_valuation needs 0 <= k <= n");
    if (p > n) return 0;
    // Kummer: carries when adding k and n-k in base p
    unsigned long carries = 0;
    if (n.fits_ulong_p() && p.fits_ulong_p()) {
        unsigned long a = k.get_ui(), b = ExactInt(n - k).get_ui(), q = p.get_ui(), c = 0;
        while (a || b) {
            c = (a % q + b % q + c) >= q ? 1 : 0;
            carries += c;
            a /= q;
            b /= q;
        }
        return carries;
    }
    ExactInt a = k, b = n - k, ra, rb;
    int c = 0;
    while (a > 0 || b > 0) {
        mpz_fdiv_qr(a.get_mpz_t(), ra.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        mpz_fdiv_qr(b.get_mpz_t(), rb.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
        c = (ra + rb + c) >= p ? 1 : 0;
        carries += c;
    }
    return carries;
}

BinomDivisibility divides_binom(const Factorization& d, const ExactInt& dval,
                                const ExactInt& n, const ExactInt& k) {
    BinomDivisibility out;
    if (k < 0 || (n >= 0 && k > n)) {
        // C(n,k) = 0 is divisible by everything
        out.divides = Tri::yes;
        return out;
    }
    for (const auto& pe : d.factors) {
        unsigned long have = binom_valuation(n, k, pe.p);
        if (have < pe.e) {
            out.divides = Tri::no;
            out.p = pe.p;
            out.need = pe.e;
            out.have = have;
            return out;
        }
    }
    if (d.complete()) {
        out.divides = Tri::yes;
        return out;
    }
    // Cofactor left over: fall back to the exact quotient while that is cheap.
    if (n <= 200000) {
        ExactInt c = binom(n, k);
        out.divides = mpz_divisible_p(c.get_mpz_t(), dval.get_mpz_t()) ? Tri::yes : Tri::no;
        return out;
    }
    out.divides = Tri::unknown;
    return out;
}

BinomDivisibility divides_binom(const ExactInt& d, const ExactInt& n, const ExactInt& k,
                                const FactorBudget& b) {
    return divides_binom(factorize(d, b), abs(d), n, k);
}

}  // namespace jsp
