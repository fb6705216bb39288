#include "jsperfect/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace jsp {

ExactInt sigma_e(const ExactInt& n, const ExactInt& w, const ExactInt& t, const ExactInt& e) {
    ExactInt total = 0;
    for (ExactInt i = 0; i <= e; ++i) {
        ExactInt inner = 0;
        for (ExactInt j = 0; j <= e - i; ++j)
            inner += binom(w - i, j) * binom(n - w - t + i, i + j);
        ExactInt term = binom(t, i) * inner;
        if (mpz_odd_p(i.get_mpz_t())) total -= term;
        else total += term;
    }
    return total;
}

namespace {

StrengthResult strength_scan(const ExactInt& n, const ExactInt& w, const ExactInt& e) {
    StrengthResult r;
    r.path = "scan";
    for (ExactInt m = 1; m <= w + 1; ++m)
        if (sigma_e(n, w, m, e) == 0) {
            r.phi = m - 1;
            break;
        }
    return r;
}

StrengthResult strength_e1(const ExactInt& n, const ExactInt& w) {
    StrengthResult r;
    r.path = "eq1";
    ExactInt D = (n - 2 * w + 1) * (n - 2 * w + 1) + 4 * (w - 1);
    r.values.push_back({"D", to_string(D)});
    auto root = is_square(D);
    if (!root) return r;
    r.values.push_back({"sqrtD", to_string(*root)});
    r.alpha = make_rational(n - 2 * w, 2);
    r.beta = make_rational(*root - 1, 2);
    ExactInt twice = n - 1 - *root;
    if (mpz_odd_p(twice.get_mpz_t()) || twice < 0) return r;
    ExactInt phi = twice / 2;
    // the smaller root of the quadratic, so it is the first zero
    if (sigma_e(n, w, phi + 1, 1) == 0) r.phi = phi;
    return r;
}

StrengthResult strength_e2_half(const ExactInt& w) {
    StrengthResult r;
    r.path = "e2-radical";
    const ExactInt n = 2 * w;
    ExactInt r2 = 2 * w * w - 6 * w + 5;
    r.values.push_back({"r2", to_string(r2)});
    auto rr = is_square(r2);
    if (!rr) return r;
    r.values.push_back({"r", to_string(*rr)});
    for (int sign : {+1, -1}) {
        StrengthBranch b;
        b.inner_sign = sign;
        b.s_squared = 8 * w - 11 + sign * 4 * *rr;
        if (b.s_squared >= 0) b.s = is_square(b.s_squared);
        if (b.s) {
            for (int outer : {-1, +1}) {
                ExactInt twice = -1 + 2 * w + outer * *b.s;
                if (mpz_odd_p(twice.get_mpz_t()) || twice < 0) continue;
                ExactInt phi = twice / 2;
                if (sigma_e(n, w, phi + 1, 2) == 0) b.phis.push_back(phi);
            }
            std::sort(b.phis.begin(), b.phis.end());
        }
        for (const auto& p : b.phis)
            if (!r.phi || p < *r.phi) r.phi = p;
        r.branches.push_back(std::move(b));
    }
    // a smaller root outside the radical formula would be a bug in it
    if (r.phi)
        for (ExactInt m = 1; m <= *r.phi; ++m)
            if (sigma_e(n, w, m, 2) == 0) throw std::logic_error("e=2 strength formula missed a root");
    return r;
}

}  // namespace

StrengthResult strength(const ExactInt& n, const ExactInt& w, const ExactInt& e) {
    if (e == 1) return strength_e1(n, w);
    if (e == 2 && n == 2 * w) return strength_e2_half(w);
    return strength_scan(n, w, e);
}

namespace {
ExactInt middle_coefficient(long w, long a, long k, long i, RecurrenceForm form) {
    ExactInt first = form == RecurrenceForm::corrected ? ExactInt(i) * (k - i) : ExactInt(i) * (k - 1);
    return 1 + first + ExactInt(w - i) * (w + a - k + i);
}
}  // namespace

ExactRational recurrence_residual(long n, long w, long k, long i, const ExactRational& a_up,
                                  const ExactRational& a_i, const ExactRational& a_down,
                                  RecurrenceForm form) {
    long a = n - 2 * w;
    ExactRational lhs = ExactRational(ExactInt(i + 1) * (w + a - k + i + 1)) * a_up +
                        ExactRational(middle_coefficient(w, a, k, i, form)) * a_i +
                        ExactRational(ExactInt(k - i + 1) * (w - i + 1)) * a_down;
    ExactRational res = lhs - ExactRational(binom(k, i) * binom(n - k, w - i));
    res.canonicalize();
    return res;
}

RecurrenceSolution config_recurrence_solve(long n, long w, long k, long top,
                                           const ExactRational& v_top,
                                           const ExactRational& v_below, long lowest,
                                           RecurrenceForm form) {
    if (top < 1 || lowest < 0 || lowest > top - 1)
        throw std::invalid_argument("config_recurrence_solve: need 0 <= lowest < top");
    RecurrenceSolution s;
    s.lowest = lowest;
    s.top = top;
    s.values.assign(static_cast<std::size_t>(top - lowest + 1), 0);
    auto at = [&](long i) -> ExactRational& { return s.values[static_cast<std::size_t>(i - lowest)]; };
    at(top) = v_top;
    at(top - 1) = v_below;
    const long a = n - 2 * w;
    s.consistent = recurrence_residual(n, w, k, top, 0, v_top, v_below, form) == 0;
    for (long i = top - 1; i - 1 >= lowest; --i) {
        ExactRational up = i + 1 <= top ? at(i + 1) : ExactRational(0);
        ExactRational rhs = binom(k, i) * binom(n - k, w - i);
        rhs -= ExactRational(ExactInt(i + 1) * (w + a - k + i + 1)) * up;
        rhs -= ExactRational(middle_coefficient(w, a, k, i, form)) * at(i);
        ExactInt div = ExactInt(k - i + 1) * (w - i + 1);
        if (div == 0) throw std::domain_error("config_recurrence_solve: zero lower coefficient");
        at(i - 1) = rhs / ExactRational(div);
        at(i - 1).canonicalize();
    }
    for (long i = top; i >= lowest; --i) {
        const auto& v = at(i);
        bool frac = !is_integer(v), neg = v < 0;
        if (frac) s.integral = false;
        if (neg) s.nonnegative = false;
        if ((frac || neg) && !s.first_bad) s.first_bad = i;
    }
    return s;
}

namespace {
// (-1)^{w-k} prod_{l=1}^{w-k} [(l-1)n + l^2 - l + 1 - w(2l-1)] / l^2
ExactRational delta_closed(const ExactInt& n, const ExactInt& w, const ExactInt& k) {
    ExactRational p = 1;
    for (ExactInt l = 1; l <= w - k; ++l)
        p *= make_rational((l - 1) * n + l * l - l + 1 - w * (2 * l - 1), l * l);
    ExactInt d = w - k;
    return mpz_odd_p(d.get_mpz_t()) ? ExactRational(-p) : p;
}
}  // namespace

OnePerfectMoments moments_1perfect_closed(const ExactInt& n, const ExactInt& w, const ExactInt& k,
                                          MomentForm form) {
    OnePerfectMoments m;
    m.delta = delta_closed(n, w, k);
    ExactInt phi1 = 1 + w * (n - w);
    ExactInt full = binom(form == MomentForm::corrected ? w : ExactInt(n - w), k) * binom(n - k, w - k);
    m.B = (ExactRational(full) - m.delta) / ExactRational(phi1);
    m.A = (ExactRational(w * (n - w)) * m.delta + ExactRational(full)) / ExactRational(phi1);
    m.B.canonicalize();
    m.A.canonicalize();
    return m;
}

ExactRational delta_moment_stepped(const ExactInt& n, const ExactInt& w, const ExactInt& k) {
    ExactRational m = 1;
    for (ExactInt kk = w; kk > k; --kk) {
        ExactInt c = 1 + kk * kk - kk * (1 + n) + n * w - w * w;
        ExactInt d = (1 - kk + w) * (1 - kk + w);
        m = -ExactRational(c) * m / ExactRational(d);
        m.canonicalize();
    }
    return m;
}

ExactRational delta_relation_residual(const ExactInt& n, const ExactInt& w, const ExactInt& k,
                                      const ExactRational& m_k, const ExactRational& m_km1) {
    ExactInt c = 1 + k * k - k * (1 + n) + n * w - w * w;
    ExactRational r = ExactRational(c) * m_k + ExactRational((1 - k + w) * (1 - k + w)) * m_km1;
    r.canonicalize();
    return r;
}

std::vector<OnePerfectMoments> moments_1perfect_recurrence(long n, long w) {
    if (w < 1) throw std::invalid_argument("moments_1perfect_recurrence: w >= 1");
    auto A = config_recurrence_solve(n, w, w, w, 1, 0);
    auto B = config_recurrence_solve(n, w, w, w, 0, 1);
    std::vector<OnePerfectMoments> out(static_cast<std::size_t>(w + 1));
    for (long k = 0; k <= w; ++k) {
        ExactRational sa = 0, sb = 0;
        for (long i = k; i <= w; ++i) {
            ExactRational c(binom(i, k));
            sa += c * A.at(i);
            sb += c * B.at(i);
        }
        sa.canonicalize();
        sb.canonicalize();
        out[k].A = sa;
        out[k].B = sb;
        out[k].delta = sa - sb;
        out[k].delta.canonicalize();
    }
    return out;
}

bool TableExpressions::all_integral() const {
    return is_integer(delta) && is_integer(A) && is_integer(B) && is_integer(C);
}

TableExpressions table_expressions(long w, long a) {
    if (w < 6) throw std::invalid_argument("table_expressions: needs w >= 6");
    const long n = 2 * w + a;
    TableExpressions t;
    t.delta = delta_moment_stepped(n, w, w - 5);
    t.A = config_recurrence_solve(n, w, w, w, 1, 0, w - 5).at(w - 5);
    t.B = config_recurrence_solve(n, w, w - 2, w - 2, 1,
                                  make_rational(ExactInt(w + a) * (w + a - 1), 6), w - 5)
              .at(w - 5);
    t.C = config_recurrence_solve(n, w, w + 2, w, 1, make_rational(ExactInt(w) * (w - 1), 6), w - 3)
              .at(w - 3);
    return t;
}

IdentityCheck moment_identity_J2w(unsigned w, unsigned k, const std::vector<ExactInt>& A,
                                  const std::vector<ExactInt>& delta) {
    if (A.size() != w + 1 || delta.size() != w + 1 || k < 1 || k > w)
        throw std::invalid_argument("moment_identity_J2w: need w+1 values and 1 <= k <= w");
    ExactInt sd = 0, sa = 0, sa1 = 0;
    for (unsigned i = 0; i <= w; ++i) {
        sd += binom(long(i), long(k)) * delta[i];
        sa += binom(long(i), long(k)) * A[i];
        sa1 += binom(long(i), long(k) - 1) * A[i];
    }
    ExactInt W = w, K = k;
    IdentityCheck c;
    c.lhs = W * W * sd;
    c.rhs = (2 * W * K - K * K + K) * sa - (W - K + 1) * (W - K + 1) * sa1;
    return c;
}

IdentityCheck rearranged_sum_J2w(unsigned w, unsigned k, const std::vector<ExactInt>& A) {
    if (A.size() != w + 1 || k < 1 || k > w)
        throw std::invalid_argument("rearranged_sum_J2w: need w+1 values and 1 <= k <= w");
    ExactInt raw = 0, sa = 0, sa1 = 0;
    const long W = w, K = k;
    for (long i = 0; i <= W; ++i) {
        ExactInt c = binom(W - i - 1, K - 1) * (W - i) * (W - i) - binom(W - i, K - 1) * i * i +
                     binom(i - 1, K - 1) * i * i - binom(i, K - 1) * (W - i) * (W - i);
        raw += c * A[i];
        sa += binom(i, K) * A[i];
        sa1 += binom(i, K - 1) * A[i];
    }
    IdentityCheck c;
    c.lhs = raw;
    c.rhs = 2 * ExactInt(2 * W * K - K * K + K) * sa - 2 * ExactInt((W - K + 1) * (W - K + 1)) * sa1;
    return c;
}

CodeIdentity moment_identity_J2w(const Code& code, unsigned e, unsigned k, const EnumGuard& g) {
    if (code.n != 2 * code.w) throw std::invalid_argument("identity needs n = 2w");
    auto pv = verify_perfect(code, e, g);
    if (pv.status != PerfectStatus::perfect)
        throw std::invalid_argument("identity needs a verified perfect code");
    auto comp = complement_code(code);
    auto sorted_words = [](std::vector<Word> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted_words(comp.words) != sorted_words(code.words))
        throw std::invalid_argument("identity needs a self-complementary code");

    const unsigned w = code.w;
    Code aligned = align_to_prefix(code);
    auto dist = configuration_distribution(aligned, w, TranslateRequest{1, e}, g);
    if (dist.B.empty()) throw std::invalid_argument("no translate with leader (w-1,1)");
    CodeIdentity out;
    out.A.resize(w + 1);
    out.B.resize(w + 1);
    out.delta.resize(w + 1);
    for (unsigned i = 0; i <= w; ++i) {
        out.A[i] = dist.A[w - i];
        out.B[i] = dist.B[w - i];
        out.delta[i] = out.A[i] - out.B[i];
    }
    out.identity = moment_identity_J2w(w, k, out.A, out.delta);
    out.rearranged = rearranged_sum_J2w(w, k, out.A);
    return out;
}

StirlingEquivalence stirling_moment_equivalence(const std::vector<ExactInt>& delta, unsigned t) {
    StirlingEquivalence r;
    r.power_moments_vanish = r.binomial_moments_vanish = r.conversion_exact = true;
    std::vector<ExactInt> binomial(t + 1, 0);
    for (unsigned v = 0; v <= t; ++v)
        for (std::size_t i = 0; i < delta.size(); ++i)
            binomial[v] += binom(long(i), long(v)) * delta[i];
    for (unsigned rr = 0; rr <= t; ++rr) {
        ExactInt power = 0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            ExactInt ip;
            mpz_ui_pow_ui(ip.get_mpz_t(), i, rr);
            power += ip * delta[i];
        }
        ExactInt rebuilt = 0;
        for (unsigned v = 0; v <= rr; ++v) rebuilt += factorial(v) * stirling2(rr, v) * binomial[v];
        if (rebuilt != power) r.conversion_exact = false;
        if (power != 0) r.power_moments_vanish = false;
        if (binomial[rr] != 0) r.binomial_moments_vanish = false;
    }
    return r;
}

}  // namespace jsp
