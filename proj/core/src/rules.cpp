#include "jsperfect/rules.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "jsperfect/designs.hpp"
#include "jsperfect/johnson.hpp"
#include "jsperfect/moments.hpp"
#include "jsperfect/twoperfect.hpp"

namespace jsp {

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::excluded: return "excluded";
        case Conclusion::unknown: return "unknown";
        case Conclusion::survives: return "survives";
        case Conclusion::trivial: return "trivial";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::unknown: return "unknown";
        case Status::not_applicable: return "not-applicable";
        case Status::trivial_family: return "trivial-family";
    }
    return "?";
}

std::vector<std::string> Report::failed_rules() const {
    std::vector<std::string> out;
    for (const auto& v : verdicts)
        if (v.status == Status::fail) out.push_back(v.rule);
    return out;
}

namespace {

long mod(const ExactInt& x, long m) {
    ExactInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return static_cast<long>(r.get_ui());
}

bool divides(const ExactInt& d, const ExactInt& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

std::optional<std::string> classify_trivial(const JohnsonParams& p) {
    if (p.w < 0 || p.w > p.n || p.e < 0) return std::nullopt;
    if (p.e == 0) return std::string("whole-space");
    if (p.e >= std::min(p.w, ExactInt(p.n - p.w))) return std::string("single-word");
    if (p.n == 2 * p.w && mpz_odd_p(p.w.get_mpz_t()) && 2 * p.e + 1 == p.w)
        return std::string("disjoint-pair");
    return std::nullopt;
}

std::optional<std::string> classify_trivial(const DoublyParams& p) {
    if (p.w1 < 0 || p.w1 > p.n1 || p.w2 < 0 || p.w2 > p.n2 || p.e < 0) return std::nullopt;
    if (p.e == 0) return std::string("whole-space");
    ExactInt reach = std::min(p.w1, ExactInt(p.n1 - p.w1)) + std::min(p.w2, ExactInt(p.n2 - p.w2));
    if (p.e >= reach) return std::string("single-word");
    ExactInt s = p.w1 + p.w2;
    if (p.n1 == 2 * p.w1 && p.n2 == 2 * p.w2 && mpz_odd_p(s.get_mpz_t()) && 2 * p.e + 1 == s)
        return std::string("disjoint-pair");
    return std::nullopt;
}

ExactRational t38_lambda(const ExactInt& w, const ExactInt& d) {
    if (d < 2) throw std::domain_error("t38_lambda needs d >= 2");
    ExactInt num = 1;
    for (ExactInt i = 0; i <= d - 2; ++i) num *= w * d - (d + i * (d - 1));
    ExactInt dm1 = d - 1, pw;
    mpz_pow_ui(pw.get_mpz_t(), dm1.get_mpz_t(), dm1.get_ui());
    ExactInt den = factorial(dm1.get_ui()) * pw * d * (w - d + 1);
    return make_rational(num, den);
}

namespace {

constexpr long kMomentCap = 2000;     // moments checked per point
constexpr long kDivisibilityCap = 20000;

struct Ctx {
    ExactInt n, w, e, a;
    const RuleOptions& opt;

    std::optional<ExactInt> sphere_;
    std::optional<Factorization> fact_;
    std::optional<StrengthResult> strength_;

    const ExactInt& sphere() {
        if (!sphere_) sphere_ = sphere_size(n, w, e);
        return *sphere_;
    }
    const Factorization& sphere_factors() {
        if (!fact_) fact_ = factorize(sphere(), opt.budget);
        return *fact_;
    }
    const StrengthResult& str() {
        if (!strength_) strength_ = strength(n, w, e);
        return *strength_;
    }
    bool e1() const { return e == 1; }
    bool e2_half() const { return e == 2 && n == 2 * w; }
};

Verdict na(const std::string& id, const std::string& why) {
    Verdict v(id, Status::not_applicable);
    v.because(why);
    return v;
}

Verdict pass_fail(const std::string& id, bool ok) {
    return Verdict(id, ok ? Status::pass : Status::fail);
}

// phi | C(N,K) with witness prime on failure
Verdict binom_divisibility(Ctx& c, const std::string& id, const ExactInt& N, const ExactInt& K) {
    auto r = divides_binom(c.sphere_factors(), c.sphere(), N, K);
    Verdict v(id, r.divides == Tri::yes ? Status::pass
                 : r.divides == Tri::no ? Status::fail
                                        : Status::unknown);
    v.with("sphere", c.sphere()).with("N", N).with("K", K);
    if (r.divides == Tri::no) v.with("p", r.p).with("v_p(sphere)", long(r.need)).with("v_p(binom)", long(r.have));
    if (r.divides == Tri::unknown) v.because("sphere size not factored within budget");
    return v;
}

// block-count divisibility plus the Tits bound for S(t,k,v)
Status steiner_status(const ExactInt& t, const ExactInt& k, const ExactInt& v, Verdict& out,
                      const std::string& tag) {
    std::string sys = "S(" + to_string(t) + "," + to_string(k) + "," + to_string(v) + ")";
    if (t < 0 || k < t || v < k) {
        out.with(tag, sys + " impossible: block larger than point set");
        return Status::fail;
    }
    auto sc = steiner_conditions(t, k, v);
    for (const auto& cv : sc.verdicts)
        if (cv.status == Status::fail) {
            std::string detail = sys + " " + cv.rule;
            for (const auto& f : cv.witness) detail += " " + f.name + "=" + f.value;
            out.with(tag, detail);
            return Status::fail;
        }
    out.with(tag, sys + " admissible");
    return Status::pass;
}

Verdict steiner_rule(const std::string& id,
                     const std::vector<std::array<ExactInt, 3>>& systems) {
    Verdict v(id, Status::pass);
    int idx = 0;
    for (const auto& s : systems) {
        if (steiner_status(s[0], s[1], s[2], v, "system" + std::to_string(++idx)) == Status::fail)
            v.status = Status::fail;
    }
    return v;
}

std::optional<ExactInt> d_of(Ctx& c) {
    const auto& s = c.str();
    if (!s.phi) return std::nullopt;
    return c.w - *s.phi;
}

using RuleFn = std::function<Verdict(Ctx&)>;

struct Rule {
    std::string id;
    RuleFn fn;
};

Verdict r_c15(Ctx& c) {
    ExactInt b = 2 * c.e + 1;
    auto v = pass_fail("C15.weights", c.w >= b && c.n - c.w >= b);
    return v.with("w", c.w).with("n-w", ExactInt(c.n - c.w)).with("min", b);
}

Verdict r_t8(Ctx& c) {
    bool bad = c.a == -2 || c.a == -1 || c.a == 1 || c.a == 2;
    return pass_fail("T8.hammond", !bad).with("n-2w", c.a);
}

Verdict r_c18(Ctx& c) {
    long m = to_long(c.e + 1);
    long rw = mod(c.w, m), rc = mod(c.n - c.w, m), re = mod(c.e, m);
    return pass_fail("C18.mod", rw == re && rc == re)
        .with("modulus", m)
        .with("w mod", rw)
        .with("n-w mod", rc)
        .with("e mod", re);
}

Verdict r_t24(Ctx& c) {
    ExactInt q = (c.e + 1) * (c.e + 2);
    bool e_odd = mpz_odd_p(c.e.get_mpz_t());
    bool n_even = mpz_even_p(c.n.get_mpz_t());
    Verdict v("T24.steiner", Status::pass);
    if (e_odd) {
        v.status = n_even && divides(q, c.a) ? Status::pass : Status::fail;
        v.with("case", "e odd").with("n even", n_even ? "yes" : "no").with("modulus", q);
    } else if (n_even) {
        v.status = divides(q, c.a) ? Status::pass : Status::fail;
        v.with("case", "e even, n even").with("modulus", q);
    } else {
        bool e4 = mod(c.e, 4) == 0;
        ExactInt half = q / 2;
        v.status = e4 && divides(half, c.a) ? Status::pass : Status::fail;
        v.with("case", "e even, n odd").with("e mod 4", mod(c.e, 4)).with("modulus", half);
    }
    return v.with("n-2w", c.a);
}

Verdict r_l39(Ctx& c) {
    if (!c.e1()) return na("L39.mod12", "e != 1");
    long rw = mod(c.w, 12), rc = mod(c.n - c.w, 12);
    bool ok = rw == rc && (rw == 1 || rw == 7);
    return pass_fail("L39.mod12", ok).with("w mod 12", rw).with("n-w mod 12", rc);
}

Verdict r_t29(Ctx& c) {
    if (!c.e1()) return na("T29.mod4", "e != 1");
    return pass_fail("T29.mod4", mod(c.sphere(), 4) != 0)
        .with("sphere", c.sphere())
        .with("sphere mod 4", mod(c.sphere(), 4));
}

Verdict strength_verdict(Ctx& c, const std::string& id) {
    const auto& s = c.str();
    Verdict v(id, s.phi ? Status::pass : Status::fail);
    for (const auto& f : s.values) v.witness.push_back(f);
    // sigma_e(n, w, t, e) was evaluated at every t in the range
    if (s.path == "scan") v.with("t from", 1L).with("t to", ExactInt(c.w + 1));
    for (const auto& b : s.branches) {
        std::string tag = b.inner_sign > 0 ? "s2(+)" : "s2(-)";
        v.with(tag, b.s_squared);
    }
    if (s.phi) v.with("phi", *s.phi);
    else v.because("no integer strength, so the code would be w-regular and the sphere size would divide 1");
    return v;
}

Verdict r_eq1(Ctx& c) {
    if (!c.e1()) return na("EQ1.strength", "e != 1");
    return strength_verdict(c, "EQ1.strength");
}

Verdict r_e2(Ctx& c) {
    if (!c.e2_half()) return na("E2.strength", "needs e = 2 and n = 2w");
    return strength_verdict(c, "E2.strength");
}

Verdict r_sig(Ctx& c) {
    if (c.e1() || c.e2_half()) return na("SIG.strength", "closed form used instead");
    return strength_verdict(c, "SIG.strength");
}

Verdict r_t50_mod12(Ctx& c) {
    if (!c.e2_half()) return na("T50.mod12", "needs e = 2 and n = 2w");
    return pass_fail("T50.mod12", mod(c.w, 12) == 2).with("w mod 12", mod(c.w, 12));
}

Verdict r_t50_pell(Ctx& c) {
    if (!c.e2_half()) return na("T50.pell", "needs e = 2 and n = 2w");
    ExactInt x = 2 * c.w - 3;
    ExactInt y2 = 2 * c.w * c.w - 6 * c.w + 5;
    Verdict v("T50.pell", Status::pass);
    v.with("x", x);
    auto y = is_square(y2);
    if (!y) {
        v.status = Status::fail;
        return v.with("y^2", y2).because("x^2 - 2y^2 = -1 has no solution with x = 2w-3");
    }
    v.with("y", *y).with("x mod 4", mod(x, 4)).with("x mod 3", mod(x, 3));
    ExactInt c2 = 1 + 4 * (x + *y), d2 = 1 + 4 * (x - *y);
    bool csq = is_square(c2).has_value(), dsq = is_square(d2).has_value();
    v.with("1+4(x+y)", c2).with("1+4(x-y)", d2);
    v.with("c square", csq ? "yes" : "no").with("d square", dsq ? "yes" : "no");
    std::vector<std::string> failed;
    if (mod(x, 4) != 1) failed.push_back("family");
    if (mod(x, 3) != 1) failed.push_back("mod3");
    if (!csq && !dsq) failed.push_back("squares");
    if (!failed.empty()) {
        v.status = Status::fail;
        std::string s;
        for (const auto& f : failed) s += (s.empty() ? "" : ",") + f;
        v.because("failed: " + s);
    }
    return v;
}

Verdict r_c25(Ctx& c) {
    if (c.a < 2) return na("C25.prime", "n - 2w < 2");
    auto f = factorize(c.a, c.opt.budget);
    Verdict v("C25.prime", Status::pass);
    v.with("n-2w", c.a);
    if (!f.complete()) {
        v.status = Status::unknown;
        return v.because("n - 2w not factored within budget");
    }
    if (f.factors.size() == 1) {
        v.status = Status::fail;
        return v.with("p", f.factors[0].p).with("i", long(f.factors[0].e));
    }
    if (f.factors.size() == 2 && f.factors[0].e == 1 && f.factors[1].e == 1) {
        const ExactInt& q = f.factors[0].p;
        const ExactInt& p = f.factors[1].p;
        v.with("p", p).with("q", q);
        if (p != 2 * q - 1) v.status = Status::fail;
    }
    return v;
}

Verdict r_t34(Ctx& c) {
    auto f = factorize(c.e + 1);
    Verdict v("T34.p2", Status::not_applicable);
    std::string checked;
    for (const auto& pe : f.factors) {
        if (pe.e < 2) continue;
        ExactInt p2 = pe.p * pe.p;
        if (v.status == Status::not_applicable) v.status = Status::pass;
        checked += (checked.empty() ? "" : ",") + to_string(pe.p);
        if (!divides(p2, c.sphere())) {
            v.status = Status::fail;
            v.with("p", pe.p).with("sphere", c.sphere());
            break;
        }
    }
    if (!checked.empty()) v.with("primes", checked);
    if (v.status == Status::not_applicable) v.because("e+1 has no square prime factor");
    return v;
}

std::optional<Verdict> t38_gate(Ctx& c, const std::string& id, ExactInt& d) {
    if (!c.e1()) return na(id, "e != 1");
    auto dd = d_of(c);
    if (!dd) return na(id, "no integer strength");
    if (*dd < 2) return na(id, "w - strength < 2");
    d = *dd;
    return std::nullopt;
}

Verdict r_t38_mod12(Ctx& c) {
    ExactInt d;
    if (auto g = t38_gate(c, "T38.mod12", d)) return *g;
    long r = mod(c.w - d, 12);
    return pass_fail("T38.mod12", r == 0 || r == 1 || r == 4 || r == 9)
        .with("d", d)
        .with("strength mod 12", r);
}

Verdict r_t38_lambda(Ctx& c) {
    ExactInt d;
    if (auto g = t38_gate(c, "T38.lambda", d)) return *g;
    auto lam = t38_lambda(c.w, d);
    return pass_fail("T38.lambda", is_integer(lam)).with("d", d).with("lambda", lam);
}

Verdict r_t38_product(Ctx& c) {
    ExactInt d;
    if (auto g = t38_gate(c, "T38.product", d)) return *g;
    ExactRational val = t38_lambda(c.w, d);
    Verdict v("T38.product", Status::pass);
    v.with("d", d);
    ExactInt top = c.w - d;
    for (ExactInt s = 0; s <= top; ++s) {
        if (s > 0) {
            val *= make_rational(c.w * d + s * d - (s + 1), (d - 1) * (d + s));
        }
        if (!is_integer(val)) {
            v.status = Status::fail;
            return v.with("s", s).with("value", val);
        }
        if (s >= kDivisibilityCap) {
            v.because("checked s <= " + std::to_string(kDivisibilityCap));
            break;
        }
    }
    return v;
}

Verdict r_t40(Ctx& c) {
    ExactInt d;
    if (auto g = t38_gate(c, "T40.cases", d)) return *g;
    static const std::vector<std::pair<long, std::vector<long>>> probes = {
        {3, {}}, {4, {}}, {6, {7}}, {7, {8, 11}}, {9, {10, 11, 13}}, {10, {11, 13, 14}}};
    auto it = std::find_if(probes.begin(), probes.end(),
                           [&](const auto& pr) { return d == pr.first; });
    if (it == probes.end()) return na("T40.cases", "d outside {3,4,6,7,9,10}");
    Verdict v("T40.cases", Status::pass);
    v.with("d", d);
    auto lam = t38_lambda(c.w, d);
    if (!is_integer(lam)) {
        v.status = Status::fail;
        return v.with("lambda", lam);
    }
    for (long off : it->second) {
        ExactInt i = c.w - off;
        if (i < 0) continue;
        auto bv = binom_divisibility(c, "probe", c.n - i, c.w - i);
        if (bv.status == Status::fail) {
            v.status = Status::fail;
            return v.with("i", i).with("w-i", off).with("p", *bv.field("p"));
        }
        if (bv.status == Status::unknown) v.status = Status::unknown;
    }
    return v;
}

struct L41Factors {
    ExactInt f1, f2;
};

std::optional<L41Factors> l41_factors(Ctx& c, Verdict& v) {
    if (mpz_odd_p(c.a.get_mpz_t())) {
        v = na(v.rule, "n - 2w odd, alpha not an integer");
        return std::nullopt;
    }
    const auto& s = c.str();
    if (!s.beta || !is_integer(*s.beta)) {
        v = na(v.rule, "discriminant not an odd square");
        return std::nullopt;
    }
    ExactInt alpha = c.a / 2, beta = s.beta->get_num();
    L41Factors f{beta * beta - alpha * alpha + 1, (beta + 1) * (beta + 1) - alpha * alpha + 1};
    v.with("alpha", alpha).with("beta", beta).with("f1", f.f1).with("f2", f.f2);
    return f;
}

Verdict r_l41_coprime(Ctx& c) {
    if (!c.e1()) return na("L41.coprime", "e != 1");
    Verdict v("L41.coprime", Status::pass);
    auto f = l41_factors(c, v);
    if (!f) return v;
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), f->f1.get_mpz_t(), f->f2.get_mpz_t());
    v.with("gcd", g);
    if (g != 1) v.status = Status::fail;
    return v;
}

Verdict r_l41_sqfree(Ctx& c) {
    if (!c.e1()) return na("L41.sqfree", "e != 1");
    Verdict v("L41.sqfree", Status::pass);
    auto f = l41_factors(c, v);
    if (!f) return v;
    Tri t1 = f->f1 > 0 ? is_squarefree(f->f1, c.opt.budget) : Tri::no;
    Tri t2 = f->f2 > 0 ? is_squarefree(f->f2, c.opt.budget) : Tri::no;
    v.with("f1 squarefree", to_string(t1)).with("f2 squarefree", to_string(t2));
    if (t1 == Tri::no || t2 == Tri::no) v.status = Status::fail;
    else if (t1 == Tri::unknown || t2 == Tri::unknown) v.status = Status::unknown;
    return v;
}

Verdict r_gordon(Ctx& c) {
    if (!c.e1()) return na("GORDON.squarefree", "e != 1");
    Tri t = is_squarefree(c.sphere(), c.opt.budget);
    Verdict v("GORDON.squarefree", t == Tri::yes ? Status::pass
                                   : t == Tri::no ? Status::fail
                                                  : Status::unknown);
    v.with("sphere", c.sphere());
    if (t == Tri::no) {
        const auto& f = c.sphere_factors();
        for (const auto& pe : f.factors)
            if (pe.e >= 2) {
                v.with("p", pe.p).with("exponent", long(pe.e));
                break;
            }
    }
    if (t == Tri::unknown) v.because("factorization budget exhausted");
    return v;
}

Verdict r_sp(Ctx& c) {
    auto v = binom_divisibility(c, "SP.divides", c.n, c.w);
    return v;
}

Verdict r_t16(Ctx& c) {
    ExactInt t = c.e + 1, k = 2 * c.e + 1;
    return steiner_rule("T16.steiner", {{t, k, c.w}, {t, k, ExactInt(c.n - c.w)}});
}

Verdict r_t17(Ctx& c) {
    ExactInt k = c.e + 2;
    return steiner_rule("T17.steiner",
                        {{ExactInt(2), k, ExactInt(c.w - c.e + 1)}, {ExactInt(2), k, ExactInt(c.n - c.w + c.e - 1)}});
}

Verdict r_c23(Ctx& c) {
    if (c.w > c.n - c.w) return na("C23.steiner", "w > n - w");
    return steiner_rule("C23.steiner", {{ExactInt(2), ExactInt(c.e + 2), ExactInt(c.w + 2)}});
}

Verdict r_t22(Ctx& c) {
    if (!(c.n * c.e < (c.w - 1) * (2 * c.e + 1))) return na("T22.steiner", "n >= (w-1)(2e+1)/e");
    return steiner_rule("T22.steiner", {{ExactInt(2), ExactInt(c.e + 2), ExactInt(c.n - c.w + 2)}});
}

Verdict r_p49(Ctx& c) {
    if (!c.e2_half()) return na("P49.moments", "needs e = 2 and n = 2w");
    auto dd = d_of(c);
    if (!dd) return na("P49.moments", "no integer strength");
    // 2 <= j < w - phi
    ExactInt limit = *dd;
    long jmax = limit - 1 > kMomentCap ? kMomentCap : to_long(limit - 1);
    Verdict v("P49.moments", Status::pass);
    v.with("w-phi", limit);
    if (jmax < 2) {
        v.status = Status::not_applicable;
        return v.because("no moment above the strength");
    }
    for (unsigned leader : {1u, 2u}) {
        auto S = two_perfect_moments(c.w, static_cast<unsigned>(jmax), leader);
        for (long j = 2; j <= jmax; ++j)
            if (!is_integer(S[j])) {
                v.status = Status::fail;
                return v.with("leader", long(leader)).with("j", j).with("k", ExactInt(c.w - j)).with("moment", S[j]);
            }
    }
    if (limit - 1 > kMomentCap) v.because("checked j <= " + std::to_string(kMomentCap));
    return v;
}

Verdict r_t47(Ctx& c) {
    if (!c.e1()) return na("T47.moments", "e != 1");
    const auto& s = c.str();
    if (!s.phi) return na("T47.moments", "no integer strength");
    Verdict v("T47.moments", Status::pass);
    ExactInt phi1 = c.sphere();
    ExactRational delta = 1;
    long steps = 0;
    for (ExactInt k = c.w; k > *s.phi; --k, ++steps) {
        if (k < c.w) {
            // step the two-term relation from k+1 down to k
            ExactInt kk = k + 1;
            ExactInt co = 1 + kk * kk - kk * (1 + c.n) + c.n * c.w - c.w * c.w;
            delta = -ExactRational(co) * delta / ExactRational((1 - kk + c.w) * (1 - kk + c.w));
            delta.canonicalize();
        }
        if (steps >= kMomentCap) {
            v.because("checked " + std::to_string(kMomentCap) + " values of k");
            break;
        }
        ExactInt full = binom(c.w, k) * binom(c.n - k, c.w - k);
        ExactRational B = (ExactRational(full) - delta) / ExactRational(phi1);
        ExactRational A = (ExactRational(c.w * (c.n - c.w)) * delta + ExactRational(full)) / ExactRational(phi1);
        B.canonicalize();
        A.canonicalize();
        const char* which = !is_integer(delta) ? "delta" : !is_integer(A) ? "A" : !is_integer(B) ? "B" : nullptr;
        if (which) {
            v.status = Status::fail;
            const ExactRational& bad = !is_integer(delta) ? delta : !is_integer(A) ? A : B;
            return v.with("k", k).with("moment", which).with("value", bad);
        }
    }
    return v;
}

Verdict r_t26(Ctx& c) {
    const auto& s = c.str();
    ExactInt t = c.e;
    if (s.phi && *s.phi > t) t = *s.phi;
    if (t > c.w) t = c.w;
    Verdict v("T26.divides", Status::pass);
    v.with("t", t);
    for (ExactInt i = 0; i <= t; ++i) {
        if (i > kDivisibilityCap) {
            v.because("checked i <= " + std::to_string(kDivisibilityCap));
            break;
        }
        auto bv = binom_divisibility(c, "T26.divides", c.n - i, c.w - i);
        if (bv.status == Status::fail) {
            bv.witness.insert(bv.witness.begin(), Field{"i", to_string(i)});
            bv.witness.insert(bv.witness.begin(), Field{"t", to_string(t)});
            return bv;
        }
        if (bv.status == Status::unknown) {
            v.status = Status::unknown;
            v.because(bv.note);
        }
    }
    return v;
}

const std::vector<Rule>& catalog() {
    static const std::vector<Rule> rules = {
        {"C15.weights", r_c15},       {"T8.hammond", r_t8},
        {"C18.mod", r_c18},           {"T24.steiner", r_t24},
        {"L39.mod12", r_l39},         {"T29.mod4", r_t29},
        {"EQ1.strength", r_eq1},      {"E2.strength", r_e2},
        {"SIG.strength", r_sig},      {"T50.mod12", r_t50_mod12},
        {"T50.pell", r_t50_pell},     {"C25.prime", r_c25},
        {"T34.p2", r_t34},            {"T38.mod12", r_t38_mod12},
        {"T38.lambda", r_t38_lambda}, {"T40.cases", r_t40},
        {"L41.coprime", r_l41_coprime}, {"L41.sqfree", r_l41_sqfree},
        {"GORDON.squarefree", r_gordon}, {"SP.divides", r_sp},
        {"T16.steiner", r_t16},       {"T17.steiner", r_t17},
        {"C23.steiner", r_c23},       {"T22.steiner", r_t22},
        {"P49.moments", r_p49},       {"T47.moments", r_t47},
        {"T38.product", r_t38_product}, {"T26.divides", r_t26},
    };
    return rules;
}

void conclude(Report& r) {
    bool unknown = false;
    for (const auto& v : r.verdicts) {
        if (v.status == Status::fail) {
            r.conclusion = Conclusion::excluded;
            return;
        }
        if (v.status == Status::unknown) unknown = true;
    }
    r.conclusion = unknown ? Conclusion::unknown : Conclusion::survives;
}

}  // namespace

const std::vector<std::string>& rule_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& r : catalog()) v.push_back(r.id);
        return v;
    }();
    return ids;
}

bool is_rule_id(const std::string& id) {
    const auto& ids = rule_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report run_rules(const JohnsonParams& p, const RuleOptions& opt) {
    if (p.w < 0 || p.n < p.w || p.e < 0)
        throw std::invalid_argument("run_rules needs 0 <= w <= n and e >= 0");
    Report r;
    JohnsonParams q = p;
    if (2 * q.w > q.n) {
        q.w = q.n - q.w;
        r.complemented = true;
    }
    r.params = {{"n", to_string(q.n)}, {"w", to_string(q.w)}, {"e", to_string(q.e)},
                {"a", to_string(ExactInt(q.n - 2 * q.w))}};
    if (r.complemented) r.params.push_back({"given_w", to_string(p.w)});
    if (auto tag = classify_trivial(q)) {
        r.trivial_tag = tag;
        r.conclusion = Conclusion::trivial;
        Verdict v("TRIV", Status::trivial_family);
        v.with("family", *tag);
        r.verdicts.push_back(std::move(v));
        return r;
    }
    Ctx c{q.n, q.w, q.e, q.n - 2 * q.w, opt, {}, {}, {}};
    for (const auto& rule : catalog()) {
        if (!opt.only.empty() && !opt.only.count(rule.id)) continue;
        r.verdicts.push_back(rule.fn(c));
        if (opt.short_circuit && r.verdicts.back().status == Status::fail) break;
    }
    conclude(r);
    return r;
}

Report doubly_checks(const DoublyParams& p) {
    if (p.w1 < 0 || p.w1 > p.n1 || p.w2 < 0 || p.w2 > p.n2 || p.e < 0)
        throw std::invalid_argument("doubly_checks needs 0 <= w_i <= n_i and e >= 0");
    Report r;
    r.params = {{"w1", to_string(p.w1)}, {"n1", to_string(p.n1)}, {"w2", to_string(p.w2)},
                {"n2", to_string(p.n2)}, {"e", to_string(p.e)},
                {"min_distance", to_string(ExactInt(2 * p.e + 1))}};
    if (auto tag = classify_trivial(p)) {
        r.trivial_tag = tag;
        r.conclusion = Conclusion::trivial;
        Verdict v("TRIV", Status::trivial_family);
        v.with("family", *tag);
        r.verdicts.push_back(std::move(v));
        return r;
    }
    ExactInt sphere = sphere_size_doubly(p.n1, p.w1, p.n2, p.w2, p.e);
    ExactInt space = binom(p.n1, p.w1) * binom(p.n2, p.w2);
    {
        Verdict v = pass_fail("EQ9.divides", divides(sphere, space));
        v.with("sphere", sphere).with("space", space);
        if (v.status == Status::pass) v.with("size", ExactInt(space / sphere));
        r.verdicts.push_back(std::move(v));
    }
    ExactInt b = 2 * p.e + 1;
    // e * n1 <= (2e+1)(w1-1) + w2, and symmetrically
    {
        ExactInt rhs = b * (p.w1 - 1) + p.w2;
        Verdict v = pass_fail("T60.n1", p.e * p.n1 <= rhs);
        v.with("n1", p.n1).with("bound", make_rational(rhs, p.e));
        r.verdicts.push_back(std::move(v));
    }
    {
        ExactInt rhs = b * (p.w2 - 1) + p.w1;
        Verdict v = pass_fail("T60.n2", p.e * p.n2 <= rhs);
        v.with("n2", p.n2).with("bound", make_rational(rhs, p.e));
        r.verdicts.push_back(std::move(v));
    }
    auto ineq = [&](const char* id, const char* what, const ExactInt& lhs) {
        Verdict v = pass_fail(id, lhs >= b);
        v.with(what, lhs).with("min", b);
        r.verdicts.push_back(std::move(v));
    };
    ineq("C58.w", "w1+w2", p.w1 + p.w2);
    ineq("C58.cw", "n1+n2-w1-w2", p.n1 + p.n2 - p.w1 - p.w2);
    ineq("C58.first", "n1-w1+w2", p.n1 - p.w1 + p.w2);
    ineq("C58.second", "w1+n2-w2", p.w1 + p.n2 - p.w2);
    conclude(r);
    return r;
}

CatalanPoint catalan_family(const ExactInt& k) {
    if (k < 1) throw std::invalid_argument("catalan_family needs k >= 1");
    CatalanPoint c;
    c.params = DoublyParams{4 * k + 1, 2 * k, 4 * k + 2, 2 * k, 1};
    c.sphere = sphere_size_doubly(c.params.n1, c.params.w1, c.params.n2, c.params.w2, 1);
    c.space = binom(c.params.n1, c.params.w1) * binom(c.params.n2, c.params.w2);
    c.divides = divides(c.sphere, c.space);
    if (c.divides) c.quotient = c.space / c.sphere;
    return c;
}

}  // namespace jsp
