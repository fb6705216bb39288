#include "jsperfect/residues.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "jsperfect/moments.hpp"
#include "jsperfect/twoperfect.hpp"

namespace jsp {

namespace {

bool den_free_of(const ExactRational& q, unsigned long p) {
    return mpz_divisible_ui_p(q.get_den().get_mpz_t(), p) == 0;
}

bool p_integral(long w, long a, unsigned long p) {
    auto t = table_expressions(w, a);
    return den_free_of(t.delta, p) && den_free_of(t.A, p) && den_free_of(t.B, p) &&
           den_free_of(t.C, p);
}

long pos_mod(long x, long m) { return ((x % m) + m) % m; }

// 2-adic test over w, w+a mod 64 inside the cell; returns the a mod 8 values seen
std::set<long> two_adic(int i, int j) {
    std::set<long> seen;
    for (long w2 = i % 4; w2 < 64; w2 += 4)
        for (long s2 = j % 4; s2 < 64; s2 += 4) {
            long w = w2 + 640, s = s2 + 64 * 40;
            if (p_integral(w, s - w, 2)) seen.insert(pos_mod(s - w, 8));
        }
    return seen;
}

bool three_adic(int i, int j) {
    for (long w3 = i % 3; w3 < 27; w3 += 3)
        for (long s3 = j % 3; s3 < 27; s3 += 3) {
            long w = w3 + 270, s = s3 + 27 * 40;
            if (p_integral(w, s - w, 3)) return true;
        }
    return false;
}

std::vector<int> five_adic(int i, int j) {
    std::vector<int> out;
    for (int k = 0; k < 5; ++k)
        for (int y = 0; y < 5; ++y) {
            long w = 60L * k + i + 300, s = 60L * y + j + 1500;
            if (p_integral(w, s - w, 5)) out.push_back(k * 5 + y);
        }
    return out;
}

std::optional<Congruence5> as_line(const std::vector<int>& set) {
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (a == 0 && b == 0) continue;
            // normalized: first nonzero coefficient is 1
            if ((a != 0 && a != 1) || (a == 0 && b != 1)) continue;
            for (int c = 0; c < 5; ++c) {
                Congruence5 cand{a, b, c};
                if (solutions(cand) == set) return cand;
            }
        }
    return std::nullopt;
}

bool all_integral(long w, long a) { return table_expressions(w, a).all_integral(); }

}  // namespace

std::string render(const Congruence5& c) {
    auto term = [](int coef, const char* var, bool first) {
        std::string s;
        if (coef == 0) return s;
        if (!first) s += "+";
        if (coef != 1) s += std::to_string(coef);
        return s + var;
    };
    std::string s = term(c.a, "k", true);
    s += term(c.b, "y", s.empty());
    return s + "=" + std::to_string(c.c) + " (mod 5)";
}

std::vector<int> solutions(const Congruence5& c) {
    std::vector<int> out;
    for (int k = 0; k < 5; ++k)
        for (int y = 0; y < 5; ++y)
            if (pos_mod(c.a * k + c.b * y - c.c, 5) == 0) out.push_back(k * 5 + y);
    return out;
}

std::string Refinement::text() const {
    std::string s = "w=" + std::to_string(w_class) + " w+a=" + std::to_string(wa_class) + " (mod 60): ";
    if (linear) {
        s += render(*linear);
    } else {
        s += "(k,y) in {";
        for (size_t t = 0; t < allowed.size(); ++t)
            s += (t ? "," : "") + std::string("(") + std::to_string(allowed[t] / 5) + "," +
                 std::to_string(allowed[t] % 5) + ")";
        s += "} (mod 5)";
    }
    if (a_mod24) s += " and a=0 (mod 24)";
    return s;
}

ResidueTables1 residue_tables_1perfect(long modulus) {
    if (modulus <= 0 || modulus % 60 != 0)
        throw std::invalid_argument("residue_tables_1perfect: modulus must be a positive multiple of 60");
    ResidueTables1 out;
    out.modulus = modulus;
    const long reps = modulus / 60;
    const std::array<std::array<int, 5>, 2> labels = {{{1, 13, 25, 37, 49}, {7, 19, 31, 43, 55}}};
    bool all24 = true;
    for (int t = 0; t < 2; ++t) {
        ResidueTable& tab = out.tables[t];
        tab.base = t == 0 ? 1 : 7;
        tab.classes = labels[t];
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                const int i = labels[t][r], j = labels[t][c];
                bool survives = false;
                for (long u = 0; u < reps && !survives; ++u)
                    for (long v = 0; v < reps && !survives; ++v) {
                        long w = i + 60 * u, s = j + 60 * v;
                        if (w < 3) continue;  // no 1-perfect code has w < 3
                        survives = all_integral(w, pos_mod(s - w, modulus));
                    }
                tab.dash[r][c] = !survives;

                bool prime_ok = three_adic(i, j);
                auto five = five_adic(i, j);
                auto two = two_adic(i, j);
                prime_ok = prime_ok && !five.empty() && !two.empty();
                if (survives) {
                    bool forced24 = !two.empty() && two == std::set<long>{0};
                    if (t == 1) all24 = all24 && forced24;
                    if (five.size() < 25) {
                        Refinement ref;
                        ref.w_class = i;
                        ref.wa_class = j;
                        ref.allowed = five;
                        ref.linear = as_line(five);
                        ref.a_mod24 = forced24;
                        out.refinements.push_back(ref);
                    }
                } else if (prime_ok) {
                    // the dash is not forced by the four expressions: find a witness
                    RigorNote note;
                    note.w_class = i;
                    note.wa_class = j;
                    bool found = false;
                    for (long u = 0; u < 240 && !found; ++u)
                        for (long v = 0; v < 240 && !found; ++v) {
                            long w = i + 60 * u;
                            if (w < 6) continue;
                            long a = pos_mod(j - w, 60) + 60 * v;
                            if (all_integral(w, a)) {
                                note.w = w;
                                note.a = a;
                                found = true;
                            }
                        }
                    note.text = "cell w=" + std::to_string(i) + " w+a=" + std::to_string(j) +
                                " is '-' in the scan modulo " + std::to_string(modulus) +
                                ", but the four expressions are integral at (w,a)=(" +
                                std::to_string(note.w) + "," + std::to_string(note.a) +
                                "); the scan modulus does not see the full 2-adic period";
                    if (found) out.notes.push_back(note);
                }
            }
    }
    out.table2_all_mod24 = all24;
    return out;
}

bool two_perfect_integral(long w, unsigned jmax) {
    for (unsigned j = 2; j <= jmax; ++j)
        for (unsigned leader : {1u, 2u}) {
            const auto& poly = two_perfect_poly(j, leader);
            const __int128 d = poly.denominator;
            __int128 prod = 1;
            for (const auto& f : poly.factors) {
                __int128 acc = 0;
                for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ((acc * w + *it) % d + d) % d;
                prod = prod * acc % d;
            }
            if (prod != 0) return false;
        }
    return true;
}

ResidueClasses2 residue_classes_2perfect() {
    ResidueClasses2 out;
    out.prior = {2, 26, 50};

    auto lcm_den = [](unsigned jmax) {
        long l = 1;
        for (unsigned j = 2; j <= jmax; ++j)
            for (unsigned leader : {1u, 2u}) l = std::lcm(l, two_perfect_poly(j, leader).denominator);
        return l;
    };

    auto stage = [&](long modulus, unsigned jmax, const std::vector<long>& input) {
        ClassStage s;
        s.modulus = modulus;
        s.jmax = jmax;
        s.period = std::lcm(lcm_den(jmax), modulus);
        s.input = input;
        std::set<long> hit;
        for (long r60 : input)
            for (long w = r60; w < s.period; w += 60)
                if (two_perfect_integral(w, jmax)) hit.insert(w % modulus);
        s.survivors.assign(hit.begin(), hit.end());
        return s;
    };

    out.mod60 = stage(60, 5, out.prior);
    out.mod420 = stage(420, 7, out.mod60.survivors);

    std::vector<long> every(60);
    std::iota(every.begin(), every.end(), 0L);
    out.mod60_without_prior = stage(60, 5, every).survivors;

    for (long r : out.prior) {
        if (std::binary_search(out.mod60.survivors.begin(), out.mod60.survivors.end(), r)) continue;
        for (unsigned j = 2; j <= 5; ++j) {
            long period = std::lcm(lcm_den(j), 60L);
            bool alive = false;
            for (long w = r; w < period && !alive; w += 60) alive = two_perfect_integral(w, j);
            if (!alive) {
                out.eliminated_at.push_back({r, j});
                break;
            }
        }
    }
    return out;
}

}  // namespace jsp
