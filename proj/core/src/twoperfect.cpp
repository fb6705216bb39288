#include "jsperfect/twoperfect.hpp"

#include <map>
#include <stdexcept>

namespace jsp {

std::vector<ExactRational> two_perfect_moments(const ExactInt& w, unsigned jmax, unsigned leader) {
    if (leader != 1 && leader != 2) throw std::invalid_argument("leader must be 1 or 2");
    std::vector<ExactRational> S;
    S.push_back(1);
    if (jmax >= 1) S.push_back(ExactRational(leader == 1 ? w - 1 : w));
    for (unsigned jj = 2; jj <= jmax; ++jj) {
        ExactInt j = jj;
        ExactInt F = 20 + (j - 3) * j * (10 + (j - 3) * j) - 14 * w - 4 * (j - 3) * j * w + 2 * w * w;
        ExactInt G = 2 * (j - 1) * (j - 1) * (4 + (j - 2) * j - 2 * w);
        ExactRational num = ExactRational(F) * S[jj - 2] + ExactRational(G) * S[jj - 1];
        ExactRational v = -num / ExactRational((j - 1) * (j - 1) * j * j);
        v.canonicalize();
        S.push_back(v);
    }
    return S;
}

ExactRational delta_moment_2perfect(const ExactInt& w, const ExactInt& k, unsigned leader) {
    ExactInt j = w - k;
    if (j < 0) return 0;
    return two_perfect_moments(w, static_cast<unsigned>(to_long(j)), leader).back();
}

namespace {

using Poly = std::vector<long>;

std::map<std::pair<unsigned, unsigned>, ClosedFormPoly> build_polys() {
    const Poly m1{-1, 1}, m2{-2, 1}, m3{-3, 1}, m5{-5, 1}, p1{1, 1};
    std::map<std::pair<unsigned, unsigned>, ClosedFormPoly> t;
    t[{2, 1}] = {{m1, m2}, 2};
    t[{2, 2}] = {{p1, m2}, 2};
    t[{3, 1}] = {{m1, m2, m3}, 6};
    t[{3, 2}] = {{m2, {-14, -5, 3}}, 18};
    t[{4, 1}] = {{m1, m2, m5, {-14, 5}}, 144};
    t[{4, 2}] = {{m2, m5, {-26, -7, 5}}, 144};
    t[{5, 1}] = {{m1, m2, m5, {334, -171, 17}}, 3600};
    t[{5, 2}] = {{m2, m5, {680, 66, -147, 17}}, 3600};
    t[{6, 1}] = {{m1, m2, m5, {-5684, 3544, -589, 29}}, 64800};
    t[{6, 2}] = {{m2, m5, {-12228, 228, 2663, -548, 29}}, 64800};
    t[{7, 1}] = {{m1, m2, m5, {262324, -185444, 39797, -3376, 99}}, 3175200};
    t[{7, 2}] = {{m2, m5, {585224, -59628, -123650, 34855, -3236, 99}}, 3175200};
    return t;
}

const std::map<std::pair<unsigned, unsigned>, ClosedFormPoly>& polys() {
    static const auto t = build_polys();
    return t;
}

ExactInt eval(const Poly& p, const ExactInt& w) {
    ExactInt v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * w + *it;
    return v;
}

}  // namespace

const ClosedFormPoly& two_perfect_poly(unsigned j, unsigned leader) {
    auto it = polys().find({j, leader});
    if (it == polys().end()) throw std::out_of_range("closed forms exist for j = 2..7, leader 1 or 2");
    return it->second;
}

std::optional<ExactRational> two_perfect_closed_form(const ExactInt& w, unsigned j, unsigned leader,
                                                     PrintedOrCorrected which) {
    auto it = polys().find({j, leader});
    if (it == polys().end()) return std::nullopt;
    ClosedFormPoly f = it->second;
    if (which == PrintedOrCorrected::printed && j == 5 && leader == 1) f.factors.back() = {334, -171, 7};
    ExactInt num = 1;
    for (const auto& p : f.factors) num *= eval(p, w);
    return make_rational(num, f.denominator);
}

ExactRational two_perfect_relation_residual(const ExactInt& w, const ExactInt& k,
                                            const ExactRational& m_k, const ExactRational& m_km1,
                                            const ExactRational& m_km2) {
    ExactInt k2 = k * k, k3 = k2 * k, k4 = k3 * k;
    ExactInt w2 = w * w, w3 = w2 * w, w4 = w3 * w;
    ExactInt c0 = 4 + k4 + 5 * w2 - 2 * w3 + w4 - 2 * k3 * (1 + 2 * w) + k2 * (7 + 2 * w + 6 * w2) -
                  2 * k * (3 + 5 * w - w2 + 2 * w3);
    ExactInt d1 = (1 - k + w) * (1 - k + w);
    ExactInt c1 = d1 * (4 + k2 + w2 - 2 * k * (1 + w));
    ExactInt c2 = d1 * (2 - k + w) * (2 - k + w);
    ExactRational r = make_rational(c0, 4) * m_k + make_rational(c1, 2) * m_km1 + make_rational(c2, 4) * m_km2;
    r.canonicalize();
    return r;
}

}  // namespace jsp
