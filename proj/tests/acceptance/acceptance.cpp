// End-to-end acceptance checks. Usage: acceptance [--cli PATH] [N ...]
// Prints one "criterion N: PASS|FAIL ..." line per criterion and exits
// non-zero if any of the selected criteria failed.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jsperfect/designs.hpp"
#include "jsperfect/johnson.hpp"
#include "jsperfect/moments.hpp"
#include "jsperfect/pell.hpp"
#include "jsperfect/residues.hpp"
#include "jsperfect/rules.hpp"
#include "jsperfect/sieve_range.hpp"

using namespace jsp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double limit_s = 0;  // 0: no time limit
};

std::string cli_path;

std::string run_cli(const std::string& args) {
    std::string cmd = "\"" + cli_path + "\" " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {};
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    pclose(p);
    return out;
}

const ExactInt kLimit("2500000000000000");

// rows as printed, "." where the table leaves the cell open
const char* const kTable3[11][5] = {
    {"0", "1", "9", "1", "2"},
    {"1", "49", "281", "41", "22"},
    {"2", "1633", "9513", "1393", "."},
    {"3", "55441", "323129", "47321", "."},
    {"4", "1883329", "10976841", "1607521", "."},
    {"5", "63977713", "372889433", ".", "."},
    {"6", "2173358881", "12667263849", ".", "."},
    {"7", "73830224209", "430314081401", ".", "."},
    {"8", "2508054264193", "14618011503753", ".", "1070379110498"},
    {"9", "85200014758321", "496582077046169", ".", "36361380737782"},
    {"10", "2894292447518689", "16869172608065961", ".", "1235216565974042"},
};

Outcome table3() {
    Outcome o{true, "", 1.0};
    std::string text = cli_path.empty() ? table3_tsv(kLimit) : run_cli("tables --which pell");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, '\t')) cells.push_back(c);
        rows.push_back(cells);
    }
    if (rows.size() != 11) {
        o.pass = false;
        o.detail = "expected 11 rows, got " + std::to_string(rows.size());
        return o;
    }
    int compared = 0;
    for (int t = 0; t < 11; ++t)
        for (int c = 0; c < 5; ++c) {
            if (std::string(kTable3[t][c]) == ".") continue;
            ++compared;
            if (rows[t].size() != 5 || rows[t][c] != kTable3[t][c]) {
                o.pass = false;
                o.detail += " t=" + std::to_string(t) + " col " + std::to_string(c) + " mismatch;";
            }
        }
    if (o.pass) o.detail = std::to_string(compared) + " printed cells equal, rows t=0..10";
    return o;
}

Outcome pell_exclusion() {
    Outcome o{true, "", 1.0};
    auto s = exclusion_scan(kLimit);
    o.pass = s.all_excluded() && !s.rows.empty();
    long fam = 0;
    for (const auto& r : s.rows)
        if (r.family) ++fam;
    o.detail = std::to_string(s.rows.size()) + " Pell rows below the limit, " + std::to_string(fam) +
               " in the x=1 (mod 4) family, " + (o.pass ? "all excluded" : "some row survives");
    return o;
}

// the printed tables, rows w and columns w+a, true for '-'
const bool kTable1[5][5] = {
    {0, 0, 1, 0, 1}, {0, 0, 1, 1, 1}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {1, 1, 0, 1, 1}};
const bool kTable2[5][5] = {
    {1, 1, 0, 1, 0}, {1, 1, 1, 1, 0}, {0, 1, 0, 0, 0}, {1, 1, 0, 0, 1}, {0, 0, 0, 1, 1}};

struct PrintedBullet {
    int wc, wac;
    int a, b, c;  // a*k + b*y = c (mod 5)
    bool mod24;
    const char* text;
};
const PrintedBullet kBullets[9] = {
    {13, 13, 1, 1, 3, false, "k+y=3"},
    {25, 1, 0, 1, 0, false, "y=0"},
    {25, 37, 2, -1, 2, false, "2k-y=2"},
    {37, 25, 4, -3, 4, false, "4k-3y=4"},
    {7, 55, 4, -3, 0, true, "4k-3y=0, a=0 (24)"},
    {31, 55, 1, 0, 2, true, "k=2, a=0 (24)"},
    {43, 43, 1, 1, 2, true, "k+y=2, a=0 (24)"},
    {55, 7, 2, -1, 0, true, "2k-y=0, a=0 (24)"},
    {55, 31, 0, 1, 2, true, "y=2, a=0 (24)"},
};

std::vector<int> bullet_set(const PrintedBullet& b) {
    std::vector<int> s;
    for (int k = 0; k < 5; ++k)
        for (int y = 0; y < 5; ++y)
            if (((b.a * k + b.b * y - b.c) % 5 + 5) % 5 == 0) s.push_back(k * 5 + y);
    return s;
}

Outcome residue_tables() {
    Outcome o{true, "", 60.0};
    auto t = residue_tables_1perfect();
    int dash_bad = 0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            if (t.tables[0].dash[r][c] != kTable1[r][c]) ++dash_bad;
            if (t.tables[1].dash[r][c] != kTable2[r][c]) ++dash_bad;
        }
    if (dash_bad) o.pass = false;
    o.detail = "dash patterns " + std::string(dash_bad ? "differ in " + std::to_string(dash_bad) + " cells" : "match");

    int matched = 0;
    std::string bad;
    for (const auto& b : kBullets) {
        const Refinement* got = nullptr;
        for (const auto& r : t.refinements)
            if (r.w_class == b.wc && r.wa_class == b.wac) got = &r;
        if (!got) {
            bad += " (" + std::to_string(b.wc) + "," + std::to_string(b.wac) + ") missing;";
            continue;
        }
        if (got->allowed == bullet_set(b) && got->a_mod24 == b.mod24) {
            ++matched;
        } else {
            bad += " (" + std::to_string(b.wc) + "," + std::to_string(b.wac) + ") printed " + b.text +
                   ", derived " + got->text() + ";";
        }
    }
    if (t.refinements.size() != 9) bad += " derived " + std::to_string(t.refinements.size()) + " refinements;";
    if (matched != 9 || t.refinements.size() != 9) o.pass = false;
    o.detail += "; refinements " + std::to_string(matched) + "/9 match" + bad;
    return o;
}

Outcome residue_classes() {
    Outcome o{true, "", 60.0};
    auto c = residue_classes_2perfect();
    std::set<long> m60(c.mod60.survivors.begin(), c.mod60.survivors.end());
    std::set<long> m420(c.mod420.survivors.begin(), c.mod420.survivors.end());
    o.pass = m60 == std::set<long>{2, 50} && m420 == std::set<long>{2, 302, 362, 50, 110, 170};
    auto list = [](const std::set<long>& s) {
        std::string r;
        for (long v : s) r += (r.empty() ? "" : ",") + std::to_string(v);
        return "{" + r + "}";
    };
    o.detail = "mod 60 " + list(m60) + ", mod 420 " + list(m420);
    return o;
}

Outcome oracle_suite() {
    Outcome o{true, "", 1.0};
    std::string d;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) o.pass = false;
        d += (d.empty() ? "" : ", ") + what + (ok ? " ok" : " FAILED");
    };
    auto pair = make_code(6, 3, {Word(6, {0, 1, 2}), Word(6, {3, 4, 5})});
    check(verify_perfect(pair, 1).status == PerfectStatus::perfect, "J(6,3) pair");
    auto single = make_code(5, 2, {Word(5, {0, 1})});
    check(verify_perfect(single, 2).status == PerfectStatus::perfect, "J(5,2) single word");
    auto dbl = make_doubly_code(2, 1, 4, 2, {Word(6, {0, 2, 3}), Word(6, {1, 4, 5})});
    check(verify_perfect_doubly(dbl, 1).status == PerfectStatus::perfect, "doubly (1,2,2,4)");

    std::vector<Word> blocks;
    for (auto s : {"013", "124", "235", "346", "450", "561", "602"}) {
        std::vector<unsigned> v;
        for (const char* p = s; *p; ++p) v.push_back(static_cast<unsigned>(*p - '0'));
        blocks.emplace_back(7, v);
    }
    auto fano = make_design(7, blocks);
    auto lam = verify_design(fano, 2);
    check(lam && *lam == 1, "2-(7,3,1)");
    check(code_strength(fano) == 2, "strength 2");
    unsigned mind = 99;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) mind = std::min(mind, h_distance(blocks[i], blocks[j]));
    check(mind == 4, "min H-distance 4");
    check(ExactInt(static_cast<unsigned long>(blocks.size())) * binom(5, 1) == binom(7, 3), "7*C(5,1)=C(7,3)");
    o.detail = d;
    return o;
}

Outcome cross_validation() {
    Outcome o{true, "", 60.0};
    long points = 0, checks = 0;
    std::string first_bad;
    for (long n = 2; n <= 60; ++n)
        for (long w = 1; 2 * w <= n; ++w) {
            auto s = strength(n, w, 1);
            if (!s.phi) continue;
            ++points;
            long phi = to_long(*s.phi);
            auto rec = moments_1perfect_recurrence(n, w);
            for (long k = phi + 1; k <= w; ++k) {
                auto c = moments_1perfect_closed(n, w, k);
                bool ok = c.delta == rec[k].delta && c.A == rec[k].A && c.B == rec[k].B &&
                          c.delta == delta_moment_stepped(n, w, k) &&
                          delta_relation_residual(n, w, k, c.delta, moments_1perfect_closed(n, w, k - 1).delta) == 0;
                ++checks;
                if (!ok && first_bad.empty())
                    first_bad = " first disagreement at n=" + std::to_string(n) + " w=" + std::to_string(w) +
                                " k=" + std::to_string(k);
            }
        }
    o.pass = first_bad.empty() && points > 0;
    o.detail = std::to_string(points) + " (n,w) points with integral strength, " + std::to_string(checks) +
               " moment comparisons" + (first_bad.empty() ? ", all equal" : first_bad);
    return o;
}

Outcome sieve_consequences() {
    Outcome o{true, "", 300.0};
    long gate_bad = 0;
    for (long w = 7; w <= 100000; w += 6)
        if (is_integer(t38_lambda(w, 3))) ++gate_bad;

    SieveRange rg;
    rg.e = 1;
    rg.w_min = 1;
    rg.w_max = 5000;
    SieveOptions opt;
    long open = 0, bad_ratio = 0, bad_roos = 0;
    auto sum = sieve_range(rg, opt, [&](const Report& r) {
        if (r.conclusion == Conclusion::excluded || r.conclusion == Conclusion::trivial) return;
        ++open;  // survivors and unknowns both count as open
        long n = std::stol(r.params[0].value), w = std::stol(r.params[1].value), a = n - 2 * w;
        if (11 * a >= w) ++bad_ratio;
        if (n > 3 * (w - 1)) ++bad_roos;
    });
    o.pass = gate_bad == 0 && bad_ratio == 0 && bad_roos == 0;
    o.detail = "lambda gate integral at " + std::to_string(gate_bad) + " of the w=1 (mod 6) values; sieve " +
               std::to_string(sum.points) + " points, " + std::to_string(sum.excluded) + " excluded, " +
               std::to_string(sum.trivial) + " trivial, " + std::to_string(open) + " open (" +
               std::to_string(bad_ratio) + " with a>=w/11, " + std::to_string(bad_roos) + " beyond n<=3(w-1))";
    return o;
}

Outcome catalan() {
    Outcome o{true, "", 10.0};
    long bad = 0;
    for (long k = 1; k <= 1000; ++k) {
        auto p = catalan_family(k);
        ExactInt direct = binom(4 * k + 1, 2 * k) * binom(4 * k + 2, 2 * k);
        if (!p.divides || direct % ((2 * k + 1) * (4 * k + 1)) != 0) ++bad;
    }
    o.pass = bad == 0;
    o.detail = "k=1..1000, " + std::to_string(bad) + " failures";
    return o;
}

Outcome anticodes() {
    Outcome o{true, "", 60.0};
    long points = 0, mismatched = 0, enumerated = 0, size_bad = 0;
    for (long n = 4; n <= 60; ++n)
        for (long w = 3; w < n; ++w)
            for (long t = 2; t < w; ++t) {
                ++points;
                ExactInt fixed = binom(n - t, w - t);
                ExactInt inter = binom(n - t - 2, w - t - 2) + (t + 2) * binom(n - t - 2, w - t - 1);
                if ((inter <= fixed) != (n >= (t + 1) * (w - t + 1))) ++mismatched;
                if (fixed > 5000 || inter > 5000) continue;
                auto a = anticode_ball(n, w, t, AnticodeFlavor::fixed_subset, 5000, 200000);
                auto b = anticode_ball(n, w, t, AnticodeFlavor::s_intersecting, 5000, 200000);
                ++enumerated;
                if (ExactInt(static_cast<unsigned long>(a.words.size())) != fixed ||
                    ExactInt(static_cast<unsigned long>(b.words.size())) != inter)
                    ++size_bad;
                if ((a.diameter_checked && a.diameter > w - t) || (b.diameter_checked && b.diameter > w - t))
                    ++size_bad;
            }
    o.pass = mismatched == 0 && size_bad == 0;
    o.detail = std::to_string(points) + " (n,w,t) points, " + std::to_string(mismatched) +
               " equivalence failures; " + std::to_string(enumerated) + " enumerated, " +
               std::to_string(size_bad) + " size or diameter mismatches";
    return o;
}

Outcome typo_regression() {
    Outcome o{true, "", 0};
    auto pair = make_code(6, 3, {Word(6, {0, 1, 2}), Word(6, {3, 4, 5})});
    auto cd = configuration_distribution(pair, 3);
    auto s = config_recurrence_solve(6, 3, 3, 3, 1, 0);
    bool corrected = s.consistent;
    for (long i = 0; i <= 3; ++i) corrected = corrected && s.at(i) == ExactRational(cd.A[i]);
    auto printed = recurrence_residual(6, 3, 3, 3, 0, ExactRational(cd.A[3]), ExactRational(cd.A[2]),
                                       RecurrenceForm::printed);
    o.pass = corrected && printed != 0;
    o.detail = std::string("corrected coefficient ") + (corrected ? "reproduces" : "does not reproduce") +
               " A=(1,0,0,1); printed i(k-1) leaves residual " + to_string(printed) + " at (3,3,3,0)";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) cli_path = argv[++i];
        else which.push_back(std::stoi(a));
    }
    if (which.empty())
        for (int i = 1; i <= 10; ++i) which.push_back(i);

    const std::map<int, std::function<Outcome()>> crit = {
        {1, table3},           {2, pell_exclusion},     {3, residue_tables}, {4, residue_classes},
        {5, oracle_suite},     {6, cross_validation},   {7, sieve_consequences},
        {8, catalan},          {9, anticodes},          {10, typo_regression},
    };
    int failed = 0;
    for (int n : which) {
        auto it = crit.find(n);
        if (it == crit.end()) {
            std::cerr << "no criterion " << n << "\n";
            return 2;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = it->second();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.limit_s > 0 && secs > o.limit_s) {
            o.pass = false;
            o.detail += "; over the time limit";
        }
        char tbuf[32];
        std::snprintf(tbuf, sizeof tbuf, "%.2fs", secs);
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " [" << tbuf << "] " << o.detail
                  << std::endl;
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
