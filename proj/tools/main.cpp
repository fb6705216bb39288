// jsperfect: sieve parameters, reproduce the exclusion tables, verify code files.
// Exit status: 0 ok / verified, 1 refuted, 2 usage, parse or guard error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jsperfect/codefile.hpp"
#include "jsperfect/designs.hpp"
#include "jsperfect/moments.hpp"
#include "jsperfect/pell.hpp"
#include "jsperfect/report.hpp"
#include "jsperfect/residues.hpp"
#include "jsperfect/rules.hpp"
#include "jsperfect/sieve_range.hpp"
#include "jsperfect/twoperfect.hpp"

using namespace jsp;

namespace {

constexpr int kOk = 0, kRefuted = 1, kError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ExactInt big(const std::string& s, const char* what) {
    auto v = parse_int(s);
    if (!v) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
    return *v;
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// ---- sieve

struct SieveArgs {
    std::string e = "1";
    long w_min = 1, w_max = -1, a_min = 0, a_max = -1;
    bool n_eq_2w = false, all = false, full = false;
    std::string rules, format = "tsv", out;
    unsigned threads = 0;
};

int cmd_sieve(const SieveArgs& a) {
    if (a.w_max < 0) throw UsageError("sieve: --w-max is required");
    if (a.n_eq_2w && (a.a_min != 0 || a.a_max >= 0))
        throw UsageError("sieve: --n-eq-2w cannot be combined with --a-min/--a-max");
    SieveRange r;
    r.e = big(a.e, "--e");
    if (r.e < 0) throw UsageError("sieve: --e must be >= 0");
    r.w_min = a.w_min;
    r.w_max = a.w_max;
    r.a_min = a.a_min;
    if (a.a_max >= 0) r.a_max = a.a_max;
    r.n_eq_2w = a.n_eq_2w;
    SieveOptions opt;
    opt.emit_all = a.all;
    opt.threads = a.threads;
    opt.rules.short_circuit = !a.full;
    if (!a.rules.empty()) {
        std::stringstream ss(a.rules);
        for (std::string id; std::getline(ss, id, ',');) {
            if (!is_rule_id(id)) throw UsageError("sieve: unknown rule id '" + id + "'");
            opt.rules.only.insert(id);
        }
    }
    Format fmt;
    try {
        fmt = parse_format(a.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot open " + a.out);
        os = &file;
    }
    ReportWriter writer(*os, fmt);
    auto summary = sieve_range(r, opt, [&](const Report& rep) {
        writer.write(rep);
        if (!*os) throw std::runtime_error("write failed");
    });
    os->flush();
    if (!*os) throw std::runtime_error("write failed");
    std::cerr << "points=" << summary.points << " excluded=" << summary.excluded
              << " unknown=" << summary.unknown << " survives=" << summary.survives
              << " trivial=" << summary.trivial << " next_w=" << summary.next_w << '\n';
    return kOk;
}

// ---- tables

void print_one_perfect(std::ostream& os) {
    auto t = residue_tables_1perfect();
    for (const auto& tab : t.tables) {
        os << "# w = w+a = " << tab.base << " (mod 12); '-' means excluded\n";
        os << "w\\w+a";
        for (int c : tab.classes) os << '\t' << c;
        os << '\n';
        for (int r = 0; r < 5; ++r) {
            os << tab.classes[r];
            for (int c = 0; c < 5; ++c) os << '\t' << (tab.dash[r][c] ? "-" : "");
            os << '\n';
        }
        os << '\n';
    }
    os << "# with w = 60k + i and w+a = 60y + j\n";
    for (const auto& ref : t.refinements) os << "refinement\t" << ref.text() << '\n';
    if (t.table2_all_mod24) os << "# every surviving cell with w = 7 (mod 12) also needs a = 0 (mod 24)\n";
    for (const auto& n : t.notes) os << "# note: " << n.text << '\n';
}

void print_two_perfect(std::ostream& os) {
    auto c = residue_classes_2perfect();
    os << "# prior classes mod 60: " << join(c.prior) << '\n';
    os << "modulus\tj_max\tclasses\n";
    os << c.mod60.modulus << '\t' << c.mod60.jmax << '\t' << join(c.mod60.survivors) << '\n';
    os << c.mod420.modulus << '\t' << c.mod420.jmax << '\t' << join(c.mod420.survivors) << '\n';
    for (auto [r, j] : c.eliminated_at) os << "# " << r << " (mod 60) is eliminated at j = " << j << '\n';
    os << "# without the prior, j <= 5 leaves " << join(c.mod60_without_prior) << " (mod 60)\n";
}

int cmd_tables(const std::string& which, const std::string& limit) {
    if (which == "pell") std::cout << table3_tsv(big(limit, "--n-limit"));
    else if (which == "1perfect-mod60") print_one_perfect(std::cout);
    else if (which == "2perfect-classes") print_two_perfect(std::cout);
    else throw UsageError("tables: unknown table '" + which + "'");
    return kOk;
}

// ---- verify

struct VerifyArgs {
    std::string code, design, doubly;
    long e = -1, t = -1;
    long n = -1, w = -1, n1 = -1, w1 = -1, n2 = -1, w2 = -1;
};

std::optional<unsigned> opt_u(long v) {
    if (v < 0) return std::nullopt;
    return static_cast<unsigned>(v);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(0, "cannot open " + path);
    return in;
}

int report_perfect(const PerfectVerdict& v, const ExactInt& size, const ExactInt& sphere) {
    std::cout << to_string(v.status) << '\n';
    std::cout << "codewords\t" << to_string(size) << '\n';
    std::cout << "sphere\t" << to_string(sphere) << '\n';
    std::cout << "space\t" << to_string(v.space_size) << '\n';
    if (v.min_distance) std::cout << "min_distance\t" << *v.min_distance << '\n';
    if (v.witness) std::cout << "witness\t" << v.witness->str() << "\tcovered\t" << v.cover_count << '\n';
    if (!v.message.empty()) std::cout << "message\t" << v.message << '\n';
    if (v.status == PerfectStatus::refused) return kError;
    return v.status == PerfectStatus::perfect ? kOk : kRefuted;
}

int cmd_verify(const VerifyArgs& a) {
    int given = !a.code.empty() + !a.design.empty() + !a.doubly.empty();
    if (given != 1) throw UsageError("verify: give exactly one of --code, --design, --doubly");
    if (!a.design.empty()) {
        if (a.t < 0) throw UsageError("verify: --design needs --t");
        auto in = open_input(a.design);
        auto d = read_design(in, {opt_u(a.n), opt_u(a.w)});
        auto lam = verify_design(d, static_cast<unsigned>(a.t));
        std::cout << "blocks\t" << d.blocks.size() << '\n';
        std::cout << "strength\t" << code_strength(d) << '\n';
        if (lam) {
            std::cout << "DESIGN\t" << a.t << "-(" << d.n << "," << d.w << "," << to_string(*lam) << ")\n";
            std::cout << "lambda\t" << to_string(*lam) << '\n';
            return kOk;
        }
        std::cout << "NOT_DESIGN\n";
        return kRefuted;
    }
    if (a.e < 0) throw UsageError("verify: --code and --doubly need --e");
    const unsigned e = static_cast<unsigned>(a.e);
    if (!a.code.empty()) {
        auto in = open_input(a.code);
        auto c = read_code(in, {opt_u(a.n), opt_u(a.w)});
        auto v = verify_perfect(c, e);
        return report_perfect(v, c.words.size(), sphere_size(c.n, c.w, e));
    }
    auto in = open_input(a.doubly);
    auto c = read_doubly_code(in, {opt_u(a.n1), opt_u(a.w1), opt_u(a.n2), opt_u(a.w2)});
    auto v = verify_perfect_doubly(c, e);
    return report_perfect(v, c.words.size(), sphere_size_doubly(c.n1, c.w1, c.n2, c.w2, e));
}

// ---- pell

int cmd_pell(const std::string& limit, const std::string& w) {
    auto row = [](const PellConditions& c) {
        auto yes = [](bool b) { return b ? "yes" : "no"; };
        std::string failed;
        for (const auto& f : c.failed()) failed += (failed.empty() ? "" : ",") + f;
        std::cout << to_string(c.w) << '\t' << to_string(c.x) << '\t' << (c.y ? to_string(*c.y) : "-") << '\t'
                  << (c.k ? std::to_string(*c.k) : "-") << '\t' << yes(c.family) << '\t' << yes(c.mod3) << '\t'
                  << (c.c_square ? yes(*c.c_square) : "-") << '\t' << (c.d_square ? yes(*c.d_square) : "-")
                  << '\t' << (failed.empty() ? "none" : failed) << '\t' << yes(c.excluded()) << '\n';
    };
    std::cout << "w\tx\ty\tk\tx=1(4)\tx=1(3)\tc_square\td_square\tfailed\texcluded\n";
    // an excluded w is a result, not an error
    if (!w.empty()) {
        row(pell_conditions(big(w, "--w")));
        return kOk;
    }
    auto scan = exclusion_scan(big(limit, "--n-limit"));
    for (const auto& c : scan.rows) row(c);
    std::cerr << (scan.all_excluded() ? "all Pell candidates excluded" : "some Pell candidate survives")
              << " below n = " << to_string(scan.n_limit) << '\n';
    return kOk;
}

// ---- doubly

struct DoublyArgs {
    std::string w1, n1, w2, n2, e = "1", format = "tsv";
    long catalan = 0;
    long t1 = -1, t2 = -1;
};

int cmd_doubly(const DoublyArgs& a) {
    if (a.catalan > 0) {
        std::cout << "k\tw1\tn1\tw2\tn2\tsphere\tspace\tdivides\tquotient\n";
        for (long k = 1; k <= a.catalan; ++k) {
            auto c = catalan_family(k);
            std::cout << k << '\t' << to_string(c.params.w1) << '\t' << to_string(c.params.n1) << '\t'
                      << to_string(c.params.w2) << '\t' << to_string(c.params.n2) << '\t' << to_string(c.sphere)
                      << '\t' << to_string(c.space) << '\t' << (c.divides ? "yes" : "no") << '\t'
                      << (c.divides ? to_string(c.quotient) : "-") << '\n';
        }
        return kOk;
    }
    if (a.w1.empty() || a.n1.empty() || a.w2.empty() || a.n2.empty())
        throw UsageError("doubly: needs --w1 --n1 --w2 --n2 (or --catalan K)");
    if (a.t1 >= 0 || a.t2 >= 0) {
        if (a.t1 < 0 || a.t2 < 0) throw UsageError("doubly: give both --t1 and --t2");
        DoublySteinerParams p{unsigned(a.t1), unsigned(a.t2), unsigned(to_long(big(a.w1, "--w1"))),
                              unsigned(to_long(big(a.w2, "--w2"))), unsigned(to_long(big(a.n1, "--n1"))),
                              unsigned(to_long(big(a.n2, "--n2")))};
        auto rep = doubly_steiner_check(p);
        std::cout << "size\t" << to_string(rep.size) << '\n';
        std::cout << "n1_bound\t" << rep.bounds.n1_bound << "\tn2_bound\t" << rep.bounds.n2_bound << "\t"
                  << rep.bounds.label << '\n';
        for (const auto& v : rep.verdicts) {
            std::cout << v.rule << '\t' << to_string(v.status);
            for (const auto& f : v.witness) std::cout << '\t' << f.name << '=' << f.value;
            std::cout << '\n';
        }
        return kOk;
    }
    DoublyParams p{big(a.n1, "--n1"), big(a.w1, "--w1"), big(a.n2, "--n2"), big(a.w2, "--w2"), big(a.e, "--e")};
    Report r;
    try {
        r = doubly_checks(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Format fmt;
    try {
        fmt = parse_format(a.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ReportWriter(std::cout, fmt).write(r);
    return kOk;
}

// ---- moments

int cmd_moments(const std::string& ns, const std::string& ws, const std::string& ks, const std::string& es,
                unsigned leader) {
    ExactInt n = big(ns, "--n"), w = big(ws, "--w"), e = big(es, "--e");
    if (w < 1 || n < 2 * w) throw UsageError("moments: needs 1 <= w and n >= 2w (complement first)");
    if (e != 1 && e != 2) throw UsageError("moments: --e must be 1 or 2");
    if (e == 2 && n != 2 * w) throw UsageError("moments: e = 2 moments are for n = 2w only");
    auto st = strength(n, w, e);
    std::cout << "strength\t" << (st.phi ? to_string(*st.phi) : "none") << '\n';
    ExactInt k_lo = 0, k_hi = w;
    if (!ks.empty()) k_lo = k_hi = big(ks, "--k");
    if (k_lo < 0 || k_hi > w) throw UsageError("moments: need 0 <= k <= w");
    if (e == 1) {
        std::cout << "k\tdelta\tA\tB\n";
        for (ExactInt k = k_hi; k >= k_lo; --k) {
            auto m = moments_1perfect_closed(n, w, k);
            std::cout << to_string(k) << '\t' << to_string(m.delta) << '\t' << to_string(m.A) << '\t'
                      << to_string(m.B) << '\n';
        }
    } else {
        if (leader != 1 && leader != 2) throw UsageError("moments: --leader must be 1 or 2");
        std::cout << "k\tdelta\n";
        for (ExactInt k = k_hi; k >= k_lo; --k)
            std::cout << to_string(k) << '\t' << to_string(delta_moment_2perfect(w, k, leader)) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Necessary conditions for perfect codes in the Johnson scheme"};
    app.require_subcommand(1);

    SieveArgs sa;
    auto* sieve = app.add_subcommand("sieve", "Apply the rule catalog over a (w, a) grid, n = 2w + a");
    sieve->add_option("--e", sa.e, "Radius")->required();
    sieve->add_option("--w-min", sa.w_min, "Smallest w")->check(CLI::NonNegativeNumber);
    sieve->add_option("--w-max", sa.w_max, "Largest w")->required()->check(CLI::NonNegativeNumber);
    sieve->add_option("--a-min", sa.a_min, "Smallest a = n - 2w")->check(CLI::NonNegativeNumber);
    sieve->add_option("--a-max", sa.a_max, "Largest a (default w)")->check(CLI::NonNegativeNumber);
    sieve->add_flag("--n-eq-2w", sa.n_eq_2w, "Only n = 2w");
    sieve->add_option("--rules", sa.rules, "Comma-separated rule ids (default all)");
    sieve->add_flag("--all", sa.all, "Emit excluded points too");
    sieve->add_flag("--full", sa.full, "Evaluate every rule instead of stopping at the first failure");
    sieve->add_option("--format", sa.format,
                      "tsv (columns: n w e a conclusion rule status witness note) or jsonl");
    sieve->add_option("--out", sa.out, "Output file (default stdout)");
    sieve->add_option("--threads", sa.threads, "Worker threads (default JS_THREADS or all cores)");

    std::string which, table_limit = "2500000000000000";
    auto* tables = app.add_subcommand("tables", "Reproduce the exclusion tables");
    tables->add_option("--which", which, "1perfect-mod60 | 2perfect-classes | pell")->required();
    tables->add_option("--n-limit", table_limit, "Length bound for the pell table");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a code or design file by enumeration");
    verify->add_option("--code", va.code, "Code file");
    verify->add_option("--design", va.design, "Block design file");
    verify->add_option("--doubly", va.doubly, "Doubly constant-weight code file");
    verify->add_option("--e", va.e, "Radius for --code / --doubly");
    verify->add_option("--t", va.t, "t for --design");
    verify->add_option("--n", va.n, "Length (if the file has no header)");
    verify->add_option("--w", va.w, "Weight (if the file has no header)");
    verify->add_option("--n1", va.n1);
    verify->add_option("--w1", va.w1);
    verify->add_option("--n2", va.n2);
    verify->add_option("--w2", va.w2);

    std::string pell_limit = "2500000000000000", pell_w;
    auto* pell = app.add_subcommand("pell", "Pell-equation conditions for 2-perfect codes in J(2w,w)");
    pell->add_option("--n-limit", pell_limit, "Scan every Pell candidate with 2w below this");
    pell->add_option("--w", pell_w, "Check a single w");

    DoublyArgs da;
    auto* doubly = app.add_subcommand("doubly", "Conditions in doubly constant-weight spaces");
    doubly->add_option("--w1", da.w1);
    doubly->add_option("--n1", da.n1);
    doubly->add_option("--w2", da.w2);
    doubly->add_option("--n2", da.n2);
    doubly->add_option("--e", da.e, "Radius (default 1)");
    doubly->add_option("--t1", da.t1, "Doubly Steiner system check with --t2");
    doubly->add_option("--t2", da.t2);
    doubly->add_option("--catalan", da.catalan, "List the Catalan family for k = 1..K");
    doubly->add_option("--format", da.format, "tsv or jsonl");

    std::string mn, mw, mk, me = "1";
    unsigned leader = 1;
    auto* moments = app.add_subcommand("moments", "Binomial moments of a hypothetical perfect code");
    moments->add_option("--n", mn)->required();
    moments->add_option("--w", mw)->required();
    moments->add_option("--k", mk, "Single k (default all k = w..0)");
    moments->add_option("--e", me, "1, or 2 with n = 2w");
    moments->add_option("--leader", leader, "Translate leader for e = 2 (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (*sieve) return cmd_sieve(sa);
        if (*tables) return cmd_tables(which, table_limit);
        if (*verify) return cmd_verify(va);
        if (*pell) return cmd_pell(pell_limit, pell_w);
        if (*doubly) return cmd_doubly(da);
        if (*moments) return cmd_moments(mn, mw, mk, me, leader);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
