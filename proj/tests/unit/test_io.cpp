#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "jsperfect/codefile.hpp"
#include "jsperfect/report.hpp"
#include "jsperfect/sieve_range.hpp"

using namespace jsp;

namespace {

std::size_t error_line(const std::string& text, const SpaceHint& h = {}) {
    std::istringstream in(text);
    try {
        read_code(in, h);
    } catch (const FileError& e) {
        return e.line();
    }
    return 9999;
}

}  // namespace

TEST_SUITE("codefile") {

TEST_CASE("plain and headed files") {
    std::istringstream a("# pair\n0 1 2\n\n3 4 5\n");
    auto c = read_code(a);
    CHECK(c.n == 6);
    CHECK(c.w == 3);
    CHECK(c.words.size() == 2);

    std::istringstream b("n=8 w=3\n0 1 2\n");
    auto d = read_code(b);
    CHECK(d.n == 8);

    std::istringstream h("0 1\n");
    CHECK(read_code(h, SpaceHint{5, 2}).n == 5);
}

TEST_CASE("malformed files name the line") {
    CHECK(error_line("0 1 2\n3 4\n") == 2);
    CHECK(error_line("0 1 2\n3 3 5\n") == 2);
    CHECK(error_line("n=6 w=3\n0 1 2\n3 4 9\n") == 3);
    CHECK(error_line("0 1 2\n0 1 2\n") == 2);
    CHECK(error_line("0 1 x\n") == 1);
    CHECK(error_line("n=6 w=3\n0 1 2\n", SpaceHint{7, 3}) != 9999);
    std::istringstream in("0 1\n2\n");
    try {
        read_code(in);
        FAIL("accepted a short row");
    } catch (const FileError& e) {
        CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
    }
}

TEST_CASE("designs and doubly files") {
    std::istringstream f("0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n");
    auto d = read_design(f);
    CHECK(d.n == 7);
    CHECK(d.blocks.size() == 7);

    std::istringstream g("n1=2 w1=1 n2=4 w2=2\n0 2 3\n1 4 5\n");
    auto c = read_doubly_code(g);
    CHECK(c.n1 == 2);
    CHECK(c.w2 == 2);
    CHECK(c.words.size() == 2);

    std::istringstream bad("n1=2 w1=1 n2=4 w2=2\n0 1 3\n");
    CHECK_THROWS_AS(read_doubly_code(bad), FileError);
    std::istringstream none("0 2 3\n");
    CHECK_THROWS_AS(read_doubly_code(none), FileError);
}

}

TEST_SUITE("report") {

TEST_CASE("tsv rows") {
    auto r = run_rules(JohnsonParams{14, 7, 1}, RuleOptions{{"SP.divides"}, false, {}});
    std::ostringstream os;
    ReportWriter wr(os, Format::tsv);
    wr.write(r);
    wr.write(r);
    std::istringstream in(os.str());
    std::string head, row;
    std::getline(in, head);
    CHECK(head == "n\tw\te\ta\tconclusion\trule\tstatus\twitness\tnote");
    std::getline(in, row);
    CHECK(row.rfind("14\t7\t1\t0\texcluded\tSP.divides\tfail\tsphere=50;", 0) == 0);
    int rows = 1;
    while (std::getline(in, row)) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("json lines keep numbers as strings") {
    auto r = run_rules(JohnsonParams{14, 7, 1});
    auto j = nlohmann::json::parse(to_json_line(r));
    CHECK(j["params"]["n"] == "14");
    CHECK(j["conclusion"] == "excluded");
    CHECK(j["verdicts"].is_array());
    for (const auto& v : j["verdicts"]) {
        CHECK(v["rule"].is_string());
        for (auto it = v["witness"].begin(); it != v["witness"].end(); ++it) CHECK(it.value().is_string());
    }
    CHECK(to_json_line(r).find('\n') == std::string::npos);
    CHECK(parse_format("jsonl") == Format::jsonl);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

}

TEST_SUITE("sieve") {

TEST_CASE("order and counts do not depend on threads") {
    SieveRange rg;
    rg.e = 1;
    rg.w_min = 1;
    rg.w_max = 120;
    std::string ref;
    SieveSummary first;
    for (unsigned th : {1u, 2u, 4u}) {
        SieveOptions o;
        o.emit_all = true;
        o.threads = th;
        o.chunk_w = 7;
        std::string out;
        auto s = sieve_range(rg, o, [&](const Report& r) { out += to_json_line(r) + "\n"; });
        if (ref.empty()) {
            ref = out;
            first = s;
        }
        CHECK(out == ref);
        CHECK(s.points == first.points);
        CHECK(s.excluded == first.excluded);
    }
    long pts = 0;
    for (long w = 1; w <= 120; ++w) pts += w + 1;
    CHECK(first.points == pts);
    CHECK(first.points == first.excluded + first.unknown + first.survives + first.trivial);
    CHECK(first.next_w == 121);
}

TEST_CASE("sieve matches pointwise evaluation") {
    SieveRange rg;
    rg.e = 1;
    rg.w_min = 3;
    rg.w_max = 60;
    SieveOptions o;
    o.emit_all = true;
    o.threads = 2;
    std::vector<Report> got;
    sieve_range(rg, o, [&](const Report& r) { got.push_back(r); });
    size_t idx = 0;
    for (long w = 3; w <= 60; ++w)
        for (long a = 0; a <= w; ++a) {
            auto r = run_rules(JohnsonParams{2 * w + a, w, 1}, RuleOptions{{}, true, {}});
            REQUIRE(idx < got.size());
            CHECK(to_json_line(got[idx++]) == to_json_line(r));
        }
}

TEST_CASE("empty ranges and sink errors") {
    SieveRange rg;
    rg.w_min = 1;
    rg.w_max = 0;
    long calls = 0;
    auto s = sieve_range(rg, SieveOptions{}, [&](const Report&) { ++calls; });
    CHECK(s.points == 0);
    CHECK(calls == 0);

    rg.w_max = 50;
    SieveOptions o;
    o.emit_all = true;
    o.threads = 2;
    CHECK_THROWS_AS(sieve_range(rg, o, [](const Report&) { throw std::runtime_error("full"); }), std::runtime_error);
}

TEST_CASE("e=2 at n=2w") {
    SieveRange rg;
    rg.e = 2;
    rg.w_min = 1;
    rg.w_max = 3000;
    rg.n_eq_2w = true;
    SieveOptions o;
    o.threads = 2;
    long emitted = 0;
    auto s = sieve_range(rg, o, [&](const Report& r) {
        if (r.conclusion != Conclusion::trivial) ++emitted;
    });
    CHECK(s.points == 3000);
    CHECK(s.survives == 0);
    CHECK(s.unknown == 0);
    CHECK(emitted == 0);
}

}
