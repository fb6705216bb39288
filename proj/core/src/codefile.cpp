#include "jsperfect/codefile.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace jsp {

FileError::FileError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

unsigned parse_index(const std::string& tok, std::size_t line) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw FileError(line, "not a non-negative integer: '" + tok + "'");
    return v;
}

bool parse_header(const std::vector<std::string>& toks, std::size_t line, RawFile& f) {
    if (toks.empty() || toks[0].find('=') == std::string::npos) return false;
    for (const auto& t : toks) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw FileError(line, "header field without '=': '" + t + "'");
        std::string key = t.substr(0, eq);
        unsigned v = parse_index(t.substr(eq + 1), line);
        std::optional<unsigned>* slot = key == "n"    ? &f.n
                                        : key == "w"  ? &f.w
                                        : key == "n1" ? &f.n1
                                        : key == "w1" ? &f.w1
                                        : key == "n2" ? &f.n2
                                        : key == "w2" ? &f.w2
                                                      : nullptr;
        if (!slot) throw FileError(line, "unknown header field '" + key + "'");
        if (slot->has_value()) throw FileError(line, "header field '" + key + "' repeated");
        *slot = v;
    }
    bool plain = f.n || f.w, doubly = f.n1 || f.w1 || f.n2 || f.w2;
    if (plain && doubly) throw FileError(line, "header mixes n/w with n1/w1/n2/w2");
    if (plain && !(f.n && f.w)) throw FileError(line, "header needs both n= and w=");
    if (doubly && !(f.n1 && f.w1 && f.n2 && f.w2))
        throw FileError(line, "header needs n1=, w1=, n2= and w2=");
    return true;
}

void check_rows(const RawFile& f, unsigned n, unsigned w) {
    std::set<std::vector<unsigned>> seen;
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        const auto& row = f.rows[r];
        if (row.size() != w)
            throw FileError(f.lines[r], "expected " + std::to_string(w) + " indices, found " +
                                            std::to_string(row.size()));
        std::vector<unsigned> s = row;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw FileError(f.lines[r], "repeated index");
        if (!s.empty() && s.back() >= n)
            throw FileError(f.lines[r], "index " + std::to_string(s.back()) + " outside 0.." +
                                            std::to_string(n - 1));
        if (!seen.insert(s).second) throw FileError(f.lines[r], "duplicate word");
    }
}

std::pair<unsigned, unsigned> resolve(const RawFile& f, const SpaceHint& hint) {
    if (f.doubly_header()) throw FileError(0, "file has a doubly header; expected n= w=");
    auto pick = [&](const std::optional<unsigned>& file, const std::optional<unsigned>& flag,
                    const char* name) -> std::optional<unsigned> {
        if (file && flag && *file != *flag)
            throw FileError(0, std::string("header ") + name + "=" + std::to_string(*file) +
                                   " disagrees with the given " + name + "=" + std::to_string(*flag));
        return file ? file : flag;
    };
    auto n = pick(f.n, hint.n, "n");
    auto w = pick(f.w, hint.w, "w");
    if (!w) {
        if (f.rows.empty()) throw FileError(0, "no words and no weight given");
        w = static_cast<unsigned>(f.rows.front().size());
    }
    if (!n) {
        unsigned mx = 0;
        bool any = false;
        for (const auto& row : f.rows)
            for (unsigned v : row) {
                mx = std::max(mx, v);
                any = true;
            }
        if (!any) throw FileError(0, "cannot infer n from an empty file");
        n = mx + 1;
    }
    if (*w > *n) throw FileError(0, "w exceeds n");
    return {*n, *w};
}

}  // namespace

RawFile read_raw(std::istream& in) {
    RawFile f;
    std::string text;
    std::size_t line = 0;
    bool header_allowed = true;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        auto first = text.find_first_not_of(" \t");
        if (first == std::string::npos || text[first] == '#') continue;
        std::istringstream ss(text);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) toks.push_back(t);
        if (header_allowed && parse_header(toks, line, f)) {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        std::vector<unsigned> row;
        for (const auto& t : toks) {
            if (t.find('=') != std::string::npos) throw FileError(line, "header after the first word");
            row.push_back(parse_index(t, line));
        }
        f.lines.push_back(line);
        f.rows.push_back(std::move(row));
    }
    if (in.bad()) throw FileError(line, "read error");
    return f;
}

Code read_code(std::istream& in, const SpaceHint& hint) {
    RawFile f = read_raw(in);
    auto [n, w] = resolve(f, hint);
    check_rows(f, n, w);
    std::vector<Word> words;
    for (const auto& row : f.rows) words.emplace_back(n, row);
    return make_code(n, w, std::move(words));
}

BlockDesign read_design(std::istream& in, const SpaceHint& hint) {
    RawFile f = read_raw(in);
    auto [n, w] = resolve(f, hint);
    check_rows(f, n, w);
    std::vector<Word> blocks;
    for (const auto& row : f.rows) blocks.emplace_back(n, row);
    BlockDesign d = make_design(n, std::move(blocks));
    d.w = w;
    return d;
}

DoublyCode read_doubly_code(std::istream& in, const DoublyHint& hint) {
    RawFile f = read_raw(in);
    if (f.n || f.w) throw FileError(0, "file has an n= w= header; expected n1= w1= n2= w2=");
    DoublyHint h = hint;
    if (f.doubly_header()) {
        auto agree = [](const std::optional<unsigned>& a, const std::optional<unsigned>& b, const char* name) {
            if (b && *a != *b) throw FileError(0, std::string("header ") + name + " disagrees with the given value");
        };
        agree(f.n1, hint.n1, "n1");
        agree(f.w1, hint.w1, "w1");
        agree(f.n2, hint.n2, "n2");
        agree(f.w2, hint.w2, "w2");
        h = {f.n1, f.w1, f.n2, f.w2};
    }
    if (!(h.n1 && h.w1 && h.n2 && h.w2)) throw FileError(0, "doubly space needs n1, w1, n2 and w2");
    const unsigned n = *h.n1 + *h.n2;
    check_rows(f, n, *h.w1 + *h.w2);
    std::vector<Word> words;
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        const auto& row = f.rows[r];
        unsigned first = static_cast<unsigned>(std::count_if(row.begin(), row.end(), [&](unsigned v) { return v < *h.n1; }));
        if (first != *h.w1)
            throw FileError(f.lines[r], "expected " + std::to_string(*h.w1) + " indices below " +
                                            std::to_string(*h.n1) + ", found " + std::to_string(first));
        words.emplace_back(n, row);
    }
    return make_doubly_code(*h.n1, *h.w1, *h.n2, *h.w2, std::move(words));
}

}  // namespace jsp
