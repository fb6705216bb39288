#include "jsperfect/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace jsp {

Format parse_format(const std::string& s) {
    if (s == "tsv") return Format::tsv;
    if (s == "jsonl") return Format::jsonl;
    throw std::invalid_argument("unknown format '" + s + "' (tsv or jsonl)");
}

namespace {

std::string clean(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

void write_tsv_header(std::ostream& os, const Report& first) {
    for (const auto& p : first.params) os << p.name << '\t';
    os << "conclusion\trule\tstatus\twitness\tnote\n";
}

void write_tsv(std::ostream& os, const Report& r) {
    std::string prefix;
    for (const auto& p : r.params) prefix += p.value + '\t';
    prefix += to_string(r.conclusion);
    for (const auto& v : r.verdicts) {
        std::string wit;
        for (const auto& f : v.witness) wit += (wit.empty() ? "" : ";") + f.name + "=" + f.value;
        os << prefix << '\t' << v.rule << '\t' << to_string(v.status) << '\t' << clean(wit) << '\t'
           << clean(v.note) << '\n';
    }
}

std::string to_json_line(const Report& r) {
    nlohmann::ordered_json j;
    auto& params = j["params"] = nlohmann::ordered_json::object();
    for (const auto& p : r.params) params[p.name] = p.value;
    j["complemented"] = r.complemented;
    if (r.trivial_tag) j["trivial"] = *r.trivial_tag;
    auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json o;
        o["rule"] = v.rule;
        o["status"] = to_string(v.status);
        auto& wit = o["witness"] = nlohmann::ordered_json::object();
        for (const auto& f : v.witness) wit[f.name] = f.value;
        if (!v.note.empty()) o["note"] = v.note;
        vs.push_back(std::move(o));
    }
    j["conclusion"] = to_string(r.conclusion);
    return j.dump();
}

void ReportWriter::write(const Report& r) {
    if (format_ == Format::tsv) {
        if (count_ == 0) write_tsv_header(os_, r);
        write_tsv(os_, r);
    } else {
        os_ << to_json_line(r) << '\n';
    }
    ++count_;
}

}  // namespace jsp
