#pragma once

#include <ostream>
#include <string>

#include "jsperfect/rules.hpp"

namespace jsp {

enum class Format { tsv, jsonl };
// "tsv" or "jsonl"; throws std::invalid_argument otherwise
Format parse_format(const std::string& s);

// TSV: the report's parameter columns, then conclusion, rule, status, witness, note.
// One row per verdict; witness is "name=value" pairs joined by ';'.
void write_tsv_header(std::ostream& os, const Report& first);
void write_tsv(std::ostream& os, const Report& r);

// One JSON object per line. All numbers are decimal strings so nothing is rounded.
std::string to_json_line(const Report& r);

// Writes one report, emitting the TSV header before the first one.
class ReportWriter {
public:
    ReportWriter(std::ostream& os, Format f) : os_(os), format_(f) {}
    void write(const Report& r);
    long count() const { return count_; }

private:
    std::ostream& os_;
    Format format_;
    long count_ = 0;
};

}  // namespace jsp
