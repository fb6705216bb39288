#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jsperfect/exactmath.hpp"

namespace jsp {

enum class Status { pass, fail, unknown, not_applicable, trivial_family };
const char* to_string(Status s);

struct Field {
    std::string name;
    std::string value;  // exact decimal, rational "p/q", or a short token
};

// One rule outcome. A fail always carries enough witness fields to re-check it.
struct Verdict {
    std::string rule;
    Status status = Status::not_applicable;
    std::vector<Field> witness;
    std::string note;

    Verdict() = default;
    Verdict(std::string r, Status s) : rule(std::move(r)), status(s) {}

    Verdict& with(std::string name, const ExactInt& v) {
        witness.push_back({std::move(name), to_string(v)});
        return *this;
    }
    Verdict& with(std::string name, const ExactRational& v) {
        witness.push_back({std::move(name), to_string(v)});
        return *this;
    }
    Verdict& with(std::string name, long v) { return with(std::move(name), ExactInt(v)); }
    Verdict& with(std::string name, std::string v) {
        witness.push_back({std::move(name), std::move(v)});
        return *this;
    }
    Verdict& with(std::string name, const char* v) { return with(std::move(name), std::string(v)); }
    Verdict& because(std::string why) {
        note = std::move(why);
        return *this;
    }
    const std::string* field(const std::string& name) const {
        for (const auto& f : witness)
            if (f.name == name) return &f.value;
        return nullptr;
    }
};

}  // namespace jsp
