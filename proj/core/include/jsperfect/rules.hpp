#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jsperfect/exactmath.hpp"
#include "jsperfect/verdict.hpp"

namespace jsp {

struct JohnsonParams {
    ExactInt n, w, e;
};

struct DoublyParams {
    ExactInt n1, w1, n2, w2, e;
};

enum class Conclusion { excluded, unknown, survives, trivial };
const char* to_string(Conclusion c);

struct Report {
    std::vector<Field> params;     // in print order
    bool complemented = false;     // w was replaced by n - w first
    std::optional<std::string> trivial_tag;
    std::vector<Verdict> verdicts;
    Conclusion conclusion = Conclusion::survives;

    std::vector<std::string> failed_rules() const;
};

// Perfect-code families that exist for every parameter in them.
std::optional<std::string> classify_trivial(const JohnsonParams& p);
std::optional<std::string> classify_trivial(const DoublyParams& p);

// Rule ids in the fixed evaluation order used by range sieves.
const std::vector<std::string>& rule_ids();
bool is_rule_id(const std::string& id);

struct RuleOptions {
    std::set<std::string> only;   // empty: every rule
    bool short_circuit = false;   // stop at the first failing rule
    FactorBudget budget{};
};

// Evaluates every applicable rule (or stops at the first fail). Points with
// n < 2w are complemented first. Trivial families skip the rules.
Report run_rules(const JohnsonParams& p, const RuleOptions& opt = {});

// Sphere divisibility, both length bounds and the four weight inequalities.
Report doubly_checks(const DoublyParams& p);

// w1 = w2 = 2k, n1 = 4k+1, n2 = 4k+2; throws unless k >= 1.
struct CatalanPoint {
    DoublyParams params;
    ExactInt sphere;      // (2k+1)(4k+1)
    ExactInt space;       // C(4k+1,2k) C(4k+2,2k)
    ExactInt quotient;    // space / sphere when it divides
    bool divides = false;
};
CatalanPoint catalan_family(const ExactInt& k);

// lambda of the strength-(w-d) divisibility condition for 1-perfect codes
ExactRational t38_lambda(const ExactInt& w, const ExactInt& d);

}  // namespace jsp
