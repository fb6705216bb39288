#pragma once

#include <functional>
#include <optional>

#include "jsperfect/rules.hpp"

namespace jsp {

// Grid of (w, a) with n = 2w + a, visited in lexicographic order.
struct SieveRange {
    ExactInt e = 1;
    long w_min = 1, w_max = 1;
    long a_min = 0;
    std::optional<long> a_max;  // default: a <= w
    bool n_eq_2w = false;       // only a = 0
};

struct SieveOptions {
    RuleOptions rules{{}, true, {}};  // short-circuit by default
    bool emit_all = false;            // otherwise only points that are not excluded
    unsigned threads = 0;             // 0: JS_THREADS, else hardware concurrency
    long chunk_w = 16;                // w values per work item
};

struct SieveSummary {
    long points = 0, excluded = 0, unknown = 0, survives = 0, trivial = 0;
    long next_w = 0;  // first w not processed; pass as w_min to resume
};

using SieveSink = std::function<void(const Report&)>;

// Reports arrive at the sink in canonical order whatever the thread count.
// An exception thrown by the sink stops the sieve and is rethrown.
SieveSummary sieve_range(const SieveRange& range, const SieveOptions& opt, const SieveSink& sink);

unsigned default_threads();

}  // namespace jsp
