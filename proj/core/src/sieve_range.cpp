#include "jsperfect/sieve_range.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace jsp {

unsigned default_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("JS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
    }
    return hw;
}

namespace {

struct Chunk {
    std::vector<Report> reports;
    SieveSummary counts;
    bool ready = false;
};

void tally(SieveSummary& s, Conclusion c) {
    ++s.points;
    switch (c) {
        case Conclusion::excluded: ++s.excluded; break;
        case Conclusion::unknown: ++s.unknown; break;
        case Conclusion::survives: ++s.survives; break;
        case Conclusion::trivial: ++s.trivial; break;
    }
}

Chunk run_chunk(const SieveRange& r, const SieveOptions& opt, long w_lo, long w_hi) {
    Chunk ch;
    for (long w = w_lo; w <= w_hi; ++w) {
        long a_hi = r.n_eq_2w ? 0 : r.a_max.value_or(w);
        long a_lo = r.n_eq_2w ? 0 : r.a_min;
        for (long a = a_lo; a <= a_hi; ++a) {
            JohnsonParams p{ExactInt(2 * w + a), ExactInt(w), r.e};
            Report rep = run_rules(p, opt.rules);
            tally(ch.counts, rep.conclusion);
            if (opt.emit_all || rep.conclusion != Conclusion::excluded) ch.reports.push_back(std::move(rep));
        }
    }
    ch.ready = true;
    return ch;
}

}  // namespace

SieveSummary sieve_range(const SieveRange& range, const SieveOptions& opt, const SieveSink& sink) {
    if (range.w_min < 0 || range.w_max < range.w_min - 1 || range.a_min < 0)
        throw std::invalid_argument("sieve_range: bad range");
    if (range.e < 0) throw std::invalid_argument("sieve_range: e must be >= 0");
    const long step = std::max(1L, opt.chunk_w);
    const long nchunks = range.w_max < range.w_min ? 0 : (range.w_max - range.w_min) / step + 1;
    unsigned threads = opt.threads ? opt.threads : default_threads();
    threads = static_cast<unsigned>(std::min<long>(threads, std::max(1L, nchunks)));

    SieveSummary total;
    total.next_w = range.w_min;
    auto bounds = [&](long idx) {
        long lo = range.w_min + idx * step;
        return std::pair<long, long>{lo, std::min(range.w_max, lo + step - 1)};
    };
    auto absorb = [&](Chunk& ch, long idx) {
        for (const auto& rep : ch.reports) sink(rep);
        total.points += ch.counts.points;
        total.excluded += ch.counts.excluded;
        total.unknown += ch.counts.unknown;
        total.survives += ch.counts.survives;
        total.trivial += ch.counts.trivial;
        total.next_w = bounds(idx).second + 1;
    };

    if (threads <= 1) {
        for (long idx = 0; idx < nchunks; ++idx) {
            auto [lo, hi] = bounds(idx);
            Chunk ch = run_chunk(range, opt, lo, hi);
            absorb(ch, idx);
        }
        return total;
    }

    // workers may run at most `window` chunks ahead of the sink
    const long window = 4L * threads;
    std::mutex m;
    std::condition_variable cv;
    std::deque<Chunk> pending;  // pending[i] is chunk base + i
    long base = 0, next = 0;
    bool stop = false;
    std::exception_ptr worker_error;

    auto worker = [&] {
        for (;;) {
            long idx;
            {
                std::unique_lock lk(m);
                cv.wait(lk, [&] { return stop || next >= nchunks || next < base + window; });
                if (stop || next >= nchunks) return;
                idx = next++;
                while (static_cast<long>(pending.size()) <= idx - base) pending.emplace_back();
            }
            auto [lo, hi] = bounds(idx);
            Chunk ch;
            try {
                ch = run_chunk(range, opt, lo, hi);
            } catch (...) {
                std::lock_guard lk(m);
                if (!worker_error) worker_error = std::current_exception();
                stop = true;
                cv.notify_all();
                return;
            }
            std::lock_guard lk(m);
            pending[idx - base] = std::move(ch);
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

    std::exception_ptr sink_error;
    for (long idx = 0; idx < nchunks; ++idx) {
        Chunk ch;
        {
            std::unique_lock lk(m);
            cv.wait(lk, [&] { return stop || (!pending.empty() && pending.front().ready); });
            if (stop) break;
            ch = std::move(pending.front());
            pending.pop_front();
            ++base;
            cv.notify_all();
        }
        try {
            absorb(ch, idx);
        } catch (...) {
            sink_error = std::current_exception();
            std::lock_guard lk(m);
            stop = true;
            cv.notify_all();
            break;
        }
    }
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);
    if (sink_error) std::rethrow_exception(sink_error);
    return total;
}

}  // namespace jsp
