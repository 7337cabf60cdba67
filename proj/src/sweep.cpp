#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "cglab/verify.hpp"

namespace cglab {

namespace {

CheckReport dispatch(const CheckRequest& req, const VerifyConfig& config)
{
    const std::string& f = req.family;
    if (f == "eq15") return check_det_zero_mod_p(req.p, req.c, req.d);
    if (f == "p3-remark") return check_p3_remark(req.c, req.d);
    if (f == "reflection") return check_reflection(req.p, req.c, req.d);
    if (f == "dp-theorem") return check_dp_theorem(req.p, parse_dp_variant(req.variant), req.c);
    if (f == "column-relation") return check_column_relation(req.p, req.c, req.d);
    if (f == "background") return check_background(req.p, parse_background(req.variant));
    if (f == "conj") return check_conjecture(req.conj_id, {req.p, req.c, req.d, req.variant}, config);
    throw Error("unknown check family '" + f + "'");
}

std::vector<i64> odd_primes(i64 lo, i64 hi)
{
    std::vector<i64> out;
    if (hi < 3) return out;
    for (u64 p : primes_in(static_cast<u64>(std::max<i64>(lo, 3)), static_cast<u64>(hi))) {
        out.push_back(static_cast<i64>(p));
    }
    return out;
}

std::vector<std::string> variants_or(const SweepSpec& spec, std::vector<std::string> all)
{
    return spec.variants.empty() ? all : spec.variants;
}

}  // namespace

CheckReport run_check(const CheckRequest& req, const VerifyConfig& config)
{
    CheckReport r;
    try {
        r = dispatch(req, config);
    } catch (const OrderTooLarge& e) {
        r.check_id = req.family == "conj" ? "conj" + std::to_string(req.conj_id) : req.family;
        r.params = {{"p", req.p}, {"c", req.c}, {"d", req.d}, {"reason", std::string(e.what())}};
        r.computed = "-";
        r.expected = "-";
        r.verdict = Verdict::inconclusive;
    }
    if (!config.record_timing) r.elapsed_ms = 0.0;
    return r;
}

std::vector<CheckRequest> plan_sweep(const SweepSpec& spec)
{
    std::vector<CheckRequest> cells;
    const std::string& f = spec.family;
    auto d_lo = spec.d_range ? spec.d_range->first : 0;
    auto d_hi = spec.d_range ? spec.d_range->second : 0;

    if (f == "p3-remark") {
        for (i64 c = spec.cmin; c <= spec.cmax; ++c) {
            for (i64 d = d_lo; d <= d_hi; ++d) cells.push_back({f, 3, c, d, 0, ""});
        }
        return cells;
    }
    if (f == "eq15" || f == "reflection" || f == "column-relation") {
        for (i64 p : odd_primes(spec.lo, spec.hi)) {
            for (i64 c = spec.cmin; c <= spec.cmax; ++c) {
                for (i64 d = d_lo; d <= d_hi; ++d) cells.push_back({f, p, c, d, 0, ""});
            }
        }
        return cells;
    }
    if (f == "dp-theorem") {
        const auto variants = variants_or(spec, {"c_minus1", "two_two", "six_six"});
        for (i64 p : odd_primes(spec.lo, spec.hi)) {
            for (const auto& v : variants) {
                if (parse_dp_variant(v) == DpVariant::c_minus1) {
                    for (i64 c = spec.cmin; c <= spec.cmax; ++c) cells.push_back({f, p, c, -1, 0, v});
                } else {
                    cells.push_back({f, p, 0, 0, 0, v});
                }
            }
        }
        return cells;
    }
    if (f == "background") {
        const auto variants = variants_or(spec, {"half_range_sq", "full_range_ij"});
        for (i64 p : odd_primes(spec.lo, spec.hi)) {
            for (const auto& v : variants) cells.push_back({f, p, 0, 0, 0, v});
        }
        return cells;
    }
    if (f == "conj") {
        const auto parts = variants_or(spec, conjecture_parts(spec.conj_id));
        if (spec.conj_id == 1) {
            for (i64 n = std::max<i64>(spec.lo, 1) | 1; n <= spec.hi; n += 2) {
                const i64 lo = spec.d_range ? d_lo : 1;
                const i64 hi = spec.d_range ? d_hi : n - 1;
                for (i64 c = spec.cmin; c <= spec.cmax; ++c) {
                    for (i64 d = lo; d <= hi; ++d) cells.push_back({f, n, c, d, 1, parts.front()});
                }
            }
            return cells;
        }
        for (i64 p : odd_primes(spec.lo, spec.hi)) {
            for (const auto& part : parts) cells.push_back({f, p, 0, 0, spec.conj_id, part});
        }
        return cells;
    }
    throw Error("unknown check family '" + f + "'");
}

void sweep(const std::vector<CheckRequest>& cells, const VerifyConfig& config, unsigned jobs,
           bool include_not_applicable, const std::function<void(const CheckReport&)>& sink)
{
    auto emit = [&](const CheckReport& r) {
        if (include_not_applicable || r.verdict != Verdict::not_applicable) sink(r);
    };
    if (jobs <= 1 || cells.size() <= 1) {
        for (const auto& cell : cells) emit(run_check(cell, config));
        return;
    }

    // Workers claim cells in plan order; the caller emits them in the same
    // order as soon as each prefix is complete.
    std::vector<std::optional<CheckReport>> done(cells.size());
    std::exception_ptr failure;
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            std::optional<CheckReport> r;
            std::exception_ptr err;
            try {
                r = run_check(cells[i], config);
            } catch (...) {
                err = std::current_exception();
            }
            std::lock_guard lock(mu);
            if (err && !failure) failure = err;
            done[i] = std::move(r);
            if (!done[i]) done[i] = CheckReport{};  // placeholder so the emitter can advance
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(cells.size()));
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done[i].has_value(); });
        if (failure) break;
        CheckReport r = std::move(*done[i]);
        lock.unlock();
        emit(r);
    }
    // stop remaining work early on failure
    next.store(cells.size());
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<CheckReport> sweep(const SweepSpec& spec, const VerifyConfig& config, unsigned jobs)
{
    std::vector<CheckReport> out;
    sweep(plan_sweep(spec), config, jobs, spec.include_not_applicable,
          [&](const CheckReport& r) { out.push_back(r); });
    return out;
}

}  // namespace cglab
