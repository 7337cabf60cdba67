#pragma once

// One checker per proven statement and per conjecture. Every checker is
// hypothesis-gated: parameters outside the statement's hypotheses produce a
// not-applicable record, never a failure.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cglab/detper.hpp"

namespace cglab {

enum class Verdict { pass, fail, inconclusive, not_applicable };
const char* to_string(Verdict v);

using ParamValue = std::variant<i64, std::string>;

struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, ParamValue>> params;
    std::string computed;
    std::string expected;
    Verdict verdict = Verdict::not_applicable;
    double elapsed_ms = 0.0;

    const ParamValue* param(const std::string& key) const;
};

struct VerifyConfig {
    /// Largest permanent order attempted for the C7/C8/C9 permanent parts
    /// (p <= 17 on the full ranges).
    std::size_t per_gate_small = 17;
    /// Same for C5/C6 on 1..p-1 (p <= 13).
    std::size_t per_gate_large = 12;
    RyserOptions ryser{};
    bool record_timing = true;
};

/// D_p(c,d) = det[(i^2 + c i j + d j^2)^(p-2)]_{1<=i,j<=p-1} mod p.
Residue dp_value(u64 p, i64 c, i64 d);

CheckReport check_det_zero_mod_p(i64 p, i64 c, i64 d);
CheckReport check_p3_remark(i64 c, i64 d);
CheckReport check_reflection(i64 p, i64 c, i64 d);

enum class DpVariant { c_minus1, two_two, six_six };
const char* to_string(DpVariant v);
DpVariant parse_dp_variant(const std::string& s);
CheckReport check_dp_theorem(i64 p, DpVariant variant, i64 c = 0);

CheckReport check_column_relation(i64 p, i64 c, i64 d);

enum class Background { half_range_sq, full_range_ij };
const char* to_string(Background b);
Background parse_background(const std::string& s);
CheckReport check_background(i64 p, Background which);

struct ConjectureParams {
    i64 p_or_n = 0;
    i64 c = 0;
    i64 d = 0;
    std::string part;  // empty selects the first part
};

/// Parts of each conjecture, e.g. {"unsigned", "signed"} for C5.
std::vector<std::string> conjecture_parts(int id);
CheckReport check_conjecture(int id, const ConjectureParams& params, const VerifyConfig& config = {});

/// One (check, params) cell of a sweep.
struct CheckRequest {
    std::string family;  // eq15 p3-remark reflection dp-theorem column-relation background conj
    i64 p = 0;
    i64 c = 0;
    i64 d = 0;
    int conj_id = 0;
    std::string variant;  // dp variant, background kind or conjecture part
};

CheckReport run_check(const CheckRequest& req, const VerifyConfig& config = {});

struct SweepSpec {
    std::string family;
    i64 lo = 3;  // primes in [lo, hi]; odd n for conjecture 1
    i64 hi = 0;
    i64 cmin = 0;
    i64 cmax = 0;
    std::optional<std::pair<i64, i64>> d_range;  // conjecture 1 defaults to 1..n-1
    std::vector<std::string> variants;           // empty: all
    int conj_id = 0;
    bool include_not_applicable = false;
};

std::vector<CheckRequest> plan_sweep(const SweepSpec& spec);

/// Evaluates the cells with `jobs` workers and hands reports to `sink` in
/// plan order. Not-applicable records are dropped unless requested.
void sweep(const std::vector<CheckRequest>& cells, const VerifyConfig& config, unsigned jobs,
           bool include_not_applicable, const std::function<void(const CheckReport&)>& sink);

std::vector<CheckReport> sweep(const SweepSpec& spec, const VerifyConfig& config = {}, unsigned jobs = 1);

}  // namespace cglab
