#include "cglab/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cglab {

namespace {

// Term value at 1-based indices (j, k), evaluated directly from the formula.
u64 term_value(EntryKind kind, i64 j, i64 k, const ModCtx& ctx)
{
    i64 num = 1;
    i64 den = 1;
    switch (kind) {
    case EntryKind::inv_diff: den = j - k; break;
    case EntryKind::ratio_sum_diff:
        num = j + k;
        den = j - k;
        break;
    case EntryKind::inv_diff_squares: den = j * j - k * k; break;
    case EntryKind::ratio_sum_squares:
        num = j * j + k * k;
        den = j * j - k * k;
        break;
    case EntryKind::prime_indicator: return is_prime(static_cast<u64>(j + k)) ? 1 : 0;
    case EntryKind::quad_form_pow: throw Error("the oracle does not evaluate quadratic-form terms");
    }
    const u64 d = ctx.reduce(den);
    if (!ctx.is_unit(d)) throw NonUnitDenominator(j, k, ctx.modulus());
    return ctx.mul(ctx.reduce(num), ctx.inv(d));
}

bool odd_inversions(const std::vector<std::size_t>& perm)
{
    bool odd = false;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) odd = !odd;
        }
    }
    return odd;
}

}  // namespace

OracleSum permutation_sum(const OracleSpec& spec)
{
    const std::size_t n = spec.n;
    if (n > kNaiveLimit) {
        throw OrderTooLarge("oracle enumeration is limited to n <= " + std::to_string(kNaiveLimit));
    }
    const ModCtx& ctx = spec.ctx;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});

    u64 acc = 0;
    std::uint64_t visited = 0;
    std::uint64_t in_domain = 0;
    do {
        ++visited;
        bool has_fixed = false;
        for (std::size_t idx = 0; idx < n; ++idx) has_fixed = has_fixed || perm[idx] == idx + 1;
        if (spec.domain == PermDomain::derangements && has_fixed) continue;
        ++in_domain;

        u64 prod = 1 % ctx.modulus();
        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto j = static_cast<i64>(idx + 1);
            const auto k = static_cast<i64>(perm[idx]);
            if (j == k && spec.rule == ProductRule::skip_fixed_points) continue;
            prod = ctx.mul(prod, term_value(spec.term, j, k, ctx));
        }
        if (spec.signed_sum && odd_inversions(perm)) prod = ctx.neg(prod);
        acc = ctx.add(acc, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return {Residue(acc, ctx), visited, in_domain};
}

ReductionOutcome reduction_compare(const OracleSpec& spec)
{
    DiagonalPolicy diag;
    if (spec.domain == PermDomain::derangements) {
        diag = DiagonalPolicy::zero;
    } else if (spec.rule == ProductRule::skip_fixed_points) {
        diag = DiagonalPolicy::one;
    } else {
        throw Error("no diagonal policy corresponds to products over all positions of all permutations");
    }
    const Matrix m = cauchy_type_matrix(spec.term, spec.n, diag, spec.ctx);
    const Quantity q = spec.signed_sum ? Quantity::det : Quantity::per;
    Residue engine = q == Quantity::det ? det_mod(m, spec.ctx) : per_ryser(m, spec.ctx);
    Residue oracle = permutation_sum(spec).value;
    const bool agree = engine == oracle;
    return {oracle, engine, q, agree};
}

bool reduction_check(const OracleSpec& spec) { return reduction_compare(spec).agree; }

}  // namespace cglab
