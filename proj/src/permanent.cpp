#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "cglab/detper.hpp"

namespace cglab {

unsigned default_permanent_cap()
{
    const char* env = std::getenv("CONGRUENCE_LAB_MAX_PER_N");
    if (env == nullptr || *env == '\0') return kDefaultPermanentCap;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return kDefaultPermanentCap;
    return static_cast<unsigned>(std::min<long>(v, kHardPermanentLimit));
}

namespace {

// Arithmetic policies shared by the Ryser and naive kernels.
struct ModArith {
    using T = u64;
    const ModCtx* ctx;
    T zero() const { return 0; }
    T one() const { return 1 % ctx->modulus(); }
    void add_to(T& a, const T& b) const { a = ctx->add(a, b); }
    void sub_from(T& a, const T& b) const { a = ctx->sub(a, b); }
    void mul_to(T& a, const T& b) const { a = ctx->mul(a, b); }
    bool is_zero(const T& a) const { return a == 0; }
};

struct BigArith {
    using T = BigInt;
    T zero() const { return 0; }
    T one() const { return 1; }
    void add_to(T& a, const T& b) const { a += b; }
    void sub_from(T& a, const T& b) const { a -= b; }
    void mul_to(T& a, const T& b) const { a *= b; }
    bool is_zero(const T& a) const { return a == 0; }
};

struct I128Arith {
    using T = __int128;
    T zero() const { return 0; }
    T one() const { return 1; }
    void add_to(T& a, const T& b) const { a += b; }
    void sub_from(T& a, const T& b) const { a -= b; }
    void mul_to(T& a, const T& b) const { a *= b; }
    bool is_zero(const T& a) const { return a == 0; }
};

void check_ryser_order(std::size_t n, const RyserOptions& opts)
{
    const unsigned cap = std::min(opts.max_order, kHardPermanentLimit);
    if (n <= cap) return;
    std::ostringstream os;
    const double updates = std::ldexp(static_cast<double>(n), static_cast<int>(n) - 1);
    os << "permanent of order " << n << " exceeds the cap of " << cap << " (about " << updates
       << " row updates); raise CONGRUENCE_LAB_MAX_PER_N to allow it";
    throw OrderTooLarge(os.str());
}

// Signed subset sum over Gray-code indices [begin, end):
//   sum_g (-1)^{|S_g|} prod_i (x_i + sum_{j in S_g} col_j[i]),
// with S_g the set bits of g ^ (g >> 1). The starting row sums are derived
// from the first mask, so disjoint chunks share no state.
template <class Arith>
typename Arith::T gray_chunk(const Arith& ar, const std::vector<typename Arith::T>& x,
                             const std::vector<std::vector<typename Arith::T>>& cols, u64 begin, u64 end)
{
    using T = typename Arith::T;
    const std::size_t n = x.size();
    std::vector<T> sums = x;
    u64 mask = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((mask >> j) & 1) {
            for (std::size_t i = 0; i < n; ++i) ar.add_to(sums[i], cols[j][i]);
        }
    }
    bool odd = (std::popcount(mask) & 1) != 0;
    T pos = ar.zero();
    T neg = ar.zero();
    T prod;
    auto accumulate = [&] {
        prod = ar.one();
        for (std::size_t i = 0; i < n && !ar.is_zero(prod); ++i) ar.mul_to(prod, sums[i]);
        if (odd) {
            ar.add_to(neg, prod);
        } else {
            ar.add_to(pos, prod);
        }
    };
    accumulate();
    for (u64 g = begin + 1; g < end; ++g) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(g));
        const u64 next = g ^ (g >> 1);
        const auto& col = cols[bit];
        if ((next >> bit) & 1) {
            for (std::size_t i = 0; i < n; ++i) ar.add_to(sums[i], col[i]);
        } else {
            for (std::size_t i = 0; i < n; ++i) ar.sub_from(sums[i], col[i]);
        }
        odd = !odd;
        accumulate();
    }
    ar.sub_from(pos, neg);
    return pos;
}

template <class Arith>
typename Arith::T gray_sum(const Arith& ar, const std::vector<typename Arith::T>& x,
                           const std::vector<std::vector<typename Arith::T>>& cols, const RyserOptions& opts)
{
    using T = typename Arith::T;
    const u64 total = u64{1} << cols.size();
    const unsigned threads = std::max(1U, opts.threads);
    std::size_t chunks = opts.chunks != 0 ? opts.chunks : threads;
    chunks = static_cast<std::size_t>(std::min<u64>(chunks, total));

    std::vector<u64> bounds(chunks + 1);
    for (std::size_t c = 0; c <= chunks; ++c) bounds[c] = total / chunks * c + std::min<u64>(c, total % chunks);

    std::vector<T> partial(chunks, ar.zero());
    if (threads == 1 || chunks == 1) {
        for (std::size_t c = 0; c < chunks; ++c) partial[c] = gray_chunk(ar, x, cols, bounds[c], bounds[c + 1]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(threads, chunks);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) {
                    partial[c] = gray_chunk(ar, x, cols, bounds[c], bounds[c + 1]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    T acc = ar.zero();
    for (const auto& p : partial) ar.add_to(acc, p);
    return acc;
}

template <class Arith, class Get>
typename Arith::T naive_sum(const Arith& ar, std::size_t n, Get get, bool with_sign)
{
    using T = typename Arith::T;
    if (n > kNaiveLimit) {
        throw OrderTooLarge("naive engines are limited to order " + std::to_string(kNaiveLimit) + ", got " +
                            std::to_string(n));
    }
    if (n == 0) return ar.one();
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = get(i, j);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::size_t> c(n, 0);
    bool negative = false;
    T pos = ar.zero();
    T neg = ar.zero();
    T prod;
    auto visit = [&] {
        prod = ar.one();
        for (std::size_t i = 0; i < n && !ar.is_zero(prod); ++i) ar.mul_to(prod, a[i][perm[i]]);
        if (with_sign && negative) {
            ar.add_to(neg, prod);
        } else {
            ar.add_to(pos, prod);
        }
    };
    // Heap's algorithm: every step is one transposition, so the sign flips.
    visit();
    std::size_t i = 1;
    while (i < n) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            negative = !negative;
            visit();
            ++c[i];
            i = 1;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    ar.sub_from(pos, neg);
    return pos;
}

BigInt to_big(__int128 v)
{
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(static_cast<u64>(u >> 64)));
    BigInt out = (hi << 64) + BigInt(static_cast<unsigned long>(static_cast<u64>(u)));
    return negative ? BigInt(-out) : out;
}

// True when every partial sum of n! products of entries fits in 125 bits.
bool fits_int128(const Matrix& m)
{
    const std::size_t n = m.order();
    BigInt bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_max = 0;
        for (std::size_t j = 0; j < n; ++j) {
            BigInt v = abs(m.integer(i, j));
            if (!mpz_fits_slong_p(v.get_mpz_t())) return false;
            if (v > row_max) row_max = v;
        }
        bound *= row_max;
    }
    for (std::size_t k = 2; k <= n; ++k) bound *= static_cast<unsigned long>(k);
    return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125;
}

BigInt exact_naive(const Matrix& m, bool with_sign)
{
    const std::size_t n = m.order();
    if (n <= kNaiveLimit && fits_int128(m)) {
        auto get = [&](std::size_t i, std::size_t j) -> __int128 { return m.integer(i, j).get_si(); };
        return to_big(naive_sum(I128Arith{}, n, get, with_sign));
    }
    return naive_sum(BigArith{}, n, [&](std::size_t i, std::size_t j) { return m.integer(i, j); }, with_sign);
}

Residue modular_naive(const Matrix& m, const ModCtx& ctx, bool with_sign)
{
    ModArith ar{&ctx};
    const Matrix r = m.ctx() && *m.ctx() == ctx ? m : m.reduced(ctx);
    auto get = [&](std::size_t i, std::size_t j) { return r.residue(i, j); };
    return {naive_sum(ar, r.order(), get, with_sign), ctx};
}

}  // namespace

Residue per_ryser(const Matrix& m, const ModCtx& ctx, const RyserOptions& opts)
{
    const std::size_t n = m.order();
    check_ryser_order(n, opts);
    if (n == 0) return {1, ctx};
    const Matrix r = m.ctx() && *m.ctx() == ctx ? m : m.reduced(ctx);
    ModArith ar{&ctx};

    // Doubled halved-Ryser: x_i = 2 a(i,n) - sum_j a(i,j), columns 2 a(.,j)
    // for j < n, and per = (-1)^(n-1) 2^(1-n) * gray_sum.
    std::vector<u64> x(n);
    std::vector<std::vector<u64>> cols(n - 1, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i) {
        u64 row = 0;
        for (std::size_t j = 0; j < n; ++j) row = ctx.add(row, r.residue(i, j));
        x[i] = ctx.sub(ctx.add(r.residue(i, n - 1), r.residue(i, n - 1)), row);
        for (std::size_t j = 0; j + 1 < n; ++j) cols[j][i] = ctx.add(r.residue(i, j), r.residue(i, j));
    }
    u64 v = gray_sum(ar, x, cols, opts);
    v = ctx.mul(v, ctx.pow(ctx.inv(2), n - 1));
    if ((n - 1) % 2 == 1) v = ctx.neg(v);
    return {v, ctx};
}

BigInt per_ryser_exact(const Matrix& m, const RyserOptions& opts)
{
    const std::size_t n = m.order();
    check_ryser_order(n, opts);
    if (n == 0) return 1;
    std::vector<BigInt> x(n);
    std::vector<std::vector<BigInt>> cols(n - 1, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < n; ++j) row += m.integer(i, j);
        x[i] = 2 * m.integer(i, n - 1) - row;
        for (std::size_t j = 0; j + 1 < n; ++j) cols[j][i] = 2 * m.integer(i, j);
    }
    BigInt v = gray_sum(BigArith{}, x, cols, opts);
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), BigInt(BigInt(1) << static_cast<mp_bitcnt_t>(n - 1)).get_mpz_t());
    if ((n - 1) % 2 == 1) v = -v;
    return v;
}

BigInt det_naive(const Matrix& m) { return exact_naive(m, true); }
BigInt per_naive(const Matrix& m) { return exact_naive(m, false); }
Residue det_naive(const Matrix& m, const ModCtx& ctx) { return modular_naive(m, ctx, true); }
Residue per_naive(const Matrix& m, const ModCtx& ctx) { return modular_naive(m, ctx, false); }

}  // namespace cglab
