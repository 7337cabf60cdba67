#include <cstdlib>
#include <string>

#include "cglab/detper.hpp"
#include "cglab/matgen.hpp"

namespace cglab {

Residue det_field(const Matrix& m)
{
    if (!m.ctx() || !m.ctx()->is_prime()) throw InvalidModulus("det_field needs a matrix over a prime modulus");
    const ModCtx& ctx = *m.ctx();
    const std::size_t n = m.order();
    std::vector<u64> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.residue(i, j);
    }

    u64 det = 1 % ctx.modulus();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return {0, ctx};
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            det = ctx.neg(det);
        }
        const u64 pivot = a[col * n + col];
        det = ctx.mul(det, pivot);
        const u64 pinv = ctx.inv(pivot);
        const u64* prow = &a[col * n];
        for (std::size_t r = col + 1; r < n; ++r) {
            u64* row = &a[r * n];
            if (row[col] == 0) continue;
            // row -= f * prow with Shoup multiplication: f fixed across the row
            const u64 f = ctx.neg(ctx.mul(row[col], pinv));
            const u64 mod = ctx.modulus();
            const auto f_shoup = static_cast<u64>((static_cast<u128>(f) << 64) / mod);
            for (std::size_t j = col + 1; j < n; ++j) {
                const auto q = static_cast<u64>((static_cast<u128>(f_shoup) * prow[j]) >> 64);
                u64 prod = f * prow[j] - q * mod;
                if (prod >= mod) prod -= mod;
                row[j] = ctx.add(row[j], prod);
            }
            row[col] = 0;
        }
    }
    return {det, ctx};
}

BigInt det_exact(const Matrix& m)
{
    const std::size_t n = m.order();
    if (n == 0) return 1;
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.integer(i, j);
    }

    int sign = 1;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv * n + k] == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            sign = -sign;
        }
        const mpz_srcptr akk = a[k * n + k].get_mpz_t();
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_srcptr aik = a[i * n + k].get_mpz_t();
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr aij = a[i * n + j].get_mpz_t();
                mpz_mul(tmp.get_mpz_t(), aij, akk);
                mpz_submul(tmp.get_mpz_t(), aik, a[k * n + j].get_mpz_t());
                mpz_divexact(aij, tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k * n + k];
    }
    BigInt det = a[n * n - 1];
    if (sign < 0) det = -det;
    return det;
}

Residue det_exact(const Matrix& m, const ModCtx& reduce_ctx)
{
    return {reduce_ctx.reduce(det_exact(m)), reduce_ctx};
}

Residue det_mod(const Matrix& m, const ModCtx& ctx)
{
    if (ctx.is_prime()) {
        if (m.ctx() && *m.ctx() == ctx) return det_field(m);
        return det_field(m.reduced(ctx));
    }
    if (m.ctx() && !(*m.ctx() == ctx)) return det_exact(m.reduced(ctx), ctx);
    return det_exact(m, ctx);
}

BigInt isqrt(const BigInt& x)
{
    if (x < 0) throw Error("isqrt of a negative number");
    if (x < 2) return x;
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    BigInt r;
    mpz_setbit(r.get_mpz_t(), (bits + 1) / 2);  // r >= sqrt(x)
    while (true) {
        BigInt y = (r + x / r) / 2;
        if (y >= r) return r;
        r = y;
    }
}

bool is_perfect_square(const BigInt& x)
{
    if (x < 0) return false;
    BigInt r = isqrt(x);
    return r * r == x;
}

const char* to_string(Quantity q) { return q == Quantity::det ? "det" : "per"; }

bool has_checkerboard_support(const Matrix& m) { return checkerboard_violations(m).empty(); }

CheckerboardBlocks checkerboard_blocks(const Matrix& m)
{
    auto bad = checkerboard_violations(m);
    if (!bad.empty()) throw SupportViolation(std::move(bad));
    const std::size_t n = m.order();
    const bool odd = n % 2 == 1;
    const std::size_t half = n / 2;
    std::vector<std::size_t> r1, c1, r2, c2;
    for (std::size_t i = 0; i < half; ++i) {
        if (odd) {
            // 1-based rows 2i / cols 2j+1 and rows 2i+1 / cols 2j
            r1.push_back(2 * i + 1);
            c1.push_back(2 * i + 2);
            r2.push_back(2 * i + 2);
            c2.push_back(2 * i + 1);
        } else {
            // 1-based rows 2i / cols 2j-1 and rows 2i-1 / cols 2j
            r1.push_back(2 * i + 1);
            c1.push_back(2 * i);
            r2.push_back(2 * i);
            c2.push_back(2 * i + 1);
        }
    }
    return {m.submatrix(r1, c1), m.submatrix(r2, c2), half, odd};
}

BigInt factor_checkerboard(const Matrix& m, Quantity q)
{
    auto blocks = checkerboard_blocks(m);
    BigInt v;
    if (q == Quantity::per) {
        v = per_ryser_exact(blocks.first) * per_ryser_exact(blocks.second);
    } else {
        v = det_exact(blocks.first) * det_exact(blocks.second);
        if (blocks.half % 2 == 1) v = -v;
    }
    if (blocks.odd) v *= m.integer(0, 0);
    return v;
}

Residue factor_checkerboard(const Matrix& m, Quantity q, const ModCtx& ctx)
{
    auto blocks = checkerboard_blocks(m);
    u64 v;
    if (q == Quantity::per) {
        v = ctx.mul(per_ryser(blocks.first, ctx).value(), per_ryser(blocks.second, ctx).value());
    } else {
        v = ctx.mul(det_mod(blocks.first, ctx).value(), det_mod(blocks.second, ctx).value());
        if (blocks.half % 2 == 1) v = ctx.neg(v);
    }
    if (blocks.odd) {
        const u64 a11 = m.ctx() ? ctx.reduce_u(m.residue(0, 0)) : ctx.reduce(m.integer(0, 0));
        v = ctx.mul(v, a11);
    }
    return {v, ctx};
}

}  // namespace cglab
