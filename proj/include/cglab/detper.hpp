#pragma once

#include <cstddef>

#include "cglab/matrix.hpp"

namespace cglab {

/// Orders above this are refused regardless of configuration.
inline constexpr unsigned kHardPermanentLimit = 32;
inline constexpr unsigned kDefaultPermanentCap = 28;
inline constexpr unsigned kNaiveLimit = 9;

/// Permanent cap: CONGRUENCE_LAB_MAX_PER_N if set (clamped to the hard
/// limit), else the default of 28.
unsigned default_permanent_cap();

struct RyserOptions {
    unsigned max_order = default_permanent_cap();
    /// Number of contiguous Gray-code chunks; 0 picks one per thread.
    std::size_t chunks = 0;
    unsigned threads = 1;
};

/// Gaussian elimination over a prime field. The matrix must carry a prime ctx.
Residue det_field(const Matrix& m);

/// Fraction-free Bareiss elimination on the exact (lifted) entries.
BigInt det_exact(const Matrix& m);
Residue det_exact(const Matrix& m, const ModCtx& reduce_ctx);

/// det over Z/m: field elimination for a prime ctx, lifted Bareiss otherwise.
Residue det_mod(const Matrix& m, const ModCtx& ctx);

/// Ryser's formula in Gray-code order over 2^(n-1) subsets (the halved
/// variant, valid because every supported modulus is odd).
Residue per_ryser(const Matrix& m, const ModCtx& ctx, const RyserOptions& opts = {});
BigInt per_ryser_exact(const Matrix& m, const RyserOptions& opts = {});

/// Direct sums over all n! permutations (Heap's algorithm), n <= 9.
BigInt det_naive(const Matrix& m);
BigInt per_naive(const Matrix& m);
Residue det_naive(const Matrix& m, const ModCtx& ctx);
Residue per_naive(const Matrix& m, const ModCtx& ctx);

enum class Quantity { det, per };
const char* to_string(Quantity q);

/// The two half-size blocks of a checkerboard-supported matrix, 0-based.
/// Even order 2m: first = [a(2i,2j-1)], second = [a(2i-1,2j)].
/// Odd order 2m+1: first = [a(2i,2j+1)], second = [a(2i+1,2j)], plus a(1,1).
struct CheckerboardBlocks {
    Matrix first;
    Matrix second;
    std::size_t half;
    bool odd;
};

/// Throws SupportViolation listing the offending cells.
CheckerboardBlocks checkerboard_blocks(const Matrix& m);
bool has_checkerboard_support(const Matrix& m);

BigInt factor_checkerboard(const Matrix& m, Quantity q);
Residue factor_checkerboard(const Matrix& m, Quantity q, const ModCtx& ctx);

/// Floor square root by Newton iteration; x >= 0.
BigInt isqrt(const BigInt& x);
bool is_perfect_square(const BigInt& x);

}  // namespace cglab
