#pragma once

// Exact arithmetic over Z/m for odd moduli m < 2^63, plus the scalar
// number-theoretic helpers (Legendre/Jacobi symbols, double factorials,
// valuations) used by the rest of the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cglab/errors.hpp"

namespace cglab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using BigInt = mpz_class;

enum class ModKind { prime, prime_power, odd_composite };

const char* to_string(ModKind kind);

/// Immutable modulus context. All residues handled under a context are kept
/// in canonical form [0, modulus).
class ModCtx {
public:
    static ModCtx prime(u64 p);
    /// p^k with p an odd prime and 1 <= k <= 5. k == 1 yields a prime context.
    static ModCtx prime_power(u64 p, unsigned k);
    static ModCtx odd_composite(u64 n);
    /// Classifies an arbitrary odd modulus >= 3.
    static ModCtx classify(u64 m);

    u64 modulus() const noexcept { return m_; }
    ModKind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == ModKind::prime; }
    /// Prime base for prime and prime-power contexts, 0 otherwise.
    u64 base() const noexcept { return base_; }
    unsigned exponent() const noexcept { return exponent_; }

    u64 reduce(i64 x) const noexcept;
    u64 reduce_u(u64 x) const noexcept { return x % m_; }
    u64 reduce(const BigInt& x) const;

    u64 add(u64 a, u64 b) const noexcept
    {
        u64 s = a + b;
        return s >= m_ ? s - m_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (m_ - b); }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : m_ - a; }
    u64 mul(u64 a, u64 b) const noexcept
    {
        if (small_) return (a * b) % m_;
        return static_cast<u64>((static_cast<u128>(a) * b) % m_);
    }
    u64 pow(u64 a, u64 e) const noexcept;
    /// Inverse by extended gcd; throws NonUnitError when gcd(a, m) != 1.
    u64 inv(u64 a) const;
    bool is_unit(u64 a) const noexcept;

    /// Symmetric representative in (-m/2, m/2], handy for reporting.
    i64 signed_rep(u64 a) const noexcept;

    std::string describe() const;

    friend bool operator==(const ModCtx& a, const ModCtx& b) noexcept { return a.m_ == b.m_; }

private:
    ModCtx(u64 m, ModKind kind, u64 base, unsigned exponent);

    u64 m_;
    ModKind kind_;
    u64 base_;
    unsigned exponent_;
    bool small_;  // m < 2^32, products fit in 64 bits
};

/// A residue tagged with its context.
class Residue {
public:
    Residue(u64 value, const ModCtx& ctx) : v_(ctx.reduce_u(value)), ctx_(ctx) {}
    static Residue from_signed(i64 value, const ModCtx& ctx) { return {ctx.reduce(value), ctx}; }

    u64 value() const noexcept { return v_; }
    const ModCtx& ctx() const noexcept { return ctx_; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const { return {ctx_.neg(v_), ctx_}; }

    friend bool operator==(const Residue& a, const Residue& b) noexcept
    {
        return a.v_ == b.v_ && a.ctx_ == b.ctx_;
    }

private:
    void check_same(const Residue& o) const;

    u64 v_;
    ModCtx ctx_;
};

Residue inv(const Residue& a);
Residue pow_mod(const Residue& a, u64 e);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) noexcept;
/// Sieve of Eratosthenes, primes in [lo, hi].
std::vector<u64> primes_in(u64 lo, u64 hi);

u64 gcd(u64 a, u64 b) noexcept;

/// Legendre symbol by Euler's criterion. Rejects even or composite p.
int legendre(i64 a, u64 p);
int legendre(const BigInt& a, u64 p);

/// Jacobi symbol by the reciprocity loop; never factors n. Rejects even n.
int jacobi(i64 a, u64 n);

/// n!! reduced in ctx; 0!! = 1.
Residue double_factorial_mod(u64 n, const ModCtx& ctx);

/// sum_{i=1}^{p-1} (1/i)^2 mod p.
Residue harmonic2_mod(u64 p);

struct Valuation {
    enum class Status { exact, inconclusive };
    Status status = Status::inconclusive;
    unsigned v = 0;          // meaningful when exact; equals cap when inconclusive
    u64 unit_mod_p = 0;      // (x / p^v) mod p when exact

    bool conclusive() const noexcept { return status == Status::exact; }
};

/// Largest v < cap with p^v | x, reading x only modulo p^cap.
/// If x == 0 (mod p^cap) the result is inconclusive.
Valuation padic_valuation(const BigInt& x, u64 p, unsigned cap);

/// p^k as an unsigned 64-bit value, throwing on overflow.
u64 checked_pow(u64 p, unsigned k);

std::string to_string(const BigInt& x);

}  // namespace cglab
